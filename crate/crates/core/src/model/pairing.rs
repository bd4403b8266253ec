use std::fmt;

use crate::error::PairingError;

/// A non-crossing perfect matching of the points `0..2n`.
///
/// Stored as a partner array: `partner(i)` is the point matched with `i`.
/// Values are immutable once validated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Pairing {
    partner: Vec<u32>,
}

impl Pairing {
    /// Validates a partner array. See [`validate_pairing`].
    pub fn new(partner: Vec<u32>) -> Result<Self, PairingError> {
        check(&partner)?;
        Ok(Pairing { partner })
    }

    /// Builds a pairing without checking the invariants.
    ///
    /// Callers inside the crate use this for arrays produced by a
    /// construction that is non-crossing by design (stack matching,
    /// rainbows, combs).
    pub(crate) fn new_unchecked(partner: Vec<u32>) -> Self {
        debug_assert!(check(&partner).is_ok());
        Pairing { partner }
    }

    /// Half-size: the number of arcs.
    pub fn n(&self) -> usize {
        self.partner.len() / 2
    }

    /// Number of points, `2n`.
    pub fn len(&self) -> usize {
        self.partner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.partner.is_empty()
    }

    #[inline]
    pub fn partner(&self, i: usize) -> usize {
        self.partner[i] as usize
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.partner
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.partner
    }

    /// Arcs `(x, y)` with `x < y`, ordered by left endpoint.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| (p as usize) > i)
            .map(|(i, &p)| (i, p as usize))
    }

    pub fn contains_arc(&self, x: usize, y: usize) -> bool {
        x < self.len() && self.partner(x) == y
    }
}

impl fmt::Debug for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Pairing").field(&self.partner).finish()
    }
}

/// Checks that `partner` is an involution without fixed points whose arcs
/// do not cross, and wraps it as a [`Pairing`].
///
/// Runs in linear time with a stack: a point opens an arc when its partner
/// lies to the right, and closes one when its partner lies to the left, in
/// which case the partner must be the most recently opened point.
pub fn validate_pairing(partner: &[u32]) -> Result<Pairing, PairingError> {
    Pairing::new(partner.to_vec())
}

fn check(partner: &[u32]) -> Result<(), PairingError> {
    let len = partner.len();
    if len == 0 {
        return Err(PairingError::Empty);
    }
    if !len.is_multiple_of(2) {
        return Err(PairingError::OddLength(len));
    }
    let mut stack: Vec<usize> = Vec::with_capacity(len / 2);
    for (i, &p) in partner.iter().enumerate() {
        let p = p as usize;
        if p >= len || p == i || partner[p] as usize != i {
            return Err(PairingError::NotAMatching { index: i });
        }
        if p > i {
            stack.push(i);
            continue;
        }
        // p < i: p is still open, so it sits somewhere in the stack.
        let top = *stack.last().expect("open point present");
        if top != p {
            return Err(PairingError::Crossing {
                a: p,
                b: top,
                c: i,
                d: partner[top] as usize,
            });
        }
        stack.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_the_single_arc() {
        let p = validate_pairing(&[1, 0]).unwrap();
        assert_eq!(p.n(), 1);
    }

    #[test]
    fn accepts_nested_arcs() {
        let p = validate_pairing(&[3, 2, 1, 0]).unwrap();
        assert_eq!(p.arcs().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn reports_the_crossing_quadruple() {
        assert_eq!(
            validate_pairing(&[2, 3, 0, 1]),
            Err(PairingError::Crossing {
                a: 0,
                b: 1,
                c: 2,
                d: 3
            })
        );
    }

    #[test]
    fn rejects_non_involutions() {
        assert_eq!(
            validate_pairing(&[1, 2, 0, 3]),
            Err(PairingError::NotAMatching { index: 0 })
        );
        assert_eq!(
            validate_pairing(&[0, 1]),
            Err(PairingError::NotAMatching { index: 0 })
        );
        assert_eq!(
            validate_pairing(&[5, 0]),
            Err(PairingError::NotAMatching { index: 0 })
        );
    }

    #[test]
    fn rejects_bad_lengths() {
        assert_eq!(validate_pairing(&[]), Err(PairingError::Empty));
        assert_eq!(
            validate_pairing(&[1, 0, 2]),
            Err(PairingError::OddLength(3))
        );
    }

    /// Brute-force quadruple scan, independent of the stack check.
    fn crosses_brute(partner: &[u32]) -> bool {
        let arcs: Vec<(usize, usize)> = partner
            .iter()
            .enumerate()
            .filter(|&(i, &p)| p as usize > i)
            .map(|(i, &p)| (i, p as usize))
            .collect();
        arcs.iter()
            .any(|&(a, c)| arcs.iter().any(|&(b, d)| a < b && b < c && c < d))
    }

    fn all_matchings(len: usize) -> Vec<Vec<u32>> {
        fn rec(partner: &mut Vec<Option<u32>>, out: &mut Vec<Vec<u32>>) {
            let Some(i) = partner.iter().position(Option::is_none) else {
                out.push(partner.iter().map(|p| p.unwrap()).collect());
                return;
            };
            for j in i + 1..partner.len() {
                if partner[j].is_none() {
                    partner[i] = Some(j as u32);
                    partner[j] = Some(i as u32);
                    rec(partner, out);
                    partner[i] = None;
                    partner[j] = None;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![None; len], &mut out);
        out
    }

    #[test]
    fn stack_check_agrees_with_quadruple_scan() {
        for n in 1..=5 {
            let all = all_matchings(2 * n);
            let mut accepted = 0;
            for m in &all {
                let ok = validate_pairing(m).is_ok();
                assert_eq!(ok, !crosses_brute(m), "{m:?}");
                accepted += ok as usize;
            }
            let catalan = [1, 1, 2, 5, 14, 42][n];
            assert_eq!(accepted, catalan);
        }
    }
}
