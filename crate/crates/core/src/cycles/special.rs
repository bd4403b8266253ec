use std::collections::BTreeMap;

use super::decompose::for_each_span;
use crate::model::{MeanderSystem, Pairing};

/// Counts of the special cycle types.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpecialCounts {
    /// Arc `(x, x+1)` on both sides.
    pub ringlets: usize,
    /// Any arc present on both sides.
    pub rings: usize,
    /// Half-length-2 cycles on points `x, x+1, y, y+1`, either orientation.
    pub staples: usize,
    /// Staples whose arcs `(x, x+1)` and `(y, y+1)` lie below the line.
    pub upper_staples: usize,
    pub lower_staples: usize,
    /// Cycles whose support is a contiguous run of `2k` points, by `k`.
    pub cluster_by_halflength: BTreeMap<usize, usize>,
}

pub fn special_counts(ms: &MeanderSystem) -> SpecialCounts {
    let (up, low) = (ms.upper(), ms.lower());
    let mut out = SpecialCounts::default();
    for (x, y) in up.arcs() {
        if low.partner(x) == y {
            out.rings += 1;
            out.ringlets += (y == x + 1) as usize;
        }
    }
    out.upper_staples = staples_over(low, up);
    out.lower_staples = staples_over(up, low);
    out.staples = out.upper_staples + out.lower_staples;
    for_each_span(ms, |s| {
        if s.max - s.min + 1 == 2 * s.half_length {
            *out.cluster_by_halflength.entry(s.half_length).or_insert(0) += 1;
        }
    });
    out
}

/// Staples whose short arcs `(x, x+1)`, `(y, y+1)` belong to `short` and
/// whose nested arcs `(x, y+1)`, `(x+1, y)` belong to `long`.
fn staples_over(short: &Pairing, long: &Pairing) -> usize {
    let mut count = 0;
    for x in 0..short.len().saturating_sub(3) {
        if short.partner(x) != x + 1 {
            continue;
        }
        let z = long.partner(x);
        if z <= x + 2 {
            continue;
        }
        let y = z - 1;
        if short.partner(y) == z && long.partner(x + 1) == y {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::{comb_pairing, rainbow_pairing};

    fn ms(up: Pairing, low: Pairing) -> MeanderSystem {
        MeanderSystem::new(up, low).unwrap()
    }

    #[test]
    fn nested_rings() {
        let s = special_counts(&ms(rainbow_pairing(&[3]), rainbow_pairing(&[3])));
        assert_eq!((s.rings, s.ringlets, s.staples), (3, 1, 0));
        assert_eq!(s.cluster_by_halflength, BTreeMap::from([(1, 1)]));
    }

    #[test]
    fn single_upper_staple() {
        let s = special_counts(&ms(rainbow_pairing(&[2]), comb_pairing(2)));
        assert_eq!((s.staples, s.upper_staples, s.lower_staples), (1, 1, 0));
        assert_eq!(s.cluster_by_halflength, BTreeMap::from([(2, 1)]));
        let s = special_counts(&ms(comb_pairing(2), rainbow_pairing(&[2])));
        assert_eq!((s.staples, s.upper_staples, s.lower_staples), (1, 0, 1));
    }

    #[test]
    fn comb_on_comb() {
        let s = special_counts(&ms(comb_pairing(5), comb_pairing(5)));
        assert_eq!((s.ringlets, s.rings, s.staples), (5, 5, 0));
        assert_eq!(s.cluster_by_halflength[&1], 5);
    }

    #[test]
    fn wide_staple() {
        // lower (0 1)(2 3)(4 5)(6 7)... upper (0 7)(1 6) with (2 3)(4 5) inside
        let up = Pairing::new(vec![7, 6, 3, 2, 5, 4, 1, 0]).unwrap();
        let s = special_counts(&ms(up, comb_pairing(4)));
        assert_eq!(s.upper_staples, 1);
        assert_eq!(s.rings, 2);
    }
}
