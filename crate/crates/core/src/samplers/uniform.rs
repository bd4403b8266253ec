use rand::Rng;

use crate::bijections::pairing_from_steps;
use crate::model::{cycle_lemma_offset, DyckPath, MeanderSystem, Pairing};

/// Uniform Dyck path of half-length `n`.
///
/// A uniformly shuffled word with `n` up-steps and `n + 1` down-steps has
/// exactly one rotation whose proper prefixes stay non-negative; dropping
/// its final down-step leaves a uniform Dyck path. Each of the `C_n` paths
/// comes from exactly `2n + 1` words.
pub fn sample_uniform_dyck<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DyckPath {
    DyckPath::new_unchecked(uniform_dyck_steps(n, rng))
}

pub(crate) fn uniform_dyck_steps<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<i8> {
    let len = 2 * n + 1;
    let mut word = Vec::with_capacity(len);
    let mut ups = n;
    for left in (1..=len).rev() {
        // sequential selection: a uniform arrangement of the multiset
        let up = rng.random_range(0..left) < ups;
        ups -= up as usize;
        word.push(if up { 1i8 } else { -1 });
    }
    let start = cycle_lemma_offset(len, |i| word[i] as i64);
    word.rotate_left(start);
    word.pop();
    word
}

/// Uniform non-crossing pairing of `2n` points.
pub fn sample_uniform_pairing<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Pairing {
    assert!(n >= 1, "pairing needs n >= 1");
    pairing_from_steps(&uniform_dyck_steps(n, rng))
}

/// Independent uniform upper and lower pairings.
pub fn sample_uniform_meander<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MeanderSystem {
    let upper = sample_uniform_pairing(n, rng);
    let lower = sample_uniform_pairing(n, rng);
    MeanderSystem::new(upper, lower).expect("equal sizes")
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::RngStream;

    #[test]
    fn single_arc() {
        let mut rng = RngStream::new(1, 0);
        for _ in 0..10 {
            assert_eq!(sample_uniform_pairing(1, &mut rng).as_slice(), &[1, 0]);
        }
    }

    #[test]
    fn two_arcs_are_equally_likely() {
        let mut rng = RngStream::new(2, 0);
        let draws = 100_000;
        let nested = (0..draws)
            .filter(|_| sample_uniform_pairing(2, &mut rng).partner(0) == 3)
            .count();
        let sigma = (0.25f64 / draws as f64).sqrt();
        assert!((nested as f64 / draws as f64 - 0.5).abs() < 4.0 * sigma);
    }

    #[test]
    fn paths_are_valid() {
        let mut rng = RngStream::new(3, 0);
        for n in 1..40 {
            let p = sample_uniform_dyck(n, &mut rng);
            assert!(DyckPath::new(p.steps().to_vec()).is_ok());
            assert_eq!(p.n(), n);
        }
    }

    #[test]
    fn three_arcs_hit_all_five() {
        let mut rng = RngStream::new(4, 0);
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        for _ in 0..5000 {
            *seen
                .entry(sample_uniform_pairing(3, &mut rng).into_vec())
                .or_default() += 1;
        }
        assert_eq!(seen.len(), 5);
        assert!(seen.values().all(|&c| (800..1200).contains(&c)), "{seen:?}");
    }
}
