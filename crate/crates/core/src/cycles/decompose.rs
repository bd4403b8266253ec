use std::collections::BTreeMap;

use crate::model::MeanderSystem;

/// One connected component of a meander system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cycle {
    support: Vec<u32>,
    tour: Vec<u32>,
}

impl Cycle {
    /// Points visited, in increasing order.
    pub fn support(&self) -> &[u32] {
        &self.support
    }

    /// Points in traversal order: starts at the smallest point and leaves it
    /// along its upper arc.
    pub fn tour(&self) -> &[u32] {
        &self.tour
    }

    pub fn half_length(&self) -> usize {
        self.support.len() / 2
    }

    /// True when the support is a contiguous run of points.
    pub fn is_cluster(&self) -> bool {
        let (lo, hi) = (self.support[0], self.support[self.support.len() - 1]);
        (hi - lo + 1) as usize == self.support.len()
    }

    pub fn shape(&self) -> Vec<usize> {
        shape_permutation(self)
    }
}

/// Shape of a cycle as a single cycle `(1 a_2 .. a_2k)` on `1..=2k`: the
/// ranks within the support of the points in traversal order.
pub fn shape_permutation(c: &Cycle) -> Vec<usize> {
    c.tour
        .iter()
        .map(|p| {
            c.support
                .binary_search(p)
                .expect("tour point lies in support")
                + 1
        })
        .collect()
}

/// Gaps between consecutive support points.
pub fn spacings(c: &Cycle) -> Vec<usize> {
    c.support
        .windows(2)
        .map(|w| (w[1] - w[0]) as usize)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    n: usize,
    cycles: Vec<Cycle>,
}

impl CycleDecomposition {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Cycles ordered by smallest support point.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn count(&self) -> usize {
        self.cycles.len()
    }
}

/// Splits a system into its cycles in linear time.
///
/// Starting points are taken in increasing order, so each new cycle starts
/// at its smallest point. Supports come out sorted from a single pass over
/// the points after labelling.
pub fn decompose(ms: &MeanderSystem) -> CycleDecomposition {
    let len = 2 * ms.n();
    let mut label = vec![u32::MAX; len];
    let mut tours: Vec<Vec<u32>> = Vec::new();
    for start in 0..len {
        if label[start] != u32::MAX {
            continue;
        }
        let id = tours.len() as u32;
        let mut tour = Vec::new();
        walk(ms, start, |p| {
            label[p] = id;
            tour.push(p as u32);
        });
        tours.push(tour);
    }
    let mut supports: Vec<Vec<u32>> = tours.iter().map(|t| Vec::with_capacity(t.len())).collect();
    for (p, &id) in label.iter().enumerate() {
        supports[id as usize].push(p as u32);
    }
    let cycles = supports
        .into_iter()
        .zip(tours)
        .map(|(support, tour)| Cycle { support, tour })
        .collect();
    CycleDecomposition { n: ms.n(), cycles }
}

/// Visits the points of the cycle through `start`, moving first along the
/// upper arc, then alternating.
#[inline]
fn walk(ms: &MeanderSystem, start: usize, mut visit: impl FnMut(usize)) {
    let (up, low) = (ms.upper(), ms.lower());
    let mut p = start;
    loop {
        visit(p);
        let q = up.partner(p);
        visit(q);
        p = low.partner(q);
        if p == start {
            break;
        }
    }
}

/// Per-cycle extent used by the fast statistics paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Span {
    pub min: usize,
    pub max: usize,
    pub half_length: usize,
}

/// Calls `f` once per cycle without materializing supports.
pub(crate) fn for_each_span(ms: &MeanderSystem, mut f: impl FnMut(Span)) {
    let len = 2 * ms.n();
    let mut seen = vec![false; len];
    for start in 0..len {
        if seen[start] {
            continue;
        }
        let mut max = start;
        let mut size = 0;
        walk(ms, start, |p| {
            seen[p] = true;
            max = max.max(p);
            size += 1;
        });
        f(Span {
            min: start,
            max,
            half_length: size / 2,
        });
    }
}

/// Cycle count, largest half-length and half-length histogram in one pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSummary {
    pub n: usize,
    pub cycles: usize,
    pub largest_half_length: usize,
    /// `histogram[k]` is the number of cycles of half-length `k`.
    pub histogram: Vec<u32>,
}

pub fn summarize(ms: &MeanderSystem) -> CycleSummary {
    let n = ms.n();
    let mut histogram = vec![0u32; n + 1];
    let mut cycles = 0;
    let mut largest = 0;
    for_each_span(ms, |s| {
        cycles += 1;
        largest = largest.max(s.half_length);
        histogram[s.half_length] += 1;
    });
    debug_assert_eq!(
        histogram
            .iter()
            .enumerate()
            .map(|(k, &c)| k * c as usize)
            .sum::<usize>(),
        n
    );
    CycleSummary {
        n,
        cycles,
        largest_half_length: largest,
        histogram,
    }
}

pub fn count_cycles(ms: &MeanderSystem) -> usize {
    let mut c = 0;
    for_each_span(ms, |_| c += 1);
    c
}

pub fn largest_half_length(ms: &MeanderSystem) -> usize {
    let mut best = 0;
    for_each_span(ms, |s| best = best.max(s.half_length));
    best
}

/// Half-length `k` mapped to the number of cycles of that half-length.
pub fn half_length_histogram(ms: &MeanderSystem) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for_each_span(ms, |s| *h.entry(s.half_length).or_insert(0) += 1);
    h
}

/// A cycle of maximal half-length; ties go to the one with the smallest
/// starting point.
pub fn largest_cycle(ms: &MeanderSystem) -> Cycle {
    let mut best: Option<Span> = None;
    for_each_span(ms, |s| {
        if best.is_none_or(|b| s.half_length > b.half_length) {
            best = Some(s);
        }
    });
    let start = best.expect("a system has at least one cycle").min;
    let mut tour = Vec::new();
    walk(ms, start, |p| tour.push(p as u32));
    let mut support = tour.clone();
    support.sort_unstable();
    Cycle { support, tour }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::{comb_pairing, rainbow_pairing};
    use crate::model::Pairing;

    fn system(up: &[u32], low: &[u32]) -> MeanderSystem {
        MeanderSystem::new(
            Pairing::new(up.to_vec()).unwrap(),
            Pairing::new(low.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn smallest_system() {
        let d = decompose(&system(&[1, 0], &[1, 0]));
        assert_eq!(d.count(), 1);
        assert_eq!(d.cycles()[0].support(), &[0, 1]);
        assert_eq!(d.cycles()[0].shape(), vec![1, 2]);
    }

    #[test]
    fn comb_over_rainbow_is_one_cycle() {
        let ms = system(&[1, 0, 3, 2], &[3, 2, 1, 0]);
        let d = decompose(&ms);
        assert_eq!(d.count(), 1);
        assert_eq!(d.cycles()[0].tour(), &[0, 1, 2, 3]);
        assert_eq!(d.cycles()[0].shape(), vec![1, 2, 3, 4]);
        assert_eq!(largest_half_length(&ms), 2);
    }

    #[test]
    fn upper_staple_shape() {
        let d = decompose(&system(&[3, 2, 1, 0], &[1, 0, 3, 2]));
        assert_eq!(d.cycles()[0].shape(), vec![1, 4, 3, 2]);
        assert_eq!(spacings(&d.cycles()[0]), vec![1, 1, 1]);
    }

    #[test]
    fn combs_and_rainbows_give_n_cycles() {
        let comb = MeanderSystem::new(comb_pairing(5), comb_pairing(5)).unwrap();
        assert_eq!(count_cycles(&comb), 5);
        assert_eq!(half_length_histogram(&comb), BTreeMap::from([(1, 5)]));
        let rb = MeanderSystem::new(rainbow_pairing(&[4]), rainbow_pairing(&[4])).unwrap();
        assert_eq!(count_cycles(&rb), 4);
        assert!(decompose(&rb)
            .cycles()
            .iter()
            .all(|c| c.shape() == vec![1, 2]));
    }

    #[test]
    fn two_arc_systems() {
        let c = [1, 0, 3, 2];
        let r = [3, 2, 1, 0];
        let counts: Vec<usize> = [(c, c), (c, r), (r, c), (r, r)]
            .iter()
            .map(|(u, l)| count_cycles(&system(u, l)))
            .collect();
        assert_eq!(counts, vec![2, 1, 1, 2]);
    }

    #[test]
    fn summary_matches_decomposition() {
        let ms = system(&[5, 2, 1, 4, 3, 0], &[1, 0, 5, 4, 3, 2]);
        let s = summarize(&ms);
        let d = decompose(&ms);
        assert_eq!(s.cycles, d.count());
        assert_eq!(s.largest_half_length, largest_cycle(&ms).half_length());
        assert_eq!(largest_cycle(&ms), d.cycles()[0]);
    }
}
