use rand::seq::SliceRandom;
use rand::Rng;
use rand_distr::{Binomial, Distribution};

use super::WeightSequence;
use crate::analytic::weight_analysis;
use crate::bijections::pairing_from_tree_unchecked;
use crate::error::{Error, Result};
use crate::model::{cycle_lemma_offset, MeanderSystem, Pairing, PlanarTree};

/// Sampler for simply-generated planar trees of a fixed size.
///
/// Draws `vertices` i.i.d. degrees from the mean-one tilted offspring law,
/// keeps the draw when the degrees sum to `vertices - 1`, and rotates the
/// shuffled sequence into a preorder degree sequence with the cycle lemma.
/// The tilt cancels in the conditional law, which is therefore
/// proportional to the product of the weights.
#[derive(Debug, Clone)]
pub struct SgTreeSampler {
    vertices: usize,
    /// (degree, probability) over the support, probabilities renormalized
    /// as conditional tail probabilities for sequential binomial draws.
    stages: Vec<(u32, f64)>,
    degenerate: bool,
}

impl SgTreeSampler {
    pub fn new(w: &WeightSequence, vertices: usize) -> Result<Self> {
        if vertices == 0 || !w.admits(vertices) {
            return Err(Error::InadmissibleSize { vertices });
        }
        if w.is_degenerate() {
            return Ok(SgTreeSampler {
                vertices,
                stages: Vec::new(),
                degenerate: true,
            });
        }
        let law = weight_analysis(w)?.offspring_law();
        let mut stages = Vec::new();
        let mut tail: f64 = law.iter().sum();
        for (k, &p) in law.iter().enumerate() {
            if p > 0.0 {
                stages.push((k as u32, (p / tail).min(1.0)));
            }
            tail -= p;
        }
        if let Some(last) = stages.last_mut() {
            last.1 = 1.0;
        }
        Ok(SgTreeSampler {
            vertices,
            stages,
            degenerate: false,
        })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    /// True when the weights only allow the path tree, which every draw
    /// then returns.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> PlanarTree {
        PlanarTree::from_preorder_degrees_unchecked(self.sample_degrees(rng))
    }

    pub fn sample_pairing<R: Rng + ?Sized>(&self, rng: &mut R) -> Pairing {
        assert!(self.vertices >= 2, "pairing needs at least one edge");
        pairing_from_tree_unchecked(&self.sample_degrees(rng))
    }

    fn sample_degrees<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<u32> {
        let v = self.vertices;
        if self.degenerate {
            let mut d = vec![1u32; v];
            d[v - 1] = 0;
            return d;
        }
        let target = (v - 1) as u64;
        let counts = loop {
            let mut left = v as u64;
            let mut sum = 0u64;
            let mut counts = Vec::with_capacity(self.stages.len());
            for &(k, p) in &self.stages {
                let c = if left == 0 {
                    0
                } else if p >= 1.0 {
                    left
                } else {
                    Binomial::new(left, p).expect("p in [0,1)").sample(rng)
                };
                left -= c;
                sum += k as u64 * c;
                counts.push(c);
                if sum > target {
                    break;
                }
            }
            if sum == target && left == 0 {
                break counts;
            }
        };
        let mut degrees = Vec::with_capacity(v);
        for (&(k, _), &c) in self.stages.iter().zip(&counts) {
            degrees.extend(std::iter::repeat_n(k, c as usize));
        }
        degrees.shuffle(rng);
        let start = cycle_lemma_offset(v, |i| degrees[i] as i64 - 1);
        degrees.rotate_left(start);
        degrees
    }
}

/// One simply-generated tree on `vertices` vertices.
pub fn sample_sg_tree<R: Rng + ?Sized>(
    w: &WeightSequence,
    vertices: usize,
    rng: &mut R,
) -> Result<PlanarTree> {
    Ok(SgTreeSampler::new(w, vertices)?.sample(rng))
}

/// Independent simply-generated trees above and below the line, each mapped
/// to a pairing through its contour.
#[derive(Debug, Clone)]
pub struct SgMeanderSampler {
    upper: SgTreeSampler,
    lower: SgTreeSampler,
}

impl SgMeanderSampler {
    pub fn new(w_up: &WeightSequence, w_low: &WeightSequence, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Range("n must be at least 1".into()));
        }
        Ok(SgMeanderSampler {
            upper: SgTreeSampler::new(w_up, n + 1)?,
            lower: SgTreeSampler::new(w_low, n + 1)?,
        })
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> MeanderSystem {
        let upper = self.upper.sample_pairing(rng);
        let lower = self.lower.sample_pairing(rng);
        MeanderSystem::new(upper, lower).expect("equal sizes")
    }
}

pub fn sample_sg_meander<R: Rng + ?Sized>(
    w_up: &WeightSequence,
    w_low: &WeightSequence,
    n: usize,
    rng: &mut R,
) -> Result<MeanderSystem> {
    Ok(SgMeanderSampler::new(w_up, w_low, n)?.sample(rng))
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use super::*;
    use crate::RngStream;

    fn ws(v: &[f64]) -> WeightSequence {
        WeightSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn binary_trees_on_five_vertices() {
        let s = SgTreeSampler::new(&ws(&[1.0, 0.0, 1.0]), 5).unwrap();
        let mut rng = RngStream::new(5, 0);
        let mut seen: HashMap<Vec<u32>, usize> = HashMap::new();
        for _ in 0..4000 {
            *seen
                .entry(s.sample(&mut rng).preorder_degrees().to_vec())
                .or_default() += 1;
        }
        let mut keys: Vec<_> = seen.keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, vec![vec![2, 0, 2, 0, 0], vec![2, 2, 0, 0, 0]]);
        assert!(seen.values().all(|&c| (1800..2200).contains(&c)));
    }

    #[test]
    fn parity_is_enforced() {
        assert!(matches!(
            SgTreeSampler::new(&ws(&[1.0, 0.0, 1.0]), 4),
            Err(Error::InadmissibleSize { vertices: 4 })
        ));
    }

    #[test]
    fn path_weights_give_the_path() {
        let s = SgTreeSampler::new(&ws(&[1.0, 1.0]), 4).unwrap();
        assert!(s.is_degenerate());
        let t = s.sample(&mut RngStream::new(0, 0));
        assert_eq!(t.preorder_degrees(), &[1, 1, 1, 0]);
    }

    #[test]
    fn sampled_trees_are_valid() {
        let s = SgTreeSampler::new(&ws(&[1.0, 1.0, 1.0]), 301).unwrap();
        let mut rng = RngStream::new(6, 0);
        for _ in 0..20 {
            let t = s.sample(&mut rng);
            assert!(PlanarTree::from_preorder_degrees(t.preorder_degrees().to_vec()).is_ok());
            assert!(t.preorder_degrees().iter().all(|&d| d <= 2));
        }
    }
}
