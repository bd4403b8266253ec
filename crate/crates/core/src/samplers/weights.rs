use crate::error::{Error, Result};

/// Out-degree weights `w_0, w_1, ..` of a simply-generated tree, with
/// finite support.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSequence {
    w: Vec<f64>,
}

impl WeightSequence {
    /// Requires `w_0 > 0`, every weight finite and non-negative, and some
    /// `w_k > 0` with `k >= 1`. Trailing zeros are dropped.
    pub fn new(mut w: Vec<f64>) -> Result<Self> {
        if let Some(bad) = w.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::InvalidWeights(format!(
                "weight {bad} is not a finite non-negative number"
            )));
        }
        while w.len() > 1 && w.last() == Some(&0.0) {
            w.pop();
        }
        if w.first().copied().unwrap_or(0.0) <= 0.0 {
            return Err(Error::InvalidWeights("w0 must be positive".into()));
        }
        if w.len() < 2 {
            return Err(Error::InvalidWeights("no positive weight beyond w0".into()));
        }
        Ok(WeightSequence { w })
    }

    /// `w_k = 1` for `k <= max_degree`. With `max_degree >= n` this gives the
    /// uniform law on planar trees with `n` edges.
    pub fn uniform(max_degree: usize) -> Self {
        assert!(max_degree >= 1);
        WeightSequence {
            w: vec![1.0; max_degree + 1],
        }
    }

    /// Parses a comma-separated list such as `1,0,1`.
    pub fn parse(text: &str) -> Result<Self> {
        let w = text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::InvalidWeights(format!("`{s}` is not a number")))
            })
            .collect::<Result<Vec<_>>>()?;
        WeightSequence::new(w)
    }

    pub fn weights(&self) -> &[f64] {
        &self.w
    }

    pub fn get(&self, k: usize) -> f64 {
        self.w.get(k).copied().unwrap_or(0.0)
    }

    pub fn max_degree(&self) -> usize {
        self.w.len() - 1
    }

    /// Degrees carrying positive weight.
    pub fn support(&self) -> Vec<usize> {
        (0..self.w.len()).filter(|&k| self.w[k] > 0.0).collect()
    }

    /// True when only degrees 0 and 1 carry weight: every tree is a path.
    pub fn is_degenerate(&self) -> bool {
        self.w.len() <= 2
    }

    /// The equivalent sequence `a * b^k * w_k`.
    pub fn scaled(&self, a: f64, b: f64) -> Result<Self> {
        let w = self
            .w
            .iter()
            .enumerate()
            .map(|(k, &x)| a * b.powi(k as i32) * x)
            .collect();
        WeightSequence::new(w)
    }

    /// Whether some tree on `vertices` vertices has all out-degrees in the
    /// support.
    pub fn admits(&self, vertices: usize) -> bool {
        if vertices == 0 {
            return false;
        }
        if self.get(1) > 0.0 {
            return true;
        }
        // with no unary vertices the out-degrees >= 2 must sum to the edge
        // count, and the leaves fill up the rest
        let edges = vertices - 1;
        let parts: Vec<usize> = self.support().into_iter().filter(|&k| k >= 2).collect();
        let mut reach = vec![false; edges + 1];
        reach[0] = true;
        for e in 1..=edges {
            reach[e] = parts.iter().any(|&k| k <= e && reach[e - k]);
        }
        reach[edges]
    }
}
