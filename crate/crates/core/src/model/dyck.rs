use crate::error::{Error, Result};

/// A walk of `2n` steps in `{+1, -1}` that never goes below zero and ends at
/// zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<i8>,
}

impl DyckPath {
    pub fn new(steps: Vec<i8>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, &s) in steps.iter().enumerate() {
            match s {
                1 | -1 => height += s as i64,
                _ => return Err(Error::InvalidDyckPath(format!("step {i} is {s}"))),
            }
            if height < 0 {
                return Err(Error::InvalidDyckPath(format!(
                    "negative prefix at step {i}"
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath(format!("ends at height {height}")));
        }
        Ok(DyckPath { steps })
    }

    pub(crate) fn new_unchecked(steps: Vec<i8>) -> Self {
        debug_assert!(DyckPath::new(steps.clone()).is_ok());
        DyckPath { steps }
    }

    /// The empty path, the image of the one-vertex tree.
    pub fn empty() -> Self {
        DyckPath { steps: Vec::new() }
    }

    /// Half-length `n`.
    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<i8> {
        self.steps
    }

    /// Number of returns to height zero.
    pub fn returns(&self) -> usize {
        let mut h = 0i64;
        let mut r = 0;
        for &s in &self.steps {
            h += s as i64;
            r += (h == 0) as usize;
        }
        r
    }
}

/// Cycle-lemma rotation for a `±1`-like word whose total is `-1`.
///
/// Given increments `step(i)` for `i in 0..len` summing to `-1`, returns the
/// unique offset `m` such that the rotation starting at `m` keeps every
/// proper prefix sum non-negative. That offset is the position right after
/// the first point where the running sum attains its minimum.
pub(crate) fn cycle_lemma_offset(len: usize, step: impl Fn(usize) -> i64) -> usize {
    let mut sum = 0i64;
    let mut min = i64::MAX;
    let mut arg = 0;
    for i in 0..len {
        sum += step(i);
        if sum < min {
            min = sum;
            arg = i + 1;
        }
    }
    debug_assert_eq!(sum, -1);
    arg % len
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_steps() {
        assert!(DyckPath::new(vec![1, -1]).is_ok());
        assert!(DyckPath::new(vec![]).is_ok());
        assert!(DyckPath::new(vec![-1, 1]).is_err());
        assert!(DyckPath::new(vec![1, 1, -1]).is_err());
        assert!(DyckPath::new(vec![1, 0, -1]).is_err());
    }

    #[test]
    fn counts_returns() {
        assert_eq!(DyckPath::new(vec![1, -1, 1, -1]).unwrap().returns(), 2);
        assert_eq!(DyckPath::new(vec![1, 1, -1, -1]).unwrap().returns(), 1);
    }

    #[test]
    fn cycle_lemma_finds_the_unique_good_rotation() {
        // every word with two +1 and three -1
        for mask in 0u32..32 {
            if mask.count_ones() != 2 {
                continue;
            }
            let w: Vec<i64> = (0..5)
                .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
                .collect();
            let good: Vec<usize> = (0..5)
                .filter(|&m| {
                    let mut s = 0;
                    (0..4).all(|j| {
                        s += w[(m + j) % 5];
                        s >= 0
                    })
                })
                .collect();
            assert_eq!(good.len(), 1, "{w:?}");
            assert_eq!(cycle_lemma_offset(5, |i| w[i]), good[0]);
        }
    }
}
