use crate::error::{Error, Result};

/// Block sizes of the two shifted-rainbow pairings of a rainbow system.
///
/// `alpha` describes the upper side and `beta` the lower side; both are
/// positive compositions of the same `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RainbowSpec {
    alpha: Vec<u64>,
    beta: Vec<u64>,
}

impl RainbowSpec {
    pub fn new(alpha: Vec<u64>, beta: Vec<u64>) -> Result<Self> {
        for (side, parts) in [("alpha", &alpha), ("beta", &beta)] {
            if parts.is_empty() {
                return Err(Error::InvalidType(format!("{side} is empty")));
            }
            if parts.contains(&0) {
                return Err(Error::InvalidType(format!("{side} has a zero part")));
            }
        }
        let (sa, sb) = (alpha.iter().sum::<u64>(), beta.iter().sum::<u64>());
        if sa != sb {
            return Err(Error::InvalidType(format!(
                "alpha sums to {sa}, beta to {sb}"
            )));
        }
        Ok(RainbowSpec { alpha, beta })
    }

    /// Upper blocks `alpha` over a single lower rainbow.
    pub fn over_single_rainbow(alpha: Vec<u64>) -> Result<Self> {
        let n = alpha.iter().sum();
        RainbowSpec::new(alpha, vec![n])
    }

    pub fn alpha(&self) -> &[u64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[u64] {
        &self.beta
    }

    pub fn n(&self) -> u64 {
        self.alpha.iter().sum()
    }

    /// The type `(s, t)`: the number of blocks on each side.
    pub fn kind(&self) -> (usize, usize) {
        (self.alpha.len(), self.beta.len())
    }
}
