use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::model::MeanderSystem;
use crate::samplers::{
    sample_comb_meander, sample_rainbow_meander, sample_relaxed_rainbow, sample_semimeander,
    sample_uniform_meander, SgMeanderSampler, WeightSequence,
};

/// A random model of meander systems.
///
/// Text forms: `uniform`, `comb`, `semimeander`, `rainbow(s,t)`,
/// `relaxed_rainbow(s)`, `sg(w0,w1,..)` and `sg(upper|lower)` for different
/// weights on the two sides.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Uniform,
    Comb,
    Semimeander,
    Rainbow {
        s: usize,
        t: usize,
    },
    /// Size parameter is the largest block size `N`, not the half-size.
    RelaxedRainbow {
        s: usize,
    },
    Sg {
        upper: WeightSequence,
        lower: WeightSequence,
    },
}

impl Family {
    pub fn sampler(&self, n: usize) -> Result<FamilySampler> {
        if n == 0 {
            return Err(Error::Range("n must be at least 1".into()));
        }
        let sg = match self {
            Family::Sg { upper, lower } => Some(SgMeanderSampler::new(upper, lower, n)?),
            Family::Rainbow { s, t } if *s > n || *t > n || *s == 0 || *t == 0 => {
                return Err(Error::InvalidType(format!(
                    "type ({s},{t}) needs 1 <= s, t <= n = {n}"
                )))
            }
            Family::RelaxedRainbow { s } if *s < 2 => {
                return Err(Error::InvalidType(format!(
                    "relaxed type needs s >= 2, got {s}"
                )))
            }
            _ => None,
        };
        Ok(FamilySampler {
            family: self.clone(),
            n,
            sg,
        })
    }
}

/// A family bound to a size, with per-size setup done once.
#[derive(Debug, Clone)]
pub struct FamilySampler {
    family: Family,
    n: usize,
    sg: Option<SgMeanderSampler>,
}

impl FamilySampler {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> MeanderSystem {
        let n = self.n;
        match &self.family {
            Family::Uniform => sample_uniform_meander(n, rng),
            Family::Comb => sample_comb_meander(n, rng),
            Family::Semimeander => sample_semimeander(n, rng),
            Family::Rainbow { s, t } => {
                sample_rainbow_meander(*s, *t, n as u64, rng).expect("checked at construction")
            }
            Family::RelaxedRainbow { s } => {
                sample_relaxed_rainbow(*s, n as u64, rng).expect("checked at construction")
            }
            Family::Sg { .. } => self.sg.as_ref().expect("built for sg").sample(rng),
        }
    }
}

fn weights_text(w: &WeightSequence) -> String {
    w.weights()
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Uniform => f.write_str("uniform"),
            Family::Comb => f.write_str("comb"),
            Family::Semimeander => f.write_str("semimeander"),
            Family::Rainbow { s, t } => write!(f, "rainbow({s},{t})"),
            Family::RelaxedRainbow { s } => write!(f, "relaxed_rainbow({s})"),
            Family::Sg { upper, lower } if upper == lower => {
                write!(f, "sg({})", weights_text(upper))
            }
            Family::Sg { upper, lower } => {
                write!(f, "sg({}|{})", weights_text(upper), weights_text(lower))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let unknown = || Error::UnknownFamily(text.to_string());
        let (head, args) = match text.split_once('(') {
            Some((h, rest)) => (h, Some(rest.strip_suffix(')').ok_or_else(unknown)?)),
            None => (text, None),
        };
        let ints = |a: &str| -> Result<Vec<usize>> {
            a.split(',')
                .map(|s| s.trim().parse::<usize>().map_err(|_| unknown()))
                .collect()
        };
        match (head, args) {
            ("uniform", None) => Ok(Family::Uniform),
            ("comb", None) => Ok(Family::Comb),
            ("semimeander", None) => Ok(Family::Semimeander),
            ("rainbow", Some(a)) => match ints(a)?[..] {
                [s, t] => Ok(Family::Rainbow { s, t }),
                _ => Err(unknown()),
            },
            ("relaxed_rainbow", Some(a)) => match ints(a)?[..] {
                [s] => Ok(Family::RelaxedRainbow { s }),
                _ => Err(unknown()),
            },
            ("sg", Some(a)) => {
                let (up, low) = a.split_once('|').unwrap_or((a, a));
                Ok(Family::Sg {
                    upper: WeightSequence::parse(up)?,
                    lower: WeightSequence::parse(low)?,
                })
            }
            _ => Err(unknown()),
        }
    }
}
