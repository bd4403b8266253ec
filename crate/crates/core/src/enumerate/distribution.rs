use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::all_nc_pairings;
use crate::bijections::comb_pairing;
use crate::cycles::{special_counts, summarize};
use crate::error::{Error, Result};
use crate::model::{MeanderSystem, Pairing};

/// Statistics with an exact small-size law.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    CycleCount,
    LargestHalfLength,
    Ringlets,
    Rings,
    Staples,
}

impl Statistic {
    pub const ALL: [Statistic; 5] = [
        Statistic::CycleCount,
        Statistic::LargestHalfLength,
        Statistic::Ringlets,
        Statistic::Rings,
        Statistic::Staples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Statistic::CycleCount => "cycle_count",
            Statistic::LargestHalfLength => "largest_half_length",
            Statistic::Ringlets => "ringlets",
            Statistic::Rings => "rings",
            Statistic::Staples => "staples",
        }
    }

    pub fn eval(self, ms: &MeanderSystem) -> u64 {
        match self {
            Statistic::CycleCount => summarize(ms).cycles as u64,
            Statistic::LargestHalfLength => summarize(ms).largest_half_length as u64,
            Statistic::Ringlets => special_counts(ms).ringlets as u64,
            Statistic::Rings => special_counts(ms).rings as u64,
            Statistic::Staples => special_counts(ms).staples as u64,
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Statistic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Statistic::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStatistic(s.to_string()))
    }
}

/// Which systems are scanned.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Model {
    /// All `C_n^2` pairs of pairings.
    Uniform,
    /// All `C_n` upper pairings over the comb.
    Comb,
}

impl Model {
    pub fn guard(self) -> usize {
        match self {
            Model::Uniform => 6,
            Model::Comb => 12,
        }
    }
}

/// Exact law of a statistic: value mapped to the number of systems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactDistribution {
    pub n: usize,
    pub statistic: Statistic,
    pub model: Model,
    pub counts: BTreeMap<u64, u64>,
    pub total: u64,
}

impl ExactDistribution {
    pub fn mean(&self) -> BigRational {
        let sum: u64 = self.counts.iter().map(|(v, c)| v * c).sum();
        BigRational::new(BigInt::from(sum), BigInt::from(self.total))
    }

    /// `P(X <= x)` as an exact fraction.
    pub fn cdf(&self, x: u64) -> BigRational {
        let below: u64 = self.counts.range(..=x).map(|(_, c)| c).sum();
        BigRational::new(BigInt::from(below), BigInt::from(self.total))
    }
}

pub fn exact_distribution(
    n: usize,
    statistic: Statistic,
    model: Model,
) -> Result<ExactDistribution> {
    if n == 0 {
        return Err(Error::Range("n must be at least 1".into()));
    }
    if n > model.guard() {
        return Err(Error::SizeGuard {
            requested: n,
            limit: model.guard(),
        });
    }
    let pairings: Vec<Pairing> = all_nc_pairings(n)?.collect();
    let lowers = match model {
        Model::Uniform => pairings.clone(),
        Model::Comb => vec![comb_pairing(n)],
    };
    let mut counts = BTreeMap::new();
    let mut total = 0;
    for up in &pairings {
        for low in &lowers {
            let ms = MeanderSystem::new(up.clone(), low.clone()).expect("equal sizes");
            *counts.entry(statistic.eval(&ms)).or_insert(0) += 1;
            total += 1;
        }
    }
    Ok(ExactDistribution {
        n,
        statistic,
        model,
        counts,
        total,
    })
}
