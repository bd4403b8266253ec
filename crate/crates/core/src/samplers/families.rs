use rand::seq::index;
use rand::Rng;

use super::sample_uniform_pairing;
use crate::bijections::{comb_pairing, rainbow_pairing};
use crate::error::{Error, Result};
use crate::model::{MeanderSystem, RainbowSpec};

/// Uniform upper pairing over the comb `(0 1)(2 3)...`.
pub fn sample_comb_meander<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MeanderSystem {
    MeanderSystem::new(sample_uniform_pairing(n, rng), comb_pairing(n)).expect("equal sizes")
}

/// Uniform upper pairing over the full rainbow.
pub fn sample_semimeander<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MeanderSystem {
    MeanderSystem::new(sample_uniform_pairing(n, rng), rainbow_pairing(&[n as u64]))
        .expect("equal sizes")
}

/// Uniform composition of `n` into `parts` positive parts: the cut points
/// are a uniform subset of the `n - 1` gaps.
pub fn sample_composition<R: Rng + ?Sized>(n: u64, parts: usize, rng: &mut R) -> Result<Vec<u64>> {
    if parts == 0 || parts as u64 > n {
        return Err(Error::InvalidType(format!(
            "cannot split {n} into {parts} positive parts"
        )));
    }
    let gaps = (n - 1) as usize;
    let mut cuts: Vec<u64> = index::sample(rng, gaps, parts - 1)
        .into_iter()
        .map(|g| g as u64 + 1)
        .collect();
    cuts.sort_unstable();
    cuts.push(n);
    let mut prev = 0;
    Ok(cuts
        .into_iter()
        .map(|c| {
            let part = c - prev;
            prev = c;
            part
        })
        .collect())
}

pub fn sample_rainbow_spec<R: Rng + ?Sized>(
    s: usize,
    t: usize,
    n: u64,
    rng: &mut R,
) -> Result<RainbowSpec> {
    let alpha = sample_composition(n, s, rng)?;
    let beta = sample_composition(n, t, rng)?;
    RainbowSpec::new(alpha, beta)
}

/// Rainbow system of type `(s, t)` with uniform compositions on each side.
pub fn sample_rainbow_meander<R: Rng + ?Sized>(
    s: usize,
    t: usize,
    n: u64,
    rng: &mut R,
) -> Result<MeanderSystem> {
    let spec = sample_rainbow_spec(s, t, n, rng)?;
    Ok(rainbow_meander(&spec))
}

pub fn rainbow_meander(spec: &RainbowSpec) -> MeanderSystem {
    MeanderSystem::new(rainbow_pairing(spec.alpha()), rainbow_pairing(spec.beta()))
        .expect("equal sums")
}

/// `s` upper block sizes drawn i.i.d. uniform on `1..=max`, over one lower
/// rainbow.
pub fn sample_relaxed_rainbow_spec<R: Rng + ?Sized>(
    s: usize,
    max: u64,
    rng: &mut R,
) -> Result<RainbowSpec> {
    if s < 2 || max == 0 {
        return Err(Error::InvalidType(format!(
            "relaxed type needs s >= 2 and N >= 1, got s={s}, N={max}"
        )));
    }
    let alpha = (0..s).map(|_| rng.random_range(1..=max)).collect();
    RainbowSpec::over_single_rainbow(alpha)
}

pub fn sample_relaxed_rainbow<R: Rng + ?Sized>(
    s: usize,
    max: u64,
    rng: &mut R,
) -> Result<MeanderSystem> {
    Ok(rainbow_meander(&sample_relaxed_rainbow_spec(s, max, rng)?))
}
