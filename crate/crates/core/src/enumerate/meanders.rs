use std::collections::HashSet;

use serde::Serialize;

use super::all_nc_pairings;
use crate::analytic::constants::R_UPPER;
use crate::cycles::decompose;
use crate::error::{Error, Result};
use crate::model::{MeanderSystem, Pairing};

/// Largest `k` for which [`meander_number`] scans all `C_k^2` systems.
pub const MEANDER_GUARD: usize = 10;

fn guard(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::Range("k must be at least 1".into()));
    }
    if k > MEANDER_GUARD {
        return Err(Error::SizeGuard {
            requested: k,
            limit: MEANDER_GUARD,
        });
    }
    Ok(())
}

/// Number of systems on `2k` points with a single cycle.
pub fn meander_number(k: usize) -> Result<u64> {
    guard(k)?;
    let pairings: Vec<Vec<u32>> = all_nc_pairings(k)?.map(Pairing::into_vec).collect();
    let len = 2 * k;
    let mut count = 0u64;
    for up in &pairings {
        for low in &pairings {
            // walk the cycle through point 0 and check it covers everything
            let mut p = 0usize;
            let mut steps = 0;
            loop {
                p = low[up[p] as usize] as usize;
                steps += 2;
                if p == 0 {
                    break;
                }
            }
            count += (steps == len) as u64;
        }
    }
    Ok(count)
}

/// `R_1, ..., R_max`.
pub fn meander_numbers(max: usize) -> Result<Vec<u64>> {
    guard(max)?;
    (1..=max).map(meander_number).collect()
}

/// Distinct shapes of cycles of half-length `k`, collected over every
/// system on `2 * size` points.
pub fn distinct_shapes(k: usize, size: usize) -> Result<HashSet<Vec<usize>>> {
    guard(size)?;
    let pairings: Vec<Pairing> = all_nc_pairings(size)?.collect();
    let mut shapes = HashSet::new();
    for up in &pairings {
        for low in &pairings {
            let ms = MeanderSystem::new(up.clone(), low.clone()).expect("equal sizes");
            for c in decompose(&ms).cycles() {
                if c.half_length() == k {
                    shapes.insert(c.shape());
                }
            }
        }
    }
    Ok(shapes)
}

#[derive(Debug, Clone, Serialize)]
pub struct SuperadditivityReport {
    pub numbers: Vec<u64>,
    /// Pairs `(k, l)` with `R_k R_l > R_{k+l}`.
    pub violations: Vec<(usize, usize)>,
    /// `R_k^(1/k)`.
    pub roots: Vec<f64>,
    pub roots_below_upper_bound: bool,
    pub holds: bool,
}

/// Checks `R_k R_l <= R_{k+l}` for all `k + l <= max_k`.
pub fn superadditivity_check(max_k: usize) -> Result<SuperadditivityReport> {
    let numbers = meander_numbers(max_k)?;
    let r = |k: usize| numbers[k - 1];
    let mut violations = Vec::new();
    for k in 1..max_k {
        for l in k..=max_k - k {
            if r(k) * r(l) > r(k + l) {
                violations.push((k, l));
            }
        }
    }
    let roots: Vec<f64> = numbers
        .iter()
        .enumerate()
        .map(|(i, &x)| (x as f64).powf(1.0 / (i + 1) as f64))
        .collect();
    let below = roots.iter().all(|&x| x <= R_UPPER);
    Ok(SuperadditivityReport {
        holds: violations.is_empty() && below,
        numbers,
        violations,
        roots,
        roots_below_upper_bound: below,
    })
}
