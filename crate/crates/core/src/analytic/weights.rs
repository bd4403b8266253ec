use crate::error::{Error, Result};
use crate::samplers::WeightSequence;

/// The generating function `theta(t) = sum w_k t^k` of a weight sequence
/// and the tilt parameter `tau` where `t theta'(t) / theta(t) = 1`.
#[derive(Debug, Clone)]
pub struct WeightAnalysis {
    weights: WeightSequence,
    /// Radius of convergence of `theta`; infinite for finite support.
    pub rho: f64,
    pub tau: f64,
    pub theta_at_tau: f64,
    /// Limiting leaf fraction `w_0 / theta(tau)`.
    pub pi0: f64,
}

impl WeightAnalysis {
    pub fn theta(&self, t: f64) -> f64 {
        theta(self.weights.weights(), t)
    }

    pub fn psi(&self, t: f64) -> f64 {
        psi(self.weights.weights(), t)
    }

    /// Offspring law `p_k = w_k tau^k / theta(tau)`, which has mean one.
    pub fn offspring_law(&self) -> Vec<f64> {
        tilted_law(self.weights.weights(), self.tau)
    }
}

pub fn theta(w: &[f64], t: f64) -> f64 {
    w.iter().rev().fold(0.0, |acc, &x| acc * t + x)
}

/// `t theta'(t) / theta(t)`, evaluated through normalized terms so large
/// degrees do not overflow.
pub fn psi(w: &[f64], t: f64) -> f64 {
    let law = tilted_law(w, t);
    law.iter().enumerate().map(|(k, p)| k as f64 * p).sum()
}

pub(crate) fn tilted_law(w: &[f64], t: f64) -> Vec<f64> {
    let lt = t.ln();
    let logs: Vec<f64> = w
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            if x > 0.0 {
                x.ln() + k as f64 * lt
            } else {
                f64::NEG_INFINITY
            }
        })
        .collect();
    let top = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut law: Vec<f64> = logs.iter().map(|&l| (l - top).exp()).collect();
    let total: f64 = law.iter().sum();
    law.iter_mut().for_each(|p| *p /= total);
    law
}

/// Solves `psi(tau) = 1` by bisection. `psi` is increasing from `0` toward
/// the largest supported degree, so a root exists unless that degree is 1.
pub fn weight_analysis(w: &WeightSequence) -> Result<WeightAnalysis> {
    if w.is_degenerate() {
        return Err(Error::DegenerateWeights);
    }
    let ws = w.weights();
    let mut hi = 1.0f64;
    while psi(ws, hi) < 1.0 {
        hi *= 2.0;
    }
    let mut lo = 0.0f64;
    while hi - lo > 1e-15 * hi {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if psi(ws, mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let tau = 0.5 * (lo + hi);
    let theta_at_tau = theta(ws, tau);
    Ok(WeightAnalysis {
        weights: w.clone(),
        rho: f64::INFINITY,
        tau,
        theta_at_tau,
        pi0: ws[0] / theta_at_tau,
    })
}

/// Leading-order lower bound `pi0^2 n / 2` on the mean cycle count of a
/// simply-generated system with the same weights on both sides.
pub fn ringlet_bound_sg(w: &WeightSequence, n: usize) -> Result<f64> {
    let a = weight_analysis(w)?;
    Ok(0.5 * a.pi0 * a.pi0 * n as f64)
}
