use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::catalan::{catalan_ratio, catalan_table, log_catalan, rational};
use crate::error::{Error, Result};

/// Mean number of ringlets in a uniform system of half-size `n`:
/// `(2n - 1) p^2` with `p = (n + 1) / (2 (2n - 1))`, which simplifies to
/// `(n + 1)^2 / (4 (2n - 1))`.
pub fn expected_ringlets_exact(n: usize) -> BigRational {
    assert!(n >= 1);
    let n = n as u64;
    rational((n + 1) * (n + 1), 4 * (2 * n - 1))
}

pub fn expected_ringlets(n: usize) -> f64 {
    let n = n as f64;
    (n + 1.0) * (n + 1.0) / (4.0 * (2.0 * n - 1.0))
}

/// Mean number of rings.
///
/// A shared arc `(x, x + 2k + 1)` encloses `2k` points; it has `2n - 2k - 1`
/// possible positions and occurs on one side with probability
/// `C_k C_{n-k-1} / C_n`.
pub fn expected_rings_exact(n: usize) -> BigRational {
    assert!(n >= 1);
    let c = catalan_table(n);
    let mut num = BigUint::zero();
    for k in 0..n {
        let pair = &c[k] * &c[n - k - 1];
        num += (&pair * &pair) * (2 * (n - k) as u64 - 1);
    }
    BigRational::new(num.into(), (&c[n] * &c[n]).into())
}

pub fn expected_rings(n: usize) -> f64 {
    assert!(n >= 1);
    let logs: Vec<f64> = (0..=n).map(log_catalan).collect();
    (0..n)
        .map(|k| {
            let l = logs[k] + logs[n - k - 1] - logs[n];
            (2 * (n - k) - 1) as f64 * (2.0 * l).exp()
        })
        .sum()
}

/// Mean number of staples, both orientations.
///
/// One side carries `(x, x+1)` and `(y, y+1)`, probability `C_{n-2} / C_n`;
/// the other carries `(x, y+1)` and `(x+1, y)` with `y = x + 2k`, which is
/// an arc enclosing `2k` points around one enclosing `2k - 2`, probability
/// `C_{k-1} C_{n-k-1} / C_n`. There are `2n - 2k - 1` positions for each
/// `k` in `1..n`.
pub fn expected_staples_exact(n: usize) -> BigRational {
    assert!(n >= 1);
    if n < 2 {
        return BigRational::zero();
    }
    let c = catalan_table(n);
    let mut inner = BigUint::zero();
    for k in 1..n {
        inner += &c[k - 1] * &c[n - k - 1] * (2 * (n - k) as u64 - 1);
    }
    let num = inner * &c[n - 2] * 2u32;
    BigRational::new(num.into(), (&c[n] * &c[n]).into())
}

pub fn expected_staples(n: usize) -> f64 {
    assert!(n >= 1);
    if n < 2 {
        return 0.0;
    }
    let logs: Vec<f64> = (0..=n).map(log_catalan).collect();
    let p1 = (logs[n - 2] - logs[n]).exp();
    let s: f64 = (1..n)
        .map(|k| (2 * (n - k) - 1) as f64 * (logs[k - 1] + logs[n - k - 1] - logs[n]).exp())
        .sum();
    2.0 * p1 * s
}

/// Mean number of cluster cycles of half-length `k`: each of the
/// `2n - 2k + 1` windows of `2k` consecutive points closes into one cycle of
/// a given shape with probability `(C_{n-k} / C_n)^2`.
pub fn expected_cluster_cycles(n: usize, k: usize, shape_count: u64) -> f64 {
    assert!(1 <= k && k <= n);
    let r = catalan_ratio(n, k);
    (2 * (n - k) + 1) as f64 * r * r * shape_count as f64
}

/// Leading-order expansions of `(C_{n-k} / C_n)^2` and of
/// `(C_{n-2k} / C_n)^2 - (C_{n-k} / C_n)^4` for `1 <= k <= n / 10`.
pub fn catalan_ratio_expansion(n: usize, k: usize) -> Result<(f64, f64)> {
    if k == 0 || 10 * k > n {
        return Err(Error::Range(format!(
            "need 1 <= k <= n/10, got n={n}, k={k}"
        )));
    }
    let x = k as f64 / n as f64;
    let sq = 2f64.powi(-4 * k as i32) * (1.0 + 3.0 * x);
    let cov = 2f64.powi(-8 * k as i32) * 3.0 * x * x;
    Ok((sq, cov))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}
