use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::catalan::catalan;

/// Number of non-crossing partitions of `0..n` whose blocks all have size
/// at most `k`.
///
/// Lagrange inversion of `y = z (1 + y + .. + y^k)` gives
/// `(1 / (n + 1)) sum_j (-1)^j binom(n + 1, j) binom(2n - j (k + 1), n)`.
/// Binomials are updated in place from one term to the next, so the cost
/// is about `n / k` big multiplications.
pub fn block_count_at_most(n: usize, k: usize) -> BigUint {
    assert!(n >= 1 && k >= 1);
    let k = k.min(n);
    let step = k + 1;
    let mut top = 2 * n;
    // binom(top, n) and binom(n + 1, j)
    let mut central = binomial(2 * n as u64, n as u64);
    let mut outer = BigUint::one();
    let mut plus = BigUint::zero();
    let mut minus = BigUint::zero();
    let mut j = 0usize;
    loop {
        let term = &outer * &central;
        if j.is_multiple_of(2) {
            plus += term;
        } else {
            minus += term;
        }
        if j == n + 1 || top < n + step {
            break;
        }
        for _ in 0..step {
            // binom(m - 1, n) = binom(m, n) (m - n) / m
            central = central * (top - n) as u64 / top as u64;
            top -= 1;
        }
        outer = outer * (n + 1 - j) as u64 / (j + 1) as u64;
        j += 1;
    }
    let total = plus - minus;
    debug_assert!((&total % (n as u64 + 1)).is_zero());
    total / (n as u64 + 1)
}

fn binomial(m: u64, r: u64) -> BigUint {
    let mut b = BigUint::one();
    for i in 0..r {
        b = b * (m - i) / (i + 1);
    }
    b
}

/// Exact `P(L <= k)` for the largest block `L` of a uniform non-crossing
/// partition of `0..n`, equivalently the largest cycle of a uniform
/// comb-like system.
pub fn block_dist_gf(n: usize, k: usize) -> BigRational {
    BigRational::new(block_count_at_most(n, k).into(), catalan(n).into())
}

/// Same count as [`block_count_at_most`] by fixed-point iteration of
/// `y = z + y^2 - z y^(k+1)` on integer power series truncated after
/// `z^(n+1)`. Cubic cost; meant as an independent check for small `n`.
pub fn block_count_series(n: usize, k: usize) -> BigUint {
    let order = n + 2;
    let mul = |a: &[BigInt], b: &[BigInt]| {
        let mut c = vec![BigInt::zero(); order];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate().take(order - i) {
                c[i + j] += x * y;
            }
        }
        c
    };
    let mut y = vec![BigInt::zero(); order];
    for _ in 0..order {
        let sq = mul(&y, &y);
        let mut pow = y.clone();
        for _ in 0..k {
            pow = mul(&pow, &y);
        }
        let mut next = sq;
        next[1] += 1;
        for i in 1..order {
            next[i] -= &pow[i - 1];
        }
        y = next;
    }
    y[n + 1]
        .to_biguint()
        .expect("coefficients count partitions")
}

pub fn block_dist_series(n: usize, k: usize) -> BigRational {
    BigRational::new(block_count_series(n, k).into(), catalan(n).into())
}

/// Double-exponential approximation `exp(-a 2^-(x+1))` of
/// `P(L - floor(log2 n) <= x)`, with `a = n / 2^floor(log2 n)` in `[1, 2)`.
pub fn double_exp_law(n: usize, x: f64) -> f64 {
    assert!(n >= 2);
    let a = n as f64 / (1u64 << n.ilog2()) as f64;
    (-a * 2f64.powf(-(x + 1.0))).exp()
}

/// Dominant singularity `(z0, y0)` of `y = z + y^2 - z y^(k+1)` and the
/// square-root coefficient `gamma` of `y` there.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharacteristicPoint {
    pub z0: f64,
    pub y0: f64,
    /// `None` when the singularity is not of square-root type (`k = 2`).
    pub gamma: Option<f64>,
}

/// Solves `y = (1 + k y^(k+1) - (k-1) y^(k+2)) / 2` on `(1/2, 1)` and sets
/// `z0 = y0 (1 - y0) / (1 - y0^(k+1))`.
///
/// For `k = 2` the equation has a triple root at `y = 1` and no root inside
/// the interval; the point is then the limit `(1/3, 1)`.
pub fn characteristic_point(k: usize) -> CharacteristicPoint {
    assert!(k >= 2);
    let kf = k as f64;
    let h = |y: f64| 1.0 - 2.0 * y + kf * y.powi(k as i32 + 1) - (kf - 1.0) * y.powi(k as i32 + 2);
    if k == 2 {
        return CharacteristicPoint {
            z0: 1.0 / 3.0,
            y0: 1.0,
            gamma: None,
        };
    }
    // h(1/2) > 0 and h < 0 just below the double root at 1
    let mut hi = 0.5;
    while h(hi) > 0.0 {
        hi += 1.0 / 1024.0;
    }
    let mut lo = hi - 1.0 / 1024.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let y0 = 0.5 * (lo + hi);
    let z0 = y0 * (1.0 - y0) / (1.0 - y0.powi(k as i32 + 1));
    let g_z = 1.0 - y0.powi(k as i32 + 1);
    let g_yy = 2.0 - (kf + 1.0) * kf * z0 * y0.powi(k as i32 - 1);
    CharacteristicPoint {
        z0,
        y0,
        gamma: Some((2.0 * z0 * g_z / g_yy).sqrt()),
    }
}
