use std::f64::consts::PI;

use super::constants::{ZETA2, ZETA3};

/// Limiting probability `(6 / pi^2) / x^2` that a relaxed rainbow system
/// of type `(2, 1)` has `x` cycles.
pub fn rainbow_gcd_law(x: u64) -> f64 {
    assert!(x >= 1);
    6.0 / (PI * PI) / (x * x) as f64
}

/// Leading terms of the mean and second moment of the cycle count of a
/// relaxed `(2, 1)` rainbow system with block sizes up to `max`:
/// `(6 / pi^2) ln N` and `(N / 3) (2 zeta(2) / zeta(3) - 1)`.
pub fn rainbow_moments(max: u64) -> (f64, f64) {
    assert!(max >= 2);
    let n = max as f64;
    (
        6.0 / (PI * PI) * n.ln(),
        n / 3.0 * (2.0 * ZETA2 / ZETA3 - 1.0),
    )
}

/// Exact `E gcd(a, b)` and `E gcd(a, b)^2` for `a`, `b` independent and
/// uniform on `1..=max`.
///
/// Uses `gcd = sum_{d | a, d | b} phi(d)` and `gcd^2 = sum J2(d)` over the
/// same divisors, with `J2` Jordan's totient; the pairs divisible by `d`
/// number `floor(max / d)^2`.
pub fn gcd_moments_exact(max: u64) -> (f64, f64) {
    let s = Sieve::new(max as usize);
    let (mut first, mut second) = (0u128, 0u128);
    for d in 1..=max as usize {
        let q = (max as usize / d) as u128;
        first += s.phi[d] as u128 * q * q;
        second += s.jordan2[d] as u128 * q * q;
    }
    let pairs = (max as f64) * (max as f64);
    (first as f64 / pairs, second as f64 / pairs)
}

/// Exact `P(gcd(a, b) = x)` for `a`, `b` uniform on `1..=max`, by Moebius
/// inversion over the coprime pairs in `1..=max/x`.
pub fn gcd_probability_exact(max: u64, x: u64) -> f64 {
    assert!(x >= 1);
    let m = (max / x) as usize;
    let s = Sieve::new(m);
    let mut coprime = 0i128;
    for d in 1..=m {
        let q = (m / d) as i128;
        coprime += s.mobius[d] as i128 * q * q;
    }
    coprime as f64 / ((max as f64) * (max as f64))
}

struct Sieve {
    phi: Vec<u64>,
    jordan2: Vec<u64>,
    mobius: Vec<i8>,
}

impl Sieve {
    /// Linear sieve for the multiplicative functions up to `max`.
    fn new(max: usize) -> Self {
        let mut phi = vec![0u64; max + 1];
        let mut jordan2 = vec![0u64; max + 1];
        let mut mobius = vec![0i8; max + 1];
        let mut composite = vec![false; max + 1];
        let mut primes = Vec::new();
        if max >= 1 {
            phi[1] = 1;
            jordan2[1] = 1;
            mobius[1] = 1;
        }
        for i in 2..=max {
            if !composite[i] {
                primes.push(i);
                phi[i] = i as u64 - 1;
                jordan2[i] = (i * i) as u64 - 1;
                mobius[i] = -1;
            }
            for &p in &primes {
                let m = i * p;
                if m > max {
                    break;
                }
                composite[m] = true;
                if i % p == 0 {
                    phi[m] = phi[i] * p as u64;
                    jordan2[m] = jordan2[i] * (p * p) as u64;
                    mobius[m] = 0;
                    break;
                }
                phi[m] = phi[i] * (p as u64 - 1);
                jordan2[m] = jordan2[i] * ((p * p) as u64 - 1);
                mobius[m] = -mobius[i];
            }
        }
        Sieve {
            phi,
            jordan2,
            mobius,
        }
    }
}
