use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

/// `C_n = binom(2n, n) / (n + 1)`, exactly.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * (2 * (2 * k as u64 + 1)) / (k as u64 + 2);
    }
    c
}

/// `C_0, ..., C_max`.
pub fn catalan_table(max: usize) -> Vec<BigUint> {
    let mut t = Vec::with_capacity(max + 1);
    t.push(BigUint::one());
    for k in 0..max {
        let next = &t[k] * (2 * (2 * k as u64 + 1)) / (k as u64 + 2);
        t.push(next);
    }
    t
}

const DIRECT_LIMIT: usize = 256;

/// Natural logarithm of `C_n`.
///
/// Small `n` multiply the ratios `C_{k+1} / C_k` directly; larger `n` use
/// Stirling's series for `ln binom(2n, n)`, whose remainder after four
/// correction terms is far below double precision here.
pub fn log_catalan(n: usize) -> f64 {
    if n < DIRECT_LIMIT {
        return (0..n)
            .map(|k| ((2.0 * (2 * k + 1) as f64) / (k + 2) as f64).ln())
            .sum();
    }
    let s = |m: f64| {
        let r = 1.0 / m;
        let r2 = r * r;
        r * (1.0 / 12.0 - r2 * (1.0 / 360.0 - r2 * (1.0 / 1260.0 - r2 / 1680.0)))
    };
    let nf = n as f64;
    nf * 4f64.ln() - 0.5 * (std::f64::consts::PI * nf).ln() + s(2.0 * nf)
        - 2.0 * s(nf)
        - (nf + 1.0).ln()
}

/// `C_{n-k} / C_n` in floating point, via
/// `C_j / C_{j+1} = (j + 2) / (2 (2j + 1))`.
pub fn catalan_ratio(n: usize, k: usize) -> f64 {
    assert!(k <= n);
    if k <= 64 {
        (n - k..n)
            .map(|j| (j + 2) as f64 / (2.0 * (2 * j + 1) as f64))
            .product()
    } else {
        (log_catalan(n - k) - log_catalan(n)).exp()
    }
}

/// Probability `C_{n-1} / C_n = (n + 1) / (2 (2n - 1))` that a uniform
/// pairing of `2n` points contains a given arc `(x, x + 1)`.
pub fn p_arc(n: usize) -> BigRational {
    assert!(n >= 1);
    rational(n as u64 + 1, 2 * (2 * n as u64 - 1))
}

pub(crate) fn rational(num: u64, den: u64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Natural log of a big integer, exact to double precision.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("fits in f64").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(catalan(0), BigUint::from(1u32));
        assert_eq!(catalan(3), BigUint::from(5u32));
        assert_eq!(catalan(14), BigUint::from(2_674_440u32));
        assert_eq!(
            catalan_table(8)
                .iter()
                .map(|c| c.to_u64().unwrap())
                .collect::<Vec<_>>(),
            vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]
        );
    }

    #[test]
    fn arc_probability() {
        assert_eq!(p_arc(1), rational(1, 1));
        assert_eq!(p_arc(2), rational(1, 2));
        assert_eq!(p_arc(3), rational(2, 5));
    }

    #[test]
    fn log_matches_exact() {
        let table = catalan_table(3000);
        for n in (1..3000).step_by(7).chain([255, 256, 257]) {
            let exact = ln_biguint(&table[n]);
            let rel = (log_catalan(n) - exact).abs() / exact.max(1.0);
            assert!(rel < 1e-12, "n={n} rel={rel}");
        }
    }

    #[test]
    fn log_matches_exact_at_large_n() {
        for n in [10_000, 100_000] {
            let exact = ln_biguint(&catalan(n));
            assert!(((log_catalan(n) - exact) / exact).abs() < 1e-12);
        }
    }

    #[test]
    fn ratio_paths_agree() {
        let direct: f64 = (1000 - 64..1000)
            .map(|j| (j + 2) as f64 / (2.0 * (2 * j + 1) as f64))
            .product();
        let via_logs = (log_catalan(1000 - 64) - log_catalan(1000)).exp();
        assert!((direct / via_logs - 1.0).abs() < 1e-11);
        assert!((catalan_ratio(10, 1) - 11.0 / 38.0).abs() < 1e-15);
    }
}
