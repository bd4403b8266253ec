use serde::Serialize;

/// Streaming count, mean and central moments, mergeable in a fixed order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Moments {
    count: u64,
    mean: f64,
    m2: f64,
    m3: f64,
}

impl Moments {
    pub fn from_slice(xs: &[f64]) -> Self {
        let mut m = Moments::default();
        xs.iter().for_each(|&x| m.push(x));
        m
    }

    pub fn push(&mut self, x: f64) {
        self.merge(&Moments {
            count: 1,
            mean: x,
            m2: 0.0,
            m3: 0.0,
        });
    }

    /// Pairwise update of the first three central moments.
    pub fn merge(&mut self, other: &Moments) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let (na, nb) = (self.count as f64, other.count as f64);
        let n = na + nb;
        let d = other.mean - self.mean;
        let m2 = self.m2 + other.m2 + d * d * na * nb / n;
        let m3 = self.m3
            + other.m3
            + d * d * d * na * nb * (na - nb) / (n * n)
            + 3.0 * d * (na * other.m2 - nb * self.m2) / n;
        self.mean += d * nb / n;
        self.m2 = m2;
        self.m3 = m3;
        self.count += other.count;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    /// Unbiased sample variance.
    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            return 0.0;
        }
        self.m2 / (self.count - 1) as f64
    }

    pub fn std(&self) -> f64 {
        self.variance().sqrt()
    }

    pub fn stderr(&self) -> f64 {
        if self.count == 0 {
            return f64::NAN;
        }
        self.std() / (self.count as f64).sqrt()
    }

    /// Moment coefficient of skewness `m3 / m2^(3/2)`.
    pub fn skewness(&self) -> f64 {
        if self.m2 == 0.0 {
            return 0.0;
        }
        let n = self.count as f64;
        (self.m3 / n) / (self.m2 / n).powf(1.5)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_two_pass_formulas() {
        let xs: Vec<f64> = (0..1000)
            .map(|i| ((i * 37 % 101) as f64).powf(1.3))
            .collect();
        let m = Moments::from_slice(&xs);
        let n = xs.len() as f64;
        let mean = xs.iter().sum::<f64>() / n;
        let m2: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
        let m3: f64 = xs.iter().map(|x| (x - mean).powi(3)).sum();
        assert!((m.mean() - mean).abs() < 1e-10);
        assert!((m.variance() - m2 / (n - 1.0)).abs() < 1e-8);
        let skew = (m3 / n) / (m2 / n).powf(1.5);
        assert!((m.skewness() - skew).abs() < 1e-10);
    }

    #[test]
    fn merge_equals_sequential() {
        let xs: Vec<f64> = (0..500)
            .map(|i| (i as f64).sqrt() * if i % 3 == 0 { -1.0 } else { 1.0 })
            .collect();
        let whole = Moments::from_slice(&xs);
        let mut parts = Moments::from_slice(&xs[..123]);
        parts.merge(&Moments::from_slice(&xs[123..]));
        assert!((whole.mean() - parts.mean()).abs() < 1e-12);
        assert!((whole.variance() - parts.variance()).abs() < 1e-9);
        assert!((whole.skewness() - parts.skewness()).abs() < 1e-9);
    }

    #[test]
    fn stderr_scales_with_sample_count() {
        let xs: Vec<f64> = (0..4000).map(|i| (i % 7) as f64).collect();
        let a = Moments::from_slice(&xs[..1000]).stderr();
        let b = Moments::from_slice(&xs).stderr();
        assert!((a / b - 2.0).abs() < 0.05);
    }
}
