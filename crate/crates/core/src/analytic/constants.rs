//! Reference constants.

use std::f64::consts::PI;

/// Bounds on the growth rate of the meander numbers `R_k`.
pub const R_LOWER: f64 = 11.380;
pub const R_UPPER: f64 = 12.901;
/// Conjectured growth rate of `R_k`.
pub const LANDO_ZVONKIN_R: f64 = 12.26;
/// `16 / R_UPPER`, the decay base of cluster-cycle counts.
pub const GAMMA_CLUSTER: f64 = 1.2402;
/// Coefficient of the logarithmic lower bound on the mean largest cycle.
pub const C_LARGEST_BOUND: f64 = 0.8384;
pub const ZETA2: f64 = PI * PI / 6.0;
pub const ZETA3: f64 = 1.202_056_903_159_594_3;
/// `2 / pi - 1 / 2`, the ring density.
pub const RING_CONST: f64 = 2.0 / PI - 0.5;
/// Ringlet density `1 / 8` and staple density `1 / 32`.
pub const RINGLET_CONST: f64 = 0.125;
pub const STAPLE_CONST: f64 = 1.0 / 32.0;
/// Empirical mean and standard deviation scale of the cycle count.
pub const CYCLE_MEAN_CONST: f64 = 0.23;
pub const CYCLE_STD_CONST: f64 = 0.42;
/// Proper meander count on 28 points.
pub const R_14: u64 = 61_606_881_612;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_values() {
        assert!((RING_CONST - 0.136_619_772_4).abs() < 1e-10);
        assert!((16.0 / R_UPPER - GAMMA_CLUSTER).abs() < 1e-4);
        assert!((ZETA2 - 1.644_934_066_848_226_4).abs() < 1e-15);
    }
}
