//! Exact formulas, asymptotic constants and semi-analytic oracles.

mod blocks;
mod catalan;
pub mod constants;
mod expectations;
mod rainbow;
mod weights;

pub use blocks::{
    block_count_at_most, block_count_series, block_dist_gf, block_dist_series,
    characteristic_point, double_exp_law, CharacteristicPoint,
};
pub use catalan::{catalan, catalan_ratio, catalan_table, ln_biguint, log_catalan, p_arc};
pub use expectations::{
    catalan_ratio_expansion, expected_cluster_cycles, expected_ringlets, expected_ringlets_exact,
    expected_rings, expected_rings_exact, expected_staples, expected_staples_exact, to_f64,
};
pub use rainbow::{gcd_moments_exact, gcd_probability_exact, rainbow_gcd_law, rainbow_moments};
pub use weights::{psi, ringlet_bound_sg, theta, weight_analysis, WeightAnalysis};
