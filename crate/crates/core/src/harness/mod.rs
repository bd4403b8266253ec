//! Reproducible Monte Carlo experiments and the acceptance suite.

pub mod acceptance;
mod experiment;
mod family;
mod fit;
mod parallel;
mod stats;

pub use experiment::{
    gcd_law, run_experiment, spacing_histogram, spectrum_experiment, write_csv, write_jsonl,
    write_results, Experiment, ExperimentConfig, ExperimentResult, GcdTally, OutputFormat,
    SpectrumPoint, GCD_BATCH,
};
pub use family::{Family, FamilySampler};
pub use fit::{fit_linear, fit_power_law, LinearFit, PowerFit};
pub use parallel::{replicate_fold, replicate_fold_indexed, replicate_map, with_threads};
pub use stats::Moments;
