//! Exact random generators for every family of meander systems.

mod families;
mod sg;
mod uniform;
mod weights;

pub use families::{
    rainbow_meander, sample_comb_meander, sample_composition, sample_rainbow_meander,
    sample_rainbow_spec, sample_relaxed_rainbow, sample_relaxed_rainbow_spec, sample_semimeander,
};
pub use sg::{sample_sg_meander, sample_sg_tree, SgMeanderSampler, SgTreeSampler};
pub use uniform::{sample_uniform_dyck, sample_uniform_meander, sample_uniform_pairing};
pub use weights::WeightSequence;
