//! Cycle decomposition of meander systems and cycle-level statistics.

mod decompose;
pub mod oracle;
mod rainbow;
mod special;

pub use decompose::{
    count_cycles, decompose, half_length_histogram, largest_cycle, largest_half_length,
    shape_permutation, spacings, summarize, Cycle, CycleDecomposition, CycleSummary,
};
pub use rainbow::rainbow_cycle_count;
pub use special::{special_counts, SpecialCounts};
