//! Exhaustive small-size oracles.

mod distribution;
mod iter;
mod meanders;
mod partitions;

pub use distribution::{exact_distribution, ExactDistribution, Model, Statistic};
pub use iter::{all_dyck_paths, all_nc_pairings, all_planar_trees, DyckPaths, PAIRING_GUARD};
pub use meanders::{
    distinct_shapes, meander_number, meander_numbers, superadditivity_check, SuperadditivityReport,
    MEANDER_GUARD,
};
pub use partitions::{all_nc_partitions, PARTITION_GUARD};
