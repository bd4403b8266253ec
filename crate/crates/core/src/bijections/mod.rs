//! Maps between trees, Dyck paths, pairings and non-crossing partitions.

mod contour;
mod partition;

pub use contour::{
    comb_pairing, dyck_to_pairing, dyck_to_tree, pairing_to_dyck, rainbow_pairing, tree_to_dyck,
    tree_to_pairing,
};
pub(crate) use contour::{pairing_from_steps, pairing_from_tree_unchecked};
pub use partition::{
    comb_meander_to_ncpartition, ncpartition_to_comb_meander, ncpartition_to_tree,
    tree_to_ncpartition, NCPartition,
};
