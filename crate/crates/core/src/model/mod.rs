//! Value types shared by every other module.

mod dyck;
mod pairing;
mod rainbow;
mod system;
mod tree;

pub(crate) use dyck::cycle_lemma_offset;
pub use dyck::DyckPath;
pub use pairing::{validate_pairing, Pairing};
pub use rainbow::RainbowSpec;
pub use system::{deserialize, read_jsonl, serialize, write_jsonl, MeanderSystem};
pub use tree::PlanarTree;
