//! Random meander systems: samplers, cycle statistics, exact oracles and a
//! Monte Carlo harness.
//!
//! Points on the line are numbered `0..2n`. A [`Pairing`] matches them with
//! non-crossing arcs; a [`MeanderSystem`] puts one pairing above the line
//! and one below, and its cycles are the connected components of the union.

pub mod analytic;
pub mod bijections;
pub mod cycles;
pub mod enumerate;
pub mod error;
pub mod harness;
pub mod model;
pub mod rng;
pub mod samplers;

pub use error::{Error, PairingError, Result};
pub use model::{
    deserialize, read_jsonl, serialize, validate_pairing, write_jsonl, DyckPath, MeanderSystem,
    Pairing, PlanarTree, RainbowSpec,
};
pub use rng::RngStream;
