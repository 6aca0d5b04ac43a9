//! Binomial edge ideals of graph families: constructions, the invariant `b(G)`,
//! closed-form Gröbner bases and Castelnuovo-Mumford regularity.

pub mod cli;
pub mod cm_block;
pub mod error;
pub mod families;
pub mod field;
pub mod graph;
pub mod groebner;
pub mod parallel;
pub mod regularity;
pub mod verify;

pub use error::{Error, Result};
pub use field::PrimeField;
pub use graph::Graph;
