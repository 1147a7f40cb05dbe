//! Balanced colorings of signed graphs with colors from `±[p]`.

// index loops read closer to the math in the LP and search code
#![allow(clippy::needless_range_loop)]

pub mod blocks;
pub mod color;
pub mod construct;
pub mod cycles;
pub mod error;
pub mod exact;
pub mod generate;
pub mod graph;

pub use color::{ColorSet, Coloring, DemandMap};
pub use error::{Error, Result};
pub use graph::{BalancedWitness, Sign, SignedGraph};
