//! Construction, exact counting, saturation checks and exhaustive small-order
//! search for `K_s`-saturated graphs and the copies of small patterns they contain.

pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod count;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod pattern;
pub mod process;
pub mod saturation;
pub mod search;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
