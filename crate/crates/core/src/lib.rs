//! Partial cubes, daisy cubes, τ-graphs and resonance graphs of plane
//! bipartite graphs.

pub mod daisy;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod graph;
pub mod iso;
pub mod labels;
pub mod partial_cube;
pub mod plane;
pub mod tau;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Color, Edge, Graph};
