//! Exact analysis of polyhedral convex set optimization problems
//! `min F(x) + C` where the graph of `F` is a convex polyhedron.

pub mod analysis;
pub mod cone;
pub mod error;
pub mod geometry;
pub mod mapping;
pub mod fixtures;
pub mod problem;

pub use cone::OrderingCone;
pub use error::{Error, Result};
pub use mapping::PolyMapping;
pub use problem::Problem;
