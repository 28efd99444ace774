use thiserror::Error;

use crate::geometry::Vector;
use crate::geometry::rational::format_vector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("operation requires a nonempty polyhedron")]
    EmptyPolyhedron,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the graph of the mapping is empty")]
    EmptyGraph,
    #[error("the problem is infeasible")]
    Infeasible,
    #[error("ordering cone is not regular for the mapping; G(0)+C = {suggested} would be")]
    NotRegular { suggested: String },
    #[error("{role} {} does not belong to {set}", format_vector(.vector))]
    NotInSet {
        role: &'static str,
        vector: Vector,
        set: &'static str,
    },
    #[error("a solution candidate needs at least one point")]
    NoPoints,
    #[error("directions must be nonzero")]
    ZeroDirection,
    #[error("candidate does not fit the solution mode: {0}")]
    ModeViolation(String),
    #[error("a cone needs homogeneous inequalities (zero right-hand side)")]
    NotHomogeneous,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
