//! Small worked instances used throughout the tests and shipped as CLI
//! fixture files.

use crate::cone::OrderingCone;
use crate::geometry::rational::ivec;
use crate::geometry::{HPolyhedron, VPolyhedron};
use crate::mapping::PolyMapping;

/// `gr F = {x1 >= 0, x2 >= 0, y2 >= x2, x2 + y1 >= 0, x1 + 2x2 + y1 >= y2}`.
/// The graph is a cone, `G(0) ⊊ K ⊊ G(R^2)`.
pub fn wedge_mapping() -> PolyMapping {
    let graph = HPolyhedron::from_integer_rows(
        4,
        &[
            &[1, 0, 0, 0, 0],
            &[0, 1, 0, 0, 0],
            &[0, -1, 0, 1, 0],
            &[0, 1, 1, 0, 0],
            &[1, 2, 1, -1, 0],
        ],
    );
    PolyMapping::from_graph(2, 2, graph)
}

/// Generators of a graph cone in `R^2 × R^2` whose kernel directions matter
/// for the kernel-aware solution concept.
pub fn kernel_graph_generators() -> VPolyhedron {
    VPolyhedron::cone(
        4,
        vec![
            ivec(&[1, 0, 2, -1]),
            ivec(&[1, 0, 0, 0]),
            ivec(&[0, 1, -1, 2]),
            ivec(&[0, 0, 1, 0]),
            ivec(&[0, 0, 0, 1]),
        ],
        vec![],
    )
}

pub fn kernel_mapping() -> PolyMapping {
    PolyMapping::from_graph(2, 2, kernel_graph_generators().to_h())
}

pub fn orthant(dim: usize) -> OrderingCone {
    OrderingCone::nonnegative_orthant(dim)
}
