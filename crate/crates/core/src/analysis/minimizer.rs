//! Minimality of points and directions.
//!
//! `x̄` is dominated when some `x` has `F(x) + C ⊋ F(x̄) + C`. All nonempty
//! values `F(x) + C` share the recession cone `G(0) + C`, so containment only
//! needs the vertices `v_j` of `Y = F(x̄) + C`: `x` must admit `w_j ∈ F(x)`
//! with `v_j - w_j ∈ C`. Strictness asks for a point `g + d`, `g ∈ F(x)`,
//! `d ∈ C`, violating some row of `Y`.

use num::Zero;

use super::system::LpSystem;
use crate::cone::OrderingCone;
use crate::error::{Error, Result};
use crate::geometry::rational::{dot, is_zero, neg};
use crate::geometry::{HPolyhedron, Rational, Vector};
use crate::mapping::PolyMapping;
use crate::problem::{add_cone, Problem};

/// `F(x) + C` of a mapping at a point of its domain.
pub(crate) fn shifted_value(mapping: &PolyMapping, x: &[Rational], cone: &OrderingCone) -> HPolyhedron {
    add_cone(&mapping.value(x).to_v(), cone).to_h()
}

/// Some `x` with `F(x) + C ⊋ target`, where `target = F(x̄) + C` for a point
/// `x̄` of the domain.
pub(crate) fn find_dominator(mapping: &PolyMapping, target: &HPolyhedron, cone: &OrderingCone) -> Option<Vector> {
    let (n, q) = (mapping.n(), mapping.q());
    let target = target.minimal();
    if target.rows().is_empty() {
        return None;
    }
    let vertices = target.to_v().points().to_vec();
    let nv = vertices.len();
    let og = n + nv * q;
    let od = og + q;
    let mut sys = LpSystem::new(od + q);
    for (j, v) in vertices.iter().enumerate() {
        let ow = n + j * q;
        for r in mapping.graph().rows() {
            sys.push(&[(0, mapping.x_part(r)), (ow, mapping.y_part(r))], r.rhs().clone());
        }
        for c in cone.rows() {
            let minus = neg(c.coefficients());
            let bound = -dot(c.coefficients(), v);
            sys.push(&[(ow, &minus)], bound);
        }
    }
    for r in mapping.graph().rows() {
        sys.push(&[(0, mapping.x_part(r)), (og, mapping.y_part(r))], r.rhs().clone());
    }
    for c in cone.rows() {
        sys.push(&[(od, c.coefficients())], Rational::zero());
    }
    for row in target.rows() {
        let mut objective = vec![Rational::zero(); sys.dim()];
        for (k, h) in row.coefficients().iter().enumerate() {
            objective[og + k] = h.clone();
            objective[od + k] = h.clone();
        }
        if let Some(z) = sys.point_below(&objective, row.rhs()) {
            return Some(z[..n].to_vec());
        }
    }
    None
}

fn check_dims(problem: &Problem, v: &[Rational], relative_to: &OrderingCone) -> Result<()> {
    let f = problem.mapping();
    if v.len() != f.n() {
        return Err(Error::DimensionMismatch { expected: f.n(), found: v.len() });
    }
    if relative_to.dim() != f.q() {
        return Err(Error::DimensionMismatch { expected: f.q(), found: relative_to.dim() });
    }
    Ok(())
}

/// A point `x` with `F(x) + C' ⊋ F(x̄) + C'`, or `None` if `x̄` is a
/// `C'`-minimizer.
pub fn point_dominator(problem: &Problem, point: &[Rational], relative_to: &OrderingCone) -> Result<Option<Vector>> {
    check_dims(problem, point, relative_to)?;
    let f = problem.mapping();
    if !f.in_domain(point) {
        return Err(Error::NotInSet {
            role: "point",
            vector: point.to_vec(),
            set: "dom F",
        });
    }
    let target = shifted_value(f, point, relative_to);
    debug_assert!(target
        .recession_cone()
        .is_ok_and(|r| r.set_equal(f.g_zero().expect("nonempty graph").sum(relative_to).as_polyhedron())));
    Ok(find_dominator(f, &target, relative_to))
}

pub fn is_minimizing_point(problem: &Problem, point: &[Rational], relative_to: &OrderingCone) -> Result<bool> {
    Ok(point_dominator(problem, point, relative_to)?.is_none())
}

/// A direction `x` with `G(x) + C' ⊋ G(x̂) + C'`, or `None` if `x̂` is a
/// minimizing direction.
pub fn direction_dominator(
    problem: &Problem,
    direction: &[Rational],
    relative_to: &OrderingCone,
) -> Result<Option<Vector>> {
    check_dims(problem, direction, relative_to)?;
    if is_zero(direction) {
        return Err(Error::ZeroDirection);
    }
    let g = problem.mapping().recession_mapping()?;
    if !g.in_domain(direction) {
        return Err(Error::NotInSet {
            role: "direction",
            vector: direction.to_vec(),
            set: "dom G",
        });
    }
    let target = shifted_value(&g, direction, relative_to);
    Ok(find_dominator(&g, &target, relative_to))
}

pub fn is_minimizing_direction(problem: &Problem, direction: &[Rational], relative_to: &OrderingCone) -> Result<bool> {
    Ok(direction_dominator(problem, direction, relative_to)?.is_none())
}
