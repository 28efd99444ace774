//! Conversions between inequality and generator form through the
//! homogenization `{(t, z) : a·z - b t >= 0, t >= 0}`.

use num::{One, Signed, Zero};

use super::dd::cone_generators;
use super::hpoly::HPolyhedron;
use super::inequality::LinearInequality;
use super::linalg::Subspace;
use super::rational::{dot, neg, Rational, Vector};
use super::vpoly::VPolyhedron;

/// Generator form of an H-polyhedron. Generators are irredundant; the lines
/// span the lineality space.
pub fn h_to_v(p: &HPolyhedron) -> VPolyhedron {
    let d = p.dim();
    let mut constraints: Vec<Vector> = Vec::with_capacity(p.rows().len() + 1);
    let mut t_nonneg = vec![Rational::zero(); d + 1];
    t_nonneg[0] = Rational::one();
    constraints.push(t_nonneg);
    for r in p.rows() {
        let mut c = Vec::with_capacity(d + 1);
        c.push(-r.rhs().clone());
        c.extend(r.coefficients().iter().cloned());
        constraints.push(c);
    }
    let gens = cone_generators(d + 1, &constraints);
    let mut points = Vec::new();
    let mut rays = Vec::new();
    for g in gens.rays {
        let t = &g[0];
        if t.is_positive() {
            points.push(g[1..].iter().map(|x| x / t).collect());
        } else {
            rays.push(g[1..].to_vec());
        }
    }
    if points.is_empty() {
        return VPolyhedron::empty(d);
    }
    let lines = gens.lines.into_iter().map(|l| l[1..].to_vec()).collect();
    VPolyhedron::new(d, points, rays, lines)
}

/// Irredundant H-representation of a V-polyhedron. Implicit equalities appear
/// as row pairs `a·z >= b`, `-a·z >= -b`.
pub fn v_to_h(v: &VPolyhedron) -> HPolyhedron {
    let d = v.dim();
    if v.is_empty() {
        return HPolyhedron::empty(d);
    }
    let lift = |t: Rational, z: &Vector| -> Vector {
        let mut w = Vec::with_capacity(d + 1);
        w.push(t);
        w.extend(z.iter().cloned());
        w
    };
    let lifted_points: Vec<Vector> = v.points().iter().map(|p| lift(Rational::one(), p)).collect();
    let mut constraints: Vec<Vector> = lifted_points.clone();
    constraints.extend(v.rays().iter().map(|r| lift(Rational::zero(), r)));
    for l in v.lines() {
        let w = lift(Rational::zero(), l);
        constraints.push(neg(&w));
        constraints.push(w);
    }
    let dual = cone_generators(d + 1, &constraints);
    let equalities = Subspace::spanned_by(&dual.lines, d + 1);
    let to_row = |h: &Vector| LinearInequality::new(h[1..].to_vec(), -h[0].clone());

    let mut rows = Vec::new();
    for h in equalities.basis() {
        rows.push(to_row(&h));
        rows.push(to_row(&neg(&h)));
    }
    for h in &dual.rays {
        // the facet t >= 0 at infinity touches no point of the polyhedron
        if !lifted_points.iter().any(|p| dot(h, p).is_zero()) {
            continue;
        }
        rows.push(to_row(&equalities.reduce(h)));
    }
    HPolyhedron::new(d, rows)
}
