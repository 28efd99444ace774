use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{HPolyhedron, LinearInequality, Rational, VPolyhedron, Vector};

/// A polyhedral convex cone `{y : c_i·y >= 0}` in image space, used as an
/// ordering cone.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderingCone {
    inner: HPolyhedron,
}

impl OrderingCone {
    pub fn new(dim: usize, normals: Vec<Vector>) -> Self {
        let rows = normals.into_iter().map(LinearInequality::homogeneous).collect();
        OrderingCone {
            inner: HPolyhedron::new(dim, rows),
        }
    }

    pub fn from_polyhedron(p: HPolyhedron) -> Result<Self> {
        if !p.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        Ok(OrderingCone { inner: p })
    }

    /// Cone generated by the rays and lines of `gens` (its points are ignored
    /// beyond making the set nonempty).
    pub fn generated_by(gens: &VPolyhedron) -> Self {
        let cone = VPolyhedron::cone(gens.dim(), gens.rays().to_vec(), gens.lines().to_vec());
        OrderingCone { inner: cone.to_h() }
    }

    pub fn zero(dim: usize) -> Self {
        OrderingCone {
            inner: HPolyhedron::origin(dim),
        }
    }

    pub fn full(dim: usize) -> Self {
        OrderingCone {
            inner: HPolyhedron::universe(dim),
        }
    }

    pub fn nonnegative_orthant(dim: usize) -> Self {
        OrderingCone {
            inner: HPolyhedron::nonnegative_orthant(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim()
    }

    pub fn as_polyhedron(&self) -> &HPolyhedron {
        &self.inner
    }

    pub fn rows(&self) -> &[LinearInequality] {
        self.inner.rows()
    }

    pub fn normals(&self) -> Vec<Vector> {
        self.rows().iter().map(|r| r.coefficients().to_vec()).collect()
    }

    pub fn generators(&self) -> VPolyhedron {
        self.inner.to_v()
    }

    pub fn minimal(&self) -> OrderingCone {
        OrderingCone {
            inner: self.inner.minimal(),
        }
    }

    pub fn contains_vector(&self, y: &[Rational]) -> bool {
        self.inner.contains_point(y)
    }

    pub fn contains_cone(&self, other: &OrderingCone) -> bool {
        self.inner.contains(&other.generators())
    }

    pub fn set_equal(&self, other: &OrderingCone) -> bool {
        self.inner.set_equal(&other.inner)
    }

    /// `self ⊋ other`.
    pub fn strictly_contains(&self, other: &OrderingCone) -> bool {
        self.contains_cone(other) && !other.contains_cone(self)
    }

    /// Minkowski sum, computed on generators.
    pub fn sum(&self, other: &OrderingCone) -> OrderingCone {
        assert_eq!(self.dim(), other.dim());
        let a = self.generators();
        let b = other.generators();
        let rays = a.rays().iter().chain(b.rays()).cloned().collect();
        let lines = a.lines().iter().chain(b.lines()).cloned().collect();
        OrderingCone {
            inner: VPolyhedron::cone(self.dim(), rays, lines).to_h(),
        }
    }

    /// `-C`.
    pub fn reflected(&self) -> OrderingCone {
        OrderingCone {
            inner: self.inner.reflected(),
        }
    }

    pub fn intersect(&self, other: &OrderingCone) -> OrderingCone {
        OrderingCone {
            inner: self.inner.intersect(&other.inner),
        }
    }

    /// `lin C = C ∩ (-C)` as `{0} + span(lines)`.
    pub fn lineality(&self) -> VPolyhedron {
        self.inner
            .lineality_space()
            .expect("cones are never empty")
    }

    pub fn describe(&self) -> String {
        self.inner.describe("y")
    }
}

impl fmt::Display for OrderingCone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
