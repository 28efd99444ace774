use std::fmt;

use super::convert::{h_to_v, v_to_h};
use super::hpoly::HPolyhedron;
use super::linalg::Subspace;
use super::rational::{add, format_vector, is_zero, primitive, Vector};
use crate::error::{Error, Result};

/// A polyhedron in generator form `conv(points) + cone(rays) + span(lines)`.
///
/// Construction canonicalizes: lines become an echelon basis, points and rays
/// are reduced modulo the lines, rays are scaled to primitive integer vectors,
/// and everything is sorted. An empty point set means the empty polyhedron.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VPolyhedron {
    dim: usize,
    points: Vec<Vector>,
    rays: Vec<Vector>,
    lines: Vec<Vector>,
}

impl VPolyhedron {
    pub fn new(dim: usize, points: Vec<Vector>, rays: Vec<Vector>, lines: Vec<Vector>) -> Self {
        for v in points.iter().chain(&rays).chain(&lines) {
            assert_eq!(v.len(), dim, "generator dimension does not match polyhedron");
        }
        if points.is_empty() {
            return Self::empty(dim);
        }
        let lines: Vec<Vector> = lines.into_iter().filter(|l| !is_zero(l)).collect();
        let span = Subspace::spanned_by(&lines, dim);
        let mut points: Vec<Vector> = points.iter().map(|p| span.reduce(p)).collect();
        points.sort();
        points.dedup();
        let mut rays: Vec<Vector> = rays
            .iter()
            .map(|r| primitive(&span.reduce(r)))
            .filter(|r| !is_zero(r))
            .collect();
        rays.sort();
        rays.dedup();
        VPolyhedron {
            dim,
            points,
            rays,
            lines: span.basis(),
        }
    }

    pub fn empty(dim: usize) -> Self {
        VPolyhedron {
            dim,
            points: Vec::new(),
            rays: Vec::new(),
            lines: Vec::new(),
        }
    }

    /// The cone generated by `rays` and `lines`.
    pub fn cone(dim: usize, rays: Vec<Vector>, lines: Vec<Vector>) -> Self {
        Self::new(dim, vec![vec![num::Zero::zero(); dim]], rays, lines)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    pub fn lines(&self) -> &[Vector] {
        &self.lines
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn to_h(&self) -> HPolyhedron {
        v_to_h(self)
    }

    /// Irredundant generators of the same set.
    pub fn minimal(&self) -> VPolyhedron {
        h_to_v(&v_to_h(self))
    }

    pub fn minkowski_sum(&self, other: &VPolyhedron) -> Result<VPolyhedron> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        let mut points = Vec::with_capacity(self.points.len() * other.points.len());
        for p in &self.points {
            for q in &other.points {
                points.push(add(p, q));
            }
        }
        let rays = self.rays.iter().chain(&other.rays).cloned().collect();
        let lines = self.lines.iter().chain(&other.lines).cloned().collect();
        Ok(VPolyhedron::new(self.dim, points, rays, lines).minimal())
    }

    /// Generators mapped through the coordinate projection onto `keep`.
    pub fn project(&self, keep: &[usize]) -> VPolyhedron {
        let pick = |v: &Vector| -> Vector { keep.iter().map(|&k| v[k].clone()).collect() };
        VPolyhedron::new(
            keep.len(),
            self.points.iter().map(pick).collect(),
            self.rays.iter().map(pick).collect(),
            self.lines.iter().map(pick).collect(),
        )
    }
}

impl fmt::Display for VPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty");
        }
        let list = |vs: &[Vector]| vs.iter().map(|v| format_vector(v)).collect::<Vec<_>>().join(", ");
        write!(f, "points [{}]", list(&self.points))?;
        if !self.rays.is_empty() {
            write!(f, " rays [{}]", list(&self.rays))?;
        }
        if !self.lines.is_empty() {
            write!(f, " lines [{}]", list(&self.lines))?;
        }
        Ok(())
    }
}

/// Closed conic hull of all points and rays (and lines) of `generators`, as
/// an H-polyhedron of dimension `dim`. The hull of nothing is `{0}`.
pub fn conic_hull(dim: usize, generators: &[VPolyhedron]) -> Result<HPolyhedron> {
    let mut rays = Vec::new();
    let mut lines = Vec::new();
    for g in generators {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: g.dim(),
            });
        }
        rays.extend(g.points().iter().cloned());
        rays.extend(g.rays().iter().cloned());
        lines.extend(g.lines().iter().cloned());
    }
    Ok(VPolyhedron::cone(dim, rays, lines).to_h())
}
