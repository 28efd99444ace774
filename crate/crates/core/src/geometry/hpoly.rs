use std::fmt;

use num::{One, Zero};

use super::convert::{h_to_v, v_to_h};
use super::inequality::{variable_names, LinearInequality};
use super::lp::{self, LpOutcome, Sense};
use super::rational::{dot, neg, zeros, Rational, Vector};
use super::vpoly::VPolyhedron;
use crate::error::{Error, Result};

/// A polyhedron in inequality form `{z in R^d : a_i·z >= b_i}`.
///
/// Rows are normalized, deduplicated and sorted on construction. Constant rows
/// are folded away: trivially true ones are dropped and a contradiction turns
/// the whole system into the canonical empty row `0 >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPolyhedron {
    dim: usize,
    rows: Vec<LinearInequality>,
}

impl HPolyhedron {
    pub fn new(dim: usize, rows: Vec<LinearInequality>) -> Self {
        for r in &rows {
            assert_eq!(r.dim(), dim, "inequality dimension does not match polyhedron");
        }
        if rows.iter().any(LinearInequality::is_contradiction) {
            return Self::empty(dim);
        }
        let mut rows: Vec<LinearInequality> = rows.into_iter().filter(|r| !r.is_trivial()).collect();
        rows.sort();
        rows.dedup();
        HPolyhedron { dim, rows }
    }

    /// Convenience constructor from integer rows `[a_1, ..., a_d, rhs]`.
    pub fn from_integer_rows(dim: usize, rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), dim + 1);
                let v = super::rational::ivec(r);
                LinearInequality::new(v[..dim].to_vec(), v[dim].clone())
            })
            .collect();
        Self::new(dim, rows)
    }

    pub fn universe(dim: usize) -> Self {
        HPolyhedron { dim, rows: Vec::new() }
    }

    pub fn empty(dim: usize) -> Self {
        HPolyhedron {
            dim,
            rows: vec![LinearInequality::new(zeros(dim), Rational::one())],
        }
    }

    /// The cone `{0}`.
    pub fn origin(dim: usize) -> Self {
        let mut rows = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            let e = super::rational::unit(dim, k);
            rows.push(LinearInequality::homogeneous(neg(&e)));
            rows.push(LinearInequality::homogeneous(e));
        }
        Self::new(dim, rows)
    }

    pub fn nonnegative_orthant(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|k| LinearInequality::homogeneous(super::rational::unit(dim, k)))
            .collect();
        Self::new(dim, rows)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[LinearInequality] {
        &self.rows
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rows.iter().all(LinearInequality::is_homogeneous)
    }

    /// True when the rows are syntactically the canonical empty system.
    fn is_marked_empty(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_contradiction()
    }

    pub fn contains_point(&self, z: &[Rational]) -> bool {
        self.rows.iter().all(|r| r.is_satisfied_by(z))
    }

    pub(crate) fn lp_rows(&self) -> Vec<(Vector, Rational)> {
        self.rows
            .iter()
            .map(|r| (r.coefficients().to_vec(), r.rhs().clone()))
            .collect()
    }

    pub fn optimize(&self, objective: &[Rational], sense: Sense) -> LpOutcome {
        assert_eq!(objective.len(), self.dim);
        lp::solve(&self.lp_rows(), self.dim, objective, sense)
    }

    pub fn feasible_point(&self) -> Option<Vector> {
        self.optimize(&zeros(self.dim), Sense::Minimize).feasible_point().cloned()
    }

    pub fn is_empty(&self) -> bool {
        if self.is_marked_empty() {
            return true;
        }
        if self.is_homogeneous() {
            return false;
        }
        self.optimize(&zeros(self.dim), Sense::Minimize).is_infeasible()
    }

    /// Drops rows implied by the remaining ones, one LP per row.
    pub fn remove_redundant(&self) -> HPolyhedron {
        if self.is_empty() {
            return Self::empty(self.dim);
        }
        let mut keep: Vec<LinearInequality> = self.rows.clone();
        let mut i = 0;
        while i < keep.len() {
            let candidate = keep[i].clone();
            let others: Vec<(Vector, Rational)> = keep
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, r)| (r.coefficients().to_vec(), r.rhs().clone()))
                .collect();
            let redundant = match lp::solve(&others, self.dim, candidate.coefficients(), Sense::Minimize) {
                LpOutcome::Optimal { value, .. } => value >= *candidate.rhs(),
                LpOutcome::Unbounded { .. } => false,
                LpOutcome::Infeasible => unreachable!("subsystem of a feasible system"),
            };
            if redundant {
                keep.remove(i);
            } else {
                i += 1;
            }
        }
        HPolyhedron { dim: self.dim, rows: keep }
    }

    /// Canonical irredundant description; equal sets give equal values.
    pub fn minimal(&self) -> HPolyhedron {
        v_to_h(&h_to_v(self))
    }

    pub fn to_v(&self) -> VPolyhedron {
        h_to_v(self)
    }

    pub fn recession_cone(&self) -> Result<HPolyhedron> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        Ok(HPolyhedron::new(
            self.dim,
            self.rows.iter().map(|r| r.with_rhs(Rational::zero())).collect(),
        ))
    }

    /// Point reflection `{-z : z in self}`.
    pub fn reflected(&self) -> HPolyhedron {
        HPolyhedron::new(
            self.dim,
            self.rows
                .iter()
                .map(|r| LinearInequality::new(neg(r.coefficients()), r.rhs().clone()))
                .collect(),
        )
    }

    pub fn intersect(&self, other: &HPolyhedron) -> HPolyhedron {
        assert_eq!(self.dim, other.dim);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        HPolyhedron::new(self.dim, rows).remove_redundant()
    }

    /// Whether every generator of `inner` lies in `self`.
    pub fn contains(&self, inner: &VPolyhedron) -> bool {
        assert_eq!(self.dim, inner.dim());
        if inner.is_empty() {
            return true;
        }
        self.rows.iter().all(|r| {
            inner.points().iter().all(|p| r.is_satisfied_by(p))
                && inner.rays().iter().all(|d| r.admits_direction(d))
                && inner.lines().iter().all(|l| dot(r.coefficients(), l).is_zero())
        })
    }

    pub fn contains_set(&self, inner: &HPolyhedron) -> bool {
        self.contains(&h_to_v(inner))
    }

    pub fn set_equal(&self, other: &HPolyhedron) -> bool {
        self.contains(&h_to_v(other)) && other.contains(&h_to_v(self))
    }

    /// `self ⊋ inner`, decided by containment plus one LP per row of `inner`'s
    /// minimal description.
    pub fn strictly_contains(&self, inner: &HPolyhedron) -> bool {
        if !self.contains_set(inner) {
            return false;
        }
        if self.is_empty() {
            return false;
        }
        let inner_min = inner.minimal();
        inner_min.rows.iter().any(|row| match self.optimize(row.coefficients(), Sense::Minimize) {
            LpOutcome::Optimal { value, .. } => value < *row.rhs(),
            LpOutcome::Unbounded { .. } => true,
            LpOutcome::Infeasible => false,
        })
    }

    /// Lineality space as the subset `{0} + span(lines)`.
    pub fn lineality_space(&self) -> Result<VPolyhedron> {
        if self.is_empty() {
            return Err(Error::EmptyPolyhedron);
        }
        let normals: Vec<Vector> = self.rows.iter().map(|r| r.coefficients().to_vec()).collect();
        let lines = super::linalg::null_space(&normals, self.dim);
        Ok(VPolyhedron::new(self.dim, vec![zeros(self.dim)], Vec::new(), lines))
    }

    /// Coordinate projection onto `keep` (sorted, deduplicated) by
    /// Fourier–Motzkin elimination.
    pub fn project(&self, keep: &[usize]) -> HPolyhedron {
        super::project::fourier_motzkin(self, keep)
    }

    /// Embeds the rows into `R^total`, placing coordinate `k` at `offset + k`.
    pub fn embed(&self, total: usize, offset: usize) -> Vec<LinearInequality> {
        assert!(offset + self.dim <= total);
        self.rows
            .iter()
            .map(|r| {
                let mut c = zeros(total);
                for (k, a) in r.coefficients().iter().enumerate() {
                    c[offset + k] = a.clone();
                }
                LinearInequality::new(c, r.rhs().clone())
            })
            .collect()
    }

    pub fn describe(&self, prefix: &str) -> String {
        let names = variable_names(prefix, self.dim);
        if self.rows.is_empty() {
            return format!("R^{}", self.dim);
        }
        let rows: Vec<String> = self.rows.iter().map(|r| r.display_with(&names).to_string()).collect();
        format!("{{ {} }}", rows.join(", "))
    }
}

impl fmt::Display for HPolyhedron {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe("z"))
    }
}
