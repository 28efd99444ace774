//! Polyhedral convex set-valued mappings `F : R^n ⇉ R^q`, stored through the
//! inequality description `A x + B y >= b` of their graph.

use std::fmt;

use num::Zero;

use crate::cone::OrderingCone;
use crate::error::{Error, Result};
use crate::geometry::inequality::variable_names;
use crate::geometry::rational::{dot, neg, zeros};
use crate::geometry::{HPolyhedron, LinearInequality, Rational, Vector};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyMapping {
    n: usize,
    q: usize,
    graph: HPolyhedron,
}

impl PolyMapping {
    /// Rows are over `(x, y)`, so each has `n + q` coefficients.
    pub fn new(n: usize, q: usize, rows: Vec<LinearInequality>) -> Self {
        PolyMapping {
            n,
            q,
            graph: HPolyhedron::new(n + q, rows),
        }
    }

    pub fn from_graph(n: usize, q: usize, graph: HPolyhedron) -> Self {
        assert_eq!(graph.dim(), n + q);
        PolyMapping { n, q, graph }
    }

    /// Builds the graph `{(x, y) : A x + B y >= b}`.
    pub fn from_blocks(n: usize, q: usize, a: &[Vector], b: &[Vector], rhs: &[Rational]) -> Result<Self> {
        if a.len() != b.len() || a.len() != rhs.len() {
            return Err(Error::DimensionMismatch {
                expected: a.len(),
                found: b.len().min(rhs.len()),
            });
        }
        let mut rows = Vec::with_capacity(a.len());
        for ((ar, br), r) in a.iter().zip(b).zip(rhs) {
            if ar.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: ar.len() });
            }
            if br.len() != q {
                return Err(Error::DimensionMismatch { expected: q, found: br.len() });
            }
            let mut c = ar.clone();
            c.extend(br.iter().cloned());
            rows.push(LinearInequality::new(c, r.clone()));
        }
        Ok(Self::new(n, q, rows))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn graph(&self) -> &HPolyhedron {
        &self.graph
    }

    pub fn x_part<'a>(&self, row: &'a LinearInequality) -> &'a [Rational] {
        &row.coefficients()[..self.n]
    }

    pub fn y_part<'a>(&self, row: &'a LinearInequality) -> &'a [Rational] {
        &row.coefficients()[self.n..]
    }

    fn x_coords(&self) -> Vec<usize> {
        (0..self.n).collect()
    }

    fn y_coords(&self) -> Vec<usize> {
        (self.n..self.n + self.q).collect()
    }

    fn require_nonempty_graph(&self) -> Result<()> {
        if self.graph.is_empty() {
            Err(Error::EmptyGraph)
        } else {
            Ok(())
        }
    }

    fn check_x(&self, x: &[Rational]) -> Result<()> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        Ok(())
    }

    /// The mapping `G` with `gr G = 0⁺ gr F`.
    pub fn recession_mapping(&self) -> Result<PolyMapping> {
        let graph = self.graph.recession_cone().map_err(|_| Error::EmptyGraph)?;
        Ok(PolyMapping { n: self.n, q: self.q, graph })
    }

    /// `F(x) = {y : B y >= b - A x}`; empty exactly when `x ∉ dom F`.
    pub fn value(&self, x: &[Rational]) -> HPolyhedron {
        assert_eq!(x.len(), self.n, "argument dimension");
        let rows = self
            .graph
            .rows()
            .iter()
            .map(|r| {
                let shift = dot(self.x_part(r), x);
                LinearInequality::new(self.y_part(r).to_vec(), r.rhs() - shift)
            })
            .collect();
        HPolyhedron::new(self.q, rows)
    }

    pub fn checked_value(&self, x: &[Rational]) -> Result<HPolyhedron> {
        self.check_x(x)?;
        Ok(self.value(x))
    }

    pub fn in_domain(&self, x: &[Rational]) -> bool {
        x.len() == self.n && !self.value(x).is_empty()
    }

    pub fn domain(&self) -> HPolyhedron {
        self.graph.project(&self.x_coords())
    }

    /// Projection of the graph onto the image coordinates, `⋃ₓ F(x)`.
    pub fn image(&self) -> HPolyhedron {
        self.graph.project(&self.y_coords())
    }

    /// `G(0)`, the common recession cone of all nonempty values.
    pub fn g_zero(&self) -> Result<OrderingCone> {
        let g = self.recession_mapping()?;
        OrderingCone::from_polyhedron(g.value(&zeros(self.n)))
    }

    /// `G(R^n) = ⋃ₓ G(x)`.
    pub fn image_cone(&self) -> Result<OrderingCone> {
        let g = self.recession_mapping()?;
        OrderingCone::from_polyhedron(g.image())
    }

    /// `K = {y : ∃x, y ∈ G(x), 0 ∈ G(x)}`, projected from
    /// `{(x, y) : A x + B y >= 0, A x >= 0}`.
    pub fn natural_cone(&self) -> Result<OrderingCone> {
        self.require_nonempty_graph()?;
        let dim = self.n + self.q;
        let mut rows = Vec::with_capacity(2 * self.graph.rows().len());
        for r in self.graph.rows() {
            rows.push(LinearInequality::homogeneous(r.coefficients().to_vec()));
            let mut c = self.x_part(r).to_vec();
            c.extend(zeros(self.q));
            rows.push(LinearInequality::homogeneous(c));
        }
        let system = HPolyhedron::new(dim, rows);
        OrderingCone::from_polyhedron(system.project(&self.y_coords()))
    }

    /// `ker F = {x : 0 ∈ G(x)} = {x : A x >= 0}`.
    pub fn algebraic_kernel(&self) -> Result<HPolyhedron> {
        self.require_nonempty_graph()?;
        let rows = self
            .graph
            .rows()
            .iter()
            .map(|r| LinearInequality::homogeneous(self.x_part(r).to_vec()))
            .collect();
        Ok(HPolyhedron::new(self.n, rows))
    }

    /// `F_C(x) = F(x) + C`, built over `(x, y, c)` with `c ∈ C` and then
    /// projected back onto `(x, y)`.
    pub fn augment_with_cone(&self, cone: &OrderingCone) -> Result<PolyMapping> {
        if cone.dim() != self.q {
            return Err(Error::DimensionMismatch { expected: self.q, found: cone.dim() });
        }
        let (n, q) = (self.n, self.q);
        let dim = n + 2 * q;
        let mut rows = Vec::new();
        for r in self.graph.rows() {
            // A x + B y - B c >= b
            let mut c = r.coefficients().to_vec();
            c.extend(neg(self.y_part(r)));
            rows.push(LinearInequality::new(c, r.rhs().clone()));
        }
        rows.extend(cone.as_polyhedron().embed(dim, n + q));
        let lifted = HPolyhedron::new(dim, rows);
        let keep: Vec<usize> = (0..n + q).collect();
        Ok(PolyMapping {
            n,
            q,
            graph: lifted.project(&keep),
        })
    }

    /// `F̂(x, u) = {u} + G(0)` if `u ∈ F(x)`, else empty. The graph lives over
    /// `(x, u, y)`: `(x, u) ∈ gr F` and `B (y - u) >= 0`.
    pub fn vectorial_relaxation(&self) -> Result<PolyMapping> {
        self.require_nonempty_graph()?;
        let (n, q) = (self.n, self.q);
        let dim = n + 2 * q;
        let mut rows: Vec<LinearInequality> = self.graph.embed(dim, 0);
        for r in self.graph.rows() {
            let by = self.y_part(r);
            if by.iter().all(Zero::is_zero) {
                continue;
            }
            let mut c = zeros(n);
            c.extend(neg(by));
            c.extend(by.iter().cloned());
            rows.push(LinearInequality::homogeneous(c));
        }
        Ok(PolyMapping::new(n + q, q, rows))
    }

    pub fn variable_names(&self) -> Vec<String> {
        let mut names = variable_names("x", self.n);
        names.extend(variable_names("y", self.q));
        names
    }

    pub fn describe_graph(&self) -> String {
        let names = self.variable_names();
        if self.graph.rows().is_empty() {
            return format!("R^{}", self.n + self.q);
        }
        let rows: Vec<String> = self
            .graph
            .rows()
            .iter()
            .map(|r| r.display_with(&names).to_string())
            .collect();
        format!("{{ {} }}", rows.join(", "))
    }
}

impl fmt::Display for PolyMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F: R^{} => R^{} with graph {}", self.n, self.q, self.describe_graph())
    }
}
