use crate::cone::OrderingCone;
use crate::error::{Error, Result};
use crate::geometry::rational::zeros;
use crate::geometry::{HPolyhedron, LinearInequality, Rational, VPolyhedron, Vector};
use crate::mapping::PolyMapping;

/// `min F(x) + C` over `x ∈ R^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Problem {
    mapping: PolyMapping,
    cone: OrderingCone,
}

impl Problem {
    pub fn new(mapping: PolyMapping, cone: OrderingCone) -> Result<Self> {
        if cone.dim() != mapping.q() {
            return Err(Error::DimensionMismatch {
                expected: mapping.q(),
                found: cone.dim(),
            });
        }
        Ok(Problem { mapping, cone })
    }

    /// The problem with the smallest regular ordering cone `G(0)`.
    pub fn with_default_cone(mapping: PolyMapping) -> Result<Self> {
        let cone = mapping.g_zero()?;
        Ok(Problem { mapping, cone })
    }

    /// Embeds `min_C M x s.t. A x >= b` with objective `F(x) = {M x} + C` on
    /// `A x >= b`.
    pub fn from_vlp(m: &[Vector], a: &[Vector], b: &[Rational], cone: OrderingCone) -> Result<Self> {
        let q = cone.dim();
        if m.len() != q {
            return Err(Error::DimensionMismatch { expected: q, found: m.len() });
        }
        let n = m.first().map(Vec::len).or_else(|| a.first().map(Vec::len)).unwrap_or(0);
        for row in m.iter().chain(a) {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
        }
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch { expected: a.len(), found: b.len() });
        }
        let mut rows = Vec::new();
        for (ar, br) in a.iter().zip(b) {
            let mut c = ar.clone();
            c.extend(zeros(q));
            rows.push(LinearInequality::new(c, br.clone()));
        }
        // c·(y - M x) >= 0 for every row c of C
        for cr in cone.rows() {
            let normal = cr.coefficients();
            let mut c: Vector = (0..n)
                .map(|j| -(0..q).fold(Rational::from_integer(0.into()), |acc, i| acc + &normal[i] * &m[i][j]))
                .collect();
            c.extend(normal.iter().cloned());
            rows.push(LinearInequality::homogeneous(c));
        }
        let mapping = PolyMapping::new(n, q, rows);
        Problem::new(mapping, cone)
    }

    pub fn mapping(&self) -> &PolyMapping {
        &self.mapping
    }

    pub fn cone(&self) -> &OrderingCone {
        &self.cone
    }

    pub fn with_cone(&self, cone: OrderingCone) -> Result<Problem> {
        Problem::new(self.mapping.clone(), cone)
    }

    pub fn is_feasible(&self) -> bool {
        !self.mapping.graph().is_empty()
    }

    /// `lin C ⊆ G(0) ⊆ C`.
    pub fn is_regular(&self) -> Result<bool> {
        is_regular(&self.cone, &self.mapping)
    }

    /// `G(0) + C`.
    pub fn regularized_cone(&self) -> Result<OrderingCone> {
        regularize(&self.cone, &self.mapping)
    }

    /// Errors unless the problem is feasible and its cone regular.
    pub fn require_regular(&self) -> Result<()> {
        if !self.is_feasible() {
            return Err(Error::Infeasible);
        }
        if !self.is_regular()? {
            return Err(Error::NotRegular {
                suggested: self.regularized_cone()?.describe(),
            });
        }
        Ok(())
    }

    /// `P = C + ⋃ₓ F(x)`, from the projected generators of the graph.
    pub fn upper_image(&self) -> Result<HPolyhedron> {
        if !self.is_feasible() {
            return Err(Error::Infeasible);
        }
        let (n, q) = (self.mapping.n(), self.mapping.q());
        let keep: Vec<usize> = (n..n + q).collect();
        let image = self.mapping.graph().to_v().project(&keep);
        Ok(add_cone(&image, &self.cone).to_h())
    }

    /// `Q = C + ⋃ₓ G(x)`.
    pub fn upper_image_homog(&self) -> Result<OrderingCone> {
        if !self.is_feasible() {
            return Err(Error::Infeasible);
        }
        Ok(self.mapping.image_cone()?.sum(&self.cone))
    }
}

/// `gens + C` in generator form.
pub(crate) fn add_cone(gens: &VPolyhedron, cone: &OrderingCone) -> VPolyhedron {
    let c = cone.generators();
    let rays = gens.rays().iter().chain(c.rays()).cloned().collect();
    let lines = gens.lines().iter().chain(c.lines()).cloned().collect();
    VPolyhedron::new(gens.dim(), gens.points().to_vec(), rays, lines)
}

pub fn is_regular(cone: &OrderingCone, mapping: &PolyMapping) -> Result<bool> {
    if cone.dim() != mapping.q() {
        return Err(Error::DimensionMismatch { expected: mapping.q(), found: cone.dim() });
    }
    let g0 = mapping.g_zero()?;
    Ok(g0.as_polyhedron().contains(&cone.lineality()) && cone.contains_cone(&g0))
}

pub fn regularize(cone: &OrderingCone, mapping: &PolyMapping) -> Result<OrderingCone> {
    if cone.dim() != mapping.q() {
        return Err(Error::DimensionMismatch { expected: mapping.q(), found: cone.dim() });
    }
    Ok(mapping.g_zero()?.sum(cone))
}
