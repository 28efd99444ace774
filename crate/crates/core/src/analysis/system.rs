//! Block-structured LP systems over stacked variable groups.

use num::Zero;

use crate::geometry::lp::{self, LpOutcome, Sense};
use crate::geometry::rational::zeros;
use crate::geometry::{Rational, Vector};

pub(crate) struct LpSystem {
    dim: usize,
    rows: Vec<(Vector, Rational)>,
}

impl LpSystem {
    pub fn new(dim: usize) -> Self {
        LpSystem { dim, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Adds `Σ block·z[offset..] >= rhs`.
    pub fn push(&mut self, blocks: &[(usize, &[Rational])], rhs: Rational) {
        let mut c = zeros(self.dim);
        for &(offset, coeffs) in blocks {
            for (k, a) in coeffs.iter().enumerate() {
                if !a.is_zero() {
                    c[offset + k] += a;
                }
            }
        }
        self.rows.push((c, rhs));
    }

    pub fn extend_from(&mut self, other: &LpSystem) {
        assert_eq!(self.dim, other.dim);
        self.rows.extend(other.rows.iter().cloned());
    }

    pub fn minimize(&self, objective: &[Rational]) -> LpOutcome {
        lp::solve(&self.rows, self.dim, objective, Sense::Minimize)
    }

    pub fn feasible_point(&self) -> Option<Vector> {
        self.minimize(&zeros(self.dim)).feasible_point().cloned()
    }

    /// A feasible point whose objective is strictly below `bound`, if any.
    pub fn point_below(&self, objective: &[Rational], bound: &Rational) -> Option<Vector> {
        use crate::geometry::rational::{add, dot, scale};
        match self.minimize(objective) {
            LpOutcome::Optimal { value, point } if value < *bound => Some(point),
            LpOutcome::Unbounded { point, direction } => {
                let at = dot(objective, &point);
                let rate = -dot(objective, &direction);
                debug_assert!(rate > Rational::zero());
                let mut t = Rational::from_integer(1.into());
                if at >= *bound {
                    t += (at - bound) / rate;
                }
                Some(add(&point, &scale(&direction, &t)))
            }
            _ => None,
        }
    }
}
