//! Solvability verdicts: the line-free and natural-cone conditions, their
//! conjunction, and an existence oracle that does not go through them.

use std::fmt;

use num::One;

use super::system::LpSystem;
use crate::error::Result;
use crate::geometry::rational::neg;
use crate::geometry::Rational;
use crate::problem::Problem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailingCondition {
    Infeasible,
    /// `-C ∩ Q ⊆ C` is violated.
    LineFree,
    /// `C ⊇ K` is violated.
    NaturalCone,
}

impl FailingCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            FailingCondition::Infeasible => "infeasible",
            FailingCondition::LineFree => "line-free",
            FailingCondition::NaturalCone => "natural-cone",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            FailingCondition::Infeasible => "dom F nonempty",
            FailingCondition::LineFree => "-C ∩ Q ⊆ C",
            FailingCondition::NaturalCone => "C ⊇ K",
        }
    }
}

impl fmt::Display for FailingCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} condition ({})", self.as_str(), self.formula())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Solvability {
    pub solvable: bool,
    pub failing: Option<FailingCondition>,
}

/// `-C ∩ Q ⊆ C`.
pub fn condition_line_free(problem: &Problem) -> Result<bool> {
    problem.require_regular()?;
    let q = problem.upper_image_homog()?;
    let c = problem.cone();
    Ok(c.contains_cone(&c.reflected().intersect(&q)))
}

/// `C ⊇ K`.
pub fn condition_natural(problem: &Problem) -> Result<bool> {
    problem.require_regular()?;
    let k = problem.mapping().natural_cone()?;
    Ok(problem.cone().contains_cone(&k))
}

/// Feasibility, the line-free condition and the natural-cone condition, in
/// that order; the first one that fails is reported.
pub fn solvable(problem: &Problem) -> Result<Solvability> {
    if !problem.is_feasible() {
        return Ok(Solvability {
            solvable: false,
            failing: Some(FailingCondition::Infeasible),
        });
    }
    let failing = if !condition_line_free(problem)? {
        Some(FailingCondition::LineFree)
    } else if !condition_natural(problem)? {
        Some(FailingCondition::NaturalCone)
    } else {
        None
    };
    Ok(Solvability {
        solvable: failing.is_none(),
        failing,
    })
}

/// The vectorial relaxation is solvable exactly when the line-free condition
/// holds.
pub fn vr_solvable(problem: &Problem) -> Result<bool> {
    condition_line_free(problem)
}

/// Decides whether some `x` has `G(x) + C ⊋ C`, directly from the graph.
///
/// For each row `c_i` of `C` the system over `(x, y, g, d)`
///
/// ```text
/// A x + B y >= 0,  -y ∈ C,  A x + B g >= 0,  d ∈ C,  c_i·(g + d) <= -1
/// ```
///
/// is feasible iff such an `x` exists with a point of `G(x) + C` cutting
/// `c_i`; `y` certifies `0 ∈ G(x) + C` and hence `C ⊆ G(x) + C`. The problem
/// is solvable iff it is feasible and every system is infeasible.
pub fn solvable_oracle(problem: &Problem) -> Result<bool> {
    if !problem.is_feasible() {
        return Ok(false);
    }
    problem.require_regular()?;
    let f = problem.mapping();
    let (n, q) = (f.n(), f.q());
    let (ox, oy, og, od) = (0, n, n + q, n + 2 * q);
    let mut base = LpSystem::new(n + 3 * q);
    let zero = || Rational::from_integer(0.into());
    for r in f.graph().rows() {
        base.push(&[(ox, f.x_part(r)), (oy, f.y_part(r))], zero());
        base.push(&[(ox, f.x_part(r)), (og, f.y_part(r))], zero());
    }
    for c in problem.cone().rows() {
        let minus = neg(c.coefficients());
        base.push(&[(oy, &minus)], zero());
        base.push(&[(od, c.coefficients())], zero());
    }
    for c in problem.cone().rows() {
        let minus = neg(c.coefficients());
        let mut sys = LpSystem::new(base.dim());
        sys.extend_from(&base);
        sys.push(&[(og, &minus), (od, &minus)], Rational::one());
        if sys.feasible_point().is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}
