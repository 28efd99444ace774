//! Finite infimizers and solution certificates, in the classic form
//! `(S̄, Ŝ)` and the kernel-aware form `(S̄, Ŝ, S̃)`.

use super::minimizer::{is_minimizing_direction, is_minimizing_point, shifted_value};
use crate::cone::OrderingCone;
use crate::error::{Error, Result};
use crate::geometry::rational::{add, format_vector, is_zero};
use crate::geometry::{Rational, VPolyhedron, Vector};
use crate::problem::Problem;

/// Points `S̄`, directions `Ŝ` and kernel directions `S̃`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionCandidate {
    points: Vec<Vector>,
    directions: Vec<Vector>,
    kernel_directions: Vec<Vector>,
}

impl SolutionCandidate {
    pub fn new(points: Vec<Vector>, directions: Vec<Vector>, kernel_directions: Vec<Vector>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::NoPoints);
        }
        Ok(SolutionCandidate {
            points,
            directions,
            kernel_directions,
        })
    }

    pub fn classic(points: Vec<Vector>, directions: Vec<Vector>) -> Result<Self> {
        Self::new(points, directions, Vec::new())
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn directions(&self) -> &[Vector] {
        &self.directions
    }

    pub fn kernel_directions(&self) -> &[Vector] {
        &self.kernel_directions
    }

    /// `(S̄, Ŝ ∪ S̃)` as a classic candidate.
    pub fn merged(&self) -> SolutionCandidate {
        let mut directions = self.directions.clone();
        for d in &self.kernel_directions {
            if !directions.contains(d) {
                directions.push(d.clone());
            }
        }
        SolutionCandidate {
            points: self.points.clone(),
            directions,
            kernel_directions: Vec::new(),
        }
    }

    fn all_directions(&self) -> impl Iterator<Item = &Vector> {
        self.directions.iter().chain(&self.kernel_directions)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementCheck {
    pub vector: Vector,
    pub minimizing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub infimizer: bool,
    /// The cone minimality was tested against.
    pub relative_to: OrderingCone,
    pub points: Vec<ElementCheck>,
    pub directions: Vec<ElementCheck>,
    pub kernel_directions: Vec<ElementCheck>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.infimizer
            && self
                .points
                .iter()
                .chain(&self.directions)
                .chain(&self.kernel_directions)
                .all(|e| e.minimizing)
    }

    /// One line per failed requirement.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.infimizer {
            out.push("not a finite infimizer: the upper image is not covered".to_string());
        }
        for (label, list) in [
            ("point", &self.points),
            ("direction", &self.directions),
            ("kernel direction", &self.kernel_directions),
        ] {
            for e in list.iter().filter(|e| !e.minimizing) {
                out.push(format!("{label} {} is not a minimizer", format_vector(&e.vector)));
            }
        }
        out
    }
}

fn validate_members(problem: &Problem, cand: &SolutionCandidate) -> Result<()> {
    let f = problem.mapping();
    for p in cand.points() {
        if p.len() != f.n() {
            return Err(Error::DimensionMismatch { expected: f.n(), found: p.len() });
        }
        if !f.in_domain(p) {
            return Err(Error::NotInSet {
                role: "point",
                vector: p.clone(),
                set: "dom F",
            });
        }
    }
    let g = f.recession_mapping()?;
    for d in cand.all_directions() {
        if d.len() != f.n() {
            return Err(Error::DimensionMismatch { expected: f.n(), found: d.len() });
        }
        if !g.in_domain(d) {
            return Err(Error::NotInSet {
                role: "direction",
                vector: d.clone(),
                set: "dom G",
            });
        }
    }
    Ok(())
}

/// `P ⊆ C + conv ⋃_{x̄ ∈ S̄} F(x̄) + cone ⋃_{x̂ ∈ Ŝ ∪ S̃} G(x̂)` with the
/// closed conic hull of the direction values.
pub fn is_finite_infimizer(problem: &Problem, cand: &SolutionCandidate) -> Result<bool> {
    if !problem.is_feasible() {
        return Err(Error::Infeasible);
    }
    validate_members(problem, cand)?;
    let f = problem.mapping();
    let g = f.recession_mapping()?;
    let (mut points, mut rays, mut lines) = (Vec::new(), Vec::new(), Vec::new());
    for x in cand.points() {
        let v = f.value(x).to_v();
        points.extend(v.points().iter().cloned());
        rays.extend(v.rays().iter().cloned());
        lines.extend(v.lines().iter().cloned());
    }
    for d in cand.all_directions() {
        let v = g.value(d).to_v();
        rays.extend(v.points().iter().filter(|p| !is_zero(p)).cloned());
        rays.extend(v.rays().iter().cloned());
        lines.extend(v.lines().iter().cloned());
    }
    let c = problem.cone().generators();
    rays.extend(c.rays().iter().cloned());
    lines.extend(c.lines().iter().cloned());
    let cover = VPolyhedron::new(f.q(), points, rays, lines).to_h();
    Ok(cover.contains(&problem.upper_image()?.to_v()))
}

fn element_checks(
    problem: &Problem,
    cand: &SolutionCandidate,
    relative_to: &OrderingCone,
) -> Result<(Vec<ElementCheck>, Vec<ElementCheck>, Vec<ElementCheck>)> {
    let mut points = Vec::new();
    for p in cand.points() {
        points.push(ElementCheck {
            vector: p.clone(),
            minimizing: is_minimizing_point(problem, p, relative_to)?,
        });
    }
    let dirs = |list: &[Vector]| -> Result<Vec<ElementCheck>> {
        list.iter()
            .map(|d| {
                Ok(ElementCheck {
                    vector: d.clone(),
                    minimizing: is_minimizing_direction(problem, d, relative_to)?,
                })
            })
            .collect()
    };
    Ok((points, dirs(cand.directions())?, dirs(cand.kernel_directions())?))
}

fn require_nonzero_directions(cand: &SolutionCandidate) -> Result<()> {
    if cand.all_directions().any(|d| is_zero(d)) {
        return Err(Error::ZeroDirection);
    }
    Ok(())
}

/// Classic certificate: a finite infimizer whose points and directions are
/// all `C`-minimizers.
pub fn check_solution(problem: &Problem, cand: &SolutionCandidate) -> Result<Verdict> {
    if !cand.kernel_directions().is_empty() {
        return Err(Error::ModeViolation(
            "classic solutions carry no separate kernel directions".to_string(),
        ));
    }
    problem.require_regular()?;
    require_nonzero_directions(cand)?;
    let infimizer = is_finite_infimizer(problem, cand)?;
    let cone = problem.cone().clone();
    let (points, directions, kernel_directions) = element_checks(problem, cand, &cone)?;
    Ok(Verdict {
        infimizer,
        relative_to: cone,
        points,
        directions,
        kernel_directions,
    })
}

/// Kernel-aware certificate: `(S̄, Ŝ ∪ S̃)` is a finite `C`-infimizer and every
/// element is a `(C + K)`-minimizer, with `Ŝ ∩ ker F = ∅` and `S̃ ⊆ ker F`.
pub fn check_solution_modified(problem: &Problem, cand: &SolutionCandidate) -> Result<Verdict> {
    problem.require_regular()?;
    require_nonzero_directions(cand)?;
    let f = problem.mapping();
    let ker = f.algebraic_kernel()?;
    for d in cand.directions() {
        if d.len() == f.n() && ker.contains_point(d) {
            return Err(Error::ModeViolation(format!(
                "direction {} lies in ker F and belongs to the kernel section",
                format_vector(d)
            )));
        }
    }
    for d in cand.kernel_directions() {
        if d.len() != f.n() || !ker.contains_point(d) {
            return Err(Error::ModeViolation(format!(
                "kernel direction {} is not in ker F",
                format_vector(d)
            )));
        }
    }
    let infimizer = is_finite_infimizer(problem, cand)?;
    let enlarged = problem.cone().sum(&f.natural_cone()?);
    let (points, directions, kernel_directions) = element_checks(problem, cand, &enlarged)?;
    Ok(Verdict {
        infimizer,
        relative_to: enlarged,
        points,
        directions,
        kernel_directions,
    })
}

/// For `x ∈ dom F` and `x̃ ∈ ker F`: returns whether `G(x̃) ⊄ C`. When it
/// does, `F(x + x̃) + C ⊋ F(x) + C` must hold and is verified here.
pub fn kernel_dominance(problem: &Problem, x: &[Rational], kernel_direction: &[Rational]) -> Result<bool> {
    problem.require_regular()?;
    let f = problem.mapping();
    if x.len() != f.n() || !f.in_domain(x) {
        return Err(Error::NotInSet {
            role: "point",
            vector: x.to_vec(),
            set: "dom F",
        });
    }
    let ker = f.algebraic_kernel()?;
    if kernel_direction.len() != f.n() || !ker.contains_point(kernel_direction) {
        return Err(Error::NotInSet {
            role: "direction",
            vector: kernel_direction.to_vec(),
            set: "ker F",
        });
    }
    let c = problem.cone();
    let g = f.recession_mapping()?;
    let escapes = !c.as_polyhedron().contains(&g.value(kernel_direction).to_v());
    if escapes {
        let moved = shifted_value(f, &add(x, kernel_direction), c);
        let base = shifted_value(f, x, c);
        if !moved.strictly_contains(&base) {
            return Err(Error::Internal(format!(
                "F(x + x̃) + C does not strictly contain F(x) + C at x = {}",
                format_vector(x)
            )));
        }
    }
    Ok(escapes)
}
