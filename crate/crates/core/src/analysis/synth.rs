//! Constructing infimizers and solutions from the vertices and extreme rays
//! of the upper image.

use num::Zero;

use super::certify::{check_solution, check_solution_modified, SolutionCandidate, Verdict};
use super::conditions::{condition_line_free, solvable, FailingCondition};
use super::minimizer::{is_minimizing_direction, is_minimizing_point};
use super::system::LpSystem;
use crate::cone::OrderingCone;
use crate::error::{Error, Result};
use crate::geometry::rational::{dot, neg};
use crate::geometry::{Rational, Vector};
use crate::mapping::PolyMapping;
use crate::problem::Problem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolutionMode {
    /// `(S̄, Ŝ)`, minimality with respect to `C`.
    Classic,
    /// `(S̄, Ŝ, S̃)`, minimality with respect to `C + K`.
    Modified,
}

/// Some `x` with `target ∈ F(x) + C`, by LP feasibility over `(x, w)` with
/// `w ∈ F(x)` and `target - w ∈ C`.
fn lift(mapping: &PolyMapping, cone: &OrderingCone, target: &[Rational]) -> Option<Vector> {
    let (n, q) = (mapping.n(), mapping.q());
    let mut sys = LpSystem::new(n + q);
    for r in mapping.graph().rows() {
        sys.push(&[(0, mapping.x_part(r)), (n, mapping.y_part(r))], r.rhs().clone());
    }
    for c in cone.rows() {
        sys.push(&[(n, &neg(c.coefficients()))], -dot(c.coefficients(), target));
    }
    sys.feasible_point().map(|z| z[..n].to_vec())
}

fn push_unique(list: &mut Vec<Vector>, v: Vector) {
    if !list.contains(&v) {
        list.push(v);
    }
}

/// Lifts every vertex of the upper image to a point `x̄` and every extreme
/// direction outside `C` to a direction `x̂`. In modified mode directions in
/// `ker F` go to the kernel section.
pub fn synthesize_infimizer(problem: &Problem, mode: SolutionMode) -> Result<SolutionCandidate> {
    problem.require_regular()?;
    let f = problem.mapping();
    let g = f.recession_mapping()?;
    let c = problem.cone();
    let upper = problem.upper_image()?.to_v();

    let mut points = Vec::new();
    for v in upper.points() {
        let x = lift(f, c, v).ok_or_else(|| Error::Internal("vertex of the upper image not attained".into()))?;
        push_unique(&mut points, x);
    }
    let mut directions = Vec::new();
    let extreme = upper
        .rays()
        .iter()
        .cloned()
        .chain(upper.lines().iter().flat_map(|l| [l.clone(), neg(l)]));
    for r in extreme {
        if c.contains_vector(&r) {
            continue;
        }
        let x = lift(&g, c, &r).ok_or_else(|| Error::Internal("extreme direction not attained".into()))?;
        push_unique(&mut directions, x);
    }
    split_kernel(problem, points, directions, mode)
}

fn split_kernel(
    problem: &Problem,
    points: Vec<Vector>,
    directions: Vec<Vector>,
    mode: SolutionMode,
) -> Result<SolutionCandidate> {
    match mode {
        SolutionMode::Classic => SolutionCandidate::classic(points, directions),
        SolutionMode::Modified => {
            let ker = problem.mapping().algebraic_kernel()?;
            let (kernel, other): (Vec<Vector>, Vec<Vector>) =
                directions.into_iter().partition(|d| ker.contains_point(d));
            SolutionCandidate::new(points, other, kernel)
        }
    }
}

/// Replaces a lifted element by one that minimizes `Σ_h min{h·y : y ∈ F(x) + C'}`
/// over all `x` with `target ∈ F(x) + C`, the sum running over the image
/// normals of `gr F_{C'}`. Every facet normal of every `F(x) + C'` is among
/// them, so a strictly dominating `x` would lower the sum. Returns `None`
/// when the program is unbounded.
fn most_inclusive(
    covering: &PolyMapping,
    ordering: &PolyMapping,
    target: &[Rational],
) -> Option<Vector> {
    let (n, q) = (covering.n(), covering.q());
    let normals: Vec<Vector> = ordering
        .graph()
        .rows()
        .iter()
        .map(|r| ordering.y_part(r).to_vec())
        .filter(|h| h.iter().any(|x| !x.is_zero()))
        .collect();
    let dim = n + normals.len() * q;
    let mut sys = LpSystem::new(dim);
    for r in covering.graph().rows() {
        sys.push(&[(0, covering.x_part(r))], r.rhs() - dot(covering.y_part(r), target));
    }
    let mut objective = vec![Rational::zero(); dim];
    for (i, h) in normals.iter().enumerate() {
        let oy = n + i * q;
        for r in ordering.graph().rows() {
            sys.push(&[(0, ordering.x_part(r)), (oy, ordering.y_part(r))], r.rhs().clone());
        }
        for (k, hk) in h.iter().enumerate() {
            objective[oy + k] = hk.clone();
        }
    }
    match sys.minimize(&objective) {
        crate::geometry::LpOutcome::Optimal { point, .. } => Some(point[..n].to_vec()),
        _ => None,
    }
}

#[derive(Clone, Debug)]
pub enum SolveOutcome {
    Unsolvable {
        failing: FailingCondition,
        /// `C + K` when the natural-cone condition fails, with its regularity.
        suggested_cone: Option<(OrderingCone, bool)>,
    },
    Solved {
        candidate: SolutionCandidate,
        verdict: Verdict,
    },
}

/// Synthesizes an infimizer, pushes each element to a minimizer and
/// certifies the result.
pub fn solve(problem: &Problem, mode: SolutionMode) -> Result<SolveOutcome> {
    problem.require_regular()?;
    let f = problem.mapping();
    let c = problem.cone();
    match mode {
        SolutionMode::Classic => {
            let s = solvable(problem)?;
            if let Some(failing) = s.failing {
                let suggested_cone = if failing == FailingCondition::NaturalCone {
                    let enlarged = c.sum(&f.natural_cone()?);
                    let regular = crate::problem::is_regular(&enlarged, f)?;
                    Some((enlarged, regular))
                } else {
                    None
                };
                return Ok(SolveOutcome::Unsolvable { failing, suggested_cone });
            }
        }
        SolutionMode::Modified => {
            if !condition_line_free(problem)? {
                return Ok(SolveOutcome::Unsolvable {
                    failing: FailingCondition::LineFree,
                    suggested_cone: None,
                });
            }
        }
    }
    let relative_to = match mode {
        SolutionMode::Classic => c.clone(),
        SolutionMode::Modified => c.sum(&f.natural_cone()?),
    };
    let g = f.recession_mapping()?;
    let covering_f = f.augment_with_cone(c)?;
    let ordering_f = f.augment_with_cone(&relative_to)?;
    let covering_g = covering_f.recession_mapping()?;
    let ordering_g = ordering_f.recession_mapping()?;

    let upper = problem.upper_image()?.to_v();
    let mut points = Vec::new();
    for v in upper.points() {
        let seed = lift(f, c, v).ok_or_else(|| Error::Internal("vertex of the upper image not attained".into()))?;
        let x = most_inclusive(&covering_f, &ordering_f, v).unwrap_or(seed);
        if is_minimizing_point(problem, &x, &relative_to)? {
            push_unique(&mut points, x);
        }
    }
    let mut directions = Vec::new();
    let extreme = upper
        .rays()
        .iter()
        .cloned()
        .chain(upper.lines().iter().flat_map(|l| [l.clone(), neg(l)]));
    for r in extreme {
        if c.contains_vector(&r) {
            continue;
        }
        let seed = lift(&g, c, &r).ok_or_else(|| Error::Internal("extreme direction not attained".into()))?;
        let x = most_inclusive(&covering_g, &ordering_g, &r).unwrap_or(seed);
        if crate::geometry::rational::is_zero(&x) {
            continue;
        }
        if is_minimizing_direction(problem, &x, &relative_to)? {
            push_unique(&mut directions, x);
        }
    }
    if points.is_empty() {
        return Err(Error::Internal("no minimizing point found for any vertex".into()));
    }
    let candidate = split_kernel(problem, points, directions, mode)?;
    let verdict = match mode {
        SolutionMode::Classic => check_solution(problem, &candidate)?,
        SolutionMode::Modified => check_solution_modified(problem, &candidate)?,
    };
    Ok(SolveOutcome::Solved { candidate, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{kernel_mapping, orthant, wedge_mapping};
    use crate::geometry::rational::ivec;

    fn solved(outcome: SolveOutcome) -> (SolutionCandidate, Verdict) {
        match outcome {
            SolveOutcome::Solved { candidate, verdict } => (candidate, verdict),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn wedge_with_image_cone() {
        let f = wedge_mapping();
        let p = Problem::new(f.clone(), f.image_cone().unwrap()).unwrap();
        let raw = synthesize_infimizer(&p, SolutionMode::Classic).unwrap();
        assert_eq!(raw.points(), &[ivec(&[0, 0])]);
        assert!(raw.directions().is_empty());
        let (cand, verdict) = solved(solve(&p, SolutionMode::Classic).unwrap());
        assert!(verdict.passed());
        assert_eq!(cand.points(), &[ivec(&[0, 0])]);
        assert!(cand.directions().is_empty());
    }

    #[test]
    fn wedge_with_default_cone() {
        let f = wedge_mapping();
        let p = Problem::with_default_cone(f.clone()).unwrap();
        match solve(&p, SolutionMode::Classic).unwrap() {
            SolveOutcome::Unsolvable { failing, suggested_cone: Some((k, regular)) } => {
                assert_eq!(failing, FailingCondition::NaturalCone);
                assert!(k.set_equal(&f.natural_cone().unwrap()));
                assert!(regular);
            }
            other => panic!("{other:?}"),
        }
        let (cand, verdict) = solved(solve(&p, SolutionMode::Modified).unwrap());
        assert!(verdict.passed());
        assert_eq!(cand.points(), &[ivec(&[0, 0])]);
        assert_eq!(cand.directions(), &[ivec(&[0, 1])]);
        assert!(cand.kernel_directions().is_empty());
    }

    #[test]
    fn kernel_example_recovers_the_triple() {
        let p = Problem::new(kernel_mapping(), orthant(2)).unwrap();
        let raw = synthesize_infimizer(&p, SolutionMode::Modified).unwrap();
        assert!(crate::analysis::is_finite_infimizer(&p, &raw).unwrap());
        let (cand, verdict) = solved(solve(&p, SolutionMode::Modified).unwrap());
        assert!(verdict.passed());
        assert_eq!(cand.points(), &[ivec(&[0, 0])]);
        assert_eq!(cand.directions(), &[ivec(&[0, 1])]);
        assert_eq!(cand.kernel_directions(), &[ivec(&[1, 0])]);
    }

    #[test]
    fn bounded_problem_has_no_directions() {
        // F(x) = {x} + R_+ on 0 <= x <= 1, C = R_+
        let graph = crate::geometry::HPolyhedron::from_integer_rows(2, &[&[1, 0, 0], &[-1, 0, -1], &[-1, 1, 0]]);
        let p = Problem::new(PolyMapping::from_graph(1, 1, graph), orthant(1)).unwrap();
        let raw = synthesize_infimizer(&p, SolutionMode::Classic).unwrap();
        assert!(raw.directions().is_empty() && raw.kernel_directions().is_empty());
        let (cand, verdict) = solved(solve(&p, SolutionMode::Classic).unwrap());
        assert!(verdict.passed());
        assert_eq!(cand.points(), &[ivec(&[0])]);
    }
}
