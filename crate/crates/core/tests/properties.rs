//! Randomized invariants: proptest for the polyhedral kernel, fixed seeds for
//! whole-problem properties.

mod common;

use proptest::prelude::*;
use setopt::analysis::{
    check_solution, condition_line_free, kernel_dominance, point_dominator, solvable,
    solve, SolutionCandidate, SolutionMode, SolveOutcome,
};
use setopt::geometry::rational::{add, dot, int, is_zero, scale};
use setopt::geometry::{h_to_v, HPolyhedron, LinearInequality, Rational, VPolyhedron, Vector};
use setopt::problem::is_regular;
use setopt::{OrderingCone, Problem};

fn polyhedron_in(dim: usize) -> impl Strategy<Value = HPolyhedron> {
    prop::collection::vec((prop::collection::vec(-3i64..=3, dim), -3i64..=3), 0..=dim + 3).prop_map(move |rows| {
        let rows = rows
            .into_iter()
            .map(|(c, b)| LinearInequality::new(c.into_iter().map(int).collect(), int(b)))
            .collect();
        HPolyhedron::new(dim, rows)
    })
}

fn polyhedron(max_dim: usize) -> impl Strategy<Value = HPolyhedron> {
    (1..=max_dim).prop_flat_map(polyhedron_in)
}

fn small(dim: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-3i64..=3, dim).prop_map(|v| v.into_iter().map(int).collect())
}

/// `y ∈ A + B` decided by LP over `y = a + b`.
fn in_sum(a: &HPolyhedron, b: &HPolyhedron, y: &[Rational]) -> bool {
    let dim = a.dim();
    let mut rows = Vec::new();
    for r in a.rows() {
        let mut c = r.coefficients().to_vec();
        c.extend(vec![int(0); dim]);
        rows.push(LinearInequality::new(c, r.rhs().clone()));
    }
    // b = y - a
    for r in b.rows() {
        let c: Vector = r.coefficients().iter().map(|x| -x).chain(vec![int(0); dim]).collect();
        rows.push(LinearInequality::new(c, r.rhs() - dot(r.coefficients(), y)));
    }
    !HPolyhedron::new(2 * dim, rows).is_empty()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn round_trip(p in polyhedron(3)) {
        let v = h_to_v(&p);
        prop_assert!(v.to_h().set_equal(&p));
        // generators lie in p
        for x in v.points() {
            prop_assert!(p.contains_point(x));
        }
        for r in v.rays().iter().chain(v.lines()) {
            prop_assert!(p.rows().iter().all(|row| row.admits_direction(r)));
        }
    }

    #[test]
    fn recession_cone_is_spanned_by_rays_and_lines(p in polyhedron(3)) {
        prop_assume!(!p.is_empty());
        let v = h_to_v(&p);
        let by_rays = VPolyhedron::cone(p.dim(), v.rays().to_vec(), v.lines().to_vec()).to_h();
        prop_assert!(p.recession_cone().unwrap().set_equal(&by_rays));
    }

    #[test]
    fn lineality_two_ways(p in polyhedron(3)) {
        prop_assume!(!p.is_empty());
        let cone = OrderingCone::from_polyhedron(p.recession_cone().unwrap()).unwrap();
        let by_definition = cone.intersect(&cone.reflected());
        let lines = p.lineality_space().unwrap();
        prop_assert!(by_definition.as_polyhedron().set_equal(&lines.to_h()));
    }

    #[test]
    fn minkowski_membership(a in polyhedron_in(2), shift in small(2), y in small(2)) {
        prop_assume!(!a.is_empty());
        let b_rows: Vec<LinearInequality> = a.rows().iter().map(|r| r.with_rhs(r.rhs() + dot(r.coefficients(), &shift))).collect();
        let b = HPolyhedron::new(2, b_rows);
        let sum = a.to_v().minkowski_sum(&b.to_v()).unwrap().to_h();
        prop_assert_eq!(sum.contains_point(&y), in_sum(&a, &b, &y));
    }

    #[test]
    fn containment_matches_generator_membership(outer in polyhedron_in(2), inner in polyhedron_in(2)) {
        let v = h_to_v(&inner);
        let by_rows = v.points().iter().all(|x| outer.contains_point(x))
            && v.rays().iter().chain(v.lines()).all(|r| outer.rows().iter().all(|row| row.admits_direction(r)))
            && v.lines().iter().all(|l| outer.rows().iter().all(|row| row.admits_direction(&scale(l, &int(-1)))));
        prop_assert_eq!(outer.contains(&v), by_rows);
    }
}

const SEED: u64 = 0xc0ffee;

#[test]
fn certification_soundness() {
    let mut solved = 0;
    for p in common::random_problems(SEED, 150) {
        let s = solvable(&p).unwrap().solvable;
        match solve(&p, SolutionMode::Classic).unwrap() {
            SolveOutcome::Solved { candidate, verdict } => {
                assert!(s);
                assert!(verdict.passed(), "{:?}: {:?}", candidate, verdict.failures());
                assert!(check_solution(&p, &candidate).unwrap().passed());
                solved += 1;
            }
            SolveOutcome::Unsolvable { failing, .. } => {
                assert!(!s);
                assert_eq!(Some(failing), solvable(&p).unwrap().failing);
            }
        }
    }
    assert!(solved > 10);
}

#[test]
fn modified_solutions_are_classic_for_the_enlarged_cone() {
    let mut solved = 0;
    for p in common::random_problems(SEED ^ 1, 150) {
        let line_free = condition_line_free(&p).unwrap();
        match solve(&p, SolutionMode::Modified).unwrap() {
            SolveOutcome::Solved { candidate, verdict } => {
                assert!(line_free);
                assert!(verdict.passed(), "{:?}: {:?}", candidate, verdict.failures());
                let ck = p.cone().sum(&p.mapping().natural_cone().unwrap());
                // C + K need not be regular for F, but it is for F_C
                let enlarged = Problem::new(p.mapping().augment_with_cone(p.cone()).unwrap(), ck).unwrap();
                if enlarged.is_regular().unwrap() {
                    assert!(check_solution(&enlarged, &candidate.merged()).unwrap().passed());
                }
                // minimizer monotonicity: no dominator relative to C + K
                for x in candidate.points() {
                    assert!(point_dominator(&p, x, &verdict.relative_to).unwrap().is_none());
                }
                solved += 1;
            }
            SolveOutcome::Unsolvable { .. } => assert!(!line_free),
        }
    }
    assert!(solved > 10);
}

#[test]
fn classic_check_implies_solvable() {
    for p in common::random_problems(SEED ^ 2, 150) {
        let dom = p.mapping().domain().to_v();
        let Ok(cand) = SolutionCandidate::classic(dom.points().to_vec(), dom.rays().iter().filter(|r| !is_zero(r)).cloned().collect()) else {
            continue;
        };
        if !dom.lines().is_empty() {
            continue;
        }
        if check_solution(&p, &cand).unwrap().passed() {
            assert!(solvable(&p).unwrap().solvable);
        }
    }
}

#[test]
fn augmented_values_and_recession() {
    let mut rng = common::rng(SEED ^ 3);
    for _ in 0..150 {
        use rand::Rng;
        let n = rng.gen_range(1..=2);
        let q = rng.gen_range(1..=2);
        let f = common::random_mapping(&mut rng, n, q);
        let c = common::random_cone(&mut rng, q);
        let fc = f.augment_with_cone(&c).unwrap();
        let g = f.recession_mapping().unwrap();
        let gc = fc.recession_mapping().unwrap();
        for x in common::sample_domain(&f) {
            let expected = f.value(&x).to_v().minkowski_sum(&c.generators()).unwrap().to_h();
            assert!(fc.value(&x).set_equal(&expected));
            let gx = g.value(&x);
            if !gx.is_empty() {
                let expected = gx.to_v().minkowski_sum(&c.generators()).unwrap().to_h();
                assert!(gc.value(&x).set_equal(&expected));
            }
        }
        assert!(fc.g_zero().unwrap().set_equal(&f.g_zero().unwrap().sum(&c)));
    }
}

#[test]
fn kernel_image_identity() {
    let mut rng = common::rng(SEED ^ 4);
    for _ in 0..200 {
        use rand::Rng;
        let n = rng.gen_range(1..=3);
        let q = rng.gen_range(1..=3);
        let f = common::random_mapping(&mut rng, n, q);
        // K = G[ker F], by generators of gr G ∩ (ker F × R^q) instead of
        // Fourier–Motzkin
        let g = f.recession_mapping().unwrap();
        let ker_rows = f.algebraic_kernel().unwrap().embed(n + q, 0);
        let restricted = g.graph().intersect(&HPolyhedron::new(n + q, ker_rows));
        let keep: Vec<usize> = (n..n + q).collect();
        let by_generators = OrderingCone::generated_by(&h_to_v(&restricted).project(&keep));
        assert!(f.natural_cone().unwrap().set_equal(&by_generators), "{f}");
    }
}

#[test]
fn kernel_dominance_self_check() {
    let mut hits = 0;
    for p in common::random_problems(SEED ^ 5, 200) {
        let f = p.mapping();
        let ker = f.algebraic_kernel().unwrap().to_v();
        for x in common::sample_domain(f).into_iter().take(3) {
            for d in ker.rays().iter().chain(ker.lines()) {
                // errors would mean the strict inclusion failed
                if kernel_dominance(&p, &x, d).unwrap() {
                    hits += 1;
                    let moved = add(&x, d);
                    assert!(point_dominator(&p, &x, p.cone()).unwrap().is_some(), "{moved:?}");
                }
            }
        }
    }
    assert!(hits > 0);
}

#[test]
fn regularity_transfers_to_the_relaxation() {
    let mut rng = common::rng(SEED ^ 6);
    for _ in 0..200 {
        use rand::Rng;
        let n = rng.gen_range(1..=2);
        let q = rng.gen_range(1..=2);
        let f = common::random_mapping(&mut rng, n, q);
        let c = common::candidate_cone(&mut rng, &f);
        let fhat = f.vectorial_relaxation().unwrap();
        assert_eq!(is_regular(&c, &f).unwrap(), is_regular(&c, &fhat).unwrap());
        assert!(fhat.g_zero().unwrap().set_equal(&f.g_zero().unwrap()));
    }
}
