//! The two small worked instances and the per-operation examples, with every
//! expected set written out literally.

use setopt::analysis::{
    analyze, check_solution, check_solution_modified, condition_line_free, is_finite_infimizer,
    is_minimizing_direction, is_minimizing_point, kernel_dominance, solvable, solvable_oracle, SolutionCandidate,
};
use setopt::fixtures::{kernel_graph_generators, kernel_mapping, orthant, wedge_mapping};
use setopt::geometry::rational::{dot, frac, int, ivec};
use setopt::geometry::{conic_hull, h_to_v, v_to_h, HPolyhedron, LpOutcome, Sense, VPolyhedron};
use setopt::problem::{is_regular, regularize};
use setopt::{OrderingCone, PolyMapping, Problem};

fn poly(dim: usize, rows: &[&[i64]]) -> HPolyhedron {
    HPolyhedron::from_integer_rows(dim, rows)
}

fn cone(rows: &[&[i64]]) -> OrderingCone {
    OrderingCone::new(2, rows.iter().map(|r| ivec(r)).collect())
}

#[test]
fn h_to_v_of_g_zero() {
    let v = h_to_v(&poly(2, &[&[0, 1, 0], &[1, -1, 0]]));
    assert_eq!(v.points(), &[ivec(&[0, 0])]);
    assert_eq!(v.rays(), &[ivec(&[1, 0]), ivec(&[1, 1])]);
    assert!(v.lines().is_empty());
}

#[test]
fn v_to_h_of_the_kernel_example_graph() {
    let h = v_to_h(&kernel_graph_generators());
    let names = kernel_mapping().variable_names();
    let mut rows: Vec<String> = h.rows().iter().map(|r| r.display_with(&names).to_string()).collect();
    rows.sort();
    let mut expected = vec![
        "x1 >= 0",
        "x2 >= 0",
        "x2 + y1 >= 0",
        "-3x2 + y1 + 2y2 >= 0",
        "x1 - 2x2 + y2 >= 0",
    ];
    expected.sort();
    assert_eq!(rows, expected);
}

#[test]
fn projection_of_the_natural_cone_system() {
    // {Ax + By >= 0, Ax >= 0} over (x, y) for the wedge instance
    let f = wedge_mapping();
    let mut rows: Vec<Vec<i64>> = vec![
        vec![1, 0, 0, 0, 0],
        vec![0, 1, 0, 0, 0],
        vec![0, -1, 0, 1, 0],
        vec![0, 1, 1, 0, 0],
        vec![1, 2, 1, -1, 0],
    ];
    rows.extend([vec![0, -1, 0, 0, 0], vec![1, 2, 0, 0, 0]]);
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let k = poly(4, &refs).project(&[2, 3]);
    assert!(k.set_equal(&poly(2, &[&[1, 0, 0], &[0, 1, 0]])));
    assert!(k.set_equal(f.natural_cone().unwrap().as_polyhedron()));
}

#[test]
fn lp_examples() {
    match HPolyhedron::nonnegative_orthant(2).optimize(&ivec(&[1, 0]), Sense::Minimize) {
        LpOutcome::Optimal { value, point } => {
            assert_eq!(value, int(0));
            assert_eq!(point, ivec(&[0, 0]));
        }
        other => panic!("{other:?}"),
    }
    let image = poly(2, &[&[0, 1, 0], &[1, 1, 0]]);
    match image.optimize(&ivec(&[1, 0]), Sense::Minimize) {
        LpOutcome::Unbounded { point, direction } => {
            assert!(image.contains_point(&point));
            assert!(dot(&ivec(&[1, 0]), &direction) < int(0));
            assert!(image.rows().iter().all(|r| r.admits_direction(&direction)));
            assert_eq!(setopt::geometry::rational::primitive(&direction), ivec(&[-1, 1]));
        }
        other => panic!("{other:?}"),
    }
    assert!(poly(1, &[&[1, 1], &[-1, 0]]).optimize(&ivec(&[1]), Sense::Minimize).is_infeasible());
}

#[test]
fn emptiness_and_containment() {
    assert!(poly(1, &[&[1, 1], &[-1, 0]]).is_empty());
    assert!(!poly(2, &[&[1, 1, 0], &[-1, -1, 0]]).is_empty());
    assert!(!wedge_mapping().domain().is_empty());
    let inner = VPolyhedron::cone(2, vec![ivec(&[1, 0]), ivec(&[1, 1])], vec![]);
    assert!(HPolyhedron::nonnegative_orthant(2).contains(&inner));
    let f = wedge_mapping();
    let k = f.natural_cone().unwrap();
    assert!(!f.g_zero().unwrap().as_polyhedron().contains(&h_to_v(k.as_polyhedron())));
    assert!(poly(1, &[&[1, 0]]).set_equal(&poly(1, &[&[2, 0]])));
}

#[test]
fn lineality_and_recession() {
    assert!(HPolyhedron::nonnegative_orthant(2).lineality_space().unwrap().lines().is_empty());
    assert_eq!(poly(2, &[&[1, 0, 0]]).lineality_space().unwrap().lines(), &[ivec(&[0, 1])]);
    let shifted = poly(2, &[&[1, 0, 1], &[0, 1, -3]]);
    assert!(shifted.recession_cone().unwrap().set_equal(&HPolyhedron::nonnegative_orthant(2)));
    let wedge = poly(2, &[&[0, 1, 0], &[1, -1, 0]]);
    assert!(wedge.recession_cone().unwrap().set_equal(&wedge));
    let triangle = poly(2, &[&[1, 0, 0], &[0, 1, 0], &[-1, -1, -1]]);
    assert!(triangle.recession_cone().unwrap().set_equal(&HPolyhedron::origin(2)));
}

#[test]
fn sums_and_hulls() {
    let g = wedge_mapping().recession_mapping().unwrap();
    let g10 = g.value(&ivec(&[1, 0])).to_v();
    let g00 = g.value(&ivec(&[0, 0])).to_v();
    let sum = g10.minkowski_sum(&g00).unwrap();
    assert!(sum.to_h().set_equal(&g10.to_h()));
    assert!(g10.to_h().strictly_contains(&g00.to_h()));
    let zero = VPolyhedron::new(2, vec![ivec(&[0, 0])], vec![], vec![]);
    assert!(g10.minkowski_sum(&zero).unwrap().to_h().set_equal(&g10.to_h()));

    assert!(conic_hull(2, &[]).unwrap().set_equal(&HPolyhedron::origin(2)));
    let segment = VPolyhedron::new(2, vec![ivec(&[1, 0]), ivec(&[0, 1])], vec![], vec![]);
    assert!(conic_hull(2, &[segment]).unwrap().set_equal(&HPolyhedron::nonnegative_orthant(2)));
    let hull = conic_hull(2, &[g.value(&ivec(&[0, 1])).to_v()]).unwrap();
    assert!(hull.contains_point(&ivec(&[-1, 1])));
    assert!(poly(2, &[&[0, 1, 0], &[1, 1, 0]]).contains_set(&hull));
}

#[test]
fn intersections() {
    let orthant = HPolyhedron::nonnegative_orthant(2);
    assert!(orthant.intersect(&HPolyhedron::universe(2)).set_equal(&orthant));
    assert!(orthant.intersect(&orthant.reflected()).set_equal(&HPolyhedron::origin(2)));
    let p = Problem::new(kernel_mapping(), setopt::fixtures::orthant(2)).unwrap();
    let q = p.upper_image_homog().unwrap();
    let v = h_to_v(p.cone().reflected().intersect(&q).as_polyhedron());
    assert_eq!(v.points(), &[ivec(&[0, 0])]);
    assert!(v.rays().is_empty() && v.lines().is_empty());
}

#[test]
fn wedge_mapping_sets() {
    let f = wedge_mapping();
    // the graph is a cone, so the recession mapping is the mapping itself
    assert_eq!(f.recession_mapping().unwrap(), f);
    assert!(f.value(&ivec(&[0, 0])).set_equal(&poly(2, &[&[0, 1, 0], &[1, -1, 0]])));
    assert!(f.value(&ivec(&[1, 0])).set_equal(&poly(2, &[&[0, 1, 0], &[1, 0, 0], &[1, -1, -1]])));
    assert!(f.value(&ivec(&[-1, 0])).is_empty());
    assert!(f.domain().set_equal(&HPolyhedron::nonnegative_orthant(2)));
    assert!(f.image_cone().unwrap().set_equal(&cone(&[&[0, 1], &[1, 1]])));
    let k = f.natural_cone().unwrap();
    assert!(k.set_equal(&cone(&[&[1, 0], &[0, 1]])));
    // (1,0) ∈ ker F; ker F is the ray x2 = 0, x1 >= 0
    let ker = f.algebraic_kernel().unwrap();
    assert!(ker.contains_point(&ivec(&[1, 0])));
    assert!(ker.set_equal(&poly(2, &[&[1, 0, 0], &[0, 1, 0], &[0, -1, 0]])));
    assert!(is_regular(&f.g_zero().unwrap(), &f).unwrap());
    assert!(is_regular(&k, &f).unwrap());
    assert!(!is_regular(&OrderingCone::zero(2), &f).unwrap());
}

#[test]
fn translated_graph_keeps_the_recession_mapping() {
    let f = wedge_mapping();
    let rows = f.graph().rows().iter().map(|r| r.with_rhs(frac(-7, 3))).collect();
    let moved = PolyMapping::new(2, 2, rows);
    assert_eq!(moved.recession_mapping().unwrap(), f);
}

#[test]
fn regularize_examples() {
    let f = wedge_mapping();
    let g0 = f.g_zero().unwrap();
    let k = f.natural_cone().unwrap();
    assert!(regularize(&k, &f).unwrap().set_equal(&k));
    assert!(regularize(&OrderingCone::zero(2), &f).unwrap().set_equal(&g0));
    let augmented = f.augment_with_cone(&OrderingCone::zero(2)).unwrap();
    assert!(augmented.graph().set_equal(f.graph()));
}

#[test]
fn identity_vlp() {
    let id = vec![ivec(&[1, 0]), ivec(&[0, 1])];
    let p = Problem::from_vlp(&id, &id, &[int(0), int(0)], orthant(2)).unwrap();
    assert!(p.mapping().g_zero().unwrap().set_equal(p.cone()));
    assert!(p.upper_image().unwrap().set_equal(&HPolyhedron::nonnegative_orthant(2)));
    assert!(p.mapping().domain().set_equal(&HPolyhedron::nonnegative_orthant(2)));
    assert!(solvable(&p).unwrap().solvable);
    // relaxing a VLP embedding keeps the verdicts
    let relaxed = Problem::new(p.mapping().vectorial_relaxation().unwrap(), p.cone().clone()).unwrap();
    assert!(solvable(&relaxed).unwrap().solvable);
    assert!(relaxed.upper_image_homog().unwrap().set_equal(&p.upper_image_homog().unwrap()));
}

#[test]
fn wedge_verdicts_and_certificates() {
    let f = wedge_mapping();
    let small = Problem::with_default_cone(f.clone()).unwrap();
    assert!(!solvable(&small).unwrap().solvable);
    assert!(!solvable_oracle(&small).unwrap());
    // Q = G(R^2) + G(0) = G(R^2)
    assert!(small.upper_image_homog().unwrap().set_equal(&f.image_cone().unwrap()));
    // G(1,0) + C ⊋ G(0,0) + C, so the origin is no minimizer
    assert!(!is_minimizing_point(&small, &ivec(&[0, 0]), small.cone()).unwrap());
    assert!(kernel_dominance(&small, &ivec(&[0, 0]), &ivec(&[1, 0])).unwrap());
    let triple = SolutionCandidate::new(vec![ivec(&[0, 0])], vec![ivec(&[0, 1])], vec![]).unwrap();
    assert!(check_solution_modified(&small, &triple).unwrap().passed());
    assert!(!check_solution(&small, &triple).unwrap().passed());

    let large = small.with_cone(f.image_cone().unwrap()).unwrap();
    let pair = SolutionCandidate::classic(vec![ivec(&[0, 0])], vec![]).unwrap();
    assert!(is_finite_infimizer(&large, &pair).unwrap());
    assert!(check_solution(&large, &pair).unwrap().passed());
    // with C = Q, kernel directions have G(x̂) + C = Q and cannot be beaten;
    // (1,1) has 0 ∉ G(1,1) and is dominated by x = 0
    assert!(is_minimizing_direction(&large, &ivec(&[1, 0]), large.cone()).unwrap());
    assert!(!is_minimizing_direction(&large, &ivec(&[1, 1]), large.cone()).unwrap());

    let relaxed = Problem::new(f.vectorial_relaxation().unwrap(), small.cone().clone()).unwrap();
    assert!(relaxed.upper_image_homog().unwrap().set_equal(&small.upper_image_homog().unwrap()));
    assert!(solvable(&relaxed).unwrap().solvable);
    assert!(relaxed.mapping().natural_cone().unwrap().set_equal(&f.g_zero().unwrap()));
}

#[test]
fn kernel_example_sets() {
    let f = kernel_mapping();
    let p = Problem::new(f.clone(), orthant(2)).unwrap();
    assert!(f.g_zero().unwrap().set_equal(&orthant(2)));
    let q = cone(&[&[1, 2], &[2, 1]]);
    assert!(f.image_cone().unwrap().set_equal(&q));
    assert!(p.upper_image().unwrap().set_equal(q.as_polyhedron()));
    // K = G[ker F] from the five rows; see the ledger for the stated variant
    let k = f.natural_cone().unwrap();
    assert!(k.set_equal(&cone(&[&[1, 0], &[1, 2]])));
    assert!(k.strictly_contains(p.cone()) && q.strictly_contains(&k));
    assert!(condition_line_free(&p).unwrap());
    let report = analyze(&p);
    assert!(!report.solvable && report.vr_solvable);
}

#[test]
fn kernel_example_dominance_along_the_kernel() {
    let p = Problem::new(kernel_mapping(), orthant(2)).unwrap();
    for (r, s, t) in [(1, 0, 0), (3, 1, 2), (5, 4, 1)] {
        assert!(kernel_dominance(&p, &ivec(&[s, t]), &ivec(&[r - s, 0])).unwrap());
    }
}
