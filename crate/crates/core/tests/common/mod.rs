//! Seeded random instances shared by the integration suites.
#![allow(dead_code)]

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use setopt::geometry::rational::int;
use setopt::geometry::{HPolyhedron, LinearInequality, Vector};
use setopt::{OrderingCone, PolyMapping, Problem};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_vector(rng: &mut ChaCha8Rng, dim: usize, bound: i64) -> Vector {
    (0..dim).map(|_| int(rng.gen_range(-bound..=bound))).collect()
}

/// A mapping `R^n ⇉ R^q` with small integer data and a nonempty graph.
pub fn random_mapping(rng: &mut ChaCha8Rng, n: usize, q: usize) -> PolyMapping {
    loop {
        let m = rng.gen_range(1..=5);
        let rows = (0..m)
            .map(|_| {
                let coeffs = small_vector(rng, n + q, 2);
                LinearInequality::new(coeffs, int(rng.gen_range(-2..=2)))
            })
            .collect();
        let f = PolyMapping::new(n, q, rows);
        if !f.graph().is_empty() {
            return f;
        }
    }
}

pub fn random_cone(rng: &mut ChaCha8Rng, q: usize) -> OrderingCone {
    let k = rng.gen_range(0..=3);
    let normals = (0..k).map(|_| small_vector(rng, q, 2)).collect();
    OrderingCone::new(q, normals)
}

/// A candidate ordering cone drawn from the shapes that exercise both
/// conditions: `G(0)`, `G(R^n)`, `K`, a random cone, or sums of these.
pub fn candidate_cone(rng: &mut ChaCha8Rng, f: &PolyMapping) -> OrderingCone {
    let q = f.q();
    let g0 = f.g_zero().unwrap();
    match rng.gen_range(0..6) {
        0 => g0,
        1 => f.image_cone().unwrap(),
        2 => f.natural_cone().unwrap(),
        3 => random_cone(rng, q),
        4 => g0.sum(&random_cone(rng, q)),
        _ => f.natural_cone().unwrap().sum(&random_cone(rng, q)),
    }
}

/// Regular problems with `n, q <= 3`; non-regular draws are rejected.
pub fn random_problems(seed: u64, count: usize) -> Vec<Problem> {
    let mut rng = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(1..=3);
        let q = rng.gen_range(1..=3);
        let f = random_mapping(&mut rng, n, q);
        let c = candidate_cone(&mut rng, &f);
        let p = Problem::new(f, c).unwrap();
        if p.is_regular().unwrap() {
            out.push(p);
        }
    }
    out
}

/// A random VLP embedding; the constraint set may be empty.
pub fn random_vlp_any(rng: &mut ChaCha8Rng) -> Problem {
    let n = rng.gen_range(1..=3);
    let q = rng.gen_range(1..=3);
    let m: Vec<Vector> = (0..q).map(|_| small_vector(rng, n, 2)).collect();
    let rows = rng.gen_range(0..=4);
    let a: Vec<Vector> = (0..rows).map(|_| small_vector(rng, n, 2)).collect();
    let b = small_vector(rng, rows, 2);
    let c = random_cone(rng, q);
    Problem::from_vlp(&m, &a, &b, c).unwrap()
}

pub fn random_vlp(rng: &mut ChaCha8Rng) -> Problem {
    loop {
        let n = rng.gen_range(1..=3);
        let q = rng.gen_range(1..=3);
        let m: Vec<Vector> = (0..q).map(|_| small_vector(rng, n, 2)).collect();
        let rows = rng.gen_range(0..=4);
        let a: Vec<Vector> = (0..rows).map(|_| small_vector(rng, n, 2)).collect();
        let b = small_vector(rng, rows, 2);
        let c = random_cone(rng, q);
        let p = Problem::from_vlp(&m, &a, &b, c).unwrap();
        if p.is_feasible() {
            return p;
        }
    }
}

/// A random H-polyhedron of dimension `dim`; may be empty or unbounded.
pub fn random_polyhedron(rng: &mut ChaCha8Rng, dim: usize) -> HPolyhedron {
    let m = rng.gen_range(0..=dim + 3);
    let rows = (0..m)
        .map(|_| LinearInequality::new(small_vector(rng, dim, 3), int(rng.gen_range(-3..=3))))
        .collect();
    HPolyhedron::new(dim, rows)
}

/// Vertices of `dom F` plus small combinations with its extreme rays.
pub fn sample_domain(f: &PolyMapping) -> Vec<Vector> {
    use setopt::geometry::rational::{add, scale};
    let dom = f.domain().to_v();
    let mut out = Vec::new();
    for p in dom.points() {
        out.push(p.clone());
        for r in dom.rays().iter().chain(dom.lines()) {
            out.push(add(p, &scale(r, &int(2))));
        }
    }
    if let (Some(p), true) = (dom.points().first(), dom.rays().len() >= 2) {
        out.push(add(&add(p, &dom.rays()[0]), &dom.rays()[1]));
    }
    out
}
