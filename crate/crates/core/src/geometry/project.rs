//! Fourier–Motzkin elimination.

use num::{Signed, Zero};

use super::hpoly::HPolyhedron;
use super::inequality::LinearInequality;
use super::rational::Rational;

fn eliminate(rows: &[LinearInequality], var: usize) -> Vec<LinearInequality> {
    let mut out = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for r in rows {
        let c = &r.coefficients()[var];
        if c.is_positive() {
            pos.push(r);
        } else if c.is_negative() {
            neg.push(r);
        } else {
            out.push(r.clone());
        }
    }
    for p in &pos {
        for n in &neg {
            let alpha: Rational = -n.coefficients()[var].clone();
            let beta: Rational = p.coefficients()[var].clone();
            let coefficients = p
                .coefficients()
                .iter()
                .zip(n.coefficients())
                .map(|(a, b)| &alpha * a + &beta * b)
                .collect::<Vec<_>>();
            let rhs = &alpha * p.rhs() + &beta * n.rhs();
            out.push(LinearInequality::new(coefficients, rhs));
        }
    }
    out
}

/// Projects `p` onto the coordinates listed in `keep`, eliminating the others
/// one at a time (cheapest first) and pruning redundant rows after each step.
pub fn fourier_motzkin(p: &HPolyhedron, keep: &[usize]) -> HPolyhedron {
    let dim = p.dim();
    let mut keep: Vec<usize> = keep.to_vec();
    keep.sort_unstable();
    keep.dedup();
    assert!(keep.iter().all(|&k| k < dim), "projection index out of range");

    let mut current = p.remove_redundant();
    let mut remaining: Vec<usize> = (0..dim).filter(|k| !keep.contains(k)).collect();
    while !remaining.is_empty() {
        if current.is_empty() {
            return HPolyhedron::empty(keep.len());
        }
        let cost = |var: usize| {
            let (mut np, mut nn) = (0usize, 0usize);
            for r in current.rows() {
                let c = &r.coefficients()[var];
                if c.is_positive() {
                    np += 1;
                } else if c.is_negative() {
                    nn += 1;
                }
            }
            (np * nn) as isize - (np + nn) as isize
        };
        let (idx, &var) = remaining
            .iter()
            .enumerate()
            .min_by_key(|&(_, &v)| (cost(v), v))
            .expect("nonempty");
        remaining.swap_remove(idx);
        let rows = eliminate(current.rows(), var);
        current = HPolyhedron::new(dim, rows).remove_redundant();
    }
    if current.is_empty() {
        return HPolyhedron::empty(keep.len());
    }
    let rows = current
        .rows()
        .iter()
        .map(|r| {
            debug_assert!((0..dim)
                .filter(|k| !keep.contains(k))
                .all(|k| r.coefficients()[k].is_zero()));
            LinearInequality::new(
                keep.iter().map(|&k| r.coefficients()[k].clone()).collect(),
                r.rhs().clone(),
            )
        })
        .collect();
    HPolyhedron::new(keep.len(), rows)
}
