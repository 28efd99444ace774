//! Double description method for polyhedral cones `{w : c·w >= 0}`.
//!
//! Works over primitive integer vectors. Lines are kept orthogonal to every
//! processed constraint, so adjacency of rays can be decided combinatorially
//! from their zero sets.

use num::bigint::BigInt;
use num::{Signed, Zero};

use super::rational::{primitive_integers, Rational, Vector};

#[derive(Debug, Clone, Default)]
pub struct ConeGenerators {
    pub rays: Vec<Vector>,
    pub lines: Vec<Vector>,
}

#[derive(Clone, Debug)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn with_capacity(n: usize) -> Self {
        ZeroSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn intersection(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn is_subset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

struct Ray {
    v: Vec<BigInt>,
    zeros: ZeroSet,
}

fn idot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// `alpha * a - beta * b`, reduced to a primitive vector.
fn combine(alpha: &BigInt, a: &[BigInt], beta: &BigInt, b: &[BigInt]) -> Vec<BigInt> {
    let v: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| alpha * x - beta * y).collect();
    reduce_gcd(v)
}

fn reduce_gcd(v: Vec<BigInt>) -> Vec<BigInt> {
    use num::Integer;
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Extreme rays and a lineality basis of `{w in R^dim : c·w >= 0 for all c}`.
pub fn cone_generators(dim: usize, constraints: &[Vector]) -> ConeGenerators {
    let cons: Vec<Vec<BigInt>> = constraints
        .iter()
        .map(|c| primitive_integers(c))
        .filter(|c| c.iter().any(|x| !x.is_zero()))
        .collect();
    let ncons = cons.len();

    let mut lines: Vec<Vec<BigInt>> = (0..dim)
        .map(|k| {
            let mut e = vec![BigInt::zero(); dim];
            e[k] = BigInt::from(1);
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (ci, h) in cons.iter().enumerate() {
        if let Some(li) = lines.iter().position(|l| !idot(h, l).is_zero()) {
            let mut pivot = lines.swap_remove(li);
            let mut hp = idot(h, &pivot);
            if hp.is_negative() {
                pivot = pivot.into_iter().map(|x| -x).collect();
                hp = -hp;
            }
            for l in lines.iter_mut() {
                let hl = idot(h, l);
                if !hl.is_zero() {
                    *l = combine(&hp, l, &hl, &pivot);
                }
            }
            for r in rays.iter_mut() {
                let hr = idot(h, &r.v);
                if !hr.is_zero() {
                    r.v = combine(&hp, &r.v, &hr, &pivot);
                }
                r.zeros.insert(ci);
            }
            let mut zeros = ZeroSet::with_capacity(ncons);
            for j in 0..ci {
                zeros.insert(j);
            }
            zeros.remove(ci);
            rays.push(Ray { v: pivot, zeros });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| idot(h, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (r, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    r.zeros.insert(ci);
                }
            }
            continue;
        }

        // Rank bound for adjacency: two rays of a pointed cone of dimension
        // k are adjacent only if they share at least k - 2 tight constraints.
        let pointed_dim = dim - lines.len();
        let mut new_rays = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersection(&rays[n].zeros);
                if common.count() + 2 < pointed_dim {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|k| k == p || k == n || !common.is_subset_of(&rays[k].zeros));
                if !adjacent {
                    continue;
                }
                let v = combine(&values[p], &rays[n].v, &values[n], &rays[p].v);
                let mut zeros = common;
                zeros.insert(ci);
                new_rays.push(Ray { v, zeros });
            }
        }

        let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + new_rays.len());
        for (mut r, val) in rays.into_iter().zip(values) {
            if val.is_negative() {
                continue;
            }
            if val.is_zero() {
                r.zeros.insert(ci);
            }
            kept.push(r);
        }
        kept.extend(new_rays);
        rays = kept;
    }

    let to_rational = |v: Vec<BigInt>| -> Vector { v.into_iter().map(Rational::from_integer).collect() };
    ConeGenerators {
        rays: rays.into_iter().map(|r| to_rational(r.v)).collect(),
        lines: lines.into_iter().map(to_rational).collect(),
    }
}
