//! Row reduction helpers used to canonicalize subspaces.

use num::{One, Zero};

use super::rational::{sign_normalized, Rational, Vector};

/// Reduced row echelon form of `rows`. Returns the nonzero rows (pivot entry
/// one) together with their pivot columns.
pub fn rref(rows: &[Vector], dim: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut m: Vec<Vector> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..dim {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = Rational::one() / &m[r][col];
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..dim {
                    if !m[r][j].is_zero() {
                        let delta = &f * &m[r][j];
                        m[i][j] -= delta;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vector], dim: usize) -> usize {
    rref(rows, dim).1.len()
}

/// Basis of `{z : row·z = 0 for every row}`.
pub fn null_space(rows: &[Vector], dim: usize) -> Vec<Vector> {
    let (r, pivots) = rref(rows, dim);
    let mut basis = Vec::new();
    for free in (0..dim).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); dim];
        v[free] = Rational::one();
        for (row, &p) in r.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    basis
}

/// A subspace basis in canonical form. Vectors reduced against it have zeros in
/// every pivot coordinate.
#[derive(Clone, Debug)]
pub struct Subspace {
    echelon: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn spanned_by(vectors: &[Vector], dim: usize) -> Self {
        let (echelon, pivots) = rref(vectors, dim);
        Subspace { echelon, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn reduce(&self, v: &[Rational]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.echelon.iter().zip(&self.pivots) {
            if !out[p].is_zero() {
                let f = out[p].clone();
                for (o, r) in out.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *o -= &f * r;
                    }
                }
            }
        }
        out
    }

    /// Basis vectors scaled to coprime integers with positive pivot.
    pub fn basis(&self) -> Vec<Vector> {
        self.echelon.iter().map(|v| sign_normalized(v)).collect()
    }
}
