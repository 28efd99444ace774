//! Exact two-phase simplex over `{z : a_i·z >= b_i}` with free variables.
//!
//! Free variables are split as `z = u - v`; Bland's rule picks entering and
//! leaving columns, which rules out cycling.

use num::{One, Signed, Zero};

use super::rational::{zeros, Rational, Vector};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpOutcome {
    Infeasible,
    /// `point` is feasible; `direction` is a recession direction along which
    /// the objective improves strictly.
    Unbounded { point: Vector, direction: Vector },
    Optimal { value: Rational, point: Vector },
}

impl LpOutcome {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, LpOutcome::Infeasible)
    }

    pub fn feasible_point(&self) -> Option<&Vector> {
        match self {
            LpOutcome::Infeasible => None,
            LpOutcome::Unbounded { point, .. } | LpOutcome::Optimal { point, .. } => Some(point),
        }
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize, cost: &mut [Rational], value: &mut Rational) {
        let inv = Rational::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !cost[c].is_zero() {
            let f = cost[c].clone();
            for (x, p) in cost.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
            *value -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Runs Bland's rule on reduced costs `cost` over columns `< limit`.
    /// Returns the entering column of an unbounded ray if one is found.
    fn run(&mut self, cost: &mut [Rational], value: &mut Rational, limit: usize) -> Option<usize> {
        loop {
            let Some(enter) = (0..limit).find(|&j| cost[j].is_negative()) else {
                return None;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][enter];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            match leave {
                None => return Some(enter),
                Some((r, _)) => self.pivot(r, enter, cost, value),
            }
        }
    }

    fn solution(&self) -> Vec<Rational> {
        let mut x = zeros(self.ncols);
        for (i, &b) in self.basis.iter().enumerate() {
            x[b] = self.rhs[i].clone();
        }
        x
    }
}

/// Minimizes (or maximizes) `objective·z` subject to `a_i·z >= b_i`.
pub fn solve(rows: &[(Vector, Rational)], dim: usize, objective: &[Rational], sense: Sense) -> LpOutcome {
    assert_eq!(objective.len(), dim, "objective length must match the dimension");
    let c: Vector = match sense {
        Sense::Minimize => objective.to_vec(),
        Sense::Maximize => objective.iter().map(|x| -x).collect(),
    };
    let m = rows.len();
    // columns: u (dim) | v (dim) | slack (m) | artificial (k)
    let structural = 2 * dim + m;
    let needs_art: Vec<bool> = rows.iter().map(|(_, b)| b.is_positive()).collect();
    let nart = needs_art.iter().filter(|&&b| b).count();
    let ncols = structural + nart;

    let mut t = Tableau {
        rows: Vec::with_capacity(m),
        rhs: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        ncols,
    };
    let mut art = structural;
    for (i, (a, b)) in rows.iter().enumerate() {
        assert_eq!(a.len(), dim);
        let mut row = zeros(ncols);
        // a·u - a·v - s = b
        let flip = !needs_art[i];
        for k in 0..dim {
            if !a[k].is_zero() {
                let v = if flip { -&a[k] } else { a[k].clone() };
                row[dim + k] = -&v;
                row[k] = v;
            }
        }
        row[2 * dim + i] = if flip { Rational::one() } else { -Rational::one() };
        let rhs = if flip { -b } else { b.clone() };
        if flip {
            t.basis.push(2 * dim + i);
        } else {
            row[art] = Rational::one();
            t.basis.push(art);
            art += 1;
        }
        t.rows.push(row);
        t.rhs.push(rhs);
    }

    if nart > 0 {
        let mut cost = zeros(ncols);
        let mut value = Rational::zero();
        for j in structural..ncols {
            cost[j] = Rational::one();
        }
        for i in 0..m {
            if t.basis[i] >= structural {
                for j in 0..ncols {
                    if !t.rows[i][j].is_zero() {
                        cost[j] -= &t.rows[i][j];
                    }
                }
                value -= &t.rhs[i];
            }
        }
        t.run(&mut cost, &mut value, ncols);
        // value holds -(phase-one objective)
        if !value.is_zero() {
            return LpOutcome::Infeasible;
        }
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= structural {
                if let Some(j) = (0..structural).find(|&j| !t.rows[i][j].is_zero()) {
                    let mut dummy = zeros(ncols);
                    let mut dv = Rational::zero();
                    t.pivot(i, j, &mut dummy, &mut dv);
                } else {
                    t.rows.remove(i);
                    t.rhs.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
            i += 1;
        }
    }

    let mut cost = zeros(ncols);
    for k in 0..dim {
        cost[k] = c[k].clone();
        cost[dim + k] = -&c[k];
    }
    let mut value = Rational::zero();
    for i in 0..t.rows.len() {
        let b = t.basis[i];
        if !cost[b].is_zero() {
            let f = cost[b].clone();
            for j in 0..ncols {
                if !t.rows[i][j].is_zero() {
                    let d = &f * &t.rows[i][j];
                    cost[j] -= d;
                }
            }
            value -= &f * &t.rhs[i];
        }
    }
    let unbounded = t.run(&mut cost, &mut value, structural);
    let x = t.solution();
    let point: Vector = (0..dim).map(|k| &x[k] - &x[dim + k]).collect();
    match unbounded {
        Some(enter) => {
            let mut d = zeros(ncols);
            d[enter] = Rational::one();
            for (i, &b) in t.basis.iter().enumerate() {
                d[b] = -&t.rows[i][enter];
            }
            let direction: Vector = (0..dim).map(|k| &d[k] - &d[dim + k]).collect();
            LpOutcome::Unbounded { point, direction }
        }
        None => {
            let v = super::rational::dot(objective, &point);
            LpOutcome::Optimal { value: v, point }
        }
    }
}
