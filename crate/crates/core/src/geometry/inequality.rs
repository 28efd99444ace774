use std::fmt;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use super::rational::{dot, Rational, Vector};

/// The half-space `coefficients·z >= rhs`, scaled to coprime integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearInequality {
    coefficients: Vector,
    rhs: Rational,
}

impl LinearInequality {
    pub fn new(coefficients: Vector, rhs: Rational) -> Self {
        let lcm = coefficients
            .iter()
            .chain(std::iter::once(&rhs))
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = coefficients
            .iter()
            .chain(std::iter::once(&rhs))
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let mut ints: Vec<Rational> = if g.is_zero() {
            ints.into_iter().map(Rational::from_integer).collect()
        } else {
            ints.into_iter().map(|x| Rational::from_integer(x / &g)).collect()
        };
        let rhs = ints.pop().expect("rhs present");
        LinearInequality { coefficients: ints, rhs }
    }

    pub fn homogeneous(coefficients: Vector) -> Self {
        Self::new(coefficients, Rational::zero())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.rhs.is_zero()
    }

    /// `0 >= rhs` with `rhs <= 0`.
    pub fn is_trivial(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero) && !self.rhs.is_positive()
    }

    /// `0 >= rhs` with `rhs > 0`.
    pub fn is_contradiction(&self) -> bool {
        self.coefficients.iter().all(Zero::is_zero) && self.rhs.is_positive()
    }

    pub fn slack(&self, z: &[Rational]) -> Rational {
        dot(&self.coefficients, z) - &self.rhs
    }

    pub fn is_satisfied_by(&self, z: &[Rational]) -> bool {
        !self.slack(z).is_negative()
    }

    /// Satisfied by the direction `d` of the associated homogeneous row.
    pub fn admits_direction(&self, d: &[Rational]) -> bool {
        !dot(&self.coefficients, d).is_negative()
    }

    pub fn with_rhs(&self, rhs: Rational) -> Self {
        Self::new(self.coefficients.clone(), rhs)
    }

    /// Writes the row with the given variable names, e.g. `x1 - 2x2 + y2 >= 0`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        RowDisplay { row: self, names }
    }
}

struct RowDisplay<'a> {
    row: &'a LinearInequality,
    names: &'a [String],
}

impl fmt::Display for RowDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.row.coefficients.iter().zip(self.names) {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{name}")?;
            } else if mag.is_integer() {
                write!(f, "{mag}{name}")?;
            } else {
                write!(f, "({mag}){name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " >= {}", self.row.rhs)
    }
}

pub fn variable_names(prefix: &str, dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("{prefix}{i}")).collect()
}
