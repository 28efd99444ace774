//! Exact scalars and dense rational vectors.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

pub type Rational = BigRational;
pub type Vector = Vec<Rational>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds a rational vector from integer entries.
pub fn ivec(entries: &[i64]) -> Vector {
    entries.iter().map(|&e| int(e)).collect()
}

pub fn zeros(dim: usize) -> Vector {
    vec![Rational::zero(); dim]
}

pub fn unit(dim: usize, k: usize) -> Vector {
    let mut v = zeros(dim);
    v[k] = Rational::one();
    v
}

/// Parses `p`, `-p` or `p/q` with `q > 0`.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let token = token.trim();
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (token, None),
    };
    let valid_int = |s: &str, allow_sign: bool| {
        let digits = if allow_sign {
            s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return None;
    }
    let n: BigInt = num.parse().ok()?;
    match den {
        None => Some(Rational::from_integer(n)),
        Some(d) => {
            if !valid_int(d, false) {
                return None;
            }
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + x * y
        }
    })
}

pub fn add(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> Vector {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Rational]) -> Vector {
    a.iter().map(|x| -x).collect()
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Positive multiple of `v` with coprime integer entries. The zero vector is
/// returned unchanged.
pub fn primitive(v: &[Rational]) -> Vector {
    let ints = primitive_integers(v);
    ints.into_iter().map(Rational::from_integer).collect()
}

/// Integer form of [`primitive`].
pub(crate) fn primitive_integers(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        scaled
    } else {
        scaled.into_iter().map(|x| x / &g).collect()
    }
}

/// Scales by a nonzero factor so that the first nonzero entry is positive.
pub fn sign_normalized(v: &[Rational]) -> Vector {
    let p = primitive(v);
    match p.iter().find(|x| !x.is_zero()) {
        Some(first) if first.is_negative() => neg(&p),
        _ => p,
    }
}

pub fn format_vector(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
