//! Exact rational scalars and integer-vector helpers.

use std::fmt::Write;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integral(q: &Rational) -> bool {
    q.denom().is_one()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Positive rescaling of `v` to a primitive integer vector. Returns the
/// rescaled vector and the (positive) factor it was multiplied by. The zero
/// vector is returned unchanged with factor 1.
pub fn primitive(v: &[Rational]) -> (Vec<Rational>, Rational) {
    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    if g.is_zero() {
        return (v.to_vec(), Rational::one());
    }
    let scaled = ints
        .into_iter()
        .map(|n| Rational::from_integer(n / &g))
        .collect();
    (scaled, Rational::new(lcm, g))
}

/// `p/q` or `p`.
pub fn format(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn format_vec(v: &[Rational]) -> String {
    let mut s = String::from("(");
    for (i, q) in v.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{}", format(q));
    }
    s.push(')');
    s
}

/// Parses an integer or a `p/q` fraction.
pub fn parse(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().ok()?;
            let q: BigInt = q.parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}
