//! Exact rationals.
//!
//! Every quantity in the crate (degrees, gradings, eigenvalues in family units)
//! is a `BigRational`, always in lowest terms with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn floor_i64(x: &Rat) -> i64 {
    x.floor().to_integer().to_i64().expect("floor out of i64 range")
}

pub fn ceil_i64(x: &Rat) -> i64 {
    x.ceil().to_integer().to_i64().expect("ceil out of i64 range")
}

/// `Some(k)` when `x` is an integer that fits in i64.
pub fn as_i64(x: &Rat) -> Option<i64> {
    if x.is_integer() {
        x.to_integer().to_i64()
    } else {
        None
    }
}

pub fn is_half_integer(x: &Rat) -> bool {
    (x * int(2)).is_integer()
}

/// Text form used in every report: "p/q", or "p" for integers.
pub fn to_text(x: &Rat) -> String {
    x.to_string()
}

/// Parses "p/q", "p", or "-p/q". Whitespace around the parts is ignored.
pub fn parse(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn zero() -> Rat {
    Rat::zero()
}
