//! Scalar abstraction: the exact rational field plus IEEE floats.
//!
//! The linear-algebra substrate is generic over [`Scalar`]. Operations that
//! extract n-th roots (conformal scale factors, volume densities) need
//! [`RootScalar`], which is total for `f64` and partial for rationals:
//! a rational has an n-th root exactly when numerator and denominator are
//! perfect n-th powers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; `num_rational` keeps it reduced with a
/// positive denominator, which is exactly the canonical form we rely on.
pub type Rat = BigRational;

/// Field scalar with exact arithmetic semantics (floats approximate them).
pub trait Scalar: Num + Signed + Clone + PartialEq + fmt::Debug + fmt::Display + 'static {}

impl Scalar for f32 {}
impl Scalar for f64 {}
impl Scalar for Rat {}

/// Scalar that can additionally take n-th roots of nonnegative values.
pub trait RootScalar: Scalar {
    /// n-th root of a nonnegative value, or `None` when it has no exact
    /// representation in this scalar type.
    fn nth_root(&self, n: u32) -> Option<Self>;
    fn from_rat(r: &Rat) -> Self;
    fn to_f64(&self) -> f64;
}

impl RootScalar for f64 {
    fn nth_root(&self, n: u32) -> Option<Self> {
        if *self < 0.0 || n == 0 {
            return None;
        }
        Some(self.powf(1.0 / f64::from(n)))
    }

    fn from_rat(r: &Rat) -> Self {
        rat_to_f64(r)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl RootScalar for Rat {
    fn nth_root(&self, n: u32) -> Option<Self> {
        rat_nth_root(self, n)
    }

    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn to_f64(&self) -> f64 {
        rat_to_f64(self)
    }
}

/// Shorthand constructor, mostly for tests and fixtures.
pub fn rat(numer: i64, denom: i64) -> Rat {
    assert!(denom != 0, "zero denominator");
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(value: i64) -> Rat {
    Rat::from_integer(BigInt::from(value))
}

/// Parses "p/q" or a plain integer "p".
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| {
        BigInt::from_str(t.trim()).map_err(|_| Error::Schema(format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let numer = parse_int(p)?;
            let denom = parse_int(q)?;
            if denom.is_zero() {
                return Err(Error::Schema(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(numer, denom))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Canonical string form: "p/q", or "p" when the denominator is one.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Exact n-th root of a nonnegative rational, when one exists.
pub fn rat_nth_root(x: &Rat, n: u32) -> Option<Rat> {
    if n == 0 || x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let root_of = |v: &BigInt| -> Option<BigInt> {
        let r = v.nth_root(n);
        if Pow::pow(&r, n) == *v {
            Some(r)
        } else {
            None
        }
    };
    let numer = root_of(x.numer())?;
    let denom = root_of(x.denom())?;
    Some(Rat::new(numer, denom))
}
