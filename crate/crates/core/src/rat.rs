//! Exact rational scalars.
//!
//! Every coefficient in the crate is a [`Rat`]: an arbitrary-precision
//! rational kept in lowest terms with a positive denominator. The text
//! format is `p/q` for proper fractions and `n` for integers
//! (`3/2`, `-7`, `0`); [`format_rat`] and [`parse_rat`] are the single
//! source of truth for it.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact rational. `BigRational` already maintains
/// the lowest-terms / positive-denominator invariants on every operation.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rat`].
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Raise to an integer power; negative exponents invert. Panics on
/// `0^e` with `e < 0`.
pub fn rat_pow(base: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    if base.is_zero() {
        assert!(e > 0, "zero has no negative powers");
        return Rat::zero();
    }
    let p = base.pow(e.unsigned_abs().try_into().expect("exponent fits in i32"));
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

/// Render in the crate-wide text format: `p/q`, or `n` when the
/// denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the text format. Accepts `p/q` and plain integers; the result
/// is reduced to lowest terms.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |tok: &str| -> Result<BigInt> {
        tok.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer {tok:?}")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Parse a comma-separated ascending coefficient list (`c0,c1,...`).
pub fn parse_rat_list(s: &str) -> Result<Vec<Rat>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_rat).collect()
}

/// Absolute value, used by convergence-oracle tests.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}
