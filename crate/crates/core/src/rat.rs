//! Exact rational scalars.
//!
//! Every quantity in this crate is a `Rat` (arbitrary-precision rational);
//! there is no floating-point mode. File formats carry rationals as `"p/q"`
//! strings, never decimals, so round-trips are exact.

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::error::Error;

pub type Rat = num::BigRational;

/// `n/d` as an exact rational. Panics on `d == 0`; use for literals only.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` with optional sign. Decimal or exponent notation
/// is rejected so no silent rounding can sneak into input files.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let t = s.trim();
    if t.is_empty() {
        return Err(Error::MalformedInput("empty rational literal".into()));
    }
    if t.contains(['.', 'e', 'E']) {
        return Err(Error::MalformedInput(format!(
            "rational literal {t:?} must be an exact \"p/q\" string, not a decimal"
        )));
    }
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n, d),
        None => (t, "1"),
    };
    let num: BigInt = num_str
        .trim()
        .parse()
        .map_err(|_| Error::MalformedInput(format!("bad numerator in {t:?}")))?;
    let den: BigInt = den_str
        .trim()
        .parse()
        .map_err(|_| Error::MalformedInput(format!("bad denominator in {t:?}")))?;
    if den.is_zero() {
        return Err(Error::MalformedInput(format!("zero denominator in {t:?}")));
    }
    Ok(Rat::new(num, den))
}

/// Canonical `"p/q"` form, denominator always present and positive.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Smallest integer ≥ `r`, clamped below by `min`; errors past `u64::MAX`.
pub fn ceil_level(r: &Rat, min: u64) -> Result<u64, Error> {
    let i = r.ceil().to_integer();
    if i <= BigInt::from(min) {
        return Ok(min);
    }
    if i > BigInt::from(u64::MAX) {
        return Err(Error::InvalidLevel(format!(
            "required level {i} exceeds the supported range"
        )));
    }
    Ok(i.to_string().parse::<u64>().expect("bounded integer"))
}

/// The unsigned index `n` as a rational.
pub fn int_u64(n: u64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// |r| as a rational.
pub fn abs(r: &Rat) -> Rat {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

pub fn max(a: &Rat, b: &Rat) -> Rat {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn min(a: &Rat, b: &Rat) -> Rat {
    if a <= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn one() -> Rat {
    Rat::one()
}

pub fn zero() -> Rat {
    Rat::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_accepts_exact_forms() {
        assert_eq!(parse_rat("3/4").unwrap(), rat(3, 4));
        assert_eq!(parse_rat("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rat("7").unwrap(), int(7));
        assert_eq!(parse_rat(" 2 / 6 ").unwrap(), rat(1, 3));
    }

    #[test]
    fn parse_rejects_decimals_and_garbage() {
        assert!(parse_rat("0.5").is_err());
        assert!(parse_rat("1e3").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("").is_err());
        assert!(parse_rat("a/b").is_err());
    }

    #[test]
    fn format_always_carries_denominator() {
        assert_eq!(format_rat(&int(0)), "0/1");
        assert_eq!(format_rat(&rat(-2, 4)), "-1/2");
    }

    #[test]
    fn ceil_level_rounds_up() {
        assert_eq!(ceil_level(&rat(7, 2), 1).unwrap(), 4);
        assert_eq!(ceil_level(&rat(-5, 1), 1).unwrap(), 1);
        assert_eq!(ceil_level(&int(4), 1).unwrap(), 4);
    }
}
