//! Exact rational scalars.
//!
//! Coefficients of the instanton bracket series grow past 10^24, so they are
//! held as arbitrary-precision rationals and only rounded at the final
//! evaluation step. `num_rational::BigRational` already maintains the
//! reduced-form invariant (gcd(|num|, den) = 1, den > 0, zero is 0/1).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Small-integer constructor.
pub fn rat(numer: i64, denom: i64) -> Rational {
    assert!(denom != 0, "zero denominator");
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// Parse "p/q" or a bare integer "p".
pub fn rat_from_str(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer = num_str
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("bad rational numerator {num_str:?}: {e}")))?;
    let denom = den_str
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("bad rational denominator {den_str:?}: {e}")))?;
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical interchange rendering: always "numerator/denominator".
pub fn rat_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Round to binary64. Saturates to +-inf / 0 outside the representable range.
pub fn rat_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// ln |r|, robust to numerators/denominators far beyond the f64 range.
pub fn rat_ln_abs(r: &Rational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_big(&r.numer().abs()) - ln_big(&r.denom().abs())
}

fn ln_big(x: &BigInt) -> f64 {
    let bits = x.bits();
    if bits <= 900 {
        x.to_f64().expect("within f64 range").abs().ln()
    } else {
        let shift = bits - 64;
        let head = (x >> shift).to_f64().expect("64-bit head fits");
        head.abs().ln() + shift as f64 * std::f64::consts::LN_2
    }
}
