//! Exact rational arithmetic: dense univariate polynomials, sparse
//! multivariate polynomials, reduced rational functions and formal products
//! of Gamma factors.
//!
//! Everything here is exact. Membership checks elsewhere in the crate reduce
//! to zero tests on remainders, which only make sense over `BigRat`.

mod gamma;
pub mod json;
mod mpoly;
mod poly;
mod ratfunc;

pub use gamma::{gamma_reduce, GammaFactor, GammaProduct};
pub use mpoly::ExactMultiPoly;
pub use poly::{lagrange_interpolate, ExactPoly};
pub use ratfunc::RationalFunction;

use num_bigint::BigInt;
use num_traits::Signed;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

/// Complex double used for numeric cross-checks.
pub type ComplexF = num_complex::Complex64;

/// `p/q` as a `BigRat`.
pub fn rat(p: i64, q: i64) -> BigRat {
    BigRat::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `n` as a `BigRat`.
pub fn int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Returns `Some(n)` when `r` is an integer that fits in an `i64`.
pub fn to_i64(r: &BigRat) -> Option<i64> {
    if r.is_integer() {
        i64::try_from(r.to_integer()).ok()
    } else {
        None
    }
}

/// Lossy conversion used only by the numeric checks.
pub fn to_f64(r: &BigRat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// `|r|`.
pub fn abs(r: &BigRat) -> BigRat {
    r.abs()
}

/// Canonical string form: `p/q`, or `p` when `q = 1`.
pub fn rat_to_string(r: &BigRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p`; rejects a zero denominator.
pub fn parse_rat(s: &str) -> crate::Result<BigRat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| crate::Error::Parse(format!("bad rational `{s}`")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| crate::Error::Parse(format!("bad rational `{s}`")))?;
    if den == BigInt::from(0) {
        return Err(crate::Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRat::new(num, den))
}
