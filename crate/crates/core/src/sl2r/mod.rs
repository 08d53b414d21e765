//! `SL(2,R)`: c-functions, intertwining polynomials, composition series and
//! the Level-2 / Level-3 membership checks.
//!
//! K-types are integers `n` (the character `e^{inθ}` of `SO(2)`); the two
//! principal series are `σ = Plus` (even K-types) and `σ = Minus` (odd).

mod checks;
mod series;

pub use checks::{
    level2_check_r, level3_check_r, FunctionalCheck, Level2Report, Level3Outcome, VanishingCheck,
    Witness,
};
pub use series::{
    box_picture_r, composition_series_r, reducibility_points_r, smallest_submodule_r, BoxPictureR,
    CompFactorR, CompositionSeriesR, SeriesVerdict, SubmoduleR,
};

use serde::{Deserialize, Serialize};

use crate::algebra::{gamma_reduce, rat, BigRat, ExactPoly, GammaFactor, GammaProduct, RationalFunction};
use crate::{Error, Result};

/// Character of `M = {±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SigmaR {
    Plus,
    Minus,
}

impl SigmaR {
    /// The principal series whose K-types have the parity of `n`.
    pub fn of_ktype(n: i64) -> Self {
        if n.rem_euclid(2) == 0 {
            SigmaR::Plus
        } else {
            SigmaR::Minus
        }
    }

    pub fn contains(self, n: i64) -> bool {
        Self::of_ktype(n) == self
    }
}

pub(crate) fn check_parity(n: i64, m: i64) -> Result<()> {
    if (n - m).rem_euclid(2) != 0 {
        return Err(Error::ParityMismatch(format!("K-types {n} and {m} have different parity")));
    }
    Ok(())
}

/// `c_n(λ) = π^{-1/2} Γ(λ)Γ(λ+½) / (Γ(λ+(1+n)/2) Γ(λ+(1−n)/2))`.
pub fn c_gamma_r(n: i64) -> GammaProduct {
    let one = rat(1, 1);
    GammaProduct::new(
        RationalFunction::one(),
        1,
        [
            GammaFactor { scale: one.clone(), shift: rat(0, 1), exponent: 1 },
            GammaFactor { scale: one.clone(), shift: rat(1, 2), exponent: 1 },
            GammaFactor { scale: one.clone(), shift: rat(1 + n, 2), exponent: -1 },
            GammaFactor { scale: one, shift: rat(1 - n, 2), exponent: -1 },
        ],
    )
}

/// Half-integers `from, from+1, …, to` (empty if `to < from`).
fn half_steps(from: &BigRat, to: &BigRat) -> Vec<BigRat> {
    let mut out = Vec::new();
    let mut j = from.clone();
    while &j <= to {
        out.push(j.clone());
        j += rat(1, 1);
    }
    out
}

/// `c_n / c_m` in closed form.
pub fn c_quotient_r(n: i64, m: i64) -> Result<RationalFunction> {
    check_parity(n, m)?;
    let (a, b) = (n.abs(), m.abs());
    let (lo, hi) = (a.min(b), a.max(b));
    let js = half_steps(&rat(lo + 1, 2), &rat(hi - 1, 2));
    let minus = ExactPoly::from_roots(&js);
    let plus = ExactPoly::from_roots(&js.iter().map(|j| -j).collect::<Vec<_>>());
    if a > b {
        RationalFunction::new(minus, plus)
    } else {
        RationalFunction::new(plus, minus)
    }
}

/// Roots of `q_{n,m}`, each simple.
pub fn q_roots_r(n: i64, m: i64) -> Result<Vec<BigRat>> {
    check_parity(n, m)?;
    if n == m {
        return Ok(Vec::new());
    }
    let (a, b) = (n.abs(), m.abs());
    let same_sign = n.signum() * m.signum() >= 0;
    let roots = if same_sign {
        if a > b {
            // ∏ (λ + j), j = (|m|+1)/2 … (|n|−1)/2
            half_steps(&rat(b + 1, 2), &rat(a - 1, 2)).into_iter().map(|j| -j).collect()
        } else {
            // ∏ (λ − j), j = (|n|+1)/2 … (|m|−1)/2
            half_steps(&rat(a + 1, 2), &rat(b - 1, 2))
        }
    } else {
        // ∏ (λ + j), j = −(|m|−1)/2 … (|n|−1)/2
        half_steps(&rat(1 - b, 2), &rat(a - 1, 2)).into_iter().map(|j| -j).collect()
    };
    Ok(roots)
}

/// The intertwining polynomial `q_{n,m}`: a product of distinct monic
/// linear factors.
pub fn q_poly_r(n: i64, m: i64) -> Result<ExactPoly> {
    Ok(ExactPoly::from_roots(&q_roots_r(n, m)?))
}

/// `c_n/c_m` computed by reducing the Gamma forms.
pub fn c_quotient_r_via_gamma(n: i64, m: i64) -> Result<RationalFunction> {
    check_parity(n, m)?;
    gamma_reduce(&c_gamma_r(n), &c_gamma_r(m))
}
