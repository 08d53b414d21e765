//! `SL(2,C)`: K-types `δ_n` of `SU(2)` (`n ≥ 0`, dimension `n+1`), principal
//! series `H^{σ,λ}` with `σ ∈ ℤ`, and the spherical-function algebras `A_m`.
//!
//! Maps in `Hom_M(E_n, E_m)` are diagonal in an M-weight basis and are stored
//! as [`WeightedDiagMap`]s: one polynomial in `λ` per common weight.

mod decompose;
mod diagmap;
mod level;
mod reducibility;

pub use decompose::{algebra_check, free_module_decompose, synthesize, AlgebraOutcome, AlgebraWitness, GeneratorCoords};
pub use diagmap::{common_weights, q_chain_c, q_minus, q_nm_c, q_plus, WeightedDiagMap};
pub use level::{
    extend_interpolate, level2_functional_check_c, level2_functional_check_c_to, level3_check_c, Level2ReportC,
    Level3OutcomeC, WeightCheck, WitnessC,
};
pub use reducibility::{
    diamond, reducibility_c, reducibility_c_complex, Arrow, IntertwinerDiamond, ReducibilityC, VerdictC,
};

use crate::algebra::{gamma_reduce, rat, BigRat, ExactPoly, GammaFactor, GammaProduct, RationalFunction};
use crate::{Error, Result};

/// Weights `−n, −n+2, …, n` of `δ_n`.
pub fn weights(n: u32) -> Vec<i64> {
    let n = n as i64;
    (0..=n).map(|j| -n + 2 * j).collect()
}

/// `δ_n ⊗ δ_m = δ_{n+m} ⊕ δ_{n+m−2} ⊕ … ⊕ δ_{|n−m|}`.
pub fn clebsch_gordan(n: u32, m: u32) -> Vec<u32> {
    (0..=n.min(m)).map(|j| n + m - 2 * j).collect()
}

pub(crate) fn check_parity_c(n: u32, m: u32) -> Result<()> {
    if !(n + m).is_multiple_of(2) {
        return Err(Error::ParityMismatch(format!("K-types {n} and {m} have different parity")));
    }
    Ok(())
}

/// `c_n / c_m`; independent of `σ`.
pub fn c_quotient_c(n: u32, m: u32) -> Result<RationalFunction> {
    check_parity_c(n, m)?;
    let (lo, hi) = (n.min(m) as i64, n.max(m) as i64);
    let js: Vec<BigRat> = (lo + 2..=hi).step_by(2).map(|j| rat(j, 1)).collect();
    let minus = ExactPoly::from_roots(&js);
    let plus = ExactPoly::from_roots(&js.iter().map(|j| -j).collect::<Vec<_>>());
    if n > m {
        RationalFunction::new(minus, plus)
    } else {
        RationalFunction::new(plus, minus)
    }
}

/// `c_{n,σ}(λ) = Γ(½(λ+σ))Γ(½(λ−σ)) / (Γ(½(λ+n+2)) Γ(½(λ−n)))`, defined
/// when `σ` is a weight of `δ_n`.
pub fn c_gamma_c(n: u32, sigma: i64) -> Result<GammaProduct> {
    let ni = n as i64;
    if sigma.abs() > ni || (ni - sigma).rem_euclid(2) != 0 {
        return Err(Error::WeightNotInKType { weight: sigma, ktype: ni });
    }
    let half = rat(1, 2);
    Ok(GammaProduct::new(
        RationalFunction::one(),
        0,
        [
            GammaFactor { scale: half.clone(), shift: rat(sigma, 2), exponent: 1 },
            GammaFactor { scale: half.clone(), shift: rat(-sigma, 2), exponent: 1 },
            GammaFactor { scale: half.clone(), shift: rat(ni + 2, 2), exponent: -1 },
            GammaFactor { scale: half, shift: rat(-ni, 2), exponent: -1 },
        ],
    ))
}

/// `c_{n,σ}/c_{m,σ}` by Gamma reduction.
pub fn c_quotient_c_via_gamma(n: u32, m: u32, sigma: i64) -> Result<RationalFunction> {
    check_parity_c(n, m)?;
    gamma_reduce(&c_gamma_c(n, sigma)?, &c_gamma_c(m, sigma)?)
}
