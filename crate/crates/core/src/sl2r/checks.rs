use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{c_quotient_r, check_parity, q_roots_r, reducibility_points_r, smallest_submodule_r, SigmaR};
use crate::algebra::{int, json::rat_str, rat, BigRat, ExactPoly};
use crate::{Error, Result};

/// Why a polynomial failed a Level-3 check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `φ` does not vanish at a root of `q`.
    UnvanishedRoot {
        #[serde(with = "rat_str")]
        root: BigRat,
        #[serde(with = "rat_str")]
        value: BigRat,
        multiplicity_deficit: u32,
    },
    /// `φ/q` has a nonzero odd-degree coefficient; the lowest one is reported.
    OddQuotient {
        degree: usize,
        #[serde(with = "rat_str")]
        coefficient: BigRat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum Level3Outcome {
    Accept { h: ExactPoly },
    Reject { witness: Witness },
}

impl Level3Outcome {
    pub fn is_accept(&self) -> bool {
        matches!(self, Level3Outcome::Accept { .. })
    }
}

/// Decides whether `φ = h·q_{n,m}` with `h` even.
pub fn level3_check_r(phi: &ExactPoly, n: i64, m: i64) -> Result<Level3Outcome> {
    let roots = q_roots_r(n, m)?;
    debug_assert!(
        roots.windows(2).all(|w| w[0] != w[1]),
        "q_{{n,m}} must have simple roots"
    );
    for r in &roots {
        let value = phi.eval(r);
        if !value.is_zero() {
            return Ok(Level3Outcome::Reject {
                witness: Witness::UnvanishedRoot { root: r.clone(), value, multiplicity_deficit: 1 },
            });
        }
    }
    let (h, rem) = phi.div_rem(&ExactPoly::from_roots(&roots))?;
    debug_assert!(rem.is_zero());
    match h.lowest_odd_term() {
        Some((degree, coefficient)) => Ok(Level3Outcome::Reject { witness: Witness::OddQuotient { degree, coefficient } }),
        None => Ok(Level3Outcome::Accept { h }),
    }
}

/// Vanishing condition at one reducibility point for one K-type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VanishingCheck {
    #[serde(with = "rat_str")]
    pub lambda: BigRat,
    pub ktype: i64,
    #[serde(with = "rat_str")]
    pub value: BigRat,
    pub ok: bool,
}

/// Functional equation for one K-type; `residual` is `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionalCheck {
    pub ktype: i64,
    pub ok: bool,
    pub residual: ExactPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level2Report {
    pub m: i64,
    pub truncation: i64,
    pub vanishing: Vec<VanishingCheck>,
    pub functional: Vec<FunctionalCheck>,
    pub passed: bool,
}

/// Level-2 conditions for a K-type-truncated `ψ` with values in the
/// principal series through K-type `m`.
///
/// * vanishing: at every reducibility point `λ` with `|λ| ≤ (N+1)/2`, each
///   component `ψ_n` with `n` outside the submodule generated by `m` must
///   vanish at `λ`;
/// * functional equation: `ψ_n(−λ)·den = (−1)^{(m−n)/2}·num·ψ_n(λ)` with
///   `num/den = c_n/c_m`.
///
/// Components missing from `psi` are zero.
pub fn level2_check_r(psi: &BTreeMap<i64, ExactPoly>, m: i64, truncation: i64) -> Result<Level2Report> {
    for &n in psi.keys() {
        check_parity(n, m)?;
        if n.abs() > truncation {
            return Err(Error::TruncationTooSmall { key: n, truncation });
        }
    }

    let mut vanishing = Vec::new();
    for lambda in reducibility_points_r(SigmaR::of_ktype(m), &rat(truncation + 1, 2)) {
        let w = smallest_submodule_r(m, &lambda);
        for (&n, p) in psi {
            if w.contains(n) {
                continue;
            }
            let value = p.eval(&lambda);
            let ok = value.is_zero();
            vanishing.push(VanishingCheck { lambda: lambda.clone(), ktype: n, value, ok });
        }
    }

    let mut functional = Vec::new();
    for (&n, p) in psi {
        let c = c_quotient_r(n, m)?;
        let sign = if ((m - n) / 2).rem_euclid(2) == 0 { int(1) } else { int(-1) };
        let lhs = &p.reflect() * c.den();
        let rhs = (c.num() * p).scale(&sign);
        let residual = &lhs - &rhs;
        functional.push(FunctionalCheck { ktype: n, ok: residual.is_zero(), residual });
    }

    let passed = vanishing.iter().all(|v| v.ok) && functional.iter().all(|f| f.ok);
    Ok(Level2Report { m, truncation, vanishing, functional, passed })
}
