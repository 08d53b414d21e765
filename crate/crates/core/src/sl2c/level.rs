use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::diagmap::q_roots_c;
use super::{
    algebra_check, c_quotient_c, check_parity_c, free_module_decompose, q_nm_c, weights, AlgebraOutcome,
    AlgebraWitness, GeneratorCoords, WeightedDiagMap,
};
use crate::algebra::{int, json::rat_str, lagrange_interpolate, BigRat, ExactPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessC {
    /// `φ_weight` does not vanish at a root of the weight component of `q`.
    UnvanishedRoot {
        weight: i64,
        root: i64,
        #[serde(with = "rat_str")]
        value: BigRat,
    },
    /// The cofactor `φ/q` is not in `A_l`.
    Algebra { witness: AlgebraWitness },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum Level3OutcomeC {
    Accept { h: WeightedDiagMap, coords: GeneratorCoords },
    Reject { witness: WitnessC },
}

impl Level3OutcomeC {
    pub fn is_accept(&self) -> bool {
        matches!(self, Level3OutcomeC::Accept { .. })
    }
}

/// Decides whether `φ ∈ Hom_M(E_n, E_m)` factors as `h·q_{n,m}` with
/// `h ∈ A_{min(n,m)}`, and if so returns `h` and its generator coordinates.
pub fn level3_check_c(phi: &WeightedDiagMap) -> Result<Level3OutcomeC> {
    let (n, m) = (phi.src(), phi.dst());
    check_parity_c(n, m)?;
    let q = q_nm_c(n, m)?;
    let roots = q_roots_c(n, m);
    let l = n.min(m);
    let mut h = BTreeMap::new();
    for (&k, pk) in phi.components() {
        for &r in &roots {
            let value = pk.eval(&int(r));
            if !value.is_zero() {
                return Ok(Level3OutcomeC::Reject { witness: WitnessC::UnvanishedRoot { weight: k, root: r, value } });
            }
        }
        let (quot, rem) = pk.div_rem(q.get(k).expect("same weights"))?;
        debug_assert!(rem.is_zero());
        h.insert(k, quot);
    }
    let h = WeightedDiagMap::new(l, l, h)?;
    match algebra_check(&h)? {
        AlgebraOutcome::Reject { witness } => Ok(Level3OutcomeC::Reject { witness: WitnessC::Algebra { witness } }),
        AlgebraOutcome::Accept => {
            let coords = free_module_decompose(&h)?;
            Ok(Level3OutcomeC::Accept { h, coords })
        }
    }
}

/// Extends `h ∈ A_m` to `A_n` (`n > m`, same parity) by Lagrange
/// interpolation: `h̃_k` interpolates the values `h̃_l(k)` at the weights `l`
/// of `δ_{k−2}`, and `h̃_{−k}(λ) = h̃_k(−λ)`.
pub fn extend_interpolate(h: &WeightedDiagMap, target: u32) -> Result<WeightedDiagMap> {
    if let AlgebraOutcome::Reject { witness } = algebra_check(h)? {
        return Err(Error::NotInAlgebra(serde_json::to_string(&witness).unwrap_or_default()));
    }
    let m = h.src();
    check_parity_c(m, target)?;
    if target < m {
        return Err(Error::Precondition(format!("target K-type {target} is below {m}")));
    }
    let mut comps = h.components().clone();
    for k in (m as i64 + 2..=target as i64).step_by(2) {
        let nodes: Vec<(BigRat, BigRat)> =
            weights(k as u32 - 2).into_iter().map(|l| (int(l), comps[&l].eval(&int(k)))).collect();
        let hk = lagrange_interpolate(&nodes);
        comps.insert(-k, hk.reflect());
        comps.insert(k, hk);
    }
    WeightedDiagMap::new(target, target, comps)
}

/// Functional equation at one weight; `residual` is `lhs − rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCheck {
    pub weight: i64,
    pub ok: bool,
    pub residual: ExactPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level2ReportC {
    pub n: u32,
    pub m: u32,
    pub checks: Vec<WeightCheck>,
    pub passed: bool,
}

/// Scalar form of the Knapp-Stein condition for `ψ` with values in `E_n`:
/// `ψ_{−k}(−λ) = ψ_k(λ)` at every weight. Missing weights are zero.
pub fn level2_functional_check_c(psi: &BTreeMap<i64, ExactPoly>, n: u32) -> Result<Level2ReportC> {
    level2_functional_check_c_to(psi, n, n)
}

/// The same condition for a map `E_n → E_m`:
/// `ψ_{−k}(−λ)·Q_den = (−1)^{(m−n)/2}·Q_num·ψ_k(λ)` with
/// `Q = c_m/c_n`. Keys must be common weights of `δ_n` and `δ_m`.
pub fn level2_functional_check_c_to(psi: &BTreeMap<i64, ExactPoly>, n: u32, m: u32) -> Result<Level2ReportC> {
    check_parity_c(n, m)?;
    let ws = weights(n.min(m));
    if let Some(&k) = psi.keys().find(|k| !ws.contains(k)) {
        return Err(Error::WeightNotInKType { weight: k, ktype: n.min(m) as i64 });
    }
    let q = c_quotient_c(m, n)?;
    let sign = if ((m as i64 - n as i64) / 2).rem_euclid(2) == 0 { int(1) } else { int(-1) };
    let zero = ExactPoly::zero();
    let mut checks = Vec::new();
    for k in ws {
        if !psi.contains_key(&k) && !psi.contains_key(&-k) {
            continue;
        }
        let pk = psi.get(&k).unwrap_or(&zero);
        let pmk = psi.get(&-k).unwrap_or(&zero);
        let lhs = &pmk.reflect() * q.den();
        let rhs = (q.num() * pk).scale(&sign);
        let residual = &lhs - &rhs;
        checks.push(WeightCheck { weight: k, ok: residual.is_zero(), residual });
    }
    let passed = checks.iter().all(|c| c.ok);
    Ok(Level2ReportC { n, m, checks, passed })
}
