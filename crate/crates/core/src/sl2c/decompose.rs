use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{weights, WeightedDiagMap};
use crate::algebra::{int, json::rat_str, rat, BigRat, ExactPoly};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AlgebraWitness {
    /// `φ_k(λ) ≠ φ_{−k}(−λ)`.
    Symmetry { weight: i64 },
    /// `φ_k(l) ≠ φ_l(k)`.
    Exchange {
        k: i64,
        l: i64,
        #[serde(with = "rat_str")]
        lhs: BigRat,
        #[serde(with = "rat_str")]
        rhs: BigRat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum AlgebraOutcome {
    Accept,
    Reject { witness: AlgebraWitness },
}

impl AlgebraOutcome {
    pub fn is_accept(&self) -> bool {
        matches!(self, AlgebraOutcome::Accept)
    }
}

/// Membership in `A_m`: `φ_k(λ) = φ_{−k}(−λ)` and `φ_k(l) = φ_l(k)` for all
/// weights `k, l` of `δ_m`.
pub fn algebra_check(phi: &WeightedDiagMap) -> Result<AlgebraOutcome> {
    if phi.src() != phi.dst() {
        return Err(Error::SrcDstMismatch { src: phi.src(), dst: phi.dst() });
    }
    let c = phi.components();
    for (&k, p) in c {
        if c[&-k] != p.reflect() {
            return Ok(AlgebraOutcome::Reject { witness: AlgebraWitness::Symmetry { weight: k } });
        }
    }
    for (&k, pk) in c {
        for (&l, pl) in c.range(k + 1..) {
            let (lhs, rhs) = (pk.eval(&int(l)), pl.eval(&int(k)));
            if lhs != rhs {
                return Ok(AlgebraOutcome::Reject { witness: AlgebraWitness::Exchange { k, l, lhs, rhs } });
            }
        }
    }
    Ok(AlgebraOutcome::Accept)
}

/// Coordinates of a map in `A_m` over the generators `(kλ)^l`, `l = 0…m`:
/// `φ_k(λ) = Σ_l h_l(λ² + k²)·(kλ)^l`. Each `h_l` is a polynomial in `μ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCoords {
    pub m: u32,
    pub h: Vec<ExactPoly>,
}

impl GeneratorCoords {
    pub fn new(m: u32, h: Vec<ExactPoly>) -> Result<Self> {
        if h.len() != m as usize + 1 {
            return Err(Error::Precondition(format!("expected {} coordinates, got {}", m + 1, h.len())));
        }
        Ok(Self { m, h })
    }

    pub fn zero(m: u32) -> Self {
        Self { m, h: vec![ExactPoly::zero(); m as usize + 1] }
    }
}

/// `λ² + k²`.
fn casimir(k: i64) -> ExactPoly {
    ExactPoly::from_coeffs(vec![int(k * k), int(0), int(1)])
}

/// `μ − c`.
fn mu_minus(c: i64) -> ExactPoly {
    ExactPoly::from_coeffs(vec![int(-c), int(1)])
}

fn synth_component(h: &[ExactPoly], k: i64) -> ExactPoly {
    let x = ExactPoly::from_coeffs(vec![int(0), int(k)]);
    let cas = casimir(k);
    let mut acc = ExactPoly::zero();
    let mut xp = ExactPoly::one();
    for hl in h {
        acc = &acc + &(&hl.compose(&cas) * &xp);
        xp = &xp * &x;
    }
    acc
}

/// `φ_k = Σ_l h_l(λ²+k²)·(kλ)^l` for every weight `k` of `δ_m`.
pub fn synthesize(coords: &GeneratorCoords) -> WeightedDiagMap {
    WeightedDiagMap::from_fn(coords.m, coords.m, |k| synth_component(&coords.h, k))
}

/// Splits `r(λ) = a(λ² + c) + b(λ² + c)·λ` into `(a, b)`.
fn parity_in_shifted_square(r: &ExactPoly, c: i64) -> (ExactPoly, ExactPoly) {
    let (even, odd) = r.parity_split();
    let a = even.even_part_in_square().compose(&mu_minus(c));
    let b = odd.shift_down().even_part_in_square().compose(&mu_minus(c));
    (a, b)
}

/// Polynomial in `X` with coefficients in `ℚ[μ]`, index = power of `X`.
type XPoly = Vec<ExactPoly>;

fn xpoly_mul(a: &XPoly, b: &XPoly) -> XPoly {
    let mut out = vec![ExactPoly::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// `p_m(λ,k)` in the variables `X = kλ` and `μ = λ² + k²`:
/// `X^{[m even]} · ∏_{0<l≤m−2, l≡m} (X² − l²μ + l⁴)`.
///
/// Each quadratic factor equals `(k² − l²)(λ² − l²)`, so `p_m` vanishes at
/// every weight `|k| ≤ m−2` and equals `c_m·∏_{l}(λ − l)` at `k = m`.
fn p_m_in_generators(m: u32) -> XPoly {
    let mut acc: XPoly = if m.is_multiple_of(2) {
        vec![ExactPoly::zero(), ExactPoly::one()]
    } else {
        vec![ExactPoly::one()]
    };
    for l in ((m % 2) as i64..=m as i64 - 2).step_by(2).filter(|&l| l > 0) {
        let l2 = l * l;
        let c0 = ExactPoly::from_coeffs(vec![int(l2 * l2), int(-l2)]);
        acc = xpoly_mul(&acc, &vec![c0, ExactPoly::zero(), ExactPoly::one()]);
    }
    acc
}

/// `p_m(λ, m) = c_m·∏_{l ∈ weights(m−2)} (λ − l)` with `c_m = ∏ (m − l)`.
fn p_m_at_top(m: u32) -> ExactPoly {
    let ls = weights(m - 2);
    let c_m: i64 = ls.iter().map(|l| m as i64 - l).product();
    ExactPoly::from_roots(&ls.iter().map(|&l| int(l)).collect::<Vec<_>>()).scale(&int(c_m))
}

fn decompose_rec(phi: &BTreeMap<i64, ExactPoly>, m: u32) -> Result<Vec<ExactPoly>> {
    match m {
        0 => Ok(vec![phi[&0].even_part_in_square()]),
        1 => {
            let (a, b) = parity_in_shifted_square(&phi[&1], 1);
            Ok(vec![a, b])
        }
        _ => {
            let lower: BTreeMap<i64, ExactPoly> =
                phi.iter().filter(|(k, _)| k.abs() <= m as i64 - 2).map(|(k, p)| (*k, p.clone())).collect();
            let mut h = decompose_rec(&lower, m - 2)?;
            h.resize(m as usize + 1, ExactPoly::zero());

            let mi = m as i64;
            let defect = &phi[&mi] - &synth_component(&h, mi);
            let (cof, rem) = defect.div_rem(&p_m_at_top(m))?;
            if !rem.is_zero() {
                return Err(Error::InternalNonDivisibility { m });
            }
            let (a, b) = parity_in_shifted_square(&cof, mi * mi);
            let b = b.scale(&rat(1, mi));
            for (j, pj) in p_m_in_generators(m).iter().enumerate() {
                h[j] = &h[j] + &(&a * pj);
                if !b.is_zero() {
                    h[j + 1] = &h[j + 1] + &(&b * pj);
                }
            }
            Ok(h)
        }
    }
}

/// The unique generator coordinates of a map in `A_m`.
pub fn free_module_decompose(phi: &WeightedDiagMap) -> Result<GeneratorCoords> {
    match algebra_check(phi)? {
        AlgebraOutcome::Accept => {}
        AlgebraOutcome::Reject { witness } => {
            return Err(Error::NotInAlgebra(serde_json::to_string(&witness).unwrap_or_default()))
        }
    }
    let m = phi.src();
    let h = decompose_rec(phi.components(), m)?;
    debug_assert_eq!(&synthesize(&GeneratorCoords { m, h: h.clone() }), phi);
    Ok(GeneratorCoords { m, h })
}
