use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{BigRat, ComplexF, ExactPoly, RationalFunction};
use crate::{Error, Result};

/// One factor `Γ(scale·λ + shift)^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaFactor {
    pub scale: BigRat,
    pub shift: BigRat,
    pub exponent: i32,
}

/// Formal product `prefactor · π^{−inv_sqrt_pi/2} · ∏ Γ(scale·λ + shift)^e`.
///
/// Factors with the same `(scale, shift)` are merged and zero exponents
/// dropped, so two products are equal iff they are structurally equal.
#[derive(Clone, PartialEq, Eq)]
pub struct GammaProduct {
    prefactor: RationalFunction,
    inv_sqrt_pi: i32,
    factors: BTreeMap<(BigRat, BigRat), i32>,
}

impl GammaProduct {
    pub fn one() -> Self {
        Self { prefactor: RationalFunction::one(), inv_sqrt_pi: 0, factors: BTreeMap::new() }
    }

    pub fn new(
        prefactor: RationalFunction,
        inv_sqrt_pi: i32,
        factors: impl IntoIterator<Item = GammaFactor>,
    ) -> Self {
        let mut out = Self { prefactor, inv_sqrt_pi, factors: BTreeMap::new() };
        for f in factors {
            out.push(f.scale, f.shift, f.exponent);
        }
        out
    }

    fn push(&mut self, scale: BigRat, shift: BigRat, exponent: i32) {
        let e = self.factors.entry((scale.clone(), shift.clone())).or_insert(0);
        *e += exponent;
        if *e == 0 {
            self.factors.remove(&(scale, shift));
        }
    }

    pub fn prefactor(&self) -> &RationalFunction {
        &self.prefactor
    }

    /// Power of `1/√π` carried symbolically.
    pub fn inv_sqrt_pi(&self) -> i32 {
        self.inv_sqrt_pi
    }

    pub fn factors(&self) -> Vec<GammaFactor> {
        self.factors
            .iter()
            .map(|((scale, shift), &exponent)| GammaFactor {
                scale: scale.clone(),
                shift: shift.clone(),
                exponent,
            })
            .collect()
    }

    /// `self / other` as a formal product (no reduction).
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        let mut out = Self {
            prefactor: self.prefactor.div(&other.prefactor)?,
            inv_sqrt_pi: self.inv_sqrt_pi - other.inv_sqrt_pi,
            factors: self.factors.clone(),
        };
        for ((s, a), e) in &other.factors {
            out.push(s.clone(), a.clone(), -e);
        }
        Ok(out)
    }

    /// Numeric value at `lambda`; `gamma` is the complex Gamma function.
    pub fn eval_with(&self, lambda: ComplexF, gamma: impl Fn(ComplexF) -> Result<ComplexF>) -> Result<ComplexF> {
        let mut v = self.prefactor.eval_complex(lambda);
        v *= std::f64::consts::PI.powf(-0.5 * self.inv_sqrt_pi as f64);
        for ((s, a), &e) in &self.factors {
            let z = lambda * super::to_f64(s) + super::to_f64(a);
            v *= gamma(z)?.powi(e);
        }
        Ok(v)
    }
}

impl fmt::Display for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |pos: bool| -> String {
            let mut s = String::new();
            for ((scale, shift), &e) in &self.factors {
                if (e > 0) != pos {
                    continue;
                }
                let arg = ExactPoly::affine(scale, shift).display_with("λ");
                s.push_str(&format!("Γ({arg})"));
                if e.abs() != 1 {
                    s.push_str(&format!("^{}", e.abs()));
                }
            }
            s
        };
        let (num, den) = (render(true), render(false));
        if !self.prefactor.is_one() {
            write!(f, "[{}]·", self.prefactor)?;
        }
        if self.inv_sqrt_pi != 0 {
            write!(f, "π^({}/2)·", -self.inv_sqrt_pi)?;
        }
        write!(f, "{}", if num.is_empty() { "1".into() } else { num })?;
        if !den.is_empty() {
            write!(f, " / {den}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GammaProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GammaProduct({self})")
    }
}

fn frac(x: &BigRat) -> BigRat {
    x - x.floor()
}

/// Reduces `numerator / denominator` to a rational function using
/// `Γ(z+1) = zΓ(z)`.
///
/// Factors are grouped by scale and by the class of the shift mod 1; within
/// each class the exponents must cancel, and every factor is rewritten
/// relative to the smallest shift of its class. The `1/√π` powers must also
/// cancel.
pub fn gamma_reduce(numerator: &GammaProduct, denominator: &GammaProduct) -> Result<RationalFunction> {
    let q = numerator.quotient(denominator)?;
    if q.inv_sqrt_pi != 0 {
        return Err(Error::IrreducibleGammaQuotient(format!(
            "uncancelled power π^({}/2)",
            -q.inv_sqrt_pi
        )));
    }

    let mut classes: BTreeMap<(BigRat, BigRat), Vec<(BigRat, i32)>> = BTreeMap::new();
    for ((s, a), &e) in &q.factors {
        classes.entry((s.clone(), frac(a))).or_default().push((a.clone(), e));
    }

    let mut num = ExactPoly::one();
    let mut den = ExactPoly::one();
    for ((scale, _), members) in &classes {
        let total: i32 = members.iter().map(|(_, e)| e).sum();
        if total != 0 {
            let args: Vec<String> = members
                .iter()
                .map(|(a, e)| format!("Γ({})^{e}", ExactPoly::affine(scale, a).display_with("λ")))
                .collect();
            return Err(Error::IrreducibleGammaQuotient(format!(
                "factors {} do not pair up (net exponent {total})",
                args.join("·")
            )));
        }
        let base = members.iter().map(|(a, _)| a).min().expect("nonempty").clone();
        for (a, e) in members {
            let steps = (a - &base).to_integer();
            let mut block = ExactPoly::one();
            let mut j = BigRat::zero();
            while j < BigRat::from_integer(steps.clone()) {
                block = &block * &ExactPoly::affine(scale, &(&base + &j));
                j += BigRat::one();
            }
            let block = block.pow(e.unsigned_abs());
            if *e > 0 {
                num = &num * &block;
            } else {
                den = &den * &block;
            }
        }
    }
    Ok(RationalFunction::new(num, den)?.mul(&q.prefactor))
}
