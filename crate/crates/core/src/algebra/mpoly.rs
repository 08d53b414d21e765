use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{BigRat, ExactPoly};
use crate::{Error, Result};

/// Sparse polynomial in `arity` variables λ₀…λ_{d−1}.
///
/// Terms map an exponent vector of length `arity` to a nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMultiPoly {
    arity: usize,
    terms: BTreeMap<Vec<u32>, BigRat>,
}

impl ExactMultiPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity >= 1, "arity must be at least 1");
        Self { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::constant(arity, BigRat::one())
    }

    pub fn constant(arity: usize, c: BigRat) -> Self {
        Self::monomial(arity, vec![0; arity], c)
    }

    pub fn monomial(arity: usize, exps: Vec<u32>, c: BigRat) -> Self {
        let mut out = Self::zero(arity);
        assert_eq!(exps.len(), arity, "exponent vector length");
        if !c.is_zero() {
            out.terms.insert(exps, c);
        }
        out
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Vec<u32>, BigRat)>) -> Result<Self> {
        let mut out = Self::zero(arity);
        for (exps, c) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch { expected: arity, got: exps.len() });
            }
            out.add_term(exps, c);
        }
        Ok(out)
    }

    /// Embeds a univariate polynomial as a polynomial in variable `var`.
    pub fn from_univariate(arity: usize, var: usize, p: &ExactPoly) -> Self {
        assert!(var < arity);
        let mut out = Self::zero(arity);
        for (i, c) in p.coeffs().iter().enumerate() {
            let mut e = vec![0; arity];
            e[var] = i as u32;
            out.add_term(e, c.clone());
        }
        out
    }

    fn add_term(&mut self, exps: Vec<u32>, c: BigRat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigRat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree in variable `var` (`None` for zero).
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn eval(&self, at: &[BigRat]) -> BigRat {
        assert_eq!(at.len(), self.arity);
        self.terms.iter().fold(BigRat::zero(), |acc, (e, c)| {
            let mut t = c.clone();
            for (x, &k) in at.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            acc + t
        })
    }

    /// True iff every term has an even exponent in `var`.
    pub fn is_even_in(&self, var: usize) -> bool {
        self.terms.keys().all(|e| e[var] % 2 == 0)
    }

    /// The term with the smallest odd exponent in `var`, if any.
    pub fn lowest_odd_term_in(&self, var: usize) -> Option<(Vec<u32>, BigRat)> {
        self.terms
            .iter()
            .filter(|(e, _)| e[var] % 2 == 1)
            .min_by_key(|(e, _)| (e[var], (*e).clone()))
            .map(|(e, c)| (e.clone(), c.clone()))
    }

    /// Substitutes `value` for variable `var`; the arity is kept.
    pub fn specialize(&self, var: usize, value: &BigRat) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..e[var] {
                t *= value;
            }
            let mut e2 = e.clone();
            e2[var] = 0;
            out.add_term(e2, t);
        }
        out
    }

    /// Collects coefficients by powers of `var`: index `i` holds the
    /// (var-free) coefficient of λ_var^i.
    fn coeffs_in(&self, var: usize) -> Vec<Self> {
        let deg = match self.degree_in(var) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut out = vec![Self::zero(self.arity); deg + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = std::mem::replace(&mut e2[var], 0) as usize;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    fn shift_in(&self, var: usize, by: u32) -> Self {
        let mut out = Self::zero(self.arity);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2[var] += by;
            out.terms.insert(e2, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Self {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigRat::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.arity, other.arity);
        let mut out = Self::zero(self.arity);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Divides by the univariate `g(λ_var)`:
    /// `self = q·g(λ_var) + r` with `deg_var r < deg g`.
    pub fn div_in_var(&self, g: &ExactPoly, var: usize) -> Result<(Self, Self)> {
        if var >= self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, got: var + 1 });
        }
        let glead = g.leading_coeff().ok_or(Error::DivisionByZeroPoly)?.clone();
        let gdeg = g.degree().unwrap_or(0) as u32;
        let gm = Self::from_univariate(self.arity, var, g);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.arity);
        while let Some(d) = rem.degree_in(var) {
            if d < gdeg {
                break;
            }
            let top = rem.coeffs_in(var).pop().expect("nonzero");
            let factor = top.scale(&(BigRat::one() / &glead)).shift_in(var, d - gdeg);
            rem = rem.sub(&factor.mul(&gm));
            quot = quot.add(&factor);
        }
        Ok((quot, rem))
    }

    /// Formats with variables named `λ1, λ2, …`.
    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (i, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => mono.push(format!("λ{}", i + 1)),
                    _ => mono.push(format!("λ{}^{k}", i + 1)),
                }
            }
            let cs = super::rat_to_string(c);
            let s = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono.join("·")
            } else if *c == -BigRat::one() {
                format!("-{}", mono.join("·"))
            } else {
                format!("{cs}·{}", mono.join("·"))
            };
            parts.push(s);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Display for ExactMultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display())
    }
}

impl fmt::Debug for ExactMultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactMultiPoly[{}]({})", self.arity, self.display())
    }
}
