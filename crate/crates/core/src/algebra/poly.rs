use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{int, BigRat, ComplexF};
use crate::{Error, Result};

/// Dense univariate polynomial in λ with exact rational coefficients,
/// stored in ascending order.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has degree `None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPoly {
    coeffs: Vec<BigRat>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial λ.
    pub fn x() -> Self {
        Self::from_coeffs(vec![BigRat::zero(), BigRat::one()])
    }

    /// `c·λ^deg`.
    pub fn monomial(c: BigRat, deg: usize) -> Self {
        let mut coeffs = vec![BigRat::zero(); deg + 1];
        coeffs[deg] = c;
        Self::from_coeffs(coeffs)
    }

    /// The monic linear factor `λ - root`.
    pub fn linear(root: &BigRat) -> Self {
        Self::from_coeffs(vec![-root.clone(), BigRat::one()])
    }

    /// `scale·λ + shift`.
    pub fn affine(scale: &BigRat, shift: &BigRat) -> Self {
        Self::from_coeffs(vec![shift.clone(), scale.clone()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Product of the monic linear factors `λ - r` over `roots`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a BigRat>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of λ^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn leading_coeff(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &BigRat) -> BigRat {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRat::zero(), |acc, c| acc * at + c)
    }

    pub fn eval_complex(&self, at: ComplexF) -> ComplexF {
        self.coeffs
            .iter()
            .rev()
            .fold(ComplexF::new(0.0, 0.0), |acc, c| {
                acc * at + ComplexF::new(super::to_f64(c), 0.0)
            })
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// λ ↦ −λ.
    pub fn reflect(&self) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn is_even(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| i % 2 == 0 || c.is_zero())
    }

    /// Lowest odd degree carrying a nonzero coefficient.
    pub fn lowest_odd_term(&self) -> Option<(usize, BigRat)> {
        self.coeffs
            .iter()
            .enumerate()
            .find(|(i, c)| i % 2 == 1 && !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
    }

    /// Splits `f` into its even and odd parts.
    pub fn parity_split(&self) -> (Self, Self) {
        let pick = |parity: usize| {
            Self::from_coeffs(
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(i, c)| {
                        if i % 2 == parity {
                            c.clone()
                        } else {
                            BigRat::zero()
                        }
                    })
                    .collect(),
            )
        };
        (pick(0), pick(1))
    }

    /// For an even polynomial `e(λ²)`, returns `e` (in its own variable).
    /// Odd coefficients are ignored.
    pub fn even_part_in_square(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().step_by(2).cloned().collect())
    }

    /// Exact division by λ; the constant term is dropped.
    pub fn shift_down(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().skip(1).cloned().collect())
    }

    /// `h∘p`, expanded.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Euclidean division: `self = q·divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dlead = divisor.leading_coeff().ok_or(Error::DivisionByZeroPoly)?;
        let ddeg = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigRat::zero(); rem.len() - ddeg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + ddeg];
            if top.is_zero() {
                continue;
            }
            let factor = top / dlead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * d;
            }
            quot[shift] = factor;
        }
        rem.truncate(ddeg);
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Divides by a nonzero constant multiple so that the leading
    /// coefficient is one. The zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&(BigRat::one() / lc)),
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Formats the polynomial with the given variable name, highest degree
    /// first.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag_str = super::rat_to_string(&mag);
            match i {
                0 => out.push_str(&mag_str),
                _ => {
                    if !mag.is_one() {
                        if mag.is_integer() {
                            out.push_str(&mag_str);
                        } else {
                            out.push_str(&format!("({mag_str})"));
                        }
                    }
                    out.push_str(var);
                    if i > 1 {
                        out.push_str(&format!("^{i}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("λ"))
    }
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

impl Add for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::from_coeffs(out)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ExactPoly {
            type Output = ExactPoly;
            fn $m(self, rhs: ExactPoly) -> ExactPoly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Lagrange interpolant through `(x_i, y_i)`; nodes must be distinct.
pub fn lagrange_interpolate(points: &[(BigRat, BigRat)]) -> ExactPoly {
    let mut acc = ExactPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = ExactPoly::one();
        let mut denom = BigRat::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i != j {
                basis = &basis * &ExactPoly::linear(xj);
                denom *= xi - xj;
            }
        }
        acc = &acc + &basis.scale(&(yi / denom));
    }
    acc
}
