use std::fmt;

use num_traits::{One, Zero};

use super::{BigRat, ComplexF, ExactPoly};
use crate::{Error, Result};

/// Reduced quotient `num/den` with a monic denominator.
///
/// Canonical form makes equality syntactic: two rational functions are equal
/// iff their fields are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: ExactPoly,
    den: ExactPoly,
}

impl RationalFunction {
    pub fn new(num: ExactPoly, den: ExactPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g)?;
        let (den, _) = den.div_rem(&g)?;
        let lc = den.leading_coeff().expect("nonzero").clone();
        let inv = BigRat::one() / lc;
        Ok(Self { num: num.scale(&inv), den: den.scale(&inv) })
    }

    pub fn from_poly(p: ExactPoly) -> Self {
        Self { num: p, den: ExactPoly::one() }
    }

    pub fn zero() -> Self {
        Self::from_poly(ExactPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(ExactPoly::one())
    }

    pub fn num(&self) -> &ExactPoly {
        &self.num
    }

    pub fn den(&self) -> &ExactPoly {
        &self.den
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().div(self)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    pub fn pow(&self, e: i32) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok((0..e.unsigned_abs()).fold(Self::one(), |acc, _| acc.mul(&base)))
    }

    /// λ ↦ −λ.
    pub fn reflect(&self) -> Self {
        Self::new(self.num.reflect(), self.den.reflect()).expect("nonzero denominator")
    }

    /// `None` at a pole.
    pub fn eval(&self, at: &BigRat) -> Option<BigRat> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(at) / d)
        }
    }

    pub fn eval_complex(&self, at: ComplexF) -> ComplexF {
        self.num.eval_complex(at) / self.den.eval_complex(at)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(c: &[i64]) -> ExactPoly {
        ExactPoly::from_ints(c)
    }

    #[test]
    fn canonical_form() {
        // (2λ−2)/(4λ²−4) = (1/2)/(λ+1)
        let r = RationalFunction::new(p(&[-2, 2]), p(&[-4, 0, 4])).unwrap();
        assert_eq!(r.den(), &p(&[1, 1]));
        assert_eq!(r.num(), &ExactPoly::constant(crate::algebra::rat(1, 2)));
        assert_eq!(RationalFunction::new(p(&[]), p(&[3, 1])).unwrap(), RationalFunction::zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(RationalFunction::new(p(&[1]), p(&[])), Err(Error::DivisionByZeroPoly));
    }

    #[test]
    fn multiplication_cancels() {
        let a = RationalFunction::new(p(&[-1, 1]), p(&[1, 1])).unwrap();
        assert!(a.mul(&a.inv().unwrap()).is_one());
        assert_eq!(a.eval(&int(3)), Some(crate::algebra::rat(1, 2)));
        assert_eq!(a.eval(&int(-1)), None);
    }
}
