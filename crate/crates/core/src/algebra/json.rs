//! JSON encodings.
//!
//! Rationals are strings (`"p/q"` or `"p"`), polynomials are
//! `{"coeffs": [...]}` in ascending order, multivariate polynomials are
//! `{"arity": d, "terms": [{"exps": [...], "coeff": "p/q"}]}` and rational
//! functions are `{"num": ..., "den": ...}`.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{parse_rat, rat_to_string, BigRat, ExactMultiPoly, ExactPoly, RationalFunction};

/// Serde adapter for a bare `BigRat` field: `#[serde(with = "rat_str")]`.
pub mod rat_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &BigRat, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&rat_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRat, D::Error> {
        let s = String::deserialize(d)?;
        parse_rat(&s).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyWire {
    coeffs: Vec<String>,
}

impl Serialize for ExactPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyWire { coeffs: self.coeffs().iter().map(rat_to_string).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = PolyWire::deserialize(d)?;
        let coeffs = w
            .coeffs
            .iter()
            .map(|c| parse_rat(c))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        Ok(ExactPoly::from_coeffs(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermWire {
    exps: Vec<u32>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MultiWire {
    arity: usize,
    terms: Vec<TermWire>,
}

impl Serialize for ExactMultiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        MultiWire {
            arity: self.arity(),
            terms: self
                .terms()
                .map(|(e, c)| TermWire { exps: e.clone(), coeff: rat_to_string(c) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactMultiPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = MultiWire::deserialize(d)?;
        if w.arity == 0 {
            return Err(D::Error::custom("arity must be at least 1"));
        }
        let terms = w
            .terms
            .into_iter()
            .map(|t| parse_rat(&t.coeff).map(|c| (t.exps, c)))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        ExactMultiPoly::from_terms(w.arity, terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatFuncWire {
    num: ExactPoly,
    den: ExactPoly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatFuncWire { num: self.num().clone(), den: self.den().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = RatFuncWire::deserialize(d)?;
        RationalFunction::new(w.num, w.den).map_err(D::Error::custom)
    }
}
