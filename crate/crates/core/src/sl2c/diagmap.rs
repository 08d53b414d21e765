use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{check_parity_c, weights};
use crate::algebra::{int, ExactPoly};
use crate::{Error, Result};

/// Weights shared by `δ_n` and `δ_m`; empty when the parities differ.
pub fn common_weights(n: u32, m: u32) -> Vec<i64> {
    if !(n + m).is_multiple_of(2) {
        Vec::new()
    } else {
        weights(n.min(m))
    }
}

/// An element of `Hom_M(E_n, E_m)` with polynomial entries: one polynomial
/// per common weight. For `n ≢ m (mod 2)` the space is zero and the map has
/// no components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedDiagMap {
    src: u32,
    dst: u32,
    components: BTreeMap<i64, ExactPoly>,
}

impl WeightedDiagMap {
    /// Fails unless the keys are exactly the common weights of `src`, `dst`.
    pub fn new(src: u32, dst: u32, components: BTreeMap<i64, ExactPoly>) -> Result<Self> {
        let expected = common_weights(src, dst);
        if let Some(&k) = components.keys().find(|k| !expected.contains(k)) {
            return Err(Error::WeightNotInKType { weight: k, ktype: src.min(dst) as i64 });
        }
        if let Some(&k) = expected.iter().find(|k| !components.contains_key(k)) {
            return Err(Error::Precondition(format!("missing component for weight {k}")));
        }
        Ok(Self { src, dst, components })
    }

    pub fn from_fn(src: u32, dst: u32, mut f: impl FnMut(i64) -> ExactPoly) -> Self {
        let components = common_weights(src, dst).into_iter().map(|k| (k, f(k))).collect();
        Self { src, dst, components }
    }

    pub fn identity(m: u32) -> Self {
        Self::from_fn(m, m, |_| ExactPoly::one())
    }

    pub fn zero(src: u32, dst: u32) -> Self {
        Self::from_fn(src, dst, |_| ExactPoly::zero())
    }

    pub fn src(&self) -> u32 {
        self.src
    }

    pub fn dst(&self) -> u32 {
        self.dst
    }

    /// True when `Hom_M(E_src, E_dst) = 0` because the parities differ.
    pub fn is_zero_hom(&self) -> bool {
        !(self.src + self.dst).is_multiple_of(2)
    }

    pub fn is_zero(&self) -> bool {
        self.components.values().all(ExactPoly::is_zero)
    }

    pub fn components(&self) -> &BTreeMap<i64, ExactPoly> {
        &self.components
    }

    pub fn get(&self, k: i64) -> Option<&ExactPoly> {
        self.components.get(&k)
    }

    /// `other ∘ self`: `self: E_a → E_b`, `other: E_b → E_c`. Weights of
    /// `E_a ∩ E_c` missing from `E_b` get zero.
    pub fn then(&self, other: &Self) -> Result<Self> {
        if self.dst != other.src {
            return Err(Error::Precondition(format!(
                "cannot compose a map into δ_{} with a map out of δ_{}",
                self.dst, other.src
            )));
        }
        Ok(Self::from_fn(self.src, other.dst, |k| match (self.get(k), other.get(k)) {
            (Some(a), Some(b)) => a * b,
            _ => ExactPoly::zero(),
        }))
    }

    /// Componentwise product with a map on the same common weights.
    pub fn pointwise_mul(&self, other: &Self) -> Self {
        Self::from_fn(self.src, self.dst, |k| match other.get(k) {
            Some(b) => &self.components[&k] * b,
            None => ExactPoly::zero(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.src, self.dst) != (other.src, other.dst) {
            return Err(Error::Precondition("adding maps between different K-types".into()));
        }
        Ok(Self::from_fn(self.src, self.dst, |k| &self.components[&k] + &other.components[&k]))
    }

    pub fn scale(&self, c: &crate::algebra::BigRat) -> Self {
        Self::from_fn(self.src, self.dst, |k| self.components[&k].scale(c))
    }

    /// Restriction of a map in `A_m` to the weights of `δ_l`, `l ≤ m`.
    pub fn restrict(&self, l: u32) -> Self {
        Self::from_fn(l, l, |k| self.components[&k].clone())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagWire {
    n: u32,
    m: u32,
    components: BTreeMap<String, ExactPoly>,
}

impl Serialize for WeightedDiagMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        DiagWire {
            n: self.src,
            m: self.dst,
            components: self.components.iter().map(|(k, p)| (k.to_string(), p.clone())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedDiagMap {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = DiagWire::deserialize(d)?;
        let mut comps = BTreeMap::new();
        for (k, p) in w.components {
            let k: i64 = k.trim().parse().map_err(|_| D::Error::custom(format!("bad weight `{k}`")))?;
            comps.insert(k, p);
        }
        WeightedDiagMap::new(w.n, w.m, comps).map_err(D::Error::custom)
    }
}

/// `q⁺_m : E_m → E_{m+2}`, equal to `λ + m + 2` on every weight.
pub fn q_plus(m: u32) -> WeightedDiagMap {
    let c = int(m as i64 + 2);
    WeightedDiagMap::from_fn(m, m + 2, |_| ExactPoly::affine(&int(1), &c))
}

/// `q⁻_m : E_{m+2} → E_m`, equal to `((m+2)² − k²)(λ − (m+2))` at weight `k`.
pub fn q_minus(m: u32) -> WeightedDiagMap {
    let m2 = m as i64 + 2;
    WeightedDiagMap::from_fn(m + 2, m, |k| ExactPoly::linear(&int(m2)).scale(&int(m2 * m2 - k * k)))
}

/// `q_{n,m}` in closed form.
pub fn q_nm_c(n: u32, m: u32) -> Result<WeightedDiagMap> {
    check_parity_c(n, m)?;
    let (n64, m64) = (n as i64, m as i64);
    Ok(WeightedDiagMap::from_fn(n, m, |k| {
        if n < m {
            (n64..=m64 - 2)
                .step_by(2)
                .fold(ExactPoly::one(), |acc, j| &acc * &ExactPoly::affine(&int(1), &int(j + 2)))
        } else {
            (m64..=n64 - 2).step_by(2).fold(ExactPoly::one(), |acc, j| {
                &acc * &ExactPoly::linear(&int(j + 2)).scale(&int((j + 2) * (j + 2) - k * k))
            })
        }
    }))
}

/// `q_{n,m}` as the literal composite of the `q⁺` / `q⁻` chain.
pub fn q_chain_c(n: u32, m: u32) -> Result<WeightedDiagMap> {
    check_parity_c(n, m)?;
    let mut acc = WeightedDiagMap::identity(n);
    let mut at = n;
    while at < m {
        acc = acc.then(&q_plus(at))?;
        at += 2;
    }
    while at > m {
        acc = acc.then(&q_minus(at - 2))?;
        at -= 2;
    }
    Ok(acc)
}

/// Roots of the weight-`k` component of `q_{n,m}` (all simple).
pub(crate) fn q_roots_c(n: u32, m: u32) -> Vec<i64> {
    let (n, m) = (n as i64, m as i64);
    if n < m {
        (n..=m - 2).step_by(2).map(|j| -(j + 2)).collect()
    } else {
        (m..=n - 2).step_by(2).map(|j| j + 2).collect()
    }
}
