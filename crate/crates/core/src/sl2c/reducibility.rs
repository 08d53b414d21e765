use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::clebsch_gordan;
use crate::algebra::{json::rat_str, rat_to_string, to_i64, BigRat};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum VerdictC {
    Irreducible,
    Reducible {
        fm: i64,
        #[serde(rename = "fn")]
        fn_: i64,
        /// Whether the infinite-dimensional factor `R` is the socle
        /// (`λ > 0`); otherwise the finite-dimensional `F` is.
        socle_is_r: bool,
        /// K-types of `F`: `clebsch_gordan(fm, fn)`.
        finite_dim_ktypes: Vec<u32>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducibilityC {
    pub sigma: i64,
    #[serde(with = "rat_str")]
    pub lambda: BigRat,
    #[serde(flatten)]
    pub verdict: VerdictC,
}

impl ReducibilityC {
    pub fn is_reducible(&self) -> bool {
        matches!(self.verdict, VerdictC::Reducible { .. })
    }

    /// K-types of `H^{σ,λ}`: `t ≥ |σ|`, `t ≡ σ (mod 2)`.
    pub fn is_ktype(&self, t: u32) -> bool {
        let t = t as i64;
        t >= self.sigma.abs() && (t - self.sigma).rem_euclid(2) == 0
    }

    /// Whether K-type `t` lies in the finite-dimensional factor.
    pub fn in_finite(&self, t: u32) -> bool {
        match &self.verdict {
            VerdictC::Irreducible => false,
            VerdictC::Reducible { finite_dim_ktypes, .. } => finite_dim_ktypes.contains(&t),
        }
    }

    /// Whether K-type `t` lies in the infinite-dimensional factor `R`.
    pub fn in_r(&self, t: u32) -> bool {
        self.is_reducible() && self.is_ktype(t) && !self.in_finite(t)
    }
}

/// Reducibility of `H^{σ,λ}` for real rational `λ`: reducible iff `λ` is an
/// integer with `|λ| > |σ|` and `|λ| − |σ|` even.
pub fn reducibility_c(sigma: i64, lambda: &BigRat) -> ReducibilityC {
    let verdict = match to_i64(lambda) {
        Some(l) if l.abs() > sigma.abs() && (l.abs() - sigma.abs()) % 2 == 0 => {
            let (s, l_pos) = if l > 0 { (sigma, l) } else { (-sigma, -l) };
            let fm = (s + l_pos) / 2 - 1;
            let fn_ = (l_pos - s) / 2 - 1;
            VerdictC::Reducible {
                fm,
                fn_,
                socle_is_r: l > 0,
                finite_dim_ktypes: clebsch_gordan(fm as u32, fn_ as u32),
            }
        }
        _ => VerdictC::Irreducible,
    };
    ReducibilityC { sigma, lambda: lambda.clone(), verdict }
}

/// Entry point for complex `λ = re + i·im`; non-real parameters are always
/// irreducible.
pub fn reducibility_c_complex(sigma: i64, re: &BigRat, im: &BigRat) -> ReducibilityC {
    if im.is_zero() {
        reducibility_c(sigma, re)
    } else {
        ReducibilityC { sigma, lambda: re.clone(), verdict: VerdictC::Irreducible }
    }
}

/// A labelled intertwiner between two parameter pairs `(σ, λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub label: String,
    pub from: (i64, i64),
    pub to: (i64, i64),
}

/// The four principal series in the orbit of `(σ, λ)` and the six
/// intertwiners between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwinerDiamond {
    /// `(σ,λ), (−σ,−λ), (λ,σ), (−λ,−σ)`.
    pub vertices: [(i64, i64); 4],
    pub arrows: Vec<Arrow>,
}

impl IntertwinerDiamond {
    /// Vertices sorted, as a canonical orbit key.
    pub fn orbit_key(&self) -> Vec<(i64, i64)> {
        let mut v = self.vertices.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    }
}

pub fn diamond(sigma: i64, lambda: &BigRat) -> Result<IntertwinerDiamond> {
    let r = reducibility_c(sigma, lambda);
    let l = match (&r.verdict, to_i64(lambda)) {
        (VerdictC::Reducible { .. }, Some(l)) => l,
        _ => return Err(Error::NotReduciblePoint { sigma, lambda: rat_to_string(lambda) }),
    };
    let s = sigma;
    let arrow = |label: &str, from, to| Arrow { label: label.into(), from, to };
    Ok(IntertwinerDiamond {
        vertices: [(s, l), (-s, -l), (l, s), (-l, -s)],
        arrows: vec![
            arrow("L~", (-s, -l), (l, s)),
            arrow("L", (-l, -s), (s, l)),
            arrow("L~'", (-s, -l), (-l, -s)),
            arrow("L'", (l, s), (s, l)),
            arrow("J", (l, s), (-l, -s)),
            arrow("J", (s, l), (-s, -l)),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn examples() {
        let r = reducibility_c(0, &int(2));
        assert_eq!(
            r.verdict,
            VerdictC::Reducible { fm: 0, fn_: 0, socle_is_r: true, finite_dim_ktypes: vec![0] }
        );
        assert!(!reducibility_c(1, &int(2)).is_reducible());
        let r = reducibility_c(0, &int(4));
        assert_eq!(
            r.verdict,
            VerdictC::Reducible { fm: 1, fn_: 1, socle_is_r: true, finite_dim_ktypes: vec![2, 0] }
        );
        assert!(!reducibility_c(0, &crate::algebra::rat(5, 2)).is_reducible());
        assert!(!reducibility_c(3, &int(3)).is_reducible());
    }

    #[test]
    fn negative_lambda_uses_positive_representative() {
        let r = reducibility_c(1, &int(-5));
        let VerdictC::Reducible { fm, fn_, socle_is_r, .. } = r.verdict else { panic!() };
        // (σ, λ) → (−1, 5): fm = 1, fn = 2
        assert_eq!((fm, fn_, socle_is_r), (1, 2, false));
    }

    #[test]
    fn complex_parameters_are_irreducible() {
        assert!(!reducibility_c_complex(0, &int(2), &int(1)).is_reducible());
        assert!(reducibility_c_complex(0, &int(2), &int(0)).is_reducible());
    }

    #[test]
    fn finite_and_r_partition_ktypes() {
        for sigma in -5i64..=5 {
            for l in -9i64..=9 {
                let r = reducibility_c(sigma, &int(l));
                let VerdictC::Reducible { fm, fn_, ref finite_dim_ktypes, .. } = r.verdict else { continue };
                let dim: i64 = finite_dim_ktypes.iter().map(|&t| t as i64 + 1).sum();
                assert_eq!(dim, (fm + 1) * (fn_ + 1));
                for &t in finite_dim_ktypes {
                    assert!(r.is_ktype(t));
                }
                let expect: Vec<u32> =
                    (sigma.unsigned_abs() as u32..l.unsigned_abs() as u32).step_by(2).rev().collect();
                assert_eq!(finite_dim_ktypes, &expect);
            }
        }
    }

    #[test]
    fn diamond_examples() {
        let d = diamond(0, &int(2)).unwrap();
        assert_eq!(d.vertices, [(0, 2), (0, -2), (2, 0), (-2, 0)]);
        assert!(d.arrows.iter().any(|a| a.label == "L" && a.from == (-2, 0) && a.to == (0, 2)));
        assert_eq!(diamond(2, &int(4)).unwrap().vertices, [(2, 4), (-2, -4), (4, 2), (-4, -2)]);
        assert!(matches!(diamond(1, &int(2)), Err(Error::NotReduciblePoint { .. })));
    }
}
