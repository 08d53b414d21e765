use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::gamma::{gamma_complex, rgamma_complex};
use crate::algebra::ComplexF;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Group {
    Sl2r,
    Sl2c,
}

/// Numerator Gamma factor, refusing arguments within `1e-6` of a pole.
fn gamma_num(z: ComplexF) -> Result<ComplexF> {
    if z.re < 0.5 && (z.re - z.re.round()).hypot(z.im) < 1e-6 {
        return Err(Error::PoleProximity(format!("{z}")));
    }
    gamma_complex(z)
}

/// Closed-form c-function. `sigma` is required for `SL(2,C)` and must be a
/// weight of `δ_n`.
pub fn c_numeric(group: Group, n: i64, sigma: Option<i64>, lambda: ComplexF) -> Result<ComplexF> {
    match group {
        Group::Sl2r => {
            let nf = n as f64;
            let num = gamma_num(lambda)? * gamma_num(lambda + 0.5)?;
            let rden = rgamma_complex(lambda + (1.0 + nf) / 2.0) * rgamma_complex(lambda + (1.0 - nf) / 2.0);
            Ok(num * rden / PI.sqrt())
        }
        Group::Sl2c => {
            let s = sigma.ok_or_else(|| Error::Precondition("SL(2,C) c-function needs sigma".into()))?;
            if n < 0 || s.abs() > n || (n - s).rem_euclid(2) != 0 {
                return Err(Error::WeightNotInKType { weight: s, ktype: n });
            }
            let (nf, sf) = (n as f64, s as f64);
            let num = gamma_num((lambda + sf) * 0.5)? * gamma_num((lambda - sf) * 0.5)?;
            let rden = rgamma_complex((lambda + nf + 2.0) * 0.5) * rgamma_complex((lambda - nf) * 0.5);
            Ok(num * rden)
        }
    }
}
