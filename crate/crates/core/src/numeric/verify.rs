use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{c_integral_sl2r, c_numeric, gamma_complex, Group, QuadratureSpec};
use crate::algebra::{gamma_reduce, ComplexF};
use crate::{sl2c, sl2r, Result};

/// Summary of a numeric comparison against an exact formula.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub formula: String,
    pub points_tested: usize,
    pub max_relative_error: f64,
}

impl VerificationReport {
    fn new(formula: &str) -> Self {
        Self { formula: formula.into(), points_tested: 0, max_relative_error: 0.0 }
    }

    fn record(&mut self, err: f64) {
        self.points_tested += 1;
        // NaN must not be swallowed by max()
        if err.is_nan() || err > self.max_relative_error {
            self.max_relative_error = if err.is_nan() { f64::INFINITY } else { err };
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.points_tested > 0 && self.max_relative_error < tol
    }
}

/// `|a − b| / |b|`, falling back to `|a − b|` when `b` is (numerically) zero.
pub fn relative_error(a: ComplexF, b: ComplexF) -> f64 {
    let d = (a - b).norm();
    if b.norm() > 1e-12 {
        d / b.norm()
    } else {
        d
    }
}

/// Random `λ` with `Re λ ∈ re`, `|Im λ| ≤ 3`, kept at distance ≥ 0.05 from
/// the real lattice `step·ℤ` where all zeros and poles of the quotients lie.
fn sample_lambda(rng: &mut ChaCha8Rng, re: (f64, f64), step: f64) -> ComplexF {
    loop {
        let l = ComplexF::new(rng.gen_range(re.0..re.1), rng.gen_range(-3.0..3.0));
        let off = (l.re / step - (l.re / step).round()).abs() * step;
        if off.hypot(l.im) >= 0.05 {
            return l;
        }
    }
}

/// Closed-form `c_n/c_m` for `SL(2,R)` against the exact rational quotient,
/// over `|n|, |m| ≤ max_n` of equal parity.
pub fn verify_c_numeric_r(max_n: i64, samples: usize, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport::new("SL(2,R): Gamma closed form c_n/c_m vs exact c-quotient");
    for n in -max_n..=max_n {
        for m in (-max_n..=max_n).filter(|m| (n - m) % 2 == 0) {
            let exact = sl2r::c_quotient_r(n, m)?;
            for _ in 0..samples {
                let l = sample_lambda(&mut rng, (0.5, 4.0), 0.5);
                let num = c_numeric(Group::Sl2r, n, None, l)? / c_numeric(Group::Sl2r, m, None, l)?;
                report.record(relative_error(num, exact.eval_complex(l)));
            }
        }
    }
    Ok(report)
}

/// Closed-form `c_{n,σ}/c_{m,σ}` for `SL(2,C)` against the exact quotient,
/// with `σ` drawn from the common weights of `δ_n`, `δ_m`.
pub fn verify_c_numeric_c(max_n: u32, samples: usize, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport::new("SL(2,C): Gamma closed form c_n/c_m vs exact c-quotient");
    for n in 0..=max_n {
        for m in (n % 2..=max_n).step_by(2) {
            let exact = sl2c::c_quotient_c(n, m)?;
            let sigmas = sl2c::weights(n.min(m));
            for _ in 0..samples {
                let sigma = sigmas[rng.gen_range(0..sigmas.len())];
                let l = sample_lambda(&mut rng, (0.5, 4.0), 1.0);
                let num = c_numeric(Group::Sl2c, n as i64, Some(sigma), l)?
                    / c_numeric(Group::Sl2c, m as i64, Some(sigma), l)?;
                report.record(relative_error(num, exact.eval_complex(l)));
            }
        }
    }
    Ok(report)
}

/// `gamma_reduce` of the symbolic c-functions against direct numeric
/// evaluation of the Gamma products at points with `Re λ ∈ [3, 6]`.
pub fn verify_gamma_reduce(max_n: i64, samples: usize, seed: u64) -> Result<VerificationReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerificationReport::new("gamma_reduce vs numeric Gamma quotient");
    let mut check = |a: &crate::algebra::GammaProduct, b: &crate::algebra::GammaProduct, rng: &mut ChaCha8Rng| -> Result<()> {
        let r = gamma_reduce(a, b)?;
        for _ in 0..samples {
            let l = sample_lambda(rng, (3.0, 6.0), 0.5);
            let direct = a.eval_with(l, gamma_complex)? / b.eval_with(l, gamma_complex)?;
            report.record(relative_error(r.eval_complex(l), direct));
        }
        Ok(())
    };
    for n in -max_n..=max_n {
        for m in (-max_n..=max_n).filter(|m| (n - m) % 2 == 0) {
            check(&sl2r::c_gamma_r(n), &sl2r::c_gamma_r(m), &mut rng)?;
        }
    }
    for n in 0..=max_n as u32 {
        for m in (n % 2..=max_n as u32).step_by(2) {
            let sigma = (n.min(m) % 2) as i64;
            check(&sl2c::c_gamma_c(n, sigma)?, &sl2c::c_gamma_c(m, sigma)?, &mut rng)?;
        }
    }
    Ok(report)
}

/// Ratios of the defining integral against the exact quotient for
/// `|n|, |m| ≤ max_n` at each `λ`. Pairs whose exact quotient has a pole at
/// `λ`, or where `c_m(λ) = 0` makes the integral ratio `0/0`, are skipped.
pub fn verify_quadrature_r(max_n: i64, lambdas: &[ComplexF], quad: &QuadratureSpec) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("SL(2,R): quadrature of the c-function integral, ratios vs exact c-quotient");
    for &l in lambdas {
        let mut cache = BTreeMap::new();
        for n in -max_n..=max_n {
            cache.insert(n, c_integral_sl2r(n, l, quad)?);
        }
        for n in -max_n..=max_n {
            for m in (-max_n..=max_n).filter(|m| (n - m) % 2 == 0) {
                let exact = sl2r::c_quotient_r(n, m)?;
                if exact.den().eval_complex(l).norm() < 1e-12 || c_numeric(Group::Sl2r, m, None, l)?.norm() < 1e-12 {
                    continue;
                }
                report.record(relative_error(cache[&n] / cache[&m], exact.eval_complex(l)));
            }
        }
    }
    Ok(report)
}
