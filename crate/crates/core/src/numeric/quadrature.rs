use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::algebra::ComplexF;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Scheme {
    GaussLegendreComposite,
}

/// Integration over `[−X, X]` with composite Gauss-Legendre on the panels
/// `[0,1], [1,2], [2,4], …` (mirrored), `points` nodes per panel.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSpec {
    /// `X`; `None` derives it from `λ` and `tolerance` so the dropped tail
    /// is below `tolerance/10`.
    pub half_width: Option<f64>,
    pub points: usize,
    pub tolerance: f64,
    pub scheme: Scheme,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { half_width: None, points: 64, tolerance: 1e-10, scheme: Scheme::GaussLegendreComposite }
    }
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on `[−1, 1]`.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // P_n(x) and P_n'(x) by the three-term recurrence
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Iwasawa factors of `n̄_x = [[1,0],[x,1]] = k_θ·a_t·n_y` with
/// `k_θ = [[cos θ, −sin θ],[sin θ, cos θ]]`, `a_t = diag(e^t, e^{−t})`,
/// `n_y = [[1,y],[0,1]]`: returns `(cos θ, sin θ, e^t, y)`.
pub fn iwasawa(x: f64) -> (f64, f64, f64, f64) {
    let r = (1.0 + x * x).sqrt();
    (1.0 / r, x / r, r, x / (1.0 + x * x))
}

/// Max-norm of `k·a·n − n̄_x`.
pub fn iwasawa_residual(x: f64) -> f64 {
    let (c, s, et, y) = iwasawa(x);
    let e = 1.0 / et;
    let prod = [[c * et, c * et * y - s * e], [s * et, s * et * y + c * e]];
    let target = [[1.0, 0.0], [x, 1.0]];
    let mut worst: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            worst = worst.max((prod[i][j] - target[i][j]).abs());
        }
    }
    worst
}

/// `e^{inθ(x)}·e^{−(2λ+1)t(x)}`, the c-function integrand on `N̄`.
fn integrand(n: i64, lambda: ComplexF, x: f64) -> ComplexF {
    let (c, s, et, _) = iwasawa(x);
    let phase = ComplexF::new(c, s).powi(n as i32);
    let decay = ComplexF::new(et, 0.0).powc(-(2.0 * lambda + 1.0));
    phase * decay
}

fn panels(x_max: f64) -> Vec<(f64, f64)> {
    let mut out = vec![(0.0, x_max.min(1.0))];
    let mut a = 1.0;
    while a < x_max {
        let b = (2.0 * a).min(x_max);
        out.push((a, b));
        a = b;
    }
    out
}

fn integrate(n: i64, lambda: ComplexF, x_max: f64, points: usize) -> ComplexF {
    let rule = gauss_legendre(points);
    let mut acc = ComplexF::new(0.0, 0.0);
    for (a, b) in panels(x_max) {
        let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
        for &(t, w) in &rule {
            let x = mid + half * t;
            acc += (integrand(n, lambda, x) + integrand(n, lambda, -x)) * (w * half);
        }
    }
    acc
}

/// The defining integral `∫_ℝ e^{inθ(x)} e^{−(2λ+1)t(x)} dx` of the
/// `SL(2,R)` c-function, up to the Haar normalization (only ratios are
/// meaningful). Requires `Re λ > 0`.
pub fn c_integral_sl2r(n: i64, lambda: ComplexF, quad: &QuadratureSpec) -> Result<ComplexF> {
    if lambda.re <= 0.0 {
        return Err(Error::Precondition(format!("integral diverges for Re(λ) = {} ≤ 0", lambda.re)));
    }
    if quad.points < 64 {
        return Err(Error::Precondition(format!("need at least 64 points, got {}", quad.points)));
    }
    if quad.tolerance.is_nan() || quad.tolerance <= 0.0 {
        return Err(Error::Precondition("tolerance must be positive".into()));
    }
    let x_max = match quad.half_width {
        Some(x) if x > 0.0 => x,
        Some(x) => return Err(Error::Precondition(format!("half width {x} must be positive"))),
        // tail ∫_X^∞ x^{−2Re λ−1} dx = X^{−2Re λ}/(2 Re λ) ≤ tol/20
        None => (10.0 / (lambda.re * quad.tolerance)).powf(1.0 / (2.0 * lambda.re)).max(1.0),
    };
    let coarse = integrate(n, lambda, x_max, quad.points);
    let fine = integrate(n, lambda, x_max, 2 * quad.points);
    if (fine - coarse).norm() > 10.0 * quad.tolerance * fine.norm().max(1.0) {
        return Err(Error::ConvergenceNotReached { coarse: format!("{coarse}"), fine: format!("{fine}") });
    }
    Ok(fine)
}
