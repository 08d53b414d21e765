use std::f64::consts::PI;

use crate::algebra::ComplexF;
use crate::{Error, Result};

// Lanczos approximation, g = 7, n = 9.
const G: f64 = 7.0;
const COEFFS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos(z: ComplexF) -> ComplexF {
    // Γ(z) for Re z ≥ 0.5
    let z = z - 1.0;
    let mut x = ComplexF::new(COEFFS[0], 0.0);
    for (i, &c) in COEFFS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

fn near_pole(z: ComplexF, eps: f64) -> bool {
    z.re < 0.5 && (z.re - z.re.round()).hypot(z.im) < eps
}

/// Complex Gamma function; fails within `1e-9` of a pole.
pub fn gamma_complex(z: ComplexF) -> Result<ComplexF> {
    if near_pole(z, 1e-9) {
        return Err(Error::PoleProximity(format!("{z}")));
    }
    if z.re < 0.5 {
        // Γ(z)Γ(1−z) = π / sin(πz)
        Ok(PI / ((PI * z).sin() * lanczos(1.0 - z)))
    } else {
        Ok(lanczos(z))
    }
}

/// `1/Γ(z)`, entire; exactly zero at the poles of `Γ`.
pub fn rgamma_complex(z: ComplexF) -> ComplexF {
    if near_pole(z, 1e-300) {
        return ComplexF::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        (PI * z).sin() * lanczos(1.0 - z) / PI
    } else {
        1.0 / lanczos(z)
    }
}
