//! Floating-point cross-checks of the exact formulas: complex Gamma, the
//! closed-form c-functions, and quadrature of the defining `SL(2,R)`
//! integral. Nothing in the exact modules depends on this one.

mod cfun;
mod gamma;
mod quadrature;
mod verify;

pub use cfun::{c_numeric, Group};
pub use gamma::{gamma_complex, rgamma_complex};
pub use quadrature::{c_integral_sl2r, gauss_legendre, iwasawa, iwasawa_residual, QuadratureSpec, Scheme};
pub use verify::{
    relative_error, verify_c_numeric_c, verify_c_numeric_r, verify_gamma_reduce, verify_quadrature_r,
    VerificationReport,
};
