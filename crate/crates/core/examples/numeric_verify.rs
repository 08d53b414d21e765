//! Floating-point cross-checks: Gamma closed forms and quadrature of the
//! defining integral against the exact quotients.

use pw_core::algebra::ComplexF;
use pw_core::numeric::{
    c_integral_sl2r, iwasawa_residual, verify_c_numeric_c, verify_c_numeric_r, verify_gamma_reduce,
    verify_quadrature_r, QuadratureSpec,
};

fn main() -> pw_core::Result<()> {
    println!("Iwasawa residual at x=3: {:.1e}", iwasawa_residual(3.0));
    let spec = QuadratureSpec::default();
    let l = ComplexF::new(2.0, 1.0);
    println!("c_2/c_0 at λ=2+i by quadrature: {}", c_integral_sl2r(2, l, &spec)? / c_integral_sl2r(0, l, &spec)?);

    let lambdas = [1.0, 2.0, 3.0].map(|x| ComplexF::new(x, 0.0));
    for r in [
        verify_c_numeric_r(6, 20, 1)?,
        verify_c_numeric_c(6, 20, 2)?,
        verify_gamma_reduce(6, 5, 3)?,
        verify_quadrature_r(6, &lambdas, &spec)?,
    ] {
        println!("{:<80} {:>5} pts  max rel err {:.2e}", r.formula, r.points_tested, r.max_relative_error);
    }
    Ok(())
}
