use std::collections::BTreeMap;

use pw_core::algebra::ExactPoly;
use pw_core::sl2r::{level2_check_r, q_poly_r};

fn main() -> pw_core::Result<()> {
    let (m, trunc) = (2, 6);
    let h = ExactPoly::from_ints(&[4, 0, 1]);
    let psi: BTreeMap<i64, ExactPoly> =
        (-trunc..=trunc).step_by(2).map(|n| Ok((n, &h * &q_poly_r(n, m)?))).collect::<pw_core::Result<_>>()?;
    let report = level2_check_r(&psi, m, trunc)?;
    println!("psi_n = (λ²+4)·q_(n,{m}): passed = {}", report.passed);

    let mut bad = psi;
    bad.insert(0, ExactPoly::one());
    let report = level2_check_r(&bad, m, trunc)?;
    println!("with psi_0 = 1: passed = {}", report.passed);
    for v in report.vanishing.iter().filter(|v| !v.ok) {
        println!("  {v:?}");
    }
    Ok(())
}
