//! A_m as a free module over even functions of the Casimir parameter.

use pw_core::algebra::ExactPoly;
use pw_core::sl2c::{algebra_check, extend_interpolate, free_module_decompose, synthesize, GeneratorCoords};

fn main() -> pw_core::Result<()> {
    let coords = GeneratorCoords::new(
        3,
        vec![ExactPoly::from_ints(&[1, 1]), ExactPoly::from_ints(&[0, 2]), ExactPoly::from_ints(&[-1]), ExactPoly::from_ints(&[5])],
    )?;
    let phi = synthesize(&coords);
    for (k, p) in phi.components() {
        println!("phi_{k:>2}(λ) = {p}");
    }
    assert!(algebra_check(&phi)?.is_accept());
    assert_eq!(free_module_decompose(&phi)?, coords);

    let ext = extend_interpolate(&phi, 7)?;
    println!("extended to δ_7: {} weights, still in the algebra: {}", ext.components().len(), algebra_check(&ext)?.is_accept());
    println!("{}", serde_json::to_string(&free_module_decompose(&ext)?).unwrap());
    Ok(())
}
