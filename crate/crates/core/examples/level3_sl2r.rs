use pw_core::algebra::ExactPoly;
use pw_core::sl2r::{level3_check_r, q_poly_r};

fn main() -> pw_core::Result<()> {
    // (λ²+1)(λ+1) factors through q_{3,1} = λ+1 with an even cofactor
    let phi = ExactPoly::from_ints(&[1, 1, 1, 1]);
    println!("{}", serde_json::to_string_pretty(&level3_check_r(&phi, 3, 1)?).unwrap());

    // vanishes at the root but the cofactor λ is odd
    let phi = ExactPoly::from_ints(&[0, 1, 1]);
    println!("{}", serde_json::to_string_pretty(&level3_check_r(&phi, 3, 1)?).unwrap());

    // misses a root of q_{-5,1}
    println!("q_(-5,1) = {}", q_poly_r(-5, 1)?);
    let phi = ExactPoly::from_ints(&[0, 0, 1]);
    println!("{}", serde_json::to_string_pretty(&level3_check_r(&phi, -5, 1)?).unwrap());
    Ok(())
}
