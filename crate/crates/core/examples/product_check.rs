//! Level-3 check for SL(2,R) x SL(2,R): one division per variable.

use pw_core::algebra::{int, ExactMultiPoly};
use pw_core::product::{level3_check_product, q_product, KTypeVec};

fn main() -> pw_core::Result<()> {
    let l = KTypeVec::new(vec![3, 4]);
    let n = KTypeVec::new(vec![1, -2]);
    let q = q_product(&l, &n)?;
    let h = ExactMultiPoly::from_terms(2, [(vec![2, 0], int(1)), (vec![0, 2], int(3)), (vec![0, 0], int(-1))])?;
    let phi = h.mul(&q);
    println!("q = {}", q.display());
    println!("phi = {}", phi.display());
    println!("{}", serde_json::to_string_pretty(&level3_check_product(&phi, &l, &n)?).unwrap());

    let bad = phi.add(&ExactMultiPoly::monomial(2, vec![1, 1], int(1)));
    println!("{}", serde_json::to_string_pretty(&level3_check_product(&bad, &l, &n)?).unwrap());
    Ok(())
}
