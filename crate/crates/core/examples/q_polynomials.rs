use pw_core::algebra::RationalFunction;
use pw_core::product::{q_product, KTypeVec};
use pw_core::sl2r::{c_quotient_r, q_poly_r};

fn main() -> pw_core::Result<()> {
    println!("q_(n,m) for SL(2,R):");
    for n in [-5, -3, -1, 1, 3, 5] {
        let row: Vec<String> = [-3, -1, 1, 3].iter().map(|&m| q_poly_r(n, m).map(|q| q.to_string())).collect::<Result<_, _>>()?;
        println!("  n={n:>2}: {}", row.join(" | "));
    }

    // q(-λ)/q(λ) reproduces c_n/c_m up to sign
    let (n, m) = (5, -1);
    let q = q_poly_r(n, m)?;
    let ratio = RationalFunction::new(q.reflect(), q.clone())?;
    println!("q(-λ)/q(λ) = {ratio}, c_n/c_m = {}", c_quotient_r(n, m)?);

    let l = KTypeVec::new(vec![3, -2]);
    let r = KTypeVec::new(vec![1, 2]);
    println!("q for SL(2,R)^2, {:?} -> {:?}: {}", l.ktypes, r.ktypes, q_product(&l, &r)?.display());
    Ok(())
}
