use pw_core::algebra::ExactPoly;
use pw_core::sl2c::{level2_functional_check_c_to, level3_check_c, q_nm_c, synthesize, GeneratorCoords, WeightedDiagMap};

fn main() -> pw_core::Result<()> {
    let (n, m) = (5, 1);
    println!("q_(5,1):");
    for (k, p) in q_nm_c(n, m)?.components() {
        println!("  weight {k:>2}: {p}");
    }
    let h = synthesize(&GeneratorCoords::new(1, vec![ExactPoly::from_ints(&[2, 1]), ExactPoly::from_ints(&[3])])?);
    let q = q_nm_c(n, m)?;
    let phi = WeightedDiagMap::from_fn(n, m, |k| h.get(k).unwrap() * q.get(k).unwrap());
    let out = level3_check_c(&phi)?;
    println!("accept = {}", out.is_accept());
    println!("functional identity: {}", level2_functional_check_c_to(phi.components(), n, m)?.passed);

    let mut comps = phi.components().clone();
    comps.insert(1, &comps[&1] + &ExactPoly::from_ints(&[1]));
    let bad = WeightedDiagMap::new(n, m, comps)?;
    println!("{}", serde_json::to_string_pretty(&level3_check_c(&bad)?).unwrap());
    Ok(())
}
