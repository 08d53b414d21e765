use pw_core::algebra::int;
use pw_core::sl2c::{clebsch_gordan, diamond, reducibility_c};

fn main() -> pw_core::Result<()> {
    println!("δ_2 ⊗ δ_3 = {:?}", clebsch_gordan(2, 3));
    for (sigma, lambda) in [(0, 2), (1, 3), (2, 4), (3, 1), (1, 2), (0, 0)] {
        let r = reducibility_c(sigma, &int(lambda));
        println!("(σ,λ)=({sigma},{lambda}): {}", serde_json::to_string(&r).unwrap());
    }
    let d = diamond(-2, &int(4))?;
    println!("diamond vertices {:?}", d.vertices);
    for a in &d.arrows {
        println!("  {:>3}: {:?} -> {:?}", a.label, a.from, a.to);
    }
    Ok(())
}
