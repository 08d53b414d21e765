//! The SL(2,C) grid |σ|,|λ| ≤ 5: reducible points (#), their duals (o) and
//! the DOT rendering.

use pw_core::atlas::{atlas_c, PointClass};

fn main() {
    let a = atlas_c(5, 5);
    for sigma in (-5..=5).rev() {
        let row: String = (-5..=5)
            .map(|lambda| match a.point(sigma, lambda).unwrap().class {
                PointClass::Reducible => " #",
                PointClass::Dual => " o",
                PointClass::Irreducible => " .",
            })
            .collect();
        println!("σ={sigma:>2} {row}");
    }
    for o in &a.orbits {
        println!("orbit {}: {:?}", o.id, o.vertices);
    }
    if std::env::args().any(|a| a == "--dot") {
        print!("{}", a.to_dot());
    }
}
