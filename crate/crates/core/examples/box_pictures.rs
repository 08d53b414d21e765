//! Composition series of the SL(2,R) principal series as box pictures.

use pw_core::algebra::rat;
use pw_core::sl2r::{box_picture_r, composition_series_r, SeriesVerdict, SigmaR};

fn main() {
    for m in [0, 2, -2, 3] {
        for twice in [-5, -3, -1, 0, 1, 3, 5] {
            let lambda = rat(twice, 2);
            if let SeriesVerdict::Reducible(_) = composition_series_r(SigmaR::of_ktype(m), &lambda) {
                print!("{}", box_picture_r(m, &lambda).to_ascii());
            }
        }
    }
    println!("{}", box_picture_r(6, &rat(3, 2)).to_dot());
}
