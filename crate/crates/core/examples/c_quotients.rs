//! c-function quotients in closed form, and the same quotients recovered
//! from the symbolic Gamma products.

use pw_core::algebra::gamma_reduce;
use pw_core::sl2c;
use pw_core::sl2r::{c_gamma_r, c_quotient_r};

fn main() -> pw_core::Result<()> {
    for (n, m) in [(3, 1), (-3, 1), (4, 0), (2, -4)] {
        let closed = c_quotient_r(n, m)?;
        let reduced = gamma_reduce(&c_gamma_r(n), &c_gamma_r(m))?;
        println!("SL(2,R) c_{n}/c_{m} = {closed}   [{}]", c_gamma_r(n));
        assert_eq!(closed, reduced);
    }
    for (n, m) in [(2, 0), (1, 3), (4, 2)] {
        let q = sl2c::c_quotient_c(n, m)?;
        for sigma in sl2c::weights(n.min(m)) {
            assert_eq!(q, sl2c::c_quotient_c_via_gamma(n, m, sigma)?);
        }
        println!("SL(2,C) c_{n}/c_{m} = {q}");
    }
    Ok(())
}
