//! Exact intertwining conditions for Paley-Wiener spaces of `SL(2,R)`,
//! its finite products, and `SL(2,C)`.
//!
//! The crate computes c-function quotients, the intertwining polynomials
//! `q_{n,m}`, composition series of principal series representations, and
//! decides membership of polynomial data in the spaces cut out by the
//! intertwining conditions. All decisions are made in exact rational
//! arithmetic; [`numeric`] only cross-checks the closed forms in floating
//! point.

pub mod algebra;
pub mod atlas;
pub mod cli;
mod error;
pub mod numeric;
pub mod product;
pub mod sl2c;
pub mod sl2r;

pub use error::{Error, Result};
