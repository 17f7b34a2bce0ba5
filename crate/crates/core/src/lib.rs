//! Exact Misiurewicz and multiplier polynomials for the family `z^d + c`.
//!
//! The crate builds the critical-orbit polynomials `a_i(c)`, the
//! Misiurewicz polynomials `G` whose roots are strictly preperiodic
//! parameters, and the multiplier polynomials `P` whose roots are the
//! multipliers of the corresponding cycles. Everything is exact: integer
//! coefficients for `d = 2` and coefficients in `Z[zeta_d]` otherwise.

pub mod cli;
pub mod error;
pub mod harness;
pub mod misiurewicz;
pub mod multiplier;
pub mod orbit;
pub mod polyring;
pub mod special;

pub use error::{Error, Result};
pub use misiurewicz::{g_degree, g_poly, MisSpec};
pub use multiplier::{p_poly, MultiplierPoly};
pub use orbit::OrbitCtx;
pub use polyring::{IntPoly, SpecPoly};
