//! Small numerical toolkit shared by the solver crates.
//!
//! [`Dd`] is a double-double scalar (about 32 significant digits) used where
//! three-term recurrences amplify rounding error. The [`quad`] module holds
//! Gauss-Legendre rules in both precisions and adaptive integrators.

pub mod dd;
pub mod quad;

pub use dd::Dd;
pub use quad::{GaussLegendre, QuadError};
