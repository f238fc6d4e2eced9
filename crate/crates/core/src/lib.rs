//! Exact Clifford-algebra kernel for helicity projection idempotents,
//! Dirac–Hestenes spinor matrices, symbolic first-order field expansions
//! and finite-difference residuals of the Weyl, Dirac–Hestenes and
//! Maxwell equations.

pub mod algebra;
pub mod checks;
pub mod decomposition;
mod error;
pub mod field;
pub mod matrix;
pub mod symbolic;

pub use error::{Error, Result};
