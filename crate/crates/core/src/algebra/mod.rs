//! Blade arithmetic over pluggable coefficient rings.

mod blade;
mod classify;
pub mod coeff;
pub mod json;
mod multivector;
mod omega;
pub mod random;
mod signature;

pub use blade::Blade;
pub use classify::{classify_real, RealClass, RealClassTag};
pub use coeff::{Coefficient, ExactComplex, Real};
pub use multivector::Multivector;
pub use omega::OmegaPairs;
pub use signature::{Signature, MAX_GENERATORS};
