//! Formal linear combinations of derivative tokens and the symbolic
//! `∇A` / `∇F` expansions built on them.

mod derivation;
mod expand;
mod formal;
mod token;

pub use derivation::{
    derive, derive_nabla_a, derive_nabla_f, derive_weyl_split, Derivation, Group,
};
pub use expand::{
    field_strength, four_vector, impose_lorentz_condition, nabla, nabla_f_product, nabla_product,
    riemann_silberstein_form,
};
pub use formal::{FormalSum, FormalTermJson, TokenJson};
pub use token::{Atom, Token};
