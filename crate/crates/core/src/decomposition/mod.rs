//! Central idempotents of odd complex Clifford algebras and the ideal
//! split `C_{2k+1} → λ₊C ⊕ λ₋C` with its quotient images.

mod idempotent;
mod layout;
mod quotient;
mod report;

pub use idempotent::{
    central_idempotents, epsilon_for, project, Epsilon, IdempotentLaws, IdempotentPair, Side,
};
pub use layout::{spinspace_layout, Cell, LayoutKind, SpinspaceLayout};
pub use quotient::{
    lift, quotient_image_rank, quotient_map, split_union, top_generator_image, UnionPair,
};
pub use report::{decompose_report, MAX_REPORT_N};
