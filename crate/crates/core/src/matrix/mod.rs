//! Fixed matrix representations: Pauli matrices, the γ basis, closed
//! Dirac–Hestenes matrices, chirality projectors and the minimal left ideal.

mod dh;
mod gamma;
mod json;
mod mat;
mod null;
mod pauli;
mod spintensor;

pub use dh::{
    dh_matrix, dh_matrix_from_phi, dh_multivector, gamma21, helicity_split, psi_formulas,
    random_dh, split_formula, DhSpinor, HelicitySplit, SplitOperators, DH_BLADES,
};
pub use gamma::{
    even_embedding, gamma_rep, helicity_projectors, ideal_column_of_field_spinor,
    left_ideal_project, primitive_idempotent_e41, rs_matrix, GammaBasis,
};
pub use json::{matrix_json, BasisTag, MatrixRep};
pub use mat::{exact_rank, rational_nullspace, Matrix, ReprReal};
pub use null::{kernel_routes_agree, momentum_symbol, null_kernel, null_mode_from};
pub use pauli::{pauli_rep, sigma, sigma_dot};
pub use spintensor::{sym_spintensor, sym_spintensor_dotted, SymSpintensor};
