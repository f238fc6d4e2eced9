//! Sampled fields: potentials to electromagnetic fields, Maxwell, Weyl and
//! Dirac–Hestenes residuals with second-order stencils, and analytic
//! plane-wave oracles.

mod em;
mod grid;
mod lattice;
mod plane;
mod spinor;
mod study;
mod task;

pub use em::{
    em_from_potential, field_spinor, field_spinor_conjugate, maxwell_residuals,
    riemann_silberstein, MaxwellResiduals, MaxwellSummary, RsField, MAXWELL_LABELS,
};
pub use grid::FieldGrid;
pub use lattice::{max_norm, Lattice, AXES};
pub use plane::{
    circular_polarization, composite_partner, fit_composite, helicity_eigenspinor, observed_orders,
    plane_wave_em, transverse_frame, CompositeFit, DhNullMode, Helicity, PlaneWaveSpec,
    WeylPlaneWave,
};
pub use spinor::{
    chirality_identity_defect, dh_residual, dirac_apply, split_field, weyl_residual,
    weyl_residual_arrays, CMatrix, Chirality, MatrixField,
};
pub use study::{
    composite_check, dh_study, maxwell_study, periodic_cube, probe_field, wave_study, Study,
    StudyRow, EXACT_ZERO,
};
pub use task::{run_field_task, FieldTask};
