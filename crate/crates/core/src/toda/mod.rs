//! Relativistic Toda side: Lax matrices `L = AB⁻¹`, the spectral invariants
//! `F_i`, the determinant functions `T_i`, `S_i`, Gauss and RU decompositions,
//! and the mutually inverse maps `α` and `β`.

mod decompose;
mod invariants;
mod lax;
mod maps;
mod phi;
mod point;
mod sample;

pub use decompose::{gauss_decompose, ru_decompose, ru_minor};
pub use invariants::{f_family, f_invariant};
pub use lax::{
    a_matrix, b_matrix, char_minor_phi, char_minor_symbolic, lax_matrix, lax_matrix_symbolic,
    point_from_lax, trailing_minors, eval_matrix, zeta_b_minus_a,
};
pub use maps::{
    alpha, beta, check_class, check_point, minor_formulas, spectral_params, BetaResult, PointChecks,
};
pub use phi::{companion, phi_of_matrix, ts_functions, CoordMap, PhiClass, TSValues};
pub use point::{SpectralParams, TodaPoint};
pub use sample::{random_general_point, random_nonzero_rational, random_unipotent_phi};
