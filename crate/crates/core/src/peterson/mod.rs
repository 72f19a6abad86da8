//! The symmetric-function side: the `τ_i`, `σ_i` families, the determinants
//! `D[θ; a]`, the involution `κ_d`, and the substitution homomorphism `Φ_n`.

mod checks;
mod ddet;
mod frac;
mod kappa;
mod phi;
mod tau_sigma;

pub use checks::{
    d_recursion_check, eq2_check, grassmannian_indices, perp_d_check, prop_6_5_check,
    schur_base_check,
    sigma_identity_check, SigmaCheck,
};
pub use ddet::{d_det, d_theta, DSpec};
pub use frac::{Denominator, FactoredFrac, SymFrac};
pub use kappa::kappa;
pub use phi::{phi_apply, phi_apply_at, phi_table, PhiMap};
pub use tau_sigma::{tau_sigma, TauSigmaTable};
