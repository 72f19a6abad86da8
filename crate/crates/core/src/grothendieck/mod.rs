//! Dual stable Grothendieck polynomials, set-valued tableaux and K-theoretic
//! Littlewood-Richardson coefficients.

mod dual;
mod tableau;

pub use dual::dual_groth;
pub use tableau::{builds, klr_coeff, stable_groth_vars, ColumnWord, SetValuedTableau};
