//! Exact computer algebra around the K-theoretic Peterson isomorphism for the
//! flag variety: dual stable Grothendieck polynomials, relativistic Toda Lax
//! matrices, the map `Φ_n` into the K-homology of the affine Grassmannian, and
//! quantum Grothendieck polynomials.

pub mod algebra;
pub mod error;
pub mod grothendieck;
pub mod peterson;
pub mod schubert;
mod par;
pub mod toda;
pub mod vectors;

pub use error::{Error, Result};
