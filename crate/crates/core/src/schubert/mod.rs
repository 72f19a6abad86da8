//! Grothendieck and quantum Grothendieck polynomials, the quantization map,
//! quantized Schur determinants, the λ-map with k-conjugation, and the
//! numerators `g̃_w`.

mod fbasis;
mod groth;
mod kbounded;
mod quantum;

pub use fbasis::{f_poly, fq_poly, quantize, FBasis, FMonomial};
pub use groth::{groth_poly, groth_poly_along, isobaric_divided_difference};
pub use kbounded::{cycle, grassmannian_perm, k_conjugate, lambda_map, KBoundedPartition};
pub use quantum::{grassmannian_image_check, phi_s_q_check, quantized_schur_check, staircase_rectangle_product, 
    g_tilde, phi_quantum_groth, phi_s_q, quantum_groth, s_q_poly, schur_in_one_minus_x,
};
