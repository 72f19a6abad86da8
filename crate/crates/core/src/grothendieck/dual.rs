use crate::algebra::matrix::RingMatrix;
use crate::algebra::partition::Partition;
use crate::algebra::rational::binomial;
use crate::algebra::symfunc::SymFunc;

/// `g_λ = det( Σ_m (-1)^m C(1-i, m) h_{λ_i + j - i - m} )`.
pub fn dual_groth(lam: &Partition) -> SymFunc {
    let l = lam.len();
    let m = RingMatrix::from_fn(l, l, |r, c| {
        let (i, j) = (r as i64 + 1, c as i64 + 1);
        let top = lam.part(r + 1) as i64 + j - i;
        let mut entry = SymFunc::zero();
        for m in 0..=top.max(-1) {
            let coeff = binomial(1 - i, m);
            if m % 2 == 1 {
                entry = entry.sub(&SymFunc::h(top - m).scale(&coeff));
            } else {
                entry = entry.add(&SymFunc::h(top - m).scale(&coeff));
            }
        }
        entry
    });
    m.det().expect("square")
}
