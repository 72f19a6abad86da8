use crate::algebra::poly::Poly;
use crate::algebra::rational::{binomial, int};
use crate::algebra::symfunc::SymFunc;

/// The ring involution `κ_d` with `κ_d(p_i) = d + Σ_{k=1}^{i} (-1)^k C(i,k) p_k`.
pub fn kappa(d: usize, f: &SymFunc) -> SymFunc {
    let p = f.to_p_basis();
    let image = p.substitute(|slot| {
        let i = slot as i64 + 1;
        let mut q = Poly::constant(int(d as i64));
        for k in 1..=i {
            let c = binomial(i, k);
            let c = if k % 2 == 1 { -c } else { c };
            q = q.add(&Poly::var(k as usize - 1).scale(&c));
        }
        q
    });
    SymFunc::from_p_basis(&image)
}
