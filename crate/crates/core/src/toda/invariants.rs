use crate::algebra::polyzq::{PolyZQ, Var};

/// `Σ_{I ⊂ {1..m}, #I = i} ∏_{j∈I} y_j ∏_{j∈I, j+1∉I} (1 - Q_j)` with `Q_j = 0` for `j ≥ n`.
///
/// With `y_j = z_j` and `m = n` this is the spectral invariant `F_i(z, Q)`;
/// with `y_j = 1 - x_j` it is the quantized elementary polynomial `F^{(m)}_i`.
pub fn f_family(n: usize, m: usize, i: usize, y: impl Fn(usize) -> PolyZQ) -> PolyZQ {
    if i > m {
        return PolyZQ::zero();
    }
    let ys: Vec<PolyZQ> = (1..=m).map(&y).collect();
    let one_minus_q: Vec<PolyZQ> = (1..=m)
        .map(|j| {
            if j >= n {
                PolyZQ::one()
            } else {
                PolyZQ::one_minus(Var::Q(j))
            }
        })
        .collect();
    let mut total = PolyZQ::zero();
    let mut subset = Vec::with_capacity(i);
    fn rec(
        start: usize,
        m: usize,
        i: usize,
        subset: &mut Vec<usize>,
        ys: &[PolyZQ],
        omq: &[PolyZQ],
        total: &mut PolyZQ,
    ) {
        if subset.len() == i {
            let mut term = PolyZQ::one();
            for (k, &j) in subset.iter().enumerate() {
                term = term.mul(&ys[j - 1]);
                let next_in = subset.get(k + 1) == Some(&(j + 1));
                if !next_in {
                    term = term.mul(&omq[j - 1]);
                }
            }
            *total = total.add(&term);
            return;
        }
        for j in start..=m {
            subset.push(j);
            rec(j + 1, m, i, subset, ys, omq, total);
            subset.pop();
        }
    }
    rec(1, m, i, &mut subset, &ys, &one_minus_q, &mut total);
    total
}

/// `F_i(z_1, ..., z_n, Q_1, ..., Q_{n-1})`.
pub fn f_invariant(n: usize, i: usize) -> PolyZQ {
    f_family(n, n, i, PolyZQ::z)
}
