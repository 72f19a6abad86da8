use crate::algebra::permutation::Permutation;
use crate::algebra::poly::{Monomial, Poly};
use crate::algebra::polyzq::{PolyZQ, Var};
use crate::algebra::rational::Rational;

fn with_exponents(m: &Monomial, a: usize, ea: u16, b: usize, eb: u16) -> Monomial {
    let mut exps = m.exponents().to_vec();
    if exps.len() <= a.max(b) {
        exps.resize(a.max(b) + 1, 0);
    }
    exps[a] = ea;
    exps[b] = eb;
    Monomial::from_exponents(&exps)
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`.
fn divided_difference(p: &Poly, i: usize) -> Poly {
    let a = Var::X(i).slot();
    let b = Var::X(i + 1).slot();
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let (ea, eb) = (m.exponent(a), m.exponent(b));
        let (lo, hi, c) = match ea.cmp(&eb) {
            std::cmp::Ordering::Equal => continue,
            std::cmp::Ordering::Greater => (eb, ea, c.clone()),
            std::cmp::Ordering::Less => (ea, eb, -c.clone()),
        };
        // (x_a^hi x_b^lo - x_a^lo x_b^hi) / (x_a - x_b) = Σ_k x_a^{hi-1-k} x_b^{lo+k}
        for k in 0..hi - lo {
            out.add_term(with_exponents(m, a, hi - 1 - k, b, lo + k), c.clone());
        }
    }
    out
}

/// `π_i f = ((1 - x_{i+1}) f - (1 - x_i) s_i f) / (x_i - x_{i+1})`.
pub fn isobaric_divided_difference(f: &PolyZQ, i: usize) -> PolyZQ {
    let g = PolyZQ::one_minus(Var::X(i + 1)).mul(f);
    PolyZQ::from_poly(divided_difference(g.poly(), i))
}

fn staircase(n: usize) -> PolyZQ {
    let mut exps = vec![0u16; 3 * n + 1];
    for i in 1..n {
        exps[Var::X(i).slot()] = (n - i) as u16;
    }
    PolyZQ::from_poly(Poly::term(
        Rational::from_integer(1.into()),
        Monomial::from_exponents(&exps),
    ))
}

/// `𝔊_w` from `𝔊_{w_0} = x_1^{n-1} ⋯ x_{n-1}` along `path`, where
/// `w s_{p_1} ⋯ s_{p_k} = w_0` with lengths increasing by one at each step.
pub fn groth_poly_along(w: &Permutation, path: &[usize]) -> Option<PolyZQ> {
    let n = w.n();
    let mut v = w.clone();
    for &i in path {
        let next = v.times_simple(i);
        if next.length() != v.length() + 1 {
            return None;
        }
        v = next;
    }
    if v != Permutation::longest(n) {
        return None;
    }
    let mut f = staircase(n);
    for &i in path.iter().rev() {
        f = isobaric_divided_difference(&f, i);
    }
    Some(f)
}

/// The Grothendieck polynomial `𝔊_w` in `x_1..x_n`, descending from `w_0`
/// along the lexicographically smallest path.
pub fn groth_poly(w: &Permutation) -> PolyZQ {
    let mut path = Vec::new();
    let mut v = w.clone();
    while let Some(i) = (1..v.n()).find(|&i| v.apply(i) < v.apply(i + 1)) {
        path.push(i);
        v = v.times_simple(i);
    }
    groth_poly_along(w, &path).expect("ascending path")
}
