use num_traits::Zero;

use crate::algebra::matrix::RingMatrix;
use crate::algebra::partition::Partition;
use crate::algebra::rational::{binomial, int, Rational};
use crate::algebra::symfunc::SymFunc;
use crate::grothendieck::dual_groth;

use super::ddet::{d_det, d_theta, DSpec};
use super::kappa::kappa;
use super::tau_sigma::tau_sigma;

/// Column antisymmetry, `D[…θ_i…; …a_i…] = D[…θ_i-1…; …a_i…] + D[…θ_i…; …a_i+1…]`,
/// and vanishing when some `a_i = n`, all at `spec`.
pub fn d_recursion_check(spec: &DSpec) -> bool {
    let v = d_det(spec);
    let d = spec.d();
    for i in 0..d {
        for j in i + 1..d {
            if d_det(&spec.swapped(i, j)) != v.neg() {
                return false;
            }
        }
    }
    for i in 0..d {
        let split = d_det(&spec.with_theta(i, spec.theta[i] - 1))
            .add(&d_det(&spec.with_a(i, spec.a[i] + 1)));
        if split != v {
            return false;
        }
        if !d_det(&spec.with_a(i, spec.n)).is_zero() {
            return false;
        }
        if spec.a[i] == spec.n && !v.is_zero() {
            return false;
        }
    }
    true
}

/// `D[0 … 0; n-λ_d-1, …, n-λ_1-d] = s_λ` for every `λ` with at most `d` rows and
/// `λ_1 ≤ n-d`.
pub fn schur_base_check(n: usize, d: usize) -> bool {
    Partition::in_rectangle(d, n - d).iter().all(|lam| {
        let a: Vec<usize> = (1..=d).map(|j| n - lam.part(d + 1 - j) - j).collect();
        let spec = DSpec::new(n, vec![0; d], a).expect("valid");
        d_det(&spec) == SymFunc::schur(lam)
    })
}

/// Strictly decreasing sequences `n > a_1 > … > a_d ≥ 0`.
fn decreasing(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn go(top: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if d == 0 {
            out.push(cur.clone());
            return;
        }
        for a in (d - 1..top).rev() {
            cur.push(a);
            go(a, d - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if d <= n {
        go(n, d, &mut Vec::new(), &mut out);
    }
    out
}

/// `K^θ_{a,i} = C(i-a+θ-1, θ-1)` for `θ ≥ 1`, `i ≥ a` (zero for `i < a`); `K^0 = δ`.
fn kernel(theta: usize, a: usize, i: usize) -> Rational {
    if theta == 0 {
        return if a == i { int(1) } else { int(0) };
    }
    if i < a {
        return int(0);
    }
    binomial((i - a + theta - 1) as i64, (theta - 1) as i64)
}

/// `det(K^{d-l+1}_{d-l, i_m}) = Σ_{n>a_1>…>a_d≥0} det(K^{d-l}_{a_l, i_m})` for every
/// strictly decreasing `(i_1, …, i_d)` in `[0, n)`.
pub fn eq2_check(n: usize, d: usize) -> bool {
    let seqs = decreasing(n, d);
    seqs.iter().all(|is| {
        let lhs = RingMatrix::from_fn(d, d, |l, m| kernel(d - l, d - l - 1, is[m]))
            .det()
            .expect("square");
        let rhs = seqs.iter().fold(Rational::zero(), |acc, a| {
            acc + RingMatrix::from_fn(d, d, |l, m| kernel(d - l - 1, a[l], is[m]))
                .det()
                .expect("square")
        });
        lhs == rhs
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaCheck {
    /// `D[d … 1; d-1 … 0] = Σ_a D[d-1 … 0; a]`.
    pub sum_identity: bool,
    /// The binomial kernel identity.
    pub kernel_identity: bool,
    /// `D[d … 1; d-1 … 0] = σ_d`.
    pub sigma: bool,
}

impl SigmaCheck {
    pub fn all(&self) -> bool {
        self.sum_identity && self.kernel_identity && self.sigma
    }
}

pub fn sigma_identity_check(n: usize, d: usize) -> SigmaCheck {
    let top: Vec<i64> = (1..=d as i64).rev().collect();
    let low: Vec<i64> = (0..d as i64).rev().collect();
    let lhs = d_det(&DSpec::new(n, top, (0..d).rev().collect()).expect("valid"));
    let rhs = decreasing(n, d).into_iter().fold(SymFunc::zero(), |acc, a| {
        acc.add(&d_det(&DSpec::new(n, low.clone(), a).expect("valid")))
    });
    SigmaCheck {
        sum_identity: lhs == rhs,
        kernel_identity: eq2_check(n, d),
        sigma: lhs == *tau_sigma(n).sigma(d),
    }
}

/// `κ_d(p_i)^⊥ D[θ; a] = Σ_j D[…θ_j-i…; a]` and `p_i^⊥ D[θ; a] = Σ_j D[θ; …a_j+i…]`
/// with `d` the number of columns.
pub fn perp_d_check(i: usize, spec: &DSpec) -> bool {
    let d = spec.d();
    let v = d_det(spec);
    let lhs1 = SymFunc::perp(&kappa(d, &SymFunc::p(i)), &v);
    let rhs1 = (0..d).fold(SymFunc::zero(), |acc, j| {
        acc.add(&d_det(&spec.with_theta(j, spec.theta[j] - i as i64)))
    });
    let lhs2 = SymFunc::p_perp(i, &v);
    let rhs2 = (0..d).fold(SymFunc::zero(), |acc, j| {
        acc.add(&d_det(&spec.with_a(j, spec.a[j] + i)))
    });
    lhs1 == rhs1 && lhs2 == rhs2
}

/// `i_a = λ_{d+1-a} + a`.
pub fn grassmannian_indices(lam: &Partition, d: usize) -> Vec<usize> {
    (1..=d).map(|a| lam.part(d + 1 - a) + a).collect()
}

/// `κ_d(s_λ)^⊥ g_{R_d} = D(d-i_1, …, d-i_d)`.
pub fn prop_6_5_check(lam: &Partition, d: usize, n: usize) -> bool {
    let lhs = SymFunc::perp(
        &kappa(d, &SymFunc::schur(lam)),
        &dual_groth(&Partition::rectangle(d, n - d)),
    );
    let theta: Vec<i64> = grassmannian_indices(lam, d)
        .into_iter()
        .map(|i| d as i64 - i as i64)
        .collect();
    lhs == d_theta(n, &theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursions_small() {
        let specs = [
            DSpec::new(3, vec![1, -1], vec![0, 2]).unwrap(),
            DSpec::new(4, vec![2, 0, 3], vec![1, 0, 2]).unwrap(),
            DSpec::new(4, vec![0, 1], vec![4, 0]).unwrap(),
        ];
        for s in &specs {
            assert!(d_recursion_check(s), "{s:?}");
        }
        for (n, d) in [(3, 1), (3, 2), (4, 2), (5, 2)] {
            assert!(schur_base_check(n, d), "n={n} d={d}");
        }
    }

    #[test]
    fn sigma_identities() {
        for (n, d) in [(3, 1), (3, 2), (4, 2), (4, 3)] {
            let c = sigma_identity_check(n, d);
            assert!(c.all(), "n={n} d={d}: {c:?}");
        }
        assert_eq!(
            d_det(&DSpec::new(3, vec![1], vec![0]).unwrap()),
            SymFunc::parse("1 + h1 + h2").unwrap()
        );
    }

    #[test]
    fn perp_rules() {
        let s = DSpec::new(4, vec![1, 0], vec![0, 1]).unwrap();
        for i in 1..=2 {
            assert!(perp_d_check(i, &s));
        }
        assert!(perp_d_check(9, &s));
        for n in 3..=4 {
            for d in 1..n {
                for lam in Partition::in_rectangle(d, n - d) {
                    assert!(prop_6_5_check(&lam, d, n), "{lam} d={d} n={n}");
                }
            }
        }
    }
}
