use crate::algebra::matrix::RingMatrix;
use crate::algebra::partition::Partition;
use crate::algebra::permutation::Permutation;
use crate::algebra::polyzq::{PolyZQ, Var};
use crate::algebra::symfunc::SymFunc;
use crate::error::{Error, Result};
use crate::peterson::{Denominator, FactoredFrac, PhiMap};

use super::fbasis::{fq_poly, FBasis};
use super::groth::groth_poly;
use super::kbounded::grassmannian_perm;
use crate::grothendieck::dual_groth;
use crate::peterson::{d_theta, grassmannian_indices, SymFrac};

/// `𝔊^Q_w = Q̂(𝔊_w)`.
pub fn quantum_groth(w: &Permutation) -> PolyZQ {
    FBasis::shared(w.n())
        .quantize(&groth_poly(w))
        .expect("Grothendieck polynomials lie in the f-span")
}

fn f_entry(n: usize, m: usize, k: i64) -> PolyZQ {
    if k < 0 || k as usize > m {
        PolyZQ::zero()
    } else {
        fq_poly(n, m, k as usize)
    }
}

/// `S^Q_{λ,d} = det(F^{(d+j-1)}_{λ'_i - i + j})_{i,j ≤ ℓ(λ')}`.
pub fn s_q_poly(lam: &Partition, d: usize, n: usize) -> Result<PolyZQ> {
    if d >= n || !lam.fits_in_rectangle(d, n - d) {
        return Err(Error::NotInRectangle {
            partition: lam.to_string(),
            rows: d,
            cols: n.saturating_sub(d),
        });
    }
    let conj = lam.conjugate();
    let l = conj.len();
    if l == 0 {
        return Ok(PolyZQ::one());
    }
    let m = RingMatrix::from_fn(l, l, |i, j| {
        f_entry(n, d + j, conj.parts()[i] as i64 - i as i64 + j as i64)
    });
    m.det()
}

/// `s_λ(1 - x_1, …, 1 - x_d)` through the Jacobi–Trudi expansion in `h_k(y_1..y_d)`.
pub fn schur_in_one_minus_x(lam: &Partition, d: usize) -> PolyZQ {
    let s = SymFunc::schur(lam);
    let top = s.poly().num_vars();
    // h[j][k] = h_k(y_1..y_j)
    let mut h: Vec<PolyZQ> = (0..=top).map(|k| if k == 0 { PolyZQ::one() } else { PolyZQ::zero() }).collect();
    for j in 1..=d {
        let y = PolyZQ::one_minus(Var::X(j));
        let mut next = Vec::with_capacity(h.len());
        for k in 0..=top {
            // h_k(y_1..y_j) = h_k(y_1..y_{j-1}) + y_j h_{k-1}(y_1..y_j)
            let v = if k == 0 {
                PolyZQ::one()
            } else {
                h[k].add(&y.mul(&next[k - 1]))
            };
            next.push(v);
        }
        h = next;
    }
    s.poly().substitute(|slot| h[slot + 1].clone())
}

/// `Φ_n(𝔊^Q_w)` through the f-expansion of `𝔊_w` and the images `Φ_n(F^{(j)}_i)`.
pub fn phi_quantum_groth(w: &Permutation) -> FactoredFrac {
    let n = w.n();
    let coords = FBasis::shared(n)
        .expand(&groth_poly(w))
        .expect("Grothendieck polynomials lie in the f-span");
    let terms: Vec<(Vec<usize>, _)> = coords.into_iter().map(|(m, c)| (m.0, c)).collect();
    PhiMap::shared(n).apply_f_expansion(&terms)
}

/// `Φ_n(S^Q_{λ,d})` as the determinant of the entrywise images.
pub fn phi_s_q(lam: &Partition, d: usize, n: usize) -> Result<FactoredFrac> {
    if d >= n || !lam.fits_in_rectangle(d, n - d) {
        return Err(Error::NotInRectangle {
            partition: lam.to_string(),
            rows: d,
            cols: n.saturating_sub(d),
        });
    }
    let map = PhiMap::shared(n);
    let table = map.table();
    let conj = lam.conjugate();
    let l = conj.len();
    let mut den = Denominator::one(n);
    let mut cols: Vec<Vec<SymFunc>> = Vec::with_capacity(l);
    for j in 0..l {
        let m = d + j;
        let entries: Vec<Option<&FactoredFrac>> = (0..l)
            .map(|i| {
                let k = conj.parts()[i] as i64 - i as i64 + j as i64;
                (k > 0 && k as usize <= m).then(|| map.f_image(m, k as usize))
            })
            .collect();
        let col_den = entries
            .iter()
            .flatten()
            .fold(Denominator::one(n), |acc, f| acc.lcm(&f.den));
        let col: Vec<SymFunc> = (0..l)
            .map(|i| {
                let k = conj.parts()[i] as i64 - i as i64 + j as i64;
                match entries[i] {
                    Some(f) => f.num.mul(&col_den.quotient(&f.den).expand(table)),
                    None if k == 0 => col_den.expand(table),
                    None => SymFunc::zero(),
                }
            })
            .collect();
        den = den.product(&col_den);
        cols.push(col);
    }
    let num = RingMatrix::from_fn(l, l, |i, j| cols[j][i].clone()).det()?;
    let mut f = FactoredFrac { num, den };
    f.reduce(table);
    Ok(f)
}

/// `g̃_w = Φ_n(𝔊^Q_w) ∏_{i ∈ Des(w)} τ_i`, certified to be a polynomial by exact division.
pub fn g_tilde(w: &Permutation) -> Result<SymFunc> {
    let n = w.n();
    if n < 2 {
        return Ok(SymFunc::one());
    }
    let map = PhiMap::shared(n);
    let f = phi_quantum_groth(w);
    let mut num = f.num;
    let mut den = f.den;
    for i in w.descents() {
        if den.tau[i - 1] > 0 {
            den.tau[i - 1] -= 1;
        } else {
            num = num.mul(map.table().tau(i));
        }
    }
    if den.is_one() {
        return Ok(num);
    }
    num.div_exact(&den.expand(map.table()))
        .ok_or_else(|| Error::NotDivisible(format!("Φ(𝔊^Q_{w}) ∏ τ_Des leaves denominator {den}")))
}

/// `Q̂(s_λ(1-x_1, …, 1-x_d)) = S^Q_{λ,d}`.
pub fn quantized_schur_check(lam: &Partition, d: usize, n: usize) -> Result<bool> {
    let lhs = FBasis::shared(n).quantize(&schur_in_one_minus_x(lam, d))?;
    Ok(lhs == s_q_poly(lam, d, n)?)
}

/// `Φ_n(S^Q_{λ,d}) = D(d-i_1, …, d-i_d) / D(d-1, …, 0)`.
pub fn phi_s_q_check(lam: &Partition, d: usize, n: usize) -> Result<bool> {
    let table = PhiMap::shared(n);
    let lhs = phi_s_q(lam, d, n)?.to_symfrac(table.table());
    let theta: Vec<i64> = grassmannian_indices(lam, d)
        .into_iter()
        .map(|i| d as i64 - i as i64)
        .collect();
    let base: Vec<i64> = (0..d as i64).rev().collect();
    Ok(lhs == SymFrac::new(d_theta(n, &theta), d_theta(n, &base)))
}

/// `Φ_n(𝔊^Q_{w_{λ,d}}) τ_d = g_{λ∨}`.
pub fn grassmannian_image_check(lam: &Partition, d: usize, n: usize) -> Result<bool> {
    let w = grassmannian_perm(lam, d, n)?;
    let map = PhiMap::shared(n);
    let img = phi_quantum_groth(&w).to_symfrac(map.table());
    let vee = lam.complement(d, n)?;
    Ok(img.mul_symfunc(map.table().tau(d)) == SymFrac::from_symfunc(dual_groth(&vee)))
}

/// `∏_{i=1}^{n-2} g_{(n-1-i)^i}`.
pub fn staircase_rectangle_product(n: usize) -> SymFunc {
    (1..n.saturating_sub(1)).fold(SymFunc::one(), |acc, i| {
        acc.mul(&dual_groth(&Partition::rectangle(i, n - 1 - i)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grothendieck::stable_groth_vars;
    use crate::peterson::phi_apply;
    use crate::schubert::quantize;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn quantum_examples() {
        assert_eq!(quantum_groth(&perm("123")), PolyZQ::one());
        assert_eq!(
            quantum_groth(&perm("21")),
            PolyZQ::parse("1 - (1-x1)(1-Q1)").unwrap()
        );
        for w in Permutation::all(4) {
            assert_eq!(quantum_groth(&w).at_q_zero(), groth_poly(&w), "w = {w}");
        }
    }

    #[test]
    fn s_q_examples() {
        assert_eq!(s_q_poly(&Partition::empty(), 1, 3).unwrap(), PolyZQ::one());
        let one: Partition = "1".parse().unwrap();
        assert_eq!(s_q_poly(&one, 1, 3).unwrap(), fq_poly(3, 1, 1));
        for n in 2..=4 {
            for d in 1..n {
                for lam in Partition::in_rectangle(d, n - d) {
                    let lhs = quantize(&schur_in_one_minus_x(&lam, d), n).unwrap();
                    assert_eq!(lhs, s_q_poly(&lam, d, n).unwrap(), "{lam} d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn fast_and_direct_routes_agree() {
        for n in 2..=3 {
            let map = PhiMap::shared(n);
            for w in Permutation::all(n) {
                let direct = phi_apply(&quantum_groth(&w), n).unwrap();
                let fast = phi_quantum_groth(&w).to_symfrac(map.table());
                assert_eq!(direct, fast, "w = {w}");
            }
            for d in 1..n {
                for lam in Partition::in_rectangle(d, n - d) {
                    let direct = phi_apply(&s_q_poly(&lam, d, n).unwrap(), n).unwrap();
                    let fast = phi_s_q(&lam, d, n).unwrap().to_symfrac(map.table());
                    assert_eq!(direct, fast, "{lam} d={d}");
                }
            }
        }
    }

    #[test]
    fn grassmannian_images() {
        for n in 3..=4 {
            let map = PhiMap::shared(n);
            for d in 1..n {
                for lam in Partition::in_rectangle(d, n - d) {
                    let w = grassmannian_perm(&lam, d, n).unwrap();
                    let img = phi_quantum_groth(&w).to_symfrac(map.table());
                    let vee = lam.complement(d, n).unwrap();
                    let expected = SymFrac::new(dual_groth(&vee), map.table().tau(d).clone());
                    assert_eq!(img, expected, "{lam} d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn g_tilde_small() {
        assert_eq!(g_tilde(&perm("1234")).unwrap(), SymFunc::one());
        let w0 = Permutation::longest(4);
        let expected = dual_groth(&"2".parse().unwrap()).mul(&dual_groth(&"1,1".parse().unwrap()));
        assert_eq!(g_tilde(&w0).unwrap(), expected);
    }

    #[test]
    fn quantized_schur_and_its_image() {
        for n in 3..=4 {
            for d in 1..n {
                for lam in Partition::in_rectangle(d, n - d) {
                    assert!(quantized_schur_check(&lam, d, n).unwrap(), "{lam} d={d} n={n}");
                    assert!(phi_s_q_check(&lam, d, n).unwrap(), "{lam} d={d} n={n}");
                    assert!(grassmannian_image_check(&lam, d, n).unwrap(), "{lam} d={d} n={n}");
                }
            }
        }
    }

    #[test]
    fn stable_groth_restricts_to_grassmannian_groth() {
        for n in 2..=4 {
            for d in 1..n {
                for lam in Partition::in_rectangle(d, n - d) {
                    let w = grassmannian_perm(&lam, d, n).unwrap();
                    assert_eq!(stable_groth_vars(&lam, d), groth_poly(&w), "{lam} d={d}");
                }
            }
        }
    }

    #[test]
    fn longest_element_factorizes() {
        for n in 3..=4 {
            let w0 = Permutation::longest(n);
            assert_eq!(g_tilde(&w0).unwrap(), staircase_rectangle_product(n));
        }
    }

    #[test]
    fn g_tilde_lies_in_lambda_n() {
        for w in Permutation::all(4) {
            let g = g_tilde(&w).unwrap();
            assert!(g.in_lambda_n(4), "w = {w}");
        }
    }
}
