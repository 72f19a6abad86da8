use serde::{Deserialize, Serialize};

use crate::algebra::matrix::RingMatrix;
use crate::algebra::rational::binomial;
use crate::algebra::symfunc::SymFunc;
use crate::error::{Error, Result};

/// Index data of `D[θ_1 … θ_d; a_1 … a_d]` inside `Λ_(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DSpec {
    pub n: usize,
    pub theta: Vec<i64>,
    pub a: Vec<usize>,
}

impl DSpec {
    pub fn new(n: usize, theta: Vec<i64>, a: Vec<usize>) -> Result<Self> {
        if theta.len() != a.len() {
            return Err(Error::Dimension(format!(
                "θ has {} entries but a has {}",
                theta.len(),
                a.len()
            )));
        }
        if theta.is_empty() || theta.len() > n {
            return Err(Error::Dimension(format!(
                "need 1 ≤ d ≤ n, got d = {} with n = {n}",
                theta.len()
            )));
        }
        Ok(DSpec { n, theta, a })
    }

    /// `D(θ) = D[θ; 0 … 0]`.
    pub fn theta_only(n: usize, theta: Vec<i64>) -> Result<Self> {
        let d = theta.len();
        DSpec::new(n, theta, vec![0; d])
    }

    pub fn d(&self) -> usize {
        self.theta.len()
    }

    pub fn with_theta(&self, j: usize, theta: i64) -> Self {
        let mut s = self.clone();
        s.theta[j] = theta;
        s
    }

    pub fn with_a(&self, j: usize, a: usize) -> Self {
        let mut s = self.clone();
        s.a[j] = a;
        s
    }

    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut s = self.clone();
        s.theta.swap(i, j);
        s.a.swap(i, j);
        s
    }
}

/// Coefficients of `u^a (1-u)^{-θ} H(u)` modulo `u^n`, with `H(u) = Σ h_k u^k`.
fn column(n: usize, theta: i64, a: usize) -> Vec<SymFunc> {
    let mut col = vec![SymFunc::zero(); n];
    for (r, slot) in col.iter_mut().enumerate().skip(a) {
        let mut acc = SymFunc::zero();
        for l in 0..=(r - a) {
            let b = binomial(-theta, l as i64);
            let c = if l % 2 == 1 { -b } else { b };
            if c != num_traits::Zero::zero() {
                acc = acc.add(&SymFunc::h((r - a - l) as i64).scale(&c));
            }
        }
        *slot = acc;
    }
    col
}

/// `D[θ; a] = (-1)^{d(d-1)/2} det([u^{n-d+i-1}] u^{a_j}(1-u)^{-θ_j}H(u))_{i,j}`.
pub fn d_det(spec: &DSpec) -> SymFunc {
    let n = spec.n;
    let d = spec.d();
    let cols: Vec<Vec<SymFunc>> = spec
        .theta
        .iter()
        .zip(&spec.a)
        .map(|(&t, &a)| column(n, t, a))
        .collect();
    let m = RingMatrix::from_fn(d, d, |i, j| cols[j][n - d + i].clone());
    let det = m.det().expect("square");
    if (d * (d - 1) / 2) % 2 == 1 {
        det.neg()
    } else {
        det
    }
}

/// `D(θ_1, …, θ_d) = D[θ; 0 … 0]`.
pub fn d_theta(n: usize, theta: &[i64]) -> SymFunc {
    d_det(&DSpec::theta_only(n, theta.to_vec()).expect("valid θ"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::partition::Partition;
    use crate::grothendieck::dual_groth;

    #[test]
    fn rectangles() {
        for n in 2..=5 {
            for d in 1..n {
                let theta: Vec<i64> = (0..d as i64).rev().collect();
                assert_eq!(
                    d_theta(n, &theta),
                    dual_groth(&Partition::rectangle(d, n - d)),
                    "n = {n}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn repeated_column_vanishes() {
        let s = DSpec::new(4, vec![2, 2, 0], vec![1, 1, 0]).unwrap();
        assert!(d_det(&s).is_zero());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(DSpec::new(3, vec![1, 2], vec![0]).is_err());
        assert!(DSpec::new(2, vec![0, 0, 0], vec![0, 0, 0]).is_err());
    }
}
