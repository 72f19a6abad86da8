use std::fmt;

use serde::Serialize;

use crate::algebra::partition::Partition;
use crate::algebra::permutation::Permutation;
use crate::error::{Error, Result};

/// Partition with `μ_1 ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct KBoundedPartition {
    pub partition: Partition,
    pub k: usize,
}

impl KBoundedPartition {
    pub fn new(partition: Partition, k: usize) -> Result<Self> {
        if partition.first() > k {
            return Err(Error::InvalidPartition(format!(
                "{partition} has a part larger than k = {k}"
            )));
        }
        Ok(KBoundedPartition { partition, k })
    }

    /// `(m_1, …, m_k)`, `m_i` the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        (1..=self.k).map(|i| self.partition.multiplicity(i)).collect()
    }

    /// `m_i ≤ k - i` for all `i`.
    pub fn is_irreducible(&self) -> bool {
        self.multiplicities()
            .iter()
            .enumerate()
            .all(|(i, &m)| m + i < self.k)
    }
}

impl fmt::Display for KBoundedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.partition)
    }
}

/// `c_i`: the cycle `i+1 → i+2 → … → n → i+1` (`0 ≤ i ≤ n-2`).
pub fn cycle(n: usize, i: usize) -> Permutation {
    let mut v: Vec<usize> = (1..=n).collect();
    for j in i + 1..n {
        v[j - 1] = j + 1;
    }
    v[n - 1] = i + 1;
    Permutation::new(v).expect("cycle")
}

fn power(p: &Permutation, m: usize) -> Permutation {
    (0..m).fold(Permutation::identity(p.n()), |acc, _| p.compose(&acc))
}

/// `λ(w) = (1^{m_1} 2^{m_2} ⋯ (n-2)^{m_{n-2}})` where `w̃ = c_0^t w` has `w̃(1) = 1`
/// and `w̃ = c_1^{m_1} c_2^{m_2} ⋯ c_{n-2}^{m_{n-2}}` with `0 ≤ m_i ≤ k - i`, `k = n-1`.
pub fn lambda_map(w: &Permutation) -> KBoundedPartition {
    let n = w.n();
    let k = n.saturating_sub(1);
    if n <= 2 {
        return KBoundedPartition::new(Partition::empty(), k).expect("empty");
    }
    let c0 = cycle(n, 0);
    let wt = (0..n)
        .map(|t| power(&c0, t).compose(w))
        .find(|v| v.apply(1) == 1)
        .expect("some rotation fixes 1");
    let cycles: Vec<Permutation> = (1..=n - 2).map(|i| cycle(n, i)).collect();
    let mut m = vec![0usize; n - 2];
    loop {
        let prod = m
            .iter()
            .zip(&cycles)
            .fold(Permutation::identity(n), |acc, (&e, c)| acc.compose(&power(c, e)));
        if prod == wt {
            break;
        }
        // next exponent vector, m_i ranging over 0..=k-i
        let mut pos = 0;
        loop {
            assert!(pos < m.len(), "no factorization found for {w}");
            m[pos] += 1;
            if m[pos] <= k - (pos + 1) {
                break;
            }
            m[pos] = 0;
            pos += 1;
        }
    }
    let mut parts = Vec::new();
    for i in (1..=n - 2).rev() {
        parts.extend(std::iter::repeat_n(i, m[i - 1]));
    }
    KBoundedPartition::new(Partition::new(parts).expect("weakly decreasing"), k).expect("bounded")
}

/// The `(k+1)`-core whose cells with hook length at most `k` have row counts `μ`.
fn to_core(mu: &Partition, k: usize) -> Vec<usize> {
    let mut rows: Vec<usize> = Vec::new();
    for &part in mu.parts().iter().rev() {
        let mut c = part.max(rows.last().copied().unwrap_or(0));
        loop {
            let j = c - part + 1;
            let below = rows.iter().filter(|&&r| r >= j).count();
            if (c - j) + below < k {
                break;
            }
            c += 1;
        }
        rows.push(c);
    }
    rows.reverse();
    rows
}

fn conjugate_rows(rows: &[usize]) -> Vec<usize> {
    let first = rows.first().copied().unwrap_or(0);
    (0..first)
        .map(|j| rows.iter().filter(|&&r| r > j).count())
        .collect()
}

fn from_core(core: &[usize], k: usize) -> Partition {
    let cols = conjugate_rows(core);
    let parts: Vec<usize> = core
        .iter()
        .enumerate()
        .map(|(i, &r)| {
            (1..=r)
                .filter(|&j| (r - j) + (cols[j - 1] - i - 1) < k)
                .count()
        })
        .filter(|&c| c > 0)
        .collect();
    Partition::from_unsorted(parts)
}

/// `μ^{ω_k}` through the bijection with `(k+1)`-cores and core transposition.
pub fn k_conjugate(mu: &KBoundedPartition) -> KBoundedPartition {
    let core = to_core(&mu.partition, mu.k);
    let transposed = conjugate_rows(&core);
    KBoundedPartition::new(from_core(&transposed, mu.k), mu.k).expect("bounded")
}

/// `w_{λ,d}`: `w(a) = λ_{d+1-a} + a` for `a ≤ d`, remaining values increasing.
pub fn grassmannian_perm(lam: &Partition, d: usize, n: usize) -> Result<Permutation> {
    if d > n || !lam.fits_in_rectangle(d, n - d) {
        return Err(Error::NotInRectangle {
            partition: lam.to_string(),
            rows: d,
            cols: n.saturating_sub(d),
        });
    }
    let head: Vec<usize> = (1..=d).map(|a| lam.part(d + 1 - a) + a).collect();
    let tail = (1..=n).filter(|v| !head.contains(v));
    Permutation::new(head.iter().copied().chain(tail).collect())
}
