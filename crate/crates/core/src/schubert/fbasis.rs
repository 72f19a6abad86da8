use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::matrix::RingMatrix;
use crate::algebra::poly::Monomial;
use crate::algebra::polyzq::{PolyZQ, Var};
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::toda::f_family;

/// `F^{(m)}_i = Σ_{I ⊆ {1..m}, #I = i} ∏_{j ∈ I} (1 - x_j) ∏_{j ∈ I, j+1 ∉ I} (1 - Q_j)`,
/// with `Q_n = 0`.
pub fn fq_poly(n: usize, m: usize, i: usize) -> PolyZQ {
    f_family(n, m, i, |j| PolyZQ::one_minus(Var::X(j)))
}

/// `f^{(m)}_i = e_i(1 - x_1, …, 1 - x_m)`.
pub fn f_poly(m: usize, i: usize) -> PolyZQ {
    // e_i(y_1..y_m) by the recursion e_i(y_1..y_m) = e_i(y_1..y_{m-1}) + y_m e_{i-1}(y_1..y_{m-1})
    let mut e = vec![PolyZQ::one()];
    for j in 1..=m {
        let y = PolyZQ::one_minus(Var::X(j));
        let mut next = vec![PolyZQ::zero(); e.len() + 1];
        for (k, ek) in e.iter().enumerate() {
            next[k] = next[k].add(ek);
            next[k + 1] = next[k + 1].add(&y.mul(ek));
        }
        e = next;
    }
    e.get(i).cloned().unwrap_or_else(PolyZQ::zero)
}

/// `f^{(1)}_{i_1} f^{(2)}_{i_2} ⋯ f^{(n-1)}_{i_{n-1}}` with `0 ≤ i_j ≤ j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FMonomial(pub Vec<usize>);

impl FMonomial {
    pub fn all(n: usize) -> Vec<FMonomial> {
        let mut out = vec![Vec::new()];
        for j in 1..n {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..=j).map(move |i| {
                        let mut w = v.clone();
                        w.push(i);
                        w
                    })
                })
                .collect();
        }
        out.into_iter().map(FMonomial).collect()
    }

    pub fn classical(&self) -> PolyZQ {
        self.0
            .iter()
            .enumerate()
            .fold(PolyZQ::one(), |acc, (j, &i)| acc.mul(&f_poly(j + 1, i)))
    }

    pub fn quantum(&self, n: usize) -> PolyZQ {
        self.0
            .iter()
            .enumerate()
            .fold(PolyZQ::one(), |acc, (j, &i)| acc.mul(&fq_poly(n, j + 1, i)))
    }
}

impl fmt::Display for FMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &i)| i > 0)
            .map(|(j, &i)| format!("f{}_{}", j + 1, i))
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// The `n!` f-monomials as a basis of the span of `x^a`, `a_j ≤ n - j`.
#[derive(Debug)]
pub struct FBasis {
    n: usize,
    monomials: Vec<FMonomial>,
    index: HashMap<Monomial, usize>,
    inverse: RingMatrix<Rational>,
    quantum: OnceLock<Vec<PolyZQ>>,
}

impl FBasis {
    pub fn new(n: usize) -> Self {
        let monomials = FMonomial::all(n);
        let mut stair: Vec<Monomial> = Vec::new();
        let mut exps = vec![Vec::<u16>::new()];
        for j in 1..n {
            exps = exps
                .into_iter()
                .flat_map(|v| {
                    (0..=(n - j) as u16).map(move |e| {
                        let mut w = v.clone();
                        w.push(e);
                        w
                    })
                })
                .collect();
        }
        for e in exps {
            let mut slots = vec![0u16; 3 * n + 1];
            for (j, &k) in e.iter().enumerate() {
                slots[Var::X(j + 1).slot()] = k;
            }
            stair.push(Monomial::from_exponents(&slots));
        }
        let index: HashMap<Monomial, usize> =
            stair.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let size = monomials.len();
        let mut matrix = RingMatrix::<Rational>::zeros(size, size);
        for (col, fm) in monomials.iter().enumerate() {
            for (m, c) in fm.classical().poly().terms() {
                let row = index[m];
                matrix.set(row, col, c.clone());
            }
        }
        let inverse = matrix.inverse().expect("f-monomials form a basis");
        FBasis {
            n,
            monomials,
            index,
            inverse,
            quantum: OnceLock::new(),
        }
    }

    pub fn shared(n: usize) -> Arc<FBasis> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FBasis>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(FBasis::new(n)))
            .clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn monomials(&self) -> &[FMonomial] {
        &self.monomials
    }

    /// Coordinates of `p` in the f-monomial basis (non-zero entries only).
    pub fn expand(&self, p: &PolyZQ) -> Result<Vec<(FMonomial, Rational)>> {
        let size = self.monomials.len();
        let mut v: Vec<(usize, Rational)> = Vec::new();
        for (m, c) in p.poly().terms() {
            match self.index.get(m) {
                Some(&i) => v.push((i, c.clone())),
                None => return Err(Error::NotInSpan),
            }
        }
        let mut out = Vec::new();
        for row in 0..size {
            let mut acc = Rational::zero();
            for (i, c) in &v {
                let e = self.inverse.get(row, *i);
                if !e.is_zero() {
                    acc += e * c;
                }
            }
            if !acc.is_zero() {
                out.push((self.monomials[row].clone(), acc));
            }
        }
        Ok(out)
    }

    fn quantum_monomials(&self) -> &Vec<PolyZQ> {
        self.quantum
            .get_or_init(|| self.monomials.iter().map(|m| m.quantum(self.n)).collect())
    }

    /// `Q̂(p)`: replaces each `f^{(j)}_i` by `F^{(j)}_i`.
    pub fn quantize(&self, p: &PolyZQ) -> Result<PolyZQ> {
        let coords = self.expand(p)?;
        let q = self.quantum_monomials();
        let mut out = PolyZQ::zero();
        for (fm, c) in coords {
            let pos = self
                .monomials
                .binary_search(&fm)
                .expect("monomials are sorted");
            out = out.add(&q[pos].scale(&c));
        }
        Ok(out)
    }
}

/// `Q̂(p)` for `p` in `x_1..x_n`.
pub fn quantize(p: &PolyZQ, n: usize) -> Result<PolyZQ> {
    FBasis::shared(n).quantize(p)
}
