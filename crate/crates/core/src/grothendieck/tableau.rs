use std::fmt;

use num_traits::One;

use crate::algebra::partition::Partition;
use crate::algebra::poly::{Monomial, Poly};
use crate::algebra::polyzq::{PolyZQ, Var};
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::par;

/// Set-valued tableau; each cell holds a non-empty set of positive integers,
/// stored as a bitmask (bit `k` set means `k` is in the cell).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetValuedTableau {
    shape: Partition,
    rows: Vec<Vec<u64>>,
}

impl SetValuedTableau {
    /// Builds and validates a tableau from explicit cell contents, row by row.
    pub fn new(shape: Partition, cells: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        if cells.len() != shape.len()
            || cells.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p)
        {
            return Err(Error::Dimension("cells do not match the shape".into()));
        }
        let mut rows = Vec::new();
        for row in cells {
            let mut out = Vec::new();
            for cell in row {
                let mut mask = 0u64;
                for v in cell {
                    if v == 0 || v > 63 {
                        return Err(Error::Dimension(format!("entry {v} out of range 1..63")));
                    }
                    mask |= 1 << v;
                }
                out.push(mask);
            }
            rows.push(out);
        }
        let t = SetValuedTableau { shape, rows };
        if !t.is_valid() {
            return Err(Error::Dimension(
                "cells violate the semistandard condition or are empty".into(),
            ));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Contents of cell `(r, c)` (0-based) in increasing order.
    pub fn cell(&self, r: usize, c: usize) -> Vec<usize> {
        bits(self.rows[r][c]).collect()
    }

    /// Total number of entries.
    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .flatten()
            .map(|m| m.count_ones() as usize)
            .sum()
    }

    /// Rows weakly increase and columns strictly increase, comparing the
    /// maximum of the left/upper cell with the minimum of the right/lower cell.
    pub fn is_valid(&self) -> bool {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &m) in row.iter().enumerate() {
                if m == 0 {
                    return false;
                }
                if c > 0 && max_bit(row[c - 1]) > min_bit(m) {
                    return false;
                }
                if r > 0 && max_bit(self.rows[r - 1][c]) >= min_bit(m) {
                    return false;
                }
            }
        }
        true
    }

    /// Reads columns right to left, each top to bottom, with the entries of a
    /// cell in decreasing order.
    pub fn column_word(&self) -> ColumnWord {
        let mut letters = Vec::with_capacity(self.size());
        for c in (0..self.shape.first()).rev() {
            for row in self.rows.iter() {
                if c < row.len() {
                    let mut cell: Vec<usize> = bits(row[c]).collect();
                    cell.reverse();
                    letters.extend(cell);
                }
            }
        }
        ColumnWord(letters)
    }

    /// `x^T`: the exponent of `x_k` is the number of cells containing `k`.
    pub fn weight(&self) -> Vec<usize> {
        let mut w = Vec::new();
        for &m in self.rows.iter().flatten() {
            for k in bits(m) {
                if w.len() < k {
                    w.resize(k, 0);
                }
                w[k - 1] += 1;
            }
        }
        w
    }

    /// All tableaux of the given shape with entries in `1..=max_entry`.
    pub fn enumerate(shape: &Partition, max_entry: usize) -> Vec<SetValuedTableau> {
        let mut out = Vec::new();
        let filler = Filler::new(shape, max_entry, None);
        filler.run(|rows| {
            out.push(SetValuedTableau {
                shape: shape.clone(),
                rows: rows.to_vec(),
            })
        });
        out
    }
}

impl fmt::Debug for SetValuedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<Vec<usize>>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&m| bits(m).collect()).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnWord(pub Vec<usize>);

impl ColumnWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

/// Whether adding a box to row `r` for each letter `r` of the word, in order,
/// keeps a partition at every step and turns `lam` into `nu`.
pub fn builds(word: &[usize], lam: &Partition, nu: &Partition) -> bool {
    let mut rows: Vec<usize> = lam.parts().to_vec();
    for &r in word {
        if r == 0 || r > rows.len() + 1 {
            return false;
        }
        if r == rows.len() + 1 {
            rows.push(0);
        }
        if r > 1 && rows[r - 2] <= rows[r - 1] {
            return false;
        }
        rows[r - 1] += 1;
    }
    rows == nu.parts()
}

/// K-theoretic Littlewood-Richardson coefficient `c^ν_{λ,μ}`: the number of
/// set-valued tableaux of shape `μ` whose column word builds `ν` from `λ`.
pub fn klr_coeff(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !nu.contains(lam) || nu.weight() < lam.weight() + mu.weight() {
        return 0;
    }
    // letter r must occur exactly ν_r - λ_r times
    let quota: Vec<usize> = (1..=nu.len()).map(|r| nu.part(r) - lam.part(r)).collect();
    let filler = Filler::new(mu, nu.len(), Some(quota));
    let tops = filler.first_cell_candidates();
    let counts = par::map(&tops, |&first| {
        let mut count = 0u64;
        filler.run_from(first, |rows| {
            let t = SetValuedTableau {
                shape: mu.clone(),
                rows: rows.to_vec(),
            };
            if builds(&t.column_word().0, lam, nu) {
                count += 1;
            }
        });
        count
    });
    counts.into_iter().sum()
}

/// `G_λ(x_1, ..., x_d) = Σ_T (-1)^{|T| - |λ|} x^T` over set-valued tableaux with entries at most `d`.
pub fn stable_groth_vars(lam: &Partition, d: usize) -> PolyZQ {
    if lam.len() > d {
        return PolyZQ::zero();
    }
    let mut p = Poly::zero();
    let filler = Filler::new(lam, d, None);
    let base = lam.weight();
    filler.run(|rows| {
        let mut exps = vec![0u16; 3 * d + 1];
        let mut size = 0;
        for &m in rows.iter().flatten() {
            for k in bits(m) {
                exps[Var::X(k).slot()] += 1;
                size += 1;
            }
        }
        let sign = if (size - base).is_multiple_of(2) {
            Rational::one()
        } else {
            -Rational::one()
        };
        p.add_term(Monomial::from_exponents(&exps), sign);
    });
    PolyZQ::from_poly(p)
}

fn bits(m: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |k| m & (1 << k) != 0)
}

fn max_bit(m: u64) -> u32 {
    63 - m.leading_zeros()
}

fn min_bit(m: u64) -> u32 {
    m.trailing_zeros()
}

/// Backtracking enumeration; cells are filled column by column, left to right,
/// top to bottom.
struct Filler {
    shape: Vec<usize>,
    order: Vec<(usize, usize)>,
    max_entry: usize,
    quota: Option<Vec<usize>>,
}

impl Filler {
    fn new(shape: &Partition, max_entry: usize, quota: Option<Vec<usize>>) -> Self {
        let conj = shape.conjugate();
        let mut order = Vec::new();
        for (c, &h) in conj.parts().iter().enumerate() {
            for r in 0..h {
                order.push((r, c));
            }
        }
        Filler {
            shape: shape.parts().to_vec(),
            order,
            max_entry,
            quota,
        }
    }

    fn empty_rows(&self) -> Vec<Vec<u64>> {
        self.shape.iter().map(|&p| vec![0u64; p]).collect()
    }

    fn candidates(&self, rows: &[Vec<u64>], r: usize, c: usize) -> Vec<u64> {
        // smallest allowed entry
        let mut lo = 1u32;
        if c > 0 {
            lo = lo.max(max_bit(rows[r][c - 1]));
        }
        if r > 0 {
            lo = lo.max(max_bit(rows[r - 1][c]) + 1);
        }
        let hi = self.max_entry as u32;
        if lo > hi {
            return Vec::new();
        }
        let width = hi - lo + 1;
        (1u64..(1 << width)).map(|s| s << lo).collect()
    }

    fn first_cell_candidates(&self) -> Vec<u64> {
        if self.order.is_empty() {
            return vec![0];
        }
        self.candidates(&self.empty_rows(), 0, 0)
    }

    fn run(&self, mut visit: impl FnMut(&[Vec<u64>])) {
        let mut rows = self.empty_rows();
        let mut used = vec![0usize; self.max_entry + 1];
        self.rec(0, &mut rows, &mut used, &mut visit);
    }

    /// Runs the enumeration with the first cell fixed to `first`.
    fn run_from(&self, first: u64, mut visit: impl FnMut(&[Vec<u64>])) {
        let mut rows = self.empty_rows();
        let mut used = vec![0usize; self.max_entry + 1];
        if self.order.is_empty() {
            self.rec(0, &mut rows, &mut used, &mut visit);
            return;
        }
        if !self.take(first, &mut used) {
            return;
        }
        rows[0][0] = first;
        self.rec(1, &mut rows, &mut used, &mut visit);
    }

    fn take(&self, m: u64, used: &mut [usize]) -> bool {
        for k in bits(m) {
            used[k] += 1;
        }
        if let Some(q) = &self.quota {
            if bits(m).any(|k| used[k] > q[k - 1]) {
                for k in bits(m) {
                    used[k] -= 1;
                }
                return false;
            }
        }
        true
    }

    fn rec(
        &self,
        k: usize,
        rows: &mut Vec<Vec<u64>>,
        used: &mut Vec<usize>,
        visit: &mut impl FnMut(&[Vec<u64>]),
    ) {
        if k == self.order.len() {
            if let Some(q) = &self.quota {
                if used[1..].iter().zip(q).any(|(u, q)| u != q) {
                    return;
                }
            }
            visit(rows);
            return;
        }
        let (r, c) = self.order[k];
        for m in self.candidates(rows, r, c) {
            if !self.take(m, used) {
                continue;
            }
            rows[r][c] = m;
            self.rec(k + 1, rows, used, visit);
            for b in bits(m) {
                used[b] -= 1;
            }
        }
        rows[r][c] = 0;
    }
}
