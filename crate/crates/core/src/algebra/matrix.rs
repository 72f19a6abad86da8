//! Dense matrices over a commutative ring.

use std::collections::HashMap;
use std::fmt;

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct RingMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> RingMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RingMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RingMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(RingMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> RingMatrix<U> {
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RingMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.plus(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&T::from_int(-1)))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.times(c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                let b = other.get(k, j);
                if !a.is_zero() && !b.is_zero() {
                    acc = acc.plus(&a.times(b));
                }
            }
            acc
        })
    }

    /// Submatrix on the given 0-based rows and columns.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Minor `det(x_{rows[a], cols[b]})` on 0-based index lists.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<T> {
        if rows.len() != cols.len() {
            return Err(Error::NonSquare {
                rows: rows.len(),
                cols: cols.len(),
            });
        }
        if rows.iter().any(|&r| r >= self.rows) || cols.iter().any(|&c| c >= self.cols) {
            return Err(Error::Dimension("minor index out of range".into()));
        }
        Ok(self.submatrix(rows, cols).det_unchecked())
    }

    /// Minor on 1-based index lists.
    pub fn minor1(&self, rows: &[usize], cols: &[usize]) -> Result<T> {
        let r: Vec<usize> = rows.iter().map(|i| i - 1).collect();
        let c: Vec<usize> = cols.iter().map(|j| j - 1).collect();
        self.minor(&r, &c)
    }

    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.det_unchecked())
    }

    fn det_unchecked(&self) -> T {
        if self.rows <= 6 {
            self.det_laplace()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along rows, memoized on the set of used columns.
    pub fn det_laplace(&self) -> T {
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut memo: HashMap<u64, T> = HashMap::new();
        self.laplace_rec(0, 0, &mut memo)
    }

    fn laplace_rec(&self, row: usize, used: u64, memo: &mut HashMap<u64, T>) -> T {
        let n = self.rows;
        if row == n {
            return T::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = T::zero();
        let mut sign_pos = true;
        for j in 0..n {
            if used & (1 << j) != 0 {
                continue;
            }
            let a = self.get(row, j);
            if !a.is_zero() {
                let sub = self.laplace_rec(row + 1, used | (1 << j), memo);
                if !sub.is_zero() {
                    let t = a.times(&sub);
                    acc = if sign_pos { acc.plus(&t) } else { acc.minus(&t) };
                }
            }
            sign_pos = !sign_pos;
        }
        memo.insert(used, acc.clone());
        acc
    }

    /// Fraction-free Bareiss elimination; requires exact division in `T`.
    pub fn det_bareiss(&self) -> T {
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut m = self.clone();
        let mut sign = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            if m.get(k, k).is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m.get(i, k).is_zero()) else {
                    return T::zero();
                };
                m.swap_rows(k, p);
                sign = !sign;
            }
            let pivot = m.get(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = pivot
                        .times(m.get(i, j))
                        .minus(&m.get(i, k).times(m.get(k, j)));
                    let v = v
                        .div_exact(&prev)
                        .expect("Bareiss step requires exact division");
                    m.set(i, j, v);
                }
                m.set(i, k, T::zero());
            }
            prev = pivot;
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign {
            d.negated()
        } else {
            d
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<T: Field> RingMatrix<T> {
    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or(Error::Singular)?;
            a.swap_rows(k, p);
            inv.swap_rows(k, p);
            let piv = a.get(k, k).inverse().ok_or(Error::Singular)?;
            for j in 0..n {
                a.set(k, j, a.get(k, j).times(&piv));
                inv.set(k, j, inv.get(k, j).times(&piv));
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    a.set(i, j, a.get(i, j).minus(&f.times(a.get(k, j))));
                    inv.set(i, j, inv.get(i, j).minus(&f.times(inv.get(k, j))));
                }
            }
        }
        Ok(inv)
    }

    /// Solves `self * x = b` for a square non-singular matrix.
    pub fn solve(&self, b: &[T]) -> Result<Vec<T>> {
        let inv = self.inverse()?;
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (j, bj) in b.iter().enumerate() {
                    acc = acc.plus(&inv.get(i, j).times(bj));
                }
                acc
            })
            .collect())
    }

    /// Determinant by Gaussian elimination over the field.
    pub fn det_field(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a.get(i, k).is_zero()) else {
                return Ok(T::zero());
            };
            if p != k {
                a.swap_rows(k, p);
                det = det.negated();
            }
            let piv = a.get(k, k).clone();
            det = det.times(&piv);
            let pinv = piv.inverse().expect("non-zero pivot");
            for i in k + 1..n {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).times(&pinv);
                for j in k..n {
                    a.set(i, j, a.get(i, j).minus(&f.times(a.get(k, j))));
                }
            }
        }
        Ok(det)
    }
}

impl<T: fmt::Debug> fmt::Debug for RingMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?}, ", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
