use crate::algebra::matrix::RingMatrix;
use crate::algebra::rational::{binomial, Rational};
use crate::algebra::ring::Ring;

use super::point::SpectralParams;

/// A class `[φ]` in `C[ζ]/(f_γ)`, stored by its remainder coefficients
/// `φ_0, ..., φ_{n-1}` in the basis `1, ζ, ..., ζ^{n-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhiClass<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> PhiClass<T> {
    /// From coefficients of any degree; reduced modulo `f_γ`.
    pub fn from_zeta_coeffs(coeffs: Vec<T>, params: &SpectralParams) -> Self {
        PhiClass {
            coeffs: reduce(coeffs, params),
        }
    }

    /// `φ = Σ_i (-1)^i c_i (ζ - 1)^i = Σ_i c_i (1 - ζ)^i`.
    pub fn from_unipotent_coords(c: &[T]) -> Self {
        let n = c.len();
        let mut coeffs = vec![T::zero(); n];
        for (i, ci) in c.iter().enumerate() {
            for (k, slot) in coeffs.iter_mut().enumerate().take(i + 1) {
                let b = binomial(i as i64, k as i64);
                let b = if k % 2 == 1 { -b } else { b };
                *slot = slot.plus(&ci.times(&T::from_rational(&b)));
            }
        }
        PhiClass { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn zeta_coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coordinates `c_l` with `φ = Σ c_l (1 - ζ)^l` (the coefficients are exact
    /// modulo `(ζ - 1)^n`).
    pub fn unipotent_coords(&self) -> Vec<T> {
        to_u_basis(&self.coeffs)
    }

    /// `(1, n)` entry of `φ(C_γ)`, i.e. the `ζ^{n-1}` coefficient.
    pub fn is_normalized(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }
}

fn reduce<T: Ring>(mut coeffs: Vec<T>, params: &SpectralParams) -> Vec<T> {
    let n = params.n();
    let f = params.char_poly();
    while coeffs.len() > n {
        let top = coeffs.pop().expect("non-empty");
        let shift = coeffs.len() - n;
        if top.is_zero() {
            continue;
        }
        // ζ^{n+shift} ≡ -Σ_{k<n} f_k ζ^{k+shift}
        for (k, fk) in f.iter().enumerate().take(n) {
            let v = coeffs[k + shift].minus(&top.times(&T::from_rational(fk)));
            coeffs[k + shift] = v;
        }
    }
    coeffs.resize(n, T::zero());
    coeffs
}

fn mul_zeta<T: Ring>(v: &[T], params: &SpectralParams) -> Vec<T> {
    let mut out = Vec::with_capacity(v.len() + 1);
    out.push(T::zero());
    out.extend(v.iter().cloned());
    reduce(out, params)
}

fn to_u_basis<T: Ring>(v: &[T]) -> Vec<T> {
    // ζ^k = (1 - u)^k
    let n = v.len();
    let mut out = vec![T::zero(); n];
    for (k, vk) in v.iter().enumerate() {
        if vk.is_zero() {
            continue;
        }
        for (l, slot) in out.iter_mut().enumerate().take(k + 1) {
            let b = binomial(k as i64, l as i64);
            let b = if l % 2 == 1 { -b } else { b };
            *slot = slot.plus(&vk.times(&T::from_rational(&b)));
        }
    }
    out
}

/// Linear coordinate map `c: O_γ → C^n` used in the determinants `T_i`, `S_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordMap {
    /// Remainder coefficients in the basis `1, ζ, ..., ζ^{n-1}`.
    Remainder,
    /// Coefficients `c_i` in `φ = Σ (-1)^i c_i (ζ - 1)^i`.
    Unipotent,
}

impl CoordMap {
    fn apply<T: Ring>(self, v: &[T]) -> Vec<T> {
        match self {
            CoordMap::Remainder => v.to_vec(),
            CoordMap::Unipotent => to_u_basis(v),
        }
    }
}

/// `T_1..T_n` and `S_1..S_n`.
#[derive(Clone, Debug, PartialEq)]
pub struct TSValues<T> {
    pub t: Vec<T>,
    pub s: Vec<T>,
}

impl<T: Ring> TSValues<T> {
    /// `T_i` for `0 ≤ i ≤ n`, with `T_0 = 1`.
    pub fn t(&self, i: usize) -> T {
        if i == 0 {
            T::one()
        } else {
            self.t[i - 1].clone()
        }
    }

    /// `S_i` for `0 ≤ i ≤ n`, with `S_0 = 1`.
    pub fn s(&self, i: usize) -> T {
        if i == 0 {
            T::one()
        } else {
            self.s[i - 1].clone()
        }
    }
}

/// `T_i = |b_0..b_{i-1}, a_{i-1}..a_{n-2}|` and `S_i = |b_0..b_{i-1}, a_i..a_{n-1}|`
/// with `a_j = c(ζ^j)`, `b_j = c(φζ^j)`, normalized so that `|a_0..a_{n-1}| = 1`.
pub fn ts_functions<T: Ring>(
    phi: &PhiClass<T>,
    params: &SpectralParams,
    map: CoordMap,
) -> TSValues<T> {
    let n = params.n();
    assert_eq!(phi.n(), n, "φ and γ have different sizes");
    let mut b = Vec::with_capacity(n);
    let mut cur = phi.coeffs.clone();
    for _ in 0..n {
        b.push(map.apply(&cur));
        cur = mul_zeta(&cur, params);
    }
    let a: Vec<Vec<T>> = (0..n)
        .map(|j| {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            map.apply(&e)
        })
        .collect();
    let det_cols = |cols: Vec<&Vec<T>>| -> T {
        RingMatrix::from_fn(n, n, |r, c| cols[c][r].clone())
            .det()
            .expect("square")
    };
    // |a_0..a_{n-1}| is ±1 for both maps
    let norm = det_cols(a.iter().collect());
    let normalize = |v: T| -> T { v.div_exact(&norm).expect("basis determinant is a unit") };
    let mut t = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    for i in 1..=n {
        let mut cols: Vec<&Vec<T>> = b[..i].iter().collect();
        cols.extend(a[i - 1..n - 1].iter());
        t.push(normalize(det_cols(cols)));
        let mut cols: Vec<&Vec<T>> = b[..i].iter().collect();
        cols.extend(a[i..n].iter());
        s.push(normalize(det_cols(cols)));
    }
    TSValues { t, s }
}

/// Companion matrix `C_γ = J + Σ (-1)^{i-1} γ_i E_{n, n-i+1}`.
pub fn companion(params: &SpectralParams) -> RingMatrix<Rational> {
    let n = params.n();
    let mut c = RingMatrix::from_fn(n, n, |i, j| {
        if j == i + 1 {
            Rational::from_integer(1.into())
        } else {
            Rational::from_integer(0.into())
        }
    });
    for i in 1..=n {
        let g = params.gamma(i).clone();
        let v = if i % 2 == 1 { g } else { -g };
        let col = n - i;
        let cur = c.get(n - 1, col).clone();
        c.set(n - 1, col, cur + v);
    }
    c
}

/// `φ(X) = Σ φ_k X^k`.
pub fn phi_of_matrix(phi: &PhiClass<Rational>, x: &RingMatrix<Rational>) -> RingMatrix<Rational> {
    let n = x.rows();
    let mut acc = RingMatrix::zeros(n, n);
    let mut power = RingMatrix::identity(n);
    for (k, c) in phi.zeta_coeffs().iter().enumerate() {
        if k > 0 {
            power = power.mul(x);
        }
        if !c.is_zero() {
            acc = acc.add(&power.scale(c));
        }
    }
    acc
}
