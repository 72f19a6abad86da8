use num_traits::{One, Zero};

use crate::algebra::matrix::RingMatrix;
use crate::algebra::poly::Poly;
use crate::algebra::polyzq::{PolyZQ, Var};
use crate::algebra::rational::Rational;
use crate::algebra::ring;
use crate::error::{Error, Result};

use super::point::TodaPoint;

/// `A = Σ z_i E_{ii} - J` with `J = Σ E_{i,i+1}`.
pub fn a_matrix(pt: &TodaPoint) -> RingMatrix<Rational> {
    let n = pt.n();
    RingMatrix::from_fn(n, n, |i, j| {
        if i == j {
            pt.z[i].clone()
        } else if j == i + 1 {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `B = 1 - Σ Q_i z_i E_{i+1,i}`.
pub fn b_matrix(pt: &TodaPoint) -> RingMatrix<Rational> {
    let n = pt.n();
    RingMatrix::from_fn(n, n, |i, j| {
        if i == j {
            Rational::one()
        } else if i == j + 1 {
            -(&pt.q[j] * &pt.z[j])
        } else {
            Rational::zero()
        }
    })
}

/// The Lax matrix `L = AB⁻¹`.
pub fn lax_matrix(pt: &TodaPoint) -> RingMatrix<Rational> {
    let b_inv = b_matrix(pt).inverse().expect("B is unipotent");
    a_matrix(pt).mul(&b_inv)
}

fn symbolic_a(n: usize) -> RingMatrix<PolyZQ> {
    RingMatrix::from_fn(n, n, |i, j| {
        if i == j {
            PolyZQ::z(i + 1)
        } else if j == i + 1 {
            PolyZQ::constant(-Rational::one())
        } else {
            PolyZQ::zero()
        }
    })
}

fn symbolic_b(n: usize) -> RingMatrix<PolyZQ> {
    RingMatrix::from_fn(n, n, |i, j| {
        if i == j {
            PolyZQ::one()
        } else if i == j + 1 {
            PolyZQ::q(j + 1).mul(&PolyZQ::z(j + 1)).neg()
        } else {
            PolyZQ::zero()
        }
    })
}

/// `L = AB⁻¹` with polynomial entries in `z`, `Q`.
pub fn lax_matrix_symbolic(n: usize) -> RingMatrix<PolyZQ> {
    // B = 1 - N with N nilpotent
    let nil = RingMatrix::<PolyZQ>::identity(n).sub(&symbolic_b(n));
    let mut b_inv = RingMatrix::identity(n);
    let mut power = RingMatrix::identity(n);
    for _ in 1..n {
        power = power.mul(&nil);
        b_inv = b_inv.add(&power);
    }
    symbolic_a(n).mul(&b_inv)
}

/// `ζB - A` over polynomials in `ζ`, `z`, `Q`.
pub fn zeta_b_minus_a(n: usize) -> RingMatrix<PolyZQ> {
    symbolic_b(n).scale(&PolyZQ::zeta()).sub(&symbolic_a(n))
}

/// `Δ_{1,1}`: the minor of `ζB - A` with row 1 and column 1 removed.
pub fn char_minor_symbolic(n: usize) -> PolyZQ {
    let m = zeta_b_minus_a(n);
    let rest: Vec<usize> = (1..n).collect();
    m.minor(&rest, &rest).expect("square")
}

/// `Δ_{1,1}(ζ)` at a point, as coefficients lowest degree first (monic, degree `n-1`).
pub fn char_minor_phi(pt: &TodaPoint) -> Vec<Rational> {
    let n = pt.n();
    let a = a_matrix(pt);
    let b = b_matrix(pt);
    let zeta = Poly::var(0);
    let m = RingMatrix::from_fn(n - 1, n - 1, |i, j| {
        zeta.scale(b.get(i + 1, j + 1))
            .sub(&Poly::constant(a.get(i + 1, j + 1).clone()))
    });
    let det = m.det().expect("square");
    let mut coeffs: Vec<Rational> = det
        .coefficients_in(0)
        .into_iter()
        .map(|p| p.constant_term())
        .collect();
    coeffs.resize(n, Rational::zero());
    coeffs
}

/// Recovers `(z, Q)` from a Lax matrix through `M = L⁻¹`:
/// `Q_i = -M_{i+1,i}` and `z_i = M_{1,i-1} / M_{1,i}` with `M_{1,0} = 1`.
pub fn point_from_lax(l: &RingMatrix<Rational>) -> Result<TodaPoint> {
    let n = l.rows();
    // (Z1): L + J lower triangular
    for i in 0..n {
        for j in i + 1..n {
            let expected = if j == i + 1 {
                -Rational::one()
            } else {
                Rational::zero()
            };
            if *l.get(i, j) != expected {
                return Err(Error::NotOnZ(format!("L + J has entry at ({}, {})", i + 1, j + 1)));
            }
        }
    }
    let m = l.inverse().map_err(|_| Error::NotOnZ("L is singular".into()))?;
    // (Z2): L⁻¹ vanishes below the first subdiagonal
    for i in 0..n {
        for j in 0..i.saturating_sub(1) {
            if !m.get(i, j).is_zero() {
                return Err(Error::NotOnZ(format!(
                    "L⁻¹ has a non-zero entry at ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
    }
    let q: Vec<Rational> = (0..n - 1).map(|i| -m.get(i + 1, i).clone()).collect();
    let mut z = Vec::with_capacity(n);
    let mut prev = Rational::one();
    for i in 0..n {
        let cur = m.get(0, i).clone();
        if cur.is_zero() {
            return Err(Error::NotOnZ(format!("M_{{1,{}}} vanishes", i + 1)));
        }
        z.push(&prev / &cur);
        prev = cur;
    }
    TodaPoint::new(z, q)
}

/// Trailing principal minors `ξ_{i+1..n}(L)` for `i = 1..n-1` (condition Z3).
pub fn trailing_minors<T: ring::Ring>(l: &RingMatrix<T>) -> Vec<T> {
    let n = l.rows();
    (1..n)
        .map(|i| {
            let idx: Vec<usize> = (i..n).collect();
            l.minor(&idx, &idx).expect("square")
        })
        .collect()
}

/// Evaluates a polynomial matrix at a point.
pub fn eval_matrix(m: &RingMatrix<PolyZQ>, pt: &TodaPoint) -> RingMatrix<Rational> {
    m.map(|p| {
        p.eval(|v| match v {
            Var::Z(i) => pt.z(i).clone(),
            Var::Q(i) => pt.q(i),
            _ => Rational::zero(),
        })
    })
}
