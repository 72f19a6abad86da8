use num_traits::{One, Zero};

use crate::algebra::matrix::RingMatrix;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

/// `X = X₊X₋` with `X₊` upper triangular and `X₋` lower unipotent.
///
/// Exists iff the trailing principal minors `ξ_{i+1..n}(X)`, `1 ≤ i ≤ n-1`,
/// are non-zero; the first vanishing one is reported.
pub fn gauss_decompose(
    x: &RingMatrix<Rational>,
) -> Result<(RingMatrix<Rational>, RingMatrix<Rational>)> {
    if !x.is_square() {
        return Err(Error::NonSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let n = x.rows();
    let rev = |i: usize| n - 1 - i;
    // Crout on the antidiagonal conjugate: W = PXP = L·U, L lower, U unit upper.
    let w = RingMatrix::from_fn(n, n, |i, j| x.get(rev(i), rev(j)).clone());
    let mut l = RingMatrix::<Rational>::zeros(n, n);
    let mut u = RingMatrix::<Rational>::identity(n);
    for k in 0..n {
        for i in k..n {
            let mut v = w.get(i, k).clone();
            for p in 0..k {
                v -= l.get(i, p) * u.get(p, k);
            }
            l.set(i, k, v);
        }
        if k + 1 == n {
            break;
        }
        let pivot = l.get(k, k).clone();
        if pivot.is_zero() {
            return Err(Error::GaussMinorVanishes { index: n - 1 - k });
        }
        for j in k + 1..n {
            let mut v = w.get(k, j).clone();
            for p in 0..k {
                v -= l.get(k, p) * u.get(p, j);
            }
            u.set(k, j, v / &pivot);
        }
    }
    let plus = RingMatrix::from_fn(n, n, |i, j| l.get(rev(i), rev(j)).clone());
    let minus = RingMatrix::from_fn(n, n, |i, j| u.get(rev(i), rev(j)).clone());
    Ok((plus, minus))
}

/// `ξ^{1..k-1,n}_{1..k}(X)`: rows `1..k`, columns `1..k-1` and `n`.
pub fn ru_minor(x: &RingMatrix<Rational>, k: usize) -> Rational {
    let n = x.rows();
    let rows: Vec<usize> = (0..k).collect();
    let mut cols: Vec<usize> = (0..k - 1).collect();
    cols.push(n - 1);
    x.minor(&rows, &cols).expect("indices in range")
}

/// `X = U⁻¹R` with `R` in `Bσ` (zero below the first subdiagonal, last column
/// supported on the first row) and `U` lower triangular with diagonal
/// `1, -1, 1, ...`. Returns `(R, U)`.
///
/// Exists iff `ξ^{1..i-1,n}_{1..i}(X) ≠ 0` for `1 ≤ i ≤ n-1`.
pub fn ru_decompose(
    x: &RingMatrix<Rational>,
) -> Result<(RingMatrix<Rational>, RingMatrix<Rational>)> {
    if !x.is_square() {
        return Err(Error::NonSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    let n = x.rows();
    for k in 1..n {
        if ru_minor(x, k).is_zero() {
            return Err(Error::RuMinorVanishes { index: k });
        }
    }
    let mut u = RingMatrix::<Rational>::zeros(n, n);
    for i in 0..n {
        let diag = if i % 2 == 0 {
            Rational::one()
        } else {
            -Rational::one()
        };
        if i > 0 {
            // Σ_{k<i} u_{ik} X_{k,j} = -u_ii X_{i,j} for j ∈ {0..i-2, n-1}
            let mut cols: Vec<usize> = (0..i - 1).collect();
            cols.push(n - 1);
            let a = RingMatrix::from_fn(i, i, |r, c| x.get(c, cols[r]).clone());
            let b: Vec<Rational> = cols.iter().map(|&j| -(&diag * x.get(i, j))).collect();
            let sol = a.solve(&b).map_err(|_| Error::RuMinorVanishes { index: i })?;
            for (k, v) in sol.into_iter().enumerate() {
                u.set(i, k, v);
            }
        }
        u.set(i, i, diag);
    }
    let r = u.mul(x);
    Ok((r, u))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn m(rows: Vec<Vec<i64>>) -> RingMatrix<Rational> {
        RingMatrix::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(int).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn gauss_factors() {
        let x = m(vec![vec![2, 1, 3], vec![4, -1, 5], vec![1, 2, 7]]);
        let (p, q) = gauss_decompose(&x).unwrap();
        assert_eq!(p.mul(&q), x);
        for i in 0..3 {
            assert_eq!(*q.get(i, i), int(1));
            for j in 0..i {
                assert_eq!(*p.get(i, j), int(0));
                assert_eq!(*q.get(j, i), int(0));
            }
        }
    }

    #[test]
    fn gauss_failure_index() {
        let x = m(vec![vec![1, 2, 3], vec![4, 5, 6], vec![1, 2, 0]]);
        assert!(matches!(
            gauss_decompose(&x),
            Err(Error::GaussMinorVanishes { index: 2 })
        ));
        let x = m(vec![vec![1, 2, 3], vec![4, 1, 2], vec![1, 2, 4]]);
        assert!(matches!(
            gauss_decompose(&x),
            Err(Error::GaussMinorVanishes { index: 1 })
        ));
    }

    #[test]
    fn ru_shape() {
        let x = m(vec![
            vec![1, 2, 0, 1],
            vec![3, -1, 2, 5],
            vec![0, 4, 1, -2],
            vec![2, 1, 1, 3],
        ]);
        let (r, u) = ru_decompose(&x).unwrap();
        assert_eq!(u.inverse().unwrap().mul(&r), x);
        for i in 0..4 {
            assert_eq!(*u.get(i, i), if i % 2 == 0 { int(1) } else { int(-1) });
            for j in i + 1..4 {
                assert_eq!(*u.get(i, j), int(0));
            }
            for j in 0..i.saturating_sub(1) {
                assert_eq!(*r.get(i, j), int(0));
            }
            if i > 0 {
                assert_eq!(*r.get(i, 3), int(0));
            }
        }
    }

    #[test]
    fn ru_failure() {
        let x = m(vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(matches!(
            ru_decompose(&x),
            Err(Error::RuMinorVanishes { index: 1 })
        ));
    }
}
