use num_traits::{One, Zero};

use crate::algebra::matrix::RingMatrix;
use crate::algebra::poly::Poly;
use crate::algebra::polyzq::Var;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};

use super::decompose::{ru_decompose, ru_minor};
use super::invariants::f_family;
use super::lax::{a_matrix, b_matrix, char_minor_phi, lax_matrix, point_from_lax, trailing_minors};
use super::phi::{companion, phi_of_matrix, ts_functions, CoordMap, PhiClass, TSValues};
use super::point::{SpectralParams, TodaPoint};

/// Spectral parameters `γ_i = F_i(z, Q)` read off `det(ζB - A)`.
pub fn spectral_params(pt: &TodaPoint) -> SpectralParams {
    let n = pt.n();
    let a = a_matrix(pt);
    let b = b_matrix(pt);
    let zeta = Poly::var(0);
    let m = RingMatrix::from_fn(n, n, |i, j| {
        zeta.scale(b.get(i, j))
            .sub(&Poly::constant(a.get(i, j).clone()))
    });
    let det = m.det().expect("square");
    let coeffs = det.coefficients_in(0);
    let gamma = (1..=n)
        .map(|i| {
            let c = coeffs
                .get(n - i)
                .map(|p| p.constant_term())
                .unwrap_or_else(Rational::zero);
            if i % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect();
    SpectralParams::new(gamma).expect("F_n = z_1 ⋯ z_n = 1")
}

/// `α(z, Q) = (γ, [Δ_{1,1}])`; the class is normalized.
pub fn alpha(pt: &TodaPoint) -> (SpectralParams, PhiClass<Rational>) {
    let params = spectral_params(pt);
    let phi = PhiClass::from_zeta_coeffs(char_minor_phi(pt), &params);
    (params, phi)
}

/// Output of `β`: the point together with `L = RC_γR⁻¹` and `φ(C_γ) = U⁻¹R`.
#[derive(Clone, Debug)]
pub struct BetaResult {
    pub point: TodaPoint,
    pub l: RingMatrix<Rational>,
    pub r: RingMatrix<Rational>,
    pub u: RingMatrix<Rational>,
}

/// `β([φ]) = RC_γR⁻¹` where `φ(C_γ) = U⁻¹R`. `φ` must be normalized and satisfy
/// `T_i(φ) ≠ 0`, `S_i(φ) ≠ 0`.
pub fn beta(params: &SpectralParams, phi: &PhiClass<Rational>) -> Result<BetaResult> {
    let n = params.n();
    if phi.n() != n {
        return Err(Error::Dimension(format!(
            "class has {} coefficients, expected {n}",
            phi.n()
        )));
    }
    if !phi.is_normalized() {
        return Err(Error::YCondition {
            condition: "normalized",
            detail: "the ζ^{n-1} coefficient must be 1".into(),
        });
    }
    let ts = ts_functions(phi, params, CoordMap::Remainder);
    for i in 1..=n {
        if ts.t(i).is_zero() {
            return Err(Error::YCondition {
                condition: "T_i ≠ 0",
                detail: format!("T_{i} vanishes"),
            });
        }
        if ts.s(i).is_zero() {
            return Err(Error::YCondition {
                condition: "S_i ≠ 0",
                detail: format!("S_{i} vanishes"),
            });
        }
    }
    let c = companion(params);
    let x = phi_of_matrix(phi, &c);
    let (r, u) = ru_decompose(&x)?;
    let r_inv = r.inverse()?;
    let l = r.mul(&c).mul(&r_inv);
    let point = point_from_lax(&l)?;
    Ok(BetaResult { point, l, r, u })
}

/// `T_i = (-1)^{n-i} ξ^{1..i-1,n}_{1..i}(φ(C_γ))` and `S_i = ξ^{1..i}_{1..i}(φ(C_γ))`.
pub fn minor_formulas(params: &SpectralParams, phi: &PhiClass<Rational>) -> TSValues<Rational> {
    let n = params.n();
    let x = phi_of_matrix(phi, &companion(params));
    let mut t = Vec::with_capacity(n);
    let mut s = Vec::with_capacity(n);
    for i in 1..=n {
        let m = ru_minor(&x, i);
        t.push(if (n - i) % 2 == 1 { -m } else { m });
        let idx: Vec<usize> = (0..i).collect();
        s.push(x.minor(&idx, &idx).expect("square"));
    }
    TSValues { t, s }
}

/// Named identities checked at one point.
#[derive(Clone, Debug, Default)]
pub struct PointChecks {
    pub entries: Vec<(&'static str, bool)>,
}

impl PointChecks {
    fn push(&mut self, name: &'static str, ok: bool) {
        self.entries.push((name, ok));
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.entries
            .iter()
            .filter(|(_, ok)| !ok)
            .map(|(name, _)| *name)
            .collect()
    }
}

fn sign(k: usize) -> Rational {
    if k.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Runs `α`, then `β`, and checks the identities relating `(z, Q)`, `R`, `U`,
/// `L` and the determinant functions `T_i`, `S_i`.
pub fn check_point(pt: &TodaPoint) -> Result<PointChecks> {
    let n = pt.n();
    let (params, phi) = alpha(pt);
    let res = beta(&params, &phi)?;
    let mut out = PointChecks::default();
    out.push("beta(alpha(p)) = p", res.point == *pt);

    let l = lax_matrix(pt);
    let c = companion(&params);
    out.push("L R = R C", l.mul(&res.r) == res.r.mul(&c));
    out.push("L U = U C", l.mul(&res.u) == res.u.mul(&c));

    let q_prod = |k: usize| -> Rational { (1..=k).map(|j| pt.q(j)).product() };
    let mut det_r = sign(n * (n - 1) / 2);
    for i in 1..n {
        for _ in 0..n - i {
            det_r *= pt.q(i);
        }
    }
    // R is fixed by r_{1n} = 1
    out.push("det R", res.r.det_field().ok() == Some(det_r));
    out.push(
        "subdiagonal of R",
        (1..n).all(|i| *res.r.get(i, i - 1) == sign(n + i - 1) * q_prod(i)),
    );

    let x = phi_of_matrix(&phi, &c);
    out.push(
        "r-ratio",
        (1..n).all(|i| {
            let v = sign(i + 1) * ru_minor(&x, i + 1) / ru_minor(&x, i);
            *res.r.get(i, i - 1) == v
        }),
    );

    let ts = ts_functions(&phi, &params, CoordMap::Remainder);
    out.push("T, S as minors of phi(C)", minor_formulas(&params, &phi) == ts);
    if params.is_unipotent() {
        out.push(
            "T, S coordinate independence",
            ts_functions(&phi, &params, CoordMap::Unipotent) == ts,
        );
    }

    let trailing = trailing_minors(&l);
    out.push(
        "trailing minors of L",
        (1..n).all(|i| trailing[i - 1] == ts.s(i) / ts.t(i)),
    );

    let y = |j: usize| crate::algebra::polyzq::PolyZQ::z(j);
    let eval = |v: Var| match v {
        Var::Z(i) => pt.z(i).clone(),
        Var::Q(i) => pt.q(i),
        _ => Rational::zero(),
    };
    let mut u_ok = true;
    for i in 1..=n {
        for j in 1..=i {
            let f = f_family(n, i - 1, i - j, y).eval(eval);
            if *res.u.get(i - 1, j - 1) != sign(j - 1) * f {
                u_ok = false;
            }
        }
    }
    out.push("U entries", u_ok);

    let z_ok = (1..=n).all(|i| {
        *pt.z(i) == ts.t(i) * ts.s(i - 1) / (ts.s(i) * ts.t(i - 1))
    });
    let q_ok = (1..n).all(|i| {
        pt.q(i) == ts.t(i - 1) * ts.t(i + 1) / (ts.t(i).clone() * ts.t(i))
    });
    out.push("z from T, S", z_ok);
    out.push("Q from T", q_ok);
    Ok(out)
}

/// `α(β([φ])) = [φ]` together with all of [`check_point`] at `β([φ])`.
pub fn check_class(params: &SpectralParams, phi: &PhiClass<Rational>) -> Result<PointChecks> {
    let res = beta(params, phi)?;
    let (g, back) = alpha(&res.point);
    let mut out = check_point(&res.point)?;
    out.entries
        .insert(0, ("alpha(beta(phi)) = phi", g == *params && back == *phi));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use crate::toda::invariants::f_invariant;

    fn sample() -> TodaPoint {
        TodaPoint::new(
            vec![int(2), rat(-1, 3), int(3), rat(-1, 2)],
            vec![int(1), rat(2, 5), int(-3)],
        )
        .unwrap()
    }

    #[test]
    fn gamma_matches_invariants() {
        let pt = sample();
        let params = spectral_params(&pt);
        for i in 1..=4 {
            let f = f_invariant(4, i).eval(|v| match v {
                Var::Z(j) => pt.z(j).clone(),
                Var::Q(j) => pt.q(j),
                _ => Rational::zero(),
            });
            assert_eq!(*params.gamma(i), f);
        }
    }

    #[test]
    fn n2_by_hand() {
        // Δ_{1,1} = ζ - z_2, γ_1 = z_1 + z_2 - Q_1 z_1
        let pt = TodaPoint::new(vec![int(2), rat(1, 2)], vec![int(3)]).unwrap();
        let (params, phi) = alpha(&pt);
        assert_eq!(*params.gamma(1), rat(-7, 2));
        assert_eq!(phi.zeta_coeffs(), &[rat(-1, 2), int(1)]);
        let res = beta(&params, &phi).unwrap();
        assert_eq!(res.point, pt);
    }

    #[test]
    fn identities_at_a_point() {
        let checks = check_point(&sample()).unwrap();
        assert!(checks.all_pass(), "{:?}", checks.failures());
    }

    #[test]
    fn unnormalized_rejected() {
        let params = SpectralParams::unipotent(3);
        let phi = PhiClass::from_zeta_coeffs(vec![int(1), int(1), int(2)], &params);
        assert!(matches!(
            beta(&params, &phi),
            Err(Error::YCondition { .. })
        ));
    }
}
