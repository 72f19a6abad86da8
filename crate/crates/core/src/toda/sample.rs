use rand::Rng;

use crate::algebra::rational::{int, rat, Rational};

use super::lax::{lax_matrix, trailing_minors};
use super::maps::{alpha, beta};
use super::phi::{ts_functions, CoordMap, PhiClass};
use super::point::{SpectralParams, TodaPoint};

/// `±p/q` with `1 ≤ p ≤ 5`, `1 ≤ q ≤ 4`.
pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    let p = rng.gen_range(1..=5i64);
    let q = rng.gen_range(1..=4i64);
    if rng.gen_bool(0.5) {
        rat(p, q)
    } else {
        rat(-p, q)
    }
}

/// A point of `Z°` with `β(α(p))` defined: `z_1..z_{n-1}`, `Q` random,
/// `z_n = (z_1 ⋯ z_{n-1})⁻¹`. Resamples when (Z3) or `T_i, S_i ≠ 0` fail.
pub fn random_general_point<R: Rng>(n: usize, rng: &mut R) -> TodaPoint {
    loop {
        let mut z: Vec<Rational> = (1..n).map(|_| random_nonzero_rational(rng)).collect();
        let prod: Rational = z.iter().product();
        z.push(int(1) / prod);
        let q = (1..n).map(|_| random_nonzero_rational(rng)).collect();
        let pt = TodaPoint::new(z, q).expect("product is 1");
        if trailing_minors(&lax_matrix(&pt)).iter().any(|m| *m == int(0)) {
            continue;
        }
        let (params, phi) = alpha(&pt);
        let ts = ts_functions(&phi, &params, CoordMap::Remainder);
        if ts.t.iter().chain(ts.s.iter()).any(|v| *v == int(0)) {
            continue;
        }
        if beta(&params, &phi).is_ok() {
            return pt;
        }
    }
}

/// A normalized class for `γ` unipotent, `φ = Σ c_i (1-ζ)^i` with
/// `c_{n-1} = (-1)^{n-1}`, resampled until it lies in `Y°`.
pub fn random_unipotent_phi<R: Rng>(n: usize, rng: &mut R) -> PhiClass<Rational> {
    let params = SpectralParams::unipotent(n);
    loop {
        let mut c: Vec<Rational> = (0..n - 1).map(|_| random_nonzero_rational(rng)).collect();
        c.push(if n % 2 == 1 { int(1) } else { int(-1) });
        let phi = PhiClass::from_unipotent_coords(&c);
        debug_assert!(phi.is_normalized());
        if beta(&params, &phi).is_ok() {
            return phi;
        }
    }
}
