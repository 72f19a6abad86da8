use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;

use crate::algebra::poly::{Monomial, Poly};
use crate::algebra::polyzq::{PolyZQ, Var};
use crate::algebra::rational::Rational;
use crate::algebra::symfunc::SymFunc;
use crate::error::{Error, Result};
use crate::par;
use crate::toda::f_family;

use super::frac::{Denominator, FactoredFrac, SymFrac};
use super::tau_sigma::{tau_sigma, TauSigmaTable};

/// `Φ_n`: `z_i ↦ τ_iσ_{i-1}/(σ_iτ_{i-1})`, `Q_i ↦ τ_{i-1}τ_{i+1}/τ_i²`, `x_i = 1 - z_i`.
#[derive(Debug)]
pub struct PhiMap {
    n: usize,
    table: TauSigmaTable,
    f_images: OnceLock<Vec<Vec<FactoredFrac>>>,
}

impl PhiMap {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "n must be at least 2");
        PhiMap {
            n,
            table: tau_sigma(n),
            f_images: OnceLock::new(),
        }
    }

    /// Process-wide instance for `n`.
    pub fn shared(n: usize) -> Arc<PhiMap> {
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PhiMap>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("cache poisoned");
        guard
            .entry(n)
            .or_insert_with(|| Arc::new(PhiMap::new(n)))
            .clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn table(&self) -> &TauSigmaTable {
        &self.table
    }

    fn symbols(&self) -> usize {
        2 * (self.n - 1)
    }

    /// Exponents of the image of `v` over the symbols `τ_1..τ_{n-1}, σ_1..σ_{n-1}`.
    fn exponents(&self, v: Var) -> Result<Vec<i64>> {
        let n = self.n;
        let mut e = vec![0i64; self.symbols()];
        let mut bump = |tau: bool, i: usize, by: i64| {
            if (1..n).contains(&i) {
                let k = if tau { i - 1 } else { n - 1 + i - 1 };
                e[k] += by;
            }
        };
        match v {
            Var::Z(i) if (1..=n).contains(&i) => {
                bump(true, i, 1);
                bump(false, i - 1, 1);
                bump(false, i, -1);
                bump(true, i - 1, -1);
            }
            Var::Q(i) if (1..n).contains(&i) => {
                bump(true, i - 1, 1);
                bump(true, i + 1, 1);
                bump(true, i, -2);
            }
            _ => return Err(Error::UnsupportedVariable(v.name())),
        }
        Ok(e)
    }

    fn check_vars(&self, p: &PolyZQ) -> Result<()> {
        for v in p.variables() {
            let ok = match v {
                Var::Z(i) | Var::X(i) => (1..=self.n).contains(&i),
                Var::Q(i) => (1..self.n).contains(&i),
                Var::Zeta => false,
            };
            if !ok {
                return Err(Error::UnsupportedVariable(v.name()));
            }
        }
        Ok(())
    }

    /// Image by direct substitution over a common factored denominator.
    pub fn apply_factored(&self, p: &PolyZQ) -> Result<FactoredFrac> {
        self.check_vars(p)?;
        let pz = p.x_to_z();
        let k = self.symbols();
        let mut laurent: Vec<(Vec<i64>, Rational)> = Vec::new();
        for (m, c) in pz.poly().terms() {
            let mut e = vec![0i64; k];
            for (slot, exp) in m.support() {
                let ve = self.exponents(Var::from_slot(slot))?;
                for (a, b) in e.iter_mut().zip(ve) {
                    *a += b * exp as i64;
                }
            }
            laurent.push((e, c.clone()));
        }
        let mut den = vec![0i64; k];
        for (e, _) in &laurent {
            for (d, x) in den.iter_mut().zip(e) {
                *d = (*d).max(-x);
            }
        }
        let mut sym = Poly::zero();
        for (e, c) in laurent {
            let exps: Vec<u16> = e.iter().zip(&den).map(|(x, d)| (x + d) as u16).collect();
            sym.add_term(Monomial::from_exponents(&exps), c);
        }
        let values: Vec<SymFunc> = (1..self.n)
            .map(|i| self.table.tau(i).clone())
            .chain((1..self.n).map(|i| self.table.sigma(i).clone()))
            .collect();
        let num = sym.eval(&values);
        let n1 = self.n - 1;
        let mut f = FactoredFrac {
            num,
            den: Denominator {
                tau: den[..n1].iter().map(|&d| d as u32).collect(),
                sigma: den[n1..].iter().map(|&d| d as u32).collect(),
            },
        };
        f.reduce(&self.table);
        Ok(f)
    }

    pub fn apply(&self, p: &PolyZQ) -> Result<SymFrac> {
        Ok(self.apply_factored(p)?.to_symfrac(&self.table))
    }

    /// Evaluates `Φ_n(p)` at `h_k = h[k-1]` for `1 ≤ k ≤ n-1`.
    pub fn apply_at(&self, p: &PolyZQ, h: &[Rational]) -> Result<Rational> {
        self.check_vars(p)?;
        let n = self.n;
        if h.len() < n - 1 {
            return Err(Error::Dimension(format!(
                "need {} values of h_k, got {}",
                n - 1,
                h.len()
            )));
        }
        let tau: Vec<Rational> = self.table.tau.iter().map(|f| f.poly().eval(h)).collect();
        let sigma: Vec<Rational> = self.table.sigma.iter().map(|f| f.poly().eval(h)).collect();
        if tau.iter().chain(&sigma).any(|v| v.is_zero()) {
            return Err(Error::Singular);
        }
        let z = |i: usize| &tau[i] * &sigma[i - 1] / (&sigma[i] * &tau[i - 1]);
        let q = |i: usize| &tau[i - 1] * &tau[i + 1] / (&tau[i] * &tau[i]);
        Ok(p.eval(|v| match v {
            Var::Z(i) => z(i),
            Var::X(i) => Rational::from_integer(1.into()) - z(i),
            Var::Q(i) => q(i),
            Var::Zeta => Rational::zero(),
        }))
    }

    /// `Φ_n(F^{(m)}_i)` for `1 ≤ m ≤ n`, `0 ≤ i ≤ m`, with cancelled denominators.
    pub fn f_image(&self, m: usize, i: usize) -> &FactoredFrac {
        &self.f_images()[m][i]
    }

    fn f_images(&self) -> &Vec<Vec<FactoredFrac>> {
        self.f_images.get_or_init(|| {
            let n = self.n;
            let idx: Vec<(usize, usize)> = (1..=n)
                .flat_map(|m| (0..=m).map(move |i| (m, i)))
                .collect();
            let images = par::map(&idx, |&(m, i)| {
                let f = f_family(n, m, i, PolyZQ::z);
                self.apply_factored(&f).expect("F uses z and Q only")
            });
            let mut out = vec![Vec::new(); n + 1];
            for ((m, _), img) in idx.into_iter().zip(images) {
                out[m].push(img);
            }
            out
        })
    }

    /// `Σ_I c_I ∏_j Φ_n(F^{(j)}_{i_j})` for f-monomials `I = (i_1, …, i_{n-1})`.
    pub fn apply_f_expansion(&self, terms: &[(Vec<usize>, Rational)]) -> FactoredFrac {
        let mut by_den: HashMap<Denominator, SymFunc> = HashMap::new();
        for (idx, c) in terms {
            let mut acc = FactoredFrac::from_symfunc(self.n, SymFunc::constant(c.clone()));
            for (j, &i) in idx.iter().enumerate() {
                if i > 0 {
                    acc = acc.mul(self.f_image(j + 1, i));
                }
            }
            let slot = by_den.entry(acc.den).or_insert_with(SymFunc::zero);
            *slot = slot.add(&acc.num);
        }
        let mut groups: Vec<(Denominator, SymFunc)> = by_den.into_iter().collect();
        groups.sort_by(|a, b| (&a.0.tau, &a.0.sigma).cmp(&(&b.0.tau, &b.0.sigma)));
        let mut total = FactoredFrac::from_symfunc(self.n, SymFunc::zero());
        for (den, num) in groups {
            total = total.add(&FactoredFrac { num, den }, &self.table);
        }
        total.reduce(&self.table);
        total
    }
}

/// Generator images `z_1..z_n`, `Q_1..Q_{n-1}`.
pub fn phi_table(n: usize) -> Vec<(Var, SymFrac)> {
    let map = PhiMap::shared(n);
    (1..=n)
        .map(Var::Z)
        .chain((1..n).map(Var::Q))
        .map(|v| (v, map.apply(&PolyZQ::var(v)).expect("generator")))
        .collect()
}

pub fn phi_apply(p: &PolyZQ, n: usize) -> Result<SymFrac> {
    PhiMap::shared(n).apply(p)
}

pub fn phi_apply_at(p: &PolyZQ, n: usize, h: &[Rational]) -> Result<Rational> {
    PhiMap::shared(n).apply_at(p, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{binomial, int, rat};
    use crate::toda::f_invariant;

    fn frac(num: &str, den: &str) -> SymFrac {
        SymFrac::new(SymFunc::parse(num).unwrap(), SymFunc::parse(den).unwrap())
    }

    #[test]
    fn n2_generators() {
        let t = phi_table(2);
        assert_eq!(t[0].1, frac("h1", "1 + h1"));
        assert_eq!(t[2].1, frac("1", "h1^2"));
        let x1 = phi_apply(&PolyZQ::x(1), 2).unwrap();
        assert_eq!(x1, frac("1", "1 + h1"));
        let g = PolyZQ::parse("1 - (1-x1)(1-Q1)").unwrap();
        let img = phi_apply(&g, 2).unwrap();
        assert_eq!(img, frac("1", "h1"));
        assert_eq!(img.num, SymFunc::one());
    }

    #[test]
    fn product_of_z_is_one() {
        for n in 2..=4 {
            let p = (1..=n).fold(PolyZQ::one(), |acc, i| acc.mul(&PolyZQ::z(i)));
            assert_eq!(phi_apply(&p, n).unwrap(), SymFrac::constant(int(1)));
        }
    }

    #[test]
    fn invariants_map_to_binomials() {
        for n in 2..=4 {
            for i in 1..=n {
                let img = phi_apply(&f_invariant(n, i), n).unwrap();
                assert_eq!(img, SymFrac::constant(binomial(n as i64, i as i64)));
            }
        }
    }

    #[test]
    fn f_images_have_single_tau_denominator() {
        for n in 2..=4 {
            let map = PhiMap::shared(n);
            for m in 1..n {
                for i in 1..=m {
                    let img = map.f_image(m, i);
                    assert_eq!(img.den, Denominator::tau_power(n, m, 1), "n={n} m={m} i={i}");
                }
            }
        }
    }

    #[test]
    fn point_evaluation_matches() {
        let n = 3;
        let p = PolyZQ::parse("x1^2 Q2 - 3 x2 Q1 + z3 - 1/2").unwrap();
        let img = phi_apply(&p, n).unwrap();
        let h = [rat(2, 3), int(-5)];
        let num = img.num.poly().eval(&h);
        let den = img.den.poly().eval(&h);
        assert_eq!(phi_apply_at(&p, n, &h).unwrap(), num / den);
    }

    #[test]
    fn homomorphism() {
        let n = 3;
        let p = PolyZQ::parse("x1 + Q1 x2").unwrap();
        let q = PolyZQ::parse("z2 - Q2^2 + 2").unwrap();
        let pp = phi_apply(&p, n).unwrap();
        let qq = phi_apply(&q, n).unwrap();
        assert_eq!(phi_apply(&p.mul(&q), n).unwrap(), pp.mul(&qq));
        assert_eq!(phi_apply(&p.add(&q), n).unwrap(), pp.add(&qq));
    }

    #[test]
    fn rejects_foreign_variables() {
        assert!(phi_apply(&PolyZQ::q(3), 3).is_err());
        assert!(phi_apply(&PolyZQ::zeta(), 3).is_err());
    }
}
