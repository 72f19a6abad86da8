use std::fmt;

use serde::Serialize;

use crate::algebra::rational::Rational;
use crate::algebra::symfunc::SymFunc;

use super::tau_sigma::TauSigmaTable;

/// Fraction of symmetric functions. Equality is tested by cross-multiplication.
#[derive(Clone, Debug, Serialize)]
pub struct SymFrac {
    pub num: SymFunc,
    pub den: SymFunc,
}

impl SymFrac {
    pub fn new(num: SymFunc, den: SymFunc) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        SymFrac { num, den }
    }

    pub fn from_symfunc(f: SymFunc) -> Self {
        SymFrac {
            num: f,
            den: SymFunc::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        SymFrac::from_symfunc(SymFunc::constant(c))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return SymFrac::new(self.num.add(&o.num), self.den.clone());
        }
        SymFrac::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        SymFrac::new(self.num.neg(), self.den.clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        SymFrac::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn mul_symfunc(&self, f: &SymFunc) -> Self {
        SymFrac::new(self.num.mul(f), self.den.clone())
    }

    /// The polynomial `num / den` when the division is exact.
    pub fn as_symfunc(&self) -> Option<SymFunc> {
        self.num.div_exact(&self.den)
    }
}

impl PartialEq for SymFrac {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for SymFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == SymFunc::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Exponents of `∏ τ_i^{t_i} σ_i^{s_i}` over `1 ≤ i ≤ n-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Denominator {
    pub tau: Vec<u32>,
    pub sigma: Vec<u32>,
}

impl Denominator {
    pub fn one(n: usize) -> Self {
        Denominator {
            tau: vec![0; n.saturating_sub(1)],
            sigma: vec![0; n.saturating_sub(1)],
        }
    }

    pub fn tau_power(n: usize, i: usize, e: u32) -> Self {
        let mut d = Denominator::one(n);
        if (1..n).contains(&i) {
            d.tau[i - 1] = e;
        }
        d
    }

    pub fn is_one(&self) -> bool {
        self.tau.iter().chain(&self.sigma).all(|&e| e == 0)
    }

    pub fn product(&self, o: &Self) -> Self {
        Denominator {
            tau: self.tau.iter().zip(&o.tau).map(|(a, b)| a + b).collect(),
            sigma: self.sigma.iter().zip(&o.sigma).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn lcm(&self, o: &Self) -> Self {
        Denominator {
            tau: self.tau.iter().zip(&o.tau).map(|(a, b)| *a.max(b)).collect(),
            sigma: self.sigma.iter().zip(&o.sigma).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / o` as a monomial; `o` must divide `self`.
    pub fn quotient(&self, o: &Self) -> Self {
        Denominator {
            tau: self.tau.iter().zip(&o.tau).map(|(a, b)| a - b).collect(),
            sigma: self.sigma.iter().zip(&o.sigma).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn expand(&self, table: &TauSigmaTable) -> SymFunc {
        let mut acc = SymFunc::one();
        for (i, &e) in self.tau.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&table.tau(i + 1).pow(e));
            }
        }
        for (i, &e) in self.sigma.iter().enumerate() {
            if e > 0 {
                acc = acc.mul(&table.sigma(i + 1).pow(e));
            }
        }
        acc
    }
}

impl fmt::Display for Denominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, exps) in [("tau", &self.tau), ("sigma", &self.sigma)] {
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(format!("{name}{}", i + 1)),
                    _ => parts.push(format!("{name}{}^{e}", i + 1)),
                }
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// `num / ∏ τ_i^{t_i} σ_i^{s_i}` with the denominator kept factored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactoredFrac {
    pub num: SymFunc,
    pub den: Denominator,
}

impl FactoredFrac {
    pub fn from_symfunc(n: usize, f: SymFunc) -> Self {
        FactoredFrac {
            num: f,
            den: Denominator::one(n),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn mul(&self, o: &Self) -> Self {
        FactoredFrac {
            num: self.num.mul(&o.num),
            den: self.den.product(&o.den),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        FactoredFrac {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Sum over the least common denominator.
    pub fn add(&self, o: &Self, table: &TauSigmaTable) -> Self {
        if self.den == o.den {
            return FactoredFrac {
                num: self.num.add(&o.num),
                den: self.den.clone(),
            };
        }
        let l = self.den.lcm(&o.den);
        let a = self.num.mul(&l.quotient(&self.den).expand(table));
        let b = o.num.mul(&l.quotient(&o.den).expand(table));
        FactoredFrac {
            num: a.add(&b),
            den: l,
        }
    }

    /// Cancels factors `τ_i`, `σ_i` of the denominator that divide the numerator.
    pub fn reduce(&mut self, table: &TauSigmaTable) {
        if self.num.is_zero() {
            self.den = Denominator::one(table.n);
            return;
        }
        for i in 0..self.den.tau.len() {
            while self.den.tau[i] > 0 {
                match self.num.div_exact(table.tau(i + 1)) {
                    Some(q) => {
                        self.num = q;
                        self.den.tau[i] -= 1;
                    }
                    None => break,
                }
            }
        }
        for i in 0..self.den.sigma.len() {
            while self.den.sigma[i] > 0 {
                match self.num.div_exact(table.sigma(i + 1)) {
                    Some(q) => {
                        self.num = q;
                        self.den.sigma[i] -= 1;
                    }
                    None => break,
                }
            }
        }
    }

    pub fn to_symfrac(&self, table: &TauSigmaTable) -> SymFrac {
        SymFrac::new(self.num.clone(), self.den.expand(table))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;
    use crate::peterson::tau_sigma;

    #[test]
    fn cross_multiplication() {
        let h1 = SymFunc::h(1);
        let a = SymFrac::new(h1.clone(), h1.add(&SymFunc::one()));
        let b = SymFrac::new(h1.mul(&h1), h1.mul(&h1).add(&h1));
        assert_eq!(a, b);
        let c = SymFrac::new(SymFunc::h(2), h1.clone());
        assert_eq!(a.add(&c).sub(&c), a);
        assert_ne!(a, SymFrac::constant(int(1)));
    }

    #[test]
    fn factored_reduce() {
        let t = tau_sigma(3);
        let mut f = FactoredFrac {
            num: t.tau(1).mul(t.sigma(2)),
            den: Denominator {
                tau: vec![2, 0],
                sigma: vec![0, 1],
            },
        };
        f.reduce(&t);
        assert_eq!(f.num, SymFunc::one());
        assert_eq!(f.den.to_string(), "tau1");
    }
}
