//! Polynomials in the Toda/flag variables `z_i`, `x_i`, `Q_i` and the spectral variable `ζ`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::parse::parse_expression;
use super::poly::{Monomial, Poly};
use super::rational::{format_rational, parse_rational, Rational};
use super::ring;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Zeta,
    X(usize),
    Z(usize),
    Q(usize),
}

impl Var {
    pub fn slot(self) -> usize {
        match self {
            Var::Zeta => 0,
            Var::X(i) => 3 * i - 2,
            Var::Z(i) => 3 * i - 1,
            Var::Q(i) => 3 * i,
        }
    }

    pub fn from_slot(s: usize) -> Var {
        match (s, s % 3) {
            (0, _) => Var::Zeta,
            (_, 1) => Var::X(s.div_ceil(3)),
            (_, 2) => Var::Z(s.div_ceil(3)),
            _ => Var::Q(s / 3),
        }
    }

    pub fn name(self) -> String {
        match self {
            Var::Zeta => "zeta".to_string(),
            Var::X(i) => format!("x{i}"),
            Var::Z(i) => format!("z{i}"),
            Var::Q(i) => format!("Q{i}"),
        }
    }

    pub fn parse(name: &str) -> Option<Var> {
        if name == "zeta" || name == "ζ" {
            return Some(Var::Zeta);
        }
        let mut chars = name.chars();
        let head = chars.next()?;
        let rest = chars.as_str().trim_start_matches('_');
        let idx: usize = rest.parse().ok().filter(|&i| i >= 1)?;
        match head {
            'x' => Some(Var::X(idx)),
            'z' => Some(Var::Z(idx)),
            'Q' | 'q' => Some(Var::Q(idx)),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyZQ(Poly);

impl PolyZQ {
    pub fn zero() -> Self {
        PolyZQ(Poly::zero())
    }

    pub fn one() -> Self {
        PolyZQ(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        PolyZQ(Poly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        PolyZQ(Poly::var(v.slot()))
    }

    pub fn x(i: usize) -> Self {
        Self::var(Var::X(i))
    }

    pub fn z(i: usize) -> Self {
        Self::var(Var::Z(i))
    }

    pub fn q(i: usize) -> Self {
        Self::var(Var::Q(i))
    }

    pub fn zeta() -> Self {
        Self::var(Var::Zeta)
    }

    /// `1 - v`.
    pub fn one_minus(v: Var) -> Self {
        Self::one().sub(&Self::var(v))
    }

    pub fn from_poly(p: Poly) -> Self {
        PolyZQ(p)
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        PolyZQ(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        PolyZQ(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &Self) -> Self {
        PolyZQ(self.0.mul(&o.0))
    }

    pub fn neg(&self) -> Self {
        PolyZQ(self.0.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        PolyZQ(self.0.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        PolyZQ(self.0.pow(e))
    }

    /// Variables that occur, sorted.
    pub fn variables(&self) -> Vec<Var> {
        let mut seen = std::collections::BTreeSet::new();
        for (m, _) in self.0.terms() {
            for (s, _) in m.support() {
                seen.insert(Var::from_slot(s));
            }
        }
        seen.into_iter().collect()
    }

    /// Ring homomorphism determined by the image of each variable.
    pub fn substitute<R: ring::Ring>(&self, f: impl Fn(Var) -> R) -> R {
        self.0.substitute(|s| f(Var::from_slot(s)))
    }

    /// Substitution with other polynomials; unlisted variables are kept.
    pub fn subs(&self, f: impl Fn(Var) -> Option<PolyZQ>) -> PolyZQ {
        PolyZQ(
            self.0
                .substitute(|s| f(Var::from_slot(s)).map(|p| p.0).unwrap_or_else(|| Poly::var(s))),
        )
    }

    /// Exact evaluation at rational values.
    pub fn eval(&self, f: impl Fn(Var) -> Rational) -> Rational {
        self.substitute(f)
    }

    /// Sets every `Q_i` to zero.
    pub fn at_q_zero(&self) -> PolyZQ {
        PolyZQ(self.0.filter_terms(|m| {
            m.support().all(|(s, _)| !matches!(Var::from_slot(s), Var::Q(_)))
        }))
    }

    /// Replaces every `x_i` by `1 - z_i`.
    pub fn x_to_z(&self) -> PolyZQ {
        self.subs(|v| match v {
            Var::X(i) => Some(Self::one_minus(Var::Z(i))),
            _ => None,
        })
    }

    /// Replaces every `z_i` by `1 - x_i`.
    pub fn z_to_x(&self) -> PolyZQ {
        self.subs(|v| match v {
            Var::Z(i) => Some(Self::one_minus(Var::X(i))),
            _ => None,
        })
    }

    /// Coefficients in `ζ`, lowest degree first.
    pub fn zeta_coefficients(&self) -> Vec<PolyZQ> {
        self.0
            .coefficients_in(Var::Zeta.slot())
            .into_iter()
            .map(PolyZQ)
            .collect()
    }

    pub fn terms(&self) -> Vec<(BTreeMap<String, u16>, Rational)> {
        self.ordered_terms()
            .into_iter()
            .map(|(m, c)| {
                let mono = m
                    .support()
                    .map(|(s, e)| (Var::from_slot(s).name(), e))
                    .collect();
                (mono, c.clone())
            })
            .collect()
    }

    /// Terms by descending total degree, then by variable order.
    fn ordered_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut v: Vec<(&Monomial, &Rational)> = self.0.terms().collect();
        v.sort_by(|a, b| {
            b.0.total_degree()
                .cmp(&a.0.total_degree())
                .then_with(|| display_key(a.0).cmp(&display_key(b.0)))
        });
        v
    }

    pub fn to_json_terms(&self) -> Vec<ZQTerm> {
        self.terms()
            .into_iter()
            .map(|(monomial, c)| ZQTerm {
                coeff: format_rational(&c),
                monomial,
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[ZQTerm]) -> Result<Self> {
        let mut p = PolyZQ::zero();
        for t in terms {
            let mut m = PolyZQ::constant(parse_rational(&t.coeff)?);
            for (name, &e) in &t.monomial {
                let v = Var::parse(name).ok_or_else(|| Error::UnsupportedVariable(name.clone()))?;
                m = m.mul(&PolyZQ::var(v).pow(e as u32));
            }
            p = p.add(&m);
        }
        Ok(p)
    }

    /// Parses expressions such as `"1 - (1-x1)*(1-Q1)"` or `"z1^2*Q2 + 3/2"`.
    pub fn parse(src: &str) -> Result<PolyZQ> {
        parse_expression(src, "z_i, x_i, Q_i or zeta", |name| {
            Var::parse(name).map(|v| Poly::var(v.slot()))
        })
        .map(PolyZQ)
    }
}

fn display_key(m: &Monomial) -> Vec<(Var, std::cmp::Reverse<u16>)> {
    let mut v: Vec<(Var, std::cmp::Reverse<u16>)> = m
        .support()
        .map(|(s, e)| (Var::from_slot(s), std::cmp::Reverse(e)))
        .collect();
    v.sort();
    v
}

/// One term of the JSON form `{coeff: "p/q", monomial: {"z1": 2, "Q1": 1}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZQTerm {
    pub coeff: String,
    pub monomial: BTreeMap<String, u16>,
}

impl Serialize for PolyZQ {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PolyZQ {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<ZQTerm>::deserialize(d)?;
        PolyZQ::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for PolyZQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.ordered_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.iter().enumerate() {
            let neg = *c < &Rational::zero();
            let a = if neg { -(*c).clone() } else { (*c).clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = display_key(m)
                .into_iter()
                .map(|(v, std::cmp::Reverse(e))| {
                    if e == 1 {
                        v.name()
                    } else {
                        format!("{}^{e}", v.name())
                    }
                })
                .collect();
            let mono = mono.join("*");
            if mono.is_empty() {
                write!(f, "{}", format_rational(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", format_rational(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyZQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ring::Ring for PolyZQ {
    fn zero() -> Self {
        PolyZQ::zero()
    }
    fn one() -> Self {
        PolyZQ::one()
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn from_rational(r: &Rational) -> Self {
        PolyZQ::constant(r.clone())
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.0.div_exact(&rhs.0).map(PolyZQ)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn slots_round_trip() {
        for v in [Var::Zeta, Var::X(1), Var::Z(1), Var::Q(1), Var::X(4), Var::Z(5), Var::Q(3)] {
            assert_eq!(Var::from_slot(v.slot()), v);
        }
    }

    #[test]
    fn parse_expressions() {
        let p = PolyZQ::parse("1 - (1-x1)*(1-Q1)").unwrap();
        let expected = PolyZQ::one().sub(
            &PolyZQ::one_minus(Var::X(1)).mul(&PolyZQ::one_minus(Var::Q(1))),
        );
        assert_eq!(p, expected);
        assert_eq!(
            PolyZQ::parse("z_1^2 Q2 + 3/2").unwrap(),
            PolyZQ::z(1)
                .pow(2)
                .mul(&PolyZQ::q(2))
                .add(&PolyZQ::constant(rat(3, 2)))
        );
        assert_eq!(PolyZQ::parse("-x1·x2").unwrap(), PolyZQ::x(1).mul(&PolyZQ::x(2)).neg());
        assert_eq!(PolyZQ::parse("2(x1)").unwrap(), PolyZQ::x(1).scale(&int(2)));
    }

    #[test]
    fn parse_errors_report_positions() {
        assert!(matches!(PolyZQ::parse("x1 + y2"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(PolyZQ::parse("(x1"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(PolyZQ::parse("x1 +"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(PolyZQ::parse("x0"), Err(Error::Parse { pos: 0, .. })));
    }

    #[test]
    fn json_and_display() {
        let p = PolyZQ::parse("z1*(1-Q1) + z2").unwrap();
        let s = serde_json::to_string(&p).unwrap();
        let back: PolyZQ = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.to_string(), "-z1*Q1 + z1 + z2");
    }

    #[test]
    fn variable_changes() {
        let p = PolyZQ::parse("x1*Q1 + x2").unwrap();
        assert_eq!(p.x_to_z().z_to_x(), p);
        assert_eq!(p.at_q_zero(), PolyZQ::x(2));
        assert_eq!(p.variables(), vec![Var::X(1), Var::X(2), Var::Q(1)]);
    }
}
