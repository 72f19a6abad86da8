//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are plain indices `0, 1, 2, ...`; naming is left to the wrappers
//! ([`SymFunc`](super::symfunc::SymFunc), [`PolyZQ`](super::polyzq::PolyZQ)).

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::rational::Rational;
use super::ring;

/// Exponent vector with trailing zeros stripped.
///
/// The derived ordering is lexicographic with variable 0 most significant,
/// which is a monomial order because vectors are kept trimmed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(SmallVec<[u16; 12]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u16) -> Self {
        let mut m = Monomial(SmallVec::from_elem(0, i + 1));
        m.0[i] = e;
        m.trim();
        m
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        let mut m = Monomial(SmallVec::from_slice(exps));
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Degree with variable `i` weighted by `weight(i)`.
    pub fn weighted_degree(&self, weight: impl Fn(usize) -> u32) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| weight(i) * e as u32)
            .sum()
    }

    /// Indices of the variables that occur, with exponents.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, &e) in out.iter_mut().zip(short.0.iter()) {
            *o += e;
        }
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut out = self.0.clone();
        for (o, &e) in out.iter_mut().zip(other.0.iter()) {
            if *o < e {
                return None;
            }
            *o -= e;
        }
        let mut m = Monomial(out);
        m.trim();
        Some(m)
    }

    /// Sets the exponent of variable `i` to zero, returning the old exponent.
    pub fn without(&self, i: usize) -> (Monomial, u16) {
        let e = self.exponent(i);
        if e == 0 {
            return (self.clone(), 0);
        }
        let mut m = self.clone();
        m.0[i] = 0;
        m.trim();
        (m, e)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn var(i: usize) -> Self {
        Self::term(Rational::one(), Monomial::var(i))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Rational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// `Some(c)` if the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .get(&Monomial::one())
                .cloned(),
            _ => None,
        }
    }

    /// Largest term in the lexicographic order.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Number of variable slots in use (one more than the largest index).
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &Rational, mono: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.mul(mono), a * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in small.terms.iter() {
            big.add_term(m.clone(), c.clone());
        }
        big
    }

    pub fn add_assign(&mut self, other: &Poly) {
        for (m, c) in other.terms.iter() {
            self.add_term(m.clone(), c.clone());
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &Rational, other: &Poly) {
        if c.is_zero() {
            return;
        }
        for (m, a) in other.terms.iter() {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len().max(other.len()) * 2);
        for (m1, c1) in self.terms.iter() {
            for (m2, c2) in other.terms.iter() {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        *o.get_mut() += c;
                    }
                }
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        ring::Ring::pow(self, e)
    }

    /// Exact quotient by `d`, or `None` if `d` does not divide `self`.
    ///
    /// Long division with respect to the lexicographic order; with a single
    /// divisor the remainder is zero exactly when `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading_term()?;
        if let Some(c) = d.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = (dm.clone(), dc.clone());
        let rest = {
            let mut r = d.clone();
            r.terms.remove(&dm);
            r
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.terms.iter().next_back() {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            let rm = rm.clone();
            rem.terms.remove(&rm);
            for (m, c) in rest.terms.iter() {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms.iter() {
            let e = m.exponent(i);
            if e > 0 {
                let mut nm = m.clone();
                nm.0[i] -= 1;
                nm.trim();
                out.add_term(nm, c * Rational::from_integer(e.into()));
            }
        }
        out
    }

    /// Evaluates the polynomial with variable `i` replaced by `values[i]`.
    ///
    /// Variables beyond `values.len()` must not occur.
    pub fn eval<R: ring::Ring>(&self, values: &[R]) -> R {
        assert!(
            self.num_vars() <= values.len(),
            "polynomial uses {} variables, {} values supplied",
            self.num_vars(),
            values.len()
        );
        let terms: Vec<(&Monomial, &Rational)> = self.terms.iter().collect();
        horner(&terms, values.len(), values)
    }

    /// Ring homomorphism sending variable `i` to `f(i)`.
    pub fn substitute<R: ring::Ring>(&self, f: impl Fn(usize) -> R) -> R {
        let values: Vec<R> = (0..self.num_vars()).map(f).collect();
        self.eval(&values)
    }

    /// Replaces variable indices through `f` (which must be injective on the support).
    pub fn rename(&self, f: impl Fn(usize) -> usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in self.terms.iter() {
            let mut exps: SmallVec<[u16; 12]> = SmallVec::new();
            for (i, e) in m.support() {
                let j = f(i);
                if exps.len() <= j {
                    exps.resize(j + 1, 0);
                }
                exps[j] += e;
            }
            out.add_term(Monomial::from_exponents(&exps), c.clone());
        }
        out
    }

    /// Splits by the exponent of variable `i`: `self = sum_k out[k] * v_i^k`.
    pub fn coefficients_in(&self, i: usize) -> Vec<Poly> {
        let mut out: Vec<Poly> = Vec::new();
        for (m, c) in self.terms.iter() {
            let (rest, e) = m.without(i);
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, Poly::zero());
            }
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// Keeps only terms for which `keep` holds.
    pub fn filter_terms(&self, keep: impl Fn(&Monomial) -> bool) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

/// Multivariate Horner scheme on the variable slots `0..nvars`.
fn horner<R: ring::Ring>(terms: &[(&Monomial, &Rational)], nvars: usize, values: &[R]) -> R {
    if terms.is_empty() {
        return R::zero();
    }
    if nvars == 0 {
        let mut acc = Rational::zero();
        for (_, c) in terms {
            acc += *c;
        }
        return R::from_rational(&acc);
    }
    let v = nvars - 1;
    // group by exponent of the last slot
    let mut groups: BTreeMap<u16, Vec<(&Monomial, &Rational)>> = BTreeMap::new();
    for &(m, c) in terms {
        groups.entry(m.exponent(v)).or_default().push((m, c));
    }
    if groups.len() == 1 && groups.contains_key(&0) {
        return horner(terms, v, values);
    }
    let x = &values[v];
    let top = *groups.keys().next_back().unwrap();
    let mut acc = R::zero();
    let mut prev = top;
    for (&e, group) in groups.iter().rev() {
        if e != top {
            acc = acc.times(&x.pow((prev - e) as u32));
        }
        acc = acc.plus(&horner(group, v, values));
        prev = e;
    }
    if prev > 0 {
        acc = acc.times(&x.pow(prev as u32));
    }
    acc
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*{m:?}")?;
        }
        Ok(())
    }
}

impl ring::Ring for Poly {
    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
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
        Poly::constant(r.clone())
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        Poly::div_exact(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};
    use proptest::prelude::*;

    fn x() -> Poly {
        Poly::var(0)
    }
    fn y() -> Poly {
        Poly::var(1)
    }

    #[test]
    fn arithmetic_basics() {
        let p = x().add(&y());
        let sq = p.mul(&p);
        let expected = x()
            .mul(&x())
            .add(&x().mul(&y()).scale(&int(2)))
            .add(&y().mul(&y()));
        assert_eq!(sq, expected);
        assert!(p.sub(&p).is_zero());
        assert_eq!(sq.total_degree(), Some(2));
    }

    #[test]
    fn exact_division() {
        let p = x().add(&y());
        let q = x().sub(&Poly::one());
        let prod = p.mul(&q).mul(&q);
        assert_eq!(prod.div_exact(&q).unwrap(), p.mul(&q));
        assert!(prod.add(&Poly::one()).div_exact(&q).is_none());
        assert!(x().div_exact(&y()).is_none());
        assert_eq!(
            x().scale(&int(3)).div_exact(&Poly::constant(int(6))),
            Some(x().scale(&rat(1, 2)))
        );
    }

    #[test]
    fn eval_and_substitute() {
        // 3x^2y - y + 1/2 at (2, -1)
        let p = x()
            .mul(&x())
            .mul(&y())
            .scale(&int(3))
            .sub(&y())
            .add(&Poly::constant(rat(1, 2)));
        assert_eq!(p.eval(&[int(2), int(-1)]), rat(-21, 2));
        // x -> y+1, y -> x
        let s = p.substitute(|i| if i == 0 { y().add(&Poly::one()) } else { x() });
        assert_eq!(s.eval(&[int(-1), int(1)]), p.eval(&[int(2), int(-1)]));
    }

    #[test]
    fn coefficients_split() {
        let p = x().mul(&y()).add(&y().pow(3)).add(&Poly::one());
        let parts = p.coefficients_in(1);
        assert_eq!(parts.len(), 4);
        assert_eq!(parts[0], Poly::one());
        assert_eq!(parts[1], x());
        assert_eq!(parts[3], Poly::one());
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(
            (prop::collection::vec(0u16..3, 0..3), -5i64..6, 1i64..4),
            0..6,
        )
        .prop_map(|ts| {
            Poly::from_terms(
                ts.into_iter()
                    .map(|(e, a, b)| (Monomial::from_exponents(&e), rat(a, b))),
            )
        })
    }

    proptest! {
        #[test]
        fn eval_is_a_homomorphism(p in arb_poly(), q in arb_poly(),
                                   a in -4i64..5, b in -4i64..5, c in -4i64..5) {
            let pt = [int(a), int(b), int(c)];
            prop_assert_eq!(p.mul(&q).eval(&pt), p.eval(&pt) * q.eval(&pt));
            prop_assert_eq!(p.add(&q).eval(&pt), p.eval(&pt) + q.eval(&pt));
        }

        #[test]
        fn product_divides_exactly(p in arb_poly(), q in arb_poly()) {
            prop_assume!(!q.is_zero());
            prop_assert_eq!(p.mul(&q).div_exact(&q), Some(p));
        }
    }
}
