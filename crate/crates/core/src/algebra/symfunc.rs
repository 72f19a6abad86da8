//! Symmetric functions stored as polynomials in the complete homogeneous
//! functions `h_1, h_2, ...` (slot `i` of the underlying polynomial is `h_{i+1}`).

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::RingMatrix;
use super::partition::Partition;
use super::parse::parse_expression;
use super::poly::{Monomial, Poly};
use super::rational::{format_rational, int, parse_rational, Rational};
use super::ring;
use crate::error::Result;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc(Poly);

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc(Poly::zero())
    }

    pub fn one() -> Self {
        SymFunc(Poly::one())
    }

    pub fn constant(c: Rational) -> Self {
        SymFunc(Poly::constant(c))
    }

    pub fn from_poly(p: Poly) -> Self {
        SymFunc(p)
    }

    pub fn poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    /// `h_k`, with `h_0 = 1` and `h_k = 0` for `k < 0`.
    pub fn h(k: i64) -> Self {
        match k {
            k if k < 0 => Self::zero(),
            0 => Self::one(),
            k => SymFunc(Poly::var(k as usize - 1)),
        }
    }

    /// `h_λ = h_{λ_1} h_{λ_2} ...`.
    pub fn h_monomial(lam: &Partition) -> Self {
        SymFunc(Poly::term(Rational::one(), partition_to_monomial(lam)))
    }

    /// Schur function via the Jacobi-Trudi determinant `det(h_{λ_i + j - i})`.
    pub fn schur(lam: &Partition) -> Self {
        let l = lam.len();
        let m = RingMatrix::from_fn(l, l, |i, j| {
            SymFunc::h(lam.part(i + 1) as i64 + j as i64 - i as i64)
        });
        m.det().expect("square")
    }

    /// Elementary symmetric function `e_k = s_{1^k}`.
    pub fn e(k: usize) -> Self {
        Self::schur(&Partition::new(vec![1; k]).expect("valid"))
    }

    /// Power sum `p_k` in the h-basis.
    pub fn p(k: usize) -> Self {
        if k == 0 {
            return Self::one();
        }
        power_sums_in_h(k).pop().expect("non-empty")
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        self.0.as_constant()
    }

    pub fn add(&self, o: &Self) -> Self {
        SymFunc(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        SymFunc(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &Self) -> Self {
        SymFunc(self.0.mul(&o.0))
    }

    pub fn neg(&self) -> Self {
        SymFunc(self.0.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SymFunc(self.0.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        SymFunc(self.0.pow(e))
    }

    pub fn div_exact(&self, o: &Self) -> Option<Self> {
        self.0.div_exact(&o.0).map(SymFunc)
    }

    /// Largest weight (with `deg h_k = k`) among the terms.
    pub fn degree(&self) -> Option<u32> {
        self.0.terms().map(|(m, _)| weight(m)).max()
    }

    /// Homogeneous component of the given weight.
    pub fn component(&self, deg: u32) -> Self {
        SymFunc(self.0.filter_terms(|m| weight(m) == deg))
    }

    /// Top-degree homogeneous component.
    pub fn top_component(&self) -> Self {
        match self.degree() {
            Some(d) => self.component(d),
            None => Self::zero(),
        }
    }

    /// Membership in `Λ_(n) = Q[h_1, ..., h_{n-1}]`.
    pub fn in_lambda_n(&self, n: usize) -> bool {
        self.0.num_vars() < n
    }

    /// Terms as (partition of h-indices, coefficient), ordered by weight then parts.
    pub fn terms(&self) -> Vec<(Partition, Rational)> {
        let mut v: Vec<(Partition, Rational)> = self
            .0
            .terms()
            .map(|(m, c)| (monomial_to_partition(m), c.clone()))
            .collect();
        v.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        v
    }

    pub fn coeff_of(&self, lam: &Partition) -> Rational {
        self.0.coeff(&partition_to_monomial(lam))
    }

    /// Expression in power sums; slot `i` of the result is `p_{i+1}`.
    pub fn to_p_basis(&self) -> Poly {
        let k = self.0.num_vars();
        let hs = complete_in_p(k);
        self.0.eval(&hs)
    }

    /// Inverse of [`SymFunc::to_p_basis`].
    pub fn from_p_basis(p: &Poly) -> SymFunc {
        let k = p.num_vars();
        let ps: Vec<SymFunc> = power_sums_in_h(k);
        p.eval(&ps)
    }

    /// `f^⊥ g`: the adjoint of multiplication by `f` for the Hall inner product.
    pub fn perp(f: &SymFunc, g: &SymFunc) -> SymFunc {
        let fp = f.to_p_basis();
        let mut memo: HashMap<Monomial, SymFunc> = HashMap::new();
        memo.insert(Monomial::one(), g.clone());
        let mut out = SymFunc::zero();
        for (m, c) in fp.terms() {
            let v = p_perp_monomial(m, &mut memo);
            out = out.add(&v.scale(c));
        }
        out
    }

    /// `p_i^⊥ g`, a derivation with `p_i^⊥ h_j = h_{j-i}`.
    pub fn p_perp(i: usize, g: &SymFunc) -> SymFunc {
        let nv = g.0.num_vars();
        let mut out = Poly::zero();
        for j in 0..nv {
            let d = g.0.derivative(j);
            if d.is_zero() {
                continue;
            }
            // h_{j+1} -> h_{j+1-i}
            let target = SymFunc::h(j as i64 + 1 - i as i64);
            out.add_assign(&d.mul(&target.0));
        }
        SymFunc(out)
    }

    /// Expansion in the Schur basis, keyed by partition.
    pub fn to_schur_basis(&self) -> Vec<(Partition, Rational)> {
        let mut rest = self.clone();
        let mut out = Vec::new();
        while !rest.is_zero() {
            // the lexicographically smallest h_μ only occurs in s_μ
            let (lam, c) = rest
                .terms()
                .into_iter()
                .min_by(|a, b| a.0.weight().cmp(&b.0.weight()).then(a.0.cmp(&b.0)))
                .expect("non-zero");
            rest = rest.sub(&SymFunc::schur(&lam).scale(&c));
            out.push((lam, c));
        }
        out.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
        out
    }

    pub fn to_json_terms(&self) -> Vec<SymTerm> {
        self.terms()
            .into_iter()
            .map(|(lam, c)| {
                let mut idx: Vec<usize> = lam.parts().to_vec();
                idx.reverse();
                SymTerm {
                    coeff: format_rational(&c),
                    monomial: idx,
                }
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[SymTerm]) -> Result<Self> {
        let mut p = Poly::zero();
        for t in terms {
            let c = parse_rational(&t.coeff)?;
            let lam = Partition::from_unsorted(t.monomial.clone());
            p.add_term(partition_to_monomial(&lam), c);
        }
        Ok(SymFunc(p))
    }

    /// Parses expressions in `h_k`, `e_k`, `p_k` (written `h2` or `h_2`), e.g.
    /// `"h1^2 - h2 + h1"`.
    pub fn parse(src: &str) -> Result<SymFunc> {
        parse_expression(src, "h_k, e_k or p_k", |name| {
            let mut chars = name.chars();
            let kind = chars.next()?;
            let rest = chars.as_str();
            let k: usize = rest.strip_prefix('_').unwrap_or(rest).parse().ok()?;
            let f = match kind {
                'h' => SymFunc::h(k as i64),
                'e' => SymFunc::e(k),
                'p' if k > 0 => SymFunc::p(k),
                _ => return None,
            };
            Some(f.0)
        })
        .map(SymFunc)
    }
}

/// One term of the JSON form `{coeff: "p/q", monomial: [i1, i2, ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymTerm {
    pub coeff: String,
    pub monomial: Vec<usize>,
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let terms = Vec::<SymTerm>::deserialize(d)?;
        SymFunc::from_json_terms(&terms).map_err(serde::de::Error::custom)
    }
}

fn weight(m: &Monomial) -> u32 {
    m.weighted_degree(|i| i as u32 + 1)
}

fn canonical_cmp(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    b.weight().cmp(&a.weight()).then_with(|| b.cmp(a))
}

pub fn partition_to_monomial(lam: &Partition) -> Monomial {
    let mut exps = vec![0u16; lam.first()];
    for &p in lam.parts() {
        exps[p - 1] += 1;
    }
    Monomial::from_exponents(&exps)
}

pub fn monomial_to_partition(m: &Monomial) -> Partition {
    let mut parts = Vec::new();
    for (i, e) in m.support() {
        parts.extend(std::iter::repeat_n(i + 1, e as usize));
    }
    Partition::from_unsorted(parts)
}

/// `[p_1, ..., p_k]` in the h-basis, from `p_m = m h_m - Σ_{i<m} p_i h_{m-i}`.
fn power_sums_in_h(k: usize) -> Vec<SymFunc> {
    let mut ps: Vec<SymFunc> = Vec::with_capacity(k);
    for m in 1..=k {
        let mut v = SymFunc::h(m as i64).scale(&int(m as i64));
        for i in 1..m {
            v = v.sub(&ps[i - 1].mul(&SymFunc::h((m - i) as i64)));
        }
        ps.push(v);
    }
    ps
}

/// `[h_1, ..., h_k]` in the p-basis, from `m h_m = Σ_{i=1}^m p_i h_{m-i}`.
fn complete_in_p(k: usize) -> Vec<Poly> {
    let mut hs: Vec<Poly> = vec![Poly::one()];
    for m in 1..=k {
        let mut v = Poly::zero();
        for i in 1..=m {
            v.add_assign(&Poly::var(i - 1).mul(&hs[m - i]));
        }
        hs.push(v.scale(&Rational::new(1.into(), (m as i64).into())));
    }
    hs.remove(0);
    hs
}

fn p_perp_monomial(m: &Monomial, memo: &mut HashMap<Monomial, SymFunc>) -> SymFunc {
    if let Some(v) = memo.get(m) {
        return v.clone();
    }
    let (i, _) = m.support().next().expect("non-trivial monomial");
    let rest = m.div(&Monomial::var(i)).expect("divides");
    let inner = p_perp_monomial(&rest, memo);
    let v = if inner.is_zero() {
        inner
    } else {
        SymFunc::p_perp(i + 1, &inner)
    };
    memo.insert(m.clone(), v.clone());
    v
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (lam, c)) in terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = format_h_monomial(lam);
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

fn format_h_monomial(lam: &Partition) -> String {
    let mut out: Vec<String> = Vec::new();
    let mut i = 0;
    let parts = lam.parts();
    while i < parts.len() {
        let p = parts[i];
        let mut e = 0;
        while i < parts.len() && parts[i] == p {
            e += 1;
            i += 1;
        }
        out.push(if e == 1 {
            format!("h{p}")
        } else {
            format!("h{p}^{e}")
        });
    }
    out.join("*")
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl ring::Ring for SymFunc {
    fn zero() -> Self {
        SymFunc::zero()
    }
    fn one() -> Self {
        SymFunc::one()
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
        SymFunc::constant(r.clone())
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        SymFunc::div_exact(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;
    use proptest::prelude::*;

    fn h(k: i64) -> SymFunc {
        SymFunc::h(k)
    }
    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let f = SymFunc::parse("h1^2 - h_2 + h1").unwrap();
        assert_eq!(f, SymFunc::h(1).pow(2).sub(&SymFunc::h(2)).add(&SymFunc::h(1)));
        assert_eq!(SymFunc::parse(&f.to_string()).unwrap(), f);
        assert_eq!(SymFunc::parse("e2").unwrap(), SymFunc::e(2));
        assert!(matches!(
            SymFunc::parse("h1 + y2"),
            Err(crate::error::Error::Parse { pos: 5, .. })
        ));
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(SymFunc::schur(&Partition::empty()), SymFunc::one());
        assert_eq!(SymFunc::schur(&part("1,1")), h(1).mul(&h(1)).sub(&h(2)));
        assert_eq!(SymFunc::schur(&part("2,1")), h(2).mul(&h(1)).sub(&h(3)));
    }

    #[test]
    fn power_sum_examples() {
        assert_eq!(h(1).to_p_basis(), Poly::var(0));
        assert_eq!(SymFunc::p(2), h(2).scale(&int(2)).sub(&h(1).pow(2)));
        let p3 = h(3)
            .scale(&int(3))
            .sub(&h(1).mul(&h(2)).scale(&int(3)))
            .add(&h(1).pow(3));
        assert_eq!(SymFunc::p(3), p3);
    }

    #[test]
    fn perp_examples() {
        assert_eq!(SymFunc::perp(&SymFunc::p(1), &h(2)), h(1));
        assert_eq!(SymFunc::perp(&h(2), &SymFunc::one()), SymFunc::zero());
        let s11 = SymFunc::schur(&part("1,1"));
        assert_eq!(SymFunc::perp(&s11, &s11), SymFunc::one());
        // Schur functions are orthonormal
        let s2 = SymFunc::schur(&part("2"));
        assert_eq!(SymFunc::perp(&s2, &s11), SymFunc::zero());
        // h_1^⊥ s_{21} = s_2 + s_{11}
        let s21 = SymFunc::schur(&part("2,1"));
        assert_eq!(SymFunc::perp(&h(1), &s21), s2.add(&s11));
    }

    #[test]
    fn schur_expansion() {
        let f = h(1).pow(2);
        assert_eq!(
            f.to_schur_basis(),
            vec![(part("2"), int(1)), (part("1,1"), int(1))]
        );
        let g = SymFunc::schur(&part("3,1")).scale(&rat(2, 3)).add(&SymFunc::one());
        assert_eq!(g.to_schur_basis(), vec![(part("3,1"), rat(2, 3)), (Partition::empty(), int(1))]);
    }

    #[test]
    fn json_round_trip_and_display() {
        let f = h(1).pow(2).sub(&h(2)).add(&h(1));
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"[{"coeff":"-1","monomial":[2]},{"coeff":"1","monomial":[1,1]},{"coeff":"1","monomial":[1]}]"#
        );
        let back: SymFunc = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(f.to_string(), "-h2 + h1^2 + h1");
        assert!(f.in_lambda_n(3));
        assert!(!f.in_lambda_n(2));
    }

    fn arb_sym(max_deg: u32) -> impl Strategy<Value = SymFunc> {
        prop::collection::vec((prop::collection::vec(1usize..5, 0..4), -4i64..5), 0..5).prop_map(
            move |ts| {
                let mut f = SymFunc::zero();
                for (parts, c) in ts {
                    let lam = Partition::from_unsorted(parts);
                    if lam.weight() as u32 <= max_deg {
                        f = f.add(&SymFunc::h_monomial(&lam).scale(&int(c)));
                    }
                }
                f
            },
        )
    }

    /// Schur polynomial in `nv` variables by semistandard tableau enumeration.
    fn schur_poly_ssyt(lam: &Partition, nv: usize) -> Poly {
        let cells = lam.cells();
        let mut fill = vec![0usize; cells.len()];
        let mut out = Poly::zero();
        fn rec(
            k: usize,
            cells: &[(usize, usize)],
            lam: &Partition,
            fill: &mut Vec<usize>,
            nv: usize,
            out: &mut Poly,
        ) {
            if k == cells.len() {
                let mut e = vec![0u16; nv];
                for &v in fill.iter() {
                    e[v - 1] += 1;
                }
                out.add_term(Monomial::from_exponents(&e), int(1));
                return;
            }
            let (r, c) = cells[k];
            let idx = |rr: usize, cc: usize| {
                (0..rr).map(|i| lam.part(i + 1)).sum::<usize>() + cc
            };
            let lo_row = if c > 0 { fill[idx(r, c - 1)] } else { 1 };
            let lo_col = if r > 0 { fill[idx(r - 1, c)] + 1 } else { 1 };
            for v in lo_row.max(lo_col)..=nv {
                fill[k] = v;
                rec(k + 1, cells, lam, fill, nv, out);
            }
        }
        rec(0, &cells, lam, &mut fill, nv, &mut out);
        out
    }

    #[test]
    fn lr_positivity_against_tableaux() {
        let nv = 6;
        let mut parts: Vec<Partition> = Vec::new();
        for w in 0..=6 {
            parts.extend(Partition::of_weight(w));
        }
        for lam in &parts {
            for mu in &parts {
                if lam.weight() + mu.weight() > 6 || lam.weight() == 0 || mu.weight() == 0 {
                    continue;
                }
                let sym = SymFunc::schur(lam).mul(&SymFunc::schur(mu)).to_schur_basis();
                for (_, c) in &sym {
                    assert!(c.is_integer() && *c > Rational::zero(), "{lam:?}*{mu:?}");
                }
                // peel the dominant monomial of the explicit product
                let mut rest = schur_poly_ssyt(lam, nv).mul(&schur_poly_ssyt(mu, nv));
                let mut brute: Vec<(Partition, Rational)> = Vec::new();
                while let Some((m, c)) = rest.leading_term() {
                    let nu = Partition::new(m.exponents().iter().map(|&e| e as usize).collect())
                        .expect("leading monomial is dominant");
                    let c = c.clone();
                    rest = rest.sub(&schur_poly_ssyt(&nu, nv).scale(&c));
                    brute.push((nu, c));
                }
                brute.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
                assert_eq!(sym, brute, "{lam:?}*{mu:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn p_basis_round_trip(f in arb_sym(8)) {
            prop_assert_eq!(SymFunc::from_p_basis(&f.to_p_basis()), f);
        }

        #[test]
        fn perp_is_bilinear_and_multiplicative(f in arb_sym(4), g in arb_sym(4), k in arb_sym(4),
                                               a in -3i64..4) {
            let ca = int(a);
            prop_assert_eq!(
                SymFunc::perp(&f.scale(&ca).add(&g), &k),
                SymFunc::perp(&f, &k).scale(&ca).add(&SymFunc::perp(&g, &k))
            );
            prop_assert_eq!(
                SymFunc::perp(&k, &f.scale(&ca).add(&g)),
                SymFunc::perp(&k, &f).scale(&ca).add(&SymFunc::perp(&k, &g))
            );
            prop_assert_eq!(
                SymFunc::perp(&f.mul(&g), &k),
                SymFunc::perp(&f, &SymFunc::perp(&g, &k))
            );
        }
    }
}
