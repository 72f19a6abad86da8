use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{binomial, format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// `(z, Q)` with `z_1 ⋯ z_n = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TodaPoint {
    pub z: Vec<Rational>,
    pub q: Vec<Rational>,
}

impl TodaPoint {
    pub fn new(z: Vec<Rational>, q: Vec<Rational>) -> Result<Self> {
        if z.is_empty() || q.len() + 1 != z.len() {
            return Err(Error::Dimension(format!(
                "expected n z-values and n-1 Q-values, got {} and {}",
                z.len(),
                q.len()
            )));
        }
        let prod: Rational = z.iter().product();
        if !prod.is_one() {
            return Err(Error::NotOnZ(format!(
                "z_1 ⋯ z_n = {} instead of 1",
                format_rational(&prod)
            )));
        }
        Ok(TodaPoint { z, q })
    }

    pub fn n(&self) -> usize {
        self.z.len()
    }

    /// `z_i`, 1-based.
    pub fn z(&self, i: usize) -> &Rational {
        &self.z[i - 1]
    }

    /// `Q_i`, 1-based, with `Q_n = 0`.
    pub fn q(&self, i: usize) -> Rational {
        self.q.get(i - 1).cloned().unwrap_or_else(Rational::zero)
    }

    /// Membership in `Z°`: all `Q_i` non-zero.
    pub fn in_z_circ(&self) -> bool {
        self.q.iter().all(|q| !q.is_zero())
    }
}

#[derive(Serialize, Deserialize)]
struct PointJson {
    n: usize,
    z: Vec<String>,
    #[serde(rename = "Q")]
    q: Vec<String>,
}

impl Serialize for TodaPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PointJson {
            n: self.n(),
            z: self.z.iter().map(format_rational).collect(),
            q: self.q.iter().map(format_rational).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TodaPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = PointJson::deserialize(d)?;
        let parse = |v: &[String]| -> Result<Vec<Rational>> {
            v.iter().map(|s| parse_rational(s)).collect()
        };
        let z = parse(&j.z).map_err(D::Error::custom)?;
        let q = parse(&j.q).map_err(D::Error::custom)?;
        if z.len() != j.n {
            return Err(D::Error::custom("length of z differs from n"));
        }
        TodaPoint::new(z, q).map_err(D::Error::custom)
    }
}

/// Spectral parameters `γ_1, ..., γ_n` with `γ_n = 1`; the characteristic
/// polynomial is `f_γ(ζ) = ζ^n + Σ_i (-1)^i γ_i ζ^{n-i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralParams {
    gamma: Vec<Rational>,
}

impl SpectralParams {
    pub fn new(gamma: Vec<Rational>) -> Result<Self> {
        match gamma.last() {
            Some(g) if g.is_one() => Ok(SpectralParams { gamma }),
            _ => Err(Error::Dimension("γ_n must equal 1".into())),
        }
    }

    /// `γ_i = C(n, i)`, i.e. `f_γ = (ζ - 1)^n`.
    pub fn unipotent(n: usize) -> Self {
        SpectralParams {
            gamma: (1..=n).map(|i| binomial(n as i64, i as i64)).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.gamma.len()
    }

    /// `γ_i`, 1-based.
    pub fn gamma(&self, i: usize) -> &Rational {
        &self.gamma[i - 1]
    }

    pub fn values(&self) -> &[Rational] {
        &self.gamma
    }

    pub fn is_unipotent(&self) -> bool {
        *self == Self::unipotent(self.n())
    }

    /// Coefficients of `f_γ`, lowest degree first (length `n + 1`, monic).
    pub fn char_poly(&self) -> Vec<Rational> {
        let n = self.n();
        let mut c = vec![Rational::zero(); n + 1];
        c[n] = Rational::one();
        for i in 1..=n {
            let g = self.gamma(i).clone();
            c[n - i] = if i % 2 == 0 { g } else { -g };
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn point_validation_and_json() {
        assert!(TodaPoint::new(vec![int(2), int(1)], vec![int(1)]).is_err());
        let p = TodaPoint::new(vec![int(2), rat(1, 2)], vec![int(3)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":2,"z":["2","1/2"],"Q":["3"]}"#);
        let back: TodaPoint = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert_eq!(p.q(2), int(0));
    }

    #[test]
    fn unipotent_char_poly() {
        // (ζ-1)^3 = ζ^3 - 3ζ^2 + 3ζ - 1
        assert_eq!(
            SpectralParams::unipotent(3).char_poly(),
            vec![int(-1), int(3), int(-3), int(1)]
        );
        assert!(SpectralParams::new(vec![int(3), int(2)]).is_err());
    }
}
