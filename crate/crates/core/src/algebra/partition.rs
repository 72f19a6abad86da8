use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Integer partition; parts are positive and weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Validates the parts; trailing zeros are dropped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "zero part inside {parts:?}"
            )));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary non-negative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The `rows x cols` rectangle.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            Partition::empty()
        } else {
            Partition(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.first();
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count())
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn fits_in_rectangle(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.first() <= cols
    }

    /// `λ∨ = (n-d-λ_d, ..., n-d-λ_1)` for `λ` inside the `d x (n-d)` rectangle.
    pub fn complement(&self, d: usize, n: usize) -> Result<Partition> {
        if d > n || !self.fits_in_rectangle(d, n - d) {
            return Err(Error::NotInRectangle {
                partition: self.to_string(),
                rows: d,
                cols: n.saturating_sub(d),
            });
        }
        let w = n - d;
        Partition::new((1..=d).rev().map(|i| w - self.part(i)).collect())
    }

    /// All partitions inside the `rows x cols` rectangle, in lexicographic order of parts.
    pub fn in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut cur, &mut out);
        out.sort();
        out
    }

    /// All partitions of `n`.
    pub fn of_weight(n: usize) -> Vec<Partition> {
        Self::of_weight_bounded(n, n)
    }

    /// Partitions of `n` with every part at most `max_part`, in reverse lexicographic order.
    pub fn of_weight_bounded(n: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=max.min(rem)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// Cells `(row, col)`, 0-based, row by row.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
            .collect()
    }

    /// Multiplicity of the part `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; the empty string (or `∅`) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() || t == "∅" || t == "()" {
            return Ok(Partition::empty());
        }
        let t = t.trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        let mut pos = 0;
        for piece in t.split(',') {
            let v = piece.trim().parse::<usize>().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected a non-negative integer, found {:?}", piece.trim()),
            })?;
            parts.push(v);
            pos += piece.len() + 1;
        }
        Partition::new(parts)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p("6,5,2,1").conjugate(), p("4,3,2,2,2,1"));
        assert_eq!(p("2,2").conjugate(), p("2,2"));
    }

    #[test]
    fn complements() {
        assert_eq!(p("6,5,2,1").complement(4, 10).unwrap(), p("5,4,1"));
        assert_eq!(
            Partition::rectangle(3, 2).complement(3, 5).unwrap(),
            Partition::empty()
        );
        assert_eq!(Partition::empty().complement(1, 2).unwrap(), p("1"));
        assert!(p("3").complement(1, 3).is_err());
        assert!(p("1,1").complement(1, 3).is_err());
    }

    #[test]
    fn parsing() {
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("3,2,0,0").parts(), &[3, 2]);
        assert!("1,2".parse::<Partition>().is_err());
        let e = "3,x".parse::<Partition>().unwrap_err();
        assert!(matches!(e, Error::Parse { pos: 2, .. }));
        assert_eq!(p("3,2,1").to_string(), "3,2,1");
    }

    #[test]
    fn enumeration_counts() {
        // C(rows+cols, rows) partitions in a rectangle
        assert_eq!(Partition::in_rectangle(2, 3).len(), 10);
        assert_eq!(Partition::in_rectangle(3, 3).len(), 20);
        assert_eq!(Partition::of_weight(6).len(), 11);
        assert_eq!(Partition::of_weight(0), vec![Partition::empty()]);
    }

    proptest! {
        #[test]
        fn conjugate_is_an_involution(parts in prop::collection::vec(0usize..8, 0..7)) {
            let lam = Partition::from_unsorted(parts);
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().weight(), lam.weight());
        }

        #[test]
        fn complement_is_an_involution(n in 2usize..9, d_seed in 0usize..100, idx in 0usize..1000) {
            let d = 1 + d_seed % (n - 1);
            let all = Partition::in_rectangle(d, n - d);
            let lam = &all[idx % all.len()];
            let c = lam.complement(d, n).unwrap();
            prop_assert_eq!(c.complement(d, n).unwrap(), lam.clone());
            prop_assert_eq!(c.weight() + lam.weight(), d * (n - d));
        }
    }
}
