use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    /// Simple transposition `s_i` (1-based, swaps `i` and `i+1`).
    pub fn simple(n: usize, i: usize) -> Self {
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(i - 1, i);
        Permutation(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `(self ∘ other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut v = vec![0; self.n()];
        for (i, &w) in self.0.iter().enumerate() {
            v[w - 1] = i + 1;
        }
        Permutation(v)
    }

    /// `w s_i`: swaps positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(i - 1, i);
        Permutation(v)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `{i : w(i) > w(i+1)}`, 1-based.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.0[i - 1] > self.0[i]).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &w)| w == i + 1)
    }

    /// All permutations of `{1..n}` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Lexicographically smallest reduced word `(i_1, ..., i_l)` with
    /// `w = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        // peel left descents: if w^{-1} has a descent at i then w = s_i (s_i w)
        let mut word = Vec::new();
        let mut w = self.clone();
        while let Some(i) = w.inverse().descents().first().copied() {
            word.push(i);
            w = Permutation::simple(w.n(), i).compose(&w);
        }
        word
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Either single digits (`"1423"`) or comma-separated images (`"1,4,2,3"`).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let mut images = Vec::new();
        if t.contains(',') {
            let mut pos = 0;
            for piece in t.split(',') {
                let v = piece.trim().parse::<usize>().map_err(|_| Error::Parse {
                    pos,
                    msg: format!("expected a positive integer, found {:?}", piece.trim()),
                })?;
                images.push(v);
                pos += piece.len() + 1;
            }
        } else {
            for (pos, ch) in t.chars().enumerate() {
                let v = ch.to_digit(10).ok_or_else(|| Error::Parse {
                    pos,
                    msg: format!("expected a digit, found {ch:?}"),
                })?;
                images.push(v as usize);
            }
        }
        Permutation::new(images)
    }
}
