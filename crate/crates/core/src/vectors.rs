//! Reference values shipped in `data/vectors.txt`.

use crate::algebra::{Partition, Permutation, SymFunc};
use crate::error::{Error, Result};

const RAW: &str = include_str!("../data/vectors.txt");

/// `τ_i`/`σ_i` as listed for a fixed `n`.
#[derive(Debug, Clone)]
pub struct TauSigmaRow {
    pub name: String,
    pub index: usize,
    pub is_tau: bool,
    pub value: SymFunc,
}

/// One row of a λ-map table: `w`, its image and the image's k-conjugate.
#[derive(Debug, Clone)]
pub struct LambdaRow {
    pub w: Permutation,
    pub lambda: Partition,
    pub conjugate: Partition,
}

/// `g̃_w` written as a product of `g_μ` factors.
#[derive(Debug, Clone)]
pub struct FactoredRow {
    pub w: Permutation,
    pub factors: Vec<Partition>,
}

#[derive(Debug, Clone, Default)]
pub struct Vectors {
    pub tau_sigma: Vec<(usize, Vec<TauSigmaRow>)>,
    pub lambda_maps: Vec<(usize, Vec<LambdaRow>)>,
    pub gtilde_factored: Vec<(usize, Vec<FactoredRow>)>,
}

fn partition(s: &str) -> Result<Partition> {
    if s == "-" {
        Ok(Partition::empty())
    } else {
        s.parse()
    }
}

fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos: line, msg: msg.into() }
}

impl Vectors {
    /// The bundled data file.
    pub fn bundled() -> &'static Vectors {
        static V: std::sync::OnceLock<Vectors> = std::sync::OnceLock::new();
        V.get_or_init(|| Vectors::parse(RAW).expect("bundled vectors parse"))
    }

    /// Parses the section format; `pos` in errors is the 1-based line number.
    pub fn parse(src: &str) -> Result<Vectors> {
        let mut out = Vectors::default();
        let mut section: Option<(String, usize)> = None;
        for (no, raw) in src.lines().enumerate() {
            let no = no + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(head) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                let (kind, n) = head
                    .split_once(' ')
                    .ok_or_else(|| bad(no, "section header needs a kind and n"))?;
                let n: usize = n.trim().parse().map_err(|_| bad(no, "bad n"))?;
                match kind {
                    "tau-sigma" => out.tau_sigma.push((n, vec![])),
                    "lambda-map" => out.lambda_maps.push((n, vec![])),
                    "gtilde-factored" => out.gtilde_factored.push((n, vec![])),
                    _ => return Err(bad(no, format!("unknown section {kind}"))),
                }
                section = Some((kind.to_string(), n));
                continue;
            }
            let Some((kind, _)) = &section else {
                return Err(bad(no, "entry outside a section"));
            };
            match kind.as_str() {
                "tau-sigma" => {
                    let (name, value) = line.split_once('=').ok_or_else(|| bad(no, "expected '='"))?;
                    let name = name.trim();
                    let (is_tau, idx) = if let Some(i) = name.strip_prefix("tau") {
                        (true, i)
                    } else if let Some(i) = name.strip_prefix("sigma") {
                        (false, i)
                    } else {
                        return Err(bad(no, "expected tauN or sigmaN"));
                    };
                    let index = idx.parse().map_err(|_| bad(no, "bad index"))?;
                    let value = SymFunc::parse(value.trim())?;
                    out.tau_sigma.last_mut().unwrap().1.push(TauSigmaRow {
                        name: name.to_string(),
                        index,
                        is_tau,
                        value,
                    });
                }
                "lambda-map" => {
                    let cols: Vec<&str> = line.split_whitespace().collect();
                    if cols.len() != 3 {
                        return Err(bad(no, "expected three columns"));
                    }
                    out.lambda_maps.last_mut().unwrap().1.push(LambdaRow {
                        w: cols[0].parse()?,
                        lambda: partition(cols[1])?,
                        conjugate: partition(cols[2])?,
                    });
                }
                _ => {
                    let (w, rhs) = line.split_once('=').ok_or_else(|| bad(no, "expected '='"))?;
                    let factors = rhs
                        .split('*')
                        .map(|f| partition(f.trim()))
                        .collect::<Result<Vec<_>>>()?;
                    out.gtilde_factored.last_mut().unwrap().1.push(FactoredRow {
                        w: w.trim().parse()?,
                        factors,
                    });
                }
            }
        }
        Ok(out)
    }

    pub fn lambda_table(&self, n: usize) -> Option<&[LambdaRow]> {
        self.lambda_maps.iter().find(|(m, _)| *m == n).map(|(_, r)| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_sizes() {
        let v = Vectors::bundled();
        assert_eq!(v.tau_sigma[0].1.len(), 4);
        assert_eq!(v.lambda_table(4).unwrap().len(), 6);
        assert_eq!(v.lambda_table(5).unwrap().len(), 24);
        assert_eq!(v.gtilde_factored[0].1.len(), 8);
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(Vectors::parse("oops"), Err(Error::Parse { pos: 1, .. })));
        assert!(Vectors::parse("[lambda-map 4]\n12 3").is_err());
    }
}
