//! One-shot computations behind the non-`verify` subcommands.

use kpeterson::algebra::{Partition, Permutation, PolyZQ};
use kpeterson::grothendieck::{dual_groth, klr_coeff, stable_groth_vars};
use kpeterson::peterson::{d_det, phi_apply, tau_sigma, DSpec};
use kpeterson::schubert::{g_tilde, groth_poly, k_conjugate, lambda_map, quantum_groth, KBoundedPartition};
use kpeterson::toda::{check_point, random_general_point};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{CliError, CliResult};

/// A computed value with its JSON form and a plain rendering for `--text`.
pub struct Output {
    pub json: Value,
    pub text: String,
}

impl Output {
    fn of<T: Serialize + ToString>(v: &T) -> Output {
        Output { json: serde_json::to_value(v).expect("serializes"), text: v.to_string() }
    }
}

pub fn partition(src: &str) -> CliResult<Partition> {
    Ok(src.trim().parse()?)
}

pub fn permutation(src: &str, n: Option<usize>) -> CliResult<Permutation> {
    let w: Permutation = src.trim().parse()?;
    match n {
        Some(n) if n != w.n() => Err(CliError::Usage(format!(
            "permutation {w} has {} entries but --n is {n}",
            w.n()
        ))),
        _ => Ok(w),
    }
}

fn int_list<T: std::str::FromStr>(src: &str, what: &str) -> CliResult<Vec<T>> {
    if src.trim().is_empty() {
        return Ok(vec![]);
    }
    src.split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad entry '{s}' in {what}")))
        })
        .collect()
}

fn need_n(n: Option<usize>) -> CliResult<usize> {
    n.ok_or_else(|| CliError::Usage("--n is required".into()))
}

pub fn gdual(lam: &str) -> CliResult<Output> {
    Ok(Output::of(&dual_groth(&partition(lam)?)))
}

pub fn klr(lam: &str, mu: &str, nu: &str) -> CliResult<Output> {
    let c = klr_coeff(&partition(lam)?, &partition(mu)?, &partition(nu)?);
    Ok(Output { json: json!(c), text: c.to_string() })
}

pub fn gstable(lam: &str, d: usize) -> CliResult<Output> {
    Ok(Output::of(&stable_groth_vars(&partition(lam)?, d)))
}

pub fn phi(n: Option<usize>, poly: &str) -> CliResult<Output> {
    let n = need_n(n)?;
    let p = PolyZQ::parse(poly)?;
    Ok(Output::of(&phi_apply(&p, n)?))
}

pub fn tau(n: Option<usize>) -> CliResult<Output> {
    let n = need_n(n)?;
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let t = tau_sigma(n);
    let tau: Vec<_> = (1..n).map(|i| t.tau(i).clone()).collect();
    let sigma: Vec<_> = (1..n).map(|i| t.sigma(i).clone()).collect();
    let text = (1..n)
        .map(|i| format!("tau{i} = {}\nsigma{i} = {}", t.tau(i), t.sigma(i)))
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output { json: json!({ "tau": tau, "sigma": sigma }), text })
}

pub fn ddet(n: Option<usize>, theta: &str, a: Option<&str>) -> CliResult<Output> {
    let n = need_n(n)?;
    let theta: Vec<i64> = int_list(theta, "--theta")?;
    let a: Vec<usize> = match a {
        Some(a) => int_list(a, "--a")?,
        None => vec![0; theta.len()],
    };
    Ok(Output::of(&d_det(&DSpec::new(n, theta, a)?)))
}

pub fn groth(w: &str, n: Option<usize>) -> CliResult<Output> {
    Ok(Output::of(&groth_poly(&permutation(w, n)?)))
}

pub fn qgroth(w: &str, n: Option<usize>) -> CliResult<Output> {
    Ok(Output::of(&quantum_groth(&permutation(w, n)?)))
}

pub fn gtilde(w: &str, n: Option<usize>) -> CliResult<Output> {
    Ok(Output::of(&g_tilde(&permutation(w, n)?)?))
}

pub fn lambda(w: &str, n: Option<usize>) -> CliResult<Output> {
    let lam = lambda_map(&permutation(w, n)?);
    Ok(Output::of(&lam.partition.to_string()))
}

pub fn kconj(mu: &str, k: usize) -> CliResult<Output> {
    let mu = KBoundedPartition::new(partition(mu)?, k)?;
    Ok(Output::of(&k_conjugate(&mu).partition.to_string()))
}

pub fn toda_roundtrip(n: Option<usize>, trials: usize, seed: u64) -> CliResult<Output> {
    let n = need_n(n)?;
    if n < 2 {
        return Err(CliError::Usage("--n must be at least 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = vec![];
    for t in 0..trials {
        let pt = random_general_point(n, &mut rng);
        let bad = match check_point(&pt) {
            Ok(c) => c.failures().into_iter().map(String::from).collect(),
            Err(e) => vec![e.to_string()],
        };
        if !bad.is_empty() {
            failures.push(json!({ "trial": t, "point": pt, "checks": bad }));
        }
    }
    let text = format!("{trials} trials, {} failures, seed {seed}", failures.len());
    Ok(Output { json: json!({ "trials": trials, "failures": failures, "seed": seed }), text })
}
