//! Named verification suites.

use std::collections::BTreeMap;
use std::ops::RangeInclusive;
use std::time::Instant;

use kpeterson::algebra::rational::{binomial_i64, int};
use kpeterson::algebra::{Partition, Permutation, SymFunc};
use kpeterson::grothendieck::{dual_groth, klr_coeff, stable_groth_vars};
use kpeterson::peterson::{
    d_det, d_recursion_check, d_theta, eq2_check, grassmannian_indices, phi_apply,
    prop_6_5_check, schur_base_check, sigma_identity_check, tau_sigma, DSpec, PhiMap, SymFrac,
};
use kpeterson::schubert::{
    g_tilde, grassmannian_perm, groth_poly, k_conjugate, lambda_map, phi_quantum_groth, phi_s_q,
    quantized_schur_check, staircase_rectangle_product,
};
use kpeterson::toda::{check_point, f_invariant, random_general_point};
use kpeterson::vectors::Vectors;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::error::{CliError, CliResult};
use crate::report::{Case, Status, SuiteReport};

pub const SUITES: [&str; 13] = [
    "example-1-2",
    "remarkable-identity",
    "theorem-1-5",
    "example-7-3",
    "lambda-tables",
    "prop-5-1",
    "d-recursions",
    "lattice-identity",
    "prop-6-chain",
    "toda-roundtrip",
    "conjecture2",
    "conjecture7-4",
    "buch-cor-5-7",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n: Option<usize>,
    pub seed: u64,
    pub jobs: usize,
    pub trials: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { n: None, seed: 7, jobs: 0, trials: 100 }
    }
}

type Outcome = (Status, String, String);

struct Job {
    id: String,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

impl Job {
    fn new(id: impl Into<String>, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Job {
        Job { id: id.into(), run: Box::new(run) }
    }
}

fn compare<T: PartialEq + ToString>(lhs: T, rhs: T) -> Outcome {
    let status = if lhs == rhs { Status::Pass } else { Status::Fail };
    (status, lhs.to_string(), rhs.to_string())
}

fn flag(ok: bool, lhs: String, rhs: String) -> Outcome {
    (if ok { Status::Pass } else { Status::Fail }, lhs, rhs)
}

fn sizes(opts: &SuiteOptions, default: RangeInclusive<usize>, allowed: RangeInclusive<usize>) -> CliResult<Vec<usize>> {
    match opts.n {
        Some(n) if allowed.contains(&n) => Ok(vec![n]),
        Some(n) => Err(CliError::Usage(format!(
            "--n {n} is outside the supported range {}..={} for this suite",
            allowed.start(),
            allowed.end()
        ))),
        None => Ok(default.collect()),
    }
}

fn grassmannian_cases(n: usize) -> Vec<(usize, Partition)> {
    (1..n)
        .flat_map(|d| Partition::in_rectangle(d, n - d).into_iter().map(move |l| (d, l)))
        .collect()
}

fn example_1_2() -> Vec<Job> {
    Vectors::bundled().tau_sigma[0]
        .1
        .iter()
        .cloned()
        .map(|row| {
            Job::new(row.name.clone(), move || {
                let t = tau_sigma(3);
                let got = if row.is_tau { t.tau(row.index) } else { t.sigma(row.index) };
                compare(got.clone(), row.value.clone())
            })
        })
        .collect()
}

fn invariant_images(ns: &[usize]) -> Vec<Job> {
    ns.iter()
        .flat_map(|&n| {
            (1..=n).map(move |i| {
                Job::new(format!("n={n} i={i}"), move || {
                    let img = phi_apply(&f_invariant(n, i), n).expect("phi applies");
                    compare(img, SymFrac::constant(int(binomial_i64(n as i64, i as i64))))
                })
            })
        })
        .collect()
}

fn grassmannian_images(ns: &[usize]) -> Vec<Job> {
    ns.iter()
        .flat_map(|&n| {
            grassmannian_cases(n).into_iter().map(move |(d, lam)| {
                Job::new(format!("n={n} d={d} lambda={lam}"), move || {
                    let map = PhiMap::shared(n);
                    let w = grassmannian_perm(&lam, d, n).expect("in rectangle");
                    let lhs = phi_quantum_groth(&w)
                        .to_symfrac(map.table())
                        .mul_symfunc(map.table().tau(d));
                    let rhs = SymFrac::from_symfunc(dual_groth(&lam.complement(d, n).unwrap()));
                    compare(lhs, rhs)
                })
            })
        })
        .collect()
}

fn example_7_3() -> Vec<Job> {
    Vectors::bundled().gtilde_factored[0]
        .1
        .iter()
        .cloned()
        .map(|row| {
            Job::new(row.w.to_string(), move || {
                let rhs = row.factors.iter().fold(SymFunc::one(), |a, m| a.mul(&dual_groth(m)));
                match g_tilde(&row.w) {
                    Ok(lhs) => compare(lhs, rhs),
                    Err(e) => (Status::Fail, e.to_string(), rhs.to_string()),
                }
            })
        })
        .collect()
}

fn lambda_tables(ns: &[usize]) -> Vec<Job> {
    let v = Vectors::bundled();
    ns.iter()
        .filter_map(|&n| v.lambda_table(n))
        .flat_map(|rows| rows.iter().cloned())
        .map(|row| {
            Job::new(row.w.to_string(), move || {
                let lam = lambda_map(&row.w);
                let conj = k_conjugate(&lam);
                compare(
                    format!("{} | {}", lam.partition, conj.partition),
                    format!("{} | {}", row.lambda, row.conjugate),
                )
            })
        })
        .collect()
}

fn prop_5_1(ns: &[usize]) -> Vec<Job> {
    ns.iter()
        .flat_map(|&n| {
            (1..n.min(4)).flat_map(move |d| {
                Partition::in_rectangle(d, n - d).into_iter().map(move |lam| {
                    Job::new(format!("n={n} d={d} lambda={lam}"), move || {
                        let rect = Partition::rectangle(d, n - d);
                        let hits: Vec<String> = (0..=d * (n - d))
                            .flat_map(Partition::of_weight)
                            .filter_map(|mu| {
                                let c = klr_coeff(&lam, &mu, &rect);
                                (c != 0).then(|| format!("{mu}:{c}"))
                            })
                            .collect();
                        let vee = lam.complement(d, n).unwrap();
                        compare(hits.join(" "), format!("{vee}:1"))
                    })
                })
            })
        })
        .collect()
}

fn d_recursions(ns: &[usize], seed: u64) -> Vec<Job> {
    let mut jobs = vec![];
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64) << 32);
        for t in 0..200 {
            let d = rng.gen_range(1..=n);
            let theta = (0..d).map(|_| rng.gen_range(-2..=3)).collect();
            let a = (0..d).map(|_| rng.gen_range(0..=n)).collect();
            let spec = DSpec::new(n, theta, a).expect("valid spec");
            jobs.push(Job::new(format!("n={n} spec={t}"), move || {
                flag(
                    d_recursion_check(&spec),
                    format!("theta={:?} a={:?} D={}", spec.theta, spec.a, d_det(&spec)),
                    "recursions hold".into(),
                )
            }));
        }
        jobs.push(Job::new(format!("n={n} schur base"), move || {
            let ok = (1..=n).all(|d| schur_base_check(n, d));
            flag(ok, format!("{ok}"), "true".into())
        }));
    }
    jobs
}

fn lattice_identity(ns: Option<usize>) -> Vec<Job> {
    let pairs: Vec<(usize, usize)> = match ns {
        Some(n) => (1..n).map(|d| (n, d)).collect(),
        None => vec![(3, 1), (4, 2), (5, 2), (5, 3)],
    };
    pairs
        .into_iter()
        .map(|(n, d)| {
            Job::new(format!("n={n} d={d}"), move || {
                let c = sigma_identity_check(n, d);
                let top: Vec<i64> = (1..=d as i64).rev().collect();
                let lhs = d_det(&DSpec::new(n, top, (0..d).rev().collect()).unwrap());
                flag(
                    c.all() && eq2_check(n, d),
                    lhs.to_string(),
                    tau_sigma(n).sigma(d).to_string(),
                )
            })
        })
        .collect()
}

fn prop_6_chain(ns: &[usize], seed: u64) -> Vec<Job> {
    let mut cases: Vec<(usize, usize, Partition)> = vec![];
    for &n in ns {
        let all = grassmannian_cases(n);
        if n <= 4 {
            cases.extend(all.into_iter().map(|(d, l)| (n, d, l)));
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..20 {
                let (d, l) = all[rng.gen_range(0..all.len())].clone();
                cases.push((n, d, l));
            }
        }
    }
    cases
        .into_iter()
        .enumerate()
        .map(|(k, (n, d, lam))| {
            Job::new(format!("n={n} d={d} lambda={lam} #{k}"), move || {
                let map = PhiMap::shared(n);
                let lhs = phi_s_q(&lam, d, n).unwrap().to_symfrac(map.table());
                let theta: Vec<i64> = grassmannian_indices(&lam, d)
                    .into_iter()
                    .map(|i| d as i64 - i as i64)
                    .collect();
                let base: Vec<i64> = (0..d as i64).rev().collect();
                let rhs = SymFrac::new(d_theta(n, &theta), d_theta(n, &base));
                let ok = lhs == rhs
                    && quantized_schur_check(&lam, d, n).unwrap()
                    && prop_6_5_check(&lam, d, n);
                flag(ok, lhs.to_string(), rhs.to_string())
            })
        })
        .collect()
}

fn toda_roundtrip(ns: &[usize], trials: usize, seed: u64) -> Vec<Job> {
    let mut jobs = vec![];
    for &n in ns {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(n as u64));
        for t in 0..trials {
            let pt = random_general_point(n, &mut rng);
            jobs.push(Job::new(format!("n={n} trial={t}"), move || {
                let lhs = serde_json::to_string(&pt).expect("point serializes");
                match check_point(&pt) {
                    Ok(c) if c.all_pass() => (Status::Pass, lhs, "all checks".into()),
                    Ok(c) => (Status::Fail, lhs, format!("failed: {}", c.failures().join(", "))),
                    Err(e) => (Status::Fail, lhs, e.to_string()),
                }
            }));
        }
    }
    jobs
}

fn buch_cor_5_7(ns: &[usize]) -> Vec<Job> {
    ns.iter()
        .flat_map(|&n| {
            grassmannian_cases(n).into_iter().map(move |(d, lam)| {
                Job::new(format!("n={n} d={d} lambda={lam}"), move || {
                    let w = grassmannian_perm(&lam, d, n).unwrap();
                    compare(stable_groth_vars(&lam, d), groth_poly(&w))
                })
            })
        })
        .collect()
}

fn longest_element(ns: &[usize]) -> Vec<Job> {
    ns.iter()
        .map(|&n| {
            Job::new(format!("n={n}"), move || {
                let rhs = staircase_rectangle_product(n).to_string();
                let lhs = match g_tilde(&Permutation::longest(n)) {
                    Ok(g) => g.to_string(),
                    Err(e) => e.to_string(),
                };
                let status = match (n <= 4, lhs == rhs) {
                    (true, true) => Status::Pass,
                    (true, false) => Status::Fail,
                    (false, _) => Status::Reported,
                };
                (status, lhs, rhs)
            })
        })
        .collect()
}

/// Fiber constancy and divisibility for every `w ∈ S_n`; everything is reported.
fn fiber_table(n: usize, opts: &SuiteOptions) -> CliResult<SuiteReport> {
    let perms = Permutation::all(n);
    let timed: Vec<(Permutation, Option<SymFunc>, u64)> = pool(opts.jobs)?.install(|| {
        perms
            .par_iter()
            .map(|w| {
                let t = Instant::now();
                let g = g_tilde(w).ok().filter(|g| g.in_lambda_n(n));
                (w.clone(), g, t.elapsed().as_millis() as u64)
            })
            .collect()
    });
    let mut first: BTreeMap<String, String> = BTreeMap::new();
    let mut rows = vec![];
    let mut cases = vec![];
    for (w, g, ms) in &timed {
        let lam = lambda_map(w);
        let conj = k_conjugate(&lam);
        let gs = g.as_ref().map(|g| g.to_string());
        let rep = first
            .entry(lam.to_string())
            .or_insert_with(|| gs.clone().unwrap_or_default())
            .clone();
        rows.push(json!({
            "w": w.to_string(),
            "lambda": lam.partition.to_string(),
            "lambda_conj": conj.partition.to_string(),
            "gtilde": g,
            "divisibility": g.is_some(),
        }));
        cases.push(Case {
            id: format!("w={w}"),
            status: Status::Reported,
            lhs: gs.unwrap_or_else(|| "not divisible".into()),
            rhs: rep,
            elapsed_ms: *ms,
        });
    }
    Ok(SuiteReport {
        suite: "conjecture2".into(),
        cases,
        seed: opts.seed,
        version: env!("CARGO_PKG_VERSION").into(),
        table: Some(serde_json::Value::Array(rows)),
    })
}

fn pool(jobs: usize) -> CliResult<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {jobs} workers: {e}")))
}

/// Runs suite `name`; case order follows the job list regardless of `--jobs`.
pub fn run_suite(name: &str, opts: &SuiteOptions) -> CliResult<SuiteReport> {
    let seed = opts.seed;
    let jobs = match name {
        "example-1-2" => {
            sizes(opts, 3..=3, 3..=3)?;
            example_1_2()
        }
        "remarkable-identity" => invariant_images(&sizes(opts, 2..=5, 2..=6)?),
        "theorem-1-5" => grassmannian_images(&sizes(opts, 3..=5, 2..=6)?),
        "example-7-3" => {
            sizes(opts, 5..=5, 5..=5)?;
            example_7_3()
        }
        "lambda-tables" => lambda_tables(&sizes(opts, 4..=5, 4..=5)?),
        "prop-5-1" => prop_5_1(&sizes(opts, 2..=6, 2..=7)?),
        "d-recursions" => d_recursions(&sizes(opts, 3..=5, 2..=6)?, seed),
        "lattice-identity" => {
            sizes(opts, 3..=5, 2..=6)?;
            lattice_identity(opts.n)
        }
        "prop-6-chain" => prop_6_chain(&sizes(opts, 3..=5, 2..=5)?, seed),
        "toda-roundtrip" => toda_roundtrip(&sizes(opts, 2..=5, 2..=6)?, opts.trials, seed),
        "conjecture2" => {
            let n = sizes(opts, 5..=5, 2..=5)?[0];
            return fiber_table(n, opts);
        }
        "conjecture7-4" => longest_element(&sizes(opts, 3..=5, 2..=5)?),
        "buch-cor-5-7" => buch_cor_5_7(&sizes(opts, 2..=5, 2..=6)?),
        other => return Err(CliError::UnknownSuite(other.to_string())),
    };
    let cases = pool(opts.jobs)?.install(|| {
        jobs.par_iter()
            .map(|job| {
                let t = Instant::now();
                let (status, lhs, rhs) = (job.run)();
                Case { id: job.id.clone(), status, lhs, rhs, elapsed_ms: t.elapsed().as_millis() as u64 }
            })
            .collect()
    });
    Ok(SuiteReport {
        suite: name.to_string(),
        cases,
        seed,
        version: env!("CARGO_PKG_VERSION").into(),
        table: None,
    })
}
