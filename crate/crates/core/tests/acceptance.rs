//! Exit gate: one line per criterion, non-zero exit if any asserted criterion fails.

use std::collections::BTreeMap;
use std::time::Instant;

use kpeterson::algebra::rational::{binomial_i64, int};
use kpeterson::algebra::{Partition, Permutation, Rational, SymFunc};
use kpeterson::grothendieck::{dual_groth, klr_coeff, stable_groth_vars};
use kpeterson::peterson::{
    d_recursion_check, eq2_check, phi_apply, phi_apply_at, prop_6_5_check, schur_base_check,
    sigma_identity_check, tau_sigma, DSpec, SymFrac,
};
use kpeterson::schubert::{
    g_tilde, grassmannian_image_check, grassmannian_perm, groth_poly, k_conjugate, lambda_map,
    phi_s_q_check, quantized_schur_check, quantum_groth, staircase_rectangle_product,
};
use kpeterson::toda::{
    check_class, check_point, f_invariant, random_general_point, random_nonzero_rational,
    random_unipotent_phi, SpectralParams,
};
use kpeterson::vectors::Vectors;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Outcome {
    Pass(String),
    Fail(String),
    Reported(String),
}

type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn c1_tau_sigma() -> Outcome {
    let table = tau_sigma(3);
    let rows = &Vectors::bundled().tau_sigma[0].1;
    let bad: Vec<_> = rows
        .iter()
        .filter(|r| {
            let got = if r.is_tau { table.tau(r.index) } else { table.sigma(r.index) };
            *got != r.value
        })
        .map(|r| r.name.clone())
        .collect();
    check(bad.is_empty(), format!("{} values, mismatches {:?}", rows.len(), bad))
}

fn c2_invariant_images() -> Outcome {
    let mut bad = vec![];
    let mut count = 0;
    for n in 2..=5 {
        for i in 1..=n {
            count += 1;
            let img = phi_apply(&f_invariant(n, i), n).expect("phi applies");
            if img != SymFrac::constant(int(binomial_i64(n as i64, i as i64))) {
                bad.push((n, i));
            }
        }
    }
    check(bad.is_empty(), format!("{count} identities, failures {bad:?}"))
}

fn random_h(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    (0..3 * n).map(|_| random_nonzero_rational(rng)).collect()
}

fn c3_grassmannian() -> Outcome {
    let mut count = 0;
    let mut bad = vec![];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 3..=5 {
        for d in 1..n {
            for lam in Partition::in_rectangle(d, n - d) {
                count += 1;
                if !grassmannian_image_check(&lam, d, n).expect("in rectangle") {
                    bad.push(format!("{lam}/{d}/{n}"));
                }
                if n == 5 {
                    // second route: direct substitution evaluated at a random point
                    let w = grassmannian_perm(&lam, d, n).unwrap();
                    let q = quantum_groth(&w);
                    let vee = dual_groth(&lam.complement(d, n).unwrap());
                    let tau = tau_sigma(n).tau(d).clone();
                    let agrees = loop {
                        let h = random_h(&mut rng, n);
                        if let Ok(v) = phi_apply_at(&q, n, &h) {
                            break v * tau.poly().eval(&h) == vee.poly().eval(&h);
                        }
                    };
                    if !agrees {
                        bad.push(format!("{lam}/{d}/{n} pointwise"));
                    }
                }
            }
        }
    }
    check(bad.is_empty(), format!("{count} identities, failures {bad:?}"))
}

fn c4_factored_table() -> Outcome {
    let rows = &Vectors::bundled().gtilde_factored[0].1;
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| {
            let expected = r
                .factors
                .iter()
                .fold(SymFunc::one(), |acc, mu| acc.mul(&dual_groth(mu)));
            g_tilde(&r.w).ok() != Some(expected)
        })
        .map(|r| r.w.to_string())
        .collect();
    check(bad.is_empty(), format!("{} rows, failures {bad:?}", rows.len()))
}

fn c5_lambda_tables() -> Outcome {
    let mut count = 0;
    let mut bad = vec![];
    for n in [4, 5] {
        for row in Vectors::bundled().lambda_table(n).expect("table present") {
            count += 1;
            let lam = lambda_map(&row.w);
            let conj = k_conjugate(&lam);
            if lam.partition != row.lambda || conj.partition != row.conjugate {
                bad.push(row.w.to_string());
            }
        }
    }
    check(bad.is_empty(), format!("{count} rows, failures {bad:?}"))
}

fn c6_klr_rectangle() -> Outcome {
    let mut count = 0;
    let mut bad = vec![];
    for n in 2..=6usize {
        for d in 1..n.min(4) {
            let rect = Partition::rectangle(d, n - d);
            let mus: Vec<Partition> = (0..=d * (n - d)).flat_map(Partition::of_weight).collect();
            for lam in Partition::in_rectangle(d, n - d) {
                let vee = lam.complement(d, n).unwrap();
                for mu in &mus {
                    count += 1;
                    let expected = u64::from(*mu == vee);
                    if klr_coeff(&lam, mu, &rect) != expected {
                        bad.push(format!("{lam};{mu};{d}x{}", n - d));
                    }
                }
            }
        }
    }
    check(bad.is_empty(), format!("{count} coefficients, failures {bad:?}"))
}

fn random_spec(rng: &mut ChaCha8Rng, n: usize) -> DSpec {
    let d = rng.gen_range(1..=n);
    let theta = (0..d).map(|_| rng.gen_range(-2..=3)).collect();
    let a = (0..d).map(|_| rng.gen_range(0..=n)).collect();
    DSpec::new(n, theta, a).expect("valid spec")
}

fn c7_d_family() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = vec![];
    for n in 3..=5 {
        for _ in 0..200 {
            let s = random_spec(&mut rng, n);
            if !d_recursion_check(&s) {
                bad.push(format!("{s:?}"));
            }
        }
        for d in 1..=n {
            if !schur_base_check(n, d) {
                bad.push(format!("schur base n={n} d={d}"));
            }
        }
    }
    for (n, d) in [(3, 1), (4, 2), (5, 2), (5, 3)] {
        let c = sigma_identity_check(n, d);
        if !c.all() || !eq2_check(n, d) {
            bad.push(format!("lattice identity n={n} d={d}: {c:?}"));
        }
    }
    check(bad.is_empty(), format!("600 random specs plus lattice identities, failures {bad:?}"))
}

fn c8_chain() -> Outcome {
    let mut bad = vec![];
    let mut count = 0;
    let mut run = |lam: &Partition, d: usize, n: usize| {
        count += 1;
        let ok = quantized_schur_check(lam, d, n).unwrap()
            && phi_s_q_check(lam, d, n).unwrap()
            && prop_6_5_check(lam, d, n);
        if !ok {
            bad.push(format!("{lam}/{d}/{n}"));
        }
    };
    for n in 3..=4 {
        for d in 1..n {
            for lam in Partition::in_rectangle(d, n - d) {
                run(&lam, d, n);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let pool: Vec<(Partition, usize)> = (1..5)
        .flat_map(|d| Partition::in_rectangle(d, 5 - d).into_iter().map(move |l| (l, d)))
        .collect();
    for _ in 0..20 {
        let (lam, d) = &pool[rng.gen_range(0..pool.len())];
        run(lam, *d, 5);
    }
    check(bad.is_empty(), format!("{count} triples, failures {bad:?}"))
}

fn c9_toda() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut bad = vec![];
    for n in 2..=5 {
        for t in 0..100 {
            let pt = random_general_point(n, &mut rng);
            match check_point(&pt) {
                Ok(c) if c.all_pass() => {}
                Ok(c) => bad.push(format!("n={n} point {t}: {:?}", c.failures())),
                Err(e) => bad.push(format!("n={n} point {t}: {e}")),
            }
            let phi = random_unipotent_phi(n, &mut rng);
            match check_class(&SpectralParams::unipotent(n), &phi) {
                Ok(c) if c.all_pass() => {}
                Ok(c) => bad.push(format!("n={n} class {t}: {:?}", c.failures())),
                Err(e) => bad.push(format!("n={n} class {t}: {e}")),
            }
        }
    }
    check(bad.is_empty(), format!("400 points and 400 classes, failures {bad:?}"))
}

fn c10_fibers() -> Outcome {
    let mut fibers: BTreeMap<String, Vec<(Permutation, SymFunc)>> = BTreeMap::new();
    let mut not_divisible = vec![];
    for w in Permutation::all(5) {
        match g_tilde(&w) {
            Ok(g) if g.in_lambda_n(5) => {
                fibers.entry(lambda_map(&w).to_string()).or_default().push((w, g))
            }
            _ => not_divisible.push(w.to_string()),
        }
    }
    let split: Vec<&String> = fibers
        .iter()
        .filter(|(_, ws)| ws.iter().any(|(_, g)| *g != ws[0].1))
        .map(|(k, _)| k)
        .collect();
    let detail = format!(
        "{} fibers, non-constant {split:?}, not divisible {not_divisible:?}",
        fibers.len()
    );
    if split.is_empty() && not_divisible.is_empty() {
        Outcome::Reported(format!("holds: {detail}"))
    } else {
        Outcome::Reported(format!("counterexample: {detail}"))
    }
}

fn c11_restriction() -> Outcome {
    let mut count = 0;
    let mut bad = vec![];
    for n in 2..=5 {
        for d in 1..n {
            for lam in Partition::in_rectangle(d, n - d) {
                count += 1;
                let w = grassmannian_perm(&lam, d, n).unwrap();
                if stable_groth_vars(&lam, d) != groth_poly(&w) {
                    bad.push(format!("{lam}/{d}/{n}"));
                }
            }
        }
    }
    check(bad.is_empty(), format!("{count} identities, failures {bad:?}"))
}

fn c12_longest() -> Outcome {
    for n in 3..=4 {
        if g_tilde(&Permutation::longest(n)).ok() != Some(staircase_rectangle_product(n)) {
            return Outcome::Fail(format!("n={n}"));
        }
    }
    let five = g_tilde(&Permutation::longest(5)).ok() == Some(staircase_rectangle_product(5));
    Outcome::Reported(format!("n=3,4 hold; n=5 {}", if five { "holds" } else { "fails" }))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("tau/sigma at n=3", c1_tau_sigma),
        ("Phi(F_i) = C(n,i), n=2..5", c2_invariant_images),
        ("Grassmannian images, n=3..5", c3_grassmannian),
        ("factored g~_w table, n=5", c4_factored_table),
        ("lambda-map and k-conjugate tables", c5_lambda_tables),
        ("K-LR coefficients against rectangles", c6_klr_rectangle),
        ("D-family recursions and lattice identities", c7_d_family),
        ("quantized Schur chain", c8_chain),
        ("Toda round trips and minor formulas", c9_toda),
        ("g~_w fibers and divisibility, S_5", c10_fibers),
        ("stable Grothendieck restriction, n<=5", c11_restriction),
        ("g~_{w0} rectangle product", c12_longest),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let ms = t.elapsed().as_millis();
        let (tag, detail) = match outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Outcome::Reported(d) => ("REPORTED", d),
        };
        println!("criterion {:>2} {tag:<8} {name} ({ms} ms): {detail}", i + 1);
    }
    if failed > 0 {
        eprintln!("{failed} criteria failed");
        std::process::exit(1);
    }
}
