use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kpeterson_cli::compute::{self, Output};
use kpeterson_cli::{run_suite, CliError, CliResult, SuiteOptions};

#[derive(Parser)]
#[command(name = "kpeterson", version, about = "Exact computations around the K-theoretic Peterson map")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Size of the flag variety / symmetric group.
    #[arg(long, global = true)]
    n: Option<usize>,
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Worker threads for suites (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dual stable Grothendieck polynomial g_λ in the h-basis.
    Gdual { lambda: String },
    /// K-theoretic Littlewood-Richardson coefficient c^ν_{λμ}.
    Klr { lambda: String, mu: String, nu: String },
    /// Stable Grothendieck polynomial in d variables.
    Gstable { lambda: String, d: usize },
    /// Image of a polynomial in z, x, Q under Φ_n.
    Phi {
        #[arg(long)]
        poly: String,
    },
    /// τ_i and σ_i for 1 ≤ i < n.
    Tau,
    /// The determinant D[θ; a].
    Ddet {
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
        #[arg(long)]
        a: Option<String>,
    },
    /// Grothendieck polynomial of w.
    Groth { w: String },
    /// Quantum Grothendieck polynomial of w.
    Qgroth { w: String },
    /// Numerator of Φ_n(𝔊^Q_w) after clearing the descent τ's.
    Gtilde { w: String },
    /// k-bounded partition attached to w.
    LambdaMap { w: String },
    /// k-conjugate of a k-bounded partition.
    Kconj {
        mu: String,
        #[arg(long)]
        k: usize,
    },
    /// Random α/β round trips on the Toda side.
    TodaRoundtrip {
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Run a named verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

fn emit(g: &Global, body: String) -> CliResult<()> {
    match &g.out {
        Some(path) => std::fs::write(path, body + "\n").map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            println!("{body}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> CliResult<bool> {
    let g = &cli.global;
    let n = g.n;
    let out: Output = match &cli.cmd {
        Cmd::Verify { suite, trials } => {
            let opts = SuiteOptions { n, seed: g.seed, jobs: g.jobs, trials: *trials };
            let report = run_suite(suite, &opts)?;
            let body = if g.text { report.to_text() } else { report.to_json() };
            emit(g, body)?;
            return Ok(report.failed() == 0);
        }
        Cmd::Gdual { lambda } => compute::gdual(lambda)?,
        Cmd::Klr { lambda, mu, nu } => compute::klr(lambda, mu, nu)?,
        Cmd::Gstable { lambda, d } => compute::gstable(lambda, *d)?,
        Cmd::Phi { poly } => compute::phi(n, poly)?,
        Cmd::Tau => compute::tau(n)?,
        Cmd::Ddet { theta, a } => compute::ddet(n, theta, a.as_deref())?,
        Cmd::Groth { w } => compute::groth(w, n)?,
        Cmd::Qgroth { w } => compute::qgroth(w, n)?,
        Cmd::Gtilde { w } => compute::gtilde(w, n)?,
        Cmd::LambdaMap { w } => compute::lambda(w, n)?,
        Cmd::Kconj { mu, k } => compute::kconj(mu, *k)?,
        Cmd::TodaRoundtrip { trials } => {
            let o = compute::toda_roundtrip(n, *trials, g.seed)?;
            let ok = o.json["failures"].as_array().is_some_and(|f| f.is_empty());
            emit(g, if g.text { o.text } else { o.json.to_string() })?;
            return Ok(ok);
        }
    };
    emit(g, if g.text { out.text } else { out.json.to_string() })?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
