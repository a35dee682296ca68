//! Command-line front end: solve single instances, build and verify
//! certificates, check certificate files, and sweep graph families.
//!
//! Exit codes: 0 success, 2 parse/usage error, 3 budget exhaustion,
//! 4 verification failure, 5 bound-violation sentinel (indicates a bug).

mod sweep;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use kdom::certificate::{
    build_certificate_with, parse_certificate, serialize_certificate, verify_certificate,
};
use kdom::graph::Graph;
use kdom::solver::{gamma_bnb_with_budget, gamma_brute, SolveResult, SolverError};

const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_VERIFY: u8 = 4;
const EXIT_BOUND_VIOLATION: u8 = 5;

#[derive(Parser)]
#[command(
    name = "kdom",
    version,
    about = "Integer domination numbers and product-bound certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Brute,
    Bnb,
}

#[derive(Subcommand)]
enum Command {
    /// Compute gamma_k of a graph from an edge-list file.
    Solve {
        /// Edge-list file (`n <count>` header, `e <u> <v>` lines).
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, value_enum, default_value = "bnb")]
        method: MethodArg,
        /// Also print the witness multiset.
        #[arg(long)]
        witness: bool,
        /// Time budget per instance in seconds.
        #[arg(long, default_value_t = 60)]
        budget_secs: u64,
    },
    /// Solve G, H and G box H, build the proof certificate, and verify it.
    Verify {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        /// Write the certificate JSON here.
        #[arg(long)]
        cert: Option<PathBuf>,
        /// Also store the recomputable Z multisets in the certificate.
        #[arg(long)]
        store_z: bool,
        /// Time budget per solve in seconds.
        #[arg(long, default_value_t = 60)]
        budget_secs: u64,
    },
    /// Re-verify an existing certificate file without solving anything.
    CheckCert { cert: PathBuf },
    /// Sweep ordered pairs of family instances, writing one CSV row each.
    Sweep {
        /// Comma-separated families: path,cycle,complete,star,grid,random.
        #[arg(long, value_delimiter = ',', required = true)]
        families: Vec<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k_max: u64,
        /// Seed for the random family.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random instances to include.
        #[arg(long, default_value_t = 0)]
        random_count: u64,
        #[arg(long)]
        out: PathBuf,
        /// Cumulative wall-clock budget in seconds; absent means unlimited.
        #[arg(long)]
        budget_secs: Option<u64>,
        /// Record measured per-instance milliseconds instead of the
        /// deterministic 0 placeholder. Measured output is not
        /// byte-reproducible across runs.
        #[arg(long)]
        timing: bool,
    },
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Solve {
            graph,
            k,
            method,
            witness,
            budget_secs,
        } => cmd_solve(&graph, k as usize, method, witness, budget_secs),
        Command::Verify {
            g,
            h,
            k,
            cert,
            store_z,
            budget_secs,
        } => cmd_verify(&g, &h, k as usize, cert.as_deref(), store_z, budget_secs),
        Command::CheckCert { cert } => cmd_check_cert(&cert),
        Command::Sweep {
            families,
            n_max,
            k_max,
            seed,
            random_count,
            out,
            budget_secs,
            timing,
        } => sweep::cmd_sweep(&sweep::SweepConfig {
            families,
            n_max: n_max as usize,
            k_max: k_max as usize,
            seed,
            random_count: random_count as usize,
            out,
            budget: budget_secs.map(Duration::from_secs),
            timing,
        }),
    }
}

fn load_graph(path: &Path) -> Result<Graph, ExitCode> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        ExitCode::from(EXIT_PARSE)
    })?;
    Graph::parse_edge_list(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(EXIT_PARSE)
    })
}

fn cmd_solve(
    path: &Path,
    k: usize,
    method: MethodArg,
    witness: bool,
    budget_secs: u64,
) -> ExitCode {
    let graph = match load_graph(path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let result = match method {
        MethodArg::Brute => match gamma_brute(&graph, k) {
            Ok(r) => r,
            Err(e @ SolverError::InstanceTooLarge { .. }) => {
                eprintln!("error: {e}; use --method bnb");
                return ExitCode::from(EXIT_BUDGET);
            }
        },
        MethodArg::Bnb => gamma_bnb_with_budget(&graph, k, Some(Duration::from_secs(budget_secs))),
    };
    println!("gamma={}", result.gamma);
    if witness {
        println!("witness={}", result.witness);
    }
    if !result.optimal {
        eprintln!(
            "error: budget of {budget_secs}s exhausted; gamma={} is the best known upper bound",
            result.gamma
        );
        return ExitCode::from(EXIT_BUDGET);
    }
    ExitCode::SUCCESS
}

/// Solves one graph within the budget, failing with exit 3 on timeout.
fn solve_within_budget(
    graph: &Graph,
    k: usize,
    budget_secs: u64,
    label: &str,
) -> Result<SolveResult, ExitCode> {
    let result = gamma_bnb_with_budget(graph, k, Some(Duration::from_secs(budget_secs)));
    if !result.optimal {
        eprintln!("error: solving {label} exceeded the {budget_secs}s budget");
        return Err(ExitCode::from(EXIT_BUDGET));
    }
    Ok(result)
}

fn cmd_verify(
    g_path: &Path,
    h_path: &Path,
    k: usize,
    cert_path: Option<&Path>,
    store_z: bool,
    budget_secs: u64,
) -> ExitCode {
    let g = match load_graph(g_path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let h = match load_graph(h_path) {
        Ok(h) => h,
        Err(code) => return code,
    };
    let product = kdom::product::ProductGraph::new(g.clone(), h.clone());
    let (solve_g, solve_h, solve_gh) = match (
        solve_within_budget(&g, k, budget_secs, "G"),
        solve_within_budget(&h, k, budget_secs, "H"),
        solve_within_budget(product.graph(), k, budget_secs, "G box H"),
    ) {
        (Ok(a), Ok(b), Ok(c)) => (a, b, c),
        (Err(code), ..) | (_, Err(code), _) | (.., Err(code)) => return code,
    };

    let cert = match build_certificate_with(&g, &h, k, &solve_g, &solve_h, &solve_gh, store_z) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: certificate construction failed: {e}");
            return ExitCode::from(EXIT_VERIFY);
        }
    };
    println!(
        "gamma_g={} gamma_h={} gamma_gh={}",
        cert.gamma_g, cert.gamma_h, cert.gamma_gh
    );
    println!(
        "chain: {} <= {} <= {} <= {}",
        cert.chain.lhs, cert.chain.sum_n, cert.chain.sum_s, cert.chain.rhs
    );
    let report = verify_certificate(&cert);
    print!("{report}");
    if let Some(path) = cert_path {
        if let Err(e) = std::fs::write(path, serialize_certificate(&cert)) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(EXIT_PARSE);
        }
        println!("certificate written to {}", path.display());
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "error: verification failed on checks {:?}",
            report.failed_checks()
        );
        ExitCode::from(EXIT_VERIFY)
    }
}

fn cmd_check_cert(path: &Path) -> ExitCode {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let cert = match parse_certificate(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE);
        }
    };
    let report = verify_certificate(&cert);
    print!("{report}");
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        eprintln!(
            "error: verification failed on checks {:?}",
            report.failed_checks()
        );
        ExitCode::from(EXIT_VERIFY)
    }
}
