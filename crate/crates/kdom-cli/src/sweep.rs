//! Family sweep: enumerate ordered pairs of generated instances, certify
//! each one, and emit a deterministic CSV.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use kdom::certificate::{build_certificate, verify_certificate};
use kdom::graph::{Family, Graph};
use kdom::product::ProductGraph;
use kdom::solver::gamma_bnb_with_budget;

use crate::{EXIT_BOUND_VIOLATION, EXIT_BUDGET, EXIT_PARSE};

pub const CSV_HEADER: &str =
    "family_g,params_g,family_h,params_h,k,gamma_g,gamma_h,gamma_product,lhs,rhs,ratio,cert_ok,millis";

/// Probability used for the `random` family in sweeps.
const SWEEP_GNP_P: f64 = 0.5;

/// Per-solve cap inside a sweep, independent of the cumulative budget.
const PER_SOLVE_BUDGET: Duration = Duration::from_secs(60);

pub struct SweepConfig {
    pub families: Vec<String>,
    pub n_max: usize,
    pub k_max: usize,
    pub seed: u64,
    pub random_count: usize,
    pub out: PathBuf,
    pub budget: Option<Duration>,
    pub timing: bool,
}

/// Expands one family name into its deterministic instance list.
fn family_instances(
    name: &str,
    n_max: usize,
    seed: u64,
    random_count: usize,
) -> Result<Vec<Family>, String> {
    let mut out = Vec::new();
    match name {
        "path" => out.extend((1..=n_max).map(|n| Family::Path { n })),
        "cycle" => out.extend((3..=n_max).map(|n| Family::Cycle { n })),
        "complete" => out.extend((1..=n_max).map(|n| Family::Complete { n })),
        "star" => out.extend((1..=n_max).map(|n| Family::Star { n })),
        "grid" => {
            for rows in 1..=n_max {
                for cols in rows..=n_max {
                    if rows * cols <= n_max {
                        out.push(Family::Grid { rows, cols });
                    }
                }
            }
        }
        "random" => {
            for idx in 0..random_count {
                out.push(Family::RandomGnp {
                    n: (idx % n_max) + 1,
                    p: SWEEP_GNP_P,
                    seed: seed + idx as u64,
                });
            }
        }
        other => return Err(format!("unknown family {other:?}")),
    }
    Ok(out)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact rational plus a 6-decimal float, e.g. `1/4=0.250000`.
fn format_ratio(lhs: usize, rhs: usize) -> String {
    let d = gcd(lhs, rhs).max(1);
    format!("{}/{}={:.6}", lhs / d, rhs / d, lhs as f64 / rhs as f64)
}

struct PoolEntry {
    family: Family,
    graph: Graph,
}

pub fn cmd_sweep(config: &SweepConfig) -> ExitCode {
    let start = Instant::now();
    let mut pool = Vec::new();
    for name in &config.families {
        let instances = match family_instances(name, config.n_max, config.seed, config.random_count)
        {
            Ok(i) => i,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_PARSE);
            }
        };
        for family in instances {
            match family.generate() {
                Ok(graph) => pool.push(PoolEntry { family, graph }),
                Err(e) => {
                    eprintln!("error: generating {} {}: {e}", name, family.params());
                    return ExitCode::from(EXIT_PARSE);
                }
            }
        }
    }
    if pool.is_empty() {
        eprintln!("error: family list produced no instances");
        return ExitCode::from(EXIT_PARSE);
    }

    let mut rows = vec![CSV_HEADER.to_string()];
    let flush = |rows: &[String], flag: Option<&str>| -> std::io::Result<()> {
        let mut text = rows.join("\n");
        text.push('\n');
        if let Some(flag) = flag {
            text.push_str(flag);
            text.push('\n');
        }
        std::fs::write(&config.out, text)
    };

    for entry_g in &pool {
        for entry_h in &pool {
            for k in 1..=config.k_max {
                if let Some(budget) = config.budget {
                    if start.elapsed() > budget {
                        eprintln!(
                            "error: cumulative budget of {}s exceeded; partial CSV flushed",
                            budget.as_secs()
                        );
                        let _ = flush(&rows, Some("# aborted: cumulative budget exceeded"));
                        return ExitCode::from(EXIT_BUDGET);
                    }
                }
                let row_start = Instant::now();
                let product = ProductGraph::new(entry_g.graph.clone(), entry_h.graph.clone());
                let solve_g = gamma_bnb_with_budget(&entry_g.graph, k, Some(PER_SOLVE_BUDGET));
                let solve_h = gamma_bnb_with_budget(&entry_h.graph, k, Some(PER_SOLVE_BUDGET));
                let solve_gh = gamma_bnb_with_budget(product.graph(), k, Some(PER_SOLVE_BUDGET));
                if !(solve_g.optimal && solve_h.optimal && solve_gh.optimal) {
                    eprintln!("error: per-instance solve budget exceeded; partial CSV flushed");
                    let _ = flush(&rows, Some("# aborted: solve budget exceeded"));
                    return ExitCode::from(EXIT_BUDGET);
                }

                let lhs = solve_g.gamma * solve_h.gamma;
                let rhs = 2 * k * solve_gh.gamma;
                let cert_ok = match build_certificate(
                    &entry_g.graph,
                    &entry_h.graph,
                    k,
                    &solve_g,
                    &solve_h,
                    &solve_gh,
                ) {
                    Ok(cert) => verify_certificate(&cert).all_passed(),
                    Err(e) => {
                        eprintln!(
                            "error: certificate construction failed on ({} {}, {} {}, k={k}): {e}",
                            entry_g.family.name(),
                            entry_g.family.params(),
                            entry_h.family.name(),
                            entry_h.family.params()
                        );
                        false
                    }
                };
                let millis = if config.timing {
                    row_start.elapsed().as_millis()
                } else {
                    0
                };
                rows.push(format!(
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    entry_g.family.name(),
                    entry_g.family.params(),
                    entry_h.family.name(),
                    entry_h.family.params(),
                    k,
                    solve_g.gamma,
                    solve_h.gamma,
                    solve_gh.gamma,
                    lhs,
                    rhs,
                    format_ratio(lhs, rhs),
                    cert_ok,
                    millis
                ));

                if lhs > rhs {
                    eprintln!(
                        "error: bound violated on ({} {}, {} {}, k={k}): {lhs} > {rhs}; this is a bug",
                        entry_g.family.name(),
                        entry_g.family.params(),
                        entry_h.family.name(),
                        entry_h.family.params()
                    );
                    let _ = flush(&rows, Some("# aborted: bound violation"));
                    return ExitCode::from(EXIT_BOUND_VIOLATION);
                }
            }
        }
    }

    match flush(&rows, None) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: cannot write {}: {e}", config.out.display());
            ExitCode::from(EXIT_PARSE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ratio_reduces_the_fraction() {
        assert_eq!(format_ratio(1, 4), "1/4=0.250000");
        assert_eq!(format_ratio(4, 8), "1/2=0.500000");
        assert_eq!(format_ratio(6, 6), "1/1=1.000000");
        assert_eq!(format_ratio(0, 8), "0/1=0.000000");
    }

    #[test]
    fn families_expand_deterministically() {
        let paths = family_instances("path", 3, 0, 0).unwrap();
        assert_eq!(paths.len(), 3);
        let cycles = family_instances("cycle", 4, 0, 0).unwrap();
        assert_eq!(cycles.len(), 2); // n = 3, 4
        let randoms = family_instances("random", 2, 7, 3).unwrap();
        assert_eq!(randoms.len(), 3);
        assert!(family_instances("moebius", 3, 0, 0).is_err());
    }
}
