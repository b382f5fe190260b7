//! `lls` — compute, enumerate, and verify stratification data of limit
//! linear series on a two-component nodal curve.

use std::fs;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lls_core::{
    build_optimal_triple, build_trace, check_admissible, classify, dimension, dimension_via_sync,
    enumerate_pairs, enumerate_triples, run_sweep, AdmissibleTriple, NonemptinessPolicy,
    StratumReport, SweepConfig, SweepReport, VanishingPair, Workers,
};

#[derive(Parser)]
#[command(
    name = "lls",
    version,
    about = "Stratification data of limit linear series on two-component nodal curves",
    after_help = "Pairs and triples are passed as inline JSON ({\"r\":1,\"d\":2,\"aY\":[1,2],\"aZ\":[1,2]})\nor as a path to a file containing that JSON."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a vanishing-sequence pair against (A1)-(A3)
    Validate {
        /// Pair as inline JSON or a file path
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide connectedness and list the witnesses at every index
    Connect {
        #[arg(long)]
        pair: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Build the dimension-maximizing admissible triple of a connected pair
    Construct {
        #[arg(long)]
        pair: String,
        /// Also emit the construction trace (witness map and index sets)
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check a triple for admissibility and evaluate its stratum dimension
    Dim {
        #[arg(long)]
        pair: String,
        /// Triple as inline JSON or a file path
        #[arg(long)]
        triple: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Enumerate all pairs of a cell (--r/--d) or all admissible triples of a pair (--pair)
    Enumerate {
        #[arg(long)]
        pair: Option<String>,
        #[arg(long)]
        r: Option<i64>,
        #[arg(long)]
        d: Option<i64>,
        /// Largest degree allowed for exhaustive enumeration
        #[arg(long, env = "LLS_BUDGET", default_value_t = 8)]
        budget: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Exhaustively verify the dimension bound and the connectedness
    /// equivalence over every pair of one (r, d) cell
    Verify {
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
        /// Largest degree allowed for sweeps
        #[arg(long, env = "LLS_BUDGET", default_value_t = 8)]
        budget: i64,
        /// Worker threads (1 = sequential; default: one per core)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        parallel: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Report moduli numbers and whether the stratum's preimage contains an
    /// open subset of the moduli space
    Classify {
        #[arg(long)]
        pair: String,
        /// Genus of the total curve
        #[arg(long, default_value_t = 0)]
        g: i64,
        /// Nonemptiness policy: assume-nonempty, assume-empty, genus-zero, or
        /// rho-heuristic
        #[arg(long, default_value = "rho-heuristic")]
        policy: NonemptinessPolicy,
        /// Exit with status 1 unless the verdict is openSubset = true
        #[arg(long)]
        expect_open: bool,
        #[arg(long, env = "LLS_BUDGET", default_value_t = 8)]
        budget: i64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Reads inline JSON (anything starting with `{`) or a file path.
fn read_json_arg(arg: &str, what: &str) -> Result<String, String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).map_err(|e| format!("cannot read {what} file {arg:?}: {e}"))
    }
}

fn parse_pair(arg: &str) -> Result<VanishingPair, String> {
    let json = read_json_arg(arg, "pair")?;
    serde_json::from_str(&json).map_err(|e| format!("invalid pair (--pair): {e}"))
}

fn parse_triple(arg: &str) -> Result<AdmissibleTriple, String> {
    let json = read_json_arg(arg, "triple")?;
    serde_json::from_str(&json).map_err(|e| format!("invalid triple (--triple): {e}"))
}

fn check_budget(d: i64, budget: i64) -> Result<(), String> {
    if d > budget {
        return Err(format!(
            "d = {d} exceeds the sweep budget {budget}; raise it with --budget or LLS_BUDGET"
        ));
    }
    Ok(())
}

fn no_csv(format: Format) -> Result<(), String> {
    if format == Format::Csv {
        return Err("--format csv is not supported for this command".into());
    }
    Ok(())
}

fn pretty<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize")
}

fn seq_text(seq: &[i64]) -> String {
    let items: Vec<String> = seq.iter().map(i64::to_string).collect();
    format!("[{}]", items.join(", "))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Validate { pair, format } => {
            no_csv(format)?;
            let pair = parse_pair(&pair)?;
            match format {
                Format::Json => println!("{}", pretty(&pair)),
                _ => println!(
                    "valid pair: r={} d={} aY={} aZ={} ({})",
                    pair.r(),
                    pair.d(),
                    seq_text(pair.a_y()),
                    seq_text(pair.a_z()),
                    if pair.is_refined() { "refined" } else { "crude" }
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Connect { pair, format } => {
            no_csv(format)?;
            let pair = parse_pair(&pair)?;
            let witnesses: Vec<_> = (0..pair.a_y().len())
                .map(|i| pair.connected_at(i).expect("index in range"))
                .collect();
            let connected = witnesses.iter().all(|w| !w.witnesses.is_empty());
            match format {
                Format::Json => {
                    let out = serde_json::json!({
                        "connected": connected,
                        "witnesses": witnesses,
                    });
                    println!("{}", pretty(&out));
                }
                _ => {
                    for w in &witnesses {
                        println!("i={}: witnesses {}", w.i, seq_text(&w.witnesses));
                    }
                    println!("connected: {connected}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { pair, trace, format } => {
            no_csv(format)?;
            let pair = parse_pair(&pair)?;
            let triple = build_optimal_triple(&pair).map_err(|e| e.to_string())?;
            let dim = dimension(&pair, &triple).expect("constructed triple is admissible");
            let sigma = pair.ramification_sum();
            match format {
                Format::Json => {
                    let mut out = serde_json::json!({
                        "triple": triple,
                        "dimension": dim,
                        "sigma": sigma,
                    });
                    if trace {
                        let summary = build_trace(&pair).expect("connected").summary();
                        out["trace"] = serde_json::to_value(summary).expect("trace serializes");
                    }
                    println!("{}", pretty(&out));
                }
                _ => {
                    println!("betaY = {}", seq_text(&triple.beta_y));
                    println!("betaZ = {}", seq_text(&triple.beta_z));
                    println!("eps   = {}", seq_text(&triple.eps));
                    println!("dimension = {dim} (sigma = {sigma})");
                    if trace {
                        let summary = build_trace(&pair).expect("connected").summary();
                        println!("witness map = {}", seq_text(&summary.frak_j));
                        println!("cuts J      = {}", seq_text(&summary.j));
                        let sizes: Vec<String> =
                            summary.i_sizes.iter().map(usize::to_string).collect();
                        println!("|I_k|       = [{}]", sizes.join(", "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dim { pair, triple, format } => {
            no_csv(format)?;
            let pair = parse_pair(&pair)?;
            let triple = parse_triple(&triple)?;
            let violations = check_admissible(&pair, &triple).map_err(|e| e.to_string())?;
            if !violations.is_empty() {
                match format {
                    Format::Json => {
                        let out = serde_json::json!({
                            "admissible": false,
                            "violations": violations,
                        });
                        println!("{}", pretty(&out));
                    }
                    _ => {
                        for v in &violations {
                            println!("violated {} at j = {}", v.cond, v.j);
                        }
                    }
                }
                return Err(format!(
                    "triple is not admissible ({} violation(s))",
                    violations.len()
                ));
            }
            let dim = dimension(&pair, &triple).expect("admissible");
            let via_sync = dimension_via_sync(&pair, &triple).expect("admissible");
            let sigma = pair.ramification_sum();
            match format {
                Format::Json => {
                    let out = serde_json::json!({
                        "admissible": true,
                        "dimension": dim,
                        "dimensionViaSync": via_sync,
                        "sigma": sigma,
                    });
                    println!("{}", pretty(&out));
                }
                _ => {
                    println!("admissible: true");
                    println!("dimension = {dim} (via sync: {via_sync}, sigma = {sigma})");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            pair,
            r,
            d,
            budget,
            format,
        } => {
            no_csv(format)?;
            match (pair, r, d) {
                (Some(pair), None, None) => {
                    let pair = parse_pair(&pair)?;
                    check_budget(pair.d(), budget)?;
                    let triples = enumerate_triples(&pair);
                    eprintln!("{} admissible triple(s)", triples.len());
                    match format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string(&triples).expect("triples serialize")
                        ),
                        _ => {
                            for t in &triples {
                                println!(
                                    "betaY={} betaZ={} eps={}",
                                    seq_text(&t.beta_y),
                                    seq_text(&t.beta_z),
                                    seq_text(&t.eps)
                                );
                            }
                        }
                    }
                }
                (None, Some(r), Some(d)) => {
                    check_budget(d, budget)?;
                    let pairs: Vec<_> = enumerate_pairs(r, d)
                        .map_err(|e| e.to_string())?
                        .collect();
                    eprintln!("{} pair(s)", pairs.len());
                    match format {
                        Format::Json => println!(
                            "{}",
                            serde_json::to_string(&pairs).expect("pairs serialize")
                        ),
                        _ => {
                            for p in &pairs {
                                println!("aY={} aZ={}", seq_text(p.a_y()), seq_text(p.a_z()));
                            }
                        }
                    }
                }
                _ => {
                    return Err(
                        "pass either --pair (triples) or both --r and --d (pairs)".into()
                    )
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            r,
            d,
            budget,
            parallel,
            format,
        } => {
            check_budget(d, budget)?;
            let workers = match parallel {
                None => Workers::Default,
                Some(1) => Workers::Sequential,
                Some(n) => Workers::Count(n as usize),
            };
            let config = SweepConfig {
                upper_bound: true,
                equivalence: true,
                workers,
            };
            eprintln!("verifying r={r} d={d} (dimension bound + equivalence)");
            let tick = move |done: u64, total: u64| {
                if done.is_multiple_of(512) || done == total {
                    eprintln!("  {done}/{total} pairs checked");
                }
            };
            let report = run_sweep(r, d, &config, Some(&tick)).map_err(|e| e.to_string())?;
            print_sweep_report(&report, format);
            Ok(if report.is_clean() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Classify {
            pair,
            g,
            policy,
            expect_open,
            budget,
            format,
        } => {
            let pair = parse_pair(&pair)?;
            check_budget(pair.d(), budget)?;
            let report = classify(&pair, g, policy).map_err(|e| e.to_string())?;
            print_stratum_report(&report, format);
            Ok(if expect_open && !report.open_subset {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn print_sweep_report(report: &SweepReport, format: Format) {
    match format {
        Format::Json => println!("{}", pretty(report)),
        Format::Csv => {
            println!("{}", SweepReport::csv_header());
            println!("{}", report.csv_row());
        }
        Format::Text => {
            println!(
                "r={} d={}: {} pairs, {} triples checked",
                report.r, report.d, report.pairs_checked, report.triples_checked
            );
            println!(
                "dimension bound: {} violation(s)",
                report.violations.len()
            );
            for v in &report.violations {
                println!(
                    "  D = {} > sigma = {} for pair aY={} aZ={} triple betaY={} betaZ={} eps={}",
                    v.lhs,
                    v.rhs,
                    seq_text(v.pair.a_y()),
                    seq_text(v.pair.a_z()),
                    seq_text(&v.triple.beta_y),
                    seq_text(&v.triple.beta_z),
                    seq_text(&v.triple.eps)
                );
            }
            println!(
                "equivalence: {} failure(s)",
                report.equivalence_failures.len()
            );
            for f in &report.equivalence_failures {
                println!(
                    "  pair aY={} aZ={}: max D = {}, sigma = {}, connected = {} ({:?})",
                    seq_text(f.pair.a_y()),
                    seq_text(f.pair.a_z()),
                    f.max_dimension,
                    f.sigma,
                    f.connected,
                    f.reason
                );
            }
            println!(
                "verdict: {}",
                if report.is_clean() {
                    "verified"
                } else {
                    "counterexamples found"
                }
            );
        }
    }
}

fn print_stratum_report(report: &StratumReport, format: Format) {
    match format {
        Format::Json => println!("{}", pretty(report)),
        Format::Csv => {
            println!("{}", StratumReport::csv_header());
            println!("{}", report.csv_row());
        }
        Format::Text => {
            println!("rho = {}", report.rho);
            println!("sigma = {}", report.sigma);
            println!("ehDim = {}", report.eh_dim);
            println!("fiberMax = {}", report.fiber_max);
            println!("total = {}", report.total);
            println!("connected = {}", report.connected);
            println!("refined = {}", report.refined);
            println!(
                "nonempty = {} (policy {}{})",
                report.nonempty,
                report.nonempty_policy,
                if report.nonempty_policy.is_heuristic() {
                    "; heuristic, not a theorem"
                } else {
                    ""
                }
            );
            println!("openSubset = {}", report.open_subset);
        }
    }
}
