//! Command-line front end for the superelliptic invariant library.
//!
//! One verb per artifact: curve-level invariants (`genus`, `ranks`, `cw`),
//! family-level invariants (`invariants`, `lambda`, `slope`, `bound`), the
//! brute-force arithmetic check (`lemma3101`), and the case-analysis
//! machinery (`nu-table`, `candidates`, `exclude`, `sweep`).
//!
//! JSON is the default output mode and is byte-stable: struct keys are
//! emitted in a fixed order and every collection is sorted, so identical
//! invocations produce identical bytes.  `--text` renders the same content
//! for reading, with constraint anchors inline.
//!
//! Exit codes: 0 on success, 1 on invalid input (including usage errors),
//! 2 if an internal identity check fails.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use superelliptic::{
    composite_candidates, cw_dimension, degenerate_quotient_bound, delta_decomposition,
    eigen_rank_vector, genus, lambda_compact, lambda_noncompact, nu_table, rank_a_upper_bound,
    relative_invariants, run_exclusion, slope_deficit, verify_unit_fraction_lemma,
    DeltaDecomposition, Error, ExclusionReport, Outcome, Rational, Regime, RelativeInvariants,
    SingularityIndexTable, SuperellipticDatum, Verdict,
};

#[derive(Parser)]
#[command(
    name = "superelliptic",
    version,
    about = "Exact invariants of superelliptic curves and their semi-stable families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit a human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    text: bool,
}

fn parse_regime(s: &str) -> Result<Regime, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Genus of the curve y^n = F(x) with deg F = alpha0.
    Genus {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha0: u64,
    },
    /// Eigenspace rank vector e_1 .. e_{n-1} of the Hodge bundle.
    Ranks {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha0: u64,
    },
    /// Eigenspace dimension of an arbitrary branch datum (one residue per
    /// branch point, residues summing to 0 mod n).
    Cw {
        #[arg(long)]
        n: u64,
        /// Comma-separated local monodromy residues.
        #[arg(long, value_delimiter = ',', required = true)]
        residues: Vec<u64>,
        /// Character index in 1..n.
        #[arg(long)]
        i: u64,
    },
    /// Relative invariants of the family described by an index table file.
    Invariants {
        /// Path to a JSON singularity-index table.
        #[arg(long)]
        indices: PathBuf,
    },
    /// Slope coefficient lambda of a cell in the chosen regime.
    Lambda {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha0: u64,
        #[arg(long, value_parser = parse_regime)]
        regime: Regime,
    },
    /// Slope deficit omega^2 - lambda deg - 2 delta_1 - 3 delta_h of a
    /// table in the chosen regime.
    Slope {
        /// Path to a JSON singularity-index table.
        #[arg(long)]
        indices: PathBuf,
        #[arg(long, value_parser = parse_regime)]
        regime: Regime,
    },
    /// Upper bound (4g - 4) / lambda on the ample rank, plus the
    /// degenerate-quotient bound where one exists.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha0: u64,
        #[arg(long, value_parser = parse_regime)]
        regime: Regime,
    },
    /// Brute-force verification of the fractional-part bound at a prime.
    Lemma3101 {
        #[arg(long)]
        p: u64,
        /// Scan sequence lengths up to this value (default: p).
        #[arg(long)]
        beta_max: Option<u64>,
    },
    /// The nu statistic of every composite candidate cell.
    NuTable,
    /// Composite cells of genus >= g-min whose proper quotients all have
    /// genus < g-min.
    Candidates {
        #[arg(long, default_value_t = 8)]
        g_min: u64,
    },
    /// Full exclusion report for one cell.
    Exclude {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        alpha0: u64,
    },
    /// Exclusion reports for every candidate cell, one JSON object per
    /// line, ordered by (n, alpha0).
    Sweep {
        #[arg(long, default_value_t = 8)]
        g_min: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let text = cli.text;
    match run(cli.command, text) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::InvalidInput(_) => ExitCode::from(1),
                Error::IdentityFailure(_) => ExitCode::from(2),
            }
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn read_table(path: &PathBuf) -> Result<SingularityIndexTable, Error> {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&raw)
        .map_err(|e| Error::InvalidInput(format!("cannot parse {}: {e}", path.display())))
}

fn run(command: Command, text: bool) -> Result<String, Error> {
    match command {
        Command::Genus { n, alpha0 } => Ok(format!("{}\n", genus(n, alpha0)?)),
        Command::Ranks { n, alpha0 } => {
            let v = eigen_rank_vector(&SuperellipticDatum::new(n, alpha0)?)?;
            if text {
                let mut out = render_datum(&v.datum);
                for (k, e) in v.e.iter().enumerate() {
                    writeln!(out, "e_{} = {e}", k + 1).unwrap();
                }
                Ok(out)
            } else {
                Ok(pretty(&v))
            }
        }
        Command::Cw { n, residues, i } => Ok(format!("{}\n", cw_dimension(n, &residues, i)?)),
        Command::Invariants { indices } => {
            let t = read_table(&indices)?;
            let inv = relative_invariants(&t)?;
            let nodes = delta_decomposition(&t)?;
            if text {
                Ok(render_invariants(t.datum(), &inv, &nodes))
            } else {
                #[derive(Serialize)]
                struct Out<'a> {
                    datum: &'a SuperellipticDatum,
                    invariants: RelativeInvariants,
                    nodes: DeltaDecomposition,
                }
                Ok(pretty(&Out {
                    datum: t.datum(),
                    invariants: inv,
                    nodes,
                }))
            }
        }
        Command::Lambda { n, alpha0, regime } => {
            let value = match regime {
                Regime::Compact => lambda_compact(&SuperellipticDatum::new(n, alpha0)?)?,
                Regime::Noncompact => lambda_noncompact(n, alpha0)?,
            };
            Ok(render_rational(&value, text))
        }
        Command::Slope { indices, regime } => {
            let t = read_table(&indices)?;
            Ok(render_rational(&slope_deficit(&t, regime)?, text))
        }
        Command::Bound { n, alpha0, regime } => {
            let d = SuperellipticDatum::new(n, alpha0)?;
            let rank = rank_a_upper_bound(&d, regime)?;
            let degenerate = (n % 2 == 0 && alpha0 % 2 == 0 && alpha0 % n != 0)
                .then(|| degenerate_quotient_bound(&d))
                .transpose()?;
            if text {
                let mut out = format!("rank bound = {rank}\n");
                if let Some(b) = degenerate {
                    writeln!(out, "degenerate quotient bound = {b}").unwrap();
                }
                Ok(out)
            } else {
                #[derive(Serialize)]
                struct Out {
                    rank_bound: Rational,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    degenerate_quotient_bound: Option<Rational>,
                }
                Ok(pretty(&Out {
                    rank_bound: rank,
                    degenerate_quotient_bound: degenerate,
                }))
            }
        }
        Command::Lemma3101 { p, beta_max } => {
            let rep = verify_unit_fraction_lemma(p, beta_max)?;
            if text {
                let mut out = format!(
                    "p = {}, beta <= {}: {} counterexamples\n",
                    rep.p,
                    rep.beta_max,
                    rep.counterexamples.len()
                );
                for pb in &rep.per_beta {
                    writeln!(
                        out,
                        "beta = {}: {} sequences, max theta = {} (bound {}), {} extremal",
                        pb.beta, pb.sequences, pb.max_theta, pb.bound, pb.extremal_count
                    )
                    .unwrap();
                }
                Ok(out)
            } else {
                Ok(pretty(&rep))
            }
        }
        Command::NuTable => {
            let table = nu_table()?;
            if text {
                let mut out = String::new();
                for cell in &table {
                    writeln!(out, "({}, {}): nu = {}", cell.n, cell.alpha0, cell.nu).unwrap();
                }
                Ok(out)
            } else {
                Ok(pretty(&table))
            }
        }
        Command::Candidates { g_min } => {
            let cells = composite_candidates(g_min)?;
            if text {
                let mut out = String::new();
                for (n, alpha0) in &cells {
                    writeln!(out, "({n}, {alpha0})").unwrap();
                }
                Ok(out)
            } else {
                Ok(pretty(&cells))
            }
        }
        Command::Exclude { n, alpha0 } => {
            let rep = run_exclusion(n, alpha0)?;
            if text {
                Ok(render_report(&rep))
            } else {
                Ok(pretty(&rep))
            }
        }
        Command::Sweep { g_min } => {
            let mut out = String::new();
            for (n, alpha0) in composite_candidates(g_min)? {
                let rep = run_exclusion(n, alpha0)?;
                if text {
                    writeln!(
                        out,
                        "({n}, {alpha0}): {}",
                        render_verdict(rep.verdict)
                    )
                    .unwrap();
                } else {
                    let line = serde_json::to_string(&rep).expect("serializable report");
                    out.push_str(&line);
                    out.push('\n');
                }
            }
            Ok(out)
        }
    }
}

fn render_datum(d: &SuperellipticDatum) -> String {
    let a_inf = d
        .a_inf
        .map_or_else(|| "none".to_string(), |a| a.to_string());
    format!(
        "datum: n = {}, alpha0 = {} (alpha = {}, r_inf = {}, a_inf = {}, g = {})\n",
        d.n, d.alpha0, d.alpha, d.r_inf, a_inf, d.g
    )
}

fn render_rational(value: &Rational, text: bool) -> String {
    if text {
        format!("{value}\n")
    } else {
        format!("\"{value}\"\n")
    }
}

fn render_invariants(
    d: &SuperellipticDatum,
    inv: &RelativeInvariants,
    nodes: &DeltaDecomposition,
) -> String {
    let mut out = render_datum(d);
    writeln!(out, "omega^2 = {}", inv.omega2).unwrap();
    writeln!(out, "deg = {}", inv.deg_hodge).unwrap();
    writeln!(
        out,
        "delta = {} (delta_0 = {}, delta_1 = {}, delta_h = {})",
        inv.delta, nodes.delta0, nodes.delta1, nodes.deltah
    )
    .unwrap();
    out
}

fn render_verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Excluded => "excluded",
        Verdict::NotDecided => "not-decided",
    }
}

fn render_report(rep: &ExclusionReport) -> String {
    let mut out = render_datum(&rep.datum);
    writeln!(out, "assumptions: {}", rep.assumptions.join(", ")).unwrap();
    for s in &rep.steps {
        let outcome = match s.outcome {
            Outcome::Holds => "holds",
            Outcome::Violated => "violated",
        };
        writeln!(
            out,
            "{} [{}] {} {} {}: {outcome}",
            s.id, s.anchor, s.lhs, s.cmp, s.rhs
        )
        .unwrap();
    }
    writeln!(out, "verdict: {}", render_verdict(rep.verdict)).unwrap();
    out
}
