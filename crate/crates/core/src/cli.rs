//! Command-line front end: parse graphs, run solves, and emit reports.
//!
//! Subcommands: `compute` (full minimum-rank solve), `bounds` (zero-forcing
//! bounds only, no algebra), `witness` (random rational witness search),
//! `rank` (exact rank of a matrix file), and `trace` (per-level replay with
//! optional basis dumps).  Reports go to stdout, diagnostics to stderr.
//! Exit codes: 0 for success with an exact answer, 2 for input errors, 3
//! for honest non-exact outcomes (an undecided solve or an unsuccessful
//! witness search).

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::graph::{
    connected_components, parse_edge_list, parse_graph6, zero_forcing_number, Graph,
};
use crate::groebner::{buchberger, BuchbergerOutcome, GroebnerCaps};
use crate::linalg::parse_matrix;
use crate::minors::{enumerate_minors, rabinowitsch_system};
use crate::poly::MonomialOrder;
use crate::solver::{
    find_witness, minimum_rank, IterationRecord, LevelVerdict, SolveOptions, SolveReport,
    SolveStatus, Strategy, ZERO_FORCING_LIMIT,
};

const EXIT_OK: i32 = 0;
const EXIT_INPUT: i32 = 2;
const EXIT_INEXACT: i32 = 3;

#[derive(Parser)]
#[command(
    name = "minrank",
    about = "Exact minimum rank of simple graphs over the reals",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute mr(G), maximum nullity, and maximum multiplicity.
    Compute(ComputeArgs),
    /// Print zero-forcing based bounds without running any algebra.
    Bounds(BoundsArgs),
    /// Search for a rational matrix in the pattern with rank at most a target.
    Witness(WitnessArgs),
    /// Print the exact rank of a rational matrix.
    Rank(RankArgs),
    /// Replay the level-by-level solve with per-level detail.
    Trace(TraceArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Graph: a file path or an inline string (graph6, or `u v` edge lines).
    input: String,
    /// Input format; inferred when omitted (a single token is graph6).
    #[arg(long, value_enum)]
    format: Option<GraphFormat>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Linear,
    #[value(alias = "binary")]
    BinarySearch,
}

#[derive(Args)]
struct SolveArgs {
    /// Seed for the witness search.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Witness entries are drawn from [-BOUND, BOUND].
    #[arg(long, default_value_t = 4)]
    bound: i64,
    /// Witness attempt budget.
    #[arg(long, default_value_t = 100_000)]
    attempts: u64,
    /// Monomial order for the Groebner engine.
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
    /// Level scan strategy.
    #[arg(long, value_enum, default_value_t = StrategyArg::Linear)]
    strategy: StrategyArg,
    /// Disable the zero-forcing lower bound (scan every level).
    #[arg(long)]
    no_bounds: bool,
    /// Skip the witness search (report the complex layer only).
    #[arg(long)]
    no_witness: bool,
    /// Solve the graph whole instead of per connected component.
    #[arg(long)]
    no_decompose: bool,
    /// Pending S-pair budget for the Groebner engine.
    #[arg(long)]
    max_pairs: Option<u64>,
    /// Per-polynomial term budget for the Groebner engine.
    #[arg(long)]
    max_terms: Option<usize>,
    /// Total-degree budget for the Groebner engine.
    #[arg(long)]
    max_degree: Option<u32>,
    /// Coefficient-size budget (bits) for the Groebner engine.
    #[arg(long)]
    max_coeff_bits: Option<u64>,
    /// Worker threads for the witness search (default: MINRANK_THREADS or 1).
    #[arg(long)]
    threads: Option<usize>,
}

impl SolveArgs {
    fn to_options(&self) -> SolveOptions {
        let mut caps = GroebnerCaps::default();
        if let Some(v) = self.max_pairs {
            caps.max_pairs = v;
        }
        if let Some(v) = self.max_terms {
            caps.max_terms = v;
        }
        if let Some(v) = self.max_degree {
            caps.max_degree = v;
        }
        if let Some(v) = self.max_coeff_bits {
            caps.max_coeff_bits = v;
        }
        let threads = self.threads.unwrap_or_else(|| {
            std::env::var("MINRANK_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(1)
        });
        SolveOptions {
            order: match self.order {
                OrderArg::Grevlex => MonomialOrder::GrevLex,
                OrderArg::Lex => MonomialOrder::Lex,
            },
            strategy: match self.strategy {
                StrategyArg::Linear => Strategy::Linear,
                StrategyArg::BinarySearch => Strategy::BinarySearch,
            },
            use_bounds: !self.no_bounds,
            witness_search: !self.no_witness,
            witness_coeff_bound: self.bound,
            witness_attempts: self.attempts,
            random_seed: self.seed,
            caps,
            decompose_components: !self.no_decompose,
            threads: threads.max(1),
        }
    }
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    solve: SolveArgs,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct WitnessArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    solve: SolveArgs,
    /// Target rank; when omitted the minimum rank is computed first.
    #[arg(long)]
    rank: Option<usize>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RankArgs {
    /// Matrix: a file path or an inline string (rows of integers or `p/q`).
    input: String,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TraceArgs {
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    solve: SolveArgs,
    /// Trace only this level instead of scanning.
    #[arg(long)]
    k: Option<usize>,
    /// Print every element of each reduced basis.
    #[arg(long)]
    dump_gb: bool,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

/// Entry point for the `minrank` binary: parses `std::env::args` and runs
/// the selected command, returning the process exit code.
pub fn run_from_env() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Bounds(args) => cmd_bounds(&args),
        Command::Witness(args) => cmd_witness(&args),
        Command::Rank(args) => cmd_rank(&args),
        Command::Trace(args) => cmd_trace(&args),
    }
}

/// Resolves a CLI input to text: the contents of the file it names, or the
/// string itself when no such file exists.
fn resolve_input(input: &str) -> Result<String, String> {
    if Path::new(input).is_file() {
        fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))
    } else {
        Ok(input.to_string())
    }
}

fn load_graph(source: &GraphInput) -> Result<Graph, String> {
    let text = resolve_input(&source.input)?;
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty graph input".into());
    }
    let format = source.format.unwrap_or_else(|| {
        if trimmed.split_whitespace().nth(1).is_none() && !trimmed.contains('=') {
            GraphFormat::Graph6
        } else {
            GraphFormat::Edges
        }
    });
    match format {
        GraphFormat::Graph6 => parse_graph6(trimmed).map_err(|e| e.to_string()),
        GraphFormat::Edges => parse_edge_list(&text).map_err(|e| e.to_string()),
    }
}

fn fail_input(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_INPUT
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// `u128` counts that exceed the JSON-safe integer range become strings.
fn count_value(v: u128) -> Value {
    u64::try_from(v).map_or_else(|_| json!(v.to_string()), |n| json!(n))
}

fn status_name(status: SolveStatus) -> &'static str {
    match status {
        SolveStatus::Exact => "EXACT",
        SolveStatus::Undecided => "UNDECIDED",
        SolveStatus::LowerBoundOnly => "LOWER_BOUND_ONLY",
    }
}

fn witness_rows(report: &SolveReport) -> Value {
    match &report.witness {
        None => Value::Null,
        Some(w) => json!((0..w.rows())
            .map(|i| (0..w.cols()).map(|j| w.get(i, j).to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>()),
    }
}

fn iteration_json(rec: &IterationRecord) -> Value {
    let (gb_trivial, skipped) = match &rec.verdict {
        LevelVerdict::SkippedByBound => (json!(true), true),
        LevelVerdict::Trivial => (json!(true), false),
        LevelVerdict::Solvable => (json!(false), false),
        LevelVerdict::Undecided(_) => (json!("UNDECIDED"), false),
    };
    json!({
        "k": rec.k,
        "minors_total": count_value(rec.minors_total),
        "minors_distinct": rec.minors_distinct,
        "gb_trivial": gb_trivial,
        "skipped_by_bound": skipped,
        "elapsed_ms": ms(rec.elapsed),
    })
}

fn report_json(report: &SolveReport) -> Value {
    json!({
        "n": report.n,
        "status": status_name(report.status),
        "mr": report.mr_complex,
        "mr_certified_real": report.certified_real,
        "mr_lower": report.mr_lower,
        "mr_upper": report.mr_upper,
        "max_nullity": report.max_nullity,
        "max_multiplicity": report.max_multiplicity,
        "zero_forcing": report.zero_forcing,
        "lower_bound": report.lower_bound_used,
        "witness": witness_rows(report),
        "iterations": report.iterations.iter().map(iteration_json).collect::<Vec<_>>(),
        "components": report.components.iter().map(report_json).collect::<Vec<_>>(),
    })
}

fn verdict_text(verdict: &LevelVerdict) -> String {
    match verdict {
        LevelVerdict::SkippedByBound => "skipped by bound".into(),
        LevelVerdict::Trivial => "trivial".into(),
        LevelVerdict::Solvable => "solvable".into(),
        LevelVerdict::Undecided(report) => format!("undecided ({})", report.reason),
    }
}

fn print_iterations(out: &mut String, report: &SolveReport) {
    if report.iterations.is_empty() {
        return;
    }
    let _ = writeln!(out, "iterations:");
    for rec in &report.iterations {
        let distinct = rec
            .minors_distinct
            .map_or("-".to_string(), |d| d.to_string());
        let _ = writeln!(
            out,
            "  k = {:<3} minors {:<8} distinct {:<6} {:<18} {:>9.2} ms",
            rec.k,
            rec.minors_total,
            distinct,
            verdict_text(&rec.verdict),
            ms(rec.elapsed),
        );
    }
}

fn print_report(report: &SolveReport) {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}", report.n);
    if let (Some(z), Some(lb)) = (report.zero_forcing, report.lower_bound_used) {
        let _ = writeln!(out, "zero forcing number Z = {z}; lower bound mr >= {lb}");
    }
    if report.components.len() > 1 {
        let _ = writeln!(out, "components: {}", report.components.len());
        for (idx, comp) in report.components.iter().enumerate() {
            let _ = writeln!(
                out,
                "  component {idx}: n = {}, mr = {}",
                comp.n,
                comp.mr_complex
                    .map_or_else(|| format!("[{}, {}]", comp.mr_lower, comp.mr_upper), |v| v.to_string()),
            );
        }
    }
    print_iterations(&mut out, report);
    let _ = writeln!(out, "status: {}", status_name(report.status));
    match report.mr_complex {
        Some(mr) => {
            let _ = writeln!(out, "mr(G) = {mr}");
            let _ = writeln!(out, "maximum nullity M(G) = {}", report.n - mr);
            let _ = writeln!(out, "maximum multiplicity = {}", report.n - mr);
        }
        None => {
            let _ = writeln!(
                out,
                "mr(G) in [{}, {}] (not decided)",
                report.mr_lower, report.mr_upper
            );
        }
    }
    let _ = writeln!(
        out,
        "certified over the reals: {}",
        if report.certified_real { "yes" } else { "no" }
    );
    if let Some(w) = &report.witness {
        let _ = writeln!(out, "witness (rank {}):", w.rank());
        let _ = write!(out, "{w}");
    }
    print!("{out}");
}

fn cmd_compute(args: &ComputeArgs) -> i32 {
    let graph = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return fail_input(&e),
    };
    let opts = args.solve.to_options();
    let report = minimum_rank(&graph, &opts);
    if args.json {
        let mut value = report_json(&report);
        value["schema_version"] = json!(1);
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print_report(&report);
    }
    if report.status == SolveStatus::Exact {
        EXIT_OK
    } else {
        eprintln!(
            "minimum rank not decided exactly: status {}",
            status_name(report.status)
        );
        EXIT_INEXACT
    }
}

fn cmd_bounds(args: &BoundsArgs) -> i32 {
    let graph = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return fail_input(&e),
    };
    let n = graph.n();
    let z = zero_forcing_number(&graph);
    let components = connected_components(&graph).len();
    let lower = n - z;
    let upper = n - components;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema_version": 1,
                "n": n,
                "zero_forcing_number": z,
                "lower_bound": lower,
                "upper_bound": upper,
            }))
            .expect("serializable")
        );
    } else {
        println!("n = {n}");
        println!("zero forcing number Z = {z}");
        println!("lower bound: mr >= {lower}   (n - Z)");
        println!("upper bound: mr <= {upper}   (n - number of components)");
    }
    EXIT_OK
}

fn cmd_witness(args: &WitnessArgs) -> i32 {
    let graph = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return fail_input(&e),
    };
    let opts = args.solve.to_options();
    let target = match args.rank {
        Some(r) => r,
        None => {
            let report = minimum_rank(&graph, &opts);
            match report.mr_complex {
                Some(mr) => {
                    eprintln!("no --rank supplied; using computed mr = {mr}");
                    mr
                }
                None => {
                    eprintln!(
                        "error: minimum rank undecided (status {}); supply --rank",
                        status_name(report.status)
                    );
                    return EXIT_INEXACT;
                }
            }
        }
    };
    let witness = find_witness(&graph, target, &opts);
    match witness {
        Some(w) => {
            assert!(w.pattern_matches(&graph), "witness must match the pattern");
            let rank = w.rank();
            assert!(rank <= target, "witness rank must be at most the target");
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema_version": 1,
                        "n": graph.n(),
                        "rank_target": target,
                        "found": true,
                        "rank": rank,
                        "matrix": (0..w.rows())
                            .map(|i| (0..w.cols()).map(|j| w.get(i, j).to_string()).collect::<Vec<_>>())
                            .collect::<Vec<_>>(),
                    }))
                    .expect("serializable")
                );
            } else {
                eprintln!("witness of rank {rank} (target {target})");
                print!("{w}");
            }
            EXIT_OK
        }
        None => {
            if args.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "schema_version": 1,
                        "n": graph.n(),
                        "rank_target": target,
                        "found": false,
                        "rank": Value::Null,
                        "matrix": Value::Null,
                    }))
                    .expect("serializable")
                );
            } else {
                println!("none found");
            }
            eprintln!(
                "no rank <= {target} witness in {} attempts (bound {})",
                opts.witness_attempts, opts.witness_coeff_bound
            );
            EXIT_INEXACT
        }
    }
}

fn cmd_rank(args: &RankArgs) -> i32 {
    let text = match resolve_input(&args.input) {
        Ok(t) => t,
        Err(e) => return fail_input(&e),
    };
    let matrix = match parse_matrix(&text) {
        Ok(m) => m,
        Err(e) => return fail_input(&e.to_string()),
    };
    let rank = matrix.rank();
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema_version": 1,
                "rows": matrix.rows(),
                "cols": matrix.cols(),
                "rank": rank,
            }))
            .expect("serializable")
        );
    } else {
        println!("{rank}");
    }
    EXIT_OK
}

fn cmd_trace(args: &TraceArgs) -> i32 {
    let graph = match load_graph(&args.graph) {
        Ok(g) => g,
        Err(e) => return fail_input(&e),
    };
    let opts = args.solve.to_options();
    let n = graph.n();
    let (zero_forcing, k_start) = if opts.use_bounds && n <= ZERO_FORCING_LIMIT && n > 0 {
        let z = zero_forcing_number(&graph);
        (Some(z), (n - z) + 1)
    } else {
        (None, 1)
    };
    let levels: Vec<usize> = match args.k {
        Some(k) => {
            if k == 0 || k > n {
                return fail_input(&format!("level k = {k} outside 1..={n}"));
            }
            vec![k]
        }
        None => (k_start..=n).collect(),
    };
    let mut rows: Vec<Value> = Vec::new();
    if let Some(z) = zero_forcing {
        if args.k.is_none() {
            println!(
                "zero forcing number Z = {z}; levels below k = {k_start} are \
                 provably trivial and skipped"
            );
        }
    }
    for &k in &levels {
        let start = std::time::Instant::now();
        let level = enumerate_minors(&graph, k, opts.order);
        let system = rabinowitsch_system(&graph, &level, opts.order);
        let outcome = buchberger(&system, &opts.caps);
        let elapsed = start.elapsed();
        let distinct = level.distinct.len();
        let (verdict, basis_size, basis_polys): (&str, Option<usize>, Option<Vec<String>>) =
            match &outcome {
                BuchbergerOutcome::Completed(basis) => {
                    let dump = args
                        .dump_gb
                        .then(|| basis.polys().iter().map(|p| p.to_string()).collect());
                    if basis.is_trivial() {
                        ("TRIVIAL", Some(basis.len()), dump)
                    } else {
                        ("SOLVABLE", Some(basis.len()), dump)
                    }
                }
                BuchbergerOutcome::Exhausted(_) => ("UNDECIDED", None, None),
            };
        if args.json {
            rows.push(json!({
                "k": k,
                "minors_total": count_value(level.all_count),
                "minors_distinct": distinct,
                "system_size": system.len(),
                "verdict": verdict,
                "basis_size": basis_size,
                "basis": basis_polys,
                "elapsed_ms": ms(elapsed),
            }));
        } else {
            println!(
                "k = {k}: {} total minors, {distinct} distinct, system of {} generators",
                level.all_count,
                system.len()
            );
            match &outcome {
                BuchbergerOutcome::Completed(basis) => {
                    if basis.is_trivial() {
                        println!(
                            "  basis = {{1}}: no matrix of rank <= {} exists ({:.2} ms)",
                            k - 1,
                            ms(elapsed)
                        );
                    } else {
                        println!(
                            "  basis of {} elements: rank <= {} is attainable ({:.2} ms)",
                            basis.len(),
                            k - 1,
                            ms(elapsed)
                        );
                    }
                    if let Some(polys) = &basis_polys {
                        for p in polys {
                            println!("    {p}");
                        }
                    }
                }
                BuchbergerOutcome::Exhausted(report) => {
                    println!(
                        "  undecided: {} (pairs {}, basis {}, {:.2} ms)",
                        report.reason, report.pairs_processed, report.basis_size, ms(elapsed)
                    );
                }
            }
        }
        if args.k.is_none() && matches!(&outcome, BuchbergerOutcome::Completed(b) if !b.is_trivial())
        {
            if !args.json {
                println!("first solvable level k = {k}: mr = {}", k - 1);
            }
            break;
        }
    }
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "schema_version": 1,
                "n": n,
                "zero_forcing": zero_forcing,
                "levels": rows,
            }))
            .expect("serializable")
        );
    }
    EXIT_OK
}
