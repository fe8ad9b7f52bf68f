//! `nkgenus` — command-line front end for the nkgenus library.
//!
//! Subcommands: `formula` (closed-form values), `table` (the four standard
//! grids), `check` (matching-extendability deciders with witnesses),
//! `embed` (face tracing and the Euler-contribution report), and `genus`
//! (exact exhaustive minimum genus, Euler-formula lower bound, and seeded
//! hill-climbing upper bound).
//!
//! Exit codes: 0 ok/holds, 1 fails, 2 not applicable, 3 work limit
//! exceeded, 64 usage or input error. All output for a fixed command line
//! is byte-identical across runs and thread counts.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use nkgenus::embedding::{
    control_points, euler_genus_lower_bound, genus_upper_bound_search, min_genus_exhaustive,
    trace_faces, verify_control_lemma, verify_degree_bound, EmbeddingError, RotationSystem,
    DEFAULT_SEARCH_BUDGET,
};
use nkgenus::extendability::{
    check_bipartite_bound, check_louyu_dichotomy, check_nk_basics, check_plummer_basics,
    is_k_extendable, is_n_factor_critical, is_nk_graph, DeciderError, Verdict, DEFAULT_WORK_CAP,
};
use nkgenus::formulas::{
    complete_graph_genus, emit_table, genus_nk, invert_genus_table, mu_extendability, mu_nk, rho,
    FormulaTable, Surface, TableKind, TableSpec,
};
use nkgenus::graph::{parse_graph, Graph, GraphError, GraphFormat};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_FAILS: u8 = 1;
const EXIT_NOT_APPLICABLE: u8 = 2;
const EXIT_CAP: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "nkgenus",
    version,
    about = "Extendability formulas, genus tables, matching deciders, and embedding analysis"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for all randomized behavior.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Work limit for the enumeration deciders (perfect-matching tests).
    #[arg(long, default_value_t = DEFAULT_WORK_CAP, global = true)]
    cap: u64,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one closed-form value.
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Emit one of the four standard tables.
    Table(TableArgs),
    /// Decide a matching property of an input graph, with witnesses.
    Check {
        #[command(subcommand)]
        property: CheckCmd,
    },
    /// Trace an embedding and report faces, contributions, and verdicts.
    Embed(EmbedArgs),
    /// Minimum-genus analysis: exhaustive scan, lower bound, or search.
    Genus(GenusArgs),
}

#[derive(Subcommand)]
enum FormulaCmd {
    /// Extendability threshold mu(n, surface).
    MuNk {
        #[arg(long)]
        n: u64,
        /// Surface name: S<g> or N<g>.
        #[arg(long)]
        surface: String,
    },
    /// Extendability threshold mu(surface) for plain k-extendability.
    MuExt {
        #[arg(long)]
        surface: String,
    },
    /// Factor-criticality threshold rho(surface).
    Rho {
        #[arg(long)]
        surface: String,
    },
    /// Minimum genus carrying an (n,k)-graph.
    GenusNk {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
        #[command(flatten)]
        orientability: Orientability,
    },
    /// Minimum genus of the complete graph on n vertices.
    KnGenus {
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        orientability: Orientability,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Orientability {
    /// Orientable surfaces S_g.
    #[arg(long)]
    orientable: bool,
    /// Non-orientable surfaces N_g.
    #[arg(long)]
    nonorientable: bool,
}

impl Orientability {
    fn orientable(&self) -> bool {
        self.orientable
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFamily {
    /// Minimum genus g(n,k) or g~(n,k).
    Genus,
    /// Extendability threshold mu(n, S_g) or mu(n, N_g).
    Mu,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    family: TableFamily,
    #[command(flatten)]
    orientability: Orientability,
    /// First row (deletion count n). Default 1.
    #[arg(long)]
    n_min: Option<u64>,
    /// Last row. Default 8.
    #[arg(long)]
    n_max: Option<u64>,
    /// First column (k for genus tables, genus for mu tables).
    #[arg(long)]
    col_min: Option<u64>,
    /// Last column.
    #[arg(long)]
    col_max: Option<u64>,
    /// Also verify the closed form against brute-force table inversion.
    #[arg(long)]
    check_duality: bool,
}

#[derive(Subcommand)]
enum CheckCmd {
    /// Is the graph k-extendable?
    Extendable {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
        /// Also run the structural consequence suites.
        #[arg(long)]
        suites: bool,
    },
    /// Is the graph n-factor-critical?
    FactorCritical {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        suites: bool,
    },
    /// Is the graph an (n,k)-graph?
    Nk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        suites: bool,
    },
}

#[derive(Args)]
struct GraphInput {
    /// Graph file path, or '-' for standard input.
    #[arg(long)]
    graph: String,
    /// Input format; auto-detected when omitted.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct EmbedArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Rotation-system file (vertex lines `v: w1 w2 ...`, optional
    /// negative-edge line `-: u1 v1, u2 v2`).
    #[arg(long)]
    rotation: PathBuf,
    /// Deletion count for the degree-bound verdict (needs --k too).
    #[arg(long)]
    n: Option<usize>,
    /// Extendability count for the degree-bound verdict (needs --n too).
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenusMode {
    /// Exact minimum over all rotation systems (edge-capped).
    Exhaustive,
    /// Euler-formula lower bound only.
    Bound,
    /// Seeded hill-climbing upper bound, bracketed by the lower bound.
    Search,
}

#[derive(Args)]
struct GenusArgs {
    #[command(flatten)]
    input: GraphInput,
    #[arg(long, value_enum)]
    mode: GenusMode,
    #[command(flatten)]
    orientability: Orientability,
    /// Evaluation budget for search mode.
    #[arg(long)]
    budget: Option<u64>,
    /// Override the edge cap of exhaustive mode.
    #[arg(long)]
    edge_cap: Option<usize>,
    /// Write the witness rotation system to this file.
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

/// A terminating problem: message for stderr plus process exit code.
struct Failure {
    code: u8,
    message: String,
}

type RunResult = Result<u8, Failure>;

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

fn from_graph_error(e: GraphError) -> Failure {
    match e {
        GraphError::ScanCapExceeded { .. } => Failure { code: EXIT_CAP, message: e.to_string() },
        _ => usage(e.to_string()),
    }
}

fn from_embedding_error(e: EmbeddingError) -> Failure {
    match e {
        EmbeddingError::ExhaustiveCapExceeded { .. } => {
            Failure { code: EXIT_CAP, message: e.to_string() }
        }
        _ => usage(e.to_string()),
    }
}

/// Die quietly when a downstream pipe consumer such as `head` closes our
/// stdout, instead of panicking on the failed write.
#[cfg(unix)]
fn reset_sigpipe() {
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(EXIT_USAGE);
        }
        // The pool can only be configured once; later calls are harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> RunResult {
    match &cli.command {
        Command::Formula { which } => run_formula(which, cli.format),
        Command::Table(args) => run_table(args, cli.format),
        Command::Check { property } => run_check(property, cli.format, cli.cap),
        Command::Embed(args) => run_embed(args, cli.format),
        Command::Genus(args) => run_genus(args, cli.format, cli.seed),
    }
}

// ---------------------------------------------------------------------------
// formula

fn parse_surface(name: &str) -> Result<Surface, Failure> {
    Surface::parse(name).map_err(|e| usage(e.to_string()))
}

fn run_formula(cmd: &FormulaCmd, format: Format) -> RunResult {
    let (op, params, value, expression): (&str, Value, u64, &str) = match cmd {
        FormulaCmd::MuNk { n, surface } => {
            let s = parse_surface(surface)?;
            let value = mu_nk(*n, s).map_err(|e| usage(e.to_string()))?;
            let expression = if s.is_sphere() {
                "max(0, 3 - ceil(n/2))"
            } else {
                "max(0, floor((7 - 2n + sqrt(49 - 24*chi)) / 4))"
            };
            ("mu-nk", json!({ "n": n, "surface": s.to_string() }), value, expression)
        }
        FormulaCmd::MuExt { surface } => {
            let s = parse_surface(surface)?;
            let expression = if s.is_sphere() { "3" } else { "2 + floor(sqrt(4 - 2*chi))" };
            ("mu-ext", json!({ "surface": s.to_string() }), mu_extendability(s), expression)
        }
        FormulaCmd::Rho { surface } => {
            let s = parse_surface(surface)?;
            let expression = if s.is_sphere() { "5" } else { "floor((5 + sqrt(49 - 24*chi)) / 2)" };
            ("rho", json!({ "surface": s.to_string() }), rho(s), expression)
        }
        FormulaCmd::GenusNk { n, k, orientability } => {
            let orientable = orientability.orientable();
            let value = genus_nk(*n, *k, orientable).map_err(|e| usage(e.to_string()))?;
            let expression = if orientable {
                "0 if n + 2k <= 4 else ceil((n + 2k - 1)(n + 2k - 2) / 12)"
            } else {
                "1 if n + 2k <= 4 else ceil((n + 2k - 1)(n + 2k - 2) / 6)"
            };
            ("genus-nk", json!({ "n": n, "k": k, "orientable": orientable }), value, expression)
        }
        FormulaCmd::KnGenus { n, orientability } => {
            let orientable = orientability.orientable();
            let value = complete_graph_genus(*n, orientable).map_err(|e| usage(e.to_string()))?;
            let expression = if orientable {
                "ceil((n - 3)(n - 4) / 12)"
            } else {
                "ceil((n - 3)(n - 4) / 6), with 1 for n <= 4 and 3 for n = 7"
            };
            ("kn-genus", json!({ "n": n, "orientable": orientable }), value, expression)
        }
    };
    match format {
        Format::Text => println!("{value}"),
        Format::Json => print_json(&json!({
            "op": op,
            "parameters": params,
            "value": value,
            "formula": expression,
        })),
        Format::Csv => print!("value\n{value}\n"),
    }
    Ok(EXIT_OK)
}

// ---------------------------------------------------------------------------
// table

fn run_table(args: &TableArgs, format: Format) -> RunResult {
    let kind = match (args.family, args.orientability.orientable()) {
        (TableFamily::Genus, true) => TableKind::GenusOrientable,
        (TableFamily::Genus, false) => TableKind::GenusNonorientable,
        (TableFamily::Mu, true) => TableKind::MuOrientable,
        (TableFamily::Mu, false) => TableKind::MuNonorientable,
    };
    let default = TableSpec::default_for(kind);
    let n_range = args.n_min.unwrap_or(*default.n_range.start())
        ..=args.n_max.unwrap_or(*default.n_range.end());
    let col_range = args.col_min.unwrap_or(*default.col_range.start())
        ..=args.col_max.unwrap_or(*default.col_range.end());
    let spec = TableSpec::new(kind, n_range, col_range).map_err(|e| usage(e.to_string()))?;
    let table = emit_table(&spec).map_err(|e| usage(e.to_string()))?;

    let duality = if args.check_duality { Some(check_duality(&table)) } else { None };

    match format {
        Format::Text => {
            print!("{}", render_table_text(&table));
            match &duality {
                Some(Ok(cells)) => println!("duality: holds ({cells} thresholds checked)"),
                Some(Err(msg)) => println!("duality: fails ({msg})"),
                None => {}
            }
        }
        Format::Json => {
            let mut doc = json!({
                "kind": table.spec.kind,
                "n_range": [table.spec.n_range.start(), table.spec.n_range.end()],
                "col_range": [table.spec.col_range.start(), table.spec.col_range.end()],
                "cells": table.cells,
            });
            if let Some(result) = &duality {
                doc["duality"] = match result {
                    Ok(cells) => json!({ "holds": true, "thresholds_checked": cells }),
                    Err(msg) => json!({ "holds": false, "detail": msg }),
                };
            }
            print_json(&doc);
        }
        Format::Csv => print!("{}", render_table_csv(&table)),
    }
    match duality {
        Some(Err(_)) => Ok(EXIT_FAILS),
        _ => Ok(EXIT_OK),
    }
}

/// Verify mu against brute-force inversion of the genus formula for every
/// row of the emitted slice and every genus up to the largest cell (genus
/// tables) or the column range (mu tables). Returns the number of
/// thresholds compared.
fn check_duality(table: &FormulaTable) -> Result<u64, String> {
    let orientable = table.spec.kind.is_orientable();
    let mut checked = 0u64;
    for n in table.spec.n_range.clone() {
        let max_genus = if table.spec.kind.is_genus_table() {
            table.cells.iter().flatten().copied().max().unwrap_or(0)
        } else {
            *table.spec.col_range.end()
        };
        let min_genus = if orientable { 0 } else { 1 };
        for g in min_genus..=max_genus {
            let surface = if orientable {
                Surface::orientable(g)
            } else {
                Surface::non_orientable(g).expect("non-zero genus")
            };
            let closed = mu_nk(n, surface).map_err(|e| e.to_string())?;
            let scanned = invert_genus_table(n, g, orientable).map_err(|e| e.to_string())?;
            if closed != scanned {
                return Err(format!(
                    "n={n} {surface}: closed form {closed} != inversion {scanned}"
                ));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn corner_label(kind: TableKind) -> &'static str {
    match kind {
        TableKind::GenusOrientable | TableKind::GenusNonorientable => "n\\k",
        TableKind::MuOrientable => "n\\g",
        TableKind::MuNonorientable => "n\\g~",
    }
}

fn render_table_text(table: &FormulaTable) -> String {
    let cols: Vec<u64> = table.spec.col_range.clone().collect();
    let rows: Vec<u64> = table.spec.n_range.clone().collect();
    let corner = corner_label(table.spec.kind);
    let label_width = rows.iter().map(|n| n.to_string().len()).chain([corner.len()]).max().unwrap();
    let col_widths: Vec<usize> = cols
        .iter()
        .enumerate()
        .map(|(c, col)| {
            table
                .cells
                .iter()
                .map(|row| row[c].to_string().len())
                .chain([col.to_string().len()])
                .max()
                .unwrap()
        })
        .collect();
    let mut out = String::new();
    write!(out, "{corner:>label_width$}").unwrap();
    for (c, col) in cols.iter().enumerate() {
        write!(out, " {:>width$}", col, width = col_widths[c]).unwrap();
    }
    out.push('\n');
    for (r, n) in rows.iter().enumerate() {
        write!(out, "{n:>label_width$}").unwrap();
        for (c, _) in cols.iter().enumerate() {
            write!(out, " {:>width$}", table.cells[r][c], width = col_widths[c]).unwrap();
        }
        out.push('\n');
    }
    out
}

fn render_table_csv(table: &FormulaTable) -> String {
    let mut out = String::new();
    out.push('n');
    for col in table.spec.col_range.clone() {
        write!(out, ",{col}").unwrap();
    }
    out.push('\n');
    for (r, n) in table.spec.n_range.clone().enumerate() {
        write!(out, "{n}").unwrap();
        for cell in &table.cells[r] {
            write!(out, ",{cell}").unwrap();
        }
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// check

fn read_input_text(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
    }
}

fn read_graph(input: &GraphInput) -> Result<Graph, Failure> {
    let text = read_input_text(&input.graph)?;
    let format = input.input_format.map(|f| match f {
        InputFormat::Graph6 => GraphFormat::Graph6,
        InputFormat::Edgelist => GraphFormat::EdgeList,
    });
    parse_graph(&text, format).map_err(from_graph_error)
}

/// One structural consequence suite's outcome.
struct SuiteOutcome {
    name: &'static str,
    /// holds / fails, or skipped with the reason.
    status: Result<bool, String>,
}

fn run_suites(
    g: &Graph,
    property: &str,
    n: usize,
    k: usize,
    cap: u64,
    holds: bool,
) -> Result<Vec<SuiteOutcome>, Failure> {
    // Each suite verifies consequences of the main property, so only the
    // suites whose antecedent is that property are meaningful: extendability
    // consequences for `extendable`, delete-then-extend consequences for
    // `factor-critical` (the k = 0 case) and `nk`.
    let planned: &[&'static str] = match property {
        "extendable" => &["plummer-basics", "louyu-dichotomy"],
        _ => &["nk-basics", "bipartite-bound"],
    };
    if !holds {
        return Ok(planned
            .iter()
            .map(|&name| SuiteOutcome {
                name,
                status: Err("the main property does not hold".into()),
            })
            .collect());
    }
    let mut outcomes = Vec::new();
    for &name in planned {
        let r = match name {
            "plummer-basics" => check_plummer_basics(g, k, cap),
            "nk-basics" => check_nk_basics(g, n, k, cap),
            "bipartite-bound" => {
                let scan_cap = usize::try_from(cap).unwrap_or(usize::MAX);
                check_bipartite_bound(g, n, k, scan_cap)
            }
            _ => check_louyu_dichotomy(g, k),
        };
        let status = match r {
            Ok(v) => Ok(v),
            Err(DeciderError::PreconditionUnmet(reason))
            | Err(DeciderError::NotApplicable(reason)) => Err(reason),
            Err(DeciderError::CapExceeded { cap }) => {
                return Err(Failure {
                    code: EXIT_CAP,
                    message: format!("suite {name}: work limit {cap} exceeded"),
                })
            }
        };
        outcomes.push(SuiteOutcome { name, status });
    }
    Ok(outcomes)
}

fn run_check(cmd: &CheckCmd, format: Format, cap: u64) -> RunResult {
    let (input, property, n, k, suites) = match cmd {
        CheckCmd::Extendable { k, input, suites } => (input, "extendable", 0usize, *k, *suites),
        CheckCmd::FactorCritical { n, input, suites } => {
            (input, "factor-critical", *n, 0usize, *suites)
        }
        CheckCmd::Nk { n, k, input, suites } => (input, "nk", *n, *k, *suites),
    };
    let g = read_graph(input)?;
    let verdict = match property {
        "extendable" => is_k_extendable(&g, k, cap),
        "factor-critical" => is_n_factor_critical(&g, n, cap),
        _ => is_nk_graph(&g, n, k, cap),
    };
    let verdict = match verdict {
        Ok(v) => v,
        Err(DeciderError::NotApplicable(reason)) => {
            emit_check_status(format, property, n, k, &g, "not-applicable", &reason);
            return Ok(EXIT_NOT_APPLICABLE);
        }
        Err(e @ DeciderError::CapExceeded { .. }) => {
            emit_check_status(format, property, n, k, &g, "cap-exceeded", &e.to_string());
            return Ok(EXIT_CAP);
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    let suite_results =
        if suites { Some(run_suites(&g, property, n, k, cap, verdict.holds)?) } else { None };

    let status = if verdict.holds { "holds" } else { "fails" };
    match format {
        Format::Text => {
            println!("property: {}", describe_property(property, n, k));
            println!("status: {status}");
            println!("work: {}", verdict.work);
            if let Some(w) = &verdict.witness {
                println!("witness deleted: {}", w.deleted);
                println!("witness matching: {}", w.matching);
            }
            if let Some(list) = &suite_results {
                for s in list {
                    match &s.status {
                        Ok(true) => println!("suite {}: holds", s.name),
                        Ok(false) => println!("suite {}: fails", s.name),
                        Err(reason) => println!("suite {}: skipped ({reason})", s.name),
                    }
                }
            }
        }
        Format::Json => {
            let mut doc = json!({
                "property": property,
                "n": n,
                "k": k,
                "graph": g.to_graph6(),
                "status": status,
                "holds": verdict.holds,
                "work": verdict.work,
                "witness": witness_json(&verdict),
            });
            if let Some(list) = &suite_results {
                doc["suites"] = Value::Array(
                    list.iter()
                        .map(|s| match &s.status {
                            Ok(v) => json!({
                                "name": s.name,
                                "status": if *v { "holds" } else { "fails" },
                            }),
                            Err(reason) => {
                                json!({ "name": s.name, "status": "skipped", "reason": reason })
                            }
                        })
                        .collect(),
                );
            }
            print_json(&doc);
        }
        Format::Csv => {
            let (deleted, matching) = match &verdict.witness {
                Some(w) => (w.deleted.to_string(), w.matching.to_string()),
                None => (String::new(), String::new()),
            };
            print!(
                "status,work,witness_deleted,witness_matching\n{status},{},\"{deleted}\",\"{matching}\"\n",
                verdict.work
            );
        }
    }
    if let Some(list) = &suite_results {
        if list.iter().any(|s| s.status == Ok(false)) && verdict.holds {
            // A consequence of a holding property failed; surface loudly.
            return Ok(EXIT_FAILS);
        }
    }
    Ok(if verdict.holds { EXIT_OK } else { EXIT_FAILS })
}

fn describe_property(property: &str, n: usize, k: usize) -> String {
    match property {
        "extendable" => format!("extendable (k = {k})"),
        "factor-critical" => format!("factor-critical (n = {n})"),
        _ => format!("nk (n = {n}, k = {k})"),
    }
}

fn emit_check_status(
    format: Format,
    property: &str,
    n: usize,
    k: usize,
    g: &Graph,
    status: &str,
    reason: &str,
) {
    match format {
        Format::Text => {
            println!("property: {}", describe_property(property, n, k));
            println!("status: {status}");
            println!("reason: {reason}");
        }
        Format::Json => print_json(&json!({
            "property": property,
            "n": n,
            "k": k,
            "graph": g.to_graph6(),
            "status": status,
            "reason": reason,
        })),
        Format::Csv => {
            print!("status,work,witness_deleted,witness_matching\n{status},,,\n");
        }
    }
}

fn witness_json(verdict: &Verdict) -> Value {
    match &verdict.witness {
        Some(w) => json!({
            "deleted": w.deleted.members(),
            "matching": w.matching.edges(),
        }),
        None => Value::Null,
    }
}

// ---------------------------------------------------------------------------
// embed

fn run_embed(args: &EmbedArgs, format: Format) -> RunResult {
    let g = read_graph(&args.input)?;
    let rotation_text = std::fs::read_to_string(&args.rotation)
        .map_err(|e| usage(format!("cannot read {}: {e}", args.rotation.display())))?;
    let rs = RotationSystem::parse(&rotation_text).map_err(from_embedding_error)?;
    if rs.host() != &g {
        return Err(usage(
            "rotation system does not match the input graph (order or edge set differs)",
        ));
    }
    let bound_params = match (args.n, args.k) {
        (Some(n), Some(k)) => Some((n, k)),
        (None, None) => None,
        _ => return Err(usage("--n and --k must be supplied together")),
    };
    let report = trace_faces(&rs).map_err(from_embedding_error)?;

    let control_verdict: Result<bool, String> = match verify_control_lemma(&report) {
        Ok(v) => Ok(v),
        Err(EmbeddingError::TooFewVertices { .. }) => Err("needs at least 3 vertices".to_string()),
        Err(e) => return Err(from_embedding_error(e)),
    };
    let degree_verdict = match bound_params {
        Some((n, k)) => Some(verify_degree_bound(&g, n, k, &report).map_err(from_embedding_error)?),
        None => None,
    };
    let control = control_points(&report);

    match format {
        Format::Text => {
            println!("order: {}", report.order());
            println!("edges: {}", report.edge_count());
            println!("faces: {}", report.face_count());
            println!("euler characteristic: {}", report.euler_characteristic());
            println!("surface: {}", report.surface());
            println!("orientable: {}", if report.orientable() { "yes" } else { "no" });
            for (i, face) in report.faces().iter().enumerate() {
                let walk: Vec<String> = face.walk.iter().map(|v| v.to_string()).collect();
                println!("face {i}: {}", walk.join(" "));
            }
            for v in 0..report.order() {
                let entry = &report.ledger()[v];
                println!(
                    "vertex {v}: degree {}, triangle corners {}, phi {}",
                    entry.degree, entry.triangle_corners, entry.contribution
                );
            }
            println!("control points: {control}");
            match &control_verdict {
                Ok(true) => println!("control inequality: holds"),
                Ok(false) => println!("control inequality: fails"),
                Err(reason) => println!("control inequality: skipped ({reason})"),
            }
            if let Some((n, k)) = bound_params {
                let v = degree_verdict.unwrap();
                println!("degree bound (n = {n}, k = {k}): {}", if v { "holds" } else { "fails" });
            }
        }
        Format::Json => {
            let phi: Vec<Value> = (0..report.order())
                .map(|v| {
                    let entry = &report.ledger()[v];
                    json!({
                        "vertex": v,
                        "degree": entry.degree,
                        "triangle_corners": entry.triangle_corners,
                        "phi": entry.contribution.to_string(),
                    })
                })
                .collect();
            let mut doc = json!({
                "order": report.order(),
                "edges": report.edge_count(),
                "faces": report.faces().iter().map(|f| f.walk.clone()).collect::<Vec<_>>(),
                "euler_characteristic": report.euler_characteristic(),
                "surface": report.surface().to_string(),
                "orientable": report.orientable(),
                "phi": phi,
                "control_points": control.members(),
                "control_inequality": match &control_verdict {
                    Ok(v) => json!(v),
                    Err(reason) => json!({ "skipped": reason }),
                },
            });
            if let Some((n, k)) = bound_params {
                doc["degree_bound"] = json!({ "n": n, "k": k, "holds": degree_verdict.unwrap() });
            }
            print_json(&doc);
        }
        Format::Csv => {
            let mut out = String::from("vertex,degree,triangle_corners,phi\n");
            for v in 0..report.order() {
                let entry = &report.ledger()[v];
                writeln!(
                    out,
                    "{v},{},{},{}",
                    entry.degree, entry.triangle_corners, entry.contribution
                )
                .unwrap();
            }
            print!("{out}");
        }
    }
    let verdict_failed = control_verdict == Ok(false) || degree_verdict == Some(false);
    Ok(if verdict_failed { EXIT_FAILS } else { EXIT_OK })
}

// ---------------------------------------------------------------------------
// genus

fn known_complete_value(g: &Graph, orientable: bool) -> Option<u64> {
    if g.is_complete() && g.order() >= 3 {
        complete_graph_genus(g.order() as u64, orientable).ok()
    } else {
        None
    }
}

fn write_witness(path: &Option<PathBuf>, witness: &RotationSystem) -> Result<(), Failure> {
    if let Some(path) = path {
        std::fs::write(path, witness.to_text())
            .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn run_genus(args: &GenusArgs, format: Format, seed: u64) -> RunResult {
    let g = read_graph(&args.input)?;
    let orientable = args.orientability.orientable();
    let known = known_complete_value(&g, orientable);

    match args.mode {
        GenusMode::Exhaustive => {
            if args.budget.is_some() {
                return Err(usage("--budget applies to search mode only"));
            }
            let result = min_genus_exhaustive(&g, orientable, args.edge_cap)
                .map_err(from_embedding_error)?;
            write_witness(&args.witness_out, &result.witness)?;
            emit_genus(
                format,
                "exhaustive",
                orientable,
                None,
                Some(result.genus),
                Some(result.genus),
                Some(("candidates", result.candidates)),
                Some(&result.witness),
                known,
            );
        }
        GenusMode::Bound => {
            if args.budget.is_some() || args.edge_cap.is_some() || args.witness_out.is_some() {
                return Err(usage(
                    "--budget, --edge-cap, and --witness-out do not apply to bound mode",
                ));
            }
            let lower = euler_genus_lower_bound(&g, orientable).map_err(from_embedding_error)?;
            emit_genus(format, "bound", orientable, Some(lower), None, None, None, None, known);
        }
        GenusMode::Search => {
            if args.edge_cap.is_some() {
                return Err(usage("--edge-cap applies to exhaustive mode only"));
            }
            let budget = args.budget.unwrap_or(DEFAULT_SEARCH_BUDGET);
            let lower = euler_genus_lower_bound(&g, orientable).map_err(from_embedding_error)?;
            let result = genus_upper_bound_search(&g, orientable, budget, seed)
                .map_err(from_embedding_error)?;
            write_witness(&args.witness_out, &result.witness)?;
            emit_genus(
                format,
                "search",
                orientable,
                Some(lower),
                Some(result.genus),
                None,
                Some(("evaluations", result.evaluations)),
                Some(&result.witness),
                known,
            );
        }
    }
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn emit_genus(
    format: Format,
    mode: &str,
    orientable: bool,
    lower: Option<u64>,
    upper: Option<u64>,
    exact: Option<u64>,
    count: Option<(&str, u64)>,
    witness: Option<&RotationSystem>,
    known: Option<u64>,
) {
    match format {
        Format::Text => {
            println!("mode: {mode}");
            println!("orientable: {}", if orientable { "yes" } else { "no" });
            if let Some(genus) = exact {
                println!("genus: {genus}");
            }
            if let Some(l) = lower {
                println!("lower bound: {l}");
            }
            if mode == "search" {
                let (l, u) = (lower.unwrap(), upper.unwrap());
                println!("upper bound: {u}");
                if l == u {
                    println!("bracket: [{l}, {u}] => exact");
                } else {
                    println!("bracket: [{l}, {u}]");
                }
            }
            if let Some((label, value)) = count {
                println!("{label}: {value}");
            }
            if let Some(k) = known {
                println!("known complete-graph value: {k}");
                let achieved = exact.or(upper).or(lower);
                if let Some(a) = achieved {
                    if a == k {
                        println!("tight: yes");
                    } else {
                        println!("tight: no");
                    }
                }
            }
            if let Some(w) = witness {
                println!("witness:");
                print!("{}", w.to_text());
            }
        }
        Format::Json => {
            let mut doc = json!({
                "mode": mode,
                "orientable": orientable,
            });
            if let Some(genus) = exact {
                doc["genus"] = json!(genus);
            }
            if let Some(l) = lower {
                doc["lower_bound"] = json!(l);
            }
            if mode == "search" {
                doc["upper_bound"] = json!(upper.unwrap());
                doc["exact"] = json!(lower == upper);
            }
            if let Some((label, value)) = count {
                doc[label] = json!(value);
            }
            if let Some(k) = known {
                doc["known_complete_value"] = json!(k);
            }
            if let Some(w) = witness {
                doc["witness"] = json!(w.to_text());
            }
            print_json(&doc);
        }
        Format::Csv => {
            let cell = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
            let genus_cell = cell(exact.or(upper));
            print!(
                "mode,orientable,genus,lower_bound,upper_bound,count\n{mode},{},{genus_cell},{},{},{}\n",
                if orientable { "yes" } else { "no" },
                cell(lower),
                cell(if mode == "search" { upper } else { None }),
                cell(count.map(|(_, v)| v)),
            );
        }
    }
}

fn print_json(doc: &Value) {
    println!("{}", serde_json::to_string_pretty(doc).expect("JSON serialization"));
}
