//! Batch front end over the forbidden-family library.
//!
//! Graphs come in as graph6 lines from a file or standard input, results
//! go out as graph6 or line-oriented JSON, and the exit code carries the
//! verdict: 0 success or affirmative, 1 I/O failure, 2 usage or parse
//! failure, 3 negative verdict.

use std::collections::BTreeSet;
use std::env;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use forbidden::{
    class_index, enumerate_family, enumerate_family_resumable, is_member_via_family, write_family,
    ForbiddenError, ForbiddenFamily, Parameter};
use graph_core::{budget, edgelist, graph6, Graph};

#[derive(Parser)]
#[command(name = "forbiddenkit", version, about = "Minimal forbidden subgraph families for bounded-degree hereditary classes")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a forbidden family, print a summary, optionally write
    /// the sorted family file with its metadata sidecar.
    GenFamily {
        #[arg(long)]
        param: Param,
        /// Gap between maximum degree and the parameter; at most 4.
        #[arg(long)]
        k: usize,
        /// Family file to write; without it, members go to stdout and
        /// the summary to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Checkpoint directory for resumable enumeration.
        #[arg(long)]
        resume: Option<PathBuf>,
    },
    /// Test every input graph for membership in a hereditary class;
    /// exits 3 when any graph falls outside.
    Check {
        #[arg(long)]
        param: Param,
        #[arg(long)]
        k: usize,
        /// graph6 lines; stdin when absent.
        file: Option<PathBuf>,
    },
    /// Report the least admitting gap per input graph, with a witness.
    Index {
        #[arg(long)]
        param: Param,
        /// graph6 lines; stdin when absent.
        file: Option<PathBuf>,
    },
    /// Report exact invariants per input graph.
    Invariants {
        /// graph6 lines; stdin when absent.
        file: Option<PathBuf>,
    },
    /// Compare two graph6 files as sets of isomorphism classes; exits 3
    /// when they differ.
    Diff { a: PathBuf, b: PathBuf },
    /// Convert edge-list text to graph6 lines.
    Encode {
        /// Blocks of "n m" followed by m edge lines; stdin when absent.
        file: Option<PathBuf>,
    },
    /// Convert graph6 lines to JSON or normalized graph6.
    Decode {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// graph6 lines; stdin when absent.
        file: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Param {
    Chi,
    Omega,
}

impl From<Param> for Parameter {
    fn from(p: Param) -> Parameter {
        match p {
            Param::Chi => Parameter::Chi,
            Param::Omega => Parameter::Omega,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    G6,
    Json,
}

/// A failure with its exit code; verdict exits are ordinary returns.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn io_failure(context: &str, e: &io::Error) -> Failure {
    Failure {
        code: 1,
        message: format!("{context}: {e}"),
    }
}

impl From<ForbiddenError> for Failure {
    fn from(e: ForbiddenError) -> Failure {
        match e {
            ForbiddenError::Io(inner) => io_failure("family storage", &inner),
            other => usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("forbiddenkit: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    apply_budget_env()?;
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| usage(format!("worker pool: {e}")))?;
    }
    match cli.command {
        Command::GenFamily {
            param,
            k,
            out,
            resume,
        } => run_gen_family(param.into(), k, out.as_deref(), resume.as_deref()),
        Command::Check { param, k, file } => run_check(param.into(), k, file.as_deref()),
        Command::Index { param, file } => run_index(param.into(), file.as_deref()),
        Command::Invariants { file } => run_invariants(file.as_deref()),
        Command::Diff { a, b } => run_diff(&a, &b),
        Command::Encode { file } => run_encode(file.as_deref()),
        Command::Decode { format, file } => run_decode(format, file.as_deref()),
    }
}

/// Raises the search budgets when FORBIDDENKIT_BUDGET is set. Raised
/// budgets keep every computation exact but abandon the runtime
/// guarantees of the defaults.
fn apply_budget_env() -> Result<(), Failure> {
    match env::var("FORBIDDENKIT_BUDGET") {
        Ok(text) => match text.parse::<usize>() {
            Ok(limit) if limit > 0 => {
                budget::set_vertex_budget_override(Some(limit));
                Ok(())
            }
            _ => Err(usage(format!(
                "FORBIDDENKIT_BUDGET must be a positive integer, got {text:?}"
            ))),
        },
        Err(env::VarError::NotPresent) => Ok(()),
        Err(e) => Err(usage(format!("FORBIDDENKIT_BUDGET: {e}"))),
    }
}

/// The input text of a subcommand: the named file, or standard input.
fn read_input(file: Option<&Path>) -> Result<String, Failure> {
    match file {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| io_failure(&path.display().to_string(), &e))
        }
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| io_failure("stdin", &e))?;
            Ok(text)
        }
    }
}

/// Parses one graph per line, reporting the first offending line.
fn parse_graphs(text: &str) -> Result<Vec<Graph>, Failure> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            graph6::decode(line).map_err(|e| usage(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

fn emit(lines: &[String]) -> Result<(), Failure> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for line in lines {
        writeln!(out, "{line}").map_err(|e| io_failure("stdout", &e))?;
    }
    Ok(())
}

fn json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output structs always serialize")
}

fn family_summary(fam: &ForbiddenFamily) -> Vec<String> {
    let mut lines = vec![format!("members {}", fam.len())];
    for (order, count) in fam.histogram() {
        lines.push(format!("order {order}: {count}"));
    }
    lines
}

fn run_gen_family(
    p: Parameter,
    k: usize,
    out: Option<&Path>,
    resume: Option<&Path>,
) -> Result<u8, Failure> {
    let fam = match resume {
        Some(dir) => enumerate_family_resumable(p, k, dir)?,
        None => enumerate_family(p, k)?,
    };
    match out {
        Some(path) => {
            write_family(&fam, path)?;
            emit(&family_summary(&fam))?;
        }
        None => {
            let lines: Vec<String> = fam.members().map(graph6::encode).collect();
            emit(&lines)?;
            for line in family_summary(&fam) {
                eprintln!("{line}");
            }
        }
    }
    Ok(0)
}

#[derive(Serialize)]
struct CheckLine {
    index: usize,
    member: bool,
    witness: Option<Vec<usize>>,
}

fn run_check(p: Parameter, k: usize, file: Option<&Path>) -> Result<u8, Failure> {
    let graphs = parse_graphs(&read_input(file)?)?;
    let fam = enumerate_family(p, k)?;
    let mut lines = Vec::new();
    let mut all_members = true;
    for (index, g) in graphs.iter().enumerate() {
        let verdict = is_member_via_family(g, &fam);
        all_members &= verdict.is_member;
        let witness = verdict.witness.map(|w| {
            let mut vertices = w.embedding.map;
            vertices.sort_unstable();
            vertices
        });
        lines.push(json_line(&CheckLine {
            index,
            member: verdict.is_member,
            witness,
        }));
    }
    emit(&lines)?;
    Ok(if all_members { 0 } else { 3 })
}

#[derive(Serialize)]
struct IndexLine {
    index: usize,
    value: usize,
    witness: Option<Vec<usize>>,
}

fn run_index(p: Parameter, file: Option<&Path>) -> Result<u8, Failure> {
    let graphs = parse_graphs(&read_input(file)?)?;
    let mut lines = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        let ci = class_index(g, p)?;
        lines.push(json_line(&IndexLine {
            index,
            value: ci.value,
            witness: ci.witness.map(|s| s.to_vec()),
        }));
    }
    emit(&lines)?;
    Ok(0)
}

#[derive(Serialize)]
struct InvariantLine {
    n: usize,
    max_degree: usize,
    clique_number: usize,
    chromatic_number: usize,
    perfect: bool,
    neighborhood_perfect: bool,
}

fn run_invariants(file: Option<&Path>) -> Result<u8, Failure> {
    let graphs = parse_graphs(&read_input(file)?)?;
    let mut lines = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        let line = (|| -> Result<InvariantLine, invariants::InvariantError> {
            let record = invariants::record(g)?;
            Ok(InvariantLine {
                n: record.n,
                max_degree: record.max_degree,
                clique_number: record.clique_number,
                chromatic_number: record.chromatic_number,
                perfect: invariants::is_perfect(g)?.is_perfect,
                neighborhood_perfect: invariants::is_neighborhood_perfect(g)?
                    .is_neighborhood_perfect,
            })
        })()
        .map_err(|e| usage(format!("graph {}: {e}", i + 1)))?;
        lines.push(json_line(&line));
    }
    emit(&lines)?;
    Ok(0)
}

fn run_diff(a: &Path, b: &Path) -> Result<u8, Failure> {
    let forms = |path: &Path| -> Result<BTreeSet<iso::CanonicalForm>, Failure> {
        parse_graphs(&read_input(Some(path))?)?
            .iter()
            .map(|g| {
                iso::canonical_form(g).map_err(|e| usage(format!("{}: {e}", path.display())))
            })
            .collect()
    };
    let a_forms = forms(a)?;
    let b_forms = forms(b)?;
    let mut lines = Vec::new();
    for form in a_forms.difference(&b_forms) {
        lines.push(format!("A-only {}", graph6::encode(&form.to_graph())));
    }
    for form in b_forms.difference(&a_forms) {
        lines.push(format!("B-only {}", graph6::encode(&form.to_graph())));
    }
    emit(&lines)?;
    Ok(if lines.is_empty() { 0 } else { 3 })
}

fn run_encode(file: Option<&Path>) -> Result<u8, Failure> {
    let text = read_input(file)?;
    let graphs = edgelist::parse(&text).map_err(|e| usage(e.to_string()))?;
    let lines: Vec<String> = graphs.iter().map(graph6::encode).collect();
    emit(&lines)?;
    Ok(0)
}

#[derive(Serialize)]
struct DecodedGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn run_decode(format: Format, file: Option<&Path>) -> Result<u8, Failure> {
    let graphs = parse_graphs(&read_input(file)?)?;
    let lines: Vec<String> = graphs
        .iter()
        .map(|g| match format {
            Format::G6 => graph6::encode(g),
            Format::Json => json_line(&DecodedGraph {
                n: g.n(),
                edges: g.edges().collect(),
            }),
        })
        .collect();
    emit(&lines)?;
    Ok(0)
}
