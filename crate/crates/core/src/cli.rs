//! The `dmagic` command line.
//!
//! Exit codes: 0 success (or witness found), 1 negative answer (violation,
//! not magic, search exhausted), 2 inconclusive, 3 errors. Argument errors
//! use clap's own code.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructors::{self, FamilyStatus};
use crate::graph::UndirectedGraph;
use crate::io::write_atomic;
use crate::obstructions::{self, ObstructionOutcome};
use crate::search::{self, SearchConfig, Verdict};
use crate::table::{self, TableOptions};
use crate::verify::{CertificateRecord, CheckError, MagicCertificate, VerifyError};
use crate::zero_sum;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_ERROR: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "dmagic", version, about = "Orientable Z_N-distance magic labelings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a labeled orientation and write graph and certificate files.
    Construct(ConstructArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// One-line status of a family member.
    Decide(DecideArgs),
    /// Exhaustive search for a labeled orientation.
    Search(SearchArgs),
    /// Analytic nonexistence checks.
    Obstruct(GraphArg),
    /// Zero-sum partition of {±1, …, ±N/2}.
    Partition(PartitionArgs),
    /// CSV status table over K_m ∘ K̄_n and prisms.
    Table(TableArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Complete,
    Kmokn,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    /// Number of parts (kmokn only).
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Directory for `<family>-<m>-<n>.graph` and `.cert`.
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub graph: PathBuf,
    #[arg(long)]
    pub cert: PathBuf,
}

#[derive(Debug, Args)]
pub struct DecideArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
}

#[derive(Debug, Args)]
pub struct GraphArg {
    #[arg(long)]
    pub graph: PathBuf,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub graph: PathBuf,
    /// Node budget.
    #[arg(long, default_value_t = SearchConfig::default().node_budget)]
    pub nodes: u64,
    /// Wall-clock budget in seconds.
    #[arg(long, default_value_t = 600.0)]
    pub seconds: f64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Disable all symmetry reductions.
    #[arg(long)]
    pub no_reduce: bool,
    /// Disable mod-2 pruning.
    #[arg(long)]
    pub no_parity: bool,
    /// Restrict one vertex to labels 0 and divisors of N.
    #[arg(long)]
    pub unit_scaling: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the witness here instead of standard output.
    #[arg(long)]
    pub cert_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long = "N")]
    pub total: usize,
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 6)]
    pub max_m: usize,
    #[arg(long, default_value_t = 6)]
    pub max_n: usize,
    /// Odd-order cells up to this order are settled by search.
    #[arg(long, default_value_t = 9)]
    pub search_threshold: usize,
    /// Include prisms with 3 <= n <= this; 0 for none.
    #[arg(long, default_value_t = 6)]
    pub max_prism: usize,
    /// Write graph and certificate files for magic cells here.
    #[arg(long)]
    pub cert_dir: Option<PathBuf>,
    /// CSV destination; standard output if absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for cells; 0 picks the core count.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,
}

/// Failure that aborts a command with [`EXIT_ERROR`].
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct CliError(String);

impl CliError {
    fn new(msg: impl Into<String>) -> Self {
        CliError(msg.into())
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::new(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    write_atomic(path, contents.as_bytes()).map_err(|e| CliError::new(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<UndirectedGraph, CliError> {
    UndirectedGraph::parse(&read(path)?).map_err(|e| CliError::new(format!("{}: {e}", path.display())))
}

fn out_line(out: &mut dyn Write, line: impl std::fmt::Display) -> Result<(), CliError> {
    writeln!(out, "{line}").map_err(|e| CliError::new(e.to_string()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code() as u8;
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<u8, CliError> {
    match command {
        Command::Construct(a) => construct(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Decide(a) => decide(a, out),
        Command::Search(a) => search(a, out),
        Command::Obstruct(a) => obstruct(a, out),
        Command::Partition(a) => partition(a, out),
        Command::Table(a) => table(a, out),
    }
}

enum Built {
    Magic(String, MagicCertificate),
    Negative(String),
    Open(String),
}

fn build(f: &FamilyArgs) -> Result<Built, CliError> {
    match f.family {
        FamilyArg::Complete => match constructors::construct_complete(f.n) {
            Ok(c) => Ok(Built::Magic(format!("magic complete mu={}", c.mu().value()), c)),
            Err(constructors::ConstructError::NotMagic(o)) => Ok(Built::Negative(format!("not-magic {o}"))),
            Err(e) => Err(CliError::new(e.to_string())),
        },
        FamilyArg::Kmokn => {
            let m = f.m.ok_or_else(|| CliError::new("--m is required for --family kmokn"))?;
            let d = constructors::decide_kmokn(m, f.n).map_err(|e| CliError::new(e.to_string()))?;
            let line = d.to_string();
            Ok(match d.status {
                FamilyStatus::Magic { certificate, .. } => Built::Magic(line, certificate),
                FamilyStatus::NotMagic(_) => Built::Negative(line),
                FamilyStatus::SearchRequired => Built::Open(line),
            })
        }
    }
}

fn stem(f: &FamilyArgs) -> String {
    match f.family {
        FamilyArg::Complete => format!("complete-{}", f.n),
        FamilyArg::Kmokn => format!("kmokn-{}-{}", f.m.unwrap_or(0), f.n),
    }
}

fn construct(a: ConstructArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    match build(&a.family)? {
        Built::Magic(line, cert) => {
            std::fs::create_dir_all(&a.out_dir)
                .map_err(|e| CliError::new(format!("{}: {e}", a.out_dir.display())))?;
            let stem = stem(&a.family);
            let graph_path = a.out_dir.join(format!("{stem}.graph"));
            let cert_path = a.out_dir.join(format!("{stem}.cert"));
            write(&graph_path, &cert.graph().to_text())?;
            write(&cert_path, &cert.to_text())?;
            out_line(out, line)?;
            out_line(out, format!("graph {}", graph_path.display()))?;
            out_line(out, format!("certificate {}", cert_path.display()))?;
            Ok(EXIT_OK)
        }
        Built::Negative(line) => {
            out_line(out, line)?;
            Ok(EXIT_NEGATIVE)
        }
        Built::Open(line) => {
            out_line(out, format!("{line}: no construction for odd order; run `dmagic search`"))?;
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let graph = load_graph(&a.graph)?;
    let record = CertificateRecord::parse(&read(&a.cert)?)
        .map_err(|e| CliError::new(format!("{}: {e}", a.cert.display())))?;
    match record.check(&graph) {
        Ok(cert) => {
            out_line(out, format!("ok mu={}", cert.mu().value()))?;
            Ok(EXIT_OK)
        }
        Err(CheckError::Verify(VerifyError::Violation(v))) => {
            out_line(out, format!("violation: {v}"))?;
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => {
            out_line(out, format!("invalid: {e}"))?;
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn decide(a: DecideArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let line = match build(&a.family)? {
        Built::Magic(line, _) | Built::Negative(line) | Built::Open(line) => line,
    };
    out_line(out, line)?;
    Ok(EXIT_OK)
}

fn search(a: SearchArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let graph = load_graph(&a.graph)?;
    if !(a.seconds.is_finite() && a.seconds > 0.0) {
        return Err(CliError::new("--seconds must be positive"));
    }
    let base = if a.no_reduce {
        SearchConfig::unreduced()
    } else {
        SearchConfig::default()
    };
    let config = SearchConfig {
        node_budget: a.nodes,
        time_budget: Duration::from_secs_f64(a.seconds),
        threads: a.threads,
        unit_scaling: a.unit_scaling && !a.no_reduce,
        parity_pruning: !a.no_parity,
        seed: a.seed,
        ..base
    };
    let outcome = search::decide_existence(&graph, &config).map_err(|e| CliError::new(e.to_string()))?;
    let s = &outcome.stats;
    out_line(out, outcome.verdict.name())?;
    out_line(
        out,
        format!(
            "# nodes {} prunes weight={} residual={} parity={} elapsed_ms {}",
            s.nodes,
            s.prunes.weight_mismatch,
            s.prunes.residual,
            s.prunes.parity,
            s.elapsed.as_millis()
        ),
    )?;
    Ok(match outcome.verdict {
        Verdict::Witness(cert) => {
            match &a.cert_out {
                Some(path) => write(path, &cert.to_text())?,
                None => write!(out, "{}", cert.to_text()).map_err(|e| CliError::new(e.to_string()))?,
            }
            EXIT_OK
        }
        Verdict::ExhaustedNoSolution => EXIT_NEGATIVE,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn obstruct(a: GraphArg, out: &mut dyn Write) -> Result<u8, CliError> {
    let graph = load_graph(&a.graph)?;
    match obstructions::obstruct(&graph) {
        ObstructionOutcome::Certified(cert) => {
            out_line(out, cert)?;
            Ok(EXIT_OK)
        }
        ObstructionOutcome::Inconclusive => {
            out_line(out, "inconclusive")?;
            Ok(EXIT_INCONCLUSIVE)
        }
    }
}

fn partition(a: PartitionArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let p = zero_sum::zero_sum_partition(a.total, &a.sizes).map_err(|e| CliError::new(e.to_string()))?;
    write!(out, "{p}").map_err(|e| CliError::new(e.to_string()))?;
    Ok(EXIT_OK)
}

fn table(a: TableArgs, out: &mut dyn Write) -> Result<u8, CliError> {
    let opts = TableOptions {
        max_m: a.max_m,
        max_n: a.max_n,
        search_threshold: a.search_threshold,
        max_prism: a.max_prism,
        search: SearchConfig {
            seed: a.seed,
            ..SearchConfig::default()
        },
    };
    if opts.max_m == 0 || opts.max_n == 0 {
        return Err(CliError::new("--max-m and --max-n must be at least 1"));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(a.threads)
        .build()
        .map_err(|e| CliError::new(e.to_string()))?;
    let rows = pool.install(|| table::build_table(&opts));
    if let Some(dir) = &a.cert_dir {
        table::write_certificates(&rows, dir).map_err(|e| CliError::new(format!("{}: {e}", dir.display())))?;
    }
    let csv = table::to_csv(&rows);
    match &a.out {
        Some(path) => write(path, &csv)?,
        None => write!(out, "{csv}").map_err(|e| CliError::new(e.to_string()))?,
    }
    Ok(EXIT_OK)
}
