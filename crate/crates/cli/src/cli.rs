use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "drdlab", version, about = "Distance-regular digraph toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a digraph family member as an edge-list file.
    Gen(GenArgs),
    /// Test a regularity predicate on an edge-list file.
    Check(CheckArgs),
    /// Edge or vertex connectivity, optionally with every minimum cut.
    Cut(CutArgs),
    /// Run claim checks and write a JSON report.
    Verify(VerifyArgs),
    /// Search for counterexamples to the WDRD edge-connectivity conjecture.
    Search(SearchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Dcycle,
    Ucycle,
    Blockcycle,
    Lift,
    Gamma,
    Srd,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Order for dcycle, ucycle, gamma; base directed cycle length for lift.
    #[arg(long)]
    pub n: Option<usize>,
    /// Number of blocks (blockcycle).
    #[arg(long)]
    pub t: Option<usize>,
    /// Block size (blockcycle).
    #[arg(long)]
    pub rho: Option<usize>,
    /// Lift multiplicity.
    #[arg(long)]
    pub m: Option<usize>,
    /// SRD parameters `n,k,t,lambda,mu`.
    #[arg(long, value_delimiter = ',')]
    pub params: Option<Vec<usize>>,
    /// Output file; a directory for `srd`. Standard output when omitted.
    #[arg(short = 'o', long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Predicate {
    Drd,
    Wdrd,
    Srd,
    Normal,
    Stable,
    Type,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum)]
    pub what: Predicate,
    pub path: PathBuf,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("kind").required(true).args(["edge", "vertex"])))]
pub struct CutArgs {
    #[arg(long)]
    pub edge: bool,
    #[arg(long)]
    pub vertex: bool,
    /// List every minimum cut with its classification.
    #[arg(long)]
    pub enumerate: bool,
    /// Print counts per cut class (implies --enumerate).
    #[arg(long)]
    pub classify: bool,
    pub path: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    Drd,
    Srd,
    Gamma,
    #[value(alias = "figure1")]
    VertexCut,
    Conjecture,
    Balance,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["all", "theorem"])))]
pub struct VerifyArgs {
    /// Every applicable claim.
    #[arg(long)]
    pub all: bool,
    /// A single claim.
    #[arg(long, value_enum)]
    pub theorem: Option<Theorem>,
    /// Use the built-in catalog.
    #[arg(long)]
    pub default_catalog: bool,
    /// Gamma family orders, `a..b` inclusive or a single value.
    #[arg(long, value_parser = parse_range)]
    pub n: Option<(usize, usize)>,
    #[arg(long, env = "DRDLAB_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Record per-claim wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
    pub paths: Vec<PathBuf>,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["exhaustive", "catalog"])))]
pub struct SearchArgs {
    #[arg(long, required = true)]
    pub conjecture: bool,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 3)]
    pub max_k: usize,
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long)]
    pub catalog: bool,
    /// Directory for the report and counterexample files.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |x: &str| {
        x.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad integer {x:?}"))
    };
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let a = parse(s)?;
            (a, a)
        }
    };
    if a > b {
        return Err(format!("empty range {s}"));
    }
    Ok((a, b))
}
