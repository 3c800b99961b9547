use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use cluster_index::Route;

use crate::checks::CheckKind;
use crate::config::{Format, DEFAULT_CAP, OUT_DIR_ENV};

#[derive(Clone, Debug, Parser)]
#[command(name = "cluster-index", version, about = "Indices with respect to cluster tilting objects in higher cluster categories of type A")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format. Defaults to json, or dot for export-graph.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Default output directory when --out is absent; files are named after the command.
    #[arg(long, global = true, env = OUT_DIR_ENV, hide_env_values = true)]
    pub out_dir: Option<PathBuf>,

    /// Report wall-clock timings (a separate block in json, stderr otherwise).
    #[arg(long, global = true)]
    pub timing: bool,

    /// Worker threads; 0 uses every core.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
}

#[derive(Clone, Debug, Args)]
pub struct ModelArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    /// Refuse models with more indecomposable objects than this.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// List the indecomposable objects.
    #[command(after_help = "CSV columns: id, object (vertices, comma separated), shift (the object under Σ^d).")]
    Enumerate(ModelArgs),

    /// Hom dimensions: one query with --source/--target, otherwise every pair.
    #[command(after_help = "CSV columns: source, target, dim.")]
    Hom {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        source: Option<String>,
        #[arg(long)]
        target: Option<String>,
        /// Work modulo the ideal of maps factoring through these objects ("a,b;c,d").
        #[arg(long, conflicts_with = "through")]
        modulo: Option<String>,
        /// Restrict to maps factoring through these objects ("a,b;c,d").
        #[arg(long)]
        through: Option<String>,
    },

    /// Enumerate cluster tilting objects, or validate one given with --tilting.
    #[command(after_help = "CSV columns: id, summands (objects separated by ';'), kind (tilting or anomaly).")]
    Tilting {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        tilting: Option<String>,
    },

    /// Index of every indecomposable with respect to a tilting object
    /// (default: the objects containing vertex 1).
    #[command(after_help = "CSV columns: object, then one coefficient column per summand of T, named by the summand.")]
    Index {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long)]
        tilting: Option<String>,
        #[arg(long, value_enum, default_value = "both")]
        route: RouteArg,
    },

    /// Run verification checks over a sweep of cases and tilting objects.
    #[command(after_help = "CSV columns: n, d, check, status, instances, violations, witnesses.")]
    Verify(VerifyArgs),

    /// Pairs of indecomposables with equal index.
    #[command(after_help = "CSV columns: tilting, a, b, index.")]
    Collisions {
        #[command(flatten)]
        model: ModelArgs,
        /// Limit to this tilting object; default is every tilting object.
        #[arg(long)]
        tilting: Option<String>,
    },

    /// Recompute the instances recorded in a witness or a whole report.
    #[command(after_help = "CSV columns: check, n, d, recorded, recomputed.")]
    Replay {
        /// JSON file holding one witness, a list of witnesses, or a verify report.
        #[arg(long)]
        witness: PathBuf,
    },

    /// Compatibility graph: objects joined when they do not intertwine.
    #[command(after_help = "CSV columns: source, target.")]
    ExportGraph(ModelArgs),
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, requires = "d")]
    pub n: Option<usize>,
    #[arg(long, requires = "n")]
    pub d: Option<usize>,
    /// TOML file with the same keys as the flags; flags win.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum, value_delimiter = ',')]
    pub checks: Vec<CheckKind>,
    /// Explicit tilting objects, "a,b,c;d,e,f"; repeatable.
    #[arg(long, conflicts_with = "first")]
    pub tilting: Vec<String>,
    /// Only the first K enumerated tilting objects per case.
    #[arg(long)]
    pub first: Option<usize>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, value_enum)]
    pub route: Option<RouteArg>,
    /// Compare linear-system ranks over the rationals and a large prime field.
    #[arg(long)]
    pub prime_check: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum RouteArg {
    Both,
    Resolution,
    System,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::Both => Route::Both,
            RouteArg::Resolution => Route::Resolution,
            RouteArg::System => Route::System,
        }
    }
}
