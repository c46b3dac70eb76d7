use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hurwitz::Partition;

#[derive(Parser, Debug)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz numbers of almost simple coverings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute single values.
    Compute(ComputeArgs),
    /// Print the grid of values over all partitions of the given degrees.
    Table(TableArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Compute a grid and write the memo store in cache line format.
    CacheExport(CacheExportArgs),
    /// Validate a cache file and merge it into the cache.
    CacheImport(CacheImportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProviderChoice {
    Strict,
    Monodromy,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Args, Debug, Clone)]
pub struct EngineArgs {
    /// Base-case provider. Required when the base genus is positive.
    #[arg(long, value_enum)]
    pub provider: Option<ProviderChoice>,

    #[arg(long, default_value_t = 100_000_000)]
    pub monodromy_node_limit: u64,

    /// Largest degree the monodromy enumerator accepts.
    #[arg(long, default_value_t = 6)]
    pub monodromy_max_degree: u32,

    /// Worker threads; 0 uses all available cores.
    #[arg(long, default_value_t = 0)]
    pub threads: usize,

    /// Cache file, loaded before and written after the run.
    #[arg(long, env = "HURWITZ_CACHE")]
    pub cache: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[arg(long, default_value_t = 0)]
    pub base_genus: u32,

    #[arg(long)]
    pub cover_genus: u32,

    /// Compute every cover genus from --cover-genus up to this one.
    #[arg(long)]
    pub max_cover_genus: Option<u32>,

    /// Ramification profile, e.g. 1,2. May be repeated.
    #[arg(long, required = true)]
    pub ramification: Vec<Partition>,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Args, Debug, Clone)]
pub struct GridArgs {
    #[arg(long, default_value_t = 0)]
    pub base_genus: u32,

    /// Comma-separated degrees; an empty string selects none.
    #[arg(long, default_value = "3,4,5", value_parser = parse_list)]
    pub degrees: Degrees,

    /// Smallest cover genus.
    #[arg(long, default_value_t = 0)]
    pub cover_genus: u32,

    #[arg(long, default_value_t = 5)]
    pub max_cover_genus: u32,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[command(flatten)]
    pub grid: GridArgs,

    #[arg(long, value_enum, default_value_t)]
    pub format: Format,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ClosedForm,
    Monodromy,
    Pde,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    pub suite: Suite,

    #[arg(long, default_value_t = 0)]
    pub base_genus: u32,

    /// Defaults: 8 for closed-form, 4 for monodromy and pde.
    #[arg(long)]
    pub max_degree: Option<u32>,

    /// Defaults: 2 for pde; unbounded for monodromy, where --max-u-degree
    /// limits the genus instead.
    #[arg(long)]
    pub max_genus: Option<u32>,

    /// Defaults: 8 for monodromy, 10 for pde.
    #[arg(long)]
    pub max_u_degree: Option<u32>,

    /// Write the truncated generating function to this file (pde only).
    #[arg(long)]
    pub dump: Option<PathBuf>,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Args, Debug)]
pub struct CacheExportArgs {
    #[command(flatten)]
    pub grid: GridArgs,

    /// Destination; defaults to the cache file itself, or stdout without one.
    #[arg(long)]
    pub output: Option<PathBuf>,

    #[command(flatten)]
    pub engine: EngineArgs,
}

#[derive(Args, Debug)]
pub struct CacheImportArgs {
    /// File in cache line format.
    pub input: PathBuf,

    #[command(flatten)]
    pub engine: EngineArgs,
}

pub type Degrees = Vec<u32>;

fn parse_list(s: &str) -> Result<Degrees, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<u32>().map_err(|e| format!("bad degree {t:?}: {e}"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists() {
        assert_eq!(parse_list("3,4,5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_list("").unwrap(), Vec::<u32>::new());
        assert!(parse_list("3,x").is_err());
    }

    #[test]
    fn clap_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
