use clap::{Args, Parser, Subcommand, ValueEnum};
use hpfold::families::{gen_f, gen_php, gen_s, gen_z, standard_z_embedding};
use hpfold::render::{render, RenderFormat};
use hpfold::search::{enumerate_optimal, SearchOptions};
use hpfold::survey::{sweep, SurveyOptions};
use hpfold::verify::{run_suite, Suite};
use hpfold::{Chain, Error, Folding, Topology};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit codes.
/// Writes a line to stdout, ignoring a closed pipe.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($arg)*);
    }};
}

mod exit {
    pub const OK: u8 = 0;
    pub const CLAIM_FAILED: u8 = 1;
    pub const INVALID_INPUT: u8 = 2;
    pub const RESOURCE_LIMIT: u8 = 3;
    pub const CORRUPT_CHECKPOINT: u8 = 4;
    pub const IO: u8 = 5;
}

#[derive(Parser, Debug)]
#[command(name = "hpfold", version, about = "Exact optimal foldings of HP chains on the square lattice")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: GlobalOpts,
}

#[derive(Args, Debug)]
struct GlobalOpts {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Checkpoint file for resumable surveys.
    #[arg(long, global = true)]
    checkpoint: Option<PathBuf>,
    /// Optimal foldings kept in search results.
    #[arg(long, global = true, default_value_t = 16)]
    store_limit: usize,
    /// Identify foldings related by label-preserving chain relabelings
    /// (reversal of palindromes, symmetries of cycles).
    #[arg(long, global = true, default_value_t = true, action = clap::ArgAction::Set)]
    quotient_automorphisms: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Svg,
    Csv,
    Ascii,
}

#[derive(Args, Debug)]
struct ChainArgs {
    /// Chain as an H/P string.
    #[arg(long)]
    chain: String,
    /// Treat the chain as a closed cycle.
    #[arg(long, conflicts_with = "open")]
    closed: bool,
    /// Treat the chain as an open path (default).
    #[arg(long)]
    open: bool,
}

impl ChainArgs {
    fn topology(&self) -> Topology {
        if self.closed {
            Topology::Closed
        } else {
            Topology::Open
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate all optimal foldings of a chain.
    Enumerate {
        #[command(flatten)]
        chain: ChainArgs,
        /// Disable branch-and-bound pruning.
        #[arg(long)]
        no_pruning: bool,
        /// Prefix depth at which the search tree is split into parallel tasks.
        #[arg(long, default_value_t = 0)]
        split_depth: usize,
    },
    /// Generate a family chain or folding: S, F, Z, Zstd or PHP.
    Family {
        #[arg(value_enum)]
        name: FamilyName,
        k: usize,
        /// Closed topology for PHP.
        #[arg(long)]
        closed: bool,
    },
    /// Count chains of length n with a unique optimal folding.
    Survey {
        n: usize,
        #[arg(long)]
        closed: bool,
        /// Chains per block of work.
        #[arg(long, default_value_t = 256)]
        block_size: u32,
        /// Stop after this many blocks (the checkpoint keeps the progress).
        #[arg(long)]
        max_blocks: Option<u64>,
        /// Write per-chain rows to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Suppress progress on stderr.
        #[arg(long)]
        quiet: bool,
    },
    /// Run a verification suite: sk, z-even, z-odd, php, table1-small, exceptions.
    Verify { suite: String },
    /// Draw a folded chain.
    Render {
        #[arg(long, required_unless_present = "family")]
        chain: Option<String>,
        #[arg(long)]
        closed: bool,
        #[arg(long, required_unless_present = "family")]
        folding: Option<String>,
        /// Draw a family member instead: F (S_k folded by F_k) or Zstd.
        #[arg(long, value_enum, requires = "k")]
        family: Option<FamilyName>,
        #[arg(long)]
        k: Option<usize>,
        /// Write the drawing here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    #[value(name = "S")]
    S,
    #[value(name = "F")]
    F,
    #[value(name = "Z")]
    Z,
    #[value(name = "Zstd")]
    Zstd,
    #[value(name = "PHP")]
    Php,
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLong { .. } => exit::RESOURCE_LIMIT,
            Error::Checkpoint(_) => exit::CORRUPT_CHECKPOINT,
            Error::Io(_) => exit::IO,
            _ => exit::INVALID_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: exit::IO, message: e.to_string() }
    }
}

fn invalid(message: impl Into<String>) -> Failure {
    Failure { code: exit::INVALID_INPUT, message: message.into() }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn search_options(g: &GlobalOpts, pruning: bool, split_depth: usize) -> SearchOptions {
    SearchOptions {
        store_limit: g.store_limit,
        parallel_split_depth: split_depth,
        quotient_chain_automorphisms: g.quotient_automorphisms,
        use_pruning: pruning,
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let g = &cli.global;
    if g.workers > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(g.workers)
            .build_global()
            .map_err(|e| Failure { code: exit::RESOURCE_LIMIT, message: e.to_string() })?;
    }
    match cli.command {
        Command::Enumerate { chain, no_pruning, split_depth } => {
            let parsed = Chain::parse(&chain.chain, chain.topology())?;
            let result = enumerate_optimal(&parsed, &search_options(g, !no_pruning, split_depth))?;
            match g.format.unwrap_or(Format::Json) {
                Format::Json => out!("{}", to_json(&result)),
                Format::Text => {
                    out!("chain {} ({})", result.chain, result.chain.topology());
                    out!("optimum {}", result.optimum);
                    out!("classes {}", result.class_count);
                    for f in &result.representatives {
                        out!("  {f}");
                    }
                }
                other => return Err(invalid(format!("format {other:?} not supported by enumerate"))),
            }
        }
        Command::Family { name, k, closed } => {
            let topology = if closed { Topology::Closed } else { Topology::Open };
            let (kind, value, topology) = match name {
                FamilyName::S => ("chain", gen_s(k)?.to_string(), Topology::Closed),
                FamilyName::F => ("folding", gen_f(k)?.to_string(), Topology::Closed),
                FamilyName::Z => ("chain", gen_z(k)?.to_string(), Topology::Open),
                FamilyName::Zstd => ("folding", standard_z_embedding(k)?.to_string(), Topology::Open),
                FamilyName::Php => ("chain", gen_php(k, topology)?.to_string(), topology),
            };
            match g.format.unwrap_or(Format::Text) {
                Format::Text => out!("{value}"),
                Format::Json => out!(
                    "{}",
                    to_json(&serde_json::json!({
                        "family": format!("{name:?}"),
                        "k": k,
                        "kind": kind,
                        "value": value,
                        "topology": topology,
                    }))
                ),
                other => return Err(invalid(format!("format {other:?} not supported by family"))),
            }
        }
        Command::Survey { n, closed, block_size, max_blocks, csv, quiet } => {
            let topology = if closed { Topology::Closed } else { Topology::Open };
            let options = SurveyOptions {
                block_size,
                workers: g.workers,
                checkpoint: g.checkpoint.clone(),
                detail_csv: csv,
                max_blocks,
                progress: !quiet,
                search: search_options(g, true, 0),
            };
            let record = sweep(n, topology, &options)?;
            match g.format.unwrap_or(Format::Json) {
                Format::Json => out!("{}", to_json(&record)),
                Format::Text => out!(
                    "n={} {}: {}/{} unique ({:.3}%){}",
                    record.n,
                    record.topology,
                    record.unique_count,
                    record.total_count,
                    record.percentage,
                    if record.complete { "" } else { " [incomplete]" }
                ),
                other => return Err(invalid(format!("format {other:?} not supported by survey"))),
            }
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse().map_err(invalid)?;
            let report = run_suite(suite, &search_options(g, true, 0))?;
            match g.format.unwrap_or(Format::Text) {
                Format::Json => out!("{}", to_json(&report)),
                Format::Text => {
                    for c in &report.claims {
                        let tag = if c.pass { "PASS" } else { "FAIL" };
                        out!("{tag} {}: expected {}, observed {}", c.claim, c.expected, c.observed);
                    }
                    out!("{}: {}", report.suite, if report.passed { "all claims hold" } else { "FAILED" });
                }
                other => return Err(invalid(format!("format {other:?} not supported by verify"))),
            }
            if !report.passed {
                return Ok(exit::CLAIM_FAILED);
            }
        }
        Command::Render { chain, closed, folding, family, k, output } => {
            let (chain, folding) = match family {
                Some(name) => {
                    let k = k.ok_or_else(|| invalid("--family needs --k"))?;
                    match name {
                        FamilyName::F | FamilyName::S => (gen_s(k)?, gen_f(k)?),
                        FamilyName::Zstd | FamilyName::Z => (gen_z(2 * k)?, standard_z_embedding(k)?),
                        FamilyName::Php => return Err(invalid("render supports the F and Zstd families")),
                    }
                }
                None => {
                    let topology = if closed { Topology::Closed } else { Topology::Open };
                    let chain = Chain::parse(chain.as_deref().unwrap_or_default(), topology)?;
                    let folding: Folding = folding.as_deref().unwrap_or_default().parse()?;
                    (chain, folding)
                }
            };
            let format = match g.format.unwrap_or(Format::Ascii) {
                Format::Ascii | Format::Text => RenderFormat::Ascii,
                Format::Svg => RenderFormat::Svg,
                other => return Err(invalid(format!("format {other:?} not supported by render"))),
            };
            emit(&output, &render(&chain, &folding, format)?)?;
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
