use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use idealforge::commands::{self, CliError, CommandOutput};
use idealforge::DiskLatticeCache;

/// Laboratory for finite commutative rings: classify ideals, verify the
/// theorem catalog over generated corpora, and search for counterexamples.
#[derive(Parser)]
#[command(name = "idealforge", version, about)]
struct Cli {
    /// Ideal-lattice cache directory (default: $IDEALFORGE_CACHE if set).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Re-derive every cache hit instead of spot-checking a sample.
    #[arg(long, global = true)]
    cache_verify: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one ideal of one ring against every predicate.
    Classify {
        /// Ring expression, e.g. "Z32" or "Z4><<2>".
        #[arg(long)]
        ring: String,
        /// Ideal literal, e.g. "<16>" or "<>".
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run theorem suites over a corpus; nonzero exit iff any check fails.
    Verify {
        /// "all" or a comma-separated list of theorem ids, e.g. "T-EQ,P-JR".
        #[arg(long, default_value = "all")]
        suite: String,
        /// JSON corpus recipe; defaults to the standard corpus.
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Worker threads for the sweep.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Include wall-clock timing in the output (makes reports
        /// run-dependent).
        #[arg(long)]
        timing: bool,
    },
    /// Search the corpus for instances satisfying a predicate expression.
    Search {
        /// Expression over predicate names, e.g. "weaklyJ & !J" or
        /// "weaklyJ(I1) & weaklyJ(I2) & !weaklyJ(I1*I2)".
        #[arg(long = "where")]
        where_expr: String,
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Maximum number of witnesses to report.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the ideal lattice of a ring with classification flags.
    Enumerate {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn emit(out: CommandOutput, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", out.text),
        Format::Json => print!("{}", out.report.to_json()),
    }
    if out.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let cache_dir = cli
        .cache
        .clone()
        .or_else(|| std::env::var_os("IDEALFORGE_CACHE").map(PathBuf::from));
    if let Some(dir) = cache_dir {
        let verify_all = cli.cache_verify
            || std::env::var_os("IDEALFORGE_CACHE_VERIFY").is_some()
            || std::env::var_os("CI").is_some();
        match DiskLatticeCache::open(&dir, verify_all) {
            Ok(store) => {
                idealforge_core::ring::set_lattice_store(Box::new(store));
            }
            Err(e) => {
                eprintln!("error: cannot open cache {}: {e}", dir.display());
                return ExitCode::from(2);
            }
        }
    }

    let result = match &cli.command {
        Command::Classify { ring, ideal, format } => {
            commands::cmd_classify(ring, ideal).map(|o| emit(o, *format))
        }
        Command::Verify {
            suite,
            corpus,
            jobs,
            format,
            timing,
        } => commands::cmd_verify(suite, corpus.as_deref(), *jobs, *timing)
            .map(|o| emit(o, *format)),
        Command::Search {
            where_expr,
            corpus,
            limit,
            format,
        } => commands::cmd_search(where_expr, corpus.as_deref(), *limit)
            .map(|o| emit(o, *format)),
        Command::Enumerate { ring, format } => {
            commands::cmd_enumerate(ring).map(|o| emit(o, *format))
        }
    };
    match result {
        Ok(code) => code,
        Err(e @ CliError::Usage(_)) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(2)
        }
        Err(e @ CliError::Failed(_)) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(1)
        }
    }
}
