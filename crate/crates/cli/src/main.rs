use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Mutex;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use min3gen::cycles::enumerate_cycles_bruteforce;
use min3gen::generator::{generate_cubic, Collection, GenerateError, Level, Min3Generator};
use min3gen::io::{
    decode_graph6, encode_graph6, load_level, save_level, write_outputs, FileError, OutputMode,
};
use min3gen::validate::{is_3_connected, is_minimally_3_connected};

const DEFAULT_OUT: &str = "out";

#[derive(Parser)]
#[command(
    name = "min3gen",
    version,
    about = "Generate minimally 3-connected and 3-connected cubic graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Min3,
    Cubic,
}

#[derive(Subcommand)]
enum Command {
    /// Generate graphs up to a vertex count and write graph6 files.
    Generate {
        #[arg(long, value_enum, default_value = "min3")]
        mode: Mode,
        #[arg(long)]
        max_n: usize,
        /// Output directory [env: MIN3GEN_OUT, default: out]
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also save every shelf under OUT/shelves (min3 mode).
        #[arg(long)]
        emit_intermediate: bool,
        /// Continue from shelves saved by an earlier --emit-intermediate run.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Check every graph in a graph6 file.
    Validate {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "min3")]
        mode: Mode,
    },
    /// Print the number of cycles of each graph in a graph6 file.
    Cycles { path: PathBuf },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    File(#[from] FileError),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Usage(_) => 2,
            CliError::File(FileError::Io { .. }) => 3,
            CliError::File(_) => 1,
        }
    }
}

impl From<GenerateError> for CliError {
    fn from(e: GenerateError) -> Self {
        CliError::Usage(e.to_string())
    }
}

struct RunConfig {
    mode: Mode,
    max_n: usize,
    out_dir: PathBuf,
    emit_intermediate: bool,
    resume_dir: Option<PathBuf>,
    threads: usize,
}

impl RunConfig {
    fn check(&self) -> Result<(), CliError> {
        match self.mode {
            Mode::Min3 if self.max_n < 6 => Err(CliError::Usage(format!(
                "--max-n must be at least 6 in min3 mode, got {}",
                self.max_n
            ))),
            Mode::Cubic if self.max_n < 4 || self.max_n % 2 == 1 => Err(CliError::Usage(format!(
                "--max-n must be even and at least 4 in cubic mode, got {}",
                self.max_n
            ))),
            _ => Ok(()),
        }
    }
}

fn out_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("MIN3GEN_OUT").map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from(DEFAULT_OUT))
}

fn load_levels(dir: &Path, max_n: usize) -> Result<Vec<Level>, CliError> {
    let mut levels = Vec::new();
    for n in 6..max_n {
        match load_level(dir, n)? {
            Some(level) if level.with_intermediates => levels.push(level),
            _ => break,
        }
    }
    log::info!(
        "resuming after {} saved level(s) from {}",
        levels.len(),
        dir.display()
    );
    Ok(levels)
}

fn cmd_generate(cfg: RunConfig) -> Result<(), CliError> {
    cfg.check()?;
    let collections: Vec<Collection> = match cfg.mode {
        Mode::Cubic => {
            if cfg.emit_intermediate || cfg.resume_dir.is_some() {
                log::warn!("--emit-intermediate and --resume apply to min3 mode only");
            }
            generate_cubic(cfg.max_n, cfg.threads)?
        }
        Mode::Min3 => {
            let save_err: Mutex<Option<FileError>> = Mutex::new(None);
            let shelf_dir = cfg.out_dir.join("shelves");
            let mut gen = Min3Generator::new(cfg.max_n)?.threads(cfg.threads);
            if let Some(dir) = &cfg.resume_dir {
                gen = gen.resume_from(load_levels(dir, cfg.max_n)?);
            }
            if cfg.emit_intermediate {
                gen = gen.on_level(|level| {
                    let mut slot = save_err.lock().expect("not poisoned");
                    if slot.is_none() {
                        if let Err(e) = save_level(level, &shelf_dir) {
                            *slot = Some(e);
                        }
                    }
                });
            }
            let out = gen.run()?;
            if let Some(e) = save_err.into_inner().expect("not poisoned") {
                return Err(e.into());
            }
            out
        }
    };
    let file_mode = match cfg.mode {
        Mode::Min3 => OutputMode::Min3,
        Mode::Cubic => OutputMode::Cubic,
    };
    write_outputs(&collections, file_mode, &cfg.out_dir)?;
    for c in &collections {
        println!("{}\t{}", c.n, c.len());
    }
    Ok(())
}

/// Graphs of a graph6 file with their line numbers.
fn read_numbered(path: &Path) -> Result<Vec<(usize, String, min3gen::graph::Graph)>, CliError> {
    let text = fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = decode_graph6(line).map_err(|source| FileError::Graph6 {
            path: path.to_path_buf(),
            line: i + 1,
            source,
        })?;
        out.push((i + 1, line.to_string(), g));
    }
    Ok(out)
}

fn cmd_validate(path: &Path, mode: Mode) -> Result<(), CliError> {
    let graphs = read_numbered(path)?;
    if graphs.is_empty() {
        log::warn!("{}: no graphs to validate", path.display());
    }
    for (line, text, g) in &graphs {
        let ok = match mode {
            Mode::Min3 => is_minimally_3_connected(g),
            Mode::Cubic => g.is_cubic() && is_3_connected(g),
        };
        if !ok {
            let what = match mode {
                Mode::Min3 => "not minimally 3-connected",
                Mode::Cubic => "not a 3-connected cubic graph",
            };
            return Err(CliError::Invalid(format!(
                "{}:{line}: {text} is {what}",
                path.display()
            )));
        }
    }
    println!("ok\t{}", graphs.len());
    Ok(())
}

fn cmd_cycles(path: &Path) -> Result<(), CliError> {
    for (_, _, g) in read_numbered(path)? {
        println!(
            "{}\t{}",
            encode_graph6(&g),
            enumerate_cycles_bruteforce(&g).len()
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate {
            mode,
            max_n,
            out,
            emit_intermediate,
            resume,
            threads,
        } => cmd_generate(RunConfig {
            mode,
            max_n,
            out_dir: out_dir(out),
            emit_intermediate,
            resume_dir: resume,
            threads,
        }),
        Command::Validate { path, mode } => cmd_validate(&path, mode),
        Command::Cycles { path } => cmd_cycles(&path),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
