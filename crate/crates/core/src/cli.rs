//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for unreadable or malformed input, 2 for
//! usage errors and out-of-range arguments. Diagnostics only ever go to the
//! error stream.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::fib::{CountMode, FibError, FibQuery};
use crate::poly::{self, Strategy};
use crate::tree::{self, LayoutKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "textalgebra",
    version,
    about = "Polynomial products, Fibonacci-string counts and tree drawings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply polynomial pairs read two lines at a time.
    Polymul {
        /// Cleanup applied to the raw product.
        #[arg(long, value_enum, default_value_t = StrategyArg::Sorted)]
        strategy: StrategyArg,
        /// Input file; standard input when absent.
        file: Option<PathBuf>,
    },
    /// Count occurrences of PATTERN in the n-th Fibonacci string.
    Fibcount {
        pattern: String,
        n: u32,
        #[arg(long, value_enum, default_value_t = ModeArg::Algebraic)]
        mode: ModeArg,
    },
    /// Draw a binary tree given as an s-expression.
    Treedraw {
        #[arg(long, value_enum, default_value_t = LayoutArg::Baseline)]
        layout: LayoutArg,
        /// Omit the connector rows.
        #[arg(long)]
        no_bars: bool,
        /// Input file; standard input when absent.
        file: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Unsorted,
    Sorted,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Algebraic,
    Stream,
    Naive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum LayoutArg {
    Baseline,
    Compact,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Unsorted => Strategy::Unsorted,
            StrategyArg::Sorted => Strategy::Sorted,
        }
    }
}

impl From<ModeArg> for CountMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Algebraic => CountMode::Algebraic,
            ModeArg::Stream => CountMode::Stream,
            ModeArg::Naive => CountMode::Naive,
        }
    }
}

impl From<LayoutArg> for LayoutKind {
    fn from(l: LayoutArg) -> Self {
        match l {
            LayoutArg::Baseline => LayoutKind::Baseline,
            LayoutArg::Compact => LayoutKind::Compact,
        }
    }
}

/// Parses `args` (program name first) and runs the chosen subcommand.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Polymul { strategy, file } => {
            read_input(file, stdin).and_then(|text| run_polymul(&text, strategy.into(), stdout))
        }
        Command::Fibcount { pattern, n, mode } => run_fibcount(&pattern, n, mode.into(), stdout),
        Command::Treedraw {
            layout,
            no_bars,
            file,
        } => read_input(file, stdin)
            .and_then(|text| run_treedraw(&text, layout.into(), !no_bars, stdout)),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}

/// A diagnostic plus the exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::input(format!("i/o: {e}"))
    }
}

fn read_input(file: Option<PathBuf>, stdin: &mut dyn Read) -> Result<String, Failure> {
    match file {
        Some(path) => std::fs::read_to_string(&path)
            .map_err(|e| Failure::input(format!("{}: {e}", path.display()))),
        None => {
            let mut text = String::new();
            stdin.read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

/// Each pair of non-blank lines is one case; blank lines are skipped.
pub fn run_polymul(input: &str, strategy: Strategy, out: &mut dyn Write) -> Result<(), Failure> {
    let mut pending: Option<(usize, &str)> = None;
    for (idx, raw) in input.lines().enumerate() {
        let line = raw.trim_end();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let Some((first_no, first)) = pending.take() else {
            pending = Some((lineno, line));
            continue;
        };
        let p1 = parse_line(first, first_no)?;
        let p2 = parse_line(line, lineno)?;
        let product = poly::multiply(&p1, &p2)
            .and_then(|raw| strategy.simplify(&raw))
            .map_err(|e| Failure::input(format!("lines {first_no}-{lineno}: {e}")))?;
        write!(out, "{}", poly::render_two_line(&product))?;
    }
    match pending {
        Some((lineno, _)) => Err(Failure::input(format!(
            "line {lineno}: polynomial has no partner (odd number of input lines)"
        ))),
        None => Ok(()),
    }
}

fn parse_line(text: &str, lineno: usize) -> Result<poly::Polynomial, Failure> {
    poly::parse_polynomial(text).map_err(|e| match e {
        poly::PolyError::Parse { offset, kind } => {
            Failure::input(format!("line {lineno}, column {}: {kind}", offset + 1))
        }
        other => Failure::input(format!("line {lineno}: {other}")),
    })
}

pub fn run_fibcount(
    pattern: &str,
    n: u32,
    mode: CountMode,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let query = FibQuery::new(pattern, n).map_err(|e| Failure::usage(e.to_string()))?;
    let count = mode.count(&query).map_err(|e| match e {
        FibError::CapExceeded { .. } => {
            Failure::usage(format!("{e}; use --mode algebraic for larger n"))
        }
        other => Failure::input(other.to_string()),
    })?;
    writeln!(out, "{count}")?;
    Ok(())
}

pub fn run_treedraw(
    input: &str,
    layout: LayoutKind,
    with_bars: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let root = tree::parse_tree_sexpr(input).map_err(|e| match e.offset() {
        Some(offset) => {
            let (line, col) = line_col(input, offset);
            Failure::input(format!("line {line}, column {col}: {e}"))
        }
        None => Failure::input(e.to_string()),
    })?;
    let placed = tree::compute_layout(&root, layout);
    let canvas = tree::render(&placed, &root, with_bars)
        .map_err(|e| Failure::input(format!("layout bug: {e}")))?;
    write!(out, "{canvas}")?;
    Ok(())
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.len() - before.rfind('\n').map_or(0, |i| i + 1) + 1;
    (line, col)
}
