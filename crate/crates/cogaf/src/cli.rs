//! Command-line interface over the solver, the generator, and the
//! verification harness.
//!
//! Exit codes: 0 on success, 1 when `check` finds a violation, 2 on
//! usage, parse, or size-limit errors. Results go to stdout, diagnostics
//! to stderr.

use std::fs;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::af::Framework;
use crate::error::Error;
use crate::gen::{random_af, GenConfig};
use crate::harness::{compare_semantics, sweep_exhaustive, sweep_random, RandomSweepConfig};
use crate::io::{parse_apx, parse_tgf, render_af, render_extensions, render_tgf, RenderFormat};
use crate::semantics::{maximal_by_inclusion, Solver};

/// Default argument cap for cogent enumeration, which compares up to
/// 4^n subset pairs.
const DEFAULT_MAX_COGENT: usize = 14;
/// Default argument cap where weak admissibility is involved; its
/// recursion visits up to 3^n subset-of-subframework pairs.
const DEFAULT_MAX_WEAK: usize = 12;
/// Default cap for the semantics that only scan 2^n subsets once.
const DEFAULT_MAX_SIMPLE: usize = 20;

#[derive(Parser)]
#[command(
    name = "cogaf",
    version,
    about = "Extension solver for finite abstract argumentation frameworks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the extensions of a framework under one semantics
    Solve(SolveArgs),
    /// Report admissible, cogent, and weakly admissible sets side by side
    Compare(CompareArgs),
    /// Generate a seeded random framework
    Gen(GenArgs),
    /// Verify cross-semantics claims over framework sweeps
    Check(CheckArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Semantics to enumerate
    #[arg(long, value_enum)]
    semantics: SemanticsArg,
    /// Keep only the inclusion-maximal extensions
    #[arg(long)]
    maximal: bool,
    /// Output encoding
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Input grammar; defaults to the file extension (stdin defaults to apx)
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Override the argument-count refusal threshold
    #[arg(long)]
    max_args: Option<usize>,
    /// Input path, or `-` for stdin
    input: String,
}

#[derive(Args)]
struct CompareArgs {
    /// Output encoding
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Input grammar; defaults to the file extension (stdin defaults to apx)
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
    /// Override the argument-count refusal threshold
    #[arg(long)]
    max_args: Option<usize>,
    /// Input path, or `-` for stdin
    input: String,
}

#[derive(Args)]
struct GenArgs {
    /// Argument count
    #[arg(long)]
    n: usize,
    /// Independent inclusion probability for each attack pair
    #[arg(long)]
    p: f64,
    /// Generator seed
    #[arg(long)]
    seed: u64,
    /// Also draw self-attacking pairs
    #[arg(long)]
    self_attacks: bool,
    /// Output grammar
    #[arg(long, value_enum, default_value_t = GenFormat::Apx)]
    format: GenFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// Check every labeled framework with exactly this many arguments (at most 4);
    /// without any flags, all frameworks with 0..=3 arguments are checked
    #[arg(long)]
    exhaustive_n: Option<usize>,
    /// Also check this many seeded random frameworks
    #[arg(long)]
    random: Option<usize>,
    /// Largest random framework; argument counts cycle through 1..=MAX_N
    #[arg(long, requires = "random")]
    max_n: Option<usize>,
    /// Base seed for the random sweep
    #[arg(long, requires = "random")]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    ConflictFree,
    Admissible,
    Cogent,
    WeakAdmissible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Apx,
    Tgf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFormat {
    Apx,
    Tgf,
}

/// Parses `args` (including the program name) and runs the selected
/// subcommand against the given streams. Returns the process exit code.
pub fn run(
    args: impl IntoIterator<Item = String>,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    let outcome = match cli.command {
        Command::Solve(args) => cmd_solve(args, stdin).map(|out| (out, 0)),
        Command::Compare(args) => cmd_compare(args, stdin).map(|out| (out, 0)),
        Command::Gen(args) => cmd_gen(args).map(|out| (out, 0)),
        Command::Check(args) => cmd_check(args),
    };
    match outcome {
        Ok((output, code)) => {
            let _ = write!(stdout, "{output}");
            code
        }
        Err(message) => {
            let _ = writeln!(stderr, "{message}");
            2
        }
    }
}

fn read_input(path: &str, stdin: &mut dyn Read) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        stdin
            .read_to_string(&mut text)
            .map_err(|e| format!("error: cannot read stdin: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("error: cannot read `{path}`: {e}"))
    }
}

fn load_framework(
    input: &str,
    explicit: Option<InputFormat>,
    stdin: &mut dyn Read,
) -> Result<Framework, String> {
    let format = match explicit {
        Some(format) => format,
        None if input == "-" || input.ends_with(".apx") => InputFormat::Apx,
        None if input.ends_with(".tgf") => InputFormat::Tgf,
        None => {
            return Err(format!(
                "error: cannot infer the input format of `{input}`; pass --input-format"
            ));
        }
    };
    let text = read_input(input, stdin)?;
    let parsed = match format {
        InputFormat::Apx => parse_apx(&text),
        InputFormat::Tgf => parse_tgf(&text),
    };
    parsed.map_err(|e| format!("error: {e}"))
}

fn describe(e: Error) -> String {
    match e {
        Error::SizeLimitExceeded { .. } => {
            format!("error: {e}\nhint: pass --max-args to raise the limit")
        }
        other => format!("error: {other}"),
    }
}

fn finish(rendered: String, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => rendered,
        OutputFormat::Json => rendered + "\n",
    }
}

impl From<OutputFormat> for RenderFormat {
    fn from(format: OutputFormat) -> RenderFormat {
        match format {
            OutputFormat::Text => RenderFormat::Text,
            OutputFormat::Json => RenderFormat::Json,
        }
    }
}

fn cmd_solve(args: SolveArgs, stdin: &mut dyn Read) -> Result<String, String> {
    let f = load_framework(&args.input, args.input_format, stdin)?;
    let default_cap = match args.semantics {
        SemanticsArg::Cogent => DEFAULT_MAX_COGENT,
        SemanticsArg::WeakAdmissible => DEFAULT_MAX_WEAK,
        _ => DEFAULT_MAX_SIMPLE,
    };
    let solver = Solver::with_max_args(args.max_args.unwrap_or(default_cap));
    let sets = match args.semantics {
        SemanticsArg::ConflictFree => solver.enumerate_conflict_free(&f),
        SemanticsArg::Admissible => solver.enumerate_admissible(&f),
        SemanticsArg::Cogent => solver.enumerate_cogent(&f),
        SemanticsArg::WeakAdmissible => solver.enumerate_weakly_admissible(&f),
    }
    .map_err(describe)?;
    let sets = if args.maximal {
        maximal_by_inclusion(&sets)
    } else {
        sets
    };
    Ok(finish(
        render_extensions(&f, &sets, args.format.into()),
        args.format,
    ))
}

fn cmd_compare(args: CompareArgs, stdin: &mut dyn Read) -> Result<String, String> {
    let f = load_framework(&args.input, args.input_format, stdin)?;
    let solver = Solver::with_max_args(args.max_args.unwrap_or(DEFAULT_MAX_WEAK));
    let report = compare_semantics(&solver, &f).map_err(describe)?;
    Ok(match args.format {
        OutputFormat::Text => report.render_text(),
        OutputFormat::Json => {
            finish(serde_json::to_string(&report).expect("report serializes"), args.format)
        }
    })
}

fn cmd_gen(args: GenArgs) -> Result<String, String> {
    let f = random_af(GenConfig {
        n: args.n,
        p: args.p,
        seed: args.seed,
        allow_self_attacks: args.self_attacks,
    })
    .map_err(|e| format!("error: {e}"))?;
    Ok(match args.format {
        GenFormat::Apx => render_af(&f, RenderFormat::Text),
        GenFormat::Tgf => render_tgf(&f),
    })
}

fn cmd_check(args: CheckArgs) -> Result<(String, i32), String> {
    let solver = Solver::new();
    let mut sections = Vec::new();
    let mut violations = 0;
    if let Some(n) = args.exhaustive_n {
        let report = sweep_exhaustive(&solver, n, n).map_err(|e| format!("error: {e}"))?;
        violations += report.summary.violations;
        sections.push(report.render_text());
    } else if args.random.is_none() {
        let report = sweep_exhaustive(&solver, 0, 3).map_err(|e| format!("error: {e}"))?;
        violations += report.summary.violations;
        sections.push(report.render_text());
    }
    if let Some(count) = args.random {
        let cfg = RandomSweepConfig {
            count,
            min_args: 1,
            max_args: args.max_n.unwrap_or(6),
            attack_probs: vec![0.2, 0.5],
            seed: args.seed.unwrap_or(0),
            allow_self_attacks: true,
        };
        let report = sweep_random(&solver, &cfg).map_err(|e| format!("error: {e}"))?;
        violations += report.summary.violations;
        sections.push(report.render_text());
    }
    Ok((sections.join("\n"), if violations == 0 { 0 } else { 1 }))
}
