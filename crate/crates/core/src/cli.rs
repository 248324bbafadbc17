//! Command-line front end.
//!
//! Exit codes: 0 on success or a passing verification, 1 when verification
//! finds violations, 2 for usage, parse and validation errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::code::BinaryCode;
use crate::decoder::{decode, DecodeOutcome};
use crate::fglm::{run_fglm, FglmOptions, FglmResult};
use crate::gf2::BitVector;
use crate::monomial::TermOrdering;
use crate::oracle::{verify_capability, verify_decoding, verify_gb, CosetTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "codefglm",
    version,
    about = "Groebner bases and syndrome decoding for binary linear codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct CodeArgs {
    /// Code file: a line `n r`, then the n rows of the n x r parity-check matrix.
    pub code: PathBuf,
    /// Term ordering.
    #[arg(long, default_value = "degrevlex", value_parser = parse_ordering)]
    pub ordering: TermOrdering,
    /// The file holds H in the r x n convention.
    #[arg(long)]
    pub transposed: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the reduced Groebner basis and related structures.
    Gb {
        #[command(flatten)]
        args: CodeArgs,
        #[arg(long, value_enum, default_value_t = OutputKind::Gb)]
        output: OutputKind,
    },
    /// Decode a received vector given as a bit string such as 111010.
    Decode {
        #[command(flatten)]
        args: CodeArgs,
        vector: String,
    },
    /// Print code parameters and the detected error-correcting capability.
    Info {
        #[command(flatten)]
        args: CodeArgs,
    },
    /// Check a run against brute-force ground truth.
    Verify {
        #[command(flatten)]
        args: CodeArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputKind {
    Gb,
    Border,
    Matphi,
    NormalSet,
    All,
}

fn parse_ordering(s: &str) -> Result<TermOrdering, String> {
    s.parse()
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.to_string(),
    }
}

fn load(args: &CodeArgs) -> Result<BinaryCode, Failure> {
    let text = std::fs::read_to_string(&args.code)
        .map_err(|e| usage(format!("{}: {e}", args.code.display())))?;
    BinaryCode::parse(&text, args.transposed)
        .map_err(|e| usage(format!("{}: {e}", args.code.display())))
}

fn compute(args: &CodeArgs) -> Result<FglmResult, Failure> {
    let code = load(args)?;
    run_fglm(&code, args.ordering, FglmOptions::default()).map_err(usage)
}

pub fn render_gb(result: &FglmResult) -> String {
    result.gb.iter().map(|b| format!("{b}\n")).collect()
}

pub fn render_border(result: &FglmResult) -> String {
    result
        .border
        .iter()
        .flatten()
        .map(|b| format!("{b}\n"))
        .collect()
}

pub fn render_normal_set(result: &FglmResult) -> String {
    result
        .normal_set
        .terms()
        .iter()
        .map(|w| format!("{w}\n"))
        .collect()
}

/// One line per variable: the 1-based image of each normal monomial.
pub fn render_matphi(result: &FglmResult) -> String {
    let mut out = String::new();
    for map in result.matphi.iter().flat_map(|m| m.maps()) {
        let line: Vec<String> = map.iter().map(|j| (j + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn cmd_gb(args: &CodeArgs, output: OutputKind) -> Result<String, Failure> {
    let result = compute(args)?;
    Ok(match output {
        OutputKind::Gb => render_gb(&result),
        OutputKind::Border => render_border(&result),
        OutputKind::Matphi => render_matphi(&result),
        OutputKind::NormalSet => render_normal_set(&result),
        OutputKind::All => format!(
            "# normal set\n{}# groebner basis\n{}# border basis\n{}# matphi\n{}",
            render_normal_set(&result),
            render_gb(&result),
            render_border(&result),
            render_matphi(&result)
        ),
    })
}

fn cmd_decode(args: &CodeArgs, vector: &str) -> Result<String, Failure> {
    let code = load(args)?;
    let y = BitVector::parse_bits(vector).map_err(|e| usage(format!("received vector: {e}")))?;
    if y.len() != code.n() {
        return Err(usage(format!(
            "received vector has length {}, code length is {}",
            y.len(),
            code.n()
        )));
    }
    if !args.ordering.is_degree_compatible() {
        return Err(usage(format!(
            "decoding needs a degree-compatible ordering, got {}",
            args.ordering
        )));
    }
    let result = run_fglm(&code, args.ordering, FglmOptions::default()).map_err(usage)?;
    let d = decode(&y, &result).map_err(usage)?;
    let mut out = format!("syndrome={}\n", d.syndrome.bits().to_bit_string());
    match &d.outcome {
        DecodeOutcome::Decoded { error, codeword } => {
            let _ = writeln!(out, "error={}", error.to_bit_string());
            let _ = writeln!(out, "codeword={}", codeword.to_bit_string());
        }
        DecodeOutcome::TooManyErrors => {
            let _ = writeln!(out, "error=TOO_MANY_ERRORS(w={})", d.canonical_weight);
        }
    }
    Ok(out)
}

fn cmd_info(args: &CodeArgs) -> Result<String, Failure> {
    let result = compute(args)?;
    let code = &result.code;
    let (d, t) = if code.k() == 0 {
        ("none".to_string(), "none".to_string())
    } else {
        let d = code.min_distance().map_err(usage)?;
        (d.to_string(), ((d - 1) / 2).to_string())
    };
    let detected = result
        .t_detected
        .map_or_else(|| "n/a".to_string(), |c| c.to_string());
    Ok(format!(
        "n={} k={} d={d} t={t} t_detected={detected}\n",
        code.n(),
        code.k()
    ))
}

fn cmd_verify(args: &CodeArgs) -> Result<(String, bool), Failure> {
    let code = load(args)?;
    let options = FglmOptions {
        cross_check_step4: true,
        ..FglmOptions::default()
    };
    let result = run_fglm(&code, args.ordering, options).map_err(usage)?;
    let mut report = verify_gb(&result);
    if result.ordering.is_degree_compatible() {
        let decoding = verify_decoding(&result.code, &result).map_err(usage)?;
        report.merge(decoding);
        let table = CosetTable::build(&result.code).map_err(usage)?;
        report.merge(verify_capability(&table, &result));
    }
    if result.trace.step4_disagreements > 0 {
        report.violations.push(format!(
            "step-4 count test disagreed with divisibility {} times",
            result.trace.step4_disagreements
        ));
    }
    Ok((report.to_string(), report.is_pass()))
}

/// Runs the CLI on `args` (including the program name), writing to the given
/// streams, and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Gb { args, output } => cmd_gb(args, *output).map(|s| (s, true)),
        Command::Decode { args, vector } => cmd_decode(args, vector).map(|s| (s, true)),
        Command::Info { args } => cmd_info(args).map(|s| (s, true)),
        Command::Verify { args } => cmd_verify(args),
    };
    match outcome {
        Ok((text, pass)) => {
            let _ = out.write_all(text.as_bytes());
            if pass {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
