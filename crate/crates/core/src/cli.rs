//! Command-line surface. [`run`] does all the work and returns the text and
//! exit code so it can be driven from tests; the binary only forwards them.
//!
//! Exit codes: 0 terminating (or success), 1 nonterminating, 2 input or usage
//! error.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::parse_rational;
use crate::bench::{run_suite, BenchConfig};
use crate::certificate::{verify, CertificateDoc, WitnessDoc};
use crate::decision::{decide, HomogeneousProgram, Verdict};
use crate::error::Error;
use crate::frontend::{
    homogenize, lift_state, lifted_variables, load_system, AffineSystem, InputFormat,
};
use crate::simulate::{run as run_program, run_in_field, RunOutcome};
use crate::witness::{coordinate_strings, synthesize_witness};

pub const EXIT_TERMINATING: i32 = 0;
pub const EXIT_NONTERMINATING: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

const AFFINE_NOTE: &str = "note: the affine loop was decided through its homogenization with a \
constant variable; TERMINATING carries over to the affine loop, NONTERMINATING is about the \
lifted loop, whose constant variable ranges over all reals";

#[derive(Debug, Parser)]
#[command(
    name = "linloop",
    version,
    about = "Exact termination analysis of while (f·x > 0) { x := A x }"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Dsl,
    Matrix,
}

#[derive(Debug, clap::Args)]
pub struct InputArgs {
    /// Input file, `-` for stdin, or the document itself with `--inline`.
    pub input: String,
    /// Treat INPUT as the document text rather than a path.
    #[arg(long)]
    pub inline: bool,
    /// Input format; detected from the content when omitted.
    #[arg(long, value_enum)]
    pub format: Option<FormatArg>,
    /// Emit machine-readable JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide termination and print a certificate.
    Check {
        #[command(flatten)]
        input: InputArgs,
        /// Also write the JSON certificate to this file.
        #[arg(long, value_name = "PATH")]
        out: Option<String>,
    },
    /// Print an explicit nonterminating input.
    Witness {
        #[command(flatten)]
        input: InputArgs,
        /// Steps of exact simulation run on the witness.
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Run the loop exactly from a rational start.
    Simulate {
        #[command(flatten)]
        input: InputArgs,
        /// Start state, comma separated (`1,-2,3/4`).
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Decide batches of random programs and report counts and times.
    Bench {
        /// Dimensions, comma separated.
        #[arg(long, default_value = "3,4,5", value_delimiter = ',')]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        loops: usize,
        #[arg(long, default_value_t = 10)]
        magnitude: i64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Re-check a JSON certificate written by `check`.
    Verify { certificate: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(code: i32, stdout: String) -> Self {
        CliOutput {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        CliOutput {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CliOutput::ok(0, text)
                }
                _ => CliOutput::error(text),
            };
        }
    };
    match cli.command {
        Command::Check { input, out } => cmd_check(&input, out.as_deref()),
        Command::Witness { input, bound } => cmd_witness(&input, bound),
        Command::Simulate { input, x, bound } => cmd_simulate(&input, &x, bound),
        Command::Bench {
            dims,
            loops,
            magnitude,
            seed,
            json,
        } => cmd_bench(
            BenchConfig {
                dimensions: dims,
                loops_per_set: loops,
                entry_magnitude: magnitude,
                seed,
            },
            json,
        ),
        Command::Verify { certificate } => cmd_verify(&certificate),
    }
}

fn read_source(input: &InputArgs) -> Result<String, String> {
    if input.inline {
        return Ok(input.input.clone());
    }
    if input.input == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("error: reading stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(&input.input).map_err(|e| format!("error: {}: {e}", input.input))
}

fn load(input: &InputArgs) -> Result<(AffineSystem, HomogeneousProgram), String> {
    let text = read_source(input)?;
    let format = match input.format {
        Some(FormatArg::Dsl) => InputFormat::Dsl,
        Some(FormatArg::Matrix) => InputFormat::Matrix,
        None => InputFormat::detect(&text),
    };
    let sys = load_system(&text, format).map_err(|e| describe_error(input, &e))?;
    let program = homogenize(&sys).map_err(|e| describe_error(input, &e))?;
    Ok((sys, program))
}

fn describe_error(input: &InputArgs, e: &Error) -> String {
    let name = match (input.inline, input.input.as_str()) {
        (true, _) => "<inline>",
        (false, "-") => "<stdin>",
        (false, path) => path,
    };
    match e {
        // these already render as `line:column: message`
        Error::Syntax { .. }
        | Error::UndeclaredVariable { .. }
        | Error::DuplicateAssignment { .. } => {
            format!("error: {name}:{e}")
        }
        _ => format!("error: {name}: {e}"),
    }
}

fn cmd_check(input: &InputArgs, out: Option<&str>) -> CliOutput {
    let (sys, program) = match load(input) {
        Ok(x) => x,
        Err(e) => return CliOutput::error(e),
    };
    let cert = match decide(&program) {
        Ok(c) => c,
        Err(e) => return CliOutput::error(describe_error(input, &e)),
    };
    let doc = CertificateDoc::new(&program, &cert);
    if let Some(path) = out {
        if let Err(e) = std::fs::write(path, doc.to_json() + "\n") {
            return CliOutput::error(format!("error: {path}: {e}"));
        }
    }
    let code = match cert.verdict {
        Verdict::Terminating => EXIT_TERMINATING,
        Verdict::Nonterminating => EXIT_NONTERMINATING,
    };
    if input.json {
        return CliOutput::ok(code, doc.to_json() + "\n");
    }

    let mut s = String::new();
    let _ = writeln!(s, "verdict: {}", cert.verdict);
    let _ = writeln!(s, "variables: {}", lifted_variables(&sys).join(", "));
    let _ = writeln!(s, "characteristic polynomial: {}", cert.char_poly);
    if cert.positive_eigenvalues.is_empty() {
        let _ = writeln!(s, "no positive eigenvalues");
    } else {
        let _ = writeln!(s, "positive eigenvalues:");
        for e in &cert.positive_eigenvalues {
            let _ = writeln!(
                s,
                "  {}  minpoly {}, interval {}, multiplicity {}",
                e.value.describe(),
                e.value.minpoly(),
                e.value.interval(),
                e.multiplicity
            );
        }
        let _ = writeln!(s, "row-space tests:");
        for m in &cert.memberships {
            let _ = writeln!(
                s,
                "  {}: {} (pivot entry {})",
                m.eigenvalue.value.describe(),
                if m.member {
                    "guard in row space"
                } else {
                    "guard NOT in row space"
                },
                m.pivot_entry
            );
        }
    }
    if let Some(f) = &cert.failing_eigenvalue {
        let _ = writeln!(s, "failing eigenvalue: {}", f.value.describe());
    }
    if !sys.is_homogeneous() {
        let _ = writeln!(s, "{AFFINE_NOTE}");
    }
    CliOutput::ok(code, s)
}

fn cmd_witness(input: &InputArgs, bound: u64) -> CliOutput {
    let (_, program) = match load(input) {
        Ok(x) => x,
        Err(e) => return CliOutput::error(e),
    };
    let result = decide(&program).and_then(|cert| match cert.failing_eigenvalue {
        None => Ok(None),
        Some(ev) => {
            let w = synthesize_witness(&program, &ev)?;
            let outcome = run_in_field(&program, &w.vector, &w.eigenvalue, bound)?;
            Ok(Some((w, outcome)))
        }
    });
    let (w, outcome) = match result {
        Ok(Some(x)) => x,
        Ok(None) => return CliOutput::error("error: program terminates; no witness exists"),
        Err(e) => return CliOutput::error(describe_error(input, &e)),
    };
    let doc = WitnessDoc::new(&program, &w, Some((bound, outcome)));
    if input.json {
        return CliOutput::ok(EXIT_NONTERMINATING, doc.to_json() + "\n");
    }
    let mut s = String::new();
    let _ = writeln!(s, "eigenvalue: λ = {}", w.eigenvalue.describe());
    let _ = writeln!(
        s,
        "minimal polynomial: {}",
        w.eigenvalue.minpoly().display_in("λ")
    );
    let _ = writeln!(s, "isolating interval: {}", w.eigenvalue.interval());
    let _ = writeln!(s, "kernel layer r: {}", w.rank_r);
    let _ = writeln!(s, "witness: ({})", coordinate_strings(&w.vector).join(", "));
    let _ = writeln!(s, "scale: {}", w.scale);
    let _ = writeln!(
        s,
        "scaled witness: ({})",
        coordinate_strings(&w.scaled_vector).join(", ")
    );
    let _ = writeln!(s, "simulation: {}", describe_outcome(outcome));
    CliOutput::ok(EXIT_NONTERMINATING, s)
}

fn describe_outcome(outcome: RunOutcome) -> String {
    match outcome {
        RunOutcome::TerminatedAt(k) => format!("terminated at k={k}"),
        RunOutcome::SurvivedBound(b) => format!("guard held for all {b} steps (inconclusive)"),
    }
}

fn cmd_simulate(input: &InputArgs, x: &str, bound: u64) -> CliOutput {
    let (sys, program) = match load(input) {
        Ok(x) => x,
        Err(e) => return CliOutput::error(e),
    };
    let start: Result<Vec<_>, _> = x
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(parse_rational)
        .collect();
    let start = match start {
        Ok(v) => v,
        Err(e) => return CliOutput::error(format!("error: --x: {e}")),
    };
    if start.len() != sys.dimension() {
        return CliOutput::error(format!(
            "error: --x has {} entries, the program has {} variables",
            start.len(),
            sys.dimension()
        ));
    }
    let outcome = match run_program(&program, &lift_state(&sys, &start), bound) {
        Ok(o) => o,
        Err(e) => return CliOutput::error(describe_error(input, &e)),
    };
    if input.json {
        let (terminated_at, survived) = match outcome {
            RunOutcome::TerminatedAt(k) => (Some(k), false),
            RunOutcome::SurvivedBound(_) => (None, true),
        };
        let doc = serde_json::json!({
            "format_version": crate::certificate::FORMAT_VERSION,
            "bound": bound,
            "survived": survived,
            "terminated_at": terminated_at,
        });
        return CliOutput::ok(0, format!("{doc:#}\n"));
    }
    CliOutput::ok(0, describe_outcome(outcome) + "\n")
}

fn cmd_bench(config: BenchConfig, json: bool) -> CliOutput {
    match run_suite(&config) {
        Ok(report) if json => CliOutput::ok(0, report.to_json() + "\n"),
        Ok(report) => CliOutput::ok(0, report.to_string() + "\n"),
        Err(e) => CliOutput::error(format!("error: {e}")),
    }
}

fn cmd_verify(path: &str) -> CliOutput {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return CliOutput::error(format!("error: {path}: {e}")),
    };
    match CertificateDoc::from_json(&text).and_then(|doc| verify(&doc)) {
        Ok(problems) if problems.is_empty() => CliOutput::ok(0, "certificate verified\n".into()),
        Ok(problems) => CliOutput::error(
            problems
                .iter()
                .map(|p| format!("invalid: {p}"))
                .collect::<Vec<_>>()
                .join("\n"),
        ),
        Err(e) => CliOutput::error(format!("error: {path}: {e}")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> CliOutput {
        run(std::iter::once("linloop").chain(args.iter().copied()))
    }

    const ROTATION: &str = r#"{"n":2,"A":[[3,-2],[4,-1]],"f":[3,-1]}"#;
    const GOLDEN: &str =
        r#"{"n":4,"A":[[2,-1,0,0],[-1,2,-1,0],[0,-1,2,1],[0,0,0,2]],"f":[-1,-1,1,1]}"#;

    #[test]
    fn check_exit_codes() {
        let t = call(&["check", "--inline", ROTATION]);
        assert_eq!(t.code, EXIT_TERMINATING, "{}", t.stderr);
        assert!(t.stdout.contains("no positive eigenvalues"));
        let nt = call(&["check", "--inline", GOLDEN]);
        assert_eq!(nt.code, EXIT_NONTERMINATING);
        assert!(nt.stdout.contains("failing eigenvalue: 2 + sqrt(2)"));
        assert_eq!(call(&["check", "--inline", "{\"n\":"]).code, EXIT_ERROR);
        assert_eq!(call(&["check", "/nonexistent/file"]).code, EXIT_ERROR);
        assert_eq!(call(&["frobnicate"]).code, EXIT_ERROR);
    }

    #[test]
    fn check_json_is_a_certificate() {
        let out = call(&["check", "--json", "--inline", GOLDEN]);
        let doc = CertificateDoc::from_json(&out.stdout).unwrap();
        assert_eq!(doc.failing_eigenvalue.unwrap().description, "2 + sqrt(2)");
    }

    #[test]
    fn witness_for_terminating_program_is_an_error() {
        let out = call(&["witness", "--inline", ROTATION]);
        assert_eq!(out.code, EXIT_ERROR);
        assert!(out.stderr.contains("program terminates"));
    }

    #[test]
    fn simulate_dsl() {
        let src = "while (z > 0) { x := x + y; z := -z; }";
        let out = call(&["simulate", "--inline", src, "--x", "0,0,1", "--bound", "10"]);
        assert_eq!(out.stdout.trim(), "terminated at k=1");
        let bad = call(&["simulate", "--inline", src, "--x", "0,1"]);
        assert_eq!(bad.code, EXIT_ERROR);
    }

    #[test]
    fn affine_loops_carry_a_note() {
        let out = call(&["check", "--inline", "while (x > 5) { x := x + 1; }"]);
        assert_eq!(out.code, EXIT_NONTERMINATING);
        assert!(out.stdout.contains("note: the affine loop"));
        let hom = call(&["check", "--inline", "while (x > 0) { x := 2x; }"]);
        assert!(!hom.stdout.contains("note:"));
    }

    #[test]
    fn dsl_errors_report_positions() {
        let out = call(&["check", "--inline", "while (x > 0) {\n x := 1.5x; }"]);
        assert_eq!(out.code, EXIT_ERROR);
        assert!(out.stderr.contains(":2:7:"), "{}", out.stderr);
        let two = call(&["check", "--inline", "while (x > 0 && y > 0) { x := y; }"]);
        assert_eq!(two.code, EXIT_ERROR);
        let ge = call(&["check", "--inline", "while (x >= 0) { x := -x; }"]);
        assert_eq!(ge.code, EXIT_ERROR);
    }
}
