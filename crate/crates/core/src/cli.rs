//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::group::{parse_word, to_word, ShiftConvention};
use crate::orders::{cmp_gamma_staged, Verdict};
use crate::realization::realize;
use crate::report::AuditReport;
use crate::suites::{verify, RunConfig, Suite};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_UNEXPECTED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "gamma-audit",
    version,
    about = "Exact audits of BS(1,2) ⋉ Ω and its left orders"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shift {
    /// `(t x)_n = x_{n+1}`, so that `t a t^-1 = a^2` holds for the action.
    #[value(alias = "relation-fixed")]
    Fixed,
    /// `(t x)_n = x_{n-1}`.
    #[value(alias = "paper", alias = "paper-literal")]
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct Options {
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Sampled triples per order check.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub radius: u64,
    /// Radius of the ball over `t, a` for condition (viii).
    #[arg(long, global = true, default_value_t = 8, value_parser = clap::value_parser!(u64).range(1..))]
    pub g_radius: u64,
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(i64).range(1..))]
    pub n_range: i64,
    /// Search bound for cofinality of `b`.
    #[arg(long, global = true, default_value_t = 1 << 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub n_max: u64,
    #[arg(long, global = true, value_enum, default_value_t = Shift::Fixed)]
    pub shift: Shift,
    /// Starting precision in bits for sign determination.
    #[arg(long, global = true, default_value_t = 64, value_parser = clap::value_parser!(u64).range(1..))]
    pub precision: u64,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a word.
    Eval { word: String },
    /// Compare two words under `<`.
    Cmp { lhs: String, rhs: String },
    /// Run audit suites.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Realize a ball on the line and check (c1)-(c3) and freeness.
    Realize {
        /// Print the coordinates of the ball.
        #[arg(long)]
        number_line: bool,
    },
}

impl Options {
    pub fn config(&self) -> RunConfig {
        RunConfig {
            seed: self.seed,
            samples: self.samples as usize,
            radius: self.radius as usize,
            g_radius: self.g_radius as usize,
            n_range: self.n_range,
            n_max: self.n_max,
            shift: match self.shift {
                Shift::Fixed => ShiftConvention::RelationFixed,
                Shift::Literal => ShiftConvention::Literal,
            },
            precision_bits: self.precision,
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Word(_) | Error::Value(_) => EXIT_PARSE,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_UNEXPECTED,
    }
}

fn emit_json(opts: &Options, value: &serde_json::Value, out: &mut dyn Write) -> crate::Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    if let Some(path) = &opts.json {
        std::fs::write(path, format!("{text}\n"))?;
    }
    if opts.output == Output::Json {
        writeln!(out, "{text}")?;
    }
    Ok(())
}

fn run_inner(cli: &Cli, out: &mut dyn Write) -> crate::Result<i32> {
    let opts = &cli.opts;
    match &cli.command {
        Command::Eval { word } => {
            let g = parse_word(word)?;
            let w = to_word(&g);
            let shown = if g.is_identity() {
                "identity".to_string()
            } else {
                w
            };
            if opts.output == Output::Text {
                writeln!(out, "{shown}")?;
                writeln!(out, "{g}")?;
            }
            emit_json(
                opts,
                &serde_json::json!({ "word": shown, "element": g }),
                out,
            )?;
            Ok(EXIT_OK)
        }
        Command::Cmp { lhs, rhs } => {
            let (g, h) = (parse_word(lhs)?, parse_word(rhs)?);
            crate::ring::set_initial_precision(opts.precision);
            let (o, stage) = cmp_gamma_staged(&g, &h);
            let verdict = Verdict::from(o);
            if opts.output == Output::Text {
                writeln!(out, "{verdict:?} (stage: {})", stage.label())?;
            }
            emit_json(
                opts,
                &serde_json::json!({ "verdict": verdict, "stage": stage, "lhs": g, "rhs": h }),
                out,
            )?;
            Ok(EXIT_OK)
        }
        Command::Verify { suite } => {
            let reports = verify(*suite, &opts.config())?;
            if opts.output == Output::Text {
                for r in &reports {
                    write!(out, "{}", r.to_text())?;
                }
            }
            emit_json(opts, &serde_json::to_value(&reports)?, out)?;
            let ok = reports.iter().all(AuditReport::all_met);
            if opts.output == Output::Text {
                writeln!(
                    out,
                    "{}",
                    if ok {
                        "all expectations met"
                    } else {
                        "UNEXPECTED OUTCOMES"
                    }
                )?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_UNEXPECTED })
        }
        Command::Realize { number_line } => {
            let config = opts.config();
            crate::ring::set_initial_precision(config.precision_bits);
            let z = realize(config.radius, config.n_range, config.n_max)?;
            if opts.output == Output::Text {
                if *number_line {
                    write!(out, "{}", z.ball.number_line())?;
                }
                write!(out, "{}", z.report.to_text())?;
            }
            emit_json(opts, &z.to_json(), out)?;
            Ok(if z.report.all_met() {
                EXIT_OK
            } else {
                EXIT_UNEXPECTED
            })
        }
    }
}

/// Runs a parsed command, writing reports to `out` and errors to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match run_inner(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

/// Parses `args` (including the program name) and runs.
pub fn run_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, out, err),
        Err(e) if e.use_stderr() => {
            let _ = write!(err, "{e}");
            EXIT_PARSE
        }
        Err(e) => {
            let _ = write!(out, "{e}");
            EXIT_OK
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["gamma-audit"];
        full.extend_from_slice(args);
        let code = run_args(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            run_capture(&["eval", "t a T A"]).1.lines().next(),
            Some("a")
        );
        assert_eq!(
            run_capture(&["eval", ""]).1.lines().next(),
            Some("identity")
        );
        assert_eq!(
            run_capture(&["eval", "a b A B B"]).1.lines().next(),
            Some("identity")
        );
    }

    #[test]
    fn eval_parse_error() {
        let (code, _, err) = run_capture(&["eval", "t q"]);
        assert_eq!(code, EXIT_PARSE);
        assert!(err.contains("byte 2"), "{err}");
    }

    #[test]
    fn cmp_examples() {
        assert_eq!(run_capture(&["cmp", "t", "a"]).1.trim(), "Less (stage: u)");
        assert_eq!(
            run_capture(&["cmp", "b", "b"]).1.trim(),
            "Equal (stage: equal)"
        );
        assert_eq!(
            run_capture(&["cmp", "A b a", "t b T"]).1.trim(),
            "Less (stage: Ω-sum)"
        );
    }

    #[test]
    fn verify_relations_exit_codes() {
        let (code, out, _) = run_capture(&["verify", "relations"]);
        assert_eq!(code, EXIT_OK, "{out}");
        let (code, out, _) = run_capture(&["verify", "relations", "--shift", "literal"]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("acts as a^1/2^1"), "{out}");
    }

    #[test]
    fn bad_flag_is_a_parse_error() {
        assert_eq!(run_capture(&["verify", "--radius", "0"]).0, EXIT_PARSE);
    }
}
