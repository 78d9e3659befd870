//! The `scl` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use scl_core::cp::{basic_form, scl_to_cp};
use scl_core::decompose::{cd, dd, tsd};
use scl_core::evaltree::{se, EvalTree};
use scl_core::inverse::g;
use scl_core::models::check_suite;
use scl_core::normalize::{classify, decide_eq, nf, Engine};
use scl_core::syntax::{expand_full, parse, Mode, Term};
use scl_core::{fuzz, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INEQUAL: i32 = 1;
pub const EXIT_EQ_ERROR: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_SEMANTIC: i32 = 65;

#[derive(Parser, Debug)]
#[command(
    name = "scl",
    version,
    about = "Short-circuit logic from the command line"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the evaluation tree of a closed term.
    Se {
        expr: String,
        /// Emit a Graphviz description of the tree.
        #[arg(long)]
        dot: bool,
    },
    /// Print the normal form of a closed term.
    Nf {
        expr: String,
        /// Print with minimal parentheses.
        #[arg(long)]
        minimal: bool,
    },
    /// Name the normal-form category of a term.
    Classify { expr: String },
    /// Decide whether two closed terms have the same evaluation tree.
    Eq {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = EngineArg::Tree)]
        engine: EngineArg,
    },
    /// Split a tree into a holed context and a core.
    Decompose {
        tree: String,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Recover the normal form whose evaluation tree is given.
    Invert {
        tree: String,
        #[arg(long)]
        minimal: bool,
    },
    /// Rewrite a term into the conditional, or expand full connectives.
    Translate {
        expr: String,
        #[arg(long, value_enum)]
        to: TargetArg,
    },
    /// Print the basic form of a term.
    Basic { expr: String },
    /// Finite model checks.
    Models {
        #[command(subcommand)]
        action: ModelsAction,
    },
    /// Seeded round-trip checks on random terms.
    Fuzz {
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ModelsAction {
    /// Check every independence model against every axiom.
    Check,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum EngineArg {
    Tree,
    Nf,
    Cp,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Tree => Engine::Tree,
            EngineArg::Nf => Engine::Nf,
            EngineArg::Cp => Engine::Cp,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Cd,
    Dd,
    Tsd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum TargetArg {
    Cp,
    Full,
}

fn term(s: &str) -> Result<Term, Error> {
    parse(s, Mode::Enriched)
}

fn print_term(t: &Term, minimal: bool) -> String {
    if minimal {
        t.to_string()
    } else {
        t.explicit().to_string()
    }
}

enum Output {
    Text(String),
    Json(Value),
}

struct Done {
    output: Output,
    code: i32,
}

fn done(json: bool, text: impl FnOnce() -> String, value: impl FnOnce() -> Value) -> Done {
    Done {
        output: if json {
            Output::Json(value())
        } else {
            Output::Text(text())
        },
        code: EXIT_OK,
    }
}

fn execute(cli: Cli) -> Result<Done, Error> {
    let json = cli.json;
    Ok(match cli.command {
        Command::Se { expr, dot } => {
            let x = se(&expand_full(&term(&expr)?))?;
            if dot {
                Done {
                    output: Output::Text(x.to_dot().trim_end().to_string()),
                    code: EXIT_OK,
                }
            } else {
                done(json, || x.to_string(), || x.to_json())
            }
        }
        Command::Nf { expr, minimal } => {
            let n = nf(&expand_full(&term(&expr)?))?;
            done(json, || print_term(&n, minimal), || n.to_json())
        }
        Command::Classify { expr } => {
            let c = classify(&term(&expr)?);
            done(
                json,
                || c.name().to_string(),
                || json!({ "class": c.name() }),
            )
        }
        Command::Eq {
            left,
            right,
            engine,
        } => {
            let equal = decide_eq(&term(&left)?, &term(&right)?, engine.into())?;
            let verdict = if equal { "EQUAL" } else { "INEQUAL" };
            let mut d = done(
                json,
                || verdict.to_string(),
                || json!({ "equal": equal, "engine": Engine::from(engine).to_string() }),
            );
            d.code = if equal { EXIT_OK } else { EXIT_INEQUAL };
            d
        }
        Command::Decompose { tree, kind } => {
            let x = EvalTree::read(&tree)?;
            let d = match kind {
                KindArg::Cd => cd(&x)?,
                KindArg::Dd => dd(&x)?,
                KindArg::Tsd => tsd(&x)?,
            };
            done(
                json,
                || d.as_ref().map_or("none".to_string(), |d| d.to_string()),
                || d.as_ref().map_or(Value::Null, |d| d.to_json()),
            )
        }
        Command::Invert { tree, minimal } => {
            let p = g(&EvalTree::read(&tree)?)?;
            done(json, || print_term(&p, minimal), || p.to_json())
        }
        Command::Translate { expr, to } => {
            let p = term(&expr)?;
            p.require_closed()?;
            let out = match to {
                TargetArg::Cp => scl_to_cp(&p),
                TargetArg::Full => expand_full(&p),
            };
            done(json, || out.to_string(), || out.to_json())
        }
        Command::Basic { expr } => {
            let b = basic_form(&scl_to_cp(&term(&expr)?))?;
            done(json, || b.to_string(), || b.to_term().to_json())
        }
        Command::Models {
            action: ModelsAction::Check,
        } => {
            let reports = check_suite()?;
            let all = reports.iter().all(|r| r.passed());
            let mut d = done(
                json,
                || {
                    let tags: Vec<&str> =
                        reports[0].axioms.iter().map(|(t, _)| t.as_str()).collect();
                    let mut s = format!(
                        "{:<7}{}",
                        "model",
                        tags.iter().map(|t| format!("{t:<4}")).collect::<String>()
                    );
                    s.push_str("result  refutation");
                    for r in &reports {
                        let cells: String = r
                            .axioms
                            .iter()
                            .map(|(_, v)| format!("{:<4}", if v.holds { "+" } else { "-" }))
                            .collect();
                        s.push_str(&format!(
                            "\n{:<7}{cells}{:<8}{}: {} vs {}",
                            r.model,
                            if r.passed() { "PASS" } else { "FAIL" },
                            r.refutation,
                            r.refutation_lhs,
                            r.refutation_rhs
                        ));
                        if let Some(note) = &r.note {
                            s.push_str(&format!(" ({note})"));
                        }
                    }
                    s
                },
                || json!({ "passed": all, "models": reports }),
            );
            d.code = if all { EXIT_OK } else { EXIT_INEQUAL };
            d
        }
        Command::Fuzz { count, seed } => {
            let r = fuzz::run(count, seed)?;
            let mut d = done(
                json,
                || {
                    let mut s = format!(
                        "seed={} count={} nf_shape={} se_preserved={} inverse_round_trip={} engines_agree={} equal_pairs={} failures={}",
                        r.seed,
                        r.count,
                        r.nf_shape,
                        r.se_preserved,
                        r.inverse_round_trip,
                        r.engines_agree,
                        r.equal_pairs,
                        r.failures.len()
                    );
                    for f in &r.failures {
                        s.push_str(&format!("\nfailure: {f}"));
                    }
                    s
                },
                || json!(r),
            );
            d.code = if r.passed() { EXIT_OK } else { EXIT_INEQUAL };
            d
        }
    })
}

/// Runs the command line `args`, the first item being the program name, and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let is_eq = matches!(cli.command, Command::Eq { .. });
    match execute(cli) {
        Ok(Done { output, code }) => {
            let _ = match output {
                Output::Text(s) => writeln!(out, "{s}"),
                Output::Json(v) => writeln!(out, "{v}"),
            };
            code
        }
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", e.name());
            if is_eq {
                EXIT_EQ_ERROR
            } else {
                EXIT_SEMANTIC
            }
        }
    }
}
