//! Subcommand definitions and dispatch.
//!
//! Exit codes: 0 on success, 1 on parse or validation errors, 2 when
//! `check-identity` finds a counterexample.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::calculus::{berezin_integral, body, left_derivative, nil_index, soul};
use crate::cli::eval::{eval_element, eval_free};
use crate::cli::parse::{parse, Namespace};
use crate::cli::print::{element_json, print_element, print_substitution, substitution_json};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::grading::{even_part, is_central, odd_part};
use crate::pi::{evaluate, in_ideal, is_identity, Domain};
use crate::scalar;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "grassmann",
    version,
    about = "Exact arithmetic in the Grassmann algebra"
)]
pub struct Cli {
    /// Number of generators x1..xn.
    #[arg(short = 'n', global = true, default_value_t = 4)]
    pub generators: u32,

    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DomainArg {
    All,
    Even,
    Odd,
}

impl From<DomainArg> for Domain {
    fn from(d: DomainArg) -> Domain {
        match d {
            DomainArg::All => Domain::All,
            DomainArg::Even => Domain::Even,
            DomainArg::Odd => Domain::Odd,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical normal form.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the even and odd parts.
    Grade {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Report whether the element is central.
    Center {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the coefficient of 1.
    Body {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print the element minus its body.
    Soul {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Left derivative with respect to x_i.
    Derive {
        #[arg(short = 'i')]
        index: u32,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Berezin integral over x_i (same as the left derivative).
    Integrate {
        #[arg(short = 'i')]
        index: u32,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Least k with p^k = 0, searched up to the cap (default n + 1).
    Nilindex {
        #[arg(long)]
        cap: Option<u32>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check whether a polynomial in y1, y2, ... is an identity of the algebra.
    CheckIdentity {
        #[arg(long, value_enum, default_value_t = DomainArg::All)]
        domain: DomainArg,
        /// Random substitutions tried when the polynomial is not multilinear.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Report whether a free polynomial in x1, x2, ... lies in the
    /// anticommutator ideal.
    InIdeal {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

/// Result of one invocation: what to print and how to exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn error(message: String) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: message,
            code: EXIT_ERROR,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome::error(rendered)
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(format!("error: {e}\n")),
    }
}

fn element_arg(text: &str, n: u32) -> Result<Element> {
    eval_element(&parse(text, Namespace::Generators)?, n)
}

fn check_index(index: u32, n: u32) -> Result<()> {
    match index {
        0 => Err(Error::ZeroIndex),
        i if i > n => Err(Error::IndexOutOfRange { index: i, n }),
        _ => Ok(()),
    }
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text + "\n",
        Format::Json => value.to_string() + "\n",
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let n = cli.generators;
    if n == 0 {
        return Err(Error::InvalidGeneratorCount);
    }
    let fmt = cli.format;
    let element_out = |p: &Element| render(fmt, print_element(p), element_json(p));

    let stdout = match &cli.command {
        Command::Normalize { expr } => element_out(&element_arg(expr, n)?),
        Command::Grade { expr } => {
            let p = element_arg(expr, n)?;
            let (even, odd) = (even_part(&p), odd_part(&p));
            render(
                fmt,
                format!(
                    "even: {}\nodd: {}",
                    print_element(&even),
                    print_element(&odd)
                ),
                json!({ "even": element_json(&even), "odd": element_json(&odd) }),
            )
        }
        Command::Center { expr } => {
            let central = is_central(&element_arg(expr, n)?, n);
            render(fmt, central.to_string(), json!({ "central": central }))
        }
        Command::Body { expr } => {
            let b = scalar::format(&body(&element_arg(expr, n)?));
            render(fmt, b.clone(), json!({ "body": b }))
        }
        Command::Soul { expr } => element_out(&soul(&element_arg(expr, n)?)),
        Command::Derive { index, expr } => {
            check_index(*index, n)?;
            element_out(&left_derivative(&element_arg(expr, n)?, *index))
        }
        Command::Integrate { index, expr } => {
            check_index(*index, n)?;
            element_out(&berezin_integral(&element_arg(expr, n)?, *index))
        }
        Command::Nilindex { cap, expr } => {
            let report = nil_index(&element_arg(expr, n)?, cap.unwrap_or(n + 1))?;
            render(
                fmt,
                report.to_string(),
                json!({ "index": report.index, "cap": report.cap }),
            )
        }
        Command::CheckIdentity {
            domain,
            trials,
            seed,
            expr,
        } => {
            let f = eval_free(&parse(expr, Namespace::Indeterminates)?)?;
            let verdict = is_identity(&f, n, (*domain).into(), *trials, *seed)?;
            let summary = format!(
                "{} ({}, {} cases)",
                if verdict.holds { "holds" } else { "fails" },
                verdict.mode,
                verdict.cases
            );
            let mut value = json!({
                "holds": verdict.holds,
                "mode": verdict.mode.to_string(),
                "cases": verdict.cases,
            });
            let text = match &verdict.witness {
                None => summary,
                Some(w) => {
                    let image = evaluate(&f, w)?;
                    value["witness"] = substitution_json(w);
                    value["value"] = element_json(&image);
                    format!(
                        "{summary}\n{}\nvalue: {}",
                        print_substitution(w),
                        print_element(&image)
                    )
                }
            };
            let code = if verdict.holds {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            };
            return Ok(Outcome {
                stdout: render(fmt, text, value),
                stderr: String::new(),
                code,
            });
        }
        Command::InIdeal { expr } => {
            let f = eval_free(&parse(expr, Namespace::Generators)?)?;
            let member = in_ideal(&f, n)?;
            render(fmt, member.to_string(), json!({ "in_ideal": member }))
        }
    };
    Ok(Outcome::ok(stdout))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("grassmann").chain(args.iter().copied()))
    }

    #[test]
    fn normalize_text_and_json() {
        let out = cli(&["normalize", "1 + 2*x1 + 3*x2 + 5*x1*x2 + 2*x2*x1"]);
        assert_eq!(out.stdout, "1 + 2*x1 + 3*x2 + 3*x1*x2\n");
        let out = cli(&["--format", "json", "normalize", "1/2 - x2*x1"]);
        assert_eq!(out.stdout, "{\"\":\"1/2\",\"1.2\":\"1\"}\n");
    }

    #[test]
    fn grade_output() {
        let out = cli(&["grade", "1 + 2*x1 + 3*x2 + 5*x1*x2 + 2*x2*x1"]);
        assert_eq!(out.stdout, "even: 1 + 3*x1*x2\nodd: 2*x1 + 3*x2\n");
    }

    #[test]
    fn leading_minus_expression() {
        assert_eq!(cli(&["normalize", "-x1"]).stdout, "-x1\n");
        assert_eq!(cli(&["derive", "-i", "2", "-x1*x2"]).stdout, "x1\n");
    }

    #[test]
    fn calculus_commands() {
        assert_eq!(cli(&["body", "7 + x1"]).stdout, "7\n");
        assert_eq!(cli(&["soul", "7 + x1"]).stdout, "x1\n");
        assert_eq!(cli(&["integrate", "-i", "1", "3 + 4*x1"]).stdout, "4\n");
        assert_eq!(cli(&["nilindex", "x1 + x2 + x1*x2"]).stdout, "2\n");
        assert_eq!(cli(&["-n", "3", "nilindex", "x1 + x2*x3"]).stdout, "3\n");
        assert_eq!(
            cli(&["nilindex", "--cap", "3", "1 + x1"]).stdout,
            "exceeds cap 3\n"
        );
        assert_eq!(
            cli(&["--format", "json", "nilindex", "1 + x1"]).stdout,
            "{\"index\":null,\"cap\":5}\n"
        );
    }

    #[test]
    fn center_and_ideal() {
        assert_eq!(cli(&["-n", "2", "center", "x1*x2"]).stdout, "true\n");
        assert_eq!(cli(&["-n", "2", "center", "x1"]).stdout, "false\n");
        assert_eq!(cli(&["in-ideal", "(x1*x2 + x2*x1)*x3"]).stdout, "true\n");
        assert_eq!(cli(&["in-ideal", "x1*x2"]).stdout, "false\n");
    }

    #[test]
    fn check_identity_outcomes() {
        let holds = cli(&["check-identity", "[[y1,y2],y3]"]);
        assert_eq!(holds.code, EXIT_OK);
        assert_eq!(holds.stdout, "holds (exhaustive-multilinear, 4096 cases)\n");

        let fails = cli(&["-n", "2", "check-identity", "[y1,y2]"]);
        assert_eq!(fails.code, EXIT_COUNTEREXAMPLE);
        assert_eq!(
            fails.stdout,
            "fails (exhaustive-multilinear, 7 cases)\ny1 -> x1\ny2 -> x2\nvalue: 2*x1*x2\n"
        );
    }

    #[test]
    fn validation_errors_exit_one() {
        for args in [
            &["normalize", "x0"][..],
            &["normalize", "x5"],
            &["normalize", "x1 x2"],
            &["normalize", "x1 + y1"],
            &["check-identity", "x1*y1"],
            &["derive", "-i", "9", "x1"],
            &["nilindex", "0"],
            &["-n", "0", "normalize", "1"],
            &["bogus"],
        ] {
            let out = cli(args);
            assert_eq!(out.code, EXIT_ERROR, "{args:?}");
            assert!(out.stdout.is_empty());
            assert!(!out.stderr.is_empty());
        }
    }

    #[test]
    fn syntax_error_reports_offset() {
        let out = cli(&["normalize", "x1 +"]);
        assert_eq!(
            out.stderr,
            "error: syntax error at offset 5: unexpected end of input\n"
        );
    }
}
