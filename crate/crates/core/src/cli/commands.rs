//! The `dbrk` command line.

use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser as ClapParser, Subcommand, ValueEnum};

use super::document::{Block, Document};
use super::syntax::{parse_poly, parse_word};
use crate::algebra::{render_tensor, NCPoly};
use crate::bracket::{
    check_all, double_jacobiator, extend_bracket, leibniz_bracket, necklace_bracket,
};
use crate::calculus::{koszul_bracket, SN};
use crate::error::{Error, Result};
use crate::free::{dlr_check, Bimodule};
use crate::report::CheckReport;
use crate::shift::{shift_dlr, verify_shift_equivalence};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(clap::Args, Debug)]
struct CheckOpts {
    /// Longest word enumerated by the checks.
    #[arg(long, default_value_t = 3)]
    max_len: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Leave the wall-time field out of reports.
    #[arg(long)]
    no_timing: bool,
}

#[derive(ClapParser, Debug)]
#[command(name = "dbrk", version, about = "Double brackets on free algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every bracket and DLR block of a document.
    Check {
        file: PathBuf,
        #[command(flatten)]
        opts: CheckOpts,
    },
    /// Evaluate a bracket on two polynomials.
    Eval {
        file: PathBuf,
        #[arg(long)]
        bracket: String,
        a: String,
        b: String,
    },
    /// Evaluate the double jacobiator on three polynomials.
    Jacobiator {
        file: PathBuf,
        #[arg(long)]
        bracket: String,
        a: String,
        b: String,
        c: String,
    },
    /// Evaluate the associated Leibniz bracket.
    Leibniz {
        file: PathBuf,
        #[arg(long)]
        bracket: String,
        a: String,
        b: String,
    },
    /// Evaluate the necklace bracket on two cyclic words.
    Necklace {
        file: PathBuf,
        #[arg(long)]
        bracket: String,
        a: String,
        b: String,
    },
    /// Build the Koszul DLR data of a double Poisson bracket.
    Koszul {
        file: PathBuf,
        #[arg(long)]
        bracket: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Build the Schouten-Nijenhuis bracket of an algebra.
    Sn {
        file: PathBuf,
        #[arg(long)]
        algebra: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Shift the module of a DLR block.
    Shift {
        file: PathBuf,
        #[arg(long)]
        dlr: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Compare DLR verdicts before and after a shift.
    VerifyShift {
        file: PathBuf,
        #[arg(long)]
        dlr: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[command(flatten)]
        opts: CheckOpts,
    },
}

enum Outcome {
    Text(String),
    Reports(Vec<CheckReport>, CheckOpts),
    Written(Document, Option<PathBuf>),
}

/// Runs the command line `args` (program name first); returns the exit code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_PASS
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok(Outcome::Text(s)) => {
            let _ = writeln!(out, "{s}");
            EXIT_PASS
        }
        Ok(Outcome::Reports(reports, opts)) => {
            let timing = !opts.no_timing;
            match opts.format {
                Format::Text => {
                    let texts: Vec<String> =
                        reports.iter().map(|r| r.render_text(timing)).collect();
                    let _ = write!(out, "{}", texts.join("\n"));
                }
                Format::Json => {
                    let v: Vec<_> = reports.iter().map(|r| r.to_json(timing)).collect();
                    let _ = writeln!(
                        out,
                        "{}",
                        serde_json::to_string_pretty(&v).expect("reports serialize")
                    );
                }
            }
            if reports.iter().all(|r| r.passed()) {
                EXIT_PASS
            } else {
                EXIT_VIOLATION
            }
        }
        Ok(Outcome::Written(doc, path)) => {
            let text = doc.format();
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        let _ = writeln!(err, "error: {}: {e}", p.display());
                        return EXIT_INPUT;
                    }
                }
                None => {
                    let _ = write!(out, "{text}");
                }
            }
            EXIT_PASS
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn load(path: &PathBuf) -> Result<Document> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    Document::parse(&text).map_err(|e| match e {
        Error::Parse { line, col, message } => {
            Error::Invalid(format!("{}:{line}:{col}: {message}", path.display()))
        }
        other => other,
    })
}

fn poly(alphabet: &Arc<crate::algebra::Alphabet>, s: &str) -> Result<NCPoly> {
    parse_poly(alphabet, s).map_err(|e| Error::Invalid(format!("expression '{s}': {e}")))
}

fn execute(cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Check { file, opts } => {
            let doc = load(&file)?;
            let mut reports = Vec::new();
            for b in &doc.blocks {
                let mut report = match b {
                    Block::Bracket { spec, .. } => check_all(spec, opts.max_len),
                    Block::Dlr { data, .. } => dlr_check(data, opts.max_len),
                    _ => continue,
                };
                report.subject = format!("{} {}", report.subject, b.name());
                reports.push(report);
            }
            Ok(Outcome::Reports(reports, opts))
        }
        Command::Eval {
            file,
            bracket,
            a,
            b,
        } => {
            let doc = load(&file)?;
            let spec = doc.bracket(&bracket)?;
            let al = spec.alphabet();
            let v = extend_bracket(spec, &poly(al, &a)?, &poly(al, &b)?)?;
            Ok(Outcome::Text(render_tensor(al, &v)))
        }
        Command::Jacobiator {
            file,
            bracket,
            a,
            b,
            c,
        } => {
            let doc = load(&file)?;
            let spec = doc.bracket(&bracket)?;
            let al = spec.alphabet();
            let v = double_jacobiator(spec, &poly(al, &a)?, &poly(al, &b)?, &poly(al, &c)?)?;
            Ok(Outcome::Text(render_tensor(al, &v)))
        }
        Command::Leibniz {
            file,
            bracket,
            a,
            b,
        } => {
            let doc = load(&file)?;
            let spec = doc.bracket(&bracket)?;
            let al = spec.alphabet();
            let v = leibniz_bracket(spec, &poly(al, &a)?, &poly(al, &b)?)?;
            Ok(Outcome::Text(v.render()))
        }
        Command::Necklace {
            file,
            bracket,
            a,
            b,
        } => {
            let doc = load(&file)?;
            let spec = doc.bracket(&bracket)?;
            let al = spec.alphabet();
            let word =
                |s: &str| parse_word(al, s).map_err(|e| Error::Invalid(format!("word '{s}': {e}")));
            let v = necklace_bracket(spec, &word(&a)?, &word(&b)?)?;
            Ok(Outcome::Text(NCPoly::from_terms(al, v).render()))
        }
        Command::Koszul {
            file,
            bracket,
            output,
        } => {
            let doc = load(&file)?;
            let spec = doc.bracket(&bracket)?;
            let on = doc
                .bracket_target(&bracket)
                .expect("bracket block")
                .to_string();
            let (shift, alphabet) = doc.algebra(&on).map_err(|_| {
                Error::Invalid(format!(
                    "bracket '{bracket}' must be declared on an algebra"
                ))
            })?;
            let data = koszul_bracket(spec)?;
            let omega = format!("Omega_{bracket}");
            let out = Document {
                blocks: vec![
                    Block::Algebra {
                        name: on.clone(),
                        shift,
                        alphabet: alphabet.clone(),
                    },
                    Block::Bimodule {
                        name: omega.clone(),
                        over: on,
                        bimodule: data.bimodule().clone(),
                    },
                    Block::Dlr {
                        name: format!("Koszul_{bracket}"),
                        module: omega,
                        data,
                    },
                ],
            };
            Ok(Outcome::Written(out, output))
        }
        Command::Sn {
            file,
            algebra,
            output,
        } => {
            let doc = load(&file)?;
            let (shift, alphabet) = doc.algebra(&algebra)?;
            let sn = SN::new(alphabet, shift)?;
            let der = format!("Der_{algebra}");
            let out = Document {
                blocks: vec![
                    Block::Algebra {
                        name: algebra.clone(),
                        shift,
                        alphabet: alphabet.clone(),
                    },
                    Block::Bimodule {
                        name: der.clone(),
                        over: algebra.clone(),
                        bimodule: sn.bimodule().clone(),
                    },
                    Block::Bracket {
                        name: format!("SN_{algebra}"),
                        on: der,
                        spec: sn.spec().clone(),
                    },
                ],
            };
            Ok(Outcome::Written(out, output))
        }
        Command::Shift {
            file,
            dlr,
            delta,
            output,
        } => {
            let doc = load(&file)?;
            let data = doc.dlr(&dlr)?;
            let Some(Block::Dlr { module, .. }) = doc.get(&dlr) else {
                unreachable!("resolved above")
            };
            let Some(Block::Bimodule { over, .. }) = doc.get(module) else {
                unreachable!("dlr modules resolve to bimodules")
            };
            let shifted = shift_dlr(data, delta);
            let bimodule: Arc<Bimodule> = shifted.bimodule().clone();
            let out = Document {
                blocks: vec![
                    Block::Algebra {
                        name: over.clone(),
                        shift: shifted.shift(),
                        alphabet: bimodule.base().clone(),
                    },
                    Block::Bimodule {
                        name: module.clone(),
                        over: over.clone(),
                        bimodule,
                    },
                    Block::Dlr {
                        name: dlr,
                        module: module.clone(),
                        data: shifted,
                    },
                ],
            };
            Ok(Outcome::Written(out, output))
        }
        Command::VerifyShift {
            file,
            dlr,
            delta,
            opts,
        } => {
            let doc = load(&file)?;
            let data = doc.dlr(&dlr)?;
            let mut report = verify_shift_equivalence(data, delta, opts.max_len);
            report.subject = format!("{} {dlr}", report.subject);
            Ok(Outcome::Reports(vec![report], opts))
        }
    }
}
