//! Command-line front end. Exit codes: 0 holds or complete, 1 fails (a
//! witness is printed), 2 indeterminate, 3 usage or input error.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::{Error, Result};
use crate::format::{self, AlgebraFile};
use crate::monomial::{DegreeBox, ExponentVector, MonomialAlgebra};
use crate::normalization::{default_box, normalization_generators};
use crate::stanley_reisner::sr_violation;
use crate::strict_closure::{
    build_products_and_cubes, is_strictly_closed, pairwise_product_violation, rees_algebra, strict_closure, ClosedVerdict,
};
use crate::weak_arf::{conductor_criterion, decide_weak_arf, ConductorVerdict, WeakArfDecision};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INDETERMINATE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "strictclose", version, about = "Strict closures and weak-Arf checks for monomial algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct BoxArg {
    /// Degree box as comma-separated per-coordinate bounds, e.g. 24,24
    #[arg(long = "box", value_name = "A,B,...", value_parser = parse_box)]
    bound: Option<ExponentVector>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal generators of the normalization
    Normalize {
        file: PathBuf,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Minimal generators of the strict closure (in the normalization unless --in is given)
    Closure {
        file: PathBuf,
        #[arg(long = "in", value_name = "FILE")]
        ext: Option<PathBuf>,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Is the algebra strictly closed in its normalization?
    CheckClosed {
        file: PathBuf,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Search for a weak-Arf witness (exact for one variable)
    CheckWeakArf {
        file: PathBuf,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Are all pairwise products of the adjoined monomials in the algebra?
    CheckCriterion {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        adjoin: PathBuf,
    },
    /// Does the maximal ideal annihilate the normalization modulo the algebra?
    Conductor {
        file: PathBuf,
        #[command(flatten)]
        bx: BoxArg,
    },
    /// Strict closedness of a Stanley-Reisner ring
    SrCheck { file: PathBuf },
    /// Rees algebra of the monomial ideal listed in FILE
    Rees { file: PathBuf },
    /// Adjoin all pairwise products and cubes of the monomials in --adjoin
    Build {
        file: PathBuf,
        #[arg(long, value_name = "FILE")]
        adjoin: PathBuf,
    },
}

fn parse_box(s: &str) -> std::result::Result<ExponentVector, String> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("`{t}` is not a nonnegative integer")))
        .collect::<std::result::Result<Vec<u32>, String>>()
        .map(ExponentVector::new)
}

/// Reads a file, or standard input for `-`.
fn read_input(path: &Path) -> Result<String> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, message } => Error::InvalidInput(format!("{}, line {line}: {message}", path.display())),
        other => other,
    })
}

fn load_file(path: &Path) -> Result<AlgebraFile> {
    with_path(path, format::parse_algebra_file(&read_input(path)?))
}

fn load_algebra(path: &Path) -> Result<MonomialAlgebra> {
    load_file(path)?.to_algebra()
}

fn resolve_box(r: &MonomialAlgebra, bx: &BoxArg) -> Result<DegreeBox> {
    match &bx.bound {
        Some(b) if b.dim() != r.dim() => Err(Error::DimensionMismatch { expected: r.dim(), found: b.dim() }),
        Some(b) => DegreeBox::new(b.clone()),
        None => default_box(r),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_list(out: &mut dyn Write, vectors: &[ExponentVector], complete: bool) -> io::Result<()> {
    let mut sorted = vectors.to_vec();
    sorted.sort();
    for v in &sorted {
        writeln!(out, "{v}")?;
    }
    writeln!(out, "complete: {}", yes_no(complete))
}

fn code(complete: bool) -> i32 {
    if complete {
        EXIT_HOLDS
    } else {
        EXIT_INDETERMINATE
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    let io_err = |e: io::Error| Error::InvalidInput(format!("write failed: {e}"));
    match cmd {
        Command::Normalize { file, bx } => {
            let r = load_algebra(&file)?;
            let domain = resolve_box(&r, &bx)?;
            let res = normalization_generators(r.semigroup(), &domain)?;
            write_list(out, &res.generators, res.complete).map_err(io_err)?;
            Ok(code(res.complete))
        }
        Command::Closure { file, ext, bx } => {
            let r = load_algebra(&file)?;
            let domain = resolve_box(&r, &bx)?;
            let (t, norm_complete) = match ext {
                Some(p) => (load_algebra(&p)?, true),
                None => {
                    let res = normalization_generators(r.semigroup(), &domain)?;
                    (MonomialAlgebra::from_generators(r.dim(), res.generators)?, res.complete)
                }
            };
            let report = strict_closure(&r, &t, &domain)?;
            let complete = report.complete && norm_complete;
            write_list(out, report.closure.generators(), complete).map_err(io_err)?;
            Ok(code(complete))
        }
        Command::CheckClosed { file, bx } => {
            let r = load_algebra(&file)?;
            let domain = resolve_box(&r, &bx)?;
            match is_strictly_closed(&r, &domain)? {
                ClosedVerdict::StrictlyClosed => {
                    writeln!(out, "strictly closed").map_err(io_err)?;
                    Ok(EXIT_HOLDS)
                }
                ClosedVerdict::NotStrictlyClosed { new_degrees } => {
                    writeln!(out, "not strictly closed").map_err(io_err)?;
                    for h in &new_degrees {
                        writeln!(out, "{h}").map_err(io_err)?;
                    }
                    Ok(EXIT_FAILS)
                }
                ClosedVerdict::Indeterminate => {
                    writeln!(out, "indeterminate: box incomplete").map_err(io_err)?;
                    Ok(EXIT_INDETERMINATE)
                }
            }
        }
        Command::CheckWeakArf { file, bx } => {
            let r = load_algebra(&file)?;
            let domain = resolve_box(&r, &bx)?;
            let (text, code) = match decide_weak_arf(&r, &domain)? {
                WeakArfDecision::WeaklyArf => ("weakly arf".to_string(), EXIT_HOLDS),
                WeakArfDecision::NotWeaklyArf(w) => (format!("witness: {w}"), EXIT_FAILS),
                WeakArfDecision::Indeterminate => ("no witness in box".to_string(), EXIT_INDETERMINATE),
            };
            writeln!(out, "{text}").map_err(io_err)?;
            Ok(code)
        }
        Command::CheckCriterion { file, adjoin } => {
            let r = load_algebra(&file)?;
            let v = load_file(&adjoin)?;
            if v.ambient_dim != r.dim() {
                return Err(Error::DimensionMismatch { expected: r.dim(), found: v.ambient_dim });
            }
            match pairwise_product_violation(&r, &v.rows)? {
                None => {
                    writeln!(out, "criterion holds: strictly closed in the extension").map_err(io_err)?;
                    Ok(EXIT_HOLDS)
                }
                Some((a, b)) => {
                    writeln!(out, "violation: {a} {b}").map_err(io_err)?;
                    Ok(EXIT_FAILS)
                }
            }
        }
        Command::Conductor { file, bx } => {
            let r = load_algebra(&file)?;
            let domain = resolve_box(&r, &bx)?;
            match conductor_criterion(&r, &domain)? {
                ConductorVerdict::Holds => {
                    writeln!(out, "holds").map_err(io_err)?;
                    Ok(EXIT_HOLDS)
                }
                ConductorVerdict::Fails { generator, module_gen } => {
                    writeln!(out, "fails: {generator} {module_gen}").map_err(io_err)?;
                    Ok(EXIT_FAILS)
                }
                ConductorVerdict::Indeterminate => {
                    writeln!(out, "indeterminate: box incomplete").map_err(io_err)?;
                    Ok(EXIT_INDETERMINATE)
                }
            }
        }
        Command::SrCheck { file } => {
            let delta = with_path(&file, format::parse_complex(&read_input(&file)?))?;
            match sr_violation(&delta) {
                None => {
                    writeln!(out, "strictly closed").map_err(io_err)?;
                    Ok(EXIT_HOLDS)
                }
                Some(u) => {
                    let labels: Vec<String> = u.iter().map(|v| v.to_string()).collect();
                    writeln!(out, "not strictly closed: support {{{}}}", labels.join(",")).map_err(io_err)?;
                    Ok(EXIT_FAILS)
                }
            }
        }
        Command::Rees { file } => {
            let ideal = load_file(&file)?;
            let r = rees_algebra(ideal.ambient_dim, &ideal.rows)?;
            out.write_all(format::write_algebra(&r).as_bytes()).map_err(io_err)?;
            Ok(EXIT_HOLDS)
        }
        Command::Build { file, adjoin } => {
            let a = load_algebra(&file)?;
            let v = load_file(&adjoin)?;
            if v.ambient_dim != a.dim() {
                return Err(Error::DimensionMismatch { expected: a.dim(), found: v.ambient_dim });
            }
            let r = build_products_and_cubes(&a, &v.rows)?;
            out.write_all(format::write_algebra(&r).as_bytes()).map_err(io_err)?;
            Ok(EXIT_HOLDS)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_HOLDS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
