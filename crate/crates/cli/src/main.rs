//! `bialg`: verify structure-constant bialgebras, actions and split extensions.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 on malformed
//! input or usage errors.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bialg::catalog::{self, CatalogEntry};
use bialg::extensions::KernelKind;
use bialg::structures::natural_level;
use bialg::{
    build_iso_pair, induce_action, kernel, monoid_semidirect_eval, semidirect, verify_action,
    verify_hopf_action, verify_split_extension, verify_structure, Bialgebra, Field, FieldSpec, Fp,
    Level, Outcome, Rational, Report, Witness,
};
use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use serde_json::{json, Value};
use thiserror::Error;

use bialg_cli::format::{self, FileKind, FormatError};

#[derive(Parser)]
#[command(
    name = "bialg",
    version,
    about = "Verify bialgebras, actions and split extensions"
)]
struct Cli {
    /// Print reports as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a structure, action or extension file (stdin when omitted or `-`).
    Verify {
        file: Option<PathBuf>,
        #[arg(long)]
        level: Option<Level>,
    },
    /// Build the split extension of an action.
    Semidirect {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recover the action of a split extension.
    Induce {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check that an action survives semidirect followed by induce.
    Roundtrip { file: PathBuf },
    /// Dimensions of the Hopf, left and right kernels of an extension's projection.
    Kernels { file: PathBuf },
    /// Emit a catalog entry.
    Catalog {
        name: String,
        #[arg(long, default_value = "Q")]
        field: FieldSpec,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate `(x, b)·(y, c) = (x + y^b, b·c)`.
    EvalMonoid {
        x: BigUint,
        b: BigUint,
        y: BigUint,
        c: BigUint,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error("unsupported prime {0}: the command line handles primes below 100")]
    UnsupportedPrime(u32),
    #[error("expected {expected} file, found {found:?}")]
    WrongKind {
        expected: &'static str,
        found: FileKind,
    },
    #[error(transparent)]
    Library(#[from] bialg::Error),
}

type CliResult = Result<u8, CliError>;

/// Calls `f::<K>` for the scalar type selected by `spec`.
macro_rules! dispatch {
    ($spec:expr, $f:ident $args:tt) => {
        dispatch!(@primes $spec, $f $args,
            [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97])
    };
    (@primes $spec:expr, $f:ident $args:tt, [$($p:literal),*]) => {
        match $spec {
            FieldSpec::Rationals => $f::<Rational> $args,
            $(FieldSpec::PrimeField($p) => $f::<Fp<$p>> $args,)*
            FieldSpec::PrimeField(p) => Err(CliError::UnsupportedPrime(p)),
        }
    };
}

fn read_input(file: Option<&Path>) -> Result<String, CliError> {
    match file {
        None => read_stdin(),
        Some(p) if p == Path::new("-") => read_stdin(),
        Some(p) => fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
    }
}

fn read_stdin() -> Result<String, CliError> {
    let mut s = String::new();
    io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
    Ok(s)
}

fn load(file: Option<&Path>) -> Result<(Value, FieldSpec, FileKind), CliError> {
    let v = format::parse(&read_input(file)?)?;
    let kind = format::kind(&v)?;
    let spec = format::field(&v)?;
    Ok((v, spec, kind))
}

fn expect(found: FileKind, expected: FileKind, name: &'static str) -> Result<(), CliError> {
    if found == expected {
        Ok(())
    } else {
        Err(CliError::WrongKind {
            expected: name,
            found,
        })
    }
}

fn emit(value: &Value, output: Option<&Path>) -> Result<(), CliError> {
    let text = format::render(value);
    match output {
        Some(p) => fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Entry {
            domain,
            codomain,
            input,
            output,
            lhs,
            rhs,
        } => json!({
            "input": input,
            "input_index": domain,
            "output": output,
            "output_index": codomain,
            "lhs": lhs,
            "rhs": rhs,
        }),
        Witness::Message(m) => json!({ "message": m }),
    }
}

/// Prints a report and returns its exit code.
fn print_report(r: &Report, as_json: bool) -> u8 {
    let failed = r.failures().count();
    let skipped = r
        .checks()
        .iter()
        .filter(|c| matches!(c.outcome, Outcome::Skipped(_)))
        .count();
    if as_json {
        let checks: Vec<Value> = r
            .checks()
            .iter()
            .map(|c| match &c.outcome {
                Outcome::Pass => json!({ "name": c.name, "status": "pass" }),
                Outcome::Fail(w) => {
                    json!({ "name": c.name, "status": "fail", "witness": witness_json(w) })
                }
                Outcome::Skipped(why) => json!({ "name": c.name, "status": "skip", "reason": why }),
            })
            .collect();
        let doc = json!({ "checks": checks, "passed": failed == 0, "failed": failed, "skipped": skipped });
        print!("{}", format::render(&doc));
    } else {
        print!("{r}");
        println!("{} checks, {failed} failed, {skipped} skipped", r.len());
    }
    u8::from(failed > 0)
}

fn verify<K: Field>(v: &Value, kind: FileKind, level: Option<Level>, as_json: bool) -> CliResult {
    let report = match kind {
        FileKind::Structure => {
            let a = format::parse_structure::<K>(v, "")?;
            verify_structure(&a, level.unwrap_or_else(|| natural_level(&a)))?
        }
        FileKind::Action => {
            let a = format::parse_action::<K>(v)?;
            // the Hopf action conditions run only on request
            let hopf = level == Some(Level::Hopf);
            let component = |h: &Bialgebra<K>| match level {
                Some(Level::Hopf) => Level::Hopf,
                Some(_) => Level::Bialgebra,
                None => natural_level(h),
            };
            let mut r = Report::new();
            r.absorb(
                "acting.",
                verify_structure(a.acting(), component(a.acting()))?,
            );
            r.absorb("acted.", verify_structure(a.acted(), component(a.acted()))?);
            r.absorb(
                "",
                if hopf {
                    verify_hopf_action(&a)?
                } else {
                    verify_action(&a)?
                },
            );
            r
        }
        FileKind::Extension => {
            let s = format::parse_extension::<K>(v)?;
            verify_split_extension(&s, level.unwrap_or_else(|| s.level()))?
        }
    };
    Ok(print_report(&report, as_json))
}

fn semidirect_cmd<K: Field>(v: &Value, output: Option<&Path>) -> CliResult {
    let a = format::parse_action::<K>(v)?;
    let (_, ext) = semidirect(&a)?;
    emit(&format::write_extension(&ext), output)?;
    Ok(0)
}

fn induce_cmd<K: Field>(v: &Value, output: Option<&Path>) -> CliResult {
    let s = format::parse_extension::<K>(v)?;
    emit(&format::write_action(&induce_action(&s)?), output)?;
    Ok(0)
}

fn roundtrip_cmd<K: Field>(v: &Value, as_json: bool) -> CliResult {
    let a = format::parse_action::<K>(v)?;
    let (_, ext) = semidirect(&a)?;
    let mut r = Report::new();
    r.equal(
        "induced_action_entrywise",
        induce_action(&ext)?.act(),
        a.act(),
    )?;
    r.condition("iso_pair_inverse", build_iso_pair(&ext).is_ok(), || {
        "φ and ψ are not mutually inverse".into()
    });
    let original = format::render(&format::write_action(&a));
    let written = format::render(&format::write_extension(&ext));
    let reread = format::parse_extension::<K>(&format::parse(&written)?)?;
    let back = format::render(&format::write_action(&induce_action(&reread)?));
    r.condition("file_round_trip_bytes", back == original, || {
        let line = original
            .lines()
            .zip(back.lines())
            .position(|(x, y)| x != y)
            .unwrap_or_else(|| original.lines().count().min(back.lines().count()));
        format!("canonical files first differ at line {}", line + 1)
    });
    Ok(print_report(&r, as_json))
}

fn kernels_cmd<K: Field>(v: &Value, as_json: bool) -> CliResult {
    let s = format::parse_extension::<K>(v)?;
    let h = kernel(&s.alpha, &s.a, &s.b, KernelKind::Hopf)?;
    let l = kernel(&s.alpha, &s.a, &s.b, KernelKind::Left)?;
    let r = kernel(&s.alpha, &s.a, &s.b, KernelKind::Right)?;
    let (hl, lr) = (h == l, l == r);
    if as_json {
        let doc = json!({
            "hker": h.dim(),
            "lker": l.dim(),
            "rker": r.dim(),
            "hker_equals_lker": hl,
            "lker_equals_rker": lr,
        });
        print!("{}", format::render(&doc));
    } else {
        println!("HKer dim {}", h.dim());
        println!("LKer dim {}", l.dim());
        println!("RKer dim {}", r.dim());
        println!("HKer = LKer: {hl}");
        println!("LKer = RKer: {lr}");
    }
    Ok(0)
}

fn catalog_cmd<K: Field>(name: &str, output: Option<&Path>) -> CliResult {
    let value = match catalog::build::<K>(name)? {
        CatalogEntry::Structure(s) => format::write_structure(&s),
        CatalogEntry::Action(a) => format::write_action(&a),
        CatalogEntry::Extension(e) => format::write_extension(&e),
    };
    emit(&value, output)?;
    Ok(0)
}

fn eval_monoid(x: &BigUint, b: &BigUint, y: &BigUint, c: &BigUint, as_json: bool) -> CliResult {
    let (p, q) = monoid_semidirect_eval((x, b), (y, c))?;
    if as_json {
        print!(
            "{}",
            format::render(&json!({ "x": p.to_string(), "b": q.to_string() }))
        );
    } else {
        println!("({p}, {q})");
    }
    Ok(0)
}

fn run(cli: Cli) -> CliResult {
    let as_json = cli.json;
    match cli.command {
        Command::Verify { file, level } => {
            let (v, spec, kind) = load(file.as_deref())?;
            dispatch!(spec, verify(&v, kind, level, as_json))
        }
        Command::Semidirect { file, output } => {
            let (v, spec, kind) = load(Some(&file))?;
            expect(kind, FileKind::Action, "an action")?;
            dispatch!(spec, semidirect_cmd(&v, output.as_deref()))
        }
        Command::Induce { file, output } => {
            let (v, spec, kind) = load(Some(&file))?;
            expect(kind, FileKind::Extension, "an extension")?;
            dispatch!(spec, induce_cmd(&v, output.as_deref()))
        }
        Command::Roundtrip { file } => {
            let (v, spec, kind) = load(Some(&file))?;
            expect(kind, FileKind::Action, "an action")?;
            dispatch!(spec, roundtrip_cmd(&v, as_json))
        }
        Command::Kernels { file } => {
            let (v, spec, kind) = load(Some(&file))?;
            expect(kind, FileKind::Extension, "an extension")?;
            dispatch!(spec, kernels_cmd(&v, as_json))
        }
        Command::Catalog {
            name,
            field,
            output,
        } => {
            dispatch!(field, catalog_cmd(&name, output.as_deref()))
        }
        Command::EvalMonoid { x, b, y, c } => eval_monoid(&x, &b, &y, &c, as_json),
    }
}

/// Failed verification and violated hypotheses exit 1; everything else is bad input.
fn exit_code(err: &CliError) -> u8 {
    match err {
        CliError::Library(
            bialg::Error::VerificationFailed { .. }
            | bialg::Error::KernelHypothesis { .. }
            | bialg::Error::NoSplitExtension { .. }
            | bialg::Error::Inconsistent(_),
        ) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            if let CliError::Library(bialg::Error::VerificationFailed { what, report }) = &err {
                eprintln!("bialg: {what} failed verification");
                print_report(report, as_json);
            } else {
                eprintln!("bialg: {err}");
            }
            ExitCode::from(exit_code(&err))
        }
    }
}
