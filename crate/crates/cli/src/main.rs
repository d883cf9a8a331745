use std::io::Write;
use std::process::ExitCode;
use std::str::FromStr;

use cartanq::calculus4d::{build_tables, table_json, table_text, Fixtures};
use cartanq::cartan::{LeftOp, OpKind, RightOp};
use cartanq::engine::{
    evaluate_at, run_verify, Engine, Group, VerifyOptions, DEFAULT_DEGREE_CAP, DEFAULT_SEED,
};
use cartanq::{Error, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

// Write errors such as a closed pipe are ignored.
macro_rules! out {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

#[derive(Parser)]
#[command(
    name = "cartanq",
    version,
    about = "Exact computations in the quantum Cartan calculus on SU_q(2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KernelName {
    Sigma,
    SigmaT,
}

#[derive(Subcommand)]
enum Command {
    /// Print a calculus table (X, f, J, sigma, C, t, S-kernel, T-kernel, Sf, c0).
    Tables {
        name: String,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Basis of ker(1 - sigma) or ker(1 - sigma^t).
    Kernel { which: KernelName },
    /// Canonical form of an expression.
    NormalForm { expr: String },
    /// Exterior derivative of a form.
    D { expr: String },
    /// Apply an operator such as L-, Lf[-][z], i0, d or R:L+ to a form.
    Apply { op: String, expr: String },
    /// Evaluate an expression at a rational value of s (q = s^2).
    Eval {
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
    },
    /// Run verification groups: hopf tables kernels identities exterior
    /// bialgebra antipode left-rep right-rep, or all.
    Verify {
        #[arg(default_value = "all")]
        groups: Vec<String>,
        #[arg(long, env = "CARTANQ_DEGREE_CAP", default_value_t = DEFAULT_DEGREE_CAP)]
        degree_cap: u32,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn with_engine<T>(f: impl FnOnce(&Engine) -> Result<T>) -> Result<T> {
    let engine = Engine::new(build_tables()?)?;
    f(&engine)
}

fn apply(engine: &Engine, op: &str, expr: &str) -> Result<String> {
    let form = engine.eval(expr)?.into_form()?;
    let reps = engine.reps();
    let out = match op.strip_prefix("R:") {
        Some(name) => reps.apply_right(RightOp(OpKind::parse(name)?), &form),
        None => reps.apply_left(LeftOp(OpKind::parse(op)?), &form),
    };
    Ok(out.to_string())
}

fn verify(groups: &[String], degree_cap: u32, seed: u64) -> Result<bool> {
    let mut selected = Vec::new();
    for g in groups {
        selected.extend(Group::parse(g)?);
    }
    let outcome = run_verify(
        &Fixtures::builtin(),
        &VerifyOptions {
            groups: selected,
            degree_cap,
            seed,
        },
    );
    out!("{}", outcome.report);
    if !outcome.lr_commutation.is_empty() {
        let commuting = outcome.lr_commutation.iter().filter(|(_, ok)| *ok).count();
        out!(
            "left/right graded commutators vanishing on forms of degree <= 2: {} of {}",
            commuting,
            outcome.lr_commutation.len()
        );
        for (pair, ok) in &outcome.lr_commutation {
            if !ok {
                out!("  does not commute: {}", pair);
            }
        }
    }
    Ok(outcome.report.all_passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Tables { name, json, .. } => {
            let t = build_tables()?;
            if json {
                let v = table_json(t, &name)?;
                out!(
                    "{}",
                    serde_json::to_string_pretty(&v).expect("JSON values serialize")
                );
            } else {
                out!("{}", table_text(t, &name)?);
            }
        }
        Command::Kernel { which } => {
            let t = build_tables()?;
            let (name, ker) = match which {
                KernelName::Sigma => ("S-kernel", &t.s_ker),
                KernelName::SigmaT => ("T-kernel", &t.t_ker),
            };
            out!("dim = {}", ker.len());
            out!("{}", table_text(t, name)?);
        }
        Command::NormalForm { expr } => with_engine(|e| {
            out!("{}", e.eval(&expr)?);
            Ok(())
        })?,
        Command::D { expr } => with_engine(|e| {
            let f = e.eval(&expr)?.into_form()?;
            out!("{}", e.exterior().d(&f));
            Ok(())
        })?,
        Command::Apply { op, expr } => with_engine(|e| {
            out!("{}", apply(e, &op, &expr)?);
            Ok(())
        })?,
        Command::Eval { expr, s } => {
            let point = BigRational::from_str(&s).map_err(|_| Error::Syntax {
                pos: 0,
                msg: format!("`{}` is not a rational number", s),
            })?;
            with_engine(|e| {
                out!("{}", evaluate_at(&e.eval(&expr)?, &point)?);
                Ok(())
            })?
        }
        Command::Verify {
            groups,
            degree_cap,
            seed,
        } => return verify(&groups, degree_cap, seed),
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
