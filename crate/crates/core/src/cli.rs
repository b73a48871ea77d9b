//! Command-line front end. Every subcommand builds the same [`Report`] as the
//! corresponding function in [`crate::report`].
//!
//! Exit codes: 0 success, 1 a bound fails, 2 inconclusive at the maximal
//! precision, 3 input error.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::BoundName;
use crate::error::Error;
use crate::field::Field;
use crate::interval::{DEFAULT_PRECISION, MAX_PRECISION};
use crate::parse::{parse_field, parse_poly};
use crate::report::{self, Report};

#[derive(Parser, Debug)]
#[command(name = "splitheight", version, about = "Heights, Gauss norms and Mahler measures over Q and quadratic fields")]
pub struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    pub precision: u32,
    /// Emit JSON instead of an aligned table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel scans.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct FieldArg {
    /// `Q` or `Q(sqrt(D))`.
    #[arg(long, default_value = "Q")]
    pub field: String,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CheckArg {
    Alphabound1,
    Bound1,
    Alphabound2,
    Bound2,
    Complexmahler,
    Combined,
}

impl From<CheckArg> for BoundName {
    fn from(c: CheckArg) -> BoundName {
        match c {
            CheckArg::Alphabound1 => BoundName::AlphaBound1,
            CheckArg::Bound1 => BoundName::Bound1,
            CheckArg::Alphabound2 => BoundName::AlphaBound2,
            CheckArg::Bound2 => BoundName::Bound2,
            CheckArg::Complexmahler => BoundName::ComplexMahler,
            CheckArg::Combined => BoundName::Combined,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Height H(f) of a polynomial over the field.
    Height {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
    },
    /// Mahler measure of every embedding of a polynomial.
    Mahler {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
    },
    /// Least M_K(α) > 1 up to a cap.
    Mk {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 3.0)]
        cap: f64,
    },
    /// Lower bounds on C_K from powers of a split integer polynomial.
    CkCertify {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 1)]
        jmax: u32,
    },
    /// The interval known to contain C_K.
    CkInterval {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        mk: Option<f64>,
    },
    /// Check the height inequalities on a split polynomial.
    Verify {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        poly: String,
        /// Run alphabound1, bound1, alphabound2, bound2 and complexmahler.
        #[arg(long)]
        all: bool,
        #[arg(long = "check", value_enum)]
        checks: Vec<CheckArg>,
        /// Lower bound for M_K used by bound1; searched when omitted.
        #[arg(long)]
        mk: Option<f64>,
    },
    /// Scan coprime pairs of Gaussian or Eisenstein integers.
    Lattice {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, default_value_t = 10)]
        radius: i64,
    },
    /// Pell obstruction over Q(sqrt(-d)).
    Pell {
        #[arg(long)]
        d: i64,
    },
    /// Uniform constant for roots of degree at most k.
    T2 {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 1.3)]
        cap: f64,
    },
}

fn field_of(f: &FieldArg) -> Result<Field, Error> {
    parse_field(&f.field)
}

fn int_poly(s: &str) -> Result<crate::poly::IntPoly, Error> {
    let f = parse_poly(s, Field::rationals())?;
    f.primitive_int_poly()
        .filter(|p| p.to_poly_over(Field::rationals()) == f)
        .ok_or_else(|| Error::InvalidArgument(format!("{s} must have integer coefficients")))
}

/// Builds the report for a parsed command line.
pub fn execute(cli: &Cli) -> Result<Report, Error> {
    let prec = cli.precision;
    if !(32..=MAX_PRECISION).contains(&prec) {
        return Err(Error::InvalidArgument(format!(
            "precision must lie in 32..={MAX_PRECISION}"
        )));
    }
    match &cli.command {
        Command::Height { field, poly } => report::height_report(&parse_poly(poly, field_of(field)?)?, prec),
        Command::Mahler { field, poly } => report::mahler_report(&parse_poly(poly, field_of(field)?)?, prec),
        Command::Mk { field, cap } => report::mk_report(field_of(field)?, *cap, prec),
        Command::CkCertify { field, base, jmax } => {
            report::ck_certify_report(field_of(field)?, &int_poly(base)?, *jmax, prec)
        }
        Command::CkInterval { field, mk } => report::ck_interval_report(field_of(field)?, *mk, prec),
        Command::Verify {
            field,
            poly,
            all,
            checks,
            mk,
        } => {
            let f = parse_poly(poly, field_of(field)?)?;
            let names: Vec<BoundName> = if *all || checks.is_empty() {
                vec![
                    BoundName::AlphaBound1,
                    BoundName::Bound1,
                    BoundName::AlphaBound2,
                    BoundName::Bound2,
                    BoundName::ComplexMahler,
                ]
            } else {
                checks.iter().map(|&c| c.into()).collect()
            };
            report::verify_report(&f, &names, *mk, prec)
        }
        Command::Lattice { field, radius } => report::lattice_report(field_of(field)?, *radius),
        Command::Pell { d } => report::pell_report(*d),
        Command::T2 { k, cap } => report::t2_report(*k, *cap, prec),
    }
}

/// Output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::CannotCertify { .. } => 2,
        _ => 3,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    if let Some(n) = cli.threads {
        // the global pool can only be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match execute(&cli) {
        Ok(r) => Outcome {
            code: r.exit_code(),
            stdout: if cli.json { r.to_json() + "\n" } else { r.to_text() },
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: error_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}
