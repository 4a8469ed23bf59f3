//! Command-line front end. Exit status: 0 when every verdict holds, 1 when
//! a mathematical check fails, 2 on bad usage.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::certify::{
    certify_eisenstein3, certify_half, certify_p_power, certify_two_power, scan_primes,
    splitting_prerequisite, Certificate, SplittingReport,
};
use crate::disc::{critical_points_check, disc_report, odd_permutation_check, DiscReport};
use crate::error::{Error, Result};
use crate::kfamily::{
    galois_bound, k_general, k_tilde, rational_root_scan, KFamilySpec, TrivialFactorLedger,
};
use crate::localization::{emit_plot_data, localize_report, DEFAULT_CTOL, DEFAULT_TOL};
use crate::polycore::{IntPoly, RatScalar};
use crate::report::to_json;
use crate::symmetry::{
    cyclotomic_coprime, eq_symkn_check, factor_symmetry_hypothesis, gcd_kprime_analysis,
    phi_homog_identities, verify_h_group, verify_sym_identity, FactorSymmetryReport,
};

#[derive(Debug, Parser)]
#[command(
    name = "kfermat",
    version,
    about = "Exact checks for x^n + (1-x)^n + a^n"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Half,
    Eis3,
    TwoPower,
    PPower,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced polynomial, trivial factors, degree and Galois bound
    Ktilde {
        #[arg(long)]
        n: u32,
    },
    /// Numeric roots and their curve labels
    Localize {
        #[arg(long, allow_hyphen_values = true)]
        a: RatScalar,
        #[arg(long)]
        n: u32,
        /// Relative residual required of every root
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Distance within which a root counts as on a curve
        #[arg(long, default_value_t = DEFAULT_CTOL)]
        ctol: f64,
        /// Also write the root table to this file
        #[arg(long)]
        emit_roots: Option<std::path::PathBuf>,
    },
    /// Group table, functional equations, coprimality, gcd with the derivative
    Symmetry {
        #[arg(long)]
        n: u32,
        /// Largest cyclotomic index tested for coprimality
        #[arg(long, default_value_t = 105)]
        d_max: u32,
    },
    /// Irreducibility certificate with evidence
    Certify {
        #[arg(long, value_enum)]
        family: Family,
        /// a for half, m for eis3 and two-power, p for p-power
        #[arg(long, allow_hyphen_values = true)]
        param: String,
        /// n for the half family
        #[arg(long)]
        n: Option<u32>,
        /// exponent e for the p-power family
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Classify odd primes below a bound
    Scan {
        #[arg(long)]
        bound: u64,
        /// Worker threads; defaults to the available parallelism
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Discriminant of K_{6m} and the square factor
    Disc {
        #[arg(long)]
        m: u32,
    },
    /// Rational roots of K_{a,n}
    FltCheck {
        #[arg(long, allow_hyphen_values = true)]
        a: RatScalar,
        #[arg(long)]
        n: u32,
    },
}

/// Text to print and whether every verdict held.
struct Output {
    body: String,
    ok: bool,
}

#[derive(Serialize)]
struct KtildeDoc {
    n: u32,
    coefficients: IntPoly,
    display: String,
    ledger: TrivialFactorLedger,
    d_n: usize,
    b_n: usize,
    #[serde(serialize_with = "crate::report::opt_big_as_string")]
    galois_bound: Option<BigInt>,
}

fn ktilde_cmd(n: u32, format: Format) -> Result<Output> {
    let r = k_tilde(n)?;
    let body = match format {
        Format::Json => to_json(&KtildeDoc {
            n,
            display: r.poly.to_string(),
            galois_bound: galois_bound(n).ok(),
            coefficients: r.poly,
            ledger: r.ledger,
            d_n: r.d_n,
            b_n: r.b_n,
        }),
        Format::Csv => {
            let mut s = String::from("n,power,coefficient\n");
            for (i, c) in r.poly.coeffs().iter().enumerate() {
                let _ = writeln!(s, "{n},{i},{c}");
            }
            s
        }
    };
    Ok(Output { body, ok: true })
}

fn localize_cmd(
    a: RatScalar,
    n: u32,
    tol: f64,
    ctol: f64,
    emit: Option<&std::path::Path>,
    format: Format,
) -> Result<Output> {
    if !(ctol > 0.0) {
        return Err(Error::Precondition(format!(
            "ctol must be positive, got {ctol}"
        )));
    }
    let spec = KFamilySpec::new(a, n)?;
    let report = localize_report(&spec, tol, ctol)?;
    let table = emit_plot_data(&report);
    if let Some(path) = emit {
        std::fs::write(path, &table)
            .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display())))?;
    }
    let body = match format {
        Format::Json => to_json(&report),
        Format::Csv => table,
    };
    Ok(Output {
        body,
        ok: report.verdict,
    })
}

#[derive(Serialize)]
struct SymmetryDoc {
    n: u32,
    h_group: bool,
    functional_equation_kn: bool,
    /// `None` when `K~_n` is constant
    invariance_under_h: Option<bool>,
    cyclotomic_coprime: Option<bool>,
    d_max: u32,
    factor_symmetry: Option<FactorSymmetryReport>,
    phi_homog_identities: Option<bool>,
    gcd_with_derivative: String,
    gcd_exponent: u32,
}

fn symmetry_cmd(n: u32, d_max: u32) -> Result<Output> {
    let nontrivial = k_tilde(n)?.d_n > 0;
    let when = |f: &dyn Fn() -> Result<bool>| -> Result<Option<bool>> {
        if nontrivial {
            f().map(Some)
        } else {
            Ok(None)
        }
    };
    let gcd = gcd_kprime_analysis(n)?;
    let doc = SymmetryDoc {
        n,
        h_group: verify_h_group(),
        functional_equation_kn: eq_symkn_check(n)?,
        invariance_under_h: when(&|| verify_sym_identity(n))?,
        cyclotomic_coprime: when(&|| cyclotomic_coprime(n, d_max))?,
        d_max,
        factor_symmetry: if nontrivial {
            Some(factor_symmetry_hypothesis(n)?)
        } else {
            None
        },
        phi_homog_identities: if n >= 3 {
            Some(phi_homog_identities(n)?)
        } else {
            None
        },
        gcd_with_derivative: gcd.g.to_string(),
        gcd_exponent: gcd.k,
    };
    let ok = doc.h_group
        && doc.functional_equation_kn
        && doc.invariance_under_h != Some(false)
        && doc.cyclotomic_coprime != Some(false)
        && doc.phi_homog_identities != Some(false);
    Ok(Output {
        body: to_json(&doc),
        ok,
    })
}

#[derive(Serialize)]
struct CertifyDoc {
    certificate: Certificate,
    recheck: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    splitting: Option<SplittingReport>,
}

fn parse_u<T: std::str::FromStr>(name: &str, s: &str) -> Result<T> {
    s.trim()
        .parse()
        .map_err(|_| Error::Precondition(format!("{name} must be a positive integer, got {s:?}")))
}

fn certify_cmd(family: Family, param: &str, n: Option<u32>, e: u32) -> Result<Output> {
    let (certificate, splitting) = match family {
        Family::Half => {
            let a: RatScalar = param.parse()?;
            let n = n.ok_or_else(|| Error::Precondition("the half family needs --n".into()))?;
            (certify_half(&a, n)?, None)
        }
        Family::Eis3 => (certify_eisenstein3(parse_u("m", param)?)?, None),
        Family::TwoPower => (certify_two_power(parse_u("m", param)?)?, None),
        Family::PPower => {
            let p = parse_u("p", param)?;
            (certify_p_power(p, e)?, Some(splitting_prerequisite(p)?))
        }
    };
    let recheck = certificate.recheck()?;
    // a negative verdict is a valid outcome; disagreement with the recheck is not
    let ok = recheck == certificate.verdict && splitting.as_ref().is_none_or(|s| s.verdict);
    let doc = CertifyDoc {
        certificate,
        recheck,
        splitting,
    };
    Ok(Output {
        body: to_json(&doc),
        ok,
    })
}

fn scan_cmd(bound: u64, jobs: Option<usize>, format: Format) -> Result<Output> {
    let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let result = scan_primes(bound, jobs)?;
    let body = match format {
        Format::Json => to_json(&result),
        Format::Csv => result.to_csv(),
    };
    Ok(Output { body, ok: true })
}

#[derive(Serialize)]
struct DiscDoc {
    #[serde(flatten)]
    report: DiscReport,
    odd_permutation: bool,
    critical_points: bool,
}

fn disc_cmd(m: u32, format: Format) -> Result<Output> {
    let doc = DiscDoc {
        report: disc_report(m)?,
        odd_permutation: odd_permutation_check(m)?,
        critical_points: critical_points_check(m)?,
    };
    let ok = doc.odd_permutation && doc.critical_points && doc.report.relative_gap < 1e-4;
    let body = match format {
        Format::Json => to_json(&doc),
        Format::Csv => {
            let r = &doc.report;
            format!(
                "m,disc,base,s_abs,s_numeric,odd_permutation,critical_points\n{},{},{},{},{},{},{}\n",
                r.m, r.disc, r.base, r.s_abs, r.s_numeric, doc.odd_permutation, doc.critical_points
            )
        }
    };
    Ok(Output { body, ok })
}

#[derive(Serialize)]
struct FltDoc {
    spec: KFamilySpec,
    polynomial: String,
    rational_roots: Vec<RatScalar>,
    /// Only `a = -1` may have rational roots, and then only 0 and 1.
    consistent: bool,
}

fn flt_cmd(a: RatScalar, n: u32, format: Format) -> Result<Output> {
    let spec = KFamilySpec::new(a, n)?;
    let poly = k_general(&spec);
    let roots = rational_root_scan(&poly)?;
    let consistent = if spec.a.is_minus_one() {
        roots
            .iter()
            .all(|r| *r == RatScalar::integer(0) || *r == RatScalar::integer(1))
    } else {
        roots.is_empty()
    };
    let body = match format {
        Format::Json => to_json(&FltDoc {
            polynomial: poly.to_string(),
            spec,
            rational_roots: roots,
            consistent,
        }),
        Format::Csv => {
            let mut s = String::from("a,n,root\n");
            for r in &roots {
                let _ = writeln!(s, "{},{n},{r}", spec.a);
            }
            s
        }
    };
    Ok(Output {
        body,
        ok: consistent,
    })
}

fn dispatch(cli: Cli) -> Result<Output> {
    let format = cli.format;
    let json_only = |name: &str| -> Result<()> {
        if format == Format::Csv {
            return Err(Error::Precondition(format!("{name} has no csv output")));
        }
        Ok(())
    };
    match cli.command {
        Command::Ktilde { n } => ktilde_cmd(n, format),
        Command::Localize {
            a,
            n,
            tol,
            ctol,
            emit_roots,
        } => localize_cmd(a, n, tol, ctol, emit_roots.as_deref(), format),
        Command::Symmetry { n, d_max } => {
            json_only("symmetry")?;
            symmetry_cmd(n, d_max)
        }
        Command::Certify {
            family,
            param,
            n,
            e,
        } => {
            json_only("certify")?;
            certify_cmd(family, &param, n, e)
        }
        Command::Scan { bound, jobs } => scan_cmd(bound, jobs, format),
        Command::Disc { m } => disc_cmd(m, format),
        Command::FltCheck { a, n } => flt_cmd(a, n, format),
    }
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = out.write_all(text.as_bytes());
            } else {
                let _ = err.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match dispatch(cli) {
        Ok(output) => {
            let _ = out.write_all(output.body.as_bytes());
            if output.ok {
                0
            } else {
                let _ = writeln!(err, "kfermat: a verdict is false");
                1
            }
        }
        Err(e) => {
            let _ = writeln!(err, "kfermat: {e}");
            if e.is_usage() {
                2
            } else {
                1
            }
        }
    }
}
