//! The `pw` command line. [`run`] is the whole program; the binary only
//! forwards `argv` and the exit code.
//!
//! Exit codes: 0 accept/success, 2 reject (the witness is printed), 1 usage
//! or I/O error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::json;

use crate::algebra::{parse_rat, ComplexF, ExactMultiPoly, ExactPoly};
use crate::numeric::{self, QuadratureSpec};
use crate::product::{level3_check_product, q_product, KTypeVec};
use crate::sl2c::{self, GeneratorCoords, WeightedDiagMap};
use crate::sl2r::{self, SigmaR};
use crate::{atlas, Error};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Sl2r,
    #[value(name = "sl2r-product")]
    Sl2rProduct,
    Sl2c,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
    Ascii,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NumericCheck {
    All,
    Closed,
    Gamma,
    Quadrature,
}

#[derive(Parser, Debug)]
#[command(name = "pw", version, about = "Exact Paley-Wiener intertwining conditions for SL(2,R), SL(2,R)^d and SL(2,C)")]
struct Cli {
    /// Write the result to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

/// JSON arguments are given inline or as `@path`.
#[derive(Subcommand, Debug)]
enum Cmd {
    /// Intertwining polynomial q_{n,m}.
    Q {
        #[arg(long)]
        group: GroupArg,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: String,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: String,
    },
    /// c-function quotient c_n/c_m.
    Cquot {
        #[arg(long)]
        group: GroupArg,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: i64,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: i64,
    },
    /// Level-3 membership of phi (polynomial, multivariate polynomial or weighted map).
    Check3 {
        #[arg(long)]
        group: GroupArg,
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: Option<String>,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: Option<String>,
        #[arg(long)]
        phi: String,
    },
    /// Level-3 membership for SL(2,R)^d; -n/-m are comma-separated.
    #[command(name = "check3-product")]
    Check3Product {
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: String,
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: String,
        #[arg(long)]
        phi: String,
    },
    /// Level-2 conditions for psi, a map from K-type (or weight) to polynomial.
    Check2 {
        #[arg(long)]
        group: GroupArg,
        /// SL(2,C): K-type of the values (source).
        #[arg(short = 'n', allow_hyphen_values = true)]
        n: Option<i64>,
        /// SL(2,R): base K-type; SL(2,C): optional target K-type.
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: Option<i64>,
        /// SL(2,R) K-type truncation N (default: largest |key|).
        #[arg(long)]
        truncation: Option<i64>,
        #[arg(long)]
        psi: String,
    },
    /// Reducibility / composition series at (sigma, lambda).
    Classify {
        #[arg(long)]
        group: GroupArg,
        #[arg(long, allow_hyphen_values = true)]
        sigma: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Imaginary part of lambda (SL(2,C)).
        #[arg(long, allow_hyphen_values = true)]
        lambda_im: Option<String>,
    },
    /// SL(2,R) box picture for K-type m at lambda.
    Box {
        #[arg(short = 'm', allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Grid of classification verdicts.
    Atlas {
        #[arg(long)]
        group: GroupArg,
        #[arg(long, default_value_t = 5)]
        sigma_max: i64,
        #[arg(long, default_value_t = 5)]
        lambda_max: i64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Generator coordinates of a map in A_m.
    Decompose {
        #[arg(long)]
        phi: String,
    },
    /// Map in A_m from generator coordinates.
    Synthesize {
        #[arg(long)]
        coords: String,
    },
    /// Extend a map in A_m to A_target by interpolation.
    Extend {
        #[arg(long)]
        h: String,
        #[arg(long)]
        target: u32,
    },
    /// Floating-point cross-checks of the exact formulas.
    #[command(name = "verify-numeric")]
    VerifyNumeric {
        #[arg(long, value_enum, default_value = "all")]
        check: NumericCheck,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

enum Outcome {
    Done(String),
    Reject(String),
}

fn fail(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn read_json<T: DeserializeOwned>(arg: &str) -> crate::Result<T> {
    let text = match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| fail(format!("cannot read {path}: {e}")))?,
        None => arg.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| fail(format!("invalid JSON: {e}")))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn int_arg(s: &str) -> crate::Result<i64> {
    s.trim().parse().map_err(|_| fail(format!("expected an integer, got `{s}`")))
}

fn ktype_c(v: i64) -> crate::Result<u32> {
    u32::try_from(v).map_err(|_| fail(format!("SL(2,C) K-types are nonnegative, got {v}")))
}

fn vec_arg(s: &str) -> crate::Result<KTypeVec> {
    let v = s.split(',').map(int_arg).collect::<crate::Result<Vec<_>>>()?;
    Ok(KTypeVec::new(v))
}

fn need<T>(v: Option<T>, flag: &str) -> crate::Result<T> {
    v.ok_or_else(|| fail(format!("missing {flag}")))
}

fn keyed_polys(arg: &str) -> crate::Result<BTreeMap<i64, ExactPoly>> {
    let raw: BTreeMap<String, ExactPoly> = read_json(arg)?;
    raw.into_iter().map(|(k, p)| Ok((int_arg(&k)?, p))).collect()
}

fn sigma_r(s: &str) -> crate::Result<SigmaR> {
    match s.trim() {
        "+" | "plus" | "Plus" => Ok(SigmaR::Plus),
        "-" | "minus" | "Minus" => Ok(SigmaR::Minus),
        other => Err(fail(format!("SL(2,R) sigma is `plus` or `minus`, got `{other}`"))),
    }
}

fn execute(cmd: Cmd) -> crate::Result<Outcome> {
    use Outcome::{Done, Reject};
    Ok(match cmd {
        Cmd::Q { group, n, m } => match group {
            GroupArg::Sl2r => Done(to_json(&sl2r::q_poly_r(int_arg(&n)?, int_arg(&m)?)?)),
            GroupArg::Sl2rProduct => Done(to_json(&q_product(&vec_arg(&n)?, &vec_arg(&m)?)?)),
            GroupArg::Sl2c => Done(to_json(&sl2c::q_nm_c(ktype_c(int_arg(&n)?)?, ktype_c(int_arg(&m)?)?)?)),
        },
        Cmd::Cquot { group, n, m } => match group {
            GroupArg::Sl2r => Done(to_json(&sl2r::c_quotient_r(n, m)?)),
            GroupArg::Sl2c => Done(to_json(&sl2c::c_quotient_c(ktype_c(n)?, ktype_c(m)?)?)),
            GroupArg::Sl2rProduct => return Err(fail("cquot is defined for sl2r and sl2c")),
        },
        Cmd::Check3 { group, n, m, phi } => match group {
            GroupArg::Sl2r => {
                let (n, m) = (int_arg(&need(n, "-n")?)?, int_arg(&need(m, "-m")?)?);
                let out = sl2r::level3_check_r(&read_json(&phi)?, n, m)?;
                verdict(out.is_accept(), to_json(&out))
            }
            GroupArg::Sl2rProduct => return execute(Cmd::Check3Product { n: need(n, "-n")?, m: need(m, "-m")?, phi }),
            GroupArg::Sl2c => {
                let map: WeightedDiagMap = read_json(&phi)?;
                if let Some(n) = n {
                    if int_arg(&n)? != map.src() as i64 {
                        return Err(fail("-n disagrees with the map's source K-type"));
                    }
                }
                if let Some(m) = m {
                    if int_arg(&m)? != map.dst() as i64 {
                        return Err(fail("-m disagrees with the map's target K-type"));
                    }
                }
                let out = sl2c::level3_check_c(&map)?;
                verdict(out.is_accept(), to_json(&out))
            }
        },
        Cmd::Check3Product { n, m, phi } => {
            let phi: ExactMultiPoly = read_json(&phi)?;
            let out = level3_check_product(&phi, &vec_arg(&n)?, &vec_arg(&m)?)?;
            verdict(out.is_accept(), to_json(&out))
        }
        Cmd::Check2 { group, n, m, truncation, psi } => {
            let psi = keyed_polys(&psi)?;
            match group {
                GroupArg::Sl2r => {
                    let m = need(m, "-m")?;
                    let trunc = truncation.unwrap_or_else(|| psi.keys().map(|k| k.abs()).max().unwrap_or(0));
                    let report = sl2r::level2_check_r(&psi, m, trunc)?;
                    verdict(report.passed, to_json(&report))
                }
                GroupArg::Sl2c => {
                    let n = ktype_c(need(n, "-n")?)?;
                    let m = m.map(ktype_c).transpose()?.unwrap_or(n);
                    let report = sl2c::level2_functional_check_c_to(&psi, n, m)?;
                    verdict(report.passed, to_json(&report))
                }
                GroupArg::Sl2rProduct => return Err(fail("check2 is defined for sl2r and sl2c")),
            }
        }
        Cmd::Classify { group, sigma, lambda, lambda_im } => {
            let lambda = parse_rat(&lambda)?;
            match group {
                GroupArg::Sl2r => Done(to_json(&sl2r::composition_series_r(sigma_r(&sigma)?, &lambda))),
                GroupArg::Sl2c => {
                    let s = int_arg(&sigma)?;
                    let im = lambda_im.as_deref().map(parse_rat).transpose()?.unwrap_or_default();
                    let r = sl2c::reducibility_c_complex(s, &lambda, &im);
                    let mut v = serde_json::to_value(&r).expect("serializable");
                    if let Ok(d) = sl2c::diamond(s, &lambda) {
                        if im == Default::default() {
                            v["diamond"] = serde_json::to_value(d).expect("serializable");
                        }
                    }
                    Done(serde_json::to_string_pretty(&v).expect("serializable"))
                }
                GroupArg::Sl2rProduct => return Err(fail("classify is defined for sl2r and sl2c")),
            }
        }
        Cmd::Box { m, lambda, format } => {
            let b = sl2r::box_picture_r(m, &parse_rat(&lambda)?);
            Done(match format {
                Format::Json => to_json(&b),
                Format::Dot => b.to_dot(),
                Format::Ascii => b.to_ascii(),
            })
        }
        Cmd::Atlas { group, sigma_max, lambda_max, format } => match (group, format) {
            (GroupArg::Sl2c, Format::Json) => Done(to_json(&atlas::atlas_c(sigma_max, lambda_max))),
            (GroupArg::Sl2c, Format::Dot) => Done(atlas::atlas_c(sigma_max, lambda_max).to_dot()),
            (GroupArg::Sl2r, Format::Json) => Done(to_json(&atlas::atlas_r(lambda_max))),
            (GroupArg::Sl2r, Format::Dot) => Done(atlas::atlas_r(lambda_max).to_dot()),
            _ => return Err(fail("atlas supports --group sl2r|sl2c with --format json|dot")),
        },
        Cmd::Decompose { phi } => {
            let phi: WeightedDiagMap = read_json(&phi)?;
            match sl2c::free_module_decompose(&phi) {
                Ok(c) => Done(to_json(&c)),
                Err(Error::NotInAlgebra(_)) => {
                    let out = sl2c::algebra_check(&phi)?;
                    Reject(to_json(&out))
                }
                Err(e) => return Err(e),
            }
        }
        Cmd::Synthesize { coords } => {
            let c: GeneratorCoords = read_json(&coords)?;
            let c = GeneratorCoords::new(c.m, c.h)?;
            Done(to_json(&sl2c::synthesize(&c)))
        }
        Cmd::Extend { h, target } => {
            let h: WeightedDiagMap = read_json(&h)?;
            Done(to_json(&sl2c::extend_interpolate(&h, target)?))
        }
        Cmd::VerifyNumeric { check, samples, seed } => {
            let mut reports = Vec::new();
            let mut ok = true;
            if matches!(check, NumericCheck::All | NumericCheck::Closed) {
                for r in [numeric::verify_c_numeric_r(8, samples, seed)?, numeric::verify_c_numeric_c(8, samples, seed)?] {
                    ok &= r.passes(1e-9);
                    reports.push(r);
                }
            }
            if matches!(check, NumericCheck::All | NumericCheck::Gamma) {
                let r = numeric::verify_gamma_reduce(8, samples.min(10), seed)?;
                ok &= r.passes(1e-9);
                reports.push(r);
            }
            if matches!(check, NumericCheck::All | NumericCheck::Quadrature) {
                let lambdas = [1.0, 2.0, 3.0].map(|x| ComplexF::new(x, 0.0));
                let lambdas = [lambdas[0], lambdas[1], lambdas[2], ComplexF::new(2.0, 1.0)];
                let r = numeric::verify_quadrature_r(6, &lambdas, &QuadratureSpec::default())?;
                ok &= r.passes(1e-6);
                reports.push(r);
            }
            verdict(ok, to_json(&json!({ "passed": ok, "reports": reports })))
        }
    })
}

fn verdict(accept: bool, body: String) -> Outcome {
    if accept {
        Outcome::Done(body)
    } else {
        Outcome::Reject(body)
    }
}

/// Runs one `pw` invocation; `args` includes the program name.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    let (code, body) = match execute(cli.cmd) {
        Ok(Outcome::Done(b)) => (0, b),
        Ok(Outcome::Reject(b)) => (2, b),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let body = if body.ends_with('\n') { body } else { body + "\n" };
    match cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, body) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => {
            let _ = out.write_all(body.as_bytes());
        }
    }
    code
}
