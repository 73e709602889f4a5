//! The `trdeg` command line.
//!
//! Exit codes: 0 on success, 1 when a search or verification comes back
//! negative, 2 on usage errors (bad flags, unparsable rings or elements).

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::cl::{cl_search, cl_to_submonic, ClCertificate, ClOutcome};
use crate::dependence::{
    dependence_matrix, search_submonic_relation, AlgebraConfig, DependenceVerdict, SubmonicCertificate, TupleOutcome,
};
use crate::error::Error;
use crate::experiment::{known_dim, run_experiment, ExperimentReport, ExperimentSpec};
use crate::groebner::{buchberger, lift};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::parse::{parse_poly, split_top_level};
use crate::poly::Polynomial;
use crate::ring::{Elem, Ring};
use crate::weights::separating_weights;

#[derive(Parser, Debug)]
#[command(name = "trdeg", version, about = "Algebraic dependence certificates over rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Search for a submonic relation among elements of an algebra.
    Dep(DepArgs),
    /// Coquand-Lombardi exponent search.
    Cl(ClArgs),
    /// Krull dimension of a ring.
    Dim(DimArgs),
    /// Ideal membership in a polynomial ring over a field.
    Member(MemberArgs),
    /// Positive weights separating a trailing monomial from larger ones.
    Weights(WeightsArgs),
    /// Randomised dependence experiment.
    Experiment(ExperimentArgs),
    /// Check a certificate file.
    Verify(VerifyArgs),
    /// Search every tuple drawn from a pool of elements.
    Depmatrix(DepmatrixArgs),
}

#[derive(Args, Debug)]
struct DepArgs {
    /// Coefficient ring R.
    #[arg(long, default_value = "ZZ")]
    coeffs: String,
    /// The R-algebra A containing the elements.
    #[arg(long)]
    ring: String,
    /// Comma-separated elements of A.
    #[arg(long)]
    elems: String,
    #[arg(long, default_value = "lex")]
    order: String,
    /// Degree bound D.
    #[arg(long, default_value_t = 4)]
    maxdeg: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ClArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    elems: String,
    /// Bound M on each exponent.
    #[arg(long, default_value_t = 8)]
    maxexp: u32,
    /// Also print the converted lex-submonic relation.
    #[arg(long)]
    submonic: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct DimArgs {
    #[arg(long)]
    ring: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct MemberArgs {
    /// A polynomial ring over QQ or GF(p).
    #[arg(long)]
    ring: String,
    #[arg(long)]
    poly: String,
    /// Comma-separated ideal generators.
    #[arg(long)]
    gens: String,
    #[arg(long, default_value = "grevlex")]
    order: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct WeightsArgs {
    /// Trailing monomial in x1, x2, ..., e.g. "x1*x2^2".
    #[arg(long)]
    trailing: String,
    /// Comma-separated monomials above it.
    #[arg(long)]
    above: String,
    #[arg(long, default_value = "lex")]
    order: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ExperimentArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Degree bound of sampled elements.
    #[arg(long, default_value_t = 2)]
    degree: u32,
    /// Sampled coefficients lie in [-B, B].
    #[arg(long, default_value_t = 5)]
    coeff_bound: u64,
    #[arg(long, default_value_t = 3)]
    arity: usize,
    #[arg(long, default_value = "grevlex")]
    order: String,
    /// Search degree bound D.
    #[arg(long, default_value_t = 6)]
    maxdeg: u32,
    #[arg(long, default_value = "ZZ")]
    coeffs: String,
    #[arg(long, default_value = "Poly(ZZ; x)")]
    ring: String,
    /// Print the full JSON report instead of a summary.
    #[arg(long)]
    json: bool,
    /// Write the JSON report to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the per-trial CSV summary to this file.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Include wall-clock times in the JSON report.
    #[arg(long)]
    timings: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// A dependence certificate, CL certificate or experiment report (JSON).
    #[arg(long)]
    cert: PathBuf,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct DepmatrixArgs {
    #[arg(long, default_value = "ZZ")]
    coeffs: String,
    #[arg(long)]
    ring: String,
    /// Comma-separated pool of elements.
    #[arg(long)]
    pool: String,
    #[arg(long, default_value_t = 2)]
    arity: usize,
    #[arg(long, default_value = "lex")]
    order: String,
    #[arg(long, default_value_t = 4)]
    maxdeg: u32,
    #[arg(long)]
    json: bool,
}

/// Outcome of a subcommand before it is turned into an exit code.
enum Failure {
    Negative(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceExceeded { .. } | Error::Internal(_) => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Run the CLI on `args` (including the program name) and return the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Dep(a) => dep(a, out),
        Command::Cl(a) => cl(a, out),
        Command::Dim(a) => dim(a, out),
        Command::Member(a) => member(a, out),
        Command::Weights(a) => weights(a, out),
        Command::Experiment(a) => experiment(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Depmatrix(a) => depmatrix(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Negative(msg)) => {
            let _ = writeln!(err, "{msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn elements(config: &AlgebraConfig, text: &str) -> Result<Vec<Elem>, Failure> {
    Ok(config.parse_elements(&split_top_level(text))?)
}

fn print_json(out: &mut dyn Write, v: &serde_json::Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json value"))?;
    Ok(())
}

fn dep(a: DepArgs, out: &mut dyn Write) -> Outcome {
    let config = AlgebraConfig::new(a.coeffs.parse()?, a.ring.parse()?)?;
    let elems = elements(&config, &a.elems)?;
    let ord: MonomialOrdering = a.order.parse()?;
    match search_submonic_relation(&config, &elems, &ord, a.maxdeg)? {
        DependenceVerdict::Dependent(cert) => {
            if a.json {
                writeln!(out, "{}", cert.to_json())?;
            } else {
                writeln!(out, "dependent: {} = 0", cert.poly_string())?;
                writeln!(out, "trailing monomial: {}", cert.trailing)?;
            }
            Ok(())
        }
        DependenceVerdict::NoRelationUpTo(d) => {
            if a.json {
                print_json(out, &serde_json::json!({ "verdict": "no_relation", "degree_bound": d }))?;
            } else {
                writeln!(out, "no submonic relation of degree <= {d}")?;
            }
            Err(Failure::Negative(format!("no relation up to degree {d}")))
        }
    }
}

fn cl(a: ClArgs, out: &mut dyn Write) -> Outcome {
    let ring: Ring = a.ring.parse()?;
    let elems = split_top_level(&a.elems)
        .iter()
        .map(|e| ring.parse_elem(e))
        .collect::<crate::error::Result<Vec<_>>>()?;
    match cl_search(&ring, &elems, a.maxexp)? {
        ClOutcome::Found(cert) => {
            let sub = if a.submonic { Some(cl_to_submonic(&cert)?) } else { None };
            if a.json {
                let mut v = cert.to_json_value();
                if let Some(s) = &sub {
                    v["submonic"] = s.to_json_value();
                }
                print_json(out, &v)?;
            } else {
                let coeffs: Vec<String> = cert.coeffs.iter().map(|c| ring.fmt_elem(c)).collect();
                let exps: Vec<String> = cert.exponents.iter().map(ToString::to_string).collect();
                writeln!(out, "exponents: {}", exps.join(","))?;
                writeln!(out, "coefficients: {}", coeffs.join(", "))?;
                if let Some(s) = &sub {
                    writeln!(out, "submonic: {} = 0", s.poly_string())?;
                }
            }
            Ok(())
        }
        ClOutcome::NotFoundUpTo(m) => {
            if a.json {
                print_json(out, &serde_json::json!({ "verdict": "not_found", "max_exponent": m }))?;
            } else {
                writeln!(out, "no exponents up to {m}")?;
            }
            Err(Failure::Negative(format!("not found up to exponent {m}")))
        }
    }
}

fn dim(a: DimArgs, out: &mut dyn Write) -> Outcome {
    let ring: Ring = a.ring.parse()?;
    let d = known_dim(&ring)?;
    if a.json {
        print_json(out, &serde_json::json!({ "ring": ring.to_string(), "dim": d }))
    } else {
        writeln!(out, "{d}")?;
        Ok(())
    }
}

fn member(a: MemberArgs, out: &mut dyn Write) -> Outcome {
    let ring: Ring = a.ring.parse()?;
    let ord: MonomialOrdering = a.order.parse()?;
    let f = parse_poly(&a.poly, &ring)?;
    let gens = split_top_level(&a.gens)
        .iter()
        .map(|g| parse_poly(g, &ring))
        .collect::<crate::error::Result<Vec<Polynomial>>>()?;
    let gb = buchberger(&ring, &gens, &ord)?;
    let is_member = gb.contains(&f);
    if a.json {
        let cofactors = if is_member {
            let h = lift(&ring, &f, &gens, &ord)?.unwrap_or_default();
            Some(h.iter().map(|p| crate::parse::print_poly(p, &ring)).collect::<Vec<_>>())
        } else {
            None
        };
        let nf = crate::parse::print_poly(&gb.normal_form(&f), &ring);
        print_json(out, &serde_json::json!({ "member": is_member, "normal_form": nf, "cofactors": cofactors }))
    } else {
        writeln!(out, "{is_member}")?;
        Ok(())
    }
}

/// Parse a monomial written in `x1, x2, ...`.
fn parse_monomial(text: &str) -> Result<Monomial, Failure> {
    let max_var = text
        .split(|c: char| !c.is_ascii_alphanumeric())
        .filter_map(|w| w.strip_prefix('x')?.parse::<u32>().ok())
        .max()
        .unwrap_or(1);
    let names: Vec<String> = (1..=max_var).map(|i| format!("x{i}")).collect();
    let ring = Ring::poly(Ring::ZZ, names)?;
    let p = parse_poly(text, &ring)?;
    let mut terms = p.terms();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if ring.base().expect("poly").is_one(c) => Ok(m.clone()),
        _ => Err(Failure::Usage(format!("`{text}` is not a monomial"))),
    }
}

fn weights(a: WeightsArgs, out: &mut dyn Write) -> Outcome {
    let ord: MonomialOrdering = a.order.parse()?;
    let trailing = parse_monomial(&a.trailing)?;
    let above = split_top_level(&a.above).iter().map(|m| parse_monomial(m)).collect::<Result<Vec<_>, _>>()?;
    let w = separating_weights(&trailing, &above, &ord)?;
    if a.json {
        let ws: Vec<String> = w.as_slice().iter().map(ToString::to_string).collect();
        print_json(out, &serde_json::json!({ "weights": ws }))
    } else {
        writeln!(out, "{w}")?;
        Ok(())
    }
}

fn experiment(a: ExperimentArgs, out: &mut dyn Write) -> Outcome {
    let spec = ExperimentSpec {
        seed: a.seed,
        trials: a.trials,
        degree: a.degree,
        coeff_bound: a.coeff_bound,
        arity: a.arity,
        ordering: a.order,
        max_degree: a.maxdeg,
        coeff_ring: a.coeffs,
        ring: a.ring,
    };
    let report = run_experiment(&spec)?;
    let json = report.to_json(a.timings);
    if let Some(path) = &a.out {
        std::fs::write(path, format!("{json}\n"))?;
    }
    if let Some(path) = &a.csv {
        std::fs::write(path, report.to_csv())?;
    }
    if a.json {
        writeln!(out, "{json}")?;
    } else {
        write!(out, "{}", report.summary())?;
    }
    if !report.all_certificates_verify() {
        return Err(Failure::Negative("a certificate failed verification".into()));
    }
    Ok(())
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> Outcome {
    let text = std::fs::read_to_string(&a.cert)?;
    let value: serde_json::Value = match serde_json::from_str(&text) {
        Ok(v) => v,
        Err(e) => return reject(out, a.json, &format!("not JSON: {e}")),
    };
    let verdict: std::result::Result<String, String> = if value.get("exponents").is_some() {
        match ClCertificate::from_json(&text) {
            Ok(c) if c.verified => Ok("CL certificate verified".into()),
            Ok(_) => Err("the membership identity does not hold".into()),
            Err(e) => Err(e.to_string()),
        }
    } else if value.get("trials").is_some() {
        match ExperimentReport::from_json(&text) {
            Ok(r) => Ok(format!("report with {} trials verified", r.trials.len())),
            Err(e) => Err(e.to_string()),
        }
    } else {
        match SubmonicCertificate::from_json(&text) {
            Ok(c) => match c.check() {
                Ok(()) => Ok("certificate verified".into()),
                Err(why) => Err(why.to_string()),
            },
            Err(e) => Err(e.to_string()),
        }
    };
    match verdict {
        Ok(msg) => {
            if a.json {
                print_json(out, &serde_json::json!({ "verified": true, "reason": msg }))
            } else {
                writeln!(out, "ok: {msg}")?;
                Ok(())
            }
        }
        Err(why) => reject(out, a.json, &why),
    }
}

fn reject(out: &mut dyn Write, json: bool, why: &str) -> Outcome {
    if json {
        print_json(out, &serde_json::json!({ "verified": false, "reason": why }))?;
    } else {
        writeln!(out, "invalid: {why}")?;
    }
    Err(Failure::Negative(format!("verification failed: {why}")))
}

fn depmatrix(a: DepmatrixArgs, out: &mut dyn Write) -> Outcome {
    let config = AlgebraConfig::new(a.coeffs.parse()?, a.ring.parse()?)?;
    let pool = elements(&config, &a.pool)?;
    let ord: MonomialOrdering = a.order.parse()?;
    let m = dependence_matrix(&config, &pool, a.arity, &ord, a.maxdeg)?;
    let algebra = config.algebra();
    let show = |idx: &[usize]| idx.iter().map(|&i| algebra.fmt_elem(&pool[i])).collect::<Vec<_>>();
    if a.json {
        let entries: Vec<serde_json::Value> = m
            .entries
            .iter()
            .map(|e| {
                let (verdict, cert, detail) = match &e.outcome {
                    TupleOutcome::Dependent(c) => ("dependent", Some(c.to_json_value()), None),
                    TupleOutcome::NoRelationUpTo(_) => ("no_relation", None, None),
                    TupleOutcome::ResourceExceeded(w) => ("resource_exceeded", None, Some(w.clone())),
                };
                serde_json::json!({ "elements": show(&e.indices), "verdict": verdict, "certificate": cert, "detail": detail })
            })
            .collect();
        print_json(
            out,
            &serde_json::json!({
                "arity": m.arity,
                "degree_bound": m.degree_bound,
                "dependent": m.dependent,
                "no_relation": m.no_relation,
                "resource_exceeded": m.resource_exceeded,
                "entries": entries,
            }),
        )?;
    } else {
        for e in &m.entries {
            let line = match &e.outcome {
                TupleOutcome::Dependent(c) => format!("dependent: {} = 0", c.poly_string()),
                TupleOutcome::NoRelationUpTo(d) => format!("no relation up to degree {d} (candidate)"),
                TupleOutcome::ResourceExceeded(w) => format!("resource exceeded: {w}"),
            };
            writeln!(out, "({}) {line}", show(&e.indices).join(", "))?;
        }
        writeln!(
            out,
            "dependent {}, no relation {}, resource exceeded {}",
            m.dependent, m.no_relation, m.resource_exceeded
        )?;
    }
    Ok(())
}
