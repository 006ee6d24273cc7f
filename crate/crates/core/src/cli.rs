//! The `posbasis` command line.
//!
//! [`run`] does all the work and returns the exit code with the text meant
//! for stdout and stderr, so the binary stays a two-liner and tests can
//! drive every subcommand in-process.
//!
//! Exit codes: 0 success, 1 domain error (or a rejected family in
//! `verify`), 2 unparsable input, 3 formula/oracle disagreement.

use std::fmt::Write as _;
use std::io::Read;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{
    basis_for_nodes, dn, interval_basis, lorentz_degree, lorentz_theorem_applies, max_dim, optimal_nodes,
    to_bernstein, BasisFamily, BasisFamilyJson, Variant, DEFAULT_LORENTZ_CAP,
};
use crate::error::Error;
use crate::nodes::{free_witnesses, omega_type, NodeSystem};
use crate::omega::OmegaSeq;
use crate::oracle::{dn_oracle, tau_oracle, DEFAULT_PATTERN_LIMIT};
use crate::parse::parse_set_expr;
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::set::CompactSet;
use crate::verify::verify_positive_basis;

pub const LORENTZ_CAP_ENV: &str = "POSBASIS_LORENTZ_CAP";

#[derive(Debug, Parser)]
#[command(name = "posbasis", version, about = "Positive polynomial bases on compact subsets of the line")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Holes, lambda, eccentric points and their parities.
    Profile {
        set: String,
        #[arg(long)]
        json: bool,
    },
    /// Least maximal degree of an n-element positive basis.
    Dn {
        set: String,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Largest positive-basis dimension inside polynomials of degree <= m.
    Maxdim {
        set: String,
        m: usize,
        #[arg(long)]
        json: bool,
    },
    /// tau of a 0-1 type, e.g. 10010110001.
    Tau {
        omega: String,
        #[arg(long)]
        json: bool,
    },
    /// sigma of a 0-1 type, by definition and by the closed form.
    Sigma {
        omega: String,
        #[arg(long)]
        json: bool,
    },
    /// A node system reaching d_n.
    Nodes {
        set: String,
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// An n-element positive basis of least maximal degree.
    Basis {
        set: String,
        n: usize,
        /// Use these nodes (comma separated) instead of the optimal ones.
        #[arg(long)]
        nodes: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// The maximal positive basis of degree <= m on [a, b].
    IntervalBasis {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        m: usize,
        #[arg(long, default_value = "standard")]
        variant: String,
        #[arg(long)]
        json: bool,
    },
    /// Lorentz degree of a polynomial given lowest coefficient first.
    Lorentz {
        #[arg(allow_hyphen_values = true)]
        coeffs: String,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check a family (basis JSON inline, a file path, or - for stdin).
    Verify {
        set: String,
        basis: String,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force cross-checks of the closed forms.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// tau by linear programming.
    Tau {
        omega: String,
        /// Nodes (comma separated); defaults to 1, 2, ..., n.
        #[arg(long)]
        nodes: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// d_n by enumerating node patterns.
    Dn {
        set: String,
        n: usize,
        #[arg(long, default_value_t = DEFAULT_PATTERN_LIMIT)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Domain(String),
    Parse(String),
    Mismatch(String),
}

impl From<crate::omega::OmegaError> for Failure {
    fn from(e: crate::omega::OmegaError) -> Self {
        Error::from(e).into()
    }
}

impl From<crate::nodes::NodeError> for Failure {
    fn from(e: crate::nodes::NodeError) -> Self {
        Error::from(e).into()
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match &e {
            Error::Parse(_) | Error::Omega(crate::omega::OmegaError::BadDigit(_)) | Error::Omega(crate::omega::OmegaError::Empty) => {
                Failure::Parse(e.to_string())
            }
            Error::Mismatch(_) => Failure::Mismatch(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Reply = Result<(i32, String), Failure>;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(f) => {
            let (code, msg) = match f {
                Failure::Domain(m) => (1, m),
                Failure::Parse(m) => (2, m),
                Failure::Mismatch(m) => (3, m),
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
    }
}

fn set_arg(text: &str) -> Result<CompactSet, Failure> {
    parse_set_expr(text).map_err(|e| Failure::Parse(e.to_string()))
}

fn omega_arg(text: &str) -> Result<OmegaSeq, Failure> {
    text.parse::<OmegaSeq>().map_err(|e| Failure::Parse(e.to_string()))
}

fn rat_arg(text: &str) -> Result<Rational, Failure> {
    rational::parse(text).map_err(|e| Failure::Parse(e.to_string()))
}

/// `2,0,1`, `[2, 0, 1]` or a JSON array mixing strings and integers.
fn rat_list_arg(text: &str) -> Result<Vec<Rational>, Failure> {
    let trimmed = text.trim();
    if let Ok(Value::Array(items)) = serde_json::from_str::<Value>(trimmed) {
        return items
            .iter()
            .map(|v| rational::serde_rat::from_value(v).map_err(Failure::Parse))
            .collect();
    }
    let inner = trimmed.trim_start_matches('[').trim_end_matches(']');
    inner.split(',').filter(|s| !s.trim().is_empty()).map(rat_arg).collect()
}

fn emit<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn ok(text: String) -> Reply {
    Ok((0, text))
}

fn dispatch(command: Command) -> Reply {
    match command {
        Command::Profile { set, json } => profile(&set_arg(&set)?, json),
        Command::Dn { set, n, json } => {
            let s = set_arg(&set)?;
            let b = dn(&s, n)?;
            if json {
                ok(emit(&json!({"set": s, "n": n, "tag": b.tag, "degree": b.degree})))
            } else {
                ok(format!("{}\n", b.degree))
            }
        }
        Command::Maxdim { set, m, json } => {
            let s = set_arg(&set)?;
            let d = max_dim(&s, m)?;
            if json {
                ok(emit(&json!({"set": s, "m": m, "max_dim": d})))
            } else {
                ok(format!("{d}\n"))
            }
        }
        Command::Tau { omega, json } => {
            let w = omega_arg(&omega)?;
            if json {
                ok(emit(&json!({
                    "omega": w, "n": w.n(), "N": w.count_n(), "K": w.count_k(), "nu": w.nu(), "tau": w.tau()
                })))
            } else {
                ok(format!("{}\n", w.tau()))
            }
        }
        Command::Sigma { omega, json } => {
            let w = omega_arg(&omega)?;
            let (s, c) = (w.sigma()?, w.sigma_closed()?);
            if s != c {
                return Err(Failure::Mismatch(format!("sigma({w}): definition {s}, closed form {c}")));
            }
            if json {
                ok(emit(&json!({
                    "omega": w, "sigma": s, "sigma_closed": c,
                    "exception": w.sigma_exception().map(|e| format!("{e:?}"))
                })))
            } else {
                ok(format!("{s}\n"))
            }
        }
        Command::Nodes { set, n, json } => {
            let s = set_arg(&set)?;
            let t = optimal_nodes(&s, n)?;
            let w = omega_type(&s, &t)?;
            let sigma = w.sigma()?;
            if json {
                ok(emit(&json!({"set": s, "n": n, "nodes": t, "omega": w, "sigma": sigma})))
            } else {
                let list: Vec<String> = t.nodes().iter().map(rational::format).collect();
                ok(format!("{}\n", list.join(" ")))
            }
        }
        Command::Basis { set, n, nodes, json } => {
            let s = set_arg(&set)?;
            let t = match nodes {
                Some(text) => {
                    let t = NodeSystem::new(rat_list_arg(&text)?)?;
                    if t.len() != n {
                        return Err(Failure::Domain(format!("{} nodes given for n = {n}", t.len())));
                    }
                    t
                }
                None => optimal_nodes(&s, n)?,
            };
            family_reply(&basis_for_nodes(&s, &t)?, json)
        }
        Command::IntervalBasis { a, b, m, variant, json } => {
            let (a, b) = (rat_arg(&a)?, rat_arg(&b)?);
            let v: Variant = variant.parse().map_err(|e: Error| Failure::Parse(e.to_string()))?;
            family_reply(&interval_basis(&a, &b, m, v)?, json)
        }
        Command::Lorentz { coeffs, cap, json } => lorentz(&coeffs, cap, json),
        Command::Verify { set, basis, json } => verify(&set_arg(&set)?, &basis, json),
        Command::Oracle(OracleCommand::Tau { omega, nodes, json }) => {
            let w = omega_arg(&omega)?;
            let t: Vec<Rational> = match nodes {
                Some(text) => NodeSystem::new(rat_list_arg(&text)?)?.nodes().to_vec(),
                None => NodeSystem::canonical(w.n()).nodes().to_vec(),
            };
            let lp = tau_oracle(&w, &t, &free_witnesses(&w, &t))?;
            let formula = w.tau();
            let status = if lp == formula { "MATCH" } else { "MISMATCH" };
            let text = if json {
                emit(&json!({"omega": w, "formula": formula, "oracle": lp, "status": status}))
            } else {
                format!("formula {formula}\noracle  {lp}\n{status}\n")
            };
            Ok((if lp == formula { 0 } else { 3 }, text))
        }
        Command::Oracle(OracleCommand::Dn { set, n, limit, json }) => {
            let s = set_arg(&set)?;
            let formula = dn(&s, n)?.degree;
            let res = dn_oracle(&s, n, limit)?;
            let matched = res.degree == formula;
            let status = if matched { "MATCH" } else { "MISMATCH" };
            let text = if json {
                emit(&json!({
                    "set": s, "n": n, "formula": formula, "oracle": res.degree, "status": status,
                    "nodes": res.nodes, "omega": res.omega, "pattern": res.pattern,
                    "patterns_checked": res.patterns_checked
                }))
            } else {
                let nodes: Vec<String> = res.nodes.nodes().iter().map(rational::format).collect();
                format!(
                    "formula {formula}\noracle  {} (nodes {}, type {}, {} patterns)\n{status}\n",
                    res.degree,
                    nodes.join(" "),
                    res.omega,
                    res.patterns_checked
                )
            };
            Ok((if matched { 0 } else { 3 }, text))
        }
    }
}

fn profile(s: &CompactSet, json: bool) -> Reply {
    let p = s.profile();
    if json {
        return ok(emit(&json!({"set": s, "profile": p})));
    }
    let mut out = String::new();
    let fmt_list = |v: &[Rational]| v.iter().map(rational::format).collect::<Vec<_>>().join(" ");
    writeln!(out, "set        {s}").unwrap();
    match p.cardinality {
        Some(c) => writeln!(out, "finite     {c} points").unwrap(),
        None => writeln!(out, "infinite").unwrap(),
    }
    let holes: Vec<String> = p
        .holes
        .iter()
        .map(|h| format!("({},{})", rational::format(&h.alpha), rational::format(&h.beta)))
        .collect();
    writeln!(out, "holes      {}", holes.join(" ")).unwrap();
    writeln!(out, "lambda     {}", p.lambda).unwrap();
    if let (Some(l), Some(r)) = (p.theta_left, p.theta_right) {
        writeln!(out, "eccentric  left [{}] right [{}]", fmt_list(&p.eccentric_left), fmt_list(&p.eccentric_right)).unwrap();
        writeln!(out, "theta      left {l} right {r}").unwrap();
    }
    ok(out)
}

fn family_reply(fam: &BasisFamily, json: bool) -> Reply {
    if json {
        return ok(emit(&fam.to_json()?));
    }
    let mut out = String::new();
    let nodes: Vec<String> = fam.nodes.nodes().iter().map(rational::format).collect();
    writeln!(out, "nodes {}", nodes.join(" ")).unwrap();
    for (j, f) in fam.polys.iter().enumerate() {
        writeln!(out, "b_{} = {}    [degree {}]", j + 1, f, f.degree()).unwrap();
    }
    writeln!(out, "max degree {}", fam.max_degree()).unwrap();
    ok(out)
}

fn lorentz(coeffs: &str, cap: Option<usize>, json: bool) -> Reply {
    let p = Polynomial::new(rat_list_arg(coeffs)?);
    let cap = match cap {
        Some(c) => c,
        None => match std::env::var(LORENTZ_CAP_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Failure::Parse(format!("{LORENTZ_CAP_ENV}={v} is not a positive integer")))?,
            Err(_) => DEFAULT_LORENTZ_CAP,
        },
    };
    let degree = p.degree().unwrap_or(0);
    let l = lorentz_degree(&p, cap)?;
    let applies = lorentz_theorem_applies(&p)?;
    let coeffs_at_l = to_bernstein(&p, l)?;
    if json {
        ok(emit(&json!({
            "poly": p, "degree": degree, "lorentz_degree": l, "theorem_applies": applies,
            "bernstein": coeffs_at_l.iter().map(rational::format).collect::<Vec<_>>()
        })))
    } else {
        ok(format!("{l}\n"))
    }
}

/// Accepts basis JSON as written by `basis --json`, or a bare array of
/// coefficient arrays.
fn read_family(arg: &str) -> Result<Vec<Polynomial>, Failure> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
        s
    } else if arg.trim_start().starts_with(['{', '[']) {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| Failure::Domain(format!("reading {arg}: {e}")))?
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Parse(format!("basis JSON: {e}")))?;
    if value.is_array() {
        return serde_json::from_value::<Vec<Polynomial>>(value).map_err(|e| Failure::Parse(format!("basis JSON: {e}")));
    }
    let fam: BasisFamilyJson = serde_json::from_value(value).map_err(|e| Failure::Parse(format!("basis JSON: {e}")))?;
    Ok(fam.into_family()?.expanded())
}

fn verify(s: &CompactSet, basis: &str, json: bool) -> Reply {
    let polys = read_family(basis)?;
    let report = verify_positive_basis(s, &polys)?;
    let code = if report.accepted() { 0 } else { 1 };
    let text = if json {
        emit(&report)
    } else {
        let mut out = format!("{}\n", report.verdict);
        for r in &report.reasons {
            writeln!(out, "  {r}").unwrap();
        }
        out
    };
    Ok((code, text))
}
