//! Subcommands and their JSON output.

use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use riordan_core::production::{exp_production_za, production_matrix, tridiagonal_to_jacobi};
use riordan_core::triangles::MAX_ORDER;
use riordan_core::{
    BiSeries, Error as CoreError, ExpRiordanPair, Fps, PathKind, Rational, RiordanPair, Triangle, YPoly,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::expr::{parse_expr, EvalError, Expr, SyntaxError};
use crate::format::{self, cf_to_value, FormatError, MatrixDoc, SequenceDoc, TriangleDoc};
use crate::suites;
use crate::table::SequenceTable;

pub const DEFAULT_ORDER: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "riordan", version, about = "Exact Riordan arrays and continued fractions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a continued fraction given as a JSON spec (inline or a file path).
    Expand {
        #[arg(long)]
        cf: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        /// Substitute a number for y and print a sequence instead of a triangle.
        #[arg(long, allow_hyphen_values = true)]
        y_sub: Option<String>,
    },
    /// Matrix of the Riordan array (g, f).
    Riordan {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// The action g(x) h(f(x)) of an ordinary array on a series h.
    Apply {
        #[arg(long, allow_hyphen_values = true)]
        g: String,
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, allow_hyphen_values = true)]
        h: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Production matrix of (g, f), with a tridiagonal report.
    Production {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Compositional inverse of f.
    Revert {
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Run verification suites; exits 4 if any check fails.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Look up a sequence in the bundled table.
    Identify {
        #[arg(long, allow_hyphen_values = true)]
        terms: String,
    },
    /// Count weighted lattice paths by brute force.
    Oracle {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        /// Weight scheme as JSON (inline or a file path); all weights 1 if omitted.
        #[arg(long)]
        weights: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub g: String,
    #[arg(long, allow_hyphen_values = true)]
    pub f: String,
    /// Read g and f as exponential generating functions.
    #[arg(long)]
    pub exp: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Dyck,
    Motzkin,
    Schroeder,
}

impl From<KindArg> for PathKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Dyck => PathKind::Dyck,
            KindArg::Motzkin => PathKind::Motzkin,
            KindArg::Schroeder => PathKind::Schroeder,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
        }
    }
}

impl From<SyntaxError> for CliError {
    fn from(e: SyntaxError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Coefficient { source: crate::expr::ExprError::Eval(_), .. } => {
                CliError::Precondition(e.to_string())
            }
            _ => CliError::Parse(e.to_string()),
        }
    }
}

/// JSON to print and the process exit code.
#[derive(Debug)]
pub struct Output {
    pub json: Value,
    pub exit_code: i32,
}

impl Output {
    fn ok(json: Value) -> Self {
        Output { json, exit_code: 0 }
    }
}

pub fn execute(cmd: &Command) -> Result<Output, CliError> {
    match cmd {
        Command::Expand { cf, order, y_sub } => expand(cf, *order, y_sub.as_deref()),
        Command::Riordan { pair, order, inverse } => riordan(pair, *order, *inverse),
        Command::Apply { g, f, h, order } => apply(g, f, h, *order),
        Command::Production { pair, order } => production(pair, *order),
        Command::Revert { f, order } => revert(f, *order),
        Command::Verify { suite } => verify(suite),
        Command::Identify { terms } => identify(terms),
        Command::Oracle { kind, n, weights } => oracle(*kind, *n, weights.as_deref()),
    }
}

fn check_order(order: usize) -> Result<(), CliError> {
    if order == 0 || order > MAX_ORDER {
        return Err(CliError::Precondition(format!("order must be between 1 and {MAX_ORDER}, got {order}")));
    }
    Ok(())
}

/// Inline JSON if it starts with `{`, otherwise a file path.
fn json_argument(arg: &str) -> Result<String, CliError> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    fs::read_to_string(arg).map_err(|e| CliError::Parse(format!("cannot read {arg}: {e}")))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("documents serialize")
}

fn expand(spec: &str, order: usize, y_sub: Option<&str>) -> Result<Output, CliError> {
    check_order(order)?;
    let cf = format::parse_cf_spec(&json_argument(spec)?)?;
    Ok(Output::ok(match y_sub {
        Some(v) => {
            let y = format::parse_rational(v)?;
            to_json(&SequenceDoc::new(None, cf.expand_at(order, &y).coeffs()))
        }
        None => to_json(&TriangleDoc::rational(None, &Triangle::from_bivariate(&cf.expand(order))?)),
    }))
}

fn parse(text: &str) -> Result<Expr, CliError> {
    Ok(parse_expr(text)?)
}

/// `g` and `f` as rational series, or over `Q[y]` if either mentions `y`.
enum Inputs {
    Rational(Fps, Fps),
    Polynomial(BiSeries, BiSeries),
}

fn pair_inputs(g: &str, f: &str, order: usize) -> Result<Inputs, CliError> {
    let (g, f) = (parse(g)?, parse(f)?);
    Ok(if g.mentions_y() || f.mentions_y() {
        Inputs::Polynomial(g.eval(order)?, f.eval(order)?)
    } else {
        Inputs::Rational(g.eval_rational(order)?, f.eval_rational(order)?)
    })
}

fn riordan(args: &PairArgs, order: usize, inverse: bool) -> Result<Output, CliError> {
    check_order(order)?;
    let doc = match pair_inputs(&args.g, &args.f, order)? {
        Inputs::Rational(g, f) => TriangleDoc::rational(None, &matrix_of(g, f, order, args.exp, inverse)?),
        Inputs::Polynomial(g, f) => TriangleDoc::polynomial(None, &matrix_of(g, f, order, args.exp, inverse)?),
    };
    Ok(Output::ok(to_json(&doc)))
}

fn matrix_of<R: riordan_core::Coefficient>(
    g: riordan_core::Series<R>,
    f: riordan_core::Series<R>,
    order: usize,
    exp: bool,
    inverse: bool,
) -> Result<Triangle<R>, CliError> {
    Ok(if exp {
        let p = ExpRiordanPair::new(g, f)?;
        let p = if inverse { p.inverse()? } else { p };
        p.matrix(order)?
    } else {
        let p = RiordanPair::new(g, f)?;
        let p = if inverse { p.inverse()? } else { p };
        p.matrix(order)?
    })
}

fn apply(g: &str, f: &str, h: &str, order: usize) -> Result<Output, CliError> {
    check_order(order)?;
    let pair = RiordanPair::new(parse(g)?.eval_rational(order)?, parse(f)?.eval_rational(order)?)?;
    let h = parse(h)?.eval_rational(order)?;
    let out = pair.apply(&h)?;
    Ok(Output::ok(to_json(&SequenceDoc::new(None, out.coeffs()))))
}

fn production(args: &PairArgs, order: usize) -> Result<Output, CliError> {
    check_order(order)?;
    if order < 2 {
        return Err(CliError::Precondition("production matrices need order at least 2".into()));
    }
    let g = parse(&args.g)?.eval_rational(order)?;
    let f = parse(&args.f)?.eval_rational(order)?;
    let matrix = if args.exp {
        let pair = ExpRiordanPair::new(g, f)?;
        let za = exp_production_za(&pair)?;
        let direct = production_matrix(&pair.matrix(order)?)?;
        if direct != za.matrix {
            return Err(CliError::Precondition("Z/A matrix disagrees with the direct production matrix".into()));
        }
        direct
    } else {
        production_matrix(&RiordanPair::new(g, f)?.matrix(order)?)?
    };
    let report = match tridiagonal_to_jacobi(&matrix) {
        Ok(cf) => json!({ "tridiagonal": true, "jacobi": cf_to_value(&cf) }),
        Err(e @ (CoreError::NotTridiagonal { .. } | CoreError::BadSuperdiagonal(_))) => {
            json!({ "tridiagonal": matrix.is_tridiagonal(), "jacobi": null, "reason": e.to_string() })
        }
        Err(e) => return Err(e.into()),
    };
    let mut out = json!({ "matrix": to_json(&MatrixDoc::new(&matrix)) });
    out.as_object_mut()
        .expect("object")
        .extend(report.as_object().expect("object").clone());
    Ok(Output::ok(out))
}

fn revert(f: &str, order: usize) -> Result<Output, CliError> {
    check_order(order)?;
    let fbar = parse(f)?.eval_rational(order)?.reversion()?;
    Ok(Output::ok(to_json(&SequenceDoc::new(None, fbar.coeffs()))))
}

fn verify(selection: &str) -> Result<Output, CliError> {
    let suites = suites::parse_selection(selection).map_err(CliError::Parse)?;
    let report = suites::run(&suites);
    Ok(Output {
        exit_code: if report.passed { 0 } else { 4 },
        json: to_json(&report),
    })
}

fn identify(terms: &str) -> Result<Output, CliError> {
    let values = terms
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|_| CliError::Parse(format!("bad term {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    let table = SequenceTable::bundled();
    let matches: Vec<Value> = table
        .identify(&values)
        .into_iter()
        .map(|m| {
            let e = table.get(m.name).expect("matched entries exist");
            json!({
                "name": m.name,
                "offset": m.offset,
                "description": e.description,
                "provenance": e.provenance,
            })
        })
        .collect();
    Ok(Output::ok(json!({ "terms": values, "matches": matches })))
}

fn oracle(kind: KindArg, n: usize, weights: Option<&str>) -> Result<Output, CliError> {
    let w = match weights {
        Some(arg) => format::parse_weights(&json_argument(arg)?)?,
        None => riordan_core::WeightScheme::default(),
    };
    let counts = (0..=n)
        .map(|m| riordan_core::lattice::count_weighted_paths(kind.into(), m, &w))
        .collect::<Result<Vec<YPoly>, _>>()?;
    let counts: Vec<String> = counts.iter().map(YPoly::to_string).collect();
    let kind_name = match kind {
        KindArg::Dyck => "dyck",
        KindArg::Motzkin => "motzkin",
        KindArg::Schroeder => "schroeder",
    };
    Ok(Output::ok(json!({ "kind": kind_name, "n": n, "counts": counts })))
}

/// Parse a sequence document's terms back into rationals.
pub fn sequence_terms(v: &Value) -> Result<Vec<Rational>, CliError> {
    let doc: SequenceDoc = serde_json::from_value(v.clone()).map_err(|e| CliError::Parse(e.to_string()))?;
    Ok(doc.to_terms()?)
}
