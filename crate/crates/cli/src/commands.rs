use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use wronski::algebra::{
    DiffPoly, ProductElement, UniPoly, UniPolyRing, DEFAULT_MAX_ORDER,
};
use wronski::freelie::LiePoly;
use wronski::specder::{compile_lie_to_diffpoly, verify_localization_grid};
use wronski::structconst::{
    abelian, check_identity, default_candidate_seeds, heisenberg, ideal_closure,
    nonprimality_witness_search, reconstruction_check, rl_report, sl2,
    sl2_vector_fields_embedding, sl_n, two_dim_nonabelian, CheckOutcome, OperatorMatrix,
    StructConstAlgebra, Vector, WitnessKind,
};
use wronski::taylor::{find_point, is_w1_identity_with, taylor_map, PointEvaluation};
use wronski::witness::{
    nonvanishing_witness, prime_character_search, mixed_algebra, WitnessReport,
    DEFAULT_DEGREE_BUDGET, DEFAULT_MAX_N,
};
use wronski::Error;

use crate::parse::{
    parse_diffpoly_expr, parse_lie_expr, parse_point, parse_tuple, parse_vector, ParseError,
};
use crate::report::{text, text_list, Format, Report, Verdict};

pub const DEFAULT_RL_DEGREE: u32 = 3;
pub const DEFAULT_TAYLOR_ORDER: usize = 8;
pub const DEFAULT_LOCALIZATION_GRID: u32 = 3;
pub const DEFAULT_RANDOM_SEEDS: usize = 20;

#[derive(Debug, Parser)]
#[command(name = "wronski", version, about = "Lie identities of vector fields on the line")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Algebra file (JSON) or builtin name: sl<n>, heisenberg, abelian<n>, aff2.
    #[arg(long, global = true)]
    pub algebra: Option<String>,
    /// Highest derivative order accepted in differential polynomials.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: u32,
    /// Truncation order for power series.
    #[arg(long, global = true)]
    pub truncation: Option<usize>,
    /// Degree bound or budget, depending on the subcommand.
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Seed for randomized candidate generation.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    /// Q[a] x Q[b] with a' = 0 and b' = 1; elements are written (p(a), q(b)).
    Mixed,
    /// Q[t] with d/dt.
    Qt,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compile a Lie polynomial to p with f(y1∂, ..., yn∂) = p∂.
    Compile {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Number of generic elements; defaults to the largest generator used.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Decide whether a Lie polynomial is an identity of Diff Q[[x]].
    W1Identity {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Evaluate a multilinear Lie polynomial on all basis tuples of --algebra.
    CheckIdentity {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The operator <x, y, z> and the reconstruction identity.
    TripleBracket {
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
        #[arg(allow_hyphen_values = true)]
        z: String,
    },
    /// Span R(L) up to --degree and run its structural checks.
    RlReport,
    /// Ideal closures and a search for commuting ideals.
    Ideal {
        /// Extra seed vectors, e.g. "e + 2*h".
        seeds: Vec<String>,
        /// Number of random seed vectors added to the basis.
        #[arg(long, default_value_t = DEFAULT_RANDOM_SEEDS)]
        random: usize,
    },
    /// Least n with a^(n)·b nonzero.
    PrimeWitness {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, value_enum, default_value_t = Ring::Mixed)]
        ring: Ring,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: u32,
        /// Use b = a.
        #[arg(long)]
        semiprime: bool,
    },
    /// Monomials t^j making a multilinear differential polynomial nonzero.
    Nonvanishing {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Taylor series of a differential polynomial at a point.
    Taylor {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Values such as "y1=1, y2'=-1/2"; found automatically if omitted.
        #[arg(long)]
        point: Option<String>,
    },
    /// Check the bracket formula in the localization on a grid of powers.
    LocalizeVerify,
    /// Check the embedding of sl2 into polynomial vector fields.
    EmbedSl2,
    /// Print an algebra description as JSON.
    ShowAlgebra,
}

#[derive(Debug)]
pub enum CliError {
    Parse { what: &'static str, error: ParseError },
    Usage(String),
    Library(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Library(Error::OrderCapExceeded { .. } | Error::DegreeCapExceeded { .. }) => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { what, error } => write!(f, "cannot parse {what}: {error}"),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Library(e)
    }
}

type CResult<T> = Result<T, CliError>;

fn parsed<T>(what: &'static str, r: Result<T, ParseError>) -> CResult<T> {
    r.map_err(|error| CliError::Parse { what, error })
}

/// Builtin algebra by name.
pub fn builtin_algebra(name: &str) -> Option<StructConstAlgebra> {
    match name {
        "heisenberg" => return Some(heisenberg()),
        "aff2" => return Some(two_dim_nonabelian()),
        _ => {}
    }
    let number = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
    if let Some(n) = number("sl").filter(|n| (2..=6).contains(n)) {
        return Some(if n == 2 { sl2() } else { sl_n(n) });
    }
    number("abelian").filter(|n| (1..=16).contains(n)).map(abelian)
}

/// A file path, a builtin name, or a missing file whose stem names a
/// builtin (so "sl3.alg" works outside the directory holding it).
pub fn load_algebra(source: &str) -> CResult<StructConstAlgebra> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {source}: {e}")))?;
        return Ok(StructConstAlgebra::from_json(&text)?);
    }
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(source);
    builtin_algebra(source)
        .or_else(|| builtin_algebra(stem))
        .ok_or_else(|| CliError::Usage(format!("{source}: no such file or builtin algebra")))
}

fn require_algebra(opts: &GlobalOpts) -> CResult<StructConstAlgebra> {
    let source = opts
        .algebra
        .as_deref()
        .ok_or_else(|| CliError::Usage("this subcommand needs --algebra".into()))?;
    load_algebra(source)
}

fn generic_count(f: &LiePoly, n: Option<usize>) -> CResult<usize> {
    let needed = f.generators().last().map_or(1, |g| g + 1);
    match n {
        Some(n) if n < needed => Err(CliError::Usage(format!(
            "the expression uses g{needed} but --n is {n}"
        ))),
        Some(n) => Ok(n),
        None => Ok(needed),
    }
}

fn check_order(p: &DiffPoly, cap: u32) -> CResult<()> {
    let order = p.max_order();
    if order > cap {
        return Err(Error::OrderCapExceeded { order, cap }.into());
    }
    Ok(())
}

fn point_json(phi: &PointEvaluation) -> Value {
    let map: Map<String, Value> = phi
        .values
        .iter()
        .map(|(v, c)| (v.to_string(), text(c)))
        .collect();
    Value::Object(map)
}

fn matrix_json(m: &OperatorMatrix) -> Value {
    Value::Array(m.rows().iter().map(text_list).collect())
}

fn matrix_lines(m: &OperatorMatrix) -> Vec<String> {
    m.rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(|c| format!("{c:>5}")).collect();
            format!("[{} ]", cells.join(""))
        })
        .collect()
}

fn outcome_line(name: &str, c: &CheckOutcome) -> String {
    let status = if c.passed { "pass" } else { "FAIL" };
    match &c.failure {
        Some(why) => format!("{name}: {status} after {} checks: {why}", c.checked),
        None => format!("{name}: {status} ({} checks)", c.checked),
    }
}

fn outcome_json(c: &CheckOutcome) -> Value {
    json!({ "passed": c.passed, "checked": c.checked, "failure": c.failure })
}

pub fn dispatch(cmd: &Command, opts: &GlobalOpts) -> CResult<Report> {
    let start = Instant::now();
    let mut report = match cmd {
        Command::Compile { expr, n } => compile(expr, *n, opts)?,
        Command::W1Identity { expr, n } => w1_identity(expr, *n, opts)?,
        Command::CheckIdentity { expr } => check(expr, opts)?,
        Command::TripleBracket { x, y, z } => triple(x, y, z, opts)?,
        Command::RlReport => rl(opts)?,
        Command::Ideal { seeds, random } => ideal(seeds, *random, opts)?,
        Command::PrimeWitness {
            a,
            b,
            ring,
            max_n,
            semiprime,
        } => prime_witness(a, b.as_deref(), *ring, *max_n, *semiprime)?,
        Command::Nonvanishing { expr } => nonvanishing(expr, opts)?,
        Command::Taylor { expr, point } => taylor(expr, point.as_deref(), opts)?,
        Command::LocalizeVerify => localize(opts)?,
        Command::EmbedSl2 => embed_sl2(),
        Command::ShowAlgebra => show_algebra(opts)?,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

fn compile(expr: &str, n: Option<usize>, opts: &GlobalOpts) -> CResult<Report> {
    let f = parsed("Lie expression", parse_lie_expr(expr))?;
    let n = generic_count(&f, n)?;
    let p = compile_lie_to_diffpoly(&f, n)?.diff_poly;
    check_order(&p, opts.max_order)?;
    Ok(Report::new(
        "compile",
        Verdict::from_bool(p.is_zero()),
        format!("f(y1∂, ..., y{n}∂) = p∂ with p = {p}"),
    )
    .detail(format!("{} terms, derivative order {}", p.len(), p.max_order()))
    .cert("diff_poly", text(&p))
    .budget("n", n))
}

fn w1_identity(expr: &str, n: Option<usize>, opts: &GlobalOpts) -> CResult<Report> {
    let f = parsed("Lie expression", parse_lie_expr(expr))?;
    let n = generic_count(&f, n)?;
    let v = is_w1_identity_with(&f, n, opts.truncation)?;
    check_order(&v.diff_poly, opts.max_order)?;
    let Some(cert) = &v.certificate else {
        return Ok(Report::new(
            "w1-identity",
            Verdict::Holds,
            "f compiles to 0, so it is an identity of Diff Q[[x]]",
        )
        .cert("diff_poly", "0")
        .budget("n", n));
    };
    let mut report = Report::new(
        "w1-identity",
        Verdict::Fails,
        format!("not an identity: nonzero at the point {}", cert.point),
    )
    .detail(format!("p = {}", v.diff_poly));
    for line in cert.to_string().lines() {
        report = report.detail(line);
    }
    Ok(report
        .cert("diff_poly", text(&v.diff_poly))
        .cert("point", point_json(&cert.point))
        .cert("truncation", cert.truncation)
        .cert("series", text_list(&cert.series))
        .cert("value", text_list(cert.value.coeffs()))
        .budget("n", n)
        .budget("truncation", cert.truncation))
}

fn check(expr: &str, opts: &GlobalOpts) -> CResult<Report> {
    let l = require_algebra(opts)?;
    let f = parsed("Lie expression", parse_lie_expr(expr))?;
    let vars: BTreeSet<usize> = f.generators();
    let c = check_identity(&l, &f, &vars)?;
    let mut report = Report::new(
        "check-identity",
        Verdict::from_bool(c.holds),
        match c.holds {
            true => format!("identity holds on all {} basis tuples", c.tuples_checked),
            false => "identity fails".to_string(),
        },
    )
    .budget("tuples_checked", c.tuples_checked);
    if let (Some(tuple), Some(value)) = (&c.counterexample, &c.value) {
        let names = l.basis_names();
        let shown: Vec<String> = tuple
            .iter()
            .map(|&(v, i)| format!("g{} = {}", v + 1, names[i]))
            .collect();
        let assignment: Map<String, Value> = tuple
            .iter()
            .map(|&(v, i)| (format!("g{}", v + 1), text(&names[i])))
            .collect();
        report = report
            .detail(format!("at {}", shown.join(", ")))
            .detail(format!("value {}", l.format_vector(value)))
            .cert("assignment", Value::Object(assignment))
            .cert("value", text_list(&value.0));
    }
    Ok(report)
}

fn triple(x: &str, y: &str, z: &str, opts: &GlobalOpts) -> CResult<Report> {
    let l = require_algebra(opts)?;
    let g1 = parsed("vector", parse_vector(x, &l))?;
    let g2 = parsed("vector", parse_vector(y, &l))?;
    let g3 = parsed("vector", parse_vector(z, &l))?;
    let r = reconstruction_check(&l, &g1, &g2, &g3);
    let mut report = Report::new(
        "triple-bracket",
        Verdict::from_bool(r.all_pass()),
        format!(
            "reconstruction identity {} for {} of {} basis vectors{}",
            if r.all_pass() { "holds" } else { "fails" },
            r.per_basis.iter().filter(|b| **b).count(),
            r.per_basis.len(),
            if r.degenerate() { "; the operator is zero" } else { "" }
        ),
    );
    for line in matrix_lines(&r.triple) {
        report = report.detail(line);
    }
    let per_basis: Map<String, Value> = l
        .basis_names()
        .iter()
        .zip(&r.per_basis)
        .map(|(n, b)| (n.clone(), Value::Bool(*b)))
        .collect();
    Ok(report
        .cert("matrix", matrix_json(&r.triple))
        .cert("per_basis", Value::Object(per_basis)))
}

fn rl(opts: &GlobalOpts) -> CResult<Report> {
    let l = require_algebra(opts)?;
    let degree = opts.degree.unwrap_or(DEFAULT_RL_DEGREE) as usize;
    let r = rl_report(&l, degree);
    Ok(Report::new(
        "rl-report",
        Verdict::from_bool(r.all_pass()),
        format!(
            "{} nonzero triple brackets; products of degree at most {degree} span dimension {}",
            r.generators.len(),
            r.span_dim()
        ),
    )
    .detail(outcome_line("commutative", &r.commutative))
    .detail(outcome_line("derivation formula", &r.derivation_formula))
    .detail(outcome_line("symmetry", &r.symmetry))
    .detail(outcome_line("module linearity", &r.module_linearity))
    .cert("commutative", outcome_json(&r.commutative))
    .cert("derivation_formula", outcome_json(&r.derivation_formula))
    .cert("symmetry", outcome_json(&r.symmetry))
    .cert("module_linearity", outcome_json(&r.module_linearity))
    .cert("span", Value::Array(r.spanning.iter().map(matrix_json).collect()))
    .budget("degree", degree))
}

fn ideal(seeds: &[String], random: usize, opts: &GlobalOpts) -> CResult<Report> {
    let l = require_algebra(opts)?;
    let seed = opts.seed.unwrap_or(0);
    let given = seeds
        .iter()
        .map(|s| parsed("vector", parse_vector(s, &l)))
        .collect::<CResult<Vec<Vector>>>()?;
    let mut candidates = given.clone();
    candidates.extend(default_candidate_seeds(&l, random, seed));
    let r = nonprimality_witness_search(&l, &candidates);
    let verdict = if r.witness.is_some() {
        Verdict::Found
    } else {
        Verdict::Inconclusive
    };
    let mut report = Report::new("ideal", verdict, r.to_string()).with_seed(seed);
    if !given.is_empty() {
        let closure = ideal_closure(&l, &given);
        let basis: Vec<String> = closure.basis().iter().map(|v| l.format_vector(v)).collect();
        report = report
            .detail(format!("closure of the given seeds: dimension {}", closure.dim()))
            .cert("closure", Value::Array(basis.into_iter().map(Value::String).collect()));
    }
    if let Some((a, b, kind)) = &r.witness {
        let fmt = |i: &wronski::structconst::IdealSubspace| {
            Value::Array(i.basis().iter().map(|v| Value::String(l.format_vector(v))).collect())
        };
        let kind = match kind {
            WitnessKind::NotPrime => "not_prime",
            WitnessKind::NotSemiprime => "not_semiprime",
        };
        report = report.cert("a", fmt(a)).cert("b", fmt(b)).cert("kind", kind);
    }
    Ok(report
        .budget("seeds_tried", r.seeds_tried)
        .budget("distinct_ideals", r.distinct_ideals)
        .cert("metabelian", r.is_metabelian))
}

fn prime_report<E: fmt::Display>(
    r: &WitnessReport<u32, E>,
    label: &str,
    max_n: u32,
) -> Report {
    let (verdict, summary) = match (&r.witness, &r.stabilization) {
        (Some(n), _) => (Verdict::Found, format!("n = {n} gives a nonzero product")),
        (None, Some(s)) => (Verdict::Absent, format!("no n works: {s}")),
        (None, None) => (Verdict::Inconclusive, format!("no n ≤ {max_n} works")),
    };
    let mut report = Report::new("prime-witness", verdict, summary)
        .detail(label.to_string())
        .budget("max_n", max_n)
        .budget("candidates", r.budget_used);
    if let Some(n) = r.witness {
        report = report.cert("n", n);
    }
    if let Some(v) = &r.value {
        report = report.detail(format!("product {v}")).cert("value", text(v));
    }
    if let Some(s) = &r.stabilization {
        report = report.cert("stabilization", text(s));
    }
    report
}

fn prime_witness(
    a: &str,
    b: Option<&str>,
    ring: Ring,
    max_n: u32,
    semiprime: bool,
) -> CResult<Report> {
    let b = match (b, semiprime) {
        (Some(_), true) => return Err(CliError::Usage("--semiprime takes a single element".into())),
        (None, false) => return Err(CliError::Usage("two elements needed (or --semiprime)".into())),
        (Some(b), false) => b,
        (None, true) => a,
    };
    match ring {
        Ring::Qt => {
            let names: &[&[&str]] = &[&["t"]];
            let x = UniPoly::clone(&parsed("element", parse_tuple(a, names))?[0]);
            let y = UniPoly::clone(&parsed("element", parse_tuple(b, names))?[0]);
            let r = prime_character_search(&UniPolyRing::standard(), &x, &y, max_n)?;
            Ok(prime_report(&r, &format!("in Q[t]: a = {x}, b = {y}"), max_n))
        }
        Ring::Mixed => {
            let names: &[&[&str]] = &[&["a"], &["b"]];
            let x = ProductElement(parsed("element", parse_tuple(a, names))?);
            let y = ProductElement(parsed("element", parse_tuple(b, names))?);
            let alg = mixed_algebra();
            let r = prime_character_search(&alg, &x, &y, max_n)?;
            let named = |e: &ProductElement<UniPoly>| {
                format!(
                    "({}, {})",
                    e.0[0].to_string().replace('t', "a"),
                    e.0[1].to_string().replace('t', "b")
                )
            };
            let label = format!("in Q[a] x Q[b], a' = 0, b' = 1: x = {}, y = {}", named(&x), named(&y));
            Ok(prime_report(&r, &label, max_n))
        }
    }
}

fn nonvanishing(expr: &str, opts: &GlobalOpts) -> CResult<Report> {
    let p = parsed("differential polynomial", parse_diffpoly_expr(expr, opts.max_order))?;
    let budget = opts.degree.unwrap_or(DEFAULT_DEGREE_BUDGET);
    let r = nonvanishing_witness(&p, budget)?;
    let mut report = match (&r.witness, &r.value) {
        (Some(w), Some(v)) => {
            let shown: Vec<String> = w.iter().map(|(i, u)| format!("y{} = {u}", i + 1)).collect();
            let map: BTreeMap<String, Value> =
                w.iter().map(|(i, u)| (format!("y{}", i + 1), text(u))).collect();
            Report::new("nonvanishing", Verdict::Found, format!("{} gives {v}", shown.join(", ")))
                .cert("witness", json!(map))
                .cert("value", text(v))
        }
        _ => Report::new(
            "nonvanishing",
            Verdict::Inconclusive,
            format!("no monomial witness with degrees at most {budget}"),
        ),
    };
    report = report.budget("degree", budget).budget("candidates", r.budget_used);
    Ok(report)
}

fn taylor(expr: &str, point: Option<&str>, opts: &GlobalOpts) -> CResult<Report> {
    let p = parsed("differential polynomial", parse_diffpoly_expr(expr, opts.max_order))?;
    let n = opts.truncation.unwrap_or(DEFAULT_TAYLOR_ORDER);
    let phi = match point {
        Some(text) => parsed("point", parse_point(text))?,
        None if p.is_zero() => PointEvaluation::default(),
        None => find_point(&p)?,
    };
    let s = taylor_map(&p, &phi, n);
    Ok(Report::new("taylor", Verdict::Computed, format!("{s}"))
        .detail(format!("point {phi}"))
        .detail(format!("value at the point {}", phi.evaluate(&p)))
        .cert("point", point_json(&phi))
        .cert("series", text_list(s.coeffs()))
        .budget("truncation", n))
}

fn localize(opts: &GlobalOpts) -> CResult<Report> {
    let g = opts.degree.unwrap_or(DEFAULT_LOCALIZATION_GRID);
    let r = verify_localization_grid(g, g)?;
    let failing: Vec<Value> = r
        .checks
        .iter()
        .filter(|c| !(c.equal && c.residual_matches))
        .map(|c| json!({ "m": c.m, "k": c.k, "bracket": text(&c.bracket), "formula": text(&c.formula) }))
        .collect();
    let mut report = Report::new(
        "localize-verify",
        Verdict::from_bool(r.all_equal()),
        format!(
            "bracket formula checked at {} pairs (m, k) with m, k ≤ {g}; model action {}",
            r.checks.len(),
            if r.model_action.holds { "holds" } else { "fails" }
        ),
    );
    for c in r.checks.iter().filter(|c| c.m <= 1 && c.k <= 1) {
        report = report.detail(format!("m = {}, k = {}: {}", c.m, c.k, c.bracket));
    }
    Ok(report
        .cert("model_action", r.model_action.holds)
        .cert("failing", Value::Array(failing))
        .budget("grid", g))
}

fn embed_sl2() -> Report {
    let emb = sl2_vector_fields_embedding();
    let names = emb.algebra.basis_names();
    let mut report = Report::new(
        "embed-sl2",
        Verdict::from_bool(emb.all_hold()),
        "sl2 into Diff Q[t] by coefficients of vector fields",
    );
    for (name, image) in names.iter().zip(&emb.images) {
        report = report.detail(format!("{name} -> ({image})∂"));
    }
    let mut relations = Vec::new();
    for r in &emb.relations {
        report = report.detail(format!(
            "[{}, {}]: {} vs {} {}",
            names[r.i],
            names[r.j],
            r.lhs,
            r.rhs,
            if r.holds { "ok" } else { "MISMATCH" }
        ));
        relations.push(json!({
            "i": names[r.i], "j": names[r.j],
            "bracket": text(&r.lhs), "image": text(&r.rhs), "holds": r.holds,
        }));
    }
    report
        .cert("images", text_list(&emb.images))
        .cert("relations", Value::Array(relations))
}

fn show_algebra(opts: &GlobalOpts) -> CResult<Report> {
    let l = require_algebra(opts)?;
    let desc = serde_json::to_value(l.to_description()).expect("descriptions serialize");
    Ok(Report::new("show-algebra", Verdict::Computed, l.to_json())
        .cert("algebra", desc)
        .detail(format!("dimension {}, abelian: {}", l.dim(), l.is_abelian())))
}
