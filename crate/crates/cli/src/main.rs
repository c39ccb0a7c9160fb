//! `nchess`: command-line access to derivatives, middle matrices,
//! signatures, classification, identity checks and positivity tests.

use std::io::{Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use nchess_checks::Config;
use nchess_core::classify::{classify_one_negative, synthesize, ClassificationReport};
use nchess_core::identities::{verify_all, verify_identity, Identity};
use nchess_core::inertia::{exact_inertia, min_signature_hessian, sds_from_hessian};
use nchess_core::kronops::geometric_sum;
use nchess_core::midmat::MiddleMatrix;
use nchess_core::ncderiv::kth_derivative;
use nchess_core::ncparse::{parse, print};
use nchess_core::positivity::{chsy_codim, monomials_independent, relaxed_positivity, PositivityVerdict};
use nchess_core::sample::Sampler;
use nchess_core::{NcError, QPoly, QTuple, Rational};

mod json;

#[derive(Parser)]
#[command(name = "nchess", version, about = "Hessians of symmetric polynomials in noncommuting variables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Args)]
struct PolyArg {
    /// Polynomial such as "x1^2 x2 + x2 x1^2", or "-" for standard input.
    poly: String,
    /// Number of variables; defaults to the highest index used.
    #[arg(short = 'g', long = "vars")]
    g: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical form.
    Parse(PolyArg),
    /// k-th directional derivative p^(k)(x)[h].
    Diff {
        #[command(flatten)]
        p: PolyArg,
        #[arg(short = 'k', long, default_value_t = 1)]
        order: usize,
    },
    /// The Hessian p''(x)[h].
    Hessian(PolyArg),
    /// The middle matrix Z(x) and its scalar part.
    Middle(PolyArg),
    /// Minimal numbers of positive and negative squares of the Hessian.
    Signature(PolyArg),
    /// Structure of a polynomial whose Hessian has at most one negative square.
    Classify(PolyArg),
    /// p0 + p1 + p2 + φq + qᵀφ + φ f0 φ with φ = [x]u.
    Synthesize(SynthArgs),
    /// Exact symbolic verification of the matrix identities.
    Identities(IdentityArgs),
    /// Codimension of the border image at a random generic point.
    Chsy(ChsyArgs),
    /// Relaxed Hessian positivity at random matrix points.
    Positivity(PositivityArgs),
    /// Run acceptance criteria 1–11.
    CheckAll(CheckArgs),
}

#[derive(Args)]
struct SynthArgs {
    #[arg(short = 'g', long = "vars")]
    g: usize,
    /// Comma-separated entries of u, e.g. "1,0".
    #[arg(long)]
    u: String,
    #[arg(long, default_value = "0")]
    p0: String,
    #[arg(long, default_value = "0")]
    p1: String,
    #[arg(long, default_value = "0")]
    p2: String,
    #[arg(long, default_value = "0")]
    q: String,
    #[arg(long, default_value = "0")]
    f0: String,
}

#[derive(Args)]
struct IdentityArgs {
    /// Run every identity.
    #[arg(long)]
    all: bool,
    /// Run one identity by name.
    #[arg(long)]
    name: Option<String>,
    /// Variable counts to check.
    #[arg(short = 'g', long = "vars", value_delimiter = ',', default_values_t = vec![2usize, 3])]
    g: Vec<usize>,
}

#[derive(Args)]
struct ChsyArgs {
    #[arg(short = 'g', long = "vars", default_value_t = 1)]
    g: usize,
    #[arg(long, default_value_t = 1)]
    r: usize,
    /// Defaults to r.
    #[arg(long)]
    k: Option<usize>,
    /// Matrix size; defaults to the minimum for independence plus two.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct PositivityArgs {
    #[command(flatten)]
    p: PolyArg,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exact rational such as "1/100".
    #[arg(long, default_value = "1/100")]
    delta: String,
    #[arg(long = "lambda-max", default_value_t = 1e6)]
    lambda_max: f64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Use X = 0 instead of random points.
    #[arg(long = "at-zero")]
    at_zero: bool,
}

#[derive(Args)]
struct CheckArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run only these criteria.
    #[arg(long, value_delimiter = ',')]
    only: Vec<u8>,
}

enum Failure {
    Domain(String),
    Internal(String),
}

impl From<NcError> for Failure {
    fn from(e: NcError) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

struct Output {
    command: &'static str,
    inputs: Value,
    result: Map<String, Value>,
    text: Vec<String>,
    /// Set when a verified statement came out false.
    contradiction: bool,
}

impl Output {
    fn new(command: &'static str, inputs: Value) -> Self {
        Output { command, inputs, result: Map::new(), text: Vec::new(), contradiction: false }
    }

    fn put(&mut self, key: &str, v: Value) {
        self.result.insert(key.to_string(), v);
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }
}

fn read_poly(arg: &PolyArg) -> Result<(QPoly, usize, String), Failure> {
    let text = if arg.poly == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Domain(format!("reading stdin: {e}")))?;
        s.trim().to_string()
    } else {
        arg.poly.clone()
    };
    let g = arg.g.unwrap_or_else(|| highest_index(&text).max(1));
    Ok((parse(&text, g)?, g, text))
}

fn highest_index(text: &str) -> usize {
    let chars: Vec<char> = text.chars().collect();
    let mut best = 0;
    for (i, c) in chars.iter().enumerate() {
        if matches!(c, 'x' | 'h') {
            let digits: String = chars[i + 1..].iter().take_while(|d| d.is_ascii_digit()).collect();
            best = best.max(digits.parse().unwrap_or(0));
        }
    }
    best
}

fn rational_arg(s: &str) -> Result<Rational, Failure> {
    s.trim().parse::<Rational>().map_err(|_| Failure::Domain(format!("not a rational number: {s}")))
}

fn cmd_parse(arg: &PolyArg) -> Result<Output, Failure> {
    let (p, g, text) = read_poly(arg)?;
    let mut out = Output::new("parse", json!({ "poly": text, "g": g }));
    out.put("poly", json::poly(&p));
    out.put("degree", json!(p.degree()));
    out.put("symmetric", json!(p.is_symmetric()));
    out.put("terms", json!(p.num_terms()));
    out.line(print(&p));
    Ok(out)
}

fn cmd_diff(arg: &PolyArg, order: usize) -> Result<Output, Failure> {
    let (p, g, text) = read_poly(arg)?;
    let d = kth_derivative(&p, order)?;
    let mut out = Output::new("diff", json!({ "poly": text, "g": g, "order": order }));
    out.put("derivative", json::poly(&d));
    out.line(print(&d));
    Ok(out)
}

fn cmd_hessian(arg: &PolyArg) -> Result<Output, Failure> {
    let (p, g, text) = read_poly(arg)?;
    let h = kth_derivative(&p, 2)?;
    let mut out = Output::new("hessian", json!({ "poly": text, "g": g }));
    out.put("hessian", json::poly(&h));
    out.line(print(&h));
    Ok(out)
}

fn cmd_middle(arg: &PolyArg) -> Result<Output, Failure> {
    let (p, g, text) = read_poly(arg)?;
    let mm = MiddleMatrix::build(&p)?;
    let scalar = mm.scalar();
    let (inertia, _) = exact_inertia(&scalar)?;
    let mut out = Output::new("middle", json!({ "poly": text, "g": g }));
    out.put("size", json!(mm.size()));
    out.put("scalar", json::matrix(&scalar));
    out.put("middle", json::poly_matrix(mm.full()));
    out.put("inertia", json::inertia(&inertia));
    out.line(format!("Z(x), {} x {}:", mm.size(), mm.size()));
    for r in 0..mm.size() {
        let row: Vec<String> = mm.full().row_slice(r).iter().map(print).collect();
        out.line(format!("  [{}]", row.join(", ")));
    }
    out.line("scalar middle matrix:");
    out.text.extend(json::matrix_text(&scalar));
    out.line(format!("inertia: +{} -{} 0:{}", inertia.plus, inertia.minus, inertia.zero));
    Ok(out)
}

fn cmd_signature(arg: &PolyArg) -> Result<Output, Failure> {
    let (p, g, text) = read_poly(arg)?;
    let sig = min_signature_hessian(&p)?;
    let mut out = Output::new("signature", json!({ "poly": text, "g": g }));
    out.put("plus", json!(sig.plus));
    out.put("minus", json!(sig.minus));
    out.put("low_degree", json!(sig.low_degree));
    out.line(format!("σ₊ = {}, σ₋ = {}", sig.plus, sig.minus));
    if !sig.low_degree {
        let sds = sds_from_hessian(&p)?;
        let squares = |v: &[nchess_core::inertia::WeightedSquare<Rational>]| {
            Value::Array(v.iter().map(|s| json!({ "weight": json::rational(&s.weight), "poly": json::poly(&s.poly) })).collect())
        };
        out.put("positive_squares", squares(&sds.plus));
        out.put("negative_squares", squares(&sds.minus));
        for (sign, list) in [("+", &sds.plus), ("-", &sds.minus)] {
            for s in list {
                out.line(format!("  {sign} {} · ({})ᵀ({})", s.weight, print(&s.poly), print(&s.poly)));
            }
        }
    } else {
        out.line("degree below two: the Hessian is zero");
    }
    Ok(out)
}

fn classification_json(r: &ClassificationReport) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(r.verdict.name()));
    m.insert("case".into(), json!(r.case.map(|c| c.number())));
    m.insert("degree".into(), json!(r.degree));
    let (plus, minus) = r.signature();
    m.insert("signature".into(), json!([plus, minus]));
    if let Some(i) = &r.reduced_inertia {
        m.insert("reduced_inertia".into(), json::inertia(i));
    }
    if let Some(d) = &r.data {
        m.insert(
            "data".into(),
            json!({
                "u": json::vector(&d.direction),
                "u_norm_sq": json::rational(&d.direction_norm_sq),
                "y": json::vector(&d.cubic_coeff),
                "v": json::vector(&d.mixed_coeff),
                "A": json::matrix(&d.quartic_matrix),
                "p0": json::rational(&d.constant),
                "p1": json::poly(&d.linear),
                "p2": json::poly(&d.quadratic),
                "q": json::poly(&d.cofactor),
                "f0": json::poly(&d.quartic_factor),
                "phi": json::poly(&d.direction_form),
                "f1": d.cubic_factor.as_ref().map(json::poly),
                "E1": json::matrix(&d.middle_certificate),
                "E1_inertia": json::inertia(&d.middle_certificate_inertia),
                "E2": json::matrix(&d.form_certificate),
                "E2_inertia": json::inertia(&d.form_certificate_inertia),
            }),
        );
    }
    m
}

fn cmd_classify(arg: &PolyArg) -> Result<Output, Failure> {
    let (p, g, text) = read_poly(arg)?;
    let r = classify_one_negative(&p)?;
    let mut out = Output::new("classify", json!({ "poly": text, "g": g }));
    out.result = classification_json(&r);
    let (plus, minus) = r.signature();
    out.line(format!("verdict: {} (σ₊ = {plus}, σ₋ = {minus})", r.verdict.name()));
    if let Some(c) = r.case {
        out.line(format!("case: {}", c.number()));
    }
    if let Some(d) = &r.data {
        let vec = |v: &[Rational]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
        out.line(format!("u = ({}), uᵀu = {}", vec(&d.direction), d.direction_norm_sq));
        out.line(format!("y = ({})", vec(&d.cubic_coeff)));
        out.line(format!("v = ({})", vec(&d.mixed_coeff)));
        out.line("A =");
        out.text.extend(json::matrix_text(&d.quartic_matrix));
        out.line(format!("p0 = {}", d.constant));
        out.line(format!("p1 = {}", print(&d.linear)));
        out.line(format!("p2 = {}", print(&d.quadratic)));
        out.line(format!("φ  = {}", print(&d.direction_form)));
        out.line(format!("q  = {}", print(&d.cofactor)));
        out.line(format!("f0 = {}", print(&d.quartic_factor)));
        if let Some(f1) = &d.cubic_factor {
            out.line(format!("f1 = {}", print(f1)));
        }
        let i = d.middle_certificate_inertia;
        out.line(format!("E1 inertia: +{} -{} 0:{}", i.plus, i.minus, i.zero));
    }
    Ok(out)
}

fn cmd_synthesize(a: &SynthArgs) -> Result<Output, Failure> {
    let u = a.u.split(',').map(rational_arg).collect::<Result<Vec<_>, _>>()?;
    if u.len() != a.g {
        return Err(Failure::Domain(format!("u has {} entries but g = {}", u.len(), a.g)));
    }
    let p0 = rational_arg(&a.p0)?;
    let poly = |s: &str| parse(s, a.g).map_err(Failure::from);
    let p = synthesize(&p0, &poly(&a.p1)?, &poly(&a.p2)?, &u, &poly(&a.q)?, &poly(&a.f0)?)?;
    let mut out = Output::new(
        "synthesize",
        json!({ "g": a.g, "u": a.u, "p0": a.p0, "p1": a.p1, "p2": a.p2, "q": a.q, "f0": a.f0 }),
    );
    out.put("poly", json::poly(&p));
    out.line(print(&p));
    Ok(out)
}

fn cmd_identities(a: &IdentityArgs) -> Result<Output, Failure> {
    let mut out = Output::new("identities", json!({ "all": a.all, "name": a.name, "g": a.g }));
    let reports = match (&a.name, a.all) {
        (Some(name), _) => {
            let id = Identity::from_name(name).ok_or_else(|| Failure::Domain(format!("unknown identity {name}")))?;
            a.g.iter().map(|&g| verify_identity(id, g)).collect::<Result<Vec<_>, _>>()?
        }
        (None, true) => verify_all(&a.g)?,
        (None, false) => {
            let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
            out.put("names", json!(names));
            out.text.extend(names.iter().map(|n| n.to_string()));
            return Ok(out);
        }
    };
    let failed = reports.iter().filter(|r| r.failed()).count();
    out.contradiction = failed > 0;
    out.put(
        "reports",
        Value::Array(reports.iter().map(|r| json!({ "name": r.name, "passed": r.passed(), "detail": r.detail })).collect()),
    );
    out.put("failed", json!(failed));
    out.text.extend(reports.iter().map(|r| r.to_string()));
    out.line(format!("{} checked, {failed} failed", reports.len()));
    Ok(out)
}

fn cmd_chsy(a: &ChsyArgs) -> Result<Output, Failure> {
    let k = a.k.unwrap_or(a.r);
    let n = a.n.unwrap_or(geometric_sum(a.g, a.r) + 2);
    let mut s = Sampler::new(a.seed);
    let (xs, v) = match s.generic_point(a.g, n, a.r) {
        Ok(pt) => pt,
        Err(_) => (s.tuple(a.g, n), s.nonzero_vector(n)),
    };
    let rep = chsy_codim(&xs, &v, k, a.r)?;
    let mut out = Output::new("chsy", json!({ "g": a.g, "n": n, "r": a.r, "k": k, "seed": a.seed }));
    out.contradiction = !rep.holds();
    out.put("independent", json!(rep.independent));
    out.put("rank", json!(rep.rank));
    out.put("codim", json!(rep.codim));
    out.put("bound", json!(rep.bound));
    out.put("holds", json!(rep.holds()));
    out.line(rep.to_check().to_string());
    Ok(out)
}

fn cmd_positivity(a: &PositivityArgs) -> Result<Output, Failure> {
    let (p, g, text) = read_poly(&a.p)?;
    let delta = rational_arg(&a.delta)?;
    let d = p.degree().unwrap_or(0);
    let r = d.saturating_sub(1);
    let mut s = Sampler::new(a.seed);
    let mut out = Output::new(
        "positivity",
        json!({ "poly": text, "g": g, "n": a.n, "trials": a.trials, "seed": a.seed, "delta": a.delta,
                "lambda_max": a.lambda_max, "tol": a.tol, "at_zero": a.at_zero }),
    );
    let mut rows = Vec::new();
    for trial in 0..a.trials.max(1) {
        let (xs, v): (QTuple, Vec<Rational>) = if a.at_zero {
            (QTuple::zeros(g, a.n), s.nonzero_vector(a.n))
        } else if a.n >= geometric_sum(g, r) {
            s.generic_point(g, a.n, r)?
        } else {
            (s.tuple(g, a.n), s.nonzero_vector(a.n))
        };
        let independent = monomials_independent(&xs, &v, r);
        let verdict = relaxed_positivity(&p, &xs, &v, &delta, a.lambda_max, a.tol)?;
        let mut row = json!({ "trial": trial, "independent": independent, "verdict": verdict.label() });
        let detail = match &verdict {
            PositivityVerdict::Positive { lambda, min_eigenvalue } => {
                row["lambda"] = json!(lambda);
                row["min_eigenvalue"] = json!(min_eigenvalue);
                format!("λ = {lambda}, smallest eigenvalue {min_eigenvalue:.3e}")
            }
            PositivityVerdict::Negative { witness, value, .. } => {
                row["value"] = json::rational(value);
                row["witness"] = Value::Array(witness.matrices().iter().map(json::matrix).collect());
                format!("witness value ≈ {:.6e}", nchess_core::Scalar::to_f64_lossy(value))
            }
            PositivityVerdict::Indeterminate { reason } => {
                row["reason"] = json!(reason);
                reason.clone()
            }
        };
        row["X"] = Value::Array(xs.matrices().iter().map(json::matrix).collect());
        row["v"] = json::vector(&v);
        out.line(format!("trial {trial}: {} ({detail})", verdict.label()));
        rows.push(row);
    }
    out.put("trials", Value::Array(rows));
    Ok(out)
}

fn cmd_check_all(a: &CheckArgs) -> Result<Output, Failure> {
    let cfg = Config { seed: a.seed };
    let numbers: Vec<u8> = if a.only.is_empty() { (1..=11).collect() } else { a.only.clone() };
    let mut out = Output::new("check-all", json!({ "seed": a.seed, "only": a.only }));
    let mut rows = Vec::new();
    for n in numbers {
        let r = nchess_checks::run(n, &cfg).ok_or_else(|| Failure::Domain(format!("no criterion {n}")))?;
        out.contradiction |= !r.passed;
        out.line(r.to_string());
        rows.push(serde_json::to_value(&r).map_err(|e| Failure::Internal(e.to_string()))?);
    }
    let passed = rows.iter().filter(|r| r["passed"] == json!(true)).count();
    out.line(format!("{passed}/{} criteria passed", rows.len()));
    out.put("passed", json!(passed));
    out.put("criteria", Value::Array(rows));
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Parse(p) => cmd_parse(p),
        Command::Diff { p, order } => cmd_diff(p, *order),
        Command::Hessian(p) => cmd_hessian(p),
        Command::Middle(p) => cmd_middle(p),
        Command::Signature(p) => cmd_signature(p),
        Command::Classify(p) => cmd_classify(p),
        Command::Synthesize(a) => cmd_synthesize(a),
        Command::Identities(a) => cmd_identities(a),
        Command::Chsy(a) => cmd_chsy(a),
        Command::Positivity(a) => cmd_positivity(a),
        Command::CheckAll(a) => cmd_check_all(a),
    };
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            if cli.json {
                let report = json!({
                    "schema": 1,
                    "command": out.command,
                    "inputs": out.inputs,
                    "result": Value::Object(out.result),
                    "timings": { "seconds": start.elapsed().as_secs_f64() },
                });
                let _ = writeln!(stdout, "{}", serde_json::to_string_pretty(&report).expect("JSON values serialize"));
            } else {
                for l in &out.text {
                    if writeln!(stdout, "{l}").is_err() {
                        break;
                    }
                }
            }
            if out.contradiction {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal consistency failure: {msg}");
            ExitCode::from(3)
        }
    }
}
