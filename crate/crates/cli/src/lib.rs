//! Argument parsing, command execution and report rendering for the
//! `codepair` binary. `main.rs` only maps outcomes to exit codes.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use codepair::check::{all_hold, Clause};
use codepair::conju::{acc_intersection, acp_check, conjucyclic_shift, odot_a, psi_map, ConjuCode};
use codepair::constacyclic::{
    intersect_cross_lambda, intersect_same_lambda, is_constacyclic, pair_verdicts, ConstaCode,
};
use codepair::factor::{factor_xn_minus_lambda, is_irreducible, DEFAULT_SEED};
use codepair::field::prime_power;
use codepair::linalg::Matrix;
use codepair::oracle::{
    brute_alternating_dual, brute_intersection_dim, brute_subfield_subcode, brute_trace,
    closed_under_conjucyclic_shift, closed_under_constacyclic_shift, enumerate_additive, enumerate_consta,
    enumerate_conju, enumerate_cyclic,
};
use codepair::suite::{run_suite, SuiteOptions};
use codepair::sweep::sweep_pairs;
use codepair::text::{parse_element, parse_matrix, parse_poly, parse_vector};
use codepair::trace::{largest_subfield_subcode, trace_code, trace_dim_identity, trace_inside_code, trace_pair_ell};
use codepair::{Error, Field, Poly, Result, Tower};

#[derive(Parser, Debug)]
#[command(name = "codepair", version, about = "Constacyclic and conjucyclic code pairs over small finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Show elements and polynomials symbolically (w, x) instead of integer encodings.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Seed for randomized factorization.
    #[arg(long, global = true, env = "CODEPAIR_SEED")]
    pub seed: Option<u64>,
    /// Cross-check results against brute-force enumeration.
    #[arg(long, global = true)]
    pub verify: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe GF(q): modulus, primitive element, element table.
    Field(FieldArgs),
    /// Factor x^n - lambda into monic irreducibles.
    Factor(FactorArgs),
    /// Constacyclic codes.
    Consta {
        #[command(subcommand)]
        op: ConstaOp,
    },
    /// Additive conjucyclic codes over GF(q^2).
    Conju {
        #[command(subcommand)]
        op: ConjuOp,
    },
    /// Regression runs.
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
    /// Check every divisor pair of x^n - lambda1 and x^n - lambda2.
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
pub struct FieldArgs {
    #[arg(long)]
    pub q: u32,
    /// Defining polynomial over GF(p), ascending coefficients.
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Args, Debug)]
pub struct FactorArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum ConstaOp {
    /// Build <g> in F[x]/(x^n - lambda).
    Build(ConstaArgs),
    /// Dual code.
    Dual(ConstaArgs),
    /// Intersection of two codes (same or different lambda).
    Intersect(ConstaArgs),
    /// Intersection, sum, dual and LCD verdicts for a pair.
    Verdicts(ConstaArgs),
}

#[derive(Args, Debug)]
pub struct ConstaArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    /// One value for all codes, or one per code.
    #[arg(long, required = true, allow_hyphen_values = true)]
    pub lambda: Vec<String>,
    /// Generator polynomial; repeat for a pair.
    #[arg(long, required = true)]
    pub g: Vec<String>,
    #[arg(long)]
    pub modulus: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum ConjuOp {
    /// Code generated by the conjucyclic shifts of a vector.
    Build(ConjuArgs),
    /// Code given as the alternating dual of the rows of a parity-check matrix.
    FromParity(ConjuArgs),
    /// Intersection dimension and the ⊙ₐ rank formula.
    Intersect(ConjuArgs),
    /// Whether C1 + C2 is the whole space, with the implied identities.
    Acp(ConjuArgs),
    /// Trace code and the dimension identity.
    Trace(ConjuArgs),
    /// Largest subfield subcode, by formula and directly.
    Subcode(ConjuArgs),
    /// Intersection of trace codes against its formula.
    TraceEll(ConjuArgs),
}

/// Codes are taken from every `--gen` first, then every `--h`.
#[derive(Args, Debug)]
pub struct ConjuArgs {
    #[arg(long)]
    pub q2: u32,
    #[arg(long)]
    pub n: Option<usize>,
    /// Generator vector, comma separated.
    #[arg(long)]
    pub gen: Vec<String>,
    /// Parity-check matrix, rows separated by ';'.
    #[arg(long)]
    pub h: Vec<String>,
    #[arg(long)]
    pub modulus: Option<String>,
    /// Element alpha used by Ψ and the alternating form.
    #[arg(long)]
    pub alpha: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyOp {
    /// Run the built-in worked examples.
    Paper {
        /// Run only cases whose family ("consta", "conju") or name matches.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long)]
    pub q: u32,
    #[arg(long)]
    pub n: usize,
    #[arg(long, required = true, allow_hyphen_values = true)]
    pub lambda: Vec<String>,
    #[arg(long)]
    pub modulus: Option<String>,
    /// Write one CSV row per pair to this path.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    /// Canonical arguments that reproduce this report.
    pub argv: Vec<String>,
    pub inputs: BTreeMap<String, Value>,
    pub results: Value,
    /// Informational yes/no answers (lcp, lcd, ...).
    pub verdicts: BTreeMap<String, bool>,
    /// Statements that must hold; any false one makes the run fail.
    pub assertions: BTreeMap<String, bool>,
    pub clauses: Vec<Clause>,
    pub warnings: Vec<String>,
    pub elapsed_ms: f64,
}

impl Report {
    fn new(command: &str) -> Report {
        Report {
            command: command.into(),
            argv: Vec::new(),
            inputs: BTreeMap::new(),
            results: Value::Null,
            verdicts: BTreeMap::new(),
            assertions: BTreeMap::new(),
            clauses: Vec::new(),
            warnings: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    pub fn passed(&self) -> bool {
        self.assertions.values().all(|&v| v) && all_hold(&self.clauses)
    }

    pub fn without_timing(&self) -> Report {
        Report { elapsed_ms: 0.0, ..self.clone() }
    }

    fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.into(), value.into());
    }

    fn arg(&mut self, flag: &str, value: impl ToString) {
        self.argv.push(flag.into());
        self.argv.push(value.to_string());
    }

    fn assert(&mut self, name: &str, holds: bool) {
        self.assertions.insert(name.into(), holds);
    }
}

struct Fmt {
    pretty: bool,
}

impl Fmt {
    fn elem(&self, f: &Field, a: u32) -> Value {
        if self.pretty {
            Value::String(f.pretty(a))
        } else {
            json!(a)
        }
    }

    fn vector(&self, f: &Field, v: &[u32]) -> Value {
        Value::Array(v.iter().map(|&a| self.elem(f, a)).collect())
    }

    fn matrix(&self, m: &Matrix) -> Value {
        Value::Array((0..m.rows()).map(|r| self.vector(m.field(), m.row(r))).collect())
    }

    fn poly(&self, p: &Poly) -> Value {
        Value::String(if self.pretty { p.to_pretty() } else { p.to_canonical() })
    }
}

/// Parses and executes a command line (without the program name).
pub fn run_args<I, S>(args: I) -> std::result::Result<Report, String>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = std::iter::once("codepair".to_string()).chain(args.into_iter().map(Into::into)).collect();
    let cli = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
    execute(&cli).map_err(|e| e.to_string())
}

pub fn execute(cli: &Cli) -> Result<Report> {
    let start = Instant::now();
    let fmt = Fmt { pretty: cli.pretty };
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    let mut report = match &cli.command {
        Command::Field(a) => cmd_field(a, &fmt)?,
        Command::Factor(a) => cmd_factor(a, &fmt, seed)?,
        Command::Consta { op } => cmd_consta(op, &fmt, cli.verify)?,
        Command::Conju { op } => cmd_conju(op, &fmt, cli.verify)?,
        Command::Verify { op: VerifyOp::Paper { only } } => cmd_verify(only.as_deref()),
        Command::Sweep(a) => cmd_sweep(a, seed, cli.verify)?,
    };
    if cli.pretty {
        report.argv.push("--pretty".into());
    }
    if cli.verify {
        report.argv.push("--verify".into());
    }
    if cli.seed.is_some() {
        report.arg("--seed", seed);
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

fn make_field(q: u32, modulus: Option<&str>) -> Result<Field> {
    let (p, m) = prime_power(q).ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
    match modulus {
        None => Field::of_order(q),
        Some(s) => {
            let prime = Field::of_order(p)?;
            Field::new(p, m, parse_poly(&prime, s)?.coeffs().to_vec())
        }
    }
}

fn field_args(report: &mut Report, flag: &str, q: u32, f: &Field, modulus: Option<&str>) {
    report.arg(flag, q);
    report.input(&flag[2..], q);
    if modulus.is_some() {
        let m = Poly::new(&Field::of_order(f.characteristic()).expect("prime field"), f.modulus().to_vec());
        report.arg("--modulus", m.to_canonical());
        report.input("modulus", m.to_canonical());
    }
}

fn cmd_field(a: &FieldArgs, fmt: &Fmt) -> Result<Report> {
    let f = make_field(a.q, a.modulus.as_deref())?;
    let mut r = Report::new("field");
    r.argv.push("field".into());
    field_args(&mut r, "--q", a.q, &f, a.modulus.as_deref());
    let prim = f.primitive_element().code();
    let elements: Vec<Value> = if f.order() <= 256 {
        f.elements()
            .map(|e| {
                let mut v = json!({
                    "code": e,
                    "name": f.pretty(e),
                    "order": f.multiplicative_order(e),
                });
                if f.is_quadratic_extension() {
                    v["conjugate"] = fmt.elem(&f, f.conjugate(e).expect("quadratic"));
                }
                v
            })
            .collect()
    } else {
        Vec::new()
    };
    r.results = json!({
        "order": f.order(),
        "characteristic": f.characteristic(),
        "degree": f.degree(),
        "modulus": f.modulus().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
        "primitive_element": fmt.elem(&f, prim),
        "elements": elements,
    });
    r.assert("primitive-element-has-full-order", f.multiplicative_order(prim) == Some(f.order() as u64 - 1));
    Ok(r)
}

fn cmd_factor(a: &FactorArgs, fmt: &Fmt, seed: u64) -> Result<Report> {
    let f = make_field(a.q, a.modulus.as_deref())?;
    let lambda = parse_element(&f, &a.lambda)?;
    let mut r = Report::new("factor");
    r.argv.push("factor".into());
    field_args(&mut r, "--q", a.q, &f, a.modulus.as_deref());
    r.arg("--n", a.n);
    r.arg("--lambda", lambda);
    r.input("n", a.n);
    r.input("lambda", lambda);
    let fac = factor_xn_minus_lambda(&f, a.n, lambda, seed)?;
    let factors: Vec<Value> = fac
        .factors
        .iter()
        .map(|(p, e)| json!({"factor": fmt.poly(p), "degree": p.deg(), "multiplicity": e}))
        .collect();
    r.results = json!({"factors": factors, "divisor_count": fac.divisor_count()});
    r.assert("product-is-x^n-lambda", fac.product(&f) == Poly::x_n_minus(&f, a.n, lambda));
    r.assert("factors-monic-irreducible", fac.factors.iter().all(|(p, _)| p.is_monic() && is_irreducible(p)));
    Ok(r)
}

fn consta_codes(a: &ConstaArgs, r: &mut Report, count: usize) -> Result<(Field, Vec<ConstaCode>)> {
    let f = make_field(a.q, a.modulus.as_deref())?;
    field_args(r, "--q", a.q, &f, a.modulus.as_deref());
    r.arg("--n", a.n);
    r.input("n", a.n);
    if a.g.len() != count {
        return Err(Error::DimensionMismatch(format!("expected {count} --g values, got {}", a.g.len())));
    }
    if a.lambda.len() != 1 && a.lambda.len() != count {
        return Err(Error::DimensionMismatch(format!("expected 1 or {count} --lambda values, got {}", a.lambda.len())));
    }
    let lambdas = a.lambda.iter().map(|s| parse_element(&f, s)).collect::<Result<Vec<_>>>()?;
    let mut codes = Vec::new();
    for (i, g) in a.g.iter().enumerate() {
        let lambda = lambdas[i.min(lambdas.len() - 1)];
        let code = ConstaCode::build(&f, a.n, lambda, &parse_poly(&f, g)?)?;
        codes.push(code);
    }
    for &l in &lambdas {
        r.arg("--lambda", l);
    }
    r.input("lambda", lambdas.clone());
    for c in &codes {
        r.arg("--g", c.generator().to_canonical());
    }
    r.input("g", codes.iter().map(|c| c.generator().to_canonical()).collect::<Vec<_>>());
    Ok((f, codes))
}

fn consta_summary(fmt: &Fmt, c: &ConstaCode) -> Value {
    json!({
        "lambda": fmt.elem(c.field(), c.lambda()),
        "k": c.k(),
        "generator": fmt.poly(c.generator()),
        "parity": fmt.poly(c.parity()),
    })
}

fn cmd_consta(op: &ConstaOp, fmt: &Fmt, verify: bool) -> Result<Report> {
    let (name, args, count) = match op {
        ConstaOp::Build(a) => ("build", a, 1),
        ConstaOp::Dual(a) => ("dual", a, 1),
        ConstaOp::Intersect(a) => ("intersect", a, 2),
        ConstaOp::Verdicts(a) => ("verdicts", a, 2),
    };
    let mut r = Report::new(&format!("consta {name}"));
    r.argv.extend(["consta".to_string(), name.to_string()]);
    let (f, codes) = consta_codes(args, &mut r, count)?;
    let q = f.order();
    match op {
        ConstaOp::Build(_) => {
            let c = &codes[0];
            let mut v = consta_summary(fmt, c);
            v["generator_matrix"] = fmt.matrix(&c.generator_matrix());
            r.results = v;
            r.assert("g-times-h-is-x^n-lambda", c.generator() * c.parity() == Poly::x_n_minus(&f, c.n(), c.lambda()));
            r.assert("rows-closed-under-shift", is_constacyclic(&c.row_space(), c.lambda()));
            if verify {
                let w = enumerate_consta(c)?;
                r.assert("oracle-word-count", Some(c.k()) == w.dim_over(q));
                r.assert("oracle-closed-under-shift", closed_under_constacyclic_shift(&w, c.lambda()));
            }
        }
        ConstaOp::Dual(_) => {
            let c = &codes[0];
            let d = c.dual();
            r.results = json!({"code": consta_summary(fmt, c), "dual": consta_summary(fmt, &d)});
            let prod = c.generator_matrix().mul(&d.generator_matrix().transpose())?;
            r.assert("rows-orthogonal", prod.is_zero());
            r.assert("dimensions-add-to-n", c.k() + d.k() == c.n());
            r.assert("dual-of-dual", &d.dual() == c);
            if verify {
                let (w, u) = (enumerate_consta(c)?, enumerate_consta(&d)?);
                let orth = w.words().iter().all(|a| {
                    u.words().iter().all(|b| a.iter().zip(b).fold(0, |s, (&x, &y)| f.add(s, f.mul(x, y))) == 0)
                });
                r.assert("oracle-orthogonal", orth);
                r.assert("oracle-dual-size", u.dim_over(q) == Some(c.n() - c.k()));
            }
        }
        ConstaOp::Intersect(_) => {
            let (c1, c2) = (&codes[0], &codes[1]);
            let ell;
            if c1.lambda() == c2.lambda() {
                let i = intersect_same_lambda(c1, c2)?;
                ell = i.k();
                r.results = json!({"ell": ell, "intersection": consta_summary(fmt, &i)});
            } else {
                let x = intersect_cross_lambda(c1, c2)?;
                ell = x.ell;
                r.results = json!({
                    "ell": ell,
                    "basis": fmt.matrix(x.intersection.basis()),
                    "sum_is_full": x.sum_is_full,
                });
                r.verdicts.insert("closed-under-lambda1-shift".into(), x.closed_under_lambda1);
                r.verdicts.insert("closed-under-lambda2-shift".into(), x.closed_under_lambda2);
                r.clauses = x.clauses;
            }
            if verify {
                let (w1, w2) = (enumerate_consta(c1)?, enumerate_consta(c2)?);
                r.assert("oracle-ell", brute_intersection_dim(&w1, &w2, q)? == ell);
            }
        }
        ConstaOp::Verdicts(_) => {
            let (c1, c2) = (&codes[0], &codes[1]);
            let v = pair_verdicts(c1, c2)?;
            r.results = json!({
                "ell": v.ell,
                "sum_dim": v.sum_dim,
                "dual_ell": v.dual_ell,
                "c1": consta_summary(fmt, c1),
                "c2": consta_summary(fmt, c2),
            });
            for (k, b) in [
                ("lcp", v.lcp),
                ("ell-lcp", v.ell_lcp),
                ("dual-sum-full", v.dual_sum_full),
                ("lcd-c1", v.lcd_c1),
                ("lcd-c2", v.lcd_c2),
            ] {
                r.verdicts.insert(k.into(), b);
            }
            r.clauses = v.clauses.clone();
            if verify {
                let (w1, w2) = (enumerate_consta(c1)?, enumerate_consta(c2)?);
                let (u1, u2) = (enumerate_consta(&c1.dual())?, enumerate_consta(&c2.dual())?);
                r.assert("oracle-ell", brute_intersection_dim(&w1, &w2, q)? == v.ell);
                r.assert("oracle-dual-ell", brute_intersection_dim(&u1, &u2, q)? == v.dual_ell);
            }
        }
    }
    Ok(r)
}

fn conju_codes(a: &ConjuArgs, r: &mut Report, count: Option<usize>) -> Result<(Tower, Vec<ConjuCode>)> {
    let ext = make_field(a.q2, a.modulus.as_deref())?;
    let alpha = a.alpha.as_deref().map(|s| parse_element(&ext, s)).transpose()?;
    let t = Tower::with_options(ext, None, alpha)?;
    field_args(r, "--q2", a.q2, t.ext(), a.modulus.as_deref());
    if alpha.is_some() {
        r.arg("--alpha", t.alpha());
        r.input("alpha", t.alpha());
    }
    let total = a.gen.len() + a.h.len();
    if let Some(c) = count {
        if total != c {
            return Err(Error::DimensionMismatch(format!("expected {c} codes (--gen or --h), got {total}")));
        }
    }
    let mut codes = Vec::new();
    let mut gens = Vec::new();
    let mut hs = Vec::new();
    for g in &a.gen {
        let v = parse_vector(t.ext(), g)?;
        gens.push(v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
        codes.push(ConjuCode::from_generator_vector(&t, &v)?);
    }
    for h in &a.h {
        let m = parse_matrix(t.ext(), h)?;
        hs.push(m.to_canonical());
        codes.push(ConjuCode::from_parity(&t, &m)?);
    }
    let n = a.n.or(codes.first().map(|c| c.n())).unwrap_or(0);
    if let Some(bad) = codes.iter().find(|c| c.n() != n) {
        return Err(Error::LengthMismatch(n, bad.n()));
    }
    r.arg("--n", n);
    r.input("n", n);
    for g in &gens {
        r.arg("--gen", g);
    }
    for h in &hs {
        r.arg("--h", h);
    }
    r.input("gen", gens);
    r.input("h", hs);
    for c in &codes {
        r.warnings.extend(c.warnings().iter().cloned());
    }
    Ok((t, codes))
}

fn conju_summary(fmt: &Fmt, c: &ConjuCode) -> Value {
    json!({
        "n": c.n(),
        "k": c.k(),
        "generator_matrix": fmt.matrix(c.gen_matrix()),
        "psi_generator": fmt.poly(c.psi_generator()),
        "generating_vector": fmt.vector(c.tower().ext(), c.generating_vector()),
    })
}

fn conju_invariants(r: &mut Report, c: &ConjuCode, verify: bool) -> Result<()> {
    let t = c.tower();
    r.assert("psi-image-is-cyclic", is_constacyclic(c.psi_space(), 1));
    r.assert("k-is-2n-minus-deg-psi-generator", c.k() == 2 * c.n() - c.psi_generator().deg());
    r.assert(
        "rows-closed-under-conjucyclic-shift",
        c.gen_matrix().row_vecs().iter().all(|row| c.contains(&conjucyclic_shift(t, row))),
    );
    if verify {
        let w = enumerate_conju(c)?;
        r.assert("oracle-word-count", w.dim_over(t.base().order()) == Some(c.k()));
        r.assert("oracle-closed-under-conjucyclic-shift", closed_under_conjucyclic_shift(t, &w));
        let psi_ok = w.words().iter().all(|v| c.psi_space().contains(&psi_map(t, v)));
        r.assert("oracle-psi-image-matches", psi_ok);
    }
    Ok(())
}

fn cmd_conju(op: &ConjuOp, fmt: &Fmt, verify: bool) -> Result<Report> {
    let (name, args, count) = match op {
        ConjuOp::Build(a) => ("build", a, Some(1)),
        ConjuOp::FromParity(a) => ("from-parity", a, Some(1)),
        ConjuOp::Intersect(a) => ("intersect", a, Some(2)),
        ConjuOp::Acp(a) => ("acp", a, Some(2)),
        ConjuOp::Trace(a) => ("trace", a, Some(1)),
        ConjuOp::Subcode(a) => ("subcode", a, Some(1)),
        ConjuOp::TraceEll(a) => ("trace-ell", a, Some(2)),
    };
    let mut r = Report::new(&format!("conju {name}"));
    r.argv.extend(["conju".to_string(), name.to_string()]);
    if matches!(op, ConjuOp::FromParity(_)) && args.h.len() != 1 {
        return Err(Error::DimensionMismatch("from-parity takes exactly one --h".into()));
    }
    let (t, codes) = conju_codes(args, &mut r, count)?;
    let q = t.base().order();
    match op {
        ConjuOp::Build(_) | ConjuOp::FromParity(_) => {
            let c = &codes[0];
            let mut v = conju_summary(fmt, c);
            let h = c.parity_matrix();
            v["parity_matrix"] = fmt.matrix(&h);
            r.results = v;
            conju_invariants(&mut r, c, verify)?;
            r.assert("generator-annihilates-parity", odot_a(&t, c.gen_matrix(), &h)?.is_zero());
            r.assert("dimensions-add-to-2n", c.k() + h.base_rank(&t)? == 2 * c.n());
            if verify {
                let h_span = enumerate_additive(&t, &h)?;
                r.assert("oracle-alternating-dual", brute_alternating_dual(&t, &h_span)? == enumerate_conju(c)?);
            }
        }
        ConjuOp::Intersect(_) => {
            let (c1, c2) = (&codes[0], &codes[1]);
            let x = acc_intersection(c1, c2)?;
            r.results = json!({
                "ell": x.ell,
                "rank1": x.rank1,
                "rank2": x.rank2,
                "k1": c1.k(),
                "k2": c2.k(),
                "psi_generator1": fmt.poly(c1.psi_generator()),
                "psi_generator2": fmt.poly(c2.psi_generator()),
                "basis": fmt.matrix(&x.basis),
            });
            r.clauses = x.clauses;
            if verify {
                let (w1, w2) = (enumerate_conju(c1)?, enumerate_conju(c2)?);
                r.assert("oracle-ell", brute_intersection_dim(&w1, &w2, q)? == x.ell);
            }
        }
        ConjuOp::Acp(_) => {
            let (c1, c2) = (&codes[0], &codes[1]);
            let a = acp_check(c1, c2)?;
            r.results = json!({"ell": a.ell, "rank1": a.rank1, "rank2": a.rank2, "k1": c1.k(), "k2": c2.k()});
            r.verdicts.insert("acp".into(), a.is_acp);
            r.clauses = a.clauses;
            if verify {
                let (w1, w2) = (enumerate_conju(c1)?, enumerate_conju(c2)?);
                let sum = w1.sumset(&w2)?;
                r.assert("oracle-sum-size", (sum.dim_over(q) == Some(2 * c1.n())) == a.is_acp);
            }
        }
        ConjuOp::Trace(_) => {
            let c = &codes[0];
            let tr = trace_code(c);
            let id = trace_dim_identity(c);
            r.results = json!({
                "trace_generator": fmt.poly(tr.generator()),
                "dim_c": id.dim_c,
                "dim_trace": id.dim_tr,
                "dim_subcode": id.dim_s,
                "dim_trace_kernel": id.dim_kernel,
                "identity_asserted": id.asserted,
            });
            r.verdicts.insert("dimension-identity".into(), id.holds);
            r.verdicts.insert("trace-inside-code".into(), trace_inside_code(c));
            r.assert("trace-code-is-cyclic", is_constacyclic(&tr.row_space(), 1));
            r.clauses = id.clauses;
            if verify {
                let w = enumerate_conju(c)?;
                r.assert("oracle-trace-code", brute_trace(&t, &w) == enumerate_cyclic(&tr)?);
            }
        }
        ConjuOp::Subcode(_) => {
            let c = &codes[0];
            let s = largest_subfield_subcode(c);
            r.results = json!({
                "generator": fmt.poly(s.code.generator()),
                "formula_generator": fmt.poly(&s.formula_generator),
                "k": s.code.k(),
            });
            r.assert("subcode-is-cyclic", is_constacyclic(&s.code.row_space(), 1));
            r.clauses = s.clauses;
            if verify {
                let w = enumerate_conju(c)?;
                r.assert("oracle-subcode", brute_subfield_subcode(&t, &w) == enumerate_cyclic(&s.code)?);
            }
        }
        ConjuOp::TraceEll(_) => {
            let (c1, c2) = (&codes[0], &codes[1]);
            let tp = trace_pair_ell(c1, c2)?;
            r.results = json!({
                "ell": tp.ell,
                "formula_value": tp.formula_value,
                "subcode_generator1": tp.g1,
                "subcode_generator2": tp.g2,
                "deg_lcm": tp.deg_lcm,
                "rank1": tp.rank1,
                "k1": c1.k(),
            });
            r.clauses = tp.clauses;
            if verify {
                let (w1, w2) = (enumerate_conju(c1)?, enumerate_conju(c2)?);
                let brute = brute_trace(&t, &w1).intersection(&brute_trace(&t, &w2))?;
                r.assert("oracle-trace-ell", brute.dim_over(q) == Some(tp.ell));
            }
        }
    }
    Ok(r)
}

fn cmd_verify(only: Option<&str>) -> Report {
    let mut r = Report::new("verify paper");
    r.argv.extend(["verify".to_string(), "paper".to_string()]);
    if let Some(o) = only {
        r.arg("--only", o);
        r.input("only", o);
    }
    let suite = run_suite(&SuiteOptions { only: only.map(str::to_string), mutation: None });
    let failures: Vec<Value> = suite
        .cases
        .iter()
        .flat_map(|c| {
            let checks = c.checks.iter().filter(|k| !k.pass).map(move |k| {
                json!({"case": c.name, "what": k.what, "expected": k.expected, "actual": k.actual})
            });
            let clauses = c.clauses.iter().filter(|k| !k.holds).map(move |k| {
                json!({"case": c.name, "what": k.name, "detail": k.detail})
            });
            let error = c.error.iter().map(move |e| json!({"case": c.name, "error": e}));
            checks.chain(clauses).chain(error).collect::<Vec<_>>()
        })
        .collect();
    for c in &suite.cases {
        r.assert(&c.name, c.pass);
    }
    r.results = json!({
        "passed": suite.passed,
        "failed": suite.failed,
        "failures": failures,
        "cases": suite.cases,
    });
    r
}

fn cmd_sweep(a: &SweepArgs, seed: u64, verify: bool) -> Result<Report> {
    let f = make_field(a.q, a.modulus.as_deref())?;
    let mut r = Report::new("sweep");
    r.argv.push("sweep".into());
    field_args(&mut r, "--q", a.q, &f, a.modulus.as_deref());
    r.arg("--n", a.n);
    r.input("n", a.n);
    let lambdas = a.lambda.iter().map(|s| parse_element(&f, s)).collect::<Result<Vec<_>>>()?;
    let (l1, l2) = match lambdas[..] {
        [l] => (l, l),
        [l1, l2] => (l1, l2),
        _ => return Err(Error::DimensionMismatch("sweep takes one or two --lambda values".into())),
    };
    r.arg("--lambda", l1);
    r.arg("--lambda", l2);
    r.input("lambda", vec![l1, l2]);
    let s = sweep_pairs(&f, a.n, l1, l2, seed, verify)?;
    if let Some(path) = &a.csv {
        let file = std::fs::File::create(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        s.write_csv(file)?;
        r.arg("--csv", path.display());
    }
    r.results = json!({
        "pairs_checked": s.pairs.len(),
        "ell_distribution": s.ell_distribution,
        "clause_violations": s.clause_violations,
        "oracle_mismatches": s.oracle_mismatches,
        "pairs": s.pairs,
    });
    r.assert("every-clause-on-every-pair", s.clause_violations == 0);
    if verify {
        r.assert("oracle-agrees-on-every-pair", s.oracle_mismatches == 0);
    }
    Ok(r)
}

/// Bulky keys shown only in JSON output.
const JSON_ONLY: [&str; 2] = ["cases", "pairs"];

pub fn render_human(r: &Report) -> String {
    let mut out = format!("{}\n", r.command);
    for (k, v) in &r.inputs {
        out.push_str(&format!("  {k}: {}\n", inline(v)));
    }
    if let Value::Object(map) = &r.results {
        for (k, v) in map {
            if JSON_ONLY.contains(&k.as_str()) {
                continue;
            }
            render_value(&mut out, k, v);
        }
    }
    for (k, v) in &r.verdicts {
        out.push_str(&format!("  {k}: {}\n", if *v { "yes" } else { "no" }));
    }
    for (k, v) in &r.assertions {
        out.push_str(&format!("{} {k}\n", if *v { "PASS" } else { "FAIL" }));
    }
    for c in r.clauses.iter().filter(|c| c.applies) {
        out.push_str(&format!("{} {} ({})\n", if c.holds { "PASS" } else { "FAIL" }, c.name, c.detail));
    }
    for w in &r.warnings {
        out.push_str(&format!("warning: {w}\n"));
    }
    out.push_str(if r.passed() { "result: ok\n" } else { "result: FAILED\n" });
    out
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn render_value(out: &mut String, key: &str, v: &Value) {
    match v {
        Value::Array(rows) if rows.first().is_some_and(Value::is_array) => {
            out.push_str(&format!("  {key}:\n"));
            for row in rows {
                out.push_str(&format!("    {}\n", inline(row)));
            }
        }
        Value::Array(rows) if rows.first().is_some_and(Value::is_object) => {
            out.push_str(&format!("  {key}:\n"));
            for row in rows {
                out.push_str(&format!("    {}\n", row));
            }
        }
        Value::Object(map) => {
            out.push_str(&format!("  {key}:\n"));
            for (k, inner) in map {
                if let Value::Array(rows) = inner {
                    if rows.first().is_some_and(Value::is_array) {
                        out.push_str(&format!("    {k}: {} rows\n", rows.len()));
                        continue;
                    }
                }
                out.push_str(&format!("    {k}: {}\n", inline(inner)));
            }
        }
        other => out.push_str(&format!("  {key}: {}\n", inline(other))),
    }
}
