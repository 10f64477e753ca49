//! Built-in regression cases: the worked examples, transcribed as data
//! together with their expected outputs.
//!
//! Over GF(4) the element codes are 0, 1, 2 = ω, 3 = ω² = ω + 1.

use serde::{Deserialize, Serialize};

use crate::check::{all_hold, Clause};
use crate::conju::{acc_intersection, acp_check, conjucyclic_shift, odot_a, ConjuCode};
use crate::constacyclic::{intersect_cross_lambda, is_constacyclic, pair_verdicts, ConstaCode};
use crate::error::Result;
use crate::factor::{factor_xn_minus_lambda, DEFAULT_SEED};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::oracle::{brute_alternating_dual, brute_intersection_dim, enumerate_additive, enumerate_conju};
use crate::poly::Poly;
use crate::tower::Tower;
use crate::trace::{largest_subfield_subcode, trace_code, trace_dim_identity, trace_pair_ell};

const W: u32 = 2;
const W2: u32 = 3;

/// Factors of x^7 - ω, x^7 - ω², x^15 - ω, x^15 - ω², ascending coefficients.
pub const FACTORS_7_W: [&[u32]; 3] = [&[2, 1], &[1, 3, 0, 1], &[1, 0, 2, 1]];
pub const FACTORS_7_W2: [&[u32]; 3] = [&[3, 1], &[1, 2, 0, 1], &[1, 0, 3, 1]];
pub const FACTORS_15_W: [&[u32]; 3] = [&[3, 0, 0, 1], &[2, 0, 0, 1, 0, 0, 1], &[2, 0, 0, 2, 0, 0, 1]];
pub const FACTORS_15_W2: [&[u32]; 3] = [&[2, 0, 0, 1], &[3, 0, 0, 1, 0, 0, 1], &[3, 0, 0, 3, 0, 0, 1]];

/// First generator row of the (7, 2^7) conjucyclic code.
pub const ACC_GEN_VECTOR: [u32; 7] = [1, 3, 3, 3, 0, 0, 3];

pub const ACC_G1: [[u32; 7]; 7] = [
    [1, 3, 3, 3, 0, 0, 3],
    [2, 1, 3, 3, 3, 0, 0],
    [0, 2, 1, 3, 3, 3, 0],
    [0, 0, 2, 1, 3, 3, 3],
    [2, 0, 0, 2, 1, 3, 3],
    [2, 2, 0, 0, 2, 1, 3],
    [2, 2, 2, 0, 0, 2, 1],
];

/// Parity-check matrix of the (7, 2^5) conjucyclic code.
pub const ACC_H2: [[u32; 7]; 9] = [
    [3, 3, 3, 0, 0, 3, 0],
    [0, 3, 3, 3, 0, 0, 3],
    [2, 0, 3, 3, 3, 0, 0],
    [0, 2, 0, 3, 3, 3, 0],
    [0, 0, 2, 0, 3, 3, 3],
    [2, 0, 0, 2, 0, 3, 3],
    [2, 2, 0, 0, 2, 0, 3],
    [2, 2, 2, 0, 0, 2, 0],
    [0, 2, 2, 2, 0, 0, 2],
];

/// `G1 ⊙ₐ H2^T`.
pub const ACC_PRODUCT: [[u32; 9]; 7] = [
    [1, 0, 1, 1, 1, 0, 0, 1, 0],
    [0, 1, 0, 1, 1, 1, 0, 0, 1],
    [0, 0, 1, 0, 1, 1, 1, 0, 0],
    [1, 0, 0, 1, 0, 1, 1, 1, 0],
    [1, 1, 0, 0, 1, 0, 1, 1, 1],
    [1, 1, 1, 0, 0, 1, 0, 1, 1],
    [0, 1, 1, 1, 0, 0, 1, 0, 1],
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseCheck {
    pub what: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseReport {
    pub name: String,
    pub family: String,
    pub description: String,
    pub checks: Vec<CaseCheck>,
    pub clauses: Vec<Clause>,
    pub error: Option<String>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub cases: Vec<CaseReport>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// Deliberate breakage used to confirm that the suite detects faults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Rebuild generator matrices with the plain cyclic shift in place of `T`.
    NoConjugation,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Keep only cases whose name or family contains this string.
    pub only: Option<String>,
    pub mutation: Option<Mutation>,
}

struct Case {
    name: &'static str,
    family: &'static str,
    description: &'static str,
    run: fn(&mut Recorder, Option<Mutation>) -> Result<()>,
}

const CASES: [Case; 7] = [
    Case {
        name: "cross-lambda-intersection",
        family: "consta",
        description: "factors of x^7 - ω, x^7 - ω², x^15 - ω, x^15 - ω², and the intersection of a ω- and a ω²-constacyclic code of length 7",
        run: case_cross_lambda,
    },
    Case {
        name: "cross-lambda-pairs",
        family: "consta",
        description: "cross-λ pairs of length 7 with intersection dimension 1 and 0",
        run: case_cross_pairs,
    },
    Case {
        name: "lcp-length-15",
        family: "consta",
        description: "a linear complementary pair of length 15",
        run: case_lcp,
    },
    Case {
        name: "dual-pair",
        family: "consta",
        description: "duals of a cross-λ pair and their intersections",
        run: case_dual,
    },
    Case {
        name: "ell-lcp-pair",
        family: "consta",
        description: "a 1-intersection pair whose sum is the whole space",
        run: case_ell_lcp,
    },
    Case {
        name: "conjucyclic-intersection",
        family: "conju",
        description: "the (7, 2^7) and (7, 2^5) conjucyclic codes over GF(4): generator matrix, ⊙ₐ product and intersection dimension",
        run: case_acc_pair,
    },
    Case {
        name: "trace-subcode",
        family: "conju",
        description: "subfield subcodes, trace codes and the trace intersection of the same pair",
        run: case_trace,
    },
];

pub fn case_names() -> Vec<&'static str> {
    CASES.iter().map(|c| c.name).collect()
}

pub fn run_suite(opts: &SuiteOptions) -> SuiteReport {
    let cases: Vec<CaseReport> = CASES
        .iter()
        .filter(|c| {
            opts.only
                .as_deref()
                .map_or(true, |f| c.family == f || c.name.contains(f))
        })
        .map(|c| {
            let mut rec = Recorder::default();
            let error = (c.run)(&mut rec, opts.mutation).err().map(|e| e.to_string());
            let pass = error.is_none() && rec.checks.iter().all(|k| k.pass) && all_hold(&rec.clauses);
            CaseReport {
                name: c.name.into(),
                family: c.family.into(),
                description: c.description.into(),
                checks: rec.checks,
                clauses: rec.clauses,
                error,
                pass,
            }
        })
        .collect();
    let passed = cases.iter().filter(|c| c.pass).count();
    let failed = cases.len() - passed;
    SuiteReport { cases, passed, failed }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<CaseCheck>,
    clauses: Vec<Clause>,
}

impl Recorder {
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, what: &str, expected: T, actual: T) {
        self.checks.push(CaseCheck {
            what: what.into(),
            pass: expected == actual,
            expected: format!("{expected:?}"),
            actual: format!("{actual:?}"),
        });
    }

    fn clauses(&mut self, cs: &[Clause]) {
        self.clauses.extend_from_slice(cs);
    }
}

fn gf4() -> Field {
    Field::of_order(4).expect("GF(4)")
}

fn poly(f: &Field, c: &[u32]) -> Poly {
    Poly::new(f, c.to_vec())
}

fn product(f: &Field, factors: &[&[u32]]) -> Poly {
    factors.iter().fold(Poly::one(f), |acc, c| &acc * &poly(f, c))
}

fn code(f: &Field, n: usize, lambda: u32, factors: &[&[u32]]) -> Result<ConstaCode> {
    ConstaCode::build(f, n, lambda, &product(f, factors))
}

fn coeff_lists(f: &Field, n: usize, lambda: u32) -> Result<Vec<Vec<u32>>> {
    let fac = factor_xn_minus_lambda(f, n, lambda, DEFAULT_SEED)?;
    Ok(fac.factors.iter().map(|(p, _)| p.coeffs().to_vec()).collect())
}

fn to_vecs(rows: &[&[u32]]) -> Vec<Vec<u32>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn case_cross_lambda(rec: &mut Recorder, _: Option<Mutation>) -> Result<()> {
    let f = gf4();
    for (n, lambda, want, label) in [
        (7, W, &FACTORS_7_W, "factors of x^7 - ω"),
        (7, W2, &FACTORS_7_W2, "factors of x^7 - ω²"),
        (15, W, &FACTORS_15_W, "factors of x^15 - ω"),
        (15, W2, &FACTORS_15_W2, "factors of x^15 - ω²"),
    ] {
        rec.eq(label, to_vecs(want), coeff_lists(&f, n, lambda)?);
    }
    let c1 = code(&f, 7, W, &[&[1, 3, 0, 1]])?;
    let c2 = code(&f, 7, W2, &[&[1, 0, 3, 1]])?;
    let x = intersect_cross_lambda(&c1, &c2)?;
    let want = Subspace::from_rows(&f, 7, &[[1, W2, W2, W, W2, W2, 1]])?;
    rec.eq("intersection", want.basis_vecs(), x.intersection.basis_vecs());
    rec.eq("closed under the ω-shift", false, x.closed_under_lambda1);
    rec.eq("closed under the ω²-shift", false, x.closed_under_lambda2);
    rec.eq("closed under the ω-shift (independent check)", false, is_constacyclic(&x.intersection, W));
    rec.clauses(&x.clauses);
    Ok(())
}

fn case_cross_pairs(rec: &mut Recorder, _: Option<Mutation>) -> Result<()> {
    let f = gf4();
    let c1 = code(&f, 7, W, &[&[1, 0, 2, 1]])?;
    let c2 = code(&f, 7, W2, &[&[1, 2, 0, 1]])?;
    let x = intersect_cross_lambda(&c1, &c2)?;
    let want = Subspace::from_rows(&f, 7, &[[1, W, W, W2, W, W, 1]])?;
    rec.eq("intersection of <x^3 + ωx^2 + 1> and <x^3 + ωx + 1>", want.basis_vecs(), x.intersection.basis_vecs());
    rec.clauses(&x.clauses);
    let c3 = code(&f, 7, W, &[&[2, 1], &[1, 0, 2, 1]])?;
    let c4 = code(&f, 7, W2, &[&[3, 1], &[1, 2, 0, 1]])?;
    let y = intersect_cross_lambda(&c3, &c4)?;
    rec.eq("ell of the degree-4 generator pair", 0, y.ell);
    rec.clauses(&y.clauses);
    Ok(())
}

fn case_lcp(rec: &mut Recorder, _: Option<Mutation>) -> Result<()> {
    let f = gf4();
    let c1 = code(&f, 15, W, &[&[3, 0, 0, 1], &[2, 0, 0, 1, 0, 0, 1]])?;
    let c2 = code(&f, 15, W2, &[&[3, 0, 0, 3, 0, 0, 1]])?;
    let v = pair_verdicts(&c1, &c2)?;
    rec.eq("k1, k2", (6, 9), (c1.k(), c2.k()));
    rec.eq("ell", 0, v.ell);
    rec.eq("lcp", true, v.lcp);
    rec.clauses(&v.clauses);
    Ok(())
}

fn case_dual(rec: &mut Recorder, _: Option<Mutation>) -> Result<()> {
    let f = gf4();
    let c1 = code(&f, 7, W, &[&[2, 1], &[1, 0, 2, 1]])?;
    let c2 = code(&f, 7, W2, &[&[1, 2, 0, 1]])?;
    let (d1, d2) = (c1.dual(), c2.dual());
    rec.eq("dual of C1", (W2, poly(&f, &[1, 0, 3, 1])), (d1.lambda(), d1.generator().clone()));
    rec.eq("dual of C2", (W, product(&f, &[&[2, 1], &[1, 3, 0, 1]])), (d2.lambda(), d2.generator().clone()));
    let v = pair_verdicts(&c1, &c2)?;
    rec.eq("dim(C1 ∩ C2)", 0, v.ell);
    rec.eq("dim(C1^perp ∩ C2^perp)", 0, v.dual_ell);
    rec.clauses(&v.clauses);
    Ok(())
}

fn case_ell_lcp(rec: &mut Recorder, _: Option<Mutation>) -> Result<()> {
    let f = gf4();
    let c1 = code(&f, 7, W, &[&[1, 0, 2, 1]])?;
    let c2 = code(&f, 7, W2, &[&[1, 2, 0, 1]])?;
    let v = pair_verdicts(&c1, &c2)?;
    rec.eq("k1, k2", (4, 4), (c1.k(), c2.k()));
    rec.eq("ell", 1, v.ell);
    rec.eq("C1 + C2 is the whole space", true, v.ell_lcp);
    rec.clauses(&v.clauses);
    Ok(())
}

fn plain_shift(_: &Tower, v: &[u32]) -> Vec<u32> {
    let mut out = v.to_vec();
    out.rotate_right(1);
    out
}

/// The first `k` shifts of `a`.
fn shift_rows(tower: &Tower, a: &[u32], k: usize, mutation: Option<Mutation>) -> Vec<Vec<u32>> {
    let shift: fn(&Tower, &[u32]) -> Vec<u32> = match mutation {
        Some(Mutation::NoConjugation) => plain_shift,
        None => conjucyclic_shift,
    };
    let mut rows = vec![a.to_vec()];
    while rows.len() < k {
        let next = shift(tower, rows.last().expect("nonempty"));
        rows.push(next);
    }
    rows
}

fn acc_pair_codes(mutation: Option<Mutation>) -> Result<(Tower, ConjuCode, ConjuCode)> {
    let t = Tower::of_order(4)?;
    let g1 = match mutation {
        None => ConjuCode::from_generator_vector(&t, &ACC_GEN_VECTOR)?,
        Some(_) => {
            let rows = shift_rows(&t, &ACC_GEN_VECTOR, 7, mutation);
            ConjuCode::from_generators(&t, &Matrix::from_rows(t.ext(), 7, &rows)?)?
        }
    };
    let h2 = Matrix::from_rows(t.ext(), 7, &ACC_H2)?;
    let c2 = ConjuCode::from_parity(&t, &h2)?;
    Ok((t, g1, c2))
}

fn case_acc_pair(rec: &mut Recorder, mutation: Option<Mutation>) -> Result<()> {
    let (t, c1, c2) = acc_pair_codes(mutation)?;
    let printed_g1 = Matrix::from_rows(t.ext(), 7, &ACC_G1)?;
    let rebuilt = Matrix::from_rows(t.ext(), 7, &shift_rows(&t, &ACC_GEN_VECTOR, 7, mutation))?;
    rec.eq("first seven shifts of the generator vector", printed_g1.row_vecs(), rebuilt.row_vecs());
    if mutation.is_none() {
        rec.eq("generator matrix of C1", printed_g1.row_vecs(), c1.gen_matrix().row_vecs());
    }
    rec.eq("k1, k2", (7, 5), (c1.k(), c2.k()));
    rec.eq("rows of H2", 9, c2.parity_matrix().rows());

    let product = odot_a(&t, &printed_g1, &c2.parity_matrix())?;
    let printed_product = Matrix::from_rows(t.base(), 9, &ACC_PRODUCT)?;
    rec.eq("G1 ⊙ₐ H2^T", printed_product.row_vecs(), product.row_vecs());
    rec.eq("rank(G1 ⊙ₐ H2^T)", 3, product.rank());

    let x = acc_intersection(&c1, &c2)?;
    rec.eq("ell", 4, x.ell);
    rec.eq("k1 - rank1", 4, c1.k() as i64 - x.rank1 as i64);
    rec.eq("k2 - rank2", 4, c2.k() as i64 - x.rank2 as i64);
    rec.clauses(&x.clauses);
    let acp = acp_check(&c1, &c2)?;
    rec.eq("C1 + C2 is the whole space", false, acp.is_acp);
    rec.clauses(&acp.clauses);

    let w1 = enumerate_conju(&c1)?;
    let w2 = enumerate_conju(&c2)?;
    rec.eq("oracle |C1|", 128, w1.len());
    rec.eq("oracle |C2|", 32, w2.len());
    rec.eq("oracle dim(C1 ∩ C2)", 4, brute_intersection_dim(&w1, &w2, 2)?);
    let h2_span = enumerate_additive(&t, &c2.parity_matrix())?;
    rec.eq("oracle: C2 is the alternating dual of span(H2)", true, brute_alternating_dual(&t, &h2_span)? == w2);
    Ok(())
}

fn case_trace(rec: &mut Recorder, mutation: Option<Mutation>) -> Result<()> {
    let (_, c1, c2) = acc_pair_codes(mutation)?;
    let f = c1.tower().base().clone();
    let x3x1 = poly(&f, &[1, 1, 0, 1]);
    for (label, c) in [("C1", &c1), ("C2", &c2)] {
        let s = largest_subfield_subcode(c);
        rec.eq(&format!("S_{label} generator (formula)"), x3x1.clone(), s.formula_generator.clone());
        rec.eq(&format!("S_{label} generator (direct)"), x3x1.clone(), s.code.generator().clone());
        rec.clauses(&s.clauses);
    }
    let id = trace_dim_identity(&c1);
    rec.eq("dim C1 = dim tr(C1) + dim S_C1", (7, 3, 4), (id.dim_c, id.dim_tr, id.dim_s));
    rec.eq("|C1| = |tr(C1)| |S_C1|", 128u64, (1u64 << id.dim_tr) * (1u64 << id.dim_s));
    rec.clauses(&id.clauses);
    rec.eq("dim tr(C2)", 1, trace_code(&c2).k());
    let tp = trace_pair_ell(&c1, &c2)?;
    rec.eq("trace ell", 0, tp.ell);
    rec.eq("deg lcm - rank - (n - k1)", (3, 3, 0i64), (tp.deg_lcm, tp.rank1, tp.formula_value));
    rec.clauses(&tp.clauses);
    Ok(())
}
