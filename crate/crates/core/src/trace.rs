//! Trace codes and largest subfield subcodes of ACC codes.

use serde::{Deserialize, Serialize};

use crate::check::{all_hold, Clause};
use crate::conju::{acc_intersection, psi_map, ConjuCode};
use crate::constacyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::poly::{gcd, lcm, Poly};

/// `tr(C)`: the componentwise image of `C` under `a -> a + a^q`.
pub fn trace_code(c: &ConjuCode) -> CyclicCode {
    let t = c.tower();
    let rows: Vec<Vec<u32>> = c
        .gen_matrix()
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|&a| t.trace(a)).collect())
        .collect();
    let space = Subspace::from_rows(t.base(), c.n(), &rows).expect("consistent lengths");
    CyclicCode::from_subspace(&space).expect("the trace of an ACC code is cyclic")
}

/// `S_C` as a subspace of GF(q)^n: `Ψ(C)` meets `Ψ(GF(q)^n) = span{e_i + e_{n+i}}`,
/// and `Ψ(u) = tr(α) (u | u)` for `u` over GF(q).
pub fn subfield_subcode_space(c: &ConjuCode) -> Subspace {
    let t = c.tower();
    let n = c.n();
    let f = t.base();
    let diag: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut v = vec![0; 2 * n];
            v[i] = 1;
            v[n + i] = 1;
            v
        })
        .collect();
    let diag = Subspace::from_rows(f, 2 * n, &diag).expect("consistent lengths");
    let inter = c.psi_space().intersect(&diag).expect("same ambient");
    let rows: Vec<Vec<u32>> = inter.basis_vecs().into_iter().map(|v| v[..n].to_vec()).collect();
    Subspace::from_rows(f, n, &rows).expect("consistent lengths")
}

#[derive(Clone, Debug)]
pub struct SubfieldSubcode {
    pub code: CyclicCode,
    /// `𝐠 / gcd(𝐠, x^n + 1)` with `𝐠` the generator of `Ψ(C)`.
    pub formula_generator: Poly,
    pub clauses: Vec<Clause>,
}

impl SubfieldSubcode {
    pub fn agrees(&self) -> bool {
        all_hold(&self.clauses)
    }
}

/// `u(x) = 𝐠(x) / gcd(𝐠(x), x^n + 1)`.
pub fn subcode_generator_formula(c: &ConjuCode) -> Poly {
    let f = c.tower().base();
    let n = c.n();
    let big = c.psi_generator();
    let xn_plus_1 = &Poly::monomial(f, 1, n) + &Poly::one(f);
    let d = gcd(big, &xn_plus_1).expect("x^n + 1 is nonzero");
    big.exact_div(&d).expect("gcd divides")
}

/// `S_C` computed directly and through the quotient formula.
pub fn largest_subfield_subcode(c: &ConjuCode) -> SubfieldSubcode {
    let t = c.tower();
    let space = subfield_subcode_space(c);
    let code = CyclicCode::from_subspace(&space).expect("S_C is cyclic");
    let formula_generator = subcode_generator_formula(c);
    let tr_alpha = t.trace(t.alpha());
    let f = t.base();
    let psi_ok = space.basis_vecs().iter().all(|u| {
        let embedded: Vec<u32> = u.iter().map(|&b| t.embed(b)).collect();
        let mut want: Vec<u32> = u.iter().map(|&b| f.mul(tr_alpha, b)).collect();
        want.extend_from_within(..);
        psi_map(t, &embedded) == want
    });
    let clauses = vec![
        Clause::fired(
            "quotient-formula-generates-subcode",
            &formula_generator == code.generator(),
            format!("formula {}, direct {}", formula_generator.to_canonical(), code.generator().to_canonical()),
        ),
        Clause::fired("subcode-psi-image-is-doubled", psi_ok, "Ψ(u) = tr(α)(u | u) on a basis"),
    ];
    SubfieldSubcode { code, formula_generator, clauses }
}

/// Whether `tr(C)`, embedded in GF(q^2)^n, lies inside `C`.
pub fn trace_inside_code(c: &ConjuCode) -> bool {
    let t = c.tower();
    trace_code(c)
        .row_space()
        .basis_vecs()
        .iter()
        .all(|v| c.contains(&v.iter().map(|&b| t.embed(b)).collect::<Vec<_>>()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDimIdentity {
    pub dim_c: usize,
    pub dim_tr: usize,
    pub dim_s: usize,
    /// Dimension of the kernel of the coordinatewise trace restricted to C.
    pub dim_kernel: usize,
    pub holds: bool,
    /// The identity is asserted only in characteristic 2.
    pub asserted: bool,
    pub clauses: Vec<Clause>,
}

/// `dim tr(C) = dim C - dim S_C`; in characteristic 2 the kernel of the
/// trace is exactly `S_C`, elsewhere the kernel is computed and reported.
pub fn trace_dim_identity(c: &ConjuCode) -> TraceDimIdentity {
    let t = c.tower();
    let dim_c = c.k();
    let dim_tr = trace_code(c).k();
    let dim_s = subfield_subcode_space(c).dim();
    let kernel_space = {
        let rows: Vec<Vec<u32>> = c
            .gen_matrix()
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(|&a| t.trace(a)).collect())
            .collect();
        let images = Matrix::from_rows(t.base(), c.n(), &rows).expect("consistent lengths");
        dim_c - images.rank()
    };
    let char2 = t.base().characteristic() == 2;
    let holds = dim_tr + dim_s == dim_c;
    let p = t.base().order() as u128;
    let card = |d: usize| p.checked_pow(d as u32);
    let card_ok = match (card(dim_c), card(dim_tr), card(dim_s)) {
        (Some(a), Some(b), Some(s)) => Some(a) == b.checked_mul(s),
        _ => holds,
    };
    let clauses = vec![
        Clause::when(
            "trace-dimension-identity",
            char2,
            holds,
            format!("dim tr(C) = {dim_tr}, dim C - dim S_C = {}", dim_c as i64 - dim_s as i64),
        ),
        Clause::when(
            "trace-cardinality-identity",
            char2,
            card_ok,
            format!("|C| = q^{dim_c}, |tr(C)| |S_C| = q^{}", dim_tr + dim_s),
        ),
        Clause::fired(
            "trace-rank-nullity",
            dim_tr + kernel_space == dim_c,
            format!("dim ker tr|C = {kernel_space}"),
        ),
    ];
    TraceDimIdentity { dim_c, dim_tr, dim_s, dim_kernel: kernel_space, holds, asserted: char2, clauses }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracePairEll {
    pub ell: usize,
    pub formula_value: i64,
    pub g1: String,
    pub g2: String,
    pub deg_lcm: usize,
    pub rank1: usize,
    pub holds: bool,
    pub clauses: Vec<Clause>,
}

/// `dim(tr(C1) ∩ tr(C2))` against `deg lcm(g1, g2) - rank(G1 ⊙ₐ H2^T) - (n - k1)`,
/// where `g_i` generates `S_{C_i}`.
pub fn trace_pair_ell(c1: &ConjuCode, c2: &ConjuCode) -> Result<TracePairEll> {
    if c1.tower() != c2.tower() {
        return Err(Error::FieldMismatch);
    }
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch(c1.n(), c2.n()));
    }
    if c1.tower().base().characteristic() != 2 {
        return Err(Error::OddCharacteristicRestriction);
    }
    let n = c1.n();
    let (t1, t2) = (trace_code(c1).row_space(), trace_code(c2).row_space());
    let ell = t1.intersect(&t2)?.dim();
    let s1 = largest_subfield_subcode(c1).code;
    let s2 = largest_subfield_subcode(c2).code;
    let deg_lcm = lcm(s1.generator(), s2.generator())?.deg();
    let x = acc_intersection(c1, c2)?;
    let formula_value = deg_lcm as i64 - x.rank1 as i64 - (n as i64 - c1.k() as i64);

    let meet = c1.psi_space().intersect(c2.psi_space())?;
    let meet_code = ConjuCode::from_generators(c1.tower(), &meet_basis_in_ext(c1, &meet))?;
    let tr_meet = trace_code(&meet_code).row_space();
    let trace_meet = tr_meet == t1.intersect(&t2)?;
    let s_meet = subfield_subcode_space(&meet_code);
    let subcode_meet = s_meet == s1.row_space().intersect(&s2.row_space())?;

    let holds = ell as i64 == formula_value;
    let clauses = vec![
        Clause::fired(
            "trace-pair-formula",
            holds,
            format!("ell = {ell}, deg lcm - rank - (n - k1) = {deg_lcm} - {} - {}", x.rank1, n as i64 - c1.k() as i64),
        ),
        Clause::fired("trace-commutes-with-intersection", trace_meet, "tr(C1 ∩ C2) = tr(C1) ∩ tr(C2)"),
        Clause::fired("subcode-commutes-with-intersection", subcode_meet, "S of C1 ∩ C2 = S_C1 ∩ S_C2"),
    ];
    Ok(TracePairEll {
        ell,
        formula_value,
        g1: s1.generator().to_canonical(),
        g2: s2.generator().to_canonical(),
        deg_lcm,
        rank1: x.rank1,
        holds,
        clauses,
    })
}

fn meet_basis_in_ext(c: &ConjuCode, meet: &Subspace) -> Matrix {
    let t = c.tower();
    let rows: Vec<Vec<u32>> = meet
        .basis_vecs()
        .iter()
        .map(|v| crate::conju::psi_inverse(t, v).expect("even length"))
        .collect();
    Matrix::from_rows(t.ext(), c.n(), &rows).expect("consistent lengths")
}
