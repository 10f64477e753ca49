//! Additive conjucyclic (ACC) codes over GF(q^2).
//!
//! An ACC code is a GF(q)-subspace of GF(q^2)^n closed under the
//! conjucyclic shift `T(c) = (conj(c_{n-1}), c_0, ..., c_{n-2})`. All linear
//! algebra is done on the image under
//! `Ψ(u) = (tr(α u_0), ..., tr(α u_{n-1}), tr(ᾱ u_0), ..., tr(ᾱ u_{n-1}))`,
//! which carries `T` to the ordinary cyclic shift of length `2n` and the
//! alternating form to the symplectic form.

use serde::{Deserialize, Serialize};

use crate::check::{all_hold, Clause};
use crate::constacyclic::CyclicCode;
use crate::error::{Error, Result};
use crate::linalg::{symplectic_product, Matrix, Subspace};
use crate::poly::Poly;
use crate::tower::Tower;

pub fn conjucyclic_shift(tower: &Tower, c: &[u32]) -> Vec<u32> {
    let n = c.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(tower.conj(c[n - 1]));
    out.extend_from_slice(&c[..n - 1]);
    out
}

/// Ψ as a vector of subfield encodings of length `2n`.
pub fn psi_map(tower: &Tower, u: &[u32]) -> Vec<u32> {
    let f = tower.ext();
    let (a, ab) = (tower.alpha(), tower.alpha_bar());
    let mut out: Vec<u32> = u.iter().map(|&x| tower.trace(f.mul(a, x))).collect();
    out.extend(u.iter().map(|&x| tower.trace(f.mul(ab, x))));
    out
}

pub fn psi_inverse(tower: &Tower, v: &[u32]) -> Result<Vec<u32>> {
    if v.len() % 2 == 1 {
        return Err(Error::OddLength(v.len()));
    }
    let n = v.len() / 2;
    Ok((0..n).map(|i| tower.psi_inverse_pair(v[i], v[n + i])).collect())
}

/// Ψ applied to every row; the result lives over the subfield.
pub fn psi_matrix(tower: &Tower, m: &Matrix) -> Result<Matrix> {
    if m.field() != tower.ext() {
        return Err(Error::FieldMismatch);
    }
    let rows: Vec<Vec<u32>> = (0..m.rows()).map(|r| psi_map(tower, m.row(r))).collect();
    Matrix::from_rows(tower.base(), 2 * m.cols(), &rows)
}

fn psi_inverse_matrix(tower: &Tower, m: &Matrix) -> Matrix {
    let rows: Vec<Vec<u32>> = m
        .row_vecs()
        .iter()
        .map(|r| psi_inverse(tower, r).expect("even length"))
        .collect();
    Matrix::from_rows(tower.ext(), m.cols() / 2, &rows).expect("consistent lengths")
}

/// `(ᾱ^2 - α^2) Σ (u_i conj(v_i) - conj(u_i) v_i)`, returned as a subfield encoding.
pub fn alternating_inner(tower: &Tower, u: &[u32], v: &[u32]) -> Result<u32> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    let f = tower.ext();
    let mut s = 0;
    for (&a, &b) in u.iter().zip(v) {
        s = f.add(s, f.sub(f.mul(a, tower.conj(b)), f.mul(tower.conj(a), b)));
    }
    let value = f.mul(tower.form_scale(), s);
    Ok(tower.restrict(value).expect("alternating form takes subfield values"))
}

/// Pairwise alternating products of the rows of `a` with the rows of `b`.
/// `odot_a(G1, H2)` is the matrix written `G1 ⊙ₐ H2^T`.
pub fn odot_a(tower: &Tower, a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.field() != tower.ext() || b.field() != tower.ext() {
        return Err(Error::FieldMismatch);
    }
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch(format!(
            "rows of length {} against rows of length {}",
            a.cols(),
            b.cols()
        )));
    }
    let mut out = Matrix::zeros(tower.base(), a.rows(), b.rows());
    for i in 0..a.rows() {
        for j in 0..b.rows() {
            out.set(i, j, alternating_inner(tower, a.row(i), b.row(j))?);
        }
    }
    Ok(out)
}

/// Symplectic complement `{x : <x, p>_s = 0 for all p in space}`.
fn symplectic_complement(space: &Subspace) -> Subspace {
    let n2 = space.ambient();
    let m = n2 / 2;
    let f = space.field();
    let rows: Vec<Vec<u32>> = space
        .basis_vecs()
        .into_iter()
        .map(|p| {
            let mut row = p[m..].to_vec();
            row.extend(p[..m].iter().map(|&c| f.neg(c)));
            row
        })
        .collect();
    Matrix::from_rows(f, n2, &rows).expect("consistent lengths").kernel()
}

#[derive(Clone, Debug)]
pub struct ConjuCode {
    tower: Tower,
    n: usize,
    gen_matrix: Matrix,
    psi_space: Subspace,
    psi_image: CyclicCode,
    generating_vector: Vec<u32>,
    parity: Option<Matrix>,
    warnings: Vec<String>,
}

impl ConjuCode {
    fn from_psi_space(tower: &Tower, psi_space: Subspace, gen_matrix: Option<Matrix>) -> Result<ConjuCode> {
        let n = psi_space.ambient() / 2;
        let psi_image = CyclicCode::from_subspace(&psi_space).map_err(|e| match e {
            Error::NotCyclic => Error::NotConjucyclic,
            e => e,
        })?;
        let generating_vector = if psi_image.k() == 0 {
            vec![0; n]
        } else {
            psi_inverse(tower, &psi_image.generator().padded(2 * n)).expect("even length")
        };
        let gen_matrix = gen_matrix.unwrap_or_else(|| psi_inverse_matrix(tower, psi_space.basis()));
        Ok(ConjuCode {
            tower: tower.clone(),
            n,
            gen_matrix,
            psi_space,
            psi_image,
            generating_vector,
            parity: None,
            warnings: Vec::new(),
        })
    }

    /// The code spanned over GF(q) by `a, T(a), ..., T^{2n-1}(a)`. The
    /// generator matrix keeps the independent shifts in shift order.
    pub fn from_generator_vector(tower: &Tower, a: &[u32]) -> Result<ConjuCode> {
        let n = a.len();
        if n == 0 {
            return Err(Error::DimensionMismatch("length must be at least 1".into()));
        }
        check_entries(tower, a)?;
        let mut kept = Vec::new();
        let mut kept_idx = Vec::new();
        let mut span = Subspace::zero(tower.base(), 2 * n);
        let mut shift = a.to_vec();
        for i in 0..2 * n {
            let image = psi_map(tower, &shift);
            if !span.contains(&image) {
                let mut rows = span.basis_vecs();
                rows.push(image);
                span = Subspace::from_rows(tower.base(), 2 * n, &rows)?;
                kept.push(shift.clone());
                kept_idx.push(i);
            }
            shift = conjucyclic_shift(tower, &shift);
        }
        let gen = Matrix::from_rows(tower.ext(), n, &kept)?;
        let mut code = ConjuCode::from_psi_space(tower, span, Some(gen))?;
        code.generating_vector = a.to_vec();
        if kept.is_empty() {
            code.warnings.push("zero generator vector gives the zero code".into());
        } else if kept_idx.iter().enumerate().any(|(i, &j)| i != j) {
            code.warnings.push(format!(
                "the first {} shifts are dependent; kept shifts {:?}",
                kept.len(),
                kept_idx
            ));
        }
        Ok(code)
    }

    /// Smallest ACC code containing every row of `rows`.
    pub fn from_generators(tower: &Tower, rows: &Matrix) -> Result<ConjuCode> {
        if rows.field() != tower.ext() {
            return Err(Error::FieldMismatch);
        }
        let n = rows.cols();
        if n == 0 {
            return Err(Error::DimensionMismatch("length must be at least 1".into()));
        }
        let mut span = psi_matrix(tower, rows)?.row_space();
        loop {
            let mut grown = span.basis_vecs();
            grown.extend(span.basis_vecs().iter().map(|v| cyclic_shift(v)));
            let next = Subspace::from_rows(tower.base(), 2 * n, &grown)?;
            if next.dim() == span.dim() {
                break;
            }
            span = next;
        }
        ConjuCode::from_psi_space(tower, span, None)
    }

    /// The alternating dual of the GF(q)-span of the rows of `h`; `h` is
    /// kept as the parity-check matrix.
    pub fn from_parity(tower: &Tower, h: &Matrix) -> Result<ConjuCode> {
        if h.field() != tower.ext() {
            return Err(Error::FieldMismatch);
        }
        let span = psi_matrix(tower, h)?.row_space();
        let mut code = ConjuCode::from_psi_space(tower, symplectic_complement(&span), None)?;
        code.parity = Some(h.clone());
        Ok(code)
    }

    pub fn zero_code(tower: &Tower, n: usize) -> ConjuCode {
        ConjuCode::from_psi_space(tower, Subspace::zero(tower.base(), 2 * n), None).expect("zero code is cyclic")
    }

    pub fn full_code(tower: &Tower, n: usize) -> ConjuCode {
        ConjuCode::from_psi_space(tower, Subspace::full(tower.base(), 2 * n), None).expect("full space is cyclic")
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dimension over GF(q).
    pub fn k(&self) -> usize {
        self.psi_space.dim()
    }

    pub fn gen_matrix(&self) -> &Matrix {
        &self.gen_matrix
    }

    pub fn psi_space(&self) -> &Subspace {
        &self.psi_space
    }

    pub fn psi_image(&self) -> &CyclicCode {
        &self.psi_image
    }

    /// Generator `𝐠(x)` of the cyclic code Ψ(C) of length `2n`.
    pub fn psi_generator(&self) -> &Poly {
        self.psi_image.generator()
    }

    /// A vector whose conjucyclic shifts span the code: the one supplied at
    /// construction, otherwise `Ψ^{-1}(𝐠)`.
    pub fn generating_vector(&self) -> &[u32] {
        &self.generating_vector
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The supplied parity-check matrix, or a basis of the alternating dual.
    pub fn parity_matrix(&self) -> Matrix {
        match &self.parity {
            Some(h) => h.clone(),
            None => psi_inverse_matrix(&self.tower, symplectic_complement(&self.psi_space).basis()),
        }
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        word.len() == self.n && self.psi_space.contains(&psi_map(&self.tower, word))
    }

    /// `{u : <u, c>_a = 0 for all c in C}`. In odd characteristic `T` negates
    /// one summand of the form, so the dual can fail to be conjucyclic; that
    /// case is `NotConjucyclic`. `parity_matrix` works regardless.
    pub fn alternating_dual(&self) -> Result<ConjuCode> {
        ConjuCode::from_psi_space(&self.tower, symplectic_complement(&self.psi_space), None)
    }

    pub fn same_space(&self, other: &ConjuCode) -> bool {
        self.tower == other.tower && self.psi_space == other.psi_space
    }
}

fn check_entries(tower: &Tower, v: &[u32]) -> Result<()> {
    match v.iter().find(|&&c| c >= tower.ext().order()) {
        Some(bad) => Err(Error::InvalidField(format!(
            "entry {bad} is not an element of GF({})",
            tower.ext().order()
        ))),
        None => Ok(()),
    }
}

fn cyclic_shift(v: &[u32]) -> Vec<u32> {
    let mut out = v.to_vec();
    out.rotate_right(1);
    out
}

fn check_pair(c1: &ConjuCode, c2: &ConjuCode) -> Result<()> {
    if c1.tower != c2.tower {
        return Err(Error::FieldMismatch);
    }
    if c1.n != c2.n {
        return Err(Error::LengthMismatch(c1.n, c2.n));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct AccIntersection {
    pub ell: usize,
    /// Basis of `C1 ∩ C2` over GF(q), in GF(q^2) coordinates.
    pub basis: Matrix,
    pub sum_dim: usize,
    pub rank1: usize,
    pub rank2: usize,
    pub clauses: Vec<Clause>,
}

impl AccIntersection {
    pub fn all_hold(&self) -> bool {
        all_hold(&self.clauses)
    }
}

/// Intersection dimension computed directly, together with the ranks of
/// `G1 ⊙ₐ H2^T` and `G2 ⊙ₐ H1^T`.
pub fn acc_intersection(c1: &ConjuCode, c2: &ConjuCode) -> Result<AccIntersection> {
    check_pair(c1, c2)?;
    let t = &c1.tower;
    let (sum, inter) = c1.psi_space.sum_intersect(&c2.psi_space)?;
    let ell = inter.dim();
    let rank1 = odot_a(t, &c1.gen_matrix, &c2.parity_matrix())?.rank();
    let rank2 = odot_a(t, &c2.gen_matrix, &c1.parity_matrix())?.rank();
    let (k1, k2) = (c1.k() as i64, c2.k() as i64);
    let clauses = vec![
        Clause::fired(
            "rank-gives-intersection-first",
            ell as i64 == k1 - rank1 as i64,
            format!("ell = {ell}, k1 - rank(G1 ⊙ H2^T) = {}", k1 - rank1 as i64),
        ),
        Clause::fired(
            "rank-gives-intersection-second",
            ell as i64 == k2 - rank2 as i64,
            format!("ell = {ell}, k2 - rank(G2 ⊙ H1^T) = {}", k2 - rank2 as i64),
        ),
    ];
    Ok(AccIntersection {
        ell,
        basis: psi_inverse_matrix(t, inter.basis()),
        sum_dim: sum.dim(),
        rank1,
        rank2,
        clauses,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcpCheck {
    pub is_acp: bool,
    pub ell: usize,
    pub rank1: usize,
    pub rank2: usize,
    pub clauses: Vec<Clause>,
}

/// Whether `C1 + C2` is the whole space, and the dimension and rank
/// identities that follow when it is.
pub fn acp_check(c1: &ConjuCode, c2: &ConjuCode) -> Result<AcpCheck> {
    let x = acc_intersection(c1, c2)?;
    let n2 = 2 * c1.n as i64;
    let (k1, k2) = (c1.k() as i64, c2.k() as i64);
    let is_acp = x.sum_dim as i64 == n2;
    let mut clauses = x.clauses;
    clauses.push(Clause::when(
        "acp-dimension",
        is_acp,
        x.ell as i64 == k1 + k2 - n2,
        format!("ell = {}, k1 + k2 - 2n = {}", x.ell, k1 + k2 - n2),
    ));
    clauses.push(Clause::when(
        "acp-rank-first",
        is_acp,
        x.rank1 as i64 == n2 - k2,
        format!("rank(G1 ⊙ H2^T) = {}, 2n - k2 = {}", x.rank1, n2 - k2),
    ));
    clauses.push(Clause::when(
        "acp-rank-second",
        is_acp,
        x.rank2 as i64 == n2 - k1,
        format!("rank(G2 ⊙ H1^T) = {}, 2n - k1 = {}", x.rank2, n2 - k1),
    ));
    Ok(AcpCheck { is_acp, ell: x.ell, rank1: x.rank1, rank2: x.rank2, clauses })
}

/// `Ψ(A) ⊙ₛ Ψ(B)`. With the forms as written this equals `-(A ⊙ₐ B)`,
/// which coincides with `A ⊙ₐ B` in characteristic 2.
pub fn odot_s_of_psi(tower: &Tower, a: &Matrix, b: &Matrix) -> Result<Matrix> {
    symplectic_product(&psi_matrix(tower, a)?, &psi_matrix(tower, b)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrivialityMode {
    /// Every nonzero vector; refused above 2^24 vectors.
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

const EXHAUSTIVE_LIMIT: u64 = 1 << 24;

/// Whether every nonzero vector generates the whole space as a
/// GF(q^2)-linear, T-closed code, so the only linear conjucyclic codes are
/// `{0}` and `GF(q^2)^n`.
pub fn verify_linear_triviality(tower: &Tower, n: usize, mode: TrivialityMode) -> Result<bool> {
    let f = tower.ext();
    let q2 = f.order() as u64;
    let decode = |mut idx: u64| -> Vec<u32> {
        (0..n)
            .map(|_| {
                let c = (idx % q2) as u32;
                idx /= q2;
                c
            })
            .collect()
    };
    match mode {
        TrivialityMode::Exhaustive => {
            let total = q2.checked_pow(n as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT).ok_or_else(|| {
                Error::TooLarge(format!("GF({q2})^{n} has more than 2^24 vectors"))
            })?;
            Ok((1..total).all(|i| linear_closure(tower, &decode(i)).is_full()))
        }
        TrivialityMode::Sampled { count, seed } => {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            Ok((0..count).all(|_| {
                let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..f.order())).collect();
                v.iter().all(|&c| c == 0) || linear_closure(tower, &v).is_full()
            }))
        }
    }
}

/// Smallest GF(q^2)-subspace containing `v` and closed under `T`. Since `T`
/// is only GF(q)-linear, both `T(b)` and `T(α b)` are added for each basis vector `b`.
pub fn linear_closure(tower: &Tower, v: &[u32]) -> Subspace {
    let f = tower.ext();
    let n = v.len();
    let mut span = Subspace::from_rows(f, n, &[v]).expect("one row");
    loop {
        let mut rows = span.basis_vecs();
        for r in span.basis_vecs() {
            let scaled: Vec<u32> = r.iter().map(|&c| f.mul(tower.alpha(), c)).collect();
            rows.push(conjucyclic_shift(tower, &r));
            rows.push(conjucyclic_shift(tower, &scaled));
        }
        let next = Subspace::from_rows(f, n, &rows).expect("consistent lengths");
        if next.dim() == span.dim() {
            return span;
        }
        span = next;
    }
}
