//! λ-constacyclic codes: construction, duals, and intersection pairs.
//!
//! A code `C = <g>` in `F[x]/(x^n - λ)` has parity polynomial
//! `h = (x^n - λ)/g` and dimension `k = n - deg g`. Same-λ intersections
//! stay constacyclic (generated by `lcm(g1, g2)`); cross-λ intersections in
//! general do not, so they are returned as plain [`Subspace`]s.

use serde::{Deserialize, Serialize};

use crate::check::{all_hold, Clause};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};
use crate::poly::{gcd, lcm, Poly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstaCode {
    field: Field,
    n: usize,
    lambda: u32,
    g: Poly,
    h: Poly,
}

impl ConstaCode {
    /// `<g>` in `F[x]/(x^n - lambda)`; `g` is normalized to be monic.
    pub fn build(field: &Field, n: usize, lambda: u32, g: &Poly) -> Result<ConstaCode> {
        if lambda == 0 {
            return Err(Error::ZeroLambda);
        }
        if n == 0 {
            return Err(Error::DimensionMismatch("length must be at least 1".into()));
        }
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        let modulus = Poly::x_n_minus(field, n, lambda);
        if g.is_zero() || !g.divides(&modulus) {
            return Err(Error::NotADivisor { n });
        }
        let g = g.monic();
        let h = modulus.exact_div(&g)?;
        Ok(ConstaCode { field: field.clone(), n, lambda, g, h })
    }

    pub fn zero_code(field: &Field, n: usize, lambda: u32) -> Result<ConstaCode> {
        ConstaCode::build(field, n, lambda, &Poly::x_n_minus(field, n, lambda))
    }

    pub fn full_code(field: &Field, n: usize, lambda: u32) -> Result<ConstaCode> {
        ConstaCode::build(field, n, lambda, &Poly::one(field))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambda(&self) -> u32 {
        self.lambda
    }

    pub fn generator(&self) -> &Poly {
        &self.g
    }

    pub fn parity(&self) -> &Poly {
        &self.h
    }

    pub fn k(&self) -> usize {
        self.n - self.g.deg()
    }

    /// Rows `x^i g` for `0 <= i < k`.
    pub fn generator_matrix(&self) -> Matrix {
        let rows: Vec<Vec<u32>> = (0..self.k()).map(|i| self.g.shift(i).padded(self.n)).collect();
        Matrix::from_rows(&self.field, self.n, &rows).expect("rows have length n")
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_matrix(&self.generator_matrix())
    }

    /// `C^perp` is `λ^-1`-constacyclic, generated by the monic reciprocal of `h`.
    pub fn dual(&self) -> ConstaCode {
        let lambda_inv = self.field.inv(self.lambda).expect("lambda is nonzero");
        let g = self.h.monic_reciprocal().expect("h(0) divides -lambda, so it is nonzero");
        ConstaCode::build(&self.field, self.n, lambda_inv, &g).expect("reciprocal of h divides x^n - 1/lambda")
    }

    pub fn shift(&self, word: &[u32]) -> Vec<u32> {
        constacyclic_shift(&self.field, self.lambda, word)
    }
}

/// `(c_0, ..., c_{n-1}) -> (λ c_{n-1}, c_0, ..., c_{n-2})`
pub fn constacyclic_shift(field: &Field, lambda: u32, word: &[u32]) -> Vec<u32> {
    let n = word.len();
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(n);
    out.push(field.mul(lambda, word[n - 1]));
    out.extend_from_slice(&word[..n - 1]);
    out
}

/// Whether a subspace is closed under the λ-constacyclic shift.
pub fn is_constacyclic(space: &Subspace, lambda: u32) -> bool {
    space
        .basis_vecs()
        .iter()
        .all(|v| space.contains(&constacyclic_shift(space.field(), lambda, v)))
}

fn check_pair(c1: &ConstaCode, c2: &ConstaCode) -> Result<()> {
    if c1.field != c2.field {
        return Err(Error::FieldMismatch);
    }
    if c1.n != c2.n {
        return Err(Error::LengthMismatch(c1.n, c2.n));
    }
    Ok(())
}

/// `C1 ∩ C2 = <lcm(g1, g2)>` for codes sharing λ.
pub fn intersect_same_lambda(c1: &ConstaCode, c2: &ConstaCode) -> Result<ConstaCode> {
    check_pair(c1, c2)?;
    if c1.lambda != c2.lambda {
        return Err(Error::LambdaMismatch);
    }
    let l = lcm(&c1.g, &c2.g)?;
    if l.deg() > c1.n {
        return ConstaCode::zero_code(&c1.field, c1.n, c1.lambda);
    }
    ConstaCode::build(&c1.field, c1.n, c1.lambda, &l)
}

/// The degree characterization of an ℓ-intersection pair of same-λ codes:
/// `deg lcm(g2, h1) = n - k2 + ℓ` and `deg lcm(g1, h2) = n - k1 + ℓ`.
/// Only valid when `x^n - λ` has simple roots, i.e. `p ∤ n`.
pub fn ell_pair_check(c1: &ConstaCode, c2: &ConstaCode, ell: usize) -> Result<bool> {
    check_pair(c1, c2)?;
    if c1.lambda != c2.lambda {
        return Err(Error::LambdaMismatch);
    }
    let n = c1.n;
    let left = lcm(&c2.g, &c1.h)?.deg();
    let right = lcm(&c1.g, &c2.h)?.deg();
    Ok(left == n - c2.k() + ell && right == n - c1.k() + ell)
}

#[derive(Clone, Debug)]
pub struct CrossIntersection {
    pub intersection: Subspace,
    pub ell: usize,
    pub sum_is_full: bool,
    /// Whether the intersection is closed under the λ1- and λ2-shifts.
    pub closed_under_lambda1: bool,
    pub closed_under_lambda2: bool,
    pub clauses: Vec<Clause>,
}

/// Intersection of a λ1- and a λ2-constacyclic code with λ1 ≠ λ2.
pub fn intersect_cross_lambda(c1: &ConstaCode, c2: &ConstaCode) -> Result<CrossIntersection> {
    check_pair(c1, c2)?;
    if c1.lambda == c2.lambda {
        return Err(Error::SameLambda);
    }
    let (sum, inter) = c1.row_space().sum_intersect(&c2.row_space())?;
    let ell = inter.dim();
    let sum_is_full = sum.is_full();
    let clauses = cross_lambda_clauses(c1, c2, ell, sum_is_full);
    Ok(CrossIntersection {
        closed_under_lambda1: is_constacyclic(&inter, c1.lambda),
        closed_under_lambda2: is_constacyclic(&inter, c2.lambda),
        intersection: inter,
        ell,
        sum_is_full,
        clauses,
    })
}

fn cross_lambda_clauses(c1: &ConstaCode, c2: &ConstaCode, ell: usize, sum_is_full: bool) -> Vec<Clause> {
    let n = c1.n as i64;
    let (k1, k2) = (c1.k() as i64, c2.k() as i64);
    let expected = (k1 + k2 - n).max(0);
    let deg_form = c2.h.deg() as i64 - c1.g.deg() as i64;
    let deg_form_swapped = c1.h.deg() as i64 - c2.g.deg() as i64;
    vec![
        Clause::fired(
            "cross-lambda-dimension",
            ell as i64 == expected,
            format!("ell = {ell}, max(0, k1 + k2 - n) = {expected}"),
        ),
        Clause::when(
            "cross-lambda-degree-form",
            k1 + k2 > n,
            ell as i64 == deg_form && deg_form == deg_form_swapped,
            format!("deg h2 - deg g1 = {deg_form}, deg h1 - deg g2 = {deg_form_swapped}"),
        ),
        Clause::when(
            "nonzero-intersection-fills-space",
            ell > 0,
            sum_is_full,
            format!("dim(C1 + C2) = n: {sum_is_full}"),
        ),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairVerdicts {
    pub ell: usize,
    pub sum_dim: usize,
    pub lcp: bool,
    pub ell_lcp: bool,
    pub dual_ell: usize,
    pub dual_sum_full: bool,
    pub lcd_c1: bool,
    pub lcd_c2: bool,
    pub clauses: Vec<Clause>,
}

impl PairVerdicts {
    pub fn all_hold(&self) -> bool {
        all_hold(&self.clauses)
    }
}

fn hull_dim(c: &ConstaCode) -> Result<usize> {
    Ok(c.row_space().intersect(&c.dual().row_space())?.dim())
}

/// Every intersection-pair statement that applies to `(C1, C2)`, each
/// computed directly by linear algebra and compared with its formula.
pub fn pair_verdicts(c1: &ConstaCode, c2: &ConstaCode) -> Result<PairVerdicts> {
    check_pair(c1, c2)?;
    let n = c1.n;
    let (k1, k2) = (c1.k(), c2.k());
    let (sum, inter) = c1.row_space().sum_intersect(&c2.row_space())?;
    let ell = inter.dim();
    let sum_full = sum.is_full();
    let (d1, d2) = (c1.dual(), c2.dual());
    let (dual_sum, dual_inter) = d1.row_space().sum_intersect(&d2.row_space())?;
    let dual_ell = dual_inter.dim();
    let lcd_c1 = hull_dim(c1)? == 0;
    let lcd_c2 = hull_dim(c2)? == 0;
    let f = &c1.field;

    let mut clauses = vec![Clause::fired(
        "sum-intersection-dimension",
        sum.dim() + ell == k1 + k2,
        format!("dim(C1 + C2) = {}, k1 + k2 - ell = {}", sum.dim(), k1 + k2 - ell),
    )];
    if c1.lambda == c2.lambda {
        let l = lcm(&c1.g, &c2.g)?;
        clauses.push(Clause::fired(
            "lcm-generates-intersection",
            ell == n - l.deg(),
            format!("deg lcm(g1, g2) = {}", l.deg()),
        ));
        // with repeated roots the characterization fails, e.g. g1 = g2 = x + 1, n = 4 over GF(2)
        let simple_roots = n % f.characteristic() as usize != 0;
        clauses.push(Clause::when(
            "lcm-degree-characterization",
            simple_roots,
            ell_pair_check(c1, c2, ell)?,
            format!(
                "deg lcm(g2, h1) = {}, deg lcm(g1, h2) = {}",
                lcm(&c2.g, &c1.h)?.deg(),
                lcm(&c1.g, &c2.h)?.deg()
            ),
        ));
    } else {
        clauses.extend(cross_lambda_clauses(c1, c2, ell, sum_full));
        clauses.push(Clause::when(
            "complementary-dimensions-give-lcp",
            k1 + k2 == n,
            ell == 0 && sum_full,
            format!("k1 + k2 = {}", k1 + k2),
        ));
        clauses.push(Clause::when(
            "exactly-one-side-meets",
            k1 + k2 != n,
            (ell > 0) != (dual_ell > 0),
            format!("ell = {ell}, dual ell = {dual_ell}"),
        ));
        clauses.push(Clause::when(
            "one-side-is-ell-lcp",
            k1 + k2 != n,
            sum_full || dual_sum.is_full(),
            format!("C1 + C2 full: {sum_full}, duals' sum full: {}", dual_sum.is_full()),
        ));
    }
    clauses.push(Clause::fired(
        "dual-intersection-dimension",
        dual_ell + k1 + k2 == n + ell,
        format!("dim(C1^perp ∩ C2^perp) = {dual_ell}, n - (k1 + k2 - ell) = {}", (n + ell) as i64 - (k1 + k2) as i64),
    ));
    for (name, c, lcd) in [("lcd-when-lambda-squared-not-one (C1)", c1, lcd_c1), ("lcd-when-lambda-squared-not-one (C2)", c2, lcd_c2)] {
        clauses.push(Clause::when(
            name,
            f.mul(c.lambda, c.lambda) != 1,
            lcd,
            format!("lambda = {}, hull trivial: {lcd}", c.lambda),
        ));
    }

    Ok(PairVerdicts {
        ell,
        sum_dim: sum.dim(),
        lcp: ell == 0 && sum_full,
        ell_lcp: sum_full,
        dual_ell,
        dual_sum_full: dual_sum.is_full(),
        lcd_c1,
        lcd_c2,
        clauses,
    })
}

/// A cyclic code `<g>` with `g | x^n - 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicCode {
    inner: ConstaCode,
}

impl CyclicCode {
    pub fn new(field: &Field, n: usize, g: &Poly) -> Result<CyclicCode> {
        Ok(CyclicCode { inner: ConstaCode::build(field, n, 1, g)? })
    }

    pub fn zero_code(field: &Field, n: usize) -> CyclicCode {
        CyclicCode { inner: ConstaCode::zero_code(field, n, 1).expect("n >= 1") }
    }

    /// Generator extracted as `gcd(x^n - 1, all basis word polynomials)`;
    /// errors when the subspace is not cyclic.
    pub fn from_subspace(space: &Subspace) -> Result<CyclicCode> {
        let field = space.field();
        let n = space.ambient();
        let g = space
            .basis_vecs()
            .into_iter()
            .try_fold(Poly::x_n_minus(field, n, 1), |acc, v| gcd(&acc, &Poly::new(field, v)))?;
        let code = CyclicCode::new(field, n, &g)?;
        if code.row_space() != *space {
            return Err(Error::NotCyclic);
        }
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn k(&self) -> usize {
        self.inner.k()
    }

    pub fn field(&self) -> &Field {
        &self.inner.field
    }

    pub fn generator(&self) -> &Poly {
        &self.inner.g
    }

    pub fn parity(&self) -> &Poly {
        &self.inner.h
    }

    pub fn generator_matrix(&self) -> Matrix {
        self.inner.generator_matrix()
    }

    pub fn row_space(&self) -> Subspace {
        self.inner.row_space()
    }

    pub fn as_constacyclic(&self) -> &ConstaCode {
        &self.inner
    }
}
