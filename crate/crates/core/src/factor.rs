//! Factorization into monic irreducibles: square-free decomposition,
//! distinct-degree splitting, then Cantor–Zassenhaus equal-degree splitting.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{gcd, Poly};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5eed_c0de;

/// Monic irreducible factors with multiplicities, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn product(&self, field: &Field) -> Poly {
        self.factors.iter().fold(Poly::one(field), |acc, (f, e)| {
            (0..*e).fold(acc, |acc, _| &acc * f)
        })
    }

    /// Number of monic divisors, saturating at `usize::MAX`.
    pub fn divisor_count(&self) -> usize {
        self.factors.iter().fold(1usize, |acc, (_, e)| acc.saturating_mul(e + 1))
    }

    /// Every monic divisor, enumerated by exponent vector with the first
    /// factor's exponent varying fastest.
    pub fn divisors(&self, field: &Field) -> Vec<Poly> {
        let mut out = vec![Poly::one(field)];
        for (f, e) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (e + 1));
            let mut power = Poly::one(field);
            let mut powers = Vec::with_capacity(e + 1);
            for _ in 0..=*e {
                powers.push(power.clone());
                power = &power * f;
            }
            for pw in &powers {
                for d in &out {
                    next.push(d * pw);
                }
            }
            out = next;
        }
        out
    }
}

/// Degree first, then coefficients compared from the leading term down.
pub fn canonical_cmp(a: &Poly, b: &Poly) -> std::cmp::Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs().iter().rev().cmp(b.coeffs().iter().rev()))
}

/// Factors `x^n - lambda`.
pub fn factor_xn_minus_lambda(field: &Field, n: usize, lambda: u32, seed: u64) -> Result<Factorization> {
    if lambda == 0 {
        return Err(Error::ZeroLambda);
    }
    if n == 0 {
        return Err(Error::DimensionMismatch("length must be at least 1".into()));
    }
    factor(&Poly::x_n_minus(field, n, lambda), seed)
}

/// Complete factorization of a nonzero polynomial (made monic first).
pub fn factor(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(Poly, usize)> = Vec::new();
    for (part, mult) in square_free(&f.monic()) {
        for (block, d) in distinct_degree(&part) {
            for irr in equal_degree(&block, d, &mut rng) {
                match factors.iter_mut().find(|(g, _)| *g == irr) {
                    Some(entry) => entry.1 += mult,
                    None => factors.push((irr, mult)),
                }
            }
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Ok(Factorization { factors })
}

/// Square-free decomposition of a monic polynomial: pairs `(s, i)` with
/// every `s` square-free and `f = prod s^i`.
pub fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return out;
    }
    let p = field.characteristic() as usize;
    let df = f.derivative();
    let mut c = gcd(f, &df).expect("f is nonzero");
    let mut w = f.exact_div(&c).expect("gcd divides f");
    let mut i = 1;
    while !w.is_one() {
        let y = gcd(&w, &c).expect("w is nonzero");
        let fac = w.exact_div(&y).expect("gcd divides");
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.exact_div(&w).expect("gcd divides");
        i += 1;
    }
    if !c.is_one() {
        let root = pth_root(&c);
        for (g, m) in square_free(&root) {
            out.push((g, m * p));
        }
    }
    out
}

/// For `c(x) = sum a_i x^(i p)`, returns `sum a_i^(1/p) x^i`.
fn pth_root(c: &Poly) -> Poly {
    let f = c.field();
    let p = f.characteristic() as usize;
    // a^(1/p) = a^(p^(m-1)) in GF(p^m)
    let e = (p as u64).pow(f.degree() - 1);
    let coeffs = c
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&a| f.pow(a, e))
        .collect();
    Poly::new(f, coeffs)
}

/// Splits a square-free monic polynomial into products of irreducibles of equal degree.
pub fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    let q = field.order() as u128;
    let x = Poly::x(&field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest).expect("nonzero");
    let mut i = 1;
    while rest.deg() >= 2 * i {
        h = h.pow_mod(q, &rest);
        let g = gcd(&(&h - &x), &rest).expect("rest is nonzero");
        if !g.is_one() {
            rest = rest.exact_div(&g).expect("gcd divides");
            h = h.rem(&rest).expect("nonzero");
            out.push((g, i));
        }
        i += 1;
    }
    if rest.deg() > 0 {
        let d = rest.deg();
        out.push((rest, d));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d`.
pub fn equal_degree<R: Rng>(f: &Poly, d: usize, rng: &mut R) -> Vec<Poly> {
    if f.deg() <= d {
        return vec![f.clone()];
    }
    let field = f.field().clone();
    let q = field.order();
    loop {
        let a = random_poly(&field, f.deg(), rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^((q^d - 1)/2) = (prod_{i<d} a^(q^i))^((q-1)/2)
            let mut t = a.rem(f).expect("nonzero");
            let mut norm = t.clone();
            for _ in 1..d {
                t = t.pow_mod(q as u128, f);
                norm = norm.mul_mod(&t, f);
            }
            let e = norm.pow_mod(((q - 1) / 2) as u128, f);
            &e - &Poly::one(&field)
        } else {
            // absolute trace to GF(2): sum_{i < m d} a^(2^i)
            let rounds = field.degree() as usize * d;
            let mut t = a.rem(f).expect("nonzero");
            let mut s = t.clone();
            for _ in 1..rounds {
                t = t.mul_mod(&t, f);
                s = &s + &t;
            }
            s
        };
        let g = match gcd(&b, f) {
            Ok(g) => g,
            Err(_) => continue,
        };
        if g.deg() > 0 && g.deg() < f.deg() {
            let other = f.exact_div(&g).expect("gcd divides");
            let mut out = equal_degree(&g, d, rng);
            out.extend(equal_degree(&other, d, rng));
            return out;
        }
    }
}

fn random_poly<R: Rng>(field: &Field, below: usize, rng: &mut R) -> Poly {
    let coeffs = (0..below).map(|_| rng.gen_range(0..field.order())).collect();
    Poly::new(field, coeffs)
}

/// Rabin's test.
pub fn is_irreducible(f: &Poly) -> bool {
    let n = match f.degree() {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let field = f.field();
    let f = f.monic();
    let q = field.order() as u128;
    let x = Poly::x(field);
    let frob = |k: usize| -> Poly {
        let mut h = x.rem(&f).expect("nonzero");
        for _ in 0..k {
            h = h.pow_mod(q, &f);
        }
        h
    };
    if !(&frob(n) - &x).rem(&f).expect("nonzero").is_zero() {
        return false;
    }
    let mut m = n;
    let mut r = 2;
    let mut primes = Vec::new();
    while r * r <= m {
        if m % r == 0 {
            primes.push(r);
            while m % r == 0 {
                m /= r;
            }
        }
        r += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    primes
        .into_iter()
        .all(|r| gcd(&(&frob(n / r) - &x), &f).map(|g| g.is_one()).unwrap_or(false))
}
