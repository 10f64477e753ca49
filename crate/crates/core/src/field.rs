//! Exact arithmetic in GF(p^m) for small prime powers.
//!
//! Elements are encoded as integers in `[0, p^m)` whose base-`p` digits,
//! little-endian, are the coefficients in the polynomial basis
//! `{1, x, ..., x^(m-1)}` modulo a fixed monic irreducible polynomial.
//! Multiplication goes through exp/log tables built once per field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Clone)]
pub struct Field(Arc<FieldData>);

struct FieldData {
    p: u32,
    m: u32,
    order: u32,
    modulus: Vec<u32>,
    // exp has length 2 * (order - 1) so that log a + log b never needs a reduction
    exp: Vec<u32>,
    log: Vec<u32>,
    primitive: u32,
}

impl Field {
    /// Builds GF(p^m) from an explicit modulus, given as `m + 1` ascending
    /// coefficients of a monic irreducible polynomial over GF(p).
    pub fn new(p: u32, m: u32, modulus: Vec<u32>) -> Result<Field> {
        let order = checked_order(p, m)?;
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidField(format!(
                "modulus must have {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidField(format!("modulus coefficients must lie in [0, {p})")));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidField("modulus must be monic".into()));
        }
        if !prime_poly::is_irreducible(&modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {modulus:?} is reducible over GF({p})"
            )));
        }
        Ok(Field::build(p, m, order, modulus))
    }

    /// GF(p^m) with the default modulus: the monic irreducible polynomial of
    /// degree `m` whose lower coefficients have the smallest encoding.
    /// For GF(4) this is x^2 + x + 1, for GF(9) x^2 + 1, for GF(16) x^4 + x + 1.
    pub fn with_default_modulus(p: u32, m: u32) -> Result<Field> {
        let order = checked_order(p, m)?;
        let modulus = default_modulus(p, m);
        Ok(Field::build(p, m, order, modulus))
    }

    /// GF(q) for a prime power `q`, using the default modulus.
    pub fn of_order(q: u32) -> Result<Field> {
        let (p, m) = prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Field::with_default_modulus(p, m)
    }

    fn build(p: u32, m: u32, order: u32, modulus: Vec<u32>) -> Field {
        let slow = SlowArith { p, m, modulus: &modulus };
        let primitive = slow.smallest_primitive(order);
        let n = (order - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; order as usize];
        let mut acc = 1u32;
        for i in 0..n {
            exp[i] = acc;
            log[acc as usize] = i as u32;
            acc = slow.mul(acc, primitive);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        if n == 0 {
            exp[0] = 1;
        }
        Field(Arc::new(FieldData {
            p,
            m,
            order,
            modulus,
            exp,
            log,
            primitive,
        }))
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// True when the field is GF(q^2) for some q, i.e. `m` is even.
    pub fn is_quadratic_extension(&self) -> bool {
        self.0.m % 2 == 0
    }

    /// Order of the subfield fixed by conjugation.
    pub fn base_order(&self) -> Result<u32> {
        if !self.is_quadratic_extension() {
            return Err(Error::NotQuadraticExtension(self.order()));
        }
        Ok(self.0.p.pow(self.0.m / 2))
    }

    pub fn element(&self, code: u32) -> Result<FieldElement> {
        if code >= self.order() {
            return Err(Error::InvalidField(format!(
                "element code {code} out of range for GF({})",
                self.order()
            )));
        }
        Ok(FieldElement { field: self.clone(), code })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), code: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), code: 1 }
    }

    /// The smallest encoding whose multiplicative order is `p^m - 1`.
    pub fn primitive_element(&self) -> FieldElement {
        FieldElement { field: self.clone(), code: self.0.primitive }
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.order()
    }

    /// Embeds an integer into the prime subfield.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.0.p as i64) as u32
    }

    // Raw arithmetic on encodings. Callers guarantee codes are in range.

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        let mut place = 1;
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let d = &self.0;
        d.exp[(d.log[a as usize] + d.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let d = &self.0;
        let n = d.order - 1;
        Ok(d.exp[((n - d.log[a as usize]) % n.max(1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let d = &self.0;
        let n = (d.order - 1) as u64;
        let k = (d.log[a as usize] as u64 * (e % n)) % n;
        d.exp[k as usize]
    }

    /// Multiplication by an element of the prime field given as an integer.
    pub fn scale_int(&self, a: u32, k: u32) -> u32 {
        self.mul(a, k % self.0.p)
    }

    pub fn multiplicative_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let n = (self.order() - 1) as u64;
        let l = self.0.log[a as usize] as u64;
        Some(n / gcd_u64(n, l))
    }

    /// `a^q` in GF(q^2).
    pub fn conjugate(&self, a: u32) -> Result<u32> {
        let q = self.base_order()?;
        Ok(self.pow(a, q as u64))
    }

    /// `a + a^q` in GF(q^2); the result lies in the subfield.
    pub fn trace(&self, a: u32) -> Result<u32> {
        Ok(self.add(a, self.conjugate(a)?))
    }

    /// Base-p digits of an encoding, little-endian, length `m`.
    pub fn digits(&self, a: u32) -> Vec<u32> {
        let p = self.0.p;
        let mut a = a;
        (0..self.0.m)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    /// Symbolic rendering as a polynomial in `w`, the class of `x`.
    pub fn pretty(&self, a: u32) -> String {
        if a == 0 {
            return "0".into();
        }
        let digits = self.digits(a);
        let mut terms = Vec::new();
        for (i, &d) in digits.iter().enumerate().rev() {
            if d == 0 {
                continue;
            }
            let coef = if d == 1 && i > 0 { String::new() } else { d.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            terms.push(format!("{coef}{var}"));
        }
        terms.join("+")
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.0.p, self.0.m, self.0.modulus)
    }
}

/// An element of a [`Field`], carrying its field for mismatch checks.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    code: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn is_zero(&self) -> bool {
        self.code == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    fn wrap(&self, code: u32) -> FieldElement {
        FieldElement { field: self.field.clone(), code }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.add(self.code, other.code)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.sub(self.code, other.code)))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.mul(self.code, other.code)))
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self.wrap(self.field.div(self.code, other.code)?))
    }

    pub fn neg(&self) -> FieldElement {
        self.wrap(self.field.neg(self.code))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.inv(self.code)?))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.wrap(self.field.pow(self.code, e))
    }

    pub fn conjugate(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.conjugate(self.code)?))
    }

    pub fn trace(&self) -> Result<FieldElement> {
        Ok(self.wrap(self.field.trace(self.code)?))
    }

    /// Membership in the subfield of a quadratic extension.
    pub fn in_base_field(&self) -> Result<bool> {
        Ok(self.field.conjugate(self.code)? == self.code)
    }

    pub fn multiplicative_order(&self) -> Option<u64> {
        self.field.multiplicative_order(self.code)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code)
    }
}

fn checked_order(p: u32, m: u32) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::InvalidField(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::InvalidField("extension degree must be at least 1".into()));
    }
    match p.checked_pow(m) {
        Some(q) if q <= MAX_ORDER => Ok(q),
        _ => Err(Error::InvalidField(format!(
            "{p}^{m} exceeds the supported order {MAX_ORDER}"
        ))),
    }
}

pub(crate) fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` as `p^m` when it is a prime power.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut r = q;
    let mut m = 0;
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

fn default_modulus(p: u32, m: u32) -> Vec<u32> {
    let lower = p.pow(m);
    for c in 0..lower {
        let mut poly: Vec<u32> = Vec::with_capacity(m as usize + 1);
        let mut v = c;
        for _ in 0..m {
            poly.push(v % p);
            v /= p;
        }
        poly.push(1);
        if prime_poly::is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

/// Table-free arithmetic used once while building the exp/log tables.
struct SlowArith<'a> {
    p: u32,
    m: u32,
    modulus: &'a [u32],
}

impl SlowArith<'_> {
    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let m = self.m as usize;
        let da = digits(a, p, m);
        let db = digits(b, p, m);
        let mut prod = vec![0u32; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for top in (m..2 * m).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            for (i, &mc) in self.modulus[..m].iter().enumerate() {
                let idx = top - m + i;
                prod[idx] = (prod[idx] + (p - c) * mc % p) % p;
            }
            prod[top] = 0;
        }
        prod[..m].iter().rev().fold(0, |acc, &d| acc * p + d)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn smallest_primitive(&self, order: u32) -> u32 {
        let n = (order - 1) as u64;
        let primes = prime_factors(n);
        (1..order)
            .find(|&c| primes.iter().all(|&r| self.pow(c, n / r) != 1))
            .expect("the multiplicative group is cyclic")
    }
}

fn digits(a: u32, p: u32, m: usize) -> Vec<u32> {
    let mut a = a;
    (0..m)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Minimal polynomial helpers over a prime field, used only to validate moduli.
mod prime_poly {
    fn trim(v: &mut Vec<u32>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = inv_mod(b[db], p);
        while r.len() > db {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            for (i, &bc) in b.iter().enumerate() {
                let idx = top - db + i;
                r[idx] = (r[idx] + (p - c) * bc % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    fn inv_mod(a: u32, p: u32) -> u32 {
        (1..p).find(|&x| a * x % p == 1).expect("nonzero in a prime field")
    }

    /// Trial division by every monic polynomial of degree at most deg/2.
    pub fn is_irreducible(f: &[u32], p: u32) -> bool {
        let deg = f.len() - 1;
        for d in 1..=deg / 2 {
            let count = p.pow(d as u32);
            for c in 0..count {
                let mut g = Vec::with_capacity(d + 1);
                let mut v = c;
                for _ in 0..d {
                    g.push(v % p);
                    v /= p;
                }
                g.push(1);
                if rem(f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}
