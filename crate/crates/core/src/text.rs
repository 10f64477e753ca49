//! Textual formats for elements, polynomials, vectors and matrices.
//!
//! A plain decimal number is an element encoding. Anything else is read as
//! a symbolic expression in `w` (the class of `x` in the field's modulus)
//! and, for polynomials, `x`: `w^2`, `2w+1`, `x^3 + (w+1)*x + 1`,
//! `(x+w)(x^3+w*x^2+1)`. Integer literals inside expressions are multiples
//! of 1.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::poly::Poly;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_element(field: &Field, s: &str) -> Result<u32> {
    let s = s.trim();
    if !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
        let code: u32 = s.parse().map_err(|_| parse_err(format!("bad element {s:?}")))?;
        if code >= field.order() {
            return Err(parse_err(format!("{code} is not an element of GF({})", field.order())));
        }
        return Ok(code);
    }
    let p = Parser::new(field, s, false).parse_all()?;
    match p.degree() {
        None => Ok(0),
        Some(0) => Ok(p.coeff(0)),
        Some(_) => Err(parse_err(format!("{s:?} is not a field element"))),
    }
}

/// Comma-separated ascending coefficients, or a symbolic expression in `x`.
pub fn parse_poly(field: &Field, s: &str) -> Result<Poly> {
    let s = s.trim();
    if s.contains('x') {
        return Parser::new(field, s, true).parse_all();
    }
    let coeffs = s.split(',').map(|c| parse_element(field, c)).collect::<Result<Vec<_>>>()?;
    Ok(Poly::new(field, coeffs))
}

pub fn parse_vector(field: &Field, s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
    if s.trim().is_empty() {
        return Err(parse_err("empty vector"));
    }
    s.split(',').map(|c| parse_element(field, c)).collect()
}

/// Rows separated by `;` with entries separated by `,`, or a JSON array of arrays.
pub fn parse_matrix(field: &Field, s: &str) -> Result<Matrix> {
    let s = s.trim();
    let rows: Vec<Vec<u32>> = if s.starts_with("[[") || s.starts_with("[ [") || s == "[]" {
        let raw: Vec<Vec<serde_json::Value>> =
            serde_json::from_str(s).map_err(|e| parse_err(format!("bad JSON matrix: {e}")))?;
        raw.iter()
            .map(|row| {
                row.iter()
                    .map(|v| match v {
                        serde_json::Value::Number(n) => parse_element(field, &n.to_string()),
                        serde_json::Value::String(t) => parse_element(field, t),
                        other => Err(parse_err(format!("bad matrix entry {other}"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?
    } else {
        s.split(';').filter(|r| !r.trim().is_empty()).map(|r| parse_vector(field, r)).collect::<Result<_>>()?
    };
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(field, cols, &rows)
}

pub fn format_vector(v: &[u32]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

struct Parser<'a> {
    field: &'a Field,
    chars: Vec<char>,
    pos: usize,
    allow_x: bool,
}

impl<'a> Parser<'a> {
    fn new(field: &'a Field, s: &str, allow_x: bool) -> Parser<'a> {
        Parser { field, chars: s.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0, allow_x }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Poly> {
        if self.chars.is_empty() {
            return Err(parse_err("empty expression"));
        }
        let p = self.expr()?;
        match self.peek() {
            None => Ok(p),
            Some(c) => Err(parse_err(format!("unexpected {c:?} at position {}", self.pos))),
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op) = self.peek().filter(|&c| c == '+' || c == '-') {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some('(' | 'w' | 'x') => acc = &acc * &self.factor()?,
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.integer()?;
        let mut out = Poly::one(self.field);
        for _ in 0..e {
            out = &out * &base;
        }
        Ok(out)
    }

    fn integer(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(parse_err(format!("expected a number at position {start}")));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse().map_err(|_| parse_err(format!("number {s} out of range")))
    }

    fn atom(&mut self) -> Result<Poly> {
        let f = self.field;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(parse_err("missing ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('w') => {
                self.pos += 1;
                if f.degree() < 2 {
                    return Err(parse_err(format!("GF({}) has no symbol w", f.order())));
                }
                Ok(Poly::constant(f, f.characteristic()))
            }
            Some('x') if self.allow_x => {
                self.pos += 1;
                Ok(Poly::x(f))
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                let reduced = (v % f.characteristic() as u64) as i64;
                Ok(Poly::constant(f, f.from_int(reduced)))
            }
            Some(c) => Err(parse_err(format!("unexpected {c:?} at position {}", self.pos))),
            None => Err(parse_err("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elements() {
        let f = Field::of_order(4).unwrap();
        assert_eq!(parse_element(&f, "3").unwrap(), 3);
        assert_eq!(parse_element(&f, "w").unwrap(), 2);
        assert_eq!(parse_element(&f, "w^2").unwrap(), 3);
        assert_eq!(parse_element(&f, "w+1").unwrap(), 3);
        assert_eq!(parse_element(&f, "1+w").unwrap(), 3);
        assert!(parse_element(&f, "4").is_err());
        let g = Field::of_order(9).unwrap();
        assert_eq!(parse_element(&g, "2w+1").unwrap(), 7);
        assert_eq!(parse_element(&g, "-w").unwrap(), 6);
        assert!(parse_element(&Field::of_order(5).unwrap(), "w").is_err());
    }

    #[test]
    fn polys() {
        let f = Field::of_order(4).unwrap();
        let p = parse_poly(&f, "1,2,0,1").unwrap();
        assert_eq!(p, parse_poly(&f, "x^3 + w*x + 1").unwrap());
        assert_eq!(p, parse_poly(&f, "x^3+wx+1").unwrap());
        assert_eq!(parse_poly(&f, "1,w,0,1").unwrap(), p);
        let prod = parse_poly(&f, "(x+w)(x^3+w*x^2+1)").unwrap();
        assert_eq!(prod, &parse_poly(&f, "2,1").unwrap() * &parse_poly(&f, "1,0,2,1").unwrap());
        assert!(parse_poly(&f, "x^3+").is_err());
        assert!(parse_poly(&f, "(x+1").is_err());
    }

    #[test]
    fn matrices() {
        let f = Field::of_order(4).unwrap();
        let a = parse_matrix(&f, "1,2;3,0").unwrap();
        let b = parse_matrix(&f, "[[1,2],[3,0]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_matrix(&f, "[[\"w\",1]]").unwrap().row(0), &[2, 1]);
        assert!(parse_matrix(&f, "1,2;3").is_err());
        assert_eq!(parse_vector(&f, "(1,w,0)").unwrap(), vec![1, 2, 0]);
    }
}
