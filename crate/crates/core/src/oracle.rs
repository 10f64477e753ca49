//! Brute-force ground truth by explicit codeword enumeration.
//!
//! Nothing here goes through Ψ, generator polynomials or elimination: codes
//! are expanded into their full word sets and compared as sets.

use std::collections::BTreeSet;

use crate::conju::{alternating_inner, conjucyclic_shift, ConjuCode};
use crate::constacyclic::{constacyclic_shift, ConstaCode, CyclicCode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;
use crate::tower::Tower;

pub const WORD_LIMIT: u64 = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordSet {
    field: Field,
    n: usize,
    words: BTreeSet<Vec<u32>>,
}

fn too_large(count: Option<u64>) -> Result<u64> {
    count
        .filter(|&c| c <= WORD_LIMIT)
        .ok_or_else(|| Error::TooLarge("more than 2^20 words to enumerate".into()))
}

impl WordSet {
    /// Every combination `Σ s_i r_i` with scalars `s_i` drawn from `scalars`.
    pub fn span(field: &Field, n: usize, rows: &[Vec<u32>], scalars: &[u32]) -> Result<WordSet> {
        let s = scalars.len() as u64;
        let total = too_large(s.checked_pow(rows.len() as u32))?;
        let mut words = BTreeSet::new();
        for mut idx in 0..total {
            let mut w = vec![0; n];
            for r in rows {
                let c = scalars[(idx % s) as usize];
                idx /= s;
                if c == 0 {
                    continue;
                }
                for (x, &y) in w.iter_mut().zip(r) {
                    *x = field.add(*x, field.mul(c, y));
                }
            }
            words.insert(w);
        }
        Ok(WordSet { field: field.clone(), n, words })
    }

    /// All of `field^n`.
    pub fn ambient(field: &Field, n: usize) -> Result<WordSet> {
        let q = field.order() as u64;
        let total = too_large(q.checked_pow(n as u32))?;
        let words = (0..total)
            .map(|mut idx| {
                (0..n)
                    .map(|_| {
                        let c = (idx % q) as u32;
                        idx /= q;
                        c
                    })
                    .collect()
            })
            .collect();
        Ok(WordSet { field: field.clone(), n, words })
    }

    pub fn from_words(field: &Field, n: usize, words: impl IntoIterator<Item = Vec<u32>>) -> WordSet {
        WordSet { field: field.clone(), n, words: words.into_iter().collect() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &BTreeSet<Vec<u32>> {
        &self.words
    }

    pub fn contains(&self, w: &[u32]) -> bool {
        self.words.contains(w)
    }

    /// `log_q |A|`, or `None` when the size is not a power of `q`.
    pub fn dim_over(&self, q: u32) -> Option<usize> {
        let mut size = self.len() as u64;
        let mut d = 0;
        while size > 1 {
            if size % q as u64 != 0 {
                return None;
            }
            size /= q as u64;
            d += 1;
        }
        (size == 1).then_some(d)
    }

    fn check_ambient(&self, other: &WordSet) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.n != other.n {
            return Err(Error::AmbientMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn intersection(&self, other: &WordSet) -> Result<WordSet> {
        self.check_ambient(other)?;
        let words = self.words.intersection(&other.words).cloned().collect();
        Ok(WordSet { field: self.field.clone(), n: self.n, words })
    }

    /// `{a + b}` over all pairs.
    pub fn sumset(&self, other: &WordSet) -> Result<WordSet> {
        self.check_ambient(other)?;
        too_large((self.len() as u64).checked_mul(other.len() as u64))?;
        let f = &self.field;
        let mut words = BTreeSet::new();
        for a in &self.words {
            for b in &other.words {
                words.insert(a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect());
            }
        }
        Ok(WordSet { field: self.field.clone(), n: self.n, words })
    }

    pub fn is_additively_closed(&self) -> bool {
        let f = &self.field;
        self.words.contains(&vec![0; self.n])
            && self.words.iter().all(|a| {
                self.words
                    .iter()
                    .all(|b| self.words.contains(&a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect::<Vec<_>>()))
            })
    }

    pub fn is_closed_under(&self, map: impl Fn(&[u32]) -> Vec<u32>) -> bool {
        self.words.iter().all(|w| self.words.contains(&map(w)))
    }

    pub fn map(&self, field: &Field, f: impl Fn(&[u32]) -> Vec<u32>) -> WordSet {
        let words = self.words.iter().map(|w| f(w)).collect();
        WordSet { field: field.clone(), n: self.n, words }
    }

    pub fn filter(&self, keep: impl Fn(&[u32]) -> bool) -> WordSet {
        let words = self.words.iter().filter(|w| keep(w)).cloned().collect();
        WordSet { field: self.field.clone(), n: self.n, words }
    }
}

pub fn enumerate_consta(c: &ConstaCode) -> Result<WordSet> {
    let scalars: Vec<u32> = c.field().elements().collect();
    WordSet::span(c.field(), c.n(), &c.generator_matrix().row_vecs(), &scalars)
}

pub fn enumerate_cyclic(c: &CyclicCode) -> Result<WordSet> {
    enumerate_consta(c.as_constacyclic())
}

/// All GF(q)-combinations of the generator rows of an ACC code.
pub fn enumerate_conju(c: &ConjuCode) -> Result<WordSet> {
    enumerate_additive(c.tower(), c.gen_matrix())
}

pub fn enumerate_additive(tower: &Tower, rows: &Matrix) -> Result<WordSet> {
    WordSet::span(tower.ext(), rows.cols(), &rows.row_vecs(), tower.base_in_ext())
}

/// GF(q)-dimension of `A ∩ B`, where `q` is the order of the scalar field
/// the sets are spanned over.
pub fn brute_intersection_dim(a: &WordSet, b: &WordSet, q: u32) -> Result<usize> {
    let i = a.intersection(b)?;
    i.dim_over(q)
        .ok_or_else(|| Error::DimensionMismatch(format!("{} words is not a power of {q}", i.len())))
}

/// Every vector of GF(q^2)^n with zero alternating product against every word of `a`.
pub fn brute_alternating_dual(tower: &Tower, a: &WordSet) -> Result<WordSet> {
    let ambient = WordSet::ambient(tower.ext(), a.n())?;
    Ok(ambient.filter(|v| {
        a.words()
            .iter()
            .all(|w| alternating_inner(tower, v, w).expect("equal lengths") == 0)
    }))
}

pub fn closed_under_conjucyclic_shift(tower: &Tower, a: &WordSet) -> bool {
    a.is_closed_under(|w| conjucyclic_shift(tower, w))
}

pub fn closed_under_constacyclic_shift(a: &WordSet, lambda: u32) -> bool {
    a.is_closed_under(|w| constacyclic_shift(a.field(), lambda, w))
}

/// Componentwise trace of every word, as words over the subfield.
pub fn brute_trace(tower: &Tower, a: &WordSet) -> WordSet {
    a.map(tower.base(), |w| w.iter().map(|&c| tower.trace(c)).collect())
}

/// Words with every coordinate in the subfield, rewritten over the subfield.
pub fn brute_subfield_subcode(tower: &Tower, a: &WordSet) -> WordSet {
    let inside = a.filter(|w| w.iter().all(|&c| tower.restrict(c).is_some()));
    inside.map(tower.base(), |w| w.iter().map(|&c| tower.restrict(c).expect("filtered")).collect())
}
