//! Exhaustive sweeps over all divisor pairs `(g1 | x^n - λ1, g2 | x^n - λ2)`.

use std::collections::BTreeMap;
use std::io::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::constacyclic::{pair_verdicts, ConstaCode};
use crate::error::{Error, Result};
use crate::factor::factor_xn_minus_lambda;
use crate::field::Field;
use crate::oracle::{brute_intersection_dim, enumerate_consta};

pub const MAX_PAIRS: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub g1: String,
    pub g2: String,
    pub k1: usize,
    pub k2: usize,
    pub ell: usize,
    pub sum_full: bool,
    pub dual_ell: usize,
    pub lcp: bool,
    pub clauses_hold: bool,
    pub failed_clauses: Vec<String>,
    pub oracle_ell: Option<usize>,
    pub oracle_dual_ell: Option<usize>,
}

impl PairRow {
    pub fn oracle_agrees(&self) -> bool {
        self.oracle_ell.map_or(true, |e| e == self.ell) && self.oracle_dual_ell.map_or(true, |e| e == self.dual_ell)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub q: u32,
    pub n: usize,
    pub lambda1: u32,
    pub lambda2: u32,
    pub pairs: Vec<PairRow>,
    pub ell_distribution: BTreeMap<usize, usize>,
    pub clause_violations: usize,
    pub oracle_mismatches: usize,
}

impl SweepReport {
    pub fn all_hold(&self) -> bool {
        self.clause_violations == 0 && self.oracle_mismatches == 0
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Parse(format!("csv output: {e}"));
        w.write_record([
            "g1", "g2", "k1", "k2", "ell", "sum_full", "dual_ell", "lcp", "clauses_hold", "oracle_ell", "oracle_dual_ell",
        ])
        .map_err(io)?;
        for r in &self.pairs {
            let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
            w.write_record([
                r.g1.clone(),
                r.g2.clone(),
                r.k1.to_string(),
                r.k2.to_string(),
                r.ell.to_string(),
                r.sum_full.to_string(),
                r.dual_ell.to_string(),
                r.lcp.to_string(),
                r.clauses_hold.to_string(),
                opt(r.oracle_ell),
                opt(r.oracle_dual_ell),
            ])
            .map_err(io)?;
        }
        w.flush().map_err(|e| Error::Parse(format!("csv output: {e}")))?;
        Ok(())
    }
}

/// Every clause on every divisor pair; with `verify`, each
/// intersection dimension is also recomputed by enumeration.
pub fn sweep_pairs(field: &Field, n: usize, lambda1: u32, lambda2: u32, seed: u64, verify: bool) -> Result<SweepReport> {
    let f1 = factor_xn_minus_lambda(field, n, lambda1, seed)?;
    let f2 = factor_xn_minus_lambda(field, n, lambda2, seed)?;
    let count = f1.divisor_count().saturating_mul(f2.divisor_count());
    if count > MAX_PAIRS {
        return Err(Error::TooManyPairs(count));
    }
    let (d1, d2) = (f1.divisors(field), f2.divisors(field));
    let codes1 = d1.iter().map(|g| ConstaCode::build(field, n, lambda1, g)).collect::<Result<Vec<_>>>()?;
    let codes2 = d2.iter().map(|g| ConstaCode::build(field, n, lambda2, g)).collect::<Result<Vec<_>>>()?;
    let pairs: Vec<(usize, usize)> = (0..codes1.len()).flat_map(|i| (0..codes2.len()).map(move |j| (i, j))).collect();
    let q = field.order();
    let pairs = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (c1, c2) = (&codes1[i], &codes2[j]);
            let v = pair_verdicts(c1, c2)?;
            let (oracle_ell, oracle_dual_ell) = if verify {
                let (w1, w2) = (enumerate_consta(c1)?, enumerate_consta(c2)?);
                let (u1, u2) = (enumerate_consta(&c1.dual())?, enumerate_consta(&c2.dual())?);
                (Some(brute_intersection_dim(&w1, &w2, q)?), Some(brute_intersection_dim(&u1, &u2, q)?))
            } else {
                (None, None)
            };
            Ok(PairRow {
                g1: c1.generator().to_canonical(),
                g2: c2.generator().to_canonical(),
                k1: c1.k(),
                k2: c2.k(),
                ell: v.ell,
                sum_full: v.ell_lcp,
                dual_ell: v.dual_ell,
                lcp: v.lcp,
                clauses_hold: v.all_hold(),
                failed_clauses: v.clauses.iter().filter(|c| !c.holds).map(|c| c.name.clone()).collect(),
                oracle_ell,
                oracle_dual_ell,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut ell_distribution = BTreeMap::new();
    for r in &pairs {
        *ell_distribution.entry(r.ell).or_insert(0) += 1;
    }
    Ok(SweepReport {
        q,
        n,
        lambda1,
        lambda2,
        clause_violations: pairs.iter().filter(|r| !r.clauses_hold).count(),
        oracle_mismatches: pairs.iter().filter(|r| !r.oracle_agrees()).count(),
        pairs,
        ell_distribution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::DEFAULT_SEED;

    #[test]
    fn degenerate_length_one() {
        let f = Field::of_order(4).unwrap();
        let r = sweep_pairs(&f, 1, 2, 3, DEFAULT_SEED, true).unwrap();
        assert_eq!(r.pairs.len(), 4);
        assert!(r.all_hold());
    }

    #[test]
    fn csv_has_header_and_rows() {
        let f = Field::of_order(4).unwrap();
        let r = sweep_pairs(&f, 1, 2, 2, DEFAULT_SEED, false).unwrap();
        let mut buf = Vec::new();
        r.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 5);
        assert!(text.starts_with("g1,g2,k1"));
    }

    #[test]
    fn too_many_pairs() {
        let f = Field::of_order(2).unwrap();
        // x^63 - 1 over GF(2) has 13 irreducible factors, so 2^13 divisors
        assert!(matches!(sweep_pairs(&f, 63, 1, 1, DEFAULT_SEED, false), Err(Error::TooManyPairs(_))));
    }
}
