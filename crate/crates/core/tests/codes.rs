use codepair::check::all_hold;
use codepair::conju::{acc_intersection, acp_check, odot_a, odot_s_of_psi, ConjuCode};
use codepair::constacyclic::{intersect_same_lambda, pair_verdicts, ConstaCode};
use codepair::factor::{factor_xn_minus_lambda, DEFAULT_SEED};
use codepair::linalg::Matrix;
use codepair::oracle::{
    brute_alternating_dual, brute_intersection_dim, brute_subfield_subcode, brute_trace, closed_under_conjucyclic_shift,
    closed_under_constacyclic_shift, enumerate_additive, enumerate_conju, enumerate_consta, enumerate_cyclic, WordSet,
};
use codepair::trace::{largest_subfield_subcode, trace_code, trace_dim_identity, trace_inside_code, trace_pair_ell};
use codepair::{Error, Field, Tower};
use proptest::prelude::*;

/// A divisor of x^n - lambda chosen by a bitmask over its irreducible factors.
fn divisor_code(f: &Field, n: usize, lambda: u32, mask: u64) -> ConstaCode {
    let fac = factor_xn_minus_lambda(f, n, lambda, DEFAULT_SEED).unwrap();
    let divisors = fac.divisors(f);
    let g = &divisors[(mask as usize) % divisors.len()];
    ConstaCode::build(f, n, lambda, g).unwrap()
}

fn consta_pair() -> impl Strategy<Value = (Field, usize, u32, u32, u64, u64)> {
    prop::sample::select(&[2u32, 3, 4][..]).prop_flat_map(|q| {
        let max_n: usize = if q == 2 { 10 } else { 6 };
        (Just(Field::of_order(q).unwrap()), 1..=max_n, 1..q, 1..q, any::<u64>(), any::<u64>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn same_lambda_intersection_is_lcm((f, n, l, _, m1, m2) in consta_pair()) {
        let (c1, c2) = (divisor_code(&f, n, l, m1), divisor_code(&f, n, l, m2));
        let meet = intersect_same_lambda(&c1, &c2).unwrap();
        let (w1, w2) = (enumerate_consta(&c1).unwrap(), enumerate_consta(&c2).unwrap());
        prop_assert_eq!(&enumerate_consta(&meet).unwrap(), &w1.intersection(&w2).unwrap());
        prop_assert_eq!(meet.k(), n - meet.generator().deg());
    }

    #[test]
    fn pair_clauses_match_oracle((f, n, l1, l2, m1, m2) in consta_pair()) {
        let (c1, c2) = (divisor_code(&f, n, l1, m1), divisor_code(&f, n, l2, m2));
        let v = pair_verdicts(&c1, &c2).unwrap();
        prop_assert!(v.all_hold(), "{:?}", v.clauses);
        let q = f.order();
        let (w1, w2) = (enumerate_consta(&c1).unwrap(), enumerate_consta(&c2).unwrap());
        prop_assert_eq!(v.ell, brute_intersection_dim(&w1, &w2, q).unwrap());
        let (d1, d2) = (enumerate_consta(&c1.dual()).unwrap(), enumerate_consta(&c2.dual()).unwrap());
        prop_assert_eq!(v.dual_ell, brute_intersection_dim(&d1, &d2, q).unwrap());
    }

    #[test]
    fn dual_is_orthogonal_complement((f, n, l, _, m, _) in consta_pair()) {
        let c = divisor_code(&f, n, l, m);
        let d = c.dual();
        prop_assert_eq!(d.lambda(), f.inv(l).unwrap());
        prop_assert_eq!(&d.dual(), &c);
        prop_assert!(c.generator_matrix().mul(&d.generator_matrix().transpose()).unwrap().is_zero());
        let w = enumerate_consta(&c).unwrap();
        prop_assert!(closed_under_constacyclic_shift(&w, l));
        prop_assert!(closed_under_constacyclic_shift(&enumerate_consta(&d).unwrap(), d.lambda()));
    }
}

fn tower() -> impl Strategy<Value = Tower> {
    prop::sample::select(&[4u32, 9][..]).prop_map(|q2| Tower::of_order(q2).unwrap())
}

fn acc_rows(t: &Tower, max_n: usize) -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    let q2 = t.ext().order();
    (1..=max_n).prop_flat_map(move |n| (Just(n), prop::collection::vec(prop::collection::vec(0..q2, n), 1..3)))
}

fn acc_code() -> impl Strategy<Value = ConjuCode> {
    tower().prop_flat_map(|t| {
        let max_n = if t.ext().order() == 4 { 5 } else { 3 };
        (Just(t.clone()), acc_rows(&t, max_n))
    })
    .prop_map(|(t, (n, rows))| ConjuCode::from_generators(&t, &Matrix::from_rows(t.ext(), n, &rows).unwrap()).unwrap())
}

fn gf4_pair() -> impl Strategy<Value = (ConjuCode, ConjuCode)> {
    let t = Tower::of_order(4).unwrap();
    (1..=5usize)
        .prop_flat_map(|n| {
            let rows = move || prop::collection::vec(prop::collection::vec(0..4u32, n), 1..3);
            (Just(n), rows(), rows())
        })
        .prop_map(move |(n, a, b)| {
            let mk = |rows: &[Vec<u32>]| ConjuCode::from_generators(&t, &Matrix::from_rows(t.ext(), n, rows).unwrap()).unwrap();
            (mk(&a), mk(&b))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjucyclic_code_matches_enumeration(c in acc_code()) {
        let t = c.tower();
        let w = enumerate_conju(&c).unwrap();
        prop_assert!(w.is_additively_closed());
        prop_assert!(closed_under_conjucyclic_shift(t, &w));
        prop_assert_eq!(w.dim_over(t.base().order()), Some(c.k()));
        prop_assert_eq!(c.k(), 2 * c.n() - c.psi_generator().deg());
    }

    #[test]
    fn alternating_dual_matches_brute_force(c in acc_code()) {
        prop_assume!(c.n() <= 3);
        let t = c.tower();
        let w = enumerate_conju(&c).unwrap();
        let h = c.parity_matrix();
        let brute = brute_alternating_dual(t, &w).unwrap();
        prop_assert_eq!(h.base_rank(t).unwrap() + c.k(), 2 * c.n());
        prop_assert_eq!(&brute, &enumerate_additive(t, &h).unwrap());
        match c.alternating_dual() {
            Ok(d) => {
                prop_assert_eq!(&enumerate_conju(&d).unwrap(), &brute);
                prop_assert!(d.alternating_dual().unwrap().same_space(&c));
            }
            Err(Error::NotConjucyclic) => {
                prop_assert!(t.base().characteristic() != 2);
                prop_assert!(!closed_under_conjucyclic_shift(t, &brute));
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
        let from_h = ConjuCode::from_parity(t, &h).unwrap();
        prop_assert!(from_h.same_space(&c));
    }

    #[test]
    fn generating_vector_regenerates_the_code(c in acc_code()) {
        prop_assume!(c.k() > 0);
        let again = ConjuCode::from_generator_vector(c.tower(), c.generating_vector()).unwrap();
        prop_assert!(again.same_space(&c));
    }

    #[test]
    fn trace_and_subcode_match_brute_force(c in acc_code()) {
        let t = c.tower();
        let w = enumerate_conju(&c).unwrap();
        let tr = trace_code(&c);
        prop_assert_eq!(brute_trace(t, &w), enumerate_cyclic(&tr).unwrap());
        prop_assert!(trace_inside_code(&c));
        let s = largest_subfield_subcode(&c);
        prop_assert!(s.agrees(), "{:?}", s.clauses);
        prop_assert_eq!(brute_subfield_subcode(t, &w), enumerate_cyclic(&s.code).unwrap());
        let id = trace_dim_identity(&c);
        if t.base().characteristic() == 2 {
            prop_assert!(id.holds, "{:?}", id);
        }
        prop_assert!(all_hold(&id.clauses));
    }

    #[test]
    fn rank_formula_and_acp_match_oracle((c1, c2) in gf4_pair()) {
        let x = acc_intersection(&c1, &c2).unwrap();
        prop_assert!(x.all_hold(), "{:?}", x.clauses);
        let (w1, w2) = (enumerate_conju(&c1).unwrap(), enumerate_conju(&c2).unwrap());
        prop_assert_eq!(x.ell, brute_intersection_dim(&w1, &w2, 2).unwrap());
        let a = acp_check(&c1, &c2).unwrap();
        prop_assert!(all_hold(&a.clauses), "{:?}", a.clauses);
        prop_assert_eq!(a.is_acp, w1.sumset(&w2).unwrap().dim_over(2) == Some(2 * c1.n()));
    }

    #[test]
    fn trace_pair_matches_oracle((c1, c2) in gf4_pair()) {
        let t = c1.tower().clone();
        let tp = trace_pair_ell(&c1, &c2).unwrap();
        prop_assert!(all_hold(&tp.clauses), "{:?}", tp.clauses);
        let (w1, w2) = (enumerate_conju(&c1).unwrap(), enumerate_conju(&c2).unwrap());
        let meet = brute_trace(&t, &w1).intersection(&brute_trace(&t, &w2)).unwrap();
        prop_assert_eq!(meet.dim_over(2), Some(tp.ell));
    }

    #[test]
    fn intersection_dimension_does_not_depend_on_alpha((c1, c2) in gf4_pair()) {
        // ω² is the other primitive element of GF(4)
        let t2 = Tower::with_options(Field::of_order(4).unwrap(), None, Some(3)).unwrap();
        let rebuild = |c: &ConjuCode| ConjuCode::from_generators(&t2, c.gen_matrix()).unwrap();
        let (d1, d2) = (rebuild(&c1), rebuild(&c2));
        prop_assert_eq!(d1.k(), c1.k());
        let w: WordSet = enumerate_conju(&d1).unwrap();
        prop_assert_eq!(&w, &enumerate_conju(&c1).unwrap());
        prop_assert_eq!(acc_intersection(&d1, &d2).unwrap().ell, acc_intersection(&c1, &c2).unwrap().ell);
    }

    #[test]
    fn rank_ignores_the_parity_basis((c1, c2) in gf4_pair(), pivot in any::<prop::sample::Index>()) {
        let t = c1.tower().clone();
        let h = c2.parity_matrix();
        prop_assume!(h.rows() > 0);
        let e = t.ext();
        let p = pivot.index(h.rows());
        // add row p to every other row, then reverse the order
        let mut rows: Vec<Vec<u32>> = h
            .row_vecs()
            .iter()
            .enumerate()
            .map(|(i, r)| if i == p { r.clone() } else { r.iter().zip(h.row(p)).map(|(&a, &b)| e.add(a, b)).collect() })
            .collect();
        rows.reverse();
        let h2 = Matrix::from_rows(e, c2.n(), &rows).unwrap();
        let rank = |m: &Matrix| odot_a(&t, c1.gen_matrix(), m).unwrap().rank();
        prop_assert_eq!(rank(&h), rank(&h2));
        prop_assert_eq!(odot_a(&t, c1.gen_matrix(), &h).unwrap(), odot_s_of_psi(&t, c1.gen_matrix(), &h).unwrap());
    }
}
