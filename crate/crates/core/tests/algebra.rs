use codepair::factor::{factor, factor_xn_minus_lambda, is_irreducible, DEFAULT_SEED};
use codepair::linalg::{Matrix, Subspace};
use codepair::oracle::{brute_intersection_dim, WordSet};
use codepair::poly::{gcd, lcm};
use codepair::{Field, Poly, Tower};
use proptest::prelude::*;

const ORDERS: [u32; 10] = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27];

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(&ORDERS[..]).prop_map(|q| Field::of_order(q).unwrap())
}

fn field_and_elems(k: usize) -> impl Strategy<Value = (Field, Vec<u32>)> {
    field().prop_flat_map(move |f| {
        let q = f.order();
        (Just(f), prop::collection::vec(0..q, k))
    })
}

fn field_and_polys() -> impl Strategy<Value = (Field, Vec<u32>, Vec<u32>)> {
    field().prop_flat_map(|f| {
        let q = f.order();
        (Just(f), prop::collection::vec(0..q, 0..7), prop::collection::vec(0..q, 1..6))
    })
}

proptest! {
    #[test]
    fn field_axioms((f, e) in field_and_elems(3)) {
        let (a, b, c) = (e[0], e[1], e[2]);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(f.sub(a, b), b), a);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.pow(a, f.order() as u64 - 1), 1);
        }
        prop_assert_eq!(f.pow(a, f.order() as u64), a);
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism((f, e) in field_and_elems(2)) {
        prop_assume!(f.is_quadratic_extension());
        let t = Tower::new(f.clone()).unwrap();
        let (a, b) = (e[0], e[1]);
        let q = t.base().order() as u64;
        prop_assert_eq!(t.conj(a), f.pow(a, q));
        prop_assert_eq!(t.conj(t.conj(a)), a);
        prop_assert_eq!(t.conj(f.mul(a, b)), f.mul(t.conj(a), t.conj(b)));
        prop_assert_eq!(t.embed(t.trace(a)), f.add(a, t.conj(a)));
        let (c0, c1) = t.coordinates(a);
        prop_assert_eq!(f.add(t.embed(c0), f.mul(t.embed(c1), t.alpha())), a);
    }

    #[test]
    fn division_identity((f, a, b) in field_and_polys()) {
        let (a, b) = (Poly::new(&f, a), Poly::new(&f, b));
        prop_assume!(!b.is_zero());
        let (quo, rem) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&quo * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.deg() < b.deg());
    }

    #[test]
    fn gcd_times_lcm((f, a, b) in field_and_polys()) {
        let (a, b) = (Poly::new(&f, a), Poly::new(&f, b));
        prop_assume!(!a.is_zero() && !b.is_zero());
        let (g, l) = (gcd(&a, &b).unwrap(), lcm(&a, &b).unwrap());
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(a.divides(&l) && b.divides(&l));
        prop_assert_eq!(&g * &l, (&a * &b).monic());
    }

    #[test]
    fn factorization_multiplies_back((f, a, _) in field_and_polys()) {
        let p = Poly::new(&f, a);
        prop_assume!(!p.is_zero() && p.deg() > 0);
        let fac = factor(&p, DEFAULT_SEED).unwrap();
        prop_assert_eq!(fac.product(&f), p.monic());
        for (g, _) in &fac.factors {
            prop_assert!(g.is_monic() && is_irreducible(g));
        }
    }

    #[test]
    fn xn_minus_lambda_factors((f, e) in field_and_elems(1), n in 1usize..20) {
        let lambda = if e[0] == 0 { 1 } else { e[0] };
        let fac = factor_xn_minus_lambda(&f, n, lambda, DEFAULT_SEED).unwrap();
        prop_assert_eq!(fac.product(&f), Poly::x_n_minus(&f, n, lambda));
        prop_assert_eq!(fac.divisors(&f).len(), fac.divisor_count());
    }

    #[test]
    fn reciprocal_is_involutive((f, a, _) in field_and_polys()) {
        let p = Poly::new(&f, a);
        prop_assume!(!p.is_zero() && p.coeff(0) != 0);
        let r = p.monic_reciprocal().unwrap();
        prop_assert_eq!(r.monic_reciprocal().unwrap(), p.monic());
    }
}

fn small_space() -> impl Strategy<Value = (Field, usize, Vec<Vec<u32>>, Vec<Vec<u32>>)> {
    prop::sample::select(&[2u32, 3, 4][..]).prop_flat_map(|q| {
        let n = if q == 2 { 1..8usize } else { 1..6usize };
        n.prop_flat_map(move |n| {
            let rows = move || prop::collection::vec(prop::collection::vec(0..q, n), 0..4);
            (Just(Field::of_order(q).unwrap()), Just(n), rows(), rows())
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subspace_intersection_matches_enumeration((f, n, a, b) in small_space()) {
        let (sa, sb) = (Subspace::from_rows(&f, n, &a).unwrap(), Subspace::from_rows(&f, n, &b).unwrap());
        let scalars: Vec<u32> = f.elements().collect();
        let wa = WordSet::span(&f, n, &sa.basis_vecs(), &scalars).unwrap();
        let wb = WordSet::span(&f, n, &sb.basis_vecs(), &scalars).unwrap();
        let (sum, meet) = sa.sum_intersect(&sb).unwrap();
        prop_assert_eq!(meet.dim(), brute_intersection_dim(&wa, &wb, f.order()).unwrap());
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert_eq!(wa.dim_over(f.order()), Some(sa.dim()));
    }

    #[test]
    fn rank_nullity((f, n, a, _) in small_space()) {
        prop_assume!(!a.is_empty());
        let m = Matrix::from_rows(&f, n, &a).unwrap();
        let ker = m.kernel();
        prop_assert_eq!(m.rank() + ker.dim(), n);
        for v in ker.basis_vecs() {
            let col = Matrix::from_rows(&f, n, &[v]).unwrap().transpose();
            prop_assert!(m.mul(&col).unwrap().is_zero());
        }
    }
}
