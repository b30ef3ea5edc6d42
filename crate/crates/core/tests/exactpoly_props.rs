use num_traits::{Signed, Zero};
use proptest::prelude::*;
use realsep::exactpoly::{self, Bound, IsolatedRoot, PolyError, RatPoly};
use realsep::rational::{frac, int};
use realsep::Rational;

fn small_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(-9i64..=9, 1..=9).prop_map(|c| RatPoly::from_ints(&c))
}

fn distinct_roots() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::btree_set((-30i64..=30, 1i64..=4), 0..=6).prop_map(|s| {
        let set: std::collections::BTreeSet<Rational> =
            s.into_iter().map(|(p, q)| frac(p, q)).collect();
        set.into_iter().collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn isolation_matches_sturm_count(p in small_poly()) {
        prop_assume!(!p.is_zero());
        let sf = p.squarefree_part();
        let iso = exactpoly::isolate_roots(&sf).unwrap();
        prop_assert_eq!(iso.root_count(), exactpoly::real_root_count(&sf).unwrap());
        prop_assert_eq!(exactpoly::real_root_count(&sf).unwrap(), exactpoly::real_root_count(&p).unwrap());
        for r in iso.roots() {
            match r {
                IsolatedRoot::Exact(x) => prop_assert!(sf.eval(&x).is_zero()),
                IsolatedRoot::Interval(lo, hi) => {
                    prop_assert!(lo < hi);
                    let n = exactpoly::sturm_count(&sf, &Bound::Finite(lo), &Bound::Finite(hi)).unwrap();
                    prop_assert_eq!(n, 1);
                }
            }
        }
    }

    #[test]
    fn product_of_linear_factors_counts_its_roots(roots in distinct_roots(), extra in 0u32..2) {
        // x^2 + 1 adds no real roots and keeps the product squarefree.
        let q = RatPoly::from_ints(&[1, 0, 1]).pow(extra);
        let p = &RatPoly::from_roots(&roots) * &q;
        prop_assert_eq!(exactpoly::real_root_count(&p).unwrap(), roots.len());
        let iso = exactpoly::isolate_roots(&p).unwrap();
        prop_assert_eq!(iso.root_count(), roots.len());
        // Every rational root is reported exactly.
        prop_assert_eq!(iso.exact_roots, roots);
    }

    #[test]
    fn multiplicity_count_of_powers(roots in distinct_roots(), e in 1u32..4) {
        let p = RatPoly::from_roots(&roots).pow(e);
        prop_assert_eq!(exactpoly::real_root_count(&p).unwrap(), roots.len());
        prop_assert_eq!(
            exactpoly::real_root_count_with_multiplicity(&p).unwrap(),
            roots.len() * e as usize
        );
    }

    #[test]
    fn counts_add_over_a_split_point(p in small_poly(), c in -40i64..40) {
        prop_assume!(!p.is_zero());
        let c = frac(c, 3);
        let mid = Bound::Finite(c);
        let left = exactpoly::sturm_count(&p, &Bound::NegInf, &mid).unwrap();
        let right = exactpoly::sturm_count(&p, &mid, &Bound::PosInf).unwrap();
        prop_assert_eq!(left + right, exactpoly::real_root_count(&p).unwrap());
    }

    #[test]
    fn grid_sign_changes_bound_the_count(p in small_poly()) {
        prop_assume!(!p.is_zero());
        // Each strict sign change on a grid of rationals encloses a root.
        let b = p.cauchy_bound();
        let steps = 64;
        let xs: Vec<Rational> = (0..=steps)
            .map(|k| -&b + &b * int(2) * frac(k, steps))
            .collect();
        let signs: Vec<i8> = xs
            .iter()
            .map(|x| {
                let v = p.eval(x);
                if v.is_zero() { 0 } else if v.is_positive() { 1 } else { -1 }
            })
            .filter(|s| *s != 0)
            .collect();
        let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
        prop_assert!(changes <= exactpoly::real_root_count(&p).unwrap());
    }

    #[test]
    fn positive_polynomials_are_positive(p in small_poly(), xs in prop::collection::vec((-50i64..50, 1i64..7), 8)) {
        prop_assume!(!p.is_zero());
        let sq = &(&p * &p) + &RatPoly::constant(frac(1, 7));
        prop_assert!(exactpoly::is_positive_on_reals(&sq).unwrap());
        for (a, b) in &xs {
            let x = frac(*a, *b);
            prop_assert!(sq.eval(&x).is_positive());
        }
        if exactpoly::is_positive_on_reals(&p).unwrap() {
            prop_assert_eq!(exactpoly::real_root_count(&p).unwrap(), 0);
            for (a, b) in &xs {
                prop_assert!(p.eval(&frac(*a, *b)).is_positive());
            }
        }
    }
}

#[test]
fn sextic_plus_one_is_bounded_below() {
    let p = RatPoly::from_ints(&[1, 0, 0, 0, 0, 0, 1]);
    assert!(exactpoly::is_positive_on_reals(&p).unwrap());
    for k in -60..=60 {
        assert!(p.eval(&frac(k, 7)) >= int(1));
    }
    assert_eq!(exactpoly::real_root_count(&p).unwrap(), 0);
}

#[test]
fn zero_polynomial_is_rejected() {
    let z = RatPoly::zero();
    assert_eq!(exactpoly::real_root_count(&z), Err(PolyError::ZeroPolynomial));
    assert_eq!(
        exactpoly::sturm_count(&z, &Bound::NegInf, &Bound::PosInf),
        Err(PolyError::ZeroPolynomial)
    );
}

#[test]
fn refinement_keeps_roots_and_narrows() {
    // x^3 - 2 has one irrational root near 1.26.
    let p = RatPoly::from_ints(&[-2, 0, 0, 1]);
    let iso = exactpoly::isolate_roots(&p).unwrap();
    let fine = iso.refine(&frac(1, 1000));
    assert_eq!(fine.root_count(), 1);
    let (lo, hi) = fine.intervals[0].clone();
    assert!(&hi - &lo <= frac(1, 1000));
    assert!(lo < frac(1260, 1000) && hi > frac(1259, 1000));
}
