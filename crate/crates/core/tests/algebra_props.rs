//! Property tests for the exact coefficient arithmetic: ring axioms,
//! canonical fractions, and exact division round-trips.

use proptest::prelude::*;

use demazure_weights::exact::{qt_div_exact, qt_gcd, LaurentT, QtPoly, RatQT};
use demazure_weights::root_data::rat;

// Exponent and term-count ranges are kept small: fraction reduction uses
// pseudo-remainder sequences whose cost grows steeply with degree.
fn qt_poly() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec(((-2i64..=2), (-2i64..=2), (-5i64..=5)), 0..4).prop_map(|terms| {
        let mut p = QtPoly::zero();
        for (q, t, c) in terms {
            p = p.add(&QtPoly::monomial(q, t, rat(c)));
        }
        p
    })
}

fn qt_small() -> impl Strategy<Value = QtPoly> {
    prop::collection::vec(((0i64..=2), (0i64..=2), (-3i64..=3)), 1..3).prop_map(|terms| {
        let mut p = QtPoly::zero();
        for (q, t, c) in terms {
            p = p.add(&QtPoly::monomial(q, t, rat(c)));
        }
        p
    })
}

fn laurent() -> impl Strategy<Value = LaurentT> {
    prop::collection::vec(((-4i64..=4), (-5i64..=5)), 0..6).prop_map(|terms| {
        let mut p = LaurentT::zero();
        for (e, c) in terms {
            p = p.add(&LaurentT::monomial(e, rat(c)));
        }
        p
    })
}

fn rat_qt() -> impl Strategy<Value = RatQT> {
    (qt_poly(), qt_small()).prop_map(|(n, d)| {
        if d.is_zero() {
            RatQT::from_poly(n)
        } else {
            RatQT::fraction(n, d).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn qt_ring_axioms(a in qt_poly(), b in qt_poly(), c in qt_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_round_trips(a in qt_poly(), b in qt_poly()) {
        prop_assume!(!b.is_zero());
        let prod = a.mul(&b);
        let q = qt_div_exact(&prod, &b);
        prop_assert_eq!(q, Some(a));
    }

    #[test]
    fn gcd_divides_both(a in qt_poly(), b in qt_poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = qt_gcd(&a, &b);
        prop_assert!(qt_div_exact(&a, &g).is_some());
        prop_assert!(qt_div_exact(&b, &g).is_some());
    }

    #[test]
    fn fraction_field_axioms(x in rat_qt(), y in rat_qt(), z in rat_qt()) {
        prop_assert_eq!(x.add(&y), y.add(&x));
        prop_assert_eq!(x.mul(&y), y.mul(&x));
        prop_assert_eq!(x.add(&y).add(&z), x.add(&y.add(&z)));
        prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        prop_assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn fractions_are_canonical(a in qt_poly(), b in qt_small()) {
        prop_assume!(!b.is_zero());
        let x = RatQT::fraction(a.clone(), b.clone()).unwrap();
        // Multiplying back by the original denominator recovers the numerator.
        prop_assert_eq!(x.mul(&RatQT::from_poly(b)), RatQT::from_poly(a));
    }

    #[test]
    fn division_inverts_multiplication(x in rat_qt(), y in rat_qt()) {
        prop_assume!(!y.is_zero());
        let q = x.mul(&y).div(&y).unwrap();
        prop_assert_eq!(q, x);
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }
}
