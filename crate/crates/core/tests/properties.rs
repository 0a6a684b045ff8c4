use num_traits::Zero;
use proptest::prelude::*;

use qnum_core::contfrac::Fraction;
use qnum_core::modular::{Gen, Word};
use qnum_core::qirrational::{q_irrational, CfStream};
use qnum_core::qrational::{diff_poly, is_unimodal, left_q_rational, q_rational, Method};
use qnum_core::ring::{LaurentPoly, RatFunc};

fn fraction() -> impl Strategy<Value = Fraction> {
    (-200i64..200, 1i64..60).prop_map(|(n, m)| Fraction::new(n, m).unwrap())
}

fn positive_fraction() -> impl Strategy<Value = Fraction> {
    (1i64..300, 1i64..60).prop_map(|(n, m)| Fraction::new(n, m).unwrap())
}

fn value(x: &Fraction) -> RatFunc {
    q_rational(x, Method::Negcf).value
}

fn pair(r: &RatFunc) -> (LaurentPoly, LaurentPoly) {
    (LaurentPoly::from(r.num().clone()), LaurentPoly::from(r.den().clone()))
}

fn q() -> LaurentPoly {
    LaurentPoly::q_pow(1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn shift_by_one(x in fraction()) {
        let (n, d) = pair(&value(&x));
        let want = RatFunc::from_laurent_pair(&(&(&q() * &n) + &d), &d).unwrap();
        prop_assert_eq!(value(&(x + Fraction::from_int(1))), want);
    }

    #[test]
    fn negative_reciprocal(x in fraction()) {
        prop_assume!(!x.num().is_zero());
        let (n, d) = pair(&value(&x));
        let want = RatFunc::from_laurent_pair(&(-&d), &(&q() * &n)).unwrap();
        prop_assert_eq!(value(&-x.recip()), want);
    }

    #[test]
    fn methods_agree(x in fraction()) {
        let v = value(&x);
        for m in Method::ALL {
            prop_assert_eq!(&q_rational(&x, m).value, &v);
        }
    }

    #[test]
    fn specializes_at_one(x in fraction()) {
        prop_assert_eq!(value(&x).eval_one(), Some(x));
    }

    #[test]
    fn left_value_specializes_at_one(x in fraction()) {
        prop_assert_eq!(left_q_rational(&x).unwrap().value.eval_one(), Some(x));
    }

    #[test]
    fn mirror_is_an_involution(x in fraction()) {
        let v = value(&x);
        prop_assert_eq!(v.substitute_q_inverse().substitute_q_inverse(), v);
    }

    #[test]
    fn positive_values_are_unimodal(x in positive_fraction()) {
        let v = value(&x);
        prop_assert!(is_unimodal(v.num().coeffs()));
        prop_assert!(is_unimodal(v.den().coeffs()));
    }

    #[test]
    fn order_gives_positive_difference(x in positive_fraction(), y in positive_fraction()) {
        prop_assume!(x != y);
        let (x, y) = if x > y { (x, y) } else { (y, x) };
        let d = diff_poly(&x, &y).unwrap();
        let (body, _) = d.strip_q_power();
        prop_assert!(body.coeffs().iter().all(|c| c > &0.into()), "{} > {}: {}", x, y, d);
    }

    #[test]
    fn word_action_matches_moebius(gens in prop::collection::vec((any::<bool>(), -3i64..=3), 1..10), x in fraction()) {
        let w = Word::from_gens(gens.into_iter().map(|(s, k)| if s { Gen::S } else { Gen::T(k.into()) }));
        let image = w.matrix().apply(&x);
        prop_assume!(!image.is_infinite());
        let got = w.q_deform().moebius(&value(&x));
        prop_assert_eq!(got, value(&image));
    }

    #[test]
    fn longer_orders_extend_shorter(period in prop::collection::vec(1i64..4, 1..3), order in 4i64..20) {
        let cf = CfStream::periodic(period);
        let short = q_irrational(&cf, order).unwrap();
        let long = q_irrational(&cf, order + 5).unwrap();
        prop_assert!(long.agrees_to(&short, order));
    }
}
