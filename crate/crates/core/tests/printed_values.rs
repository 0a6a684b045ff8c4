use num_bigint::BigInt;

use qnum_core::contfrac::Fraction;
use qnum_core::fixtures::{self, FixtureValue, Origin};
use qnum_core::qirrational::{metallic, q_irrational, radius_of_surd, CfStream, GOLDEN_RADIUS};
use qnum_core::qrational::{fibonacci_ratio, left_q_rational, q_rational, Method};
use qnum_core::ring::IntPoly;
use qnum_core::snake::q_binomial;

fn frac(s: &str) -> Fraction {
    s.parse().unwrap()
}

#[test]
fn rational_fixtures() {
    for f in fixtures::all() {
        let name = f.name();
        if !(name.starts_with("rat-") || name.starts_with("fib-") || name.starts_with("pell-")) {
            continue;
        }
        assert_eq!(f.origin(), Origin::Transcribed);
        let x = frac(f.input().unwrap());
        assert_eq!(&q_rational(&x, Method::Regcf).value, f.ratfunc().unwrap(), "{name}");
    }
}

#[test]
fn fibonacci_ratios_cover_the_table() {
    let mut seen = 0;
    for n in 0..8 {
        let x = fibonacci_ratio(n);
        if let Some(f) = fixtures::get(&format!("fib-{x}")) {
            assert_eq!(&q_rational(&x, Method::Farey).value, f.ratfunc().unwrap(), "{x}");
            seen += 1;
        }
    }
    assert_eq!(seen, 6);
}

#[test]
fn left_values() {
    for (name, x) in [("left-0", "0"), ("left-1", "1"), ("left-2", "2"), ("left-inf", "1/0")] {
        let want = fixtures::expect(name).ratfunc().unwrap();
        assert_eq!(&left_q_rational(&frac(x)).unwrap().value, want, "{name}");
    }
}

#[test]
fn pi_from_bundled_expansion() {
    let text = include_str!("../data/pi.cf");
    let terms: Vec<i64> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .take(60)
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(&terms[..5], &[3, 7, 15, 1, 292]);
    let s = q_irrational(&CfStream::Prefix(terms), 49).unwrap();
    assert_eq!(&s, fixtures::expect("pi-series").series().unwrap());
}

#[test]
fn golden_series_and_radius() {
    let s = q_irrational(&CfStream::constant(1), 16).unwrap();
    assert_eq!(&s, fixtures::expect("golden-series").series().unwrap());
    assert_eq!(s.coeff(16), BigInt::from(30372));
    let r = radius_of_surd(&metallic(1).unwrap()).unwrap();
    assert!((r.value - GOLDEN_RADIUS).abs() < 1e-9);
}

#[test]
fn golden_equation() {
    let FixtureValue::PolyList(want) = &fixtures::expect("golden-equation").value else {
        panic!("golden-equation is not a polynomial list");
    };
    assert_eq!(metallic(1).unwrap().quadratic().to_vec(), *want);
}

#[test]
fn pascal_row() {
    assert_eq!(q_binomial(4, 2).unwrap(), IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
}
