use num_bigint::BigInt;
use qnum_core::analysis::{detect_periodicity, hankel, motzkin_series, somos4_check, Periodicity};
use qnum_core::qirrational::{q_irrational, CfStream};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn golden_coeffs(n: usize) -> Vec<BigInt> {
    let s = q_irrational(&CfStream::constant(1), n as i64 - 1).unwrap();
    s.coeff_range(0, n as i64 - 1)
}

#[test]
fn golden_rows_under_locked_convention() {
    let a = golden_coeffs(100);
    let rows = [
        [1, 1, 1, 0, -1, -1, -1, 0],
        [1, 0, -1, 1, -1, 0, 1, -1],
        [1, 1, 1, 0, -1, -1, -1, 0],
        [1, -1, 0, 0, -1, 1, 0, 0],
    ];
    for (k, row) in rows.iter().enumerate() {
        let h = hankel(&a, k, 8).unwrap();
        assert_eq!(h.values, ints(row), "shift {k}");
        let long = hankel(&a, k, 44).unwrap();
        let p = detect_periodicity(&long.values);
        assert_eq!((p.kind, p.period), (Periodicity::Antiperiodic, 4), "shift {k}");
        assert!(long.values.iter().all(|v| v.magnitude() <= &1u32.into()));
        let somos = somos4_check(&long.values).unwrap();
        if k <= 2 {
            assert!(somos.holds, "shift {k}: {:?}", somos.first_violation);
        }
    }
}

#[test]
fn motzkin_rows() {
    let m = motzkin_series(40);
    let a = m.coeff_range(0, 40);
    assert_eq!(hankel(&a, 0, 12).unwrap().values, ints(&[1; 12]));
    let h1 = hankel(&a, 1, 12).unwrap().values;
    assert_eq!(&h1[..6], &ints(&[1, 1, 0, -1, -1, 0])[..]);
    let p = detect_periodicity(&h1);
    assert_eq!((p.kind, p.period), (Periodicity::Antiperiodic, 3));
}
