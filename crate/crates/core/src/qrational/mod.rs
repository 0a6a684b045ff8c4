//! q-deformed rational numbers.
//!
//! Four independent constructions are provided and are expected to agree:
//! the negative continued fraction, the regular continued fraction with
//! alternating `q`/`q^-1`, the three-term recurrence on negative
//! convergents, and the weighted Farey tree.

mod farey;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::contfrac::{ContinuedFraction, Fraction};
use crate::error::{Error, Result};
use crate::modular::{MatrixZ, QMatrix};
use crate::ring::{IntPoly, LaurentPoly, RatFunc};

pub use farey::{farey_tree, farey_value, FareyNode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Negcf,
    Regcf,
    Recurrence,
    Farey,
}

impl Method {
    pub const ALL: [Method; 4] = [Method::Negcf, Method::Regcf, Method::Recurrence, Method::Farey];

    pub fn name(self) -> &'static str {
        match self {
            Method::Negcf => "negcf",
            Method::Regcf => "regcf",
            Method::Recurrence => "recurrence",
            Method::Farey => "farey",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// A q-rational together with the rational it deforms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRational {
    pub value: RatFunc,
    pub source: Fraction,
}

impl QRational {
    /// `N(q)`.
    pub fn num(&self) -> &IntPoly {
        self.value.num()
    }

    /// `M(q)`.
    pub fn den(&self) -> &IntPoly {
        self.value.den()
    }
}

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn lp(p: LaurentPoly) -> RatFunc {
    RatFunc::from(p)
}

fn negcf_value(x: &Fraction) -> RatFunc {
    let cf = ContinuedFraction::of_negative(x).expect("finite");
    let t = cf.terms();
    let mut v = lp(LaurentPoly::q_int(*t.last().expect("nonempty")));
    for &c in t.iter().rev().skip(1) {
        // [c]_q - q^(c-1)/v
        let tail = lp(LaurentPoly::q_pow(c - 1))
            .checked_div(&v)
            .expect("tails never vanish");
        v = &lp(LaurentPoly::q_int(c)) - &tail;
    }
    v
}

fn regcf_value(x: &Fraction) -> RatFunc {
    let cf = ContinuedFraction::of_regular(x).expect("finite");
    let t = cf.terms();
    let k = t.len() - 1;
    let head = |i: usize, a: i64| {
        if i.is_multiple_of(2) {
            LaurentPoly::q_int(a)
        } else {
            LaurentPoly::q_int_inverse(a)
        }
    };
    let mut v = lp(head(k, t[k]));
    for i in (0..k).rev() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        let tail = lp(LaurentPoly::q_pow(sign * t[i]))
            .checked_div(&v)
            .expect("tails never vanish");
        v = &lp(head(i, t[i])) + &tail;
    }
    v
}

/// Numerators and denominators of the negative convergents, as Laurent
/// polynomials: `N_{i+1} = [c_{i+1}] N_i - q^(c_i - 1) N_{i-1}` with
/// `N_{-1} = 1`, `M_{-1} = 0`, `N_0 = [c_0]`, `M_0 = 1`.
pub fn recurrence_convergents(cf: &ContinuedFraction) -> Vec<(LaurentPoly, LaurentPoly)> {
    let t = cf.terms();
    let mut prev = (LaurentPoly::one(), LaurentPoly::zero());
    let mut cur = (LaurentPoly::q_int(t[0]), LaurentPoly::one());
    let mut out = vec![cur.clone()];
    for i in 1..t.len() {
        let b = LaurentPoly::q_int(t[i]);
        let a = LaurentPoly::q_pow(t[i - 1] - 1);
        let next = (&b * &cur.0 - &a * &prev.0, &b * &cur.1 - &a * &prev.1);
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    out
}

fn recurrence_value(x: &Fraction) -> RatFunc {
    let cf = ContinuedFraction::of_negative(x).expect("finite");
    let (n, m) = recurrence_convergents(&cf).pop().expect("nonempty");
    RatFunc::from_laurent_pair(&n, &m).expect("nonzero convergent")
}

/// `[x]_q` by the chosen method; `[∞]_q = 1/0`.
pub fn q_rational(x: &Fraction, method: Method) -> QRational {
    let value = if x.is_infinite() {
        RatFunc::infinity()
    } else {
        match method {
            Method::Negcf => negcf_value(x),
            Method::Regcf => regcf_value(x),
            Method::Recurrence => recurrence_value(x),
            Method::Farey => farey_value(x),
        }
    };
    QRational {
        value,
        source: x.clone(),
    }
}

/// Runs all four methods and fails if any two disagree.
pub fn q_rational_checked(x: &Fraction) -> Result<QRational> {
    let first = q_rational(x, Method::Negcf);
    for m in &Method::ALL[1..] {
        let other = q_rational(x, *m);
        if other.value != first.value {
            return Err(Error::Inconsistent(format!(
                "[{x}]_q: negcf gives {} but {} gives {}",
                first.value,
                m.name(),
                other.value
            )));
        }
    }
    Ok(first)
}

/// A matrix with second column `(n, m)`, so that it sends `0` to `n/m`.
pub fn matrix_sending_zero_to(x: &Fraction) -> MatrixZ {
    let (n, m) = (x.num().clone(), x.den().clone());
    // a m - n c = 1
    let e = m.extended_gcd(&n);
    let (mut a, mut c) = (e.x, -e.y);
    if e.gcd.is_negative() {
        a = -a;
        c = -c;
    }
    MatrixZ::new(a, n, c, m).expect("coprime column")
}

/// `(q - 1)/q`, the left companion of `0`.
pub fn flat_zero() -> RatFunc {
    RatFunc::reduce(IntPoly::from_i64s(&[-1, 1]), IntPoly::q_pow(1)).expect("nonzero")
}

/// The q-deformation of `L = [[1, 0], [1, 1]] = T S T`: fixes both `0` and
/// `(q - 1)/q`.
pub fn l_q() -> QMatrix {
    let l = MatrixZ::new(1, 0, 1, 1).expect("det 1");
    l.decompose().q_deform()
}

/// `[x]^♭_q = A_q((q - 1)/q)` for any `A` with `A(0) = x`. Computed with two
/// different matrices and checked for agreement.
pub fn left_q_rational(x: &Fraction) -> Result<QRational> {
    let a = matrix_sending_zero_to(x);
    let b = a.mul(&MatrixZ::new(1, 0, 1, 1).expect("det 1"));
    let z = flat_zero();
    let v1 = a.decompose().q_deform().moebius(&z);
    let v2 = b.decompose().q_deform().moebius(&z);
    if v1 != v2 {
        return Err(Error::Inconsistent(format!(
            "left value of {x} depends on the matrix: {v1} vs {v2}"
        )));
    }
    Ok(QRational {
        value: v1,
        source: x.clone(),
    })
}

/// `N_x M_y - M_x N_y` for `x > y`.
pub fn diff_poly(x: &Fraction, y: &Fraction) -> Result<IntPoly> {
    if x <= y {
        return Err(Error::OrderViolation(Box::new(x.clone()), Box::new(y.clone())));
    }
    let qx = q_rational(x, Method::Negcf);
    let qy = q_rational(y, Method::Negcf);
    Ok(qx.num() * qy.den() - qx.den() * qy.num())
}

/// If `p = c q^k` with `c = 1`, returns `k`.
pub fn as_q_power(p: &IntPoly) -> Option<usize> {
    let (body, k) = p.strip_q_power();
    body.is_one().then_some(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Shape {
    pub unimodal: bool,
    pub palindromic: bool,
    pub monic: bool,
}

pub fn is_unimodal(c: &[BigInt]) -> bool {
    let peak = c
        .windows(2)
        .position(|w| w[1] < w[0])
        .unwrap_or(c.len());
    c[peak..].windows(2).all(|w| w[1] <= w[0])
}

pub fn check_shape(p: &IntPoly) -> Shape {
    Shape {
        unimodal: is_unimodal(p.coeffs()),
        palindromic: p.is_palindromic(),
        monic: p.leading().is_some_and(One::is_one),
    }
}

/// `[F_{n+1}/F_n]_q` for the Fibonacci ratios `1, 2, 3/2, 5/3, ...`.
pub fn fibonacci_ratio(n: usize) -> Fraction {
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for _ in 0..n {
        let c = &a + &b;
        a = b;
        b = c;
    }
    Fraction::new(b, a).expect("positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rf;

    fn fr(s: &str) -> Fraction {
        s.parse().unwrap()
    }

    fn all_methods(s: &str) -> RatFunc {
        q_rational_checked(&fr(s)).unwrap().value
    }

    #[test]
    fn small_examples() {
        assert_eq!(all_methods("1/2"), rf(&[0, 1], &[1, 1]));
        assert_eq!(all_methods("5/2"), rf(&[1, 2, 1, 1], &[1, 1]));
        assert_eq!(all_methods("5/3"), rf(&[1, 1, 2, 1], &[1, 1, 1]));
        assert_eq!(all_methods("2/3"), rf(&[0, 1, 1], &[1, 1, 1]));
        assert_eq!(all_methods("0"), RatFunc::zero());
        assert_eq!(all_methods("1"), RatFunc::one());
        assert!(q_rational(&Fraction::infinity(), Method::Farey).value.is_infinity());
    }

    #[test]
    fn negative_values_are_laurent() {
        assert_eq!(all_methods("-1"), rf(&[-1], &[0, 1]));
        assert_eq!(all_methods("-2"), rf(&[-1, -1], &[0, 0, 1]));
        let v = all_methods("-1/2");
        assert_eq!(v.eval_one(), Some(fr("-1/2")));
    }

    #[test]
    fn fibonacci_and_pell_tables() {
        let fib = [
            ("1", rf(&[1], &[1])),
            ("2", rf(&[1, 1], &[1])),
            ("3/2", rf(&[1, 1, 1], &[1, 1])),
            ("5/3", rf(&[1, 1, 2, 1], &[1, 1, 1])),
            ("8/5", rf(&[1, 2, 2, 2, 1], &[1, 2, 1, 1])),
            ("13/8", rf(&[1, 2, 3, 3, 3, 1], &[1, 2, 2, 2, 1])),
            ("21/13", rf(&[1, 3, 4, 5, 4, 3, 1], &[1, 3, 3, 3, 2, 1])),
        ];
        for (x, v) in fib {
            assert_eq!(all_methods(x), v, "{x}");
        }
        assert_eq!(all_methods("12/5"), rf(&[1, 2, 3, 3, 2, 1], &[1, 1, 2, 1]));
        assert_eq!(
            all_methods("29/12"),
            rf(&[1, 3, 5, 6, 6, 5, 2, 1], &[1, 2, 3, 3, 2, 1])
        );
        assert_eq!(
            all_methods("70/29"),
            rf(&[1, 3, 7, 11, 13, 13, 11, 7, 3, 1], &[1, 2, 5, 6, 6, 5, 3, 1])
        );
    }

    #[test]
    fn fibonacci_recurrence() {
        // F_{n+2} = [3]_q F_n - q^2 F_{n-2} on numerators of consecutive ratios
        let nums: Vec<IntPoly> = (0..14)
            .map(|n| q_rational(&fibonacci_ratio(n), Method::Negcf).num().clone())
            .collect();
        let three = IntPoly::q_int(3);
        for n in 2..12 {
            let rhs = &three * &nums[n] - &IntPoly::q_pow(2) * &nums[n - 2];
            assert_eq!(nums[n + 2], rhs, "n = {n}");
        }
    }

    #[test]
    fn left_values() {
        let left = |s: &str| left_q_rational(&fr(s)).unwrap().value;
        assert_eq!(left("0"), flat_zero());
        assert_eq!(left("1"), rf(&[0, 1], &[1]));
        assert_eq!(left("2"), rf(&[1, 0, 1], &[1]));
        assert_eq!(left("inf"), rf(&[1], &[1, -1]));
        for s in ["1/2", "2/3", "-3/5", "7/4"] {
            assert_eq!(left(s).eval_one(), Some(fr(s)));
        }
    }

    #[test]
    fn l_q_fixes_both_zeros() {
        let l = l_q();
        assert_eq!(l.moebius(&RatFunc::zero()), RatFunc::zero());
        assert_eq!(l.moebius(&flat_zero()), flat_zero());
    }

    #[test]
    fn differences() {
        assert_eq!(diff_poly(&fr("5/2"), &fr("2")).unwrap(), IntPoly::q_pow(3));
        assert_eq!(
            diff_poly(&fr("5/2"), &fr("1/2")).unwrap(),
            IntPoly::from_i64s(&[1, 2, 2, 2, 1])
        );
        assert_eq!(diff_poly(&fr("1"), &fr("0")).unwrap(), IntPoly::one());
        assert!(matches!(diff_poly(&fr("0"), &fr("1")), Err(Error::OrderViolation(..))));
    }

    #[test]
    fn shapes() {
        let s = check_shape(&IntPoly::from_i64s(&[1, 1, 2, 1, 1]));
        assert!(s.unimodal && s.palindromic && s.monic);
        assert!(check_shape(&IntPoly::from_i64s(&[1, 3, 4, 5, 4, 3, 1])).unimodal);
        assert!(!check_shape(&IntPoly::from_i64s(&[1, 0, 0, 1])).unimodal);
    }

    #[test]
    fn equivariance_on_a_grid() {
        use crate::modular::Word;
        let words = ["T", "S", "T-1", "T2 S T-1", "S T3 S T-2 S", "T S T S T"];
        for w in words {
            let w: Word = w.parse().unwrap();
            let (m, mq) = (w.matrix(), w.q_deform());
            for s in ["0", "1", "1/2", "-2/3", "5/2", "inf"] {
                let x = fr(s);
                let lhs = q_rational(&m.apply(&x), Method::Negcf).value;
                let rhs = mq.moebius(&q_rational(&x, Method::Negcf).value);
                assert_eq!(lhs, rhs, "{w} at {s}");
            }
        }
    }
}
