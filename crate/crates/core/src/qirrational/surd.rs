//! Closed forms `(P + sqrt Q)/R` for purely periodic continued fractions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use super::stream::{q_irrational, CfStream};
use crate::error::{Error, Result};
use crate::modular::QMatrix;
use crate::ring::{IntPoly, LaurentPoly, LaurentSeries};

/// `(p + sqrt(q))/r`, the square root taken with positive leading
/// coefficient as a power series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Surd {
    pub p: IntPoly,
    pub q: IntPoly,
    pub r: IntPoly,
}

/// Orders used to pick the branch of a fixed point.
const BRANCH_ORDER: i64 = 20;

impl Surd {
    pub fn new(p: IntPoly, q: IntPoly, r: IntPoly) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if q.is_zero() {
            return Err(Error::NotASquare("zero discriminant".into()));
        }
        Ok(Surd { p, q, r })
    }

    /// Divides out the largest `g` with `g | P`, `g | R` and `g^2 | Q`. The
    /// sign of `g` is chosen so the value is unchanged.
    pub fn simplified(&self) -> Surd {
        let (mut p, mut q, mut r) = (self.p.clone(), self.q.clone(), self.r.clone());
        loop {
            let t = p.gcd(&r).gcd(&q);
            let u = match q.div_exact(&t) {
                Some(rest) => t.gcd(&rest),
                None => IntPoly::one(),
            };
            if u.is_constant() && u.coeff(0).abs().is_one() {
                break;
            }
            // sqrt(Q/u^2) = sqrt(Q)/u needs u to have a positive lowest term
            let u = if u.lowest().is_some_and(|c| c.is_negative()) { -&u } else { u };
            p = p.div_exact(&u).expect("u divides P");
            r = r.div_exact(&u).expect("u divides R");
            q = q.div_exact(&(&u * &u)).expect("u^2 divides Q");
        }
        Surd { p, q, r }
    }

    /// Coefficients `[c0, c1, c2]` of the primitive quadratic
    /// `c2 X^2 + c1 X + c0` vanishing at the value.
    pub fn quadratic(&self) -> [IntPoly; 3] {
        let c0 = &(&self.p * &self.p) - &self.q;
        let c1 = -(&self.p * &self.r).scale(&BigInt::from(2));
        let c2 = &self.r * &self.r;
        let mut g = c2.gcd(&c1).gcd(&c0);
        // keeps c2 = R^2/g with a positive lowest term
        if g.lowest().is_some_and(|c| c.is_negative()) {
            g = -&g;
        }
        [
            c0.div_exact(&g).expect("common factor"),
            c1.div_exact(&g).expect("common factor"),
            c2.div_exact(&g).expect("common factor"),
        ]
    }

    /// Substitutes the value into `a X^2 + b X + c`. The result is
    /// `(U + V sqrt Q)/R^2`; returns `(U, V)`, both zero for a root.
    pub fn substitute(&self, a: &IntPoly, b: &IntPoly, c: &IntPoly) -> (IntPoly, IntPoly) {
        let (p, q, r) = (&self.p, &self.q, &self.r);
        let two = BigInt::from(2);
        let u = &(&(a * &(&(p * p) + q)) + &(&(b * p) * r)) + &(&(c * r) * r);
        let v = &(a * p).scale(&two) + &(b * r);
        (u, v)
    }

    /// Taylor expansion through `q^order`.
    pub fn series(&self, order: i64) -> Result<LaurentSeries> {
        let vr = self.r.valuation().expect("nonzero R") as i64;
        let vq = self.q.valuation().expect("nonzero Q") as i64;
        let mut work = order + vr + vq / 2 + 2;
        for _ in 0..8 {
            let root = LaurentSeries::from_poly(&self.q, work).sqrt()?;
            let num = &LaurentSeries::from_poly(&self.p, work) + &root;
            let s = num.div(&LaurentSeries::from_poly(&self.r, work))?;
            if s.order() >= order {
                return Ok(s.truncate(order));
            }
            work += order - s.order() + 1;
        }
        Err(Error::InsufficientTerms {
            needed: work as usize,
        })
    }

    /// The conjugate `(P - sqrt Q)/R`, written in the same form.
    pub fn conjugate_form(&self) -> Surd {
        Surd {
            p: -&self.p,
            q: self.q.clone(),
            r: -&self.r,
        }
    }

    pub fn to_latex(&self) -> String {
        format!(
            "\\frac{{{} + \\sqrt{{{}}}}}{{{}}}",
            self.p.to_latex(),
            self.q.to_latex(),
            self.r.to_latex()
        )
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + sqrt({}))/({})", self.p, self.q, self.r)
    }
}

/// The closed form for `[k; k, k, ...]`:
/// `P = q[k]_q + (q^k + 1)(q - 1)`, `Q = P^2 + 4q`, `R = 2q`.
pub fn metallic(k: u32) -> Result<Surd> {
    if k == 0 {
        return Err(Error::InvalidArguments("k must be at least 1".into()));
    }
    let k = k as usize;
    let q = IntPoly::q_pow(1);
    let p = &(&q * &IntPoly::q_int(k))
        + &(&(&IntPoly::q_pow(k) + &IntPoly::one()) * &IntPoly::from_i64s(&[-1, 1]));
    let disc = &(&p * &p) + &q.scale(&BigInt::from(4));
    Surd::new(p, disc, q.scale(&BigInt::from(2)))
}

/// The q-deformed matrix of one period, doubled when the period has odd
/// length so that the parity of the deformation is restored.
pub fn period_matrix(period: &[i64]) -> Result<QMatrix> {
    if period.is_empty() {
        return Err(Error::InvalidContinuedFraction("empty period".into()));
    }
    if let Some(t) = period.iter().find(|&&t| t < 1) {
        return Err(Error::InvalidContinuedFraction(format!(
            "periodic term {t} must be at least 1"
        )));
    }
    let reps = if period.len() % 2 == 1 { 2 } else { 1 };
    let mut m = QMatrix::identity();
    for (i, &a) in period.iter().cycle().take(period.len() * reps).enumerate() {
        let (b, c) = if i % 2 == 0 {
            (LaurentPoly::q_int(a), LaurentPoly::q_pow(a))
        } else {
            (LaurentPoly::q_int_inverse(a), LaurentPoly::q_pow(-a))
        };
        let step = QMatrix::from_laurent(b, c, LaurentPoly::one(), LaurentPoly::zero());
        m = m.mul(&step);
    }
    Ok(m)
}

/// `[x]_q` for `x = [a0; a1, ..., a0, a1, ...]` purely periodic, as the
/// fixed point of the period's q-deformed matrix. Of the two roots of the
/// fixed-point quadratic, the one whose expansion matches the continued
/// fraction series is returned.
pub fn quadratic_fixed_point(period: &[i64]) -> Result<Surd> {
    let m = period_matrix(period)?;
    let [a, _, _, d] = m.eval_one();
    let tr = (&a + &d).abs();
    if tr <= BigInt::from(2) {
        return Err(Error::NotHyperbolic(format!("trace {tr} at q = 1")));
    }
    let [a, b, c, d] = m.entries();
    // C X^2 + (D - A) X - B = 0
    let p = a - d;
    let disc = &(&p * &p) + &(b * c).scale(&BigInt::from(4));
    let r = c.scale(&BigInt::from(2));
    let plus = Surd::new(p, disc, r)?.simplified();
    assert!(
        plus.q.is_palindromic_up_to_shift(),
        "discriminant {} is not palindromic",
        plus.q
    );

    let target = q_irrational(&CfStream::periodic(period.to_vec()), BRANCH_ORDER)?;
    if plus.series(BRANCH_ORDER).is_ok_and(|s| s == target) {
        return Ok(plus);
    }
    let minus = plus.conjugate_form();
    if minus.series(BRANCH_ORDER).is_ok_and(|s| s == target) {
        return Ok(minus);
    }
    Err(Error::Inconsistent(format!(
        "neither root of the fixed-point quadratic matches the series of period {period:?}"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn golden_closed_form() {
        let g = metallic(1).unwrap();
        assert_eq!(g.p, p(&[-1, 1, 1]));
        assert_eq!(g.q, &p(&[1, 3, 1]) * &p(&[1, -1, 1]));
        assert_eq!(g.r, p(&[0, 2]));
        assert!(g.q.is_palindromic());
    }

    #[test]
    fn silver_closed_form() {
        let s = metallic(2).unwrap();
        assert_eq!(s.p, p(&[-1, 2, 0, 1]));
        assert_eq!(s.q, &p(&[1, 1, 4, 1, 1]) * &p(&[1, -1, 1]));
        assert_eq!(s.r, p(&[0, 2]));
    }

    #[test]
    fn golden_quadratic() {
        let g = quadratic_fixed_point(&[1]).unwrap();
        let (u, v) = g.substitute(&p(&[0, 1]), &p(&[1, -1, -1]), &p(&[-1]));
        assert!(u.is_zero() && v.is_zero());
        assert_eq!(g.quadratic(), [p(&[-1]), p(&[1, -1, -1]), p(&[0, 1])]);
    }

    #[test]
    fn fixed_points_match_metallic_forms() {
        for k in 1..=6 {
            let fp = quadratic_fixed_point(&[k]).unwrap();
            assert_eq!(fp, metallic(k as u32).unwrap().simplified(), "k = {k}");
        }
    }

    #[test]
    fn series_match_streams() {
        for k in 1..=4 {
            let s = metallic(k).unwrap().series(20).unwrap();
            let t = q_irrational(&CfStream::constant(k as i64), 20).unwrap();
            assert_eq!(s, t, "k = {k}");
        }
        for period in [vec![1, 2], vec![2, 1, 3], vec![1, 1, 4], vec![5]] {
            let surd = quadratic_fixed_point(&period).unwrap();
            let s = surd.series(20).unwrap();
            assert_eq!(s, q_irrational(&CfStream::periodic(period.clone()), 20).unwrap());
            let [c0, c1, c2] = surd.quadratic();
            let (u, v) = surd.substitute(&c2, &c1, &c0);
            assert!(u.is_zero() && v.is_zero(), "{period:?}");
            assert!(surd.q.is_palindromic_up_to_shift());
        }
    }

    #[test]
    fn simplification_removes_common_factors() {
        let g = metallic(1).unwrap();
        let f = p(&[1, 1]);
        let scaled = Surd::new(&g.p * &f, &(&g.q * &f) * &f, &g.r * &f).unwrap();
        assert_eq!(scaled.simplified(), g);
        let neg = Surd::new(-&(&g.p * &f), &(&g.q * &f) * &f, -&(&g.r * &f)).unwrap();
        // dividing by -(1+q) would flip the branch, so (1+q) is used
        assert_eq!(neg.simplified(), g.conjugate_form());
    }

    #[test]
    fn invalid_periods() {
        assert!(quadratic_fixed_point(&[]).is_err());
        assert!(quadratic_fixed_point(&[1, 0]).is_err());
    }
}
