//! Truncated Laurent series with integer coefficients.
//!
//! A series is known modulo `q^(order+1)`. The stored valuation is the true
//! one (first coefficient nonzero) unless the series is zero to its order, in
//! which case it is stored as a single zero at exponent `order`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::{Integer};
use num_traits::{Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly::{latex_terms, write_terms, IntPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentSeries {
    valuation: i64,
    order: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentSeries {
    /// Builds from coefficients of `q^valuation ..= q^order`; missing
    /// trailing coefficients are zero and extra ones are dropped.
    pub fn new(valuation: i64, order: i64, mut coeffs: Vec<BigInt>) -> Self {
        if order < valuation {
            return Self::zero(order);
        }
        coeffs.resize((order - valuation + 1) as usize, BigInt::zero());
        match coeffs.iter().position(|c| !c.is_zero()) {
            None => Self::zero(order),
            Some(0) => LaurentSeries {
                valuation,
                order,
                coeffs,
            },
            Some(k) => LaurentSeries {
                valuation: valuation + k as i64,
                order,
                coeffs: coeffs.split_off(k),
            },
        }
    }

    pub fn from_i64s(valuation: i64, order: i64, coeffs: &[i64]) -> Self {
        Self::new(valuation, order, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero series known to `order`.
    pub fn zero(order: i64) -> Self {
        LaurentSeries {
            valuation: order,
            order,
            coeffs: vec![BigInt::zero()],
        }
    }

    pub fn one(order: i64) -> Self {
        Self::from_laurent(&LaurentPoly::one(), order)
    }

    pub fn from_poly(p: &IntPoly, order: i64) -> Self {
        Self::from_laurent(&LaurentPoly::from(p.clone()), order)
    }

    pub fn from_laurent(p: &LaurentPoly, order: i64) -> Self {
        if p.is_zero() {
            return Self::zero(order);
        }
        let v = p.valuation();
        if v > order {
            return Self::zero(order);
        }
        Self::new(v, order, (v..=order).map(|e| p.coeff(e)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Exponent of the first nonzero coefficient; `None` if zero to order.
    pub fn valuation(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.valuation)
    }

    /// Stored starting exponent (equals `order` for the zero series).
    pub fn start(&self) -> i64 {
        self.valuation
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficients for exponents `start() ..= order()`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        assert!(e <= self.order, "coefficient q^{e} beyond order {}", self.order);
        if e < self.valuation {
            return BigInt::zero();
        }
        self.coeffs[(e - self.valuation) as usize].clone()
    }

    /// Coefficients of `q^from ..= q^to` (zeros below the valuation).
    pub fn coeff_range(&self, from: i64, to: i64) -> Vec<BigInt> {
        (from..=to).map(|e| self.coeff(e)).collect()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        (!self.is_zero()).then(|| &self.coeffs[0])
    }

    /// Lower bound on the valuation: exact unless the series is zero.
    fn low(&self) -> i64 {
        if self.is_zero() {
            self.order + 1
        } else {
            self.valuation
        }
    }

    /// Number of known coefficients past the leading one.
    fn rel_prec(&self) -> i64 {
        self.order - self.valuation
    }

    pub fn truncate(&self, order: i64) -> Self {
        assert!(order <= self.order, "cannot extend precision");
        if order < self.valuation {
            return Self::zero(order);
        }
        Self::new(
            self.valuation,
            order,
            self.coeffs[..=(order - self.valuation) as usize].to_vec(),
        )
    }

    /// Equal on every exponent up to `upto`, which must not exceed either order.
    pub fn agrees_to(&self, other: &Self, upto: i64) -> bool {
        let from = self.low().min(other.low());
        (from..=upto).all(|e| self.coeff(e) == other.coeff(e))
    }

    /// Agreement up to the smaller of the two orders.
    pub fn agrees(&self, other: &Self) -> bool {
        self.agrees_to(other, self.order.min(other.order))
    }

    /// Largest absolute coefficient (the residual measure used by checks).
    pub fn max_abs(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            valuation: self.valuation + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(
            self.valuation,
            self.order,
            self.coeffs.iter().map(|c| c * k).collect(),
        )
    }

    /// Product with an exact Laurent polynomial.
    pub fn mul_laurent(&self, p: &LaurentPoly) -> Self {
        if p.is_zero() {
            // Exact zero: precision is unbounded, keep the current order.
            return Self::zero(self.order);
        }
        let vp = p.valuation();
        let order = self.order + vp;
        if self.is_zero() {
            return Self::zero(order);
        }
        let v = self.valuation + vp;
        let n = (order - v + 1) as usize;
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in p.body().coeffs().iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        Self::new(v, order, out)
    }

    pub fn add_laurent(&self, p: &LaurentPoly) -> Self {
        self + &Self::from_laurent(p, self.order)
    }

    /// `1/self`; the leading coefficient must divide everything that follows.
    pub fn invert(&self) -> Result<Self> {
        Self::one(self.rel_prec().max(0)).div(self)
    }

    /// Exact series division; `NonIntegral` if a coefficient is not an integer.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let vb = rhs.valuation;
        if self.is_zero() {
            return Ok(Self::zero(self.order - vb));
        }
        let v = self.valuation - vb;
        let prec = self.rel_prec().min(rhs.rel_prec());
        let n = (prec + 1) as usize;
        let b0 = &rhs.coeffs[0];
        let mut out: Vec<BigInt> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs.get(k).cloned().unwrap_or_default();
            for j in 1..=k.min(rhs.coeffs.len() - 1) {
                acc -= &out[k - j] * &rhs.coeffs[j];
            }
            let (quo, rem) = acc.div_rem(b0);
            if !rem.is_zero() {
                return Err(Error::NonIntegral(format!(
                    "coefficient of q^{} in a series quotient",
                    v + k as i64
                )));
            }
            out.push(quo);
        }
        Ok(Self::new(v, v + prec, out))
    }

    /// Square root with positive leading coefficient.
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero((self.low() + 1).div_euclid(2) - 1));
        }
        let t = self.valuation;
        if t % 2 != 0 {
            return Err(Error::NotASquare(format!("odd valuation {t}")));
        }
        let a0 = &self.coeffs[0];
        if a0.is_negative() {
            return Err(Error::NotASquare("negative leading coefficient".into()));
        }
        let r0 = a0.sqrt();
        if &(&r0 * &r0) != a0 {
            return Err(Error::NotASquare(format!("leading coefficient {a0}")));
        }
        let prec = self.rel_prec();
        let n = (prec + 1) as usize;
        let two_r0 = &r0 * 2u32;
        let mut r: Vec<BigInt> = vec![r0];
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..k {
                acc -= &r[j] * &r[k - j];
            }
            let (quo, rem) = acc.div_rem(&two_r0);
            if !rem.is_zero() {
                return Err(Error::NonIntegral(format!(
                    "coefficient of q^{} in a square root",
                    t / 2 + k as i64
                )));
            }
            r.push(quo);
        }
        let v = t / 2;
        Ok(Self::new(v, v + prec, r))
    }

    /// Evaluates `(a s + b)/(c s + d)` for Laurent polynomial coefficients.
    pub fn moebius(
        &self,
        a: &LaurentPoly,
        b: &LaurentPoly,
        c: &LaurentPoly,
        d: &LaurentPoly,
    ) -> Result<Self> {
        let num = self.mul_laurent(a).add_laurent(b);
        let den = self.mul_laurent(c).add_laurent(d);
        num.div(&den)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one(self.rel_prec().max(0));
        }
        let mut acc = self.clone();
        for _ in 1..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let v = self.valuation;
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (v + i as i64, c))
    }

    /// Drops the precision information.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::new(self.valuation, IntPoly::new(self.coeffs.clone()))
    }

    pub fn to_latex(&self) -> String {
        format!("{} + O(q^{{{}}})", latex_terms(self.terms(), "q"), self.order + 1)
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;
    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        let order = self.order.min(rhs.order);
        let v = self.low().min(rhs.low());
        if v > order {
            return LaurentSeries::zero(order);
        }
        let coeffs = (v..=order)
            .map(|e| {
                let a = if e >= self.low() { self.coeff(e) } else { BigInt::zero() };
                let b = if e >= rhs.low() { rhs.coeff(e) } else { BigInt::zero() };
                a + b
            })
            .collect();
        LaurentSeries::new(v, order, coeffs)
    }
}

impl Neg for &LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        LaurentSeries {
            valuation: self.valuation,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;
    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self + &(-rhs)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;
    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        if self.is_zero() || rhs.is_zero() {
            let order = if self.is_zero() && rhs.is_zero() {
                self.order + rhs.order + 1
            } else if self.is_zero() {
                self.order + rhs.valuation
            } else {
                rhs.order + self.valuation
            };
            return LaurentSeries::zero(order);
        }
        let v = self.valuation + rhs.valuation;
        let prec = self.rel_prec().min(rhs.rel_prec());
        let n = (prec + 1) as usize;
        let mut out = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                out[i + j] += a * b;
            }
        }
        LaurentSeries::new(v, v + prec, out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: LaurentSeries) -> LaurentSeries {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentSeries> for LaurentSeries {
            type Output = LaurentSeries;
            fn $m(self, rhs: &LaurentSeries) -> LaurentSeries {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentSeries {
    type Output = LaurentSeries;
    fn neg(self) -> LaurentSeries {
        -&self
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "q")?;
        write!(f, " + O(q^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn s(v: i64, o: i64, c: &[i64]) -> LaurentSeries {
        LaurentSeries::from_i64s(v, o, c)
    }

    #[test]
    fn normalizes_leading_zeros() {
        let a = s(0, 3, &[0, 0, 2, 1]);
        assert_eq!(a.valuation(), Some(2));
        assert_eq!(a.coeff(0), BigInt::zero());
        assert!(s(0, 2, &[0, 0, 0]).is_zero());
    }

    #[test]
    fn sqrt_of_one_minus_four_q() {
        let r = s(0, 4, &[1, -4]).sqrt().unwrap();
        assert_eq!(r, s(0, 4, &[1, -2, -2, -4, -10]));
        assert_eq!(&r * &r, s(0, 4, &[1, -4]));
        assert_eq!(s(0, 5, &[1]).sqrt().unwrap(), s(0, 5, &[1]));
    }

    #[test]
    fn sqrt_rejects_non_squares() {
        assert!(matches!(s(1, 4, &[1]).sqrt(), Err(Error::NotASquare(_))));
        assert!(matches!(s(0, 4, &[2, 1]).sqrt(), Err(Error::NotASquare(_))));
        assert!(matches!(s(0, 4, &[-1]).sqrt(), Err(Error::NotASquare(_))));
        // 4 + q has a square root over Q but not over Z
        assert!(matches!(s(0, 4, &[4, 1]).sqrt(), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn sqrt_with_even_valuation() {
        let r = s(-2, 4, &[4, 4, 1]).sqrt().unwrap();
        assert_eq!(r.valuation(), Some(-1));
        assert_eq!(r.coeff_range(-1, 1), vec![2.into(), 1.into(), 0.into()]);
    }

    #[test]
    fn invert_geometric() {
        let inv = s(0, 3, &[1, 1]).invert().unwrap();
        assert_eq!(inv, s(0, 3, &[1, -1, 1, -1]));
        assert_eq!(s(0, 3, &[0]).invert(), Err(Error::DivisionByZero));
    }

    #[test]
    fn invert_shifted() {
        // 1/(q + q^2) = q^-1 - 1 + q - ...
        let inv = s(1, 4, &[1, 1]).invert().unwrap();
        assert_eq!(inv.valuation(), Some(-1));
        assert_eq!(inv.order(), 2);
        assert_eq!(inv.coeff_range(-1, 2), s(-1, 2, &[1, -1, 1, -1]).coeff_range(-1, 2));
    }

    #[test]
    fn division_checks_integrality() {
        let two_q = s(1, 10, &[2]);
        assert!(s(0, 5, &[2, 4]).div(&two_q).is_ok());
        assert!(matches!(s(0, 5, &[1, 4]).div(&two_q), Err(Error::NonIntegral(_))));
    }

    #[test]
    fn addition_respects_orders() {
        let a = s(0, 3, &[1, 1, 1, 1]);
        let b = s(-1, 1, &[1, 0, 0]);
        let c = &a + &b;
        assert_eq!(c.order(), 1);
        assert_eq!(c.valuation(), Some(-1));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(s(-1, 1, &[-1, 0, 2]).to_string(), "-q^-1 + 2*q + O(q^2)");
    }

    fn series_strategy() -> impl Strategy<Value = LaurentSeries> {
        (-3i64..3, prop::collection::vec(-20i64..20, 1..12)).prop_map(|(v, mut c)| {
            if c[0] == 0 {
                c[0] = 1;
            }
            let o = v + c.len() as i64 - 1;
            LaurentSeries::from_i64s(v, o, &c)
        })
    }

    proptest! {
        #[test]
        fn unit_series_times_inverse_is_one(mut s in series_strategy()) {
            let v = s.valuation().unwrap();
            let mut c = s.coeffs().to_vec();
            c[0] = if c[0].is_negative() { -BigInt::one() } else { BigInt::one() };
            s = LaurentSeries::new(v, s.order(), c);
            let inv = s.invert().unwrap();
            let prod = &s * &inv;
            prop_assert_eq!(prod.order(), s.order() - v);
            prop_assert!(prod.agrees(&LaurentSeries::one(prod.order())));
        }

        #[test]
        fn square_then_sqrt(s in series_strategy()) {
            let sq = &s * &s;
            let r = sq.sqrt().unwrap();
            let expected = if s.leading().unwrap().is_negative() { -&s } else { s.clone() };
            prop_assert!(r.agrees(&expected));
            prop_assert_eq!(r.order(), s.order());
        }

        #[test]
        fn truncation_commutes_with_multiplication(a in series_strategy(), b in series_strategy()) {
            let p = &a * &b;
            let lo = p.order() - 1;
            if lo >= a.order().min(b.order()) - 10 {
                let ta = a.truncate(a.order() - 1);
                let tb = b.truncate(b.order() - 1);
                let tp = &ta * &tb;
                prop_assert!(tp.agrees(&p));
            }
        }
    }
}
