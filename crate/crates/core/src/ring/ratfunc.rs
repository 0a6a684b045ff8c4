use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::laurent::LaurentPoly;
use super::poly::IntPoly;
use super::series::LaurentSeries;
use crate::contfrac::Fraction;
use crate::error::{Error, Result};

/// A reduced quotient `num/den` of integer polynomials, or the point `1/0`.
///
/// Canonical form: no common factor (polynomial or integer), and the lowest
/// nonzero coefficient of `den` is positive. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: IntPoly,
    den: IntPoly,
}

impl RatFunc {
    pub fn reduce(num: IntPoly, den: IntPoly) -> Result<Self> {
        if num.is_zero() && den.is_zero() {
            return Err(Error::InvalidRational);
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.lowest().is_some_and(Signed::is_negative) {
            num = -num;
            den = -den;
        }
        Ok(RatFunc { num, den })
    }

    /// `num/den` for Laurent polynomials: negative powers are cleared first.
    pub fn from_laurent_pair(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        let shift = num.valuation().min(den.valuation());
        let n = num.shift(-shift).to_poly().expect("nonnegative after shift");
        let d = den.shift(-shift).to_poly().expect("nonnegative after shift");
        Self::reduce(n, d)
    }

    pub fn zero() -> Self {
        RatFunc {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(IntPoly::one())
    }

    pub fn infinity() -> Self {
        RatFunc {
            num: IntPoly::one(),
            den: IntPoly::zero(),
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_infinity(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// A Laurent polynomial if the denominator is `q^k`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        let (body, k) = self.den.strip_q_power();
        body.is_one()
            .then(|| LaurentPoly::from(self.num.clone()).shift(-(k as i64)))
    }

    /// `1/self`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> Self {
        Self::reduce(self.den.clone(), self.num.clone()).expect("canonical form is never 0/0")
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// `f(q^-1)` in canonical form.
    pub fn substitute_q_inverse(&self) -> Self {
        if self.is_infinity() || self.is_zero() {
            return self.clone();
        }
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        Self::reduce(
            self.num.reversed().shift(dd),
            self.den.reversed().shift(dn),
        )
        .expect("nonzero denominator")
    }

    /// Value at `q = 1`, or `None` if both parts vanish there.
    pub fn eval_one(&self) -> Option<Fraction> {
        Fraction::new(self.num.eval_one(), self.den.eval_one()).ok()
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.num.eval_f64(q) / self.den.eval_f64(q)
    }

    /// Taylor (Laurent) expansion at `q = 0` through `q^order`.
    pub fn taylor(&self, order: i64) -> Result<LaurentSeries> {
        if self.is_infinity() {
            return Err(Error::PoleAtEveryPoint);
        }
        if self.is_zero() {
            return Ok(LaurentSeries::zero(order));
        }
        let (n, a) = self.num.strip_q_power();
        let (d, b) = self.den.strip_q_power();
        let v = a as i64 - b as i64;
        let prec = order - v;
        if prec < 0 {
            return Ok(LaurentSeries::zero(order));
        }
        let s = LaurentSeries::from_poly(&n, prec).div(&LaurentSeries::from_poly(&d, prec))?;
        Ok(s.shift(v))
    }

    pub fn to_latex(&self) -> String {
        if self.is_infinity() {
            return "\\infty".into();
        }
        if self.den.is_one() {
            return self.num.to_latex();
        }
        format!("\\frac{{{}}}{{{}}}", self.num.to_latex(), self.den.to_latex())
    }
}

impl From<IntPoly> for RatFunc {
    fn from(p: IntPoly) -> Self {
        RatFunc {
            num: p,
            den: IntPoly::one(),
        }
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_laurent_pair(&p, &LaurentPoly::one()).expect("nonzero denominator")
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::from(IntPoly::from(c))
    }
}

impl From<BigInt> for RatFunc {
    fn from(c: BigInt) -> Self {
        Self::from(IntPoly::constant(c))
    }
}

// Arithmetic panics on the indeterminate forms `∞ ± ∞` and `0 · ∞`.
impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
            .expect("indeterminate sum")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den).expect("indeterminate product")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        if self.is_infinity() {
            return self.clone();
        }
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        &self - &rhs
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

fn wrap(p: &IntPoly) -> String {
    let nonzero = p.coeffs().iter().filter(|c| !c.is_zero()).count();
    if nonzero > 1 {
        format!("({p})")
    } else {
        p.to_string()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinity() {
            return write!(f, "1/0");
        }
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

#[cfg(test)]
pub(crate) fn rf(num: &[i64], den: &[i64]) -> RatFunc {
    RatFunc::reduce(IntPoly::from_i64s(num), IntPoly::from_i64s(den)).unwrap()
}
