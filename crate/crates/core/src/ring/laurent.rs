use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::{latex_terms, write_terms, IntPoly};

/// `q^valuation * body` with `body(0) != 0`; zero is stored with valuation 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    valuation: i64,
    body: IntPoly,
}

impl LaurentPoly {
    pub fn new(valuation: i64, body: IntPoly) -> Self {
        let (body, v) = body.strip_q_power();
        if body.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            valuation: valuation + v as i64,
            body,
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            valuation: 0,
            body: IntPoly::zero(),
        }
    }

    pub fn one() -> Self {
        Self::from(IntPoly::one())
    }

    /// `c * q^k` for any integer `k`.
    pub fn monomial(c: BigInt, k: i64) -> Self {
        Self::new(k, IntPoly::constant(c))
    }

    pub fn q_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// `[n]_q` for every integer `n`: `(1 - q^n)/(1 - q)`.
    /// For `n < 0` this is `-(q^-1 + ... + q^n)`.
    pub fn q_int(n: i64) -> Self {
        if n >= 0 {
            Self::from(IntPoly::q_int(n as usize))
        } else {
            let k = (-n) as usize;
            Self::new(n, -IntPoly::q_int(k))
        }
    }

    /// `[n]_{q^-1}`.
    pub fn q_int_inverse(n: i64) -> Self {
        Self::q_int(n).substitute_q_inverse()
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn body(&self) -> &IntPoly {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Highest exponent present.
    pub fn top(&self) -> Option<i64> {
        self.body.degree().map(|d| self.valuation + d as i64)
    }

    /// Coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> BigInt {
        if e < self.valuation {
            return BigInt::zero();
        }
        self.body.coeff((e - self.valuation) as usize)
    }

    /// Converts to an ordinary polynomial if no negative powers occur.
    pub fn to_poly(&self) -> Option<IntPoly> {
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        (self.valuation >= 0).then(|| self.body.shift(self.valuation as usize))
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            valuation: self.valuation + k,
            body: self.body.clone(),
        }
    }

    /// `f(q^-1)`.
    pub fn substitute_q_inverse(&self) -> Self {
        match self.top() {
            None => Self::zero(),
            Some(top) => Self::new(-top, self.body.reversed()),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.valuation, self.body.scale(k))
    }

    pub fn eval_f64(&self, q: f64) -> f64 {
        self.body.eval_f64(q) * q.powi(self.valuation as i32)
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.body.eval_one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        let v = self.valuation;
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .map(move |(i, c)| (v + i as i64, c))
    }

    pub fn to_latex(&self) -> String {
        latex_terms(self.terms(), "q")
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        Self::new(0, p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from(IntPoly::from(c))
    }
}

fn align(a: &LaurentPoly, b: &LaurentPoly) -> (i64, IntPoly, IntPoly) {
    let v = a.valuation.min(b.valuation);
    (
        v,
        a.body.shift((a.valuation - v) as usize),
        b.body.shift((b.valuation - v) as usize),
    )
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (v, a, b) = align(self, rhs);
        LaurentPoly::new(v, &a + &b)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.valuation + rhs.valuation, &self.body * &rhs.body)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            valuation: self.valuation,
            body: -&self.body,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "q")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_q_integers() {
        assert_eq!(LaurentPoly::q_int(-1), -LaurentPoly::q_pow(-1));
        assert_eq!(
            LaurentPoly::q_int(-2),
            -(LaurentPoly::q_pow(-1) + LaurentPoly::q_pow(-2))
        );
        assert_eq!(LaurentPoly::q_int(0), LaurentPoly::zero());
    }

    #[test]
    fn q_integer_identity_holds_for_all_n() {
        // (1 - q) [n]_q = 1 - q^n
        let one_minus_q = LaurentPoly::from(IntPoly::from_i64s(&[1, -1]));
        for n in -6..7 {
            let lhs = &one_minus_q * &LaurentPoly::q_int(n);
            let rhs = LaurentPoly::one() - LaurentPoly::q_pow(n);
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn inverse_substitution() {
        let two = LaurentPoly::q_int(2);
        let inv = two.substitute_q_inverse();
        assert_eq!(inv.valuation(), -1);
        assert_eq!(inv.body(), &IntPoly::from_i64s(&[1, 1]));
        assert_eq!(inv.substitute_q_inverse(), two);
        assert_eq!(inv.to_string(), "q^-1 + 1");
    }
}
