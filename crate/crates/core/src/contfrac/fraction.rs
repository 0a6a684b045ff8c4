use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A reduced fraction with non-negative denominator; `1/0` is the point at
/// infinity and is the only value with a zero denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut num, mut den) = (num.into(), den.into());
        if num.is_zero() && den.is_zero() {
            return Err(Error::InvalidRational);
        }
        if den.is_zero() {
            return Ok(Self::infinity());
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        Ok(Fraction {
            num: num / &g,
            den: den / g,
        })
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Fraction {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn infinity() -> Self {
        Fraction {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_positive(&self) -> bool {
        !self.is_infinite() && self.num.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        assert!(!self.is_infinite(), "floor of infinity");
        self.num.div_floor(&self.den)
    }

    pub fn ceil(&self) -> BigInt {
        assert!(!self.is_infinite(), "ceil of infinity");
        -((-&self.num).div_floor(&self.den))
    }

    /// `1/x`, exchanging `0` and `∞`.
    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone()).expect("never 0/0")
    }

    pub fn abs(&self) -> Self {
        Fraction {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        match (self.num.to_f64(), self.den.to_f64()) {
            (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
            _ => {
                // Scale both down to keep the quotient representable.
                let shift = self.num.bits().max(self.den.bits()).saturating_sub(1000);
                let n = (&self.num >> shift).to_f64().unwrap_or(0.0);
                let d = (&self.den >> shift).to_f64().unwrap_or(1.0);
                n / d
            }
        }
    }

    /// Mediant `(n + r)/(m + s)` of the raw numerators and denominators.
    pub fn mediant(&self, other: &Self) -> Self {
        Self::new(&self.num + &other.num, &self.den + &other.den).expect("nonzero mediant")
    }

    /// `n s - m r` for `self = n/m`, `other = r/s`.
    pub fn cross(&self, other: &Self) -> BigInt {
        &self.num * &other.den - &self.den * &other.num
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `∞` compares greater than every finite value.
impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

// Arithmetic on finite values; results involving ∞ panic.
impl Add for &Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        assert!(!self.is_infinite() && !rhs.is_infinite(), "arithmetic with infinity");
        Fraction::new(&self.num * &rhs.den + &rhs.num * &self.den, &self.den * &rhs.den)
            .expect("finite sum")
    }
}

impl Sub for &Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl Mul for &Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        assert!(!self.is_infinite() && !rhs.is_infinite(), "arithmetic with infinity");
        Fraction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("finite product")
    }
}

impl Div for &Fraction {
    type Output = Fraction;
    fn div(self, rhs: &Fraction) -> Fraction {
        assert!(!rhs.num.is_zero(), "division by zero");
        self * &rhs.recip()
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        if self.is_infinite() {
            return self.clone();
        }
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -&self
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Accepts `n`, `n/m` with an optional sign, and `inf`, `∞` or `1/0` for
/// infinity. Any other zero denominator is rejected.
impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "∞" | "infinity") {
            return Ok(Self::infinity());
        }
        let parse = |t: &str| {
            BigInt::from_str(t.trim()).map_err(|_| Error::Parse(format!("not a fraction: {s:?}")))
        };
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (parse(n)?, parse(d)?),
            None => (parse(s)?, BigInt::one()),
        };
        if d.is_zero() {
            return if n.is_one() {
                Ok(Self::infinity())
            } else {
                Err(Error::Parse(format!("zero denominator in {s:?}")))
            };
        }
        Self::new(n, d)
    }
}
