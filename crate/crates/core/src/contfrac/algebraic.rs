//! Exact regular continued fractions of real algebraic numbers.
//!
//! The root is tracked as the unique sign change of an integer polynomial on
//! an open interval. Each step finds the integer part by sign evaluation at
//! integers, then substitutes `x = a + 1/y`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{CfKind, ContinuedFraction, Fraction};
use crate::error::{Error, Result};
use crate::ring::IntPoly;

/// A real root of `minpoly`, isolated in `[lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraicNumber {
    minpoly: IntPoly,
    lo: Fraction,
    hi: Fraction,
}

fn sign_at(p: &IntPoly, x: &Fraction) -> i32 {
    // den > 0, so the homogenised value has the sign of p(x) up to den^deg > 0.
    let v = p.eval_homogeneous(x.num(), x.den());
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

fn sign_at_int(p: &IntPoly, k: &BigInt) -> i32 {
    let v = p.eval(k);
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

impl AlgebraicNumber {
    /// Checks that the endpoints are finite, ordered and that `minpoly`
    /// changes sign between them. A root at an endpoint is reported as
    /// `RationalRoot`.
    pub fn new(minpoly: IntPoly, lo: Fraction, hi: Fraction) -> Result<Self> {
        if minpoly.degree().unwrap_or(0) < 1 {
            return Err(Error::InvalidInterval("polynomial must be nonconstant".into()));
        }
        if lo.is_infinite() || hi.is_infinite() || lo >= hi {
            return Err(Error::InvalidInterval(format!("[{lo}, {hi}]")));
        }
        let (sl, sh) = (sign_at(&minpoly, &lo), sign_at(&minpoly, &hi));
        if sl == 0 {
            return Err(Error::RationalRoot(lo));
        }
        if sh == 0 {
            return Err(Error::RationalRoot(hi));
        }
        if sl == sh {
            return Err(Error::InvalidInterval(format!(
                "no sign change on [{lo}, {hi}]"
            )));
        }
        Ok(AlgebraicNumber { minpoly, lo, hi })
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn interval(&self) -> (&Fraction, &Fraction) {
        (&self.lo, &self.hi)
    }

    /// Approximate value by exact bisection to width below `2^-bits`.
    pub fn approx(&self, bits: u32) -> Fraction {
        let (mut lo, mut hi) = (self.lo.clone(), self.hi.clone());
        let sl = sign_at(&self.minpoly, &lo);
        let eps = Fraction::new(1, BigInt::one() << bits).expect("nonzero");
        let two = Fraction::from_int(2);
        while &hi - &lo > eps {
            let mid = &(&lo + &hi) / &two;
            match sign_at(&self.minpoly, &mid) {
                0 => return mid,
                s if s == sl => lo = mid,
                _ => hi = mid,
            }
        }
        &(&lo + &hi) / &two
    }

    pub fn to_f64(&self) -> f64 {
        self.approx(80).to_f64()
    }

    pub fn expander(&self) -> CfExpander {
        CfExpander {
            poly: self.minpoly.clone(),
            lo: self.lo.clone(),
            hi: Some(self.hi.clone()),
            matrix: [BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one()],
        }
    }

    /// The first `count` regular partial quotients.
    pub fn continued_fraction(&self, count: usize) -> Result<ContinuedFraction> {
        if count == 0 {
            return Err(Error::InvalidArguments("count must be at least 1".into()));
        }
        let mut e = self.expander();
        let terms = (0..count).map(|_| e.next_term()).collect::<Result<Vec<_>>>()?;
        ContinuedFraction::new(CfKind::Regular, terms)
    }
}

/// Lazy producer of partial quotients.
#[derive(Clone, Debug)]
pub struct CfExpander {
    poly: IntPoly,
    lo: Fraction,
    /// `None` when the upper end is unbounded.
    hi: Option<Fraction>,
    /// `x_original = (a y + b)/(c y + d)` for the current variable `y`.
    matrix: [BigInt; 4],
}

impl CfExpander {
    fn original(&self, y: &Fraction) -> Fraction {
        let [a, b, c, d] = &self.matrix;
        let n = a * y.num() + b * y.den();
        let m = c * y.num() + d * y.den();
        Fraction::new(n, m).expect("unimodular map")
    }

    /// Cauchy bound on the moduli of the roots.
    fn root_bound(&self) -> BigInt {
        let lead = self.poly.leading().expect("nonzero").abs();
        let max = self.poly.coeffs().iter().map(|c| c.abs()).max().expect("nonzero");
        BigInt::one() + max.div_ceil(&lead)
    }

    pub fn next_term(&mut self) -> Result<i64> {
        let p = &self.poly;
        let s_lo = sign_at(p, &self.lo);
        if s_lo == 0 {
            return Err(Error::RationalRoot(self.original(&self.lo)));
        }
        let hi = match &self.hi {
            Some(h) => h.clone(),
            None => Fraction::from_int(self.root_bound()),
        };
        if sign_at(p, &hi) == 0 {
            return Err(Error::RationalRoot(self.original(&hi)));
        }
        // Largest integer k <= root: either k <= lo, or lo < k < hi with
        // p(k) still on the lo side of the sign change.
        let below_root = |k: &BigInt| {
            let kf = Fraction::from_int(k.clone());
            if kf <= self.lo {
                return Ok(true);
            }
            if kf >= hi {
                return Ok(false);
            }
            match sign_at_int(p, k) {
                0 => Err(Error::RationalRoot(self.original(&kf))),
                s => Ok(s == s_lo),
            }
        };
        let (mut good, mut bad) = (self.lo.floor(), hi.floor() + 1);
        while &bad - &good > BigInt::one() {
            let mid: BigInt = (&good + &bad) >> 1;
            if below_root(&mid)? {
                good = mid;
            } else {
                bad = mid;
            }
        }
        let a = good;
        let term = a
            .to_i64()
            .ok_or_else(|| Error::InvalidContinuedFraction(format!("partial quotient {a} too large")))?;

        // y = 1/(x - a) ranges over (1/(min(hi, a+1) - a), 1/(max(lo, a) - a)).
        let af = Fraction::from_int(a.clone());
        let a1 = Fraction::from_int(&a + 1);
        let top = if hi < a1 { hi } else { a1 };
        let bottom = if self.lo > af { self.lo.clone() } else { af.clone() };
        let new_lo = (&top - &af).recip();
        let new_hi = if bottom == af {
            None
        } else {
            Some((&bottom - &af).recip())
        };

        // y^d p(a + 1/y) is the reversal of p(x + a).
        let shifted = self.poly.taylor_shift(&a);
        let d = self.poly.degree().expect("nonconstant");
        let mut coeffs: Vec<BigInt> = (0..=d).map(|i| shifted.coeff(i)).collect();
        coeffs.reverse();
        self.poly = IntPoly::new(coeffs).primitive_part();
        self.lo = new_lo;
        self.hi = new_hi;
        let [m0, m1, m2, m3] = std::mem::take(&mut self.matrix);
        self.matrix = [&m0 * &a + &m1, m0, &m2 * &a + &m3, m2];
        Ok(term)
    }
}

impl Iterator for CfExpander {
    type Item = Result<i64>;
    fn next(&mut self) -> Option<Self::Item> {
        Some(self.next_term())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(coeffs: &[i64], lo: &str, hi: &str) -> AlgebraicNumber {
        AlgebraicNumber::new(
            IntPoly::from_i64s(coeffs),
            lo.parse().unwrap(),
            hi.parse().unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn golden_and_silver() {
        let phi = alg(&[-1, -1, 1], "1", "2");
        assert_eq!(phi.continued_fraction(10).unwrap().terms(), &[1; 10]);
        let silver = alg(&[-1, -2, 1], "2", "3");
        assert_eq!(silver.continued_fraction(6).unwrap().terms(), &[2; 6]);
    }

    #[test]
    fn sqrt_two_and_negative_roots() {
        let r2 = alg(&[-2, 0, 1], "1", "2");
        assert_eq!(r2.continued_fraction(6).unwrap().terms(), &[1, 2, 2, 2, 2, 2]);
        let m = alg(&[-2, 0, 1], "-2", "-1");
        // -sqrt 2 = [-2; 1, 1, 2, 2, ...]
        assert_eq!(m.continued_fraction(6).unwrap().terms(), &[-2, 1, 1, 2, 2, 2]);
    }

    #[test]
    fn heptagon_root_reconstructs() {
        // 2cos(2pi/7) = 1.2469..., just below 5/4
        assert!(matches!(
            AlgebraicNumber::new(IntPoly::from_i64s(&[-1, -2, 1, 1]), "5/4".parse().unwrap(), "13/10".parse().unwrap()),
            Err(Error::InvalidInterval(_))
        ));
        let x = alg(&[-1, -2, 1, 1], "6/5", "5/4");
        let cf = x.continued_fraction(8).unwrap();
        assert_eq!(cf.len(), 8);
        // oracle: exact bisection to 2^-180 (about 54 digits)
        let root = x.approx(180);
        let err = (&cf.evaluate() - &root).abs();
        assert!(err < Fraction::new(1, 1_000_000).unwrap(), "error {err}");
    }

    #[test]
    fn prefixes_are_consistent() {
        let x = alg(&[1, -3, 0, 1], "0", "1");
        let long = x.continued_fraction(20).unwrap();
        let short = x.continued_fraction(12).unwrap();
        assert_eq!(&long.terms()[..12], short.terms());
    }

    #[test]
    fn rational_roots_are_reported() {
        // (2x - 3)(x^2 - 2) has the rational root 3/2 in [1.45, 1.6]
        let p = &IntPoly::from_i64s(&[-3, 2]) * &IntPoly::from_i64s(&[-2, 0, 1]);
        let x = AlgebraicNumber::new(p, "29/20".parse().unwrap(), "8/5".parse().unwrap()).unwrap();
        assert_eq!(
            x.continued_fraction(5),
            Err(Error::RationalRoot("3/2".parse().unwrap()))
        );
    }

    #[test]
    fn bad_intervals() {
        let p = IntPoly::from_i64s(&[-1, -1, 1]);
        assert!(AlgebraicNumber::new(p.clone(), 2.into(), 3.into()).is_err());
        assert!(AlgebraicNumber::new(p, 2.into(), 1.into()).is_err());
    }
}
