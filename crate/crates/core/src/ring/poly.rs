//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Index `i` of the coefficient vector holds the coefficient of `q^i`.
//! Trailing zeros are never stored, so the zero polynomial is the empty
//! vector and every nonzero polynomial has a nonzero leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        Self::monomial(BigInt::one(), k)
    }

    /// The q-integer `[n]_q = 1 + q + ... + q^(n-1)` for `n >= 0`.
    pub fn q_int(n: usize) -> Self {
        IntPoly { coeffs: vec![BigInt::one(); n] }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// A nonzero constant (degree 0).
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Lowest nonzero coefficient.
    pub fn lowest(&self) -> Option<&BigInt> {
        self.valuation().map(|v| &self.coeffs[v])
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            c = -c;
        }
        self.div_scalar_exact(&c).expect("content divides every coefficient")
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Exact division by an integer; `None` if some coefficient is not divisible.
    pub fn div_scalar_exact(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let (quo, rem) = c.div_rem(k);
            if !rem.is_zero() {
                return None;
            }
            out.push(quo);
        }
        Some(IntPoly { coeffs: out })
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Division by `q^k`; `None` unless `q^k` divides the polynomial.
    pub fn unshift(&self, k: usize) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.valuation()? < k {
            return None;
        }
        Some(IntPoly {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Strips the largest power of `q` dividing the polynomial.
    pub fn strip_q_power(&self) -> (Self, usize) {
        match self.valuation() {
            None => (Self::zero(), 0),
            Some(v) => (IntPoly { coeffs: self.coeffs[v..].to_vec() }, v),
        }
    }

    /// The mirror `q^deg * p(1/q)`: coefficients reversed.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// Coefficient sequence equals its reverse.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Palindromic once the lowest power of `q` is factored out.
    pub fn is_palindromic_up_to_shift(&self) -> bool {
        self.strip_q_power().0.is_palindromic()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Sum of the coefficients, i.e. the value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Homogenised evaluation at `x = num/den`: returns `den^deg * p(num/den)`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &den_pow;
            den_pow *= den;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + big_to_f64(c))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + big_to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(big_to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Substitutes `q -> x + shift` (Taylor shift), used by the continued
    /// fraction expander.
    pub fn taylor_shift(&self, shift: &BigInt) -> Self {
        // Repeated synthetic division.
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * shift;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// Exact quotient `self / divisor`; `None` if the division leaves a
    /// remainder or a non-integral coefficient.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let lead = divisor.leading()?.clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (f, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &f * dc;
            }
            quo[k] = f;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quo))
    }

    /// Pseudo-remainder: `lc(d)^(deg a - deg d + 1) * a mod d`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let Some(dd) = d.degree() else {
            panic!("pseudo_rem by zero polynomial");
        };
        let lead = d.leading().expect("nonzero").clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.last().cloned().unwrap_or_default();
            let shift = r.len() - 1 - dd;
            for c in r.iter_mut() {
                *c *= &lead;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[shift + j] -= &top * dc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Greatest common divisor with positive leading coefficient, including
    /// the integer content. Primitive-part Euclid: every remainder is made
    /// primitive before the next step so coefficients stay small.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content());
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content());
        }
        let c = self.content().gcd(&other.content());
        let (mut f, mut g) = (self.primitive_part(), other.primitive_part());
        if f.degree() < g.degree() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let r = f.pseudo_rem(&g);
            f = g;
            g = r.primitive_part();
        }
        f.primitive_part().scale(&c)
    }
}

pub(crate) fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

impl From<BigInt> for IntPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> Self {
        Self::constant(BigInt::from(c))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        IntPoly::new(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        IntPoly::new(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::new(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// Writes `c * var^e` terms low-to-high, e.g. `1 + 2*q + q^2`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I, var: &str) -> fmt::Result
where
    I: IntoIterator<Item = (i64, &'a BigInt)>,
{
    let mut first = true;
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let unit = mag.is_one();
        match e {
            0 => write!(f, "{mag}")?,
            1 if unit => write!(f, "{var}")?,
            1 => write!(f, "{mag}*{var}")?,
            _ if unit => write!(f, "{var}^{e}")?,
            _ => write!(f, "{mag}*{var}^{e}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// LaTeX rendering, e.g. `1 + 2q + q^{2}`.
pub(crate) fn latex_terms<'a, I>(terms: I, var: &str) -> String
where
    I: IntoIterator<Item = (i64, &'a BigInt)>,
{
    let mut out = String::new();
    for (e, c) in terms {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let unit = mag.is_one();
        let body = match e {
            0 => mag.to_string(),
            1 if unit => var.to_string(),
            1 => format!("{mag}{var}"),
            _ if unit => format!("{var}^{{{e}}}"),
            _ => format!("{mag}{var}^{{{e}}}"),
        };
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl IntPoly {
    pub fn to_latex(&self) -> String {
        latex_terms(self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c)), "q")
    }

    /// Renders the polynomial in a variable other than `q`.
    pub fn display_in(&self, var: &str) -> String {
        struct D<'a>(&'a IntPoly, &'a str);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_terms(
                    f,
                    self.0.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c)),
                    self.1,
                )
            }
        }
        D(self, var).to_string()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.coeffs.iter().enumerate().map(|(i, c)| (i as i64, c)), "q")
    }
}

/// Parses sums of terms such as `x^2 - x - 1`, `2*q^3 + q` or `3x - 1` in a
/// single variable (any one letter).
impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |why: &str| Error::Parse(format!("bad polynomial {s:?}: {why}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let mut var: Option<char> = None;
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (neg, body) = match rest.as_bytes()[0] {
                b'+' => (false, &rest[1..]),
                b'-' => (true, &rest[1..]),
                _ if rest.len() == text.len() => (false, rest),
                _ => return Err(bad("expected + or -")),
            };
            let end = body.find(['+', '-']).unwrap_or(body.len());
            let term = &body[..end];
            rest = &body[end..];
            let split = term.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(term.len());
            let (num, power) = term.split_at(split);
            let num = num.strip_suffix('*').unwrap_or(num);
            let mut c = if num.is_empty() {
                if power.is_empty() {
                    return Err(bad("empty term"));
                }
                BigInt::one()
            } else {
                num.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
            };
            let exp = if power.is_empty() {
                0
            } else {
                let mut chars = power.chars();
                let v = chars.next().expect("nonempty");
                if *var.get_or_insert(v) != v {
                    return Err(bad("more than one variable"));
                }
                match chars.as_str() {
                    "" => 1,
                    e => e
                        .strip_prefix('^')
                        .and_then(|e| e.parse::<usize>().ok())
                        .ok_or_else(|| bad("bad exponent"))?,
                }
            };
            if neg {
                c = -c;
            }
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, BigInt::zero());
            }
            coeffs[exp] += c;
        }
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn parse_expressions() {
        assert_eq!("x^2-x-1".parse::<IntPoly>().unwrap(), p(&[-1, -1, 1]));
        assert_eq!("2*q^3 + q".parse::<IntPoly>().unwrap(), p(&[0, 1, 0, 2]));
        assert_eq!("-3x+1".parse::<IntPoly>().unwrap(), p(&[1, -3]));
        assert_eq!("x^3 + x^2 - 2x - 1".parse::<IntPoly>().unwrap(), p(&[-1, -2, 1, 1]));
        assert_eq!("7".parse::<IntPoly>().unwrap(), p(&[7]));
        for bad in ["", "x^", "x+y", "2**x", "x^-1", "+"] {
            assert!(bad.parse::<IntPoly>().is_err(), "{bad}");
        }
        let q = p(&[1, -2, 0, 5]);
        assert_eq!(q.to_string().replace('*', "").parse::<IntPoly>().unwrap(), q);
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = p(&[1, 1]);
        assert_eq!(&a * &a, p(&[1, 2, 1]));
        assert_eq!(&a - &a, IntPoly::zero());
        assert_eq!(&a + &p(&[0, -1, 3]), p(&[1, 0, 3]));
        assert_eq!(a.shift(2), p(&[0, 0, 1, 1]));
    }

    #[test]
    fn gcd_recovers_common_factor() {
        let h = p(&[1, 1]);
        let f = p(&[1, 2, 1, 1]);
        let g = p(&[3, 0, 1]);
        let gg = (&f * &h).gcd(&(&g * &h));
        assert_eq!(gg, h);
        // integer content participates
        assert_eq!(p(&[2, 4]).gcd(&p(&[6, 6])), p(&[2]));
        assert_eq!(p(&[0, 1]).gcd(&p(&[1, 1])), p(&[1]));
    }

    #[test]
    fn exact_division() {
        let f = p(&[1, 2, 1, 1]);
        let h = p(&[1, 1]);
        assert_eq!((&f * &h).div_exact(&h), Some(f.clone()));
        assert_eq!(f.div_exact(&h), None);
        assert_eq!(p(&[2, 2]).div_exact(&p(&[2])), Some(h));
    }

    #[test]
    fn display_low_to_high() {
        assert_eq!(p(&[1, 2, 1]).to_string(), "1 + 2*q + q^2");
        assert_eq!(p(&[0, -1, 0, 3]).to_string(), "-q + 3*q^3");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 1, 2]).to_latex(), "1 + q + 2q^{2}");
    }

    #[test]
    fn taylor_shift_matches_direct_evaluation() {
        let f = p(&[-1, -2, 1, 1]);
        let g = f.taylor_shift(&BigInt::from(3));
        for x in -4..5 {
            assert_eq!(g.eval_i64(x), f.eval_i64(x + 3));
        }
    }

    #[test]
    fn homogeneous_evaluation() {
        let f = p(&[-1, -1, 1]);
        // 4 * f(3/2) = 4*(9/4 - 3/2 - 1) = -1
        assert_eq!(
            f.eval_homogeneous(&BigInt::from(3), &BigInt::from(2)),
            BigInt::from(-1)
        );
    }

    #[test]
    fn palindromes() {
        assert!(p(&[1, 1, 2, 1, 1]).is_palindromic());
        assert!(!p(&[1, 2, 1, 1]).is_palindromic());
        assert!(p(&[0, 1, 2, 1]).is_palindromic_up_to_shift());
    }
}
