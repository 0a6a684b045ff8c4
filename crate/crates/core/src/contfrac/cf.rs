use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::Fraction;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CfKind {
    /// `a0 + 1/(a1 + 1/(...))`, `a_i >= 1` for `i >= 1`.
    Regular,
    /// `c0 - 1/(c1 - 1/(...))`, `c_j >= 2` for `j >= 1`.
    Negative,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Canonical,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ContinuedFraction {
    kind: CfKind,
    terms: Vec<i64>,
}

fn small(n: &BigInt) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::InvalidContinuedFraction(format!("partial quotient {n} too large")))
}

impl ContinuedFraction {
    pub fn new(kind: CfKind, terms: Vec<i64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::InvalidContinuedFraction("no terms".into()));
        }
        let min = match kind {
            CfKind::Regular => 1,
            CfKind::Negative => 2,
        };
        if let Some((i, t)) = terms.iter().enumerate().skip(1).find(|(_, &t)| t < min) {
            return Err(Error::InvalidContinuedFraction(format!(
                "term {i} is {t}, must be at least {min}"
            )));
        }
        Ok(ContinuedFraction { kind, terms })
    }

    pub fn regular(terms: Vec<i64>) -> Result<Self> {
        Self::new(CfKind::Regular, terms)
    }

    pub fn negative(terms: Vec<i64>) -> Result<Self> {
        Self::new(CfKind::Negative, terms)
    }

    /// Regular expansion by the floor Euclidean algorithm. The last term is
    /// at least 2 whenever there is more than one term.
    pub fn of_regular(x: &Fraction) -> Result<Self> {
        if x.is_infinite() {
            return Err(Error::NotFinite);
        }
        let (mut n, mut d) = (x.num().clone(), x.den().clone());
        let mut terms = Vec::new();
        loop {
            let a = num_integer::Integer::div_floor(&n, &d);
            terms.push(small(&a)?);
            let r = &n - &a * &d;
            if r.is_zero() {
                break;
            }
            n = d;
            d = r;
        }
        Self::regular(terms)
    }

    /// Negative expansion using ceilings.
    pub fn of_negative(x: &Fraction) -> Result<Self> {
        if x.is_infinite() {
            return Err(Error::NotFinite);
        }
        let (mut n, mut d) = (x.num().clone(), x.den().clone());
        let mut terms = Vec::new();
        loop {
            let c = -num_integer::Integer::div_floor(&-&n, &d);
            terms.push(small(&c)?);
            // x - c = -(c d - n)/d, next value d/(c d - n)
            let r = &c * &d - &n;
            if r.is_zero() {
                break;
            }
            n = d;
            d = r;
        }
        Self::negative(terms)
    }

    pub fn kind(&self) -> CfKind {
        self.kind
    }

    pub fn terms(&self) -> &[i64] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Rewrites a regular expansion using `[..., a, 1] = [..., a + 1]` to meet
    /// the requested term-count parity.
    pub fn normalize(&self, parity: Parity) -> Result<Self> {
        if self.kind != CfKind::Regular {
            return Err(Error::InvalidContinuedFraction(
                "only regular expansions can be renormalized".into(),
            ));
        }
        let mut t = self.terms.clone();
        while t.len() > 1 && *t.last().expect("nonempty") == 1 {
            t.pop();
            *t.last_mut().expect("nonempty") += 1;
        }
        let want_even = match parity {
            Parity::Canonical => return Self::regular(t),
            Parity::Even => true,
            Parity::Odd => false,
        };
        if t.len().is_multiple_of(2) != want_even {
            let last = t.last_mut().expect("nonempty");
            *last -= 1;
            t.push(1);
        }
        Self::regular(t)
    }

    pub fn evaluate(&self) -> Fraction {
        let mut it = self.terms.iter().rev();
        let mut v = Fraction::from_int(*it.next().expect("nonempty"));
        for &t in it {
            let head = Fraction::from_int(t);
            v = match self.kind {
                CfKind::Regular => &head + &v.recip(),
                CfKind::Negative => &head - &v.recip(),
            };
        }
        v
    }

    /// Values of the successive truncations `[a0]`, `[a0, a1]`, ...
    pub fn convergents(&self) -> Vec<Fraction> {
        (1..=self.terms.len())
            .map(|k| {
                ContinuedFraction {
                    kind: self.kind,
                    terms: self.terms[..k].to_vec(),
                }
                .evaluate()
            })
            .collect()
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (open, close) = match self.kind {
            CfKind::Regular => ("[", "]"),
            CfKind::Negative => ("[[", "]]"),
        };
        write!(f, "{open}{}", self.terms[0])?;
        for (i, t) in self.terms.iter().enumerate().skip(1) {
            write!(f, "{}{t}", if i == 1 { ";" } else { "," })?;
        }
        write!(f, "{close}")
    }
}

/// Parses `[2;2]`, `[2,2]`, or `[[3;2]]` for negative expansions.
impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a continued fraction: {s:?}"));
        let (kind, body) = if let Some(b) = s.strip_prefix("[[").and_then(|b| b.strip_suffix("]]")) {
            (CfKind::Negative, b)
        } else if let Some(b) = s.strip_prefix('⟦').and_then(|b| b.strip_suffix('⟧')) {
            (CfKind::Negative, b)
        } else if let Some(b) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            (CfKind::Regular, b)
        } else {
            return Err(bad());
        };
        let terms = body
            .split([',', ';'])
            .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(kind, terms)
    }
}
