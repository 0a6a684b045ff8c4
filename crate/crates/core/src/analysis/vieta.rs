//! Vieta-type identities for the q-deformed roots of the heptagon cubic
//! `x^3 + x^2 - 2x - 1` and the nonagon cubic `x^3 - 3x + 1`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::contfrac::{AlgebraicNumber, Fraction};
use crate::error::{Error, Result};
use crate::qirrational::{q_irrational, CfStream};
use crate::ring::{IntPoly, LaurentPoly, LaurentSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Cubic {
    Heptagon,
    Nonagon,
}

impl Cubic {
    pub fn poly(self) -> IntPoly {
        match self {
            Cubic::Heptagon => IntPoly::from_i64s(&[-1, -2, 1, 1]),
            Cubic::Nonagon => IntPoly::from_i64s(&[1, -3, 0, 1]),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Cubic::Heptagon => "heptagon",
            Cubic::Nonagon => "nonagon",
        }
    }
}

impl FromStr for Cubic {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "heptagon" => Ok(Cubic::Heptagon),
            "nonagon" => Ok(Cubic::Nonagon),
            _ => Err(Error::Parse(format!("unknown equation {s:?}"))),
        }
    }
}

/// Grid used to isolate the real roots.
pub const GRID_DENOMINATOR: i64 = 10_000;

/// Intervals `[k/den, (k+1)/den]` on which `p` changes sign, in increasing
/// order. Exact: only integer evaluations are used.
pub fn isolating_intervals(p: &IntPoly, den: i64) -> Result<Vec<(Fraction, Fraction)>> {
    let lead = p.leading().ok_or(Error::InvalidArguments("zero polynomial".into()))?;
    let max = p.coeffs().iter().map(|c| c.abs()).max().expect("nonzero");
    let bound = BigInt::one() + (max / lead.abs());
    let reach = &bound * den;
    let den_big = BigInt::from(den);
    let sign = |k: &BigInt| p.eval_homogeneous(k, &den_big).sign();
    let mut out = Vec::new();
    let mut k = -reach.clone();
    let mut prev = sign(&k);
    while k < reach {
        let next = &k + 1;
        let s = sign(&next);
        if s == num_bigint::Sign::NoSign {
            return Err(Error::RationalRoot(Fraction::new(next, den)?));
        }
        if s != prev && prev != num_bigint::Sign::NoSign {
            out.push((Fraction::new(k.clone(), den)?, Fraction::new(next.clone(), den)?));
        }
        prev = s;
        k = next;
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct Residual {
    pub identity: String,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub max_abs: BigInt,
}

#[derive(Clone, Debug, Serialize)]
pub struct VietaReport {
    pub equation: Cubic,
    pub order: i64,
    /// The roots, decreasing.
    pub roots: Vec<f64>,
    pub root_series: Vec<LaurentSeries>,
    /// `X1 + X2 + X3`.
    pub b_series: LaurentSeries,
    pub residuals: Vec<Residual>,
    /// The heptagon relation with `+q^-1 e1`, which already fails at
    /// `q = 1`; reported for comparison only.
    pub sign_variant: Option<Residual>,
}

impl VietaReport {
    pub fn holds(&self) -> bool {
        self.residuals.iter().all(|r| r.max_abs.sign() == num_bigint::Sign::NoSign)
    }
}

fn residual(name: &str, lhs: &LaurentSeries, rhs: &LaurentSeries, order: i64) -> Result<Residual> {
    let d = lhs - rhs;
    if d.order() < order {
        return Err(Error::InsufficientTerms {
            needed: (order - d.order()) as usize,
        });
    }
    Ok(Residual {
        identity: name.to_string(),
        max_abs: d.truncate(order).max_abs(),
    })
}

/// Expands the three q-deformed roots and checks the product and second
/// symmetric function identities through `q^order`.
pub fn vieta_check(equation: Cubic, order: i64) -> Result<VietaReport> {
    if order < 5 {
        return Err(Error::InvalidArguments("order must be at least 5".into()));
    }
    let p = equation.poly();
    let mut intervals = isolating_intervals(&p, GRID_DENOMINATOR)?;
    intervals.reverse();
    // negative roots give poles of order up to 3 at q = 0, so work higher
    let work = order + 8;
    let mut roots = Vec::new();
    let mut xs = Vec::new();
    for (lo, hi) in intervals {
        let a = AlgebraicNumber::new(p.clone(), lo, hi)?;
        roots.push(a.to_f64());
        xs.push(q_irrational(&CfStream::Algebraic(a), work)?);
    }
    if xs.len() != 3 {
        return Err(Error::Inconsistent(format!("found {} real roots", xs.len())));
    }
    let (x1, x2, x3) = (&xs[0], &xs[1], &xs[2]);
    let e1 = &(x1 + x2) + x3;
    let e2 = &(&(x1 * x2) + &(x2 * x3)) + &(x3 * x1);
    let e3 = &(x1 * x2) * x3;
    let lp = |k: i64| LaurentPoly::q_pow(k);
    let sign_variant = match equation {
        Cubic::Heptagon => Some(residual(
            "e2 = q^-1 e1 - 3 q^-2",
            &e2,
            &e1.mul_laurent(&lp(-1)).add_laurent(&lp(-2).scale(&BigInt::from(-3))),
            order,
        )?),
        Cubic::Nonagon => None,
    };
    let residuals = match equation {
        Cubic::Heptagon => vec![
            residual("X1 X2 X3 = q^-3", &e3, &LaurentSeries::from_laurent(&lp(-3), work), order)?,
            residual(
                "e2 = -q^-1 e1 - 3 q^-2",
                &e2,
                &e1.mul_laurent(&lp(-1).scale(&BigInt::from(-1)))
                    .add_laurent(&lp(-2).scale(&BigInt::from(-3))),
                order,
            )?,
        ],
        Cubic::Nonagon => vec![
            residual("X1 X2 X3 = -1", &e3, &LaurentSeries::from_laurent(&LaurentPoly::from(-1), work), order)?,
            residual("e2 = e1 - 3", &e2, &e1.add_laurent(&LaurentPoly::from(-3)), order)?,
        ],
    };
    Ok(VietaReport {
        equation,
        order,
        roots,
        root_series: xs.iter().map(|x| x.truncate(order)).collect(),
        b_series: e1.truncate(order),
        residuals,
        sign_variant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn intervals() {
        let iv = isolating_intervals(&Cubic::Heptagon.poly(), GRID_DENOMINATOR).unwrap();
        assert_eq!(iv.len(), 3);
        assert_eq!(iv[2].0, "12469/10000".parse().unwrap());
        let iv = isolating_intervals(&Cubic::Nonagon.poly(), GRID_DENOMINATOR).unwrap();
        assert_eq!(iv[0].0, "-18794/10000".parse().unwrap());
    }

    #[test]
    fn heptagon_identities() {
        let r = vieta_check(Cubic::Heptagon, 12).unwrap();
        assert!((r.roots[0] - 1.246_979_6).abs() < 1e-6);
        assert!(r.holds(), "{:?}", r.residuals);
        // classically e1 = -1 and e2 = -2, so the + sign cannot hold
        assert!(r.sign_variant.unwrap().max_abs > BigInt::from(0));
    }

    #[test]
    fn nonagon_identities() {
        let r = vieta_check(Cubic::Nonagon, 12).unwrap();
        assert!((r.roots[2] + 1.879_385_2).abs() < 1e-6);
        assert!(r.holds(), "{:?}", r.residuals);
    }
}
