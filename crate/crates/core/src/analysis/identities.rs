//! Functional equations of the Catalan and Motzkin series, and the
//! `q -> 1/q` symmetries of q-rationals.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::contfrac::Fraction;
use crate::error::{Error, Result};
use crate::modular::QMatrix;
use crate::qrational::{left_q_rational, q_rational, Method};
use crate::ring::{IntPoly, LaurentPoly, LaurentSeries, RatFunc};

/// `C = 1 + q C^2`, coefficient by coefficient.
pub fn catalan_series(order: i64) -> LaurentSeries {
    let n = order.max(0) as usize;
    let mut c: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let v = if k == 0 {
            BigInt::from(1)
        } else {
            (0..k).map(|i| &c[i] * &c[k - 1 - i]).sum()
        };
        c.push(v);
    }
    LaurentSeries::new(0, order, c)
}

/// `M = 1 + q M + q^2 M^2`.
pub fn motzkin_series(order: i64) -> LaurentSeries {
    let n = order.max(0) as usize;
    let mut m: Vec<BigInt> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let v = match k {
            0 => BigInt::from(1),
            _ => {
                let sq: BigInt = if k >= 2 {
                    (0..=k - 2).map(|i| &m[i] * &m[k - 2 - i]).sum()
                } else {
                    BigInt::zero()
                };
                &m[k - 1] + sq
            }
        };
        m.push(v);
    }
    LaurentSeries::new(0, order, m)
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalanMotzkinReport {
    pub order: i64,
    pub catalan: LaurentSeries,
    pub motzkin: LaurentSeries,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub catalan_residual: BigInt,
    #[serde(serialize_with = "crate::json::ser_big")]
    pub motzkin_residual: BigInt,
}

impl CatalanMotzkinReport {
    pub fn holds(&self) -> bool {
        self.catalan_residual.is_zero() && self.motzkin_residual.is_zero()
    }
}

fn residual(lhs: &LaurentSeries, rhs: &LaurentSeries, order: i64) -> Result<BigInt> {
    let d = lhs - rhs;
    if d.order() < order {
        return Err(Error::InsufficientTerms {
            needed: (order - d.order()) as usize,
        });
    }
    Ok(d.truncate(order).max_abs())
}

/// `T_q S_q (C) = q C` and `S_q (M) = q M + (q - 1)/q`, both evaluated with
/// series arithmetic through `q^order`.
pub fn catalan_motzkin_check(order: i64) -> Result<CatalanMotzkinReport> {
    if order < 1 {
        return Err(Error::InvalidArguments("order must be at least 1".into()));
    }
    // two spare terms cover the q-shifts in both sides
    let work = order + 2;
    let c = catalan_series(work);
    let m = motzkin_series(work);
    let ts = QMatrix::t().mul(&QMatrix::s());
    let c_res = residual(
        &ts.moebius_series(&c)?,
        &c.mul_laurent(&LaurentPoly::q_pow(1)),
        order,
    )?;
    let flat = LaurentPoly::new(-1, IntPoly::from_i64s(&[-1, 1]));
    let m_res = residual(
        &QMatrix::s().moebius_series(&m)?,
        &m.mul_laurent(&LaurentPoly::q_pow(1)).add_laurent(&flat),
        order,
    )?;
    Ok(CatalanMotzkinReport {
        order,
        catalan: c.truncate(order),
        motzkin: m.truncate(order),
        catalan_residual: c_res,
        motzkin_residual: m_res,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymmetryReport {
    pub x: Fraction,
    /// `[-x]_q = -q^-1 [x]_{1/q}`.
    pub negation_holds: bool,
    /// `[1/x]_q = 1/[x]_{1/q}`; `None` for `x` in `{0, inf}`.
    pub reciprocal_holds: Option<bool>,
}

pub fn symmetry_check(x: &Fraction) -> SymmetryReport {
    let val = |y: &Fraction| q_rational(y, Method::Negcf).value;
    let mirrored = val(x).substitute_q_inverse();
    let negation_holds = if x.is_infinite() {
        val(x).is_infinity()
    } else {
        let minus_q_inv = RatFunc::from(LaurentPoly::monomial(BigInt::from(-1), -1));
        val(&-x) == &minus_q_inv * &mirrored
    };
    let reciprocal_holds = (!x.is_infinite() && !x.num().is_zero())
        .then(|| val(&x.recip()) == mirrored.recip());
    SymmetryReport {
        x: x.clone(),
        negation_holds,
        reciprocal_holds,
    }
}

/// One of the operators on rational functions printed alongside the
/// extended symmetry group, compared against candidate images.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PrintedOperator {
    /// `X -> (-X + 1 - 1/q)/((q - 1) X + 1)`
    Negation,
    /// `X -> ((q - 1) X + 1)/(q X + 1 - q)`
    Reciprocal,
    /// `X -> (-X(1/q) + q - 1)/((1 - q) X(1/q) + q)`
    Involution,
}

impl PrintedOperator {
    pub const ALL: [PrintedOperator; 3] = [
        PrintedOperator::Negation,
        PrintedOperator::Reciprocal,
        PrintedOperator::Involution,
    ];

    pub fn apply(self, x: &RatFunc) -> RatFunc {
        let p = IntPoly::from_i64s;
        let (m, arg) = match self {
            PrintedOperator::Negation => (
                QMatrix::from_laurent(
                    LaurentPoly::from(-1),
                    LaurentPoly::new(-1, p(&[-1, 1])),
                    LaurentPoly::from(p(&[-1, 1])),
                    LaurentPoly::one(),
                ),
                x.clone(),
            ),
            PrintedOperator::Reciprocal => (
                QMatrix::new(p(&[-1, 1]), p(&[1]), p(&[0, 1]), p(&[1, -1])),
                x.clone(),
            ),
            PrintedOperator::Involution => (
                QMatrix::new(p(&[-1]), p(&[-1, 1]), p(&[1, -1]), p(&[0, 1])),
                x.substitute_q_inverse(),
            ),
        };
        m.moebius(&arg)
    }
}

/// Which known values an operator's image of `[x]_q` coincides with.
#[derive(Clone, Debug, Serialize)]
pub struct OperatorProbe {
    pub operator: PrintedOperator,
    pub x: Fraction,
    pub image: RatFunc,
    pub matches: Vec<String>,
}

/// Applies each printed operator to `[x]_q` and compares the image with
/// `[y]_q` and `[y]^flat_q` for `y` in `{x, -x, 1/x}`.
pub fn probe_printed_operators(x: &Fraction) -> Result<Vec<OperatorProbe>> {
    let mut targets: Vec<(String, Fraction)> = vec![("x".into(), x.clone())];
    if !x.is_infinite() {
        targets.push(("-x".into(), -x));
    }
    if !x.num().is_zero() {
        targets.push(("1/x".into(), x.recip()));
    }
    let base = q_rational(x, Method::Negcf).value;
    let mut out = Vec::new();
    for op in PrintedOperator::ALL {
        let image = op.apply(&base);
        let mut matches = Vec::new();
        for (name, y) in &targets {
            if image == q_rational(y, Method::Negcf).value {
                matches.push(format!("[{name}]_q"));
            }
            if image == left_q_rational(y)?.value {
                matches.push(format!("[{name}]^flat_q"));
            }
        }
        out.push(OperatorProbe {
            operator: op,
            x: x.clone(),
            image,
            matches,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequences() {
        let c = catalan_series(5);
        assert_eq!(c, LaurentSeries::from_i64s(0, 5, &[1, 1, 2, 5, 14, 42]));
        let m = motzkin_series(6);
        assert_eq!(m, LaurentSeries::from_i64s(0, 6, &[1, 1, 2, 4, 9, 21, 51]));
    }

    #[test]
    fn functional_equations() {
        let r = catalan_motzkin_check(50).unwrap();
        assert!(r.holds(), "{} {}", r.catalan_residual, r.motzkin_residual);
    }

    #[test]
    fn symmetries() {
        for s in ["1", "2", "5/2", "-7/3", "0", "inf"] {
            let r = symmetry_check(&s.parse().unwrap());
            assert!(r.negation_holds, "{s}");
            assert_ne!(r.reciprocal_holds, Some(false), "{s}");
        }
        assert_eq!(symmetry_check(&Fraction::zero()).reciprocal_holds, None);
    }

    #[test]
    fn operator_probe_runs() {
        let p = probe_printed_operators(&Fraction::zero()).unwrap();
        assert_eq!(p.len(), 3);
    }
}
