//! Hankel determinants of coefficient sequences, with periodicity and
//! Somos-4 checks on the resulting rows.
//!
//! Convention: the sequence `a_1, a_2, ...` is the list of series
//! coefficients starting from the constant term, signs kept, and
//! `Delta^(k)_n = det(a_{i+j+k-1})_{1 <= i,j <= n}` with `Delta^(k)_0 = 1`.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HankelSequence {
    pub shift: usize,
    #[serde(serialize_with = "crate::json::ser_bigs")]
    pub values: Vec<BigInt>,
}

/// Determinant by fraction-free Gaussian elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `Delta^(shift)_0 .. Delta^(shift)_{count-1}`; needs
/// `shift + 2 count - 1` coefficients.
pub fn hankel(coeffs: &[BigInt], shift: usize, count: usize) -> Result<HankelSequence> {
    let needed = shift + 2 * count - 1;
    if coeffs.len() < needed {
        return Err(Error::InsufficientTerms { needed });
    }
    let values = (0..count)
        .map(|n| {
            let m = (0..n)
                .map(|i| (0..n).map(|j| coeffs[i + j + shift].clone()).collect())
                .collect();
            bareiss_det(m)
        })
        .collect();
    Ok(HankelSequence { shift, values })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Periodicity {
    Periodic,
    Antiperiodic,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    pub kind: Periodicity,
    /// 0 when `kind` is `None`.
    pub period: usize,
    pub checked_length: usize,
}

/// Smallest `p <= len/2` with `v[n+p] = v[n]` or `v[n+p] = -v[n]` on the
/// whole window. Plain periodicity wins a tie, which only happens for an
/// all-zero window.
pub fn detect_periodicity(values: &[BigInt]) -> PeriodicityReport {
    let len = values.len();
    for p in 1..=len / 2 {
        let pairs = || values.iter().zip(&values[p..]);
        let kind = if pairs().all(|(a, b)| a == b) {
            Periodicity::Periodic
        } else if pairs().all(|(a, b)| *a == -b) {
            Periodicity::Antiperiodic
        } else {
            continue;
        };
        return PeriodicityReport {
            kind,
            period: p,
            checked_length: len,
        };
    }
    PeriodicityReport {
        kind: Periodicity::None,
        period: 0,
        checked_length: len,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SomosReport {
    pub holds: bool,
    pub first_violation: Option<usize>,
}

/// Checks `d_{n+4} d_n = d_{n+3} d_{n+1} - d_{n+2}^2` for every window.
pub fn somos4_check(values: &[BigInt]) -> Result<SomosReport> {
    if values.len() < 5 {
        return Err(Error::InvalidArguments(format!(
            "need at least 5 values, got {}",
            values.len()
        )));
    }
    let first_violation = values.windows(5).position(|d| {
        &d[4] * &d[0] != &d[3] * &d[1] - &d[2] * &d[2]
    });
    Ok(SomosReport {
        holds: first_violation.is_none(),
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Cofactor expansion along the first row.
    fn naive_det(m: &[Vec<BigInt>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut acc = BigInt::zero();
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &m[0][j] * naive_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactors(n in 0usize..=6, seed in prop::collection::vec(-5i64..=5, 36)) {
            let m: Vec<Vec<BigInt>> = (0..n)
                .map(|i| (0..n).map(|j| BigInt::from(seed[i * 6 + j])).collect())
                .collect();
            prop_assert_eq!(bareiss_det(m.clone()), naive_det(&m));
        }
    }

    #[test]
    fn catalan_rows_are_ones() {
        let c = ints(&[1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796]);
        assert_eq!(hankel(&c, 0, 6).unwrap().values, ints(&[1; 6]));
        assert_eq!(hankel(&c, 1, 5).unwrap().values, ints(&[1; 5]));
    }

    #[test]
    fn periodicity() {
        let r = detect_periodicity(&ints(&[1, 1, 1, 0, -1, -1, -1, 0, 1, 1, 1, 0]));
        assert_eq!((r.kind, r.period), (Periodicity::Antiperiodic, 4));
        let r = detect_periodicity(&ints(&[1, 1, 0, -1, -1, 0, 1, 1, 0]));
        assert_eq!((r.kind, r.period), (Periodicity::Antiperiodic, 3));
        let r = detect_periodicity(&ints(&[1, 1, 1, 1]));
        assert_eq!((r.kind, r.period), (Periodicity::Periodic, 1));
        let r = detect_periodicity(&ints(&[1, 2, 3, 4, 5]));
        assert_eq!(r.kind, Periodicity::None);
    }

    #[test]
    fn somos() {
        let r = somos4_check(&ints(&[1, 1, 1, 1, 2])).unwrap();
        assert_eq!(r.first_violation, Some(0));
        assert!(somos4_check(&ints(&[1, 1, 1, 0, -1, -1, -1, 0, 1, 1])).unwrap().holds);
        assert!(somos4_check(&ints(&[1, 2])).is_err());
    }

    #[test]
    fn short_input() {
        assert_eq!(
            hankel(&ints(&[1, 2, 3]), 0, 3),
            Err(Error::InsufficientTerms { needed: 5 })
        );
    }
}
