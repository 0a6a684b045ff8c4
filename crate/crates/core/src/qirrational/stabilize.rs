//! One-sided limits of q-rationals.
//!
//! For `x = A(0)` with `A` unimodular, `A(1/n)` decreases to `x` and
//! `A(-1/n)` increases to it. Expanding each term and keeping the prefix on
//! which the last three agree gives the one-sided limit series.

use std::str::FromStr;

use serde::Serialize;

use crate::contfrac::Fraction;
use crate::error::{Error, Result};
use crate::qrational::{left_q_rational, matrix_sending_zero_to, q_rational, Method};
use crate::ring::LaurentSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(Error::Parse(format!("side must be left or right, got {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Anchor {
    #[serde(rename = "right_q")]
    RightQ,
    #[serde(rename = "left_flat")]
    LeftFlat,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StabilizationReport {
    pub x: Fraction,
    pub side: Side,
    pub sequence: Vec<Fraction>,
    /// Last exponent on which the final three expansions agree.
    pub stable_to: i64,
    pub limit_series: LaurentSeries,
    pub agrees_with: Vec<Anchor>,
}

fn first_disagreement(a: &LaurentSeries, b: &LaurentSeries, from: i64, to: i64) -> Option<i64> {
    (from..=to).find(|&e| a.coeff(e) != b.coeff(e))
}

/// Runs the approximation from `side` with `count` terms, expanding each
/// through `q^order`.
pub fn stabilization_experiment(
    x: &Fraction,
    side: Side,
    count: usize,
    order: i64,
) -> Result<StabilizationReport> {
    if count < 3 {
        return Err(Error::InvalidArguments("count must be at least 3".into()));
    }
    if x.is_infinite() {
        return Err(Error::InvalidArguments("x must be finite".into()));
    }
    let a = matrix_sending_zero_to(x);
    let sequence: Vec<Fraction> = (1..=count as i64)
        .map(|n| {
            let t = match side {
                Side::Right => Fraction::new(1, n),
                Side::Left => Fraction::new(-1, n),
            }
            .expect("n > 0");
            a.apply(&t)
        })
        .collect();
    let tail: Vec<LaurentSeries> = sequence[count - 3..]
        .iter()
        .map(|y| q_rational(y, Method::Negcf).value.taylor(order))
        .collect::<Result<_>>()?;
    let right = q_rational(x, Method::Negcf).value.taylor(order)?;
    let left = left_q_rational(x)?.value.taylor(order)?;

    let from = tail
        .iter()
        .chain([&right, &left])
        .map(LaurentSeries::start)
        .min()
        .expect("nonempty");
    let stable_to = [
        first_disagreement(&tail[0], &tail[1], from, order),
        first_disagreement(&tail[1], &tail[2], from, order),
    ]
    .into_iter()
    .flatten()
    .min()
    .map_or(order, |e| e - 1);

    let limit = tail[2].truncate(stable_to);
    let mut agrees_with = Vec::new();
    if first_disagreement(&limit, &right, from, stable_to).is_none() {
        agrees_with.push(Anchor::RightQ);
    }
    if first_disagreement(&limit, &left, from, stable_to).is_none() {
        agrees_with.push(Anchor::LeftFlat);
    }
    Ok(StabilizationReport {
        x: x.clone(),
        side,
        sequence,
        stable_to,
        limit_series: limit,
        agrees_with,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(x: &str, side: Side) -> StabilizationReport {
        stabilization_experiment(&x.parse().unwrap(), side, 30, 20).unwrap()
    }

    #[test]
    fn zero_from_both_sides() {
        let r = run("0", Side::Right);
        assert_eq!(r.sequence[1], "1/2".parse().unwrap());
        assert!(r.stable_to >= 20);
        assert!(r.limit_series.is_zero());
        assert_eq!(r.agrees_with, vec![Anchor::RightQ]);

        let l = run("0", Side::Left);
        assert_eq!(l.sequence[1], "-1/2".parse().unwrap());
        assert_eq!(l.limit_series, LaurentSeries::from_i64s(-1, 20, &[-1, 1]));
        assert_eq!(l.agrees_with, vec![Anchor::LeftFlat]);
    }

    #[test]
    fn doubling_at_small_rationals() {
        for x in ["1", "1/2", "2/3", "2", "-3/2"] {
            let r = run(x, Side::Right);
            let l = run(x, Side::Left);
            assert!(r.stable_to >= 10 && l.stable_to >= 10, "{x}");
            assert_eq!(r.agrees_with, vec![Anchor::RightQ], "{x}");
            assert_eq!(l.agrees_with, vec![Anchor::LeftFlat], "{x}");
        }
    }

    #[test]
    fn sequences_are_monotone() {
        let r = run("2/3", Side::Right);
        assert!(r.sequence.windows(2).all(|w| w[0] > w[1]));
        let l = run("2/3", Side::Left);
        assert!(l.sequence.windows(2).all(|w| w[0] < w[1]));
    }
}
