use crate::contfrac::{AlgebraicNumber, CfExpander, ContinuedFraction};
use crate::error::{Error, Result};
use crate::ring::{LaurentPoly, LaurentSeries, RatFunc};

/// A source of regular partial quotients.
#[derive(Clone, Debug)]
pub enum CfStream {
    /// A terminating expansion: the value is rational.
    Rational(Vec<i64>),
    /// The first terms of an infinite expansion; asking for more is an error.
    Prefix(Vec<i64>),
    /// `prefix` followed by `period` repeated forever.
    Periodic { prefix: Vec<i64>, period: Vec<i64> },
    /// Terms computed on demand from an isolated real root.
    Algebraic(AlgebraicNumber),
}

impl CfStream {
    /// `[k, k, k, ...]`.
    pub fn constant(k: i64) -> Self {
        CfStream::Periodic {
            prefix: Vec::new(),
            period: vec![k],
        }
    }

    pub fn periodic(period: Vec<i64>) -> Self {
        CfStream::Periodic {
            prefix: Vec::new(),
            period,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let check = |terms: &[i64], skip: usize| {
            match terms.iter().enumerate().skip(skip).find(|(_, &t)| t < 1) {
                Some((i, t)) => Err(Error::InvalidContinuedFraction(format!(
                    "term {i} is {t}, must be at least 1"
                ))),
                None => Ok(()),
            }
        };
        match self {
            CfStream::Rational(t) | CfStream::Prefix(t) => {
                if t.is_empty() {
                    return Err(Error::InvalidContinuedFraction("no terms".into()));
                }
                check(t, 1)
            }
            CfStream::Periodic { prefix, period } => {
                if period.is_empty() {
                    return Err(Error::InvalidContinuedFraction("empty period".into()));
                }
                check(prefix, 1)?;
                check(period, if prefix.is_empty() { 1 } else { 0 })
            }
            CfStream::Algebraic(_) => Ok(()),
        }
    }

    pub fn cursor(&self) -> Cursor<'_> {
        Cursor {
            stream: self,
            cache: Vec::new(),
            expander: match self {
                CfStream::Algebraic(a) => Some(a.expander()),
                _ => None,
            },
        }
    }

    /// The first `n` terms, or fewer if the expansion terminates.
    pub fn take(&self, n: usize) -> Result<Vec<i64>> {
        let mut c = self.cursor();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            match c.get(i)? {
                Some(t) => out.push(t),
                None => break,
            }
        }
        Ok(out)
    }
}

/// Memoizing reader over a stream.
pub struct Cursor<'a> {
    stream: &'a CfStream,
    cache: Vec<i64>,
    expander: Option<CfExpander>,
}

impl Cursor<'_> {
    /// Term `i`; `None` past the end of a terminating expansion.
    pub fn get(&mut self, i: usize) -> Result<Option<i64>> {
        match self.stream {
            CfStream::Rational(t) => Ok(t.get(i).copied()),
            CfStream::Prefix(t) => t
                .get(i)
                .copied()
                .map(Some)
                .ok_or(Error::InsufficientTerms { needed: i + 1 }),
            CfStream::Periodic { prefix, period } => Ok(Some(if i < prefix.len() {
                prefix[i]
            } else {
                period[(i - prefix.len()) % period.len()]
            })),
            CfStream::Algebraic(_) => {
                let e = self.expander.as_mut().expect("algebraic cursor");
                while self.cache.len() <= i {
                    self.cache.push(e.next_term()?);
                }
                Ok(Some(self.cache[i]))
            }
        }
    }
}

/// Forward convergents of the q-deformed expansion
/// `[a0]_q + q^a0/([a1]_{q^-1} + q^-a1/([a2]_q + ...))`.
#[derive(Clone, Debug)]
pub struct QConvergents {
    prev: (LaurentPoly, LaurentPoly),
    cur: (LaurentPoly, LaurentPoly),
    last_term: Option<i64>,
    index: usize,
}

impl Default for QConvergents {
    fn default() -> Self {
        Self::new()
    }
}

impl QConvergents {
    pub fn new() -> Self {
        QConvergents {
            prev: (LaurentPoly::zero(), LaurentPoly::zero()),
            cur: (LaurentPoly::one(), LaurentPoly::zero()),
            last_term: None,
            index: 0,
        }
    }

    /// Feeds the next partial quotient.
    pub fn push(&mut self, a: i64) {
        let even = self.index.is_multiple_of(2);
        let b = if even {
            LaurentPoly::q_int(a)
        } else {
            LaurentPoly::q_int_inverse(a)
        };
        let next = match self.last_term {
            None => (b, LaurentPoly::one()),
            Some(prev_a) => {
                // the numerator attached to this level is q^(±prev_a), with
                // the sign of the previous level
                let e = if even { -prev_a } else { prev_a };
                let c = LaurentPoly::q_pow(e);
                (
                    &b * &self.cur.0 + &c * &self.prev.0,
                    &b * &self.cur.1 + &c * &self.prev.1,
                )
            }
        };
        self.prev = std::mem::replace(&mut self.cur, next);
        self.last_term = Some(a);
        self.index += 1;
    }

    pub fn len(&self) -> usize {
        self.index
    }

    pub fn is_empty(&self) -> bool {
        self.index == 0
    }

    pub fn value(&self) -> RatFunc {
        RatFunc::from_laurent_pair(&self.cur.0, &self.cur.1).expect("nonzero convergent")
    }

    pub fn series(&self, order: i64) -> Result<LaurentSeries> {
        // Divide the unreduced pair directly; reducing costs a polynomial gcd
        // per step. A common factor with a non-unit lowest coefficient can
        // make the quotient non-integral midway, so fall back to the reduced form.
        let (num, den) = &self.cur;
        if num.is_zero() {
            return Ok(LaurentSeries::zero(order));
        }
        let v = num.valuation() - den.valuation();
        let prec = order - v;
        if prec < 0 {
            return Ok(LaurentSeries::zero(order));
        }
        let n = LaurentSeries::from_laurent(&num.shift(-num.valuation()), prec);
        let d = LaurentSeries::from_laurent(&den.shift(-den.valuation()), prec);
        match n.div(&d) {
            Ok(s) => Ok(s.shift(v)),
            Err(Error::NonIntegral(_)) => self.value().taylor(order),
            Err(e) => Err(e),
        }
    }
}

/// Result of [`q_irrational_with_depth`].
#[derive(Clone, Debug)]
pub struct StableSeries {
    pub series: LaurentSeries,
    /// Number of partial quotients in the convergent that was expanded.
    pub terms_used: usize,
    /// Whether the expansion terminated (rational input).
    pub exact: bool,
}

/// `[x]_q` through `q^order` from a continued fraction stream.
pub fn q_irrational(cf: &CfStream, order: i64) -> Result<LaurentSeries> {
    q_irrational_with_depth(cf, order).map(|s| s.series)
}

/// Expands convergents until three consecutive ones agree through `q^order`,
/// starting from `order + 2` partial quotients.
pub fn q_irrational_with_depth(cf: &CfStream, order: i64) -> Result<StableSeries> {
    cf.validate()?;
    let mut cursor = cf.cursor();
    let mut conv = QConvergents::new();
    let start = (order.max(0) + 2) as usize;
    let mut window: Vec<LaurentSeries> = Vec::new();
    let mut i = 0usize;
    loop {
        let Some(a) = cursor.get(i)? else {
            return Ok(StableSeries {
                series: conv.series(order)?,
                terms_used: conv.len(),
                exact: true,
            });
        };
        conv.push(a);
        i += 1;
        if i < start {
            continue;
        }
        window.push(conv.series(order)?);
        if window.len() > 3 {
            window.remove(0);
        }
        if window.len() == 3 && window[0] == window[1] && window[1] == window[2] {
            return Ok(StableSeries {
                series: window.swap_remove(0),
                terms_used: i - 2,
                exact: false,
            });
        }
    }
}

/// The value of a finite regular continued fraction through the q-deformed
/// convergent recurrence.
pub fn convergent_value(cf: &ContinuedFraction) -> RatFunc {
    let mut c = QConvergents::new();
    for &a in cf.terms() {
        c.push(a);
    }
    c.value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::Fraction;
    use crate::qrational::{q_rational, Method};

    fn golden_prefix() -> Vec<i64> {
        vec![1, 0, 1, -1, 2, -4, 8, -17, 37, -82, 185, -423, 978, -2283, 5373, -12735, 30372]
    }

    #[test]
    fn golden_series() {
        let s = q_irrational(&CfStream::constant(1), 16).unwrap();
        assert_eq!(s, LaurentSeries::from_i64s(0, 16, &golden_prefix()));
    }

    #[test]
    fn rational_stream_is_exact() {
        let s = q_irrational(&CfStream::Rational(vec![2]), 5).unwrap();
        assert_eq!(s, LaurentSeries::from_i64s(0, 5, &[1, 1]));
    }

    #[test]
    fn convergents_match_q_rationals() {
        for s in ["5/2", "5/3", "21/13", "-7/3", "1/2", "0", "-1", "3"] {
            let x: Fraction = s.parse().unwrap();
            let cf = ContinuedFraction::of_regular(&x).unwrap();
            assert_eq!(convergent_value(&cf), q_rational(&x, Method::Negcf).value, "{s}");
            // the even-length form gives the same value
            let even = cf.normalize(crate::contfrac::Parity::Even).unwrap();
            assert_eq!(convergent_value(&even), q_rational(&x, Method::Negcf).value, "{s}");
        }
    }

    #[test]
    fn short_prefix_is_reported() {
        let e = q_irrational(&CfStream::Prefix(vec![1; 5]), 16);
        assert!(matches!(e, Err(Error::InsufficientTerms { .. })));
    }

    #[test]
    fn stabilization_is_monotone() {
        let streams = [
            CfStream::constant(2),
            CfStream::periodic(vec![1, 2]),
            CfStream::Periodic { prefix: vec![-2, 3], period: vec![1, 4] },
        ];
        for st in &streams {
            let long = q_irrational(st, 24).unwrap();
            for n in [0, 5, 11, 17] {
                let short = q_irrational(st, n).unwrap();
                assert_eq!(long.truncate(n), short);
            }
        }
    }

    #[test]
    fn negative_start_gives_laurent_series() {
        let s = q_irrational(&CfStream::Periodic { prefix: vec![-1], period: vec![1] }, 8).unwrap();
        // [-1 + 1/phi]_q = T_q^-2 [phi]_q has a pole at 0
        assert!(s.valuation().unwrap() < 0);
    }
}
