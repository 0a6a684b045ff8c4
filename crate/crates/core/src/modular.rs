//! The modular group, words in its generators `T` and `S`, and their
//! q-deformations acting on rational functions of `q`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::contfrac::Fraction;
use crate::error::{Error, Result};
use crate::ring::{IntPoly, LaurentPoly, LaurentSeries, RatFunc};

/// An integer matrix `[[a, b], [c, d]]` of determinant one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixZ {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementClass {
    Hyperbolic,
    Parabolic,
    Elliptic,
}

impl fmt::Display for ElementClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementClass::Hyperbolic => "hyperbolic",
            ElementClass::Parabolic => "parabolic",
            ElementClass::Elliptic => "elliptic",
        })
    }
}

impl MatrixZ {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = MatrixZ {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.det();
        if !det.is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        Ok(m)
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1).expect("det 1")
    }

    pub fn t_pow(n: i64) -> Self {
        Self::new(1, n, 0, 1).expect("det 1")
    }

    pub fn s() -> Self {
        Self::new(0, -1, 1, 0).expect("det 1")
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Self) -> Self {
        MatrixZ {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn neg(&self) -> Self {
        MatrixZ {
            a: -&self.a,
            b: -&self.b,
            c: -&self.c,
            d: -&self.d,
        }
    }

    /// Equality in PSL(2, Z).
    pub fn eq_projective(&self, o: &Self) -> bool {
        self == o || self == &o.neg()
    }

    /// Fractional-linear action on the extended rationals.
    pub fn apply(&self, x: &Fraction) -> Fraction {
        let n = &self.a * x.num() + &self.b * x.den();
        let m = &self.c * x.num() + &self.d * x.den();
        Fraction::new(n, m).expect("invertible map never gives 0/0")
    }

    pub fn classify(&self) -> ElementClass {
        let t = self.trace().abs();
        if t >= BigInt::from(3) {
            ElementClass::Hyperbolic
        } else if t == BigInt::from(2) {
            ElementClass::Parabolic
        } else {
            ElementClass::Elliptic
        }
    }

    /// Word in `T`, `S` whose product is `±self`, by the Euclidean algorithm
    /// on the first column.
    pub fn decompose(&self) -> Word {
        let mut m = self.clone();
        if m.c.is_negative() || (m.c.is_zero() && m.a.is_negative()) {
            m = m.neg();
        }
        let mut gens = Vec::new();
        while !m.c.is_zero() {
            // m = T^k S m' with m' = [[c, d], [k c - a, k d - b]], 0 <= kc - a < c
            let k = m.a.div_ceil(&m.c);
            gens.push(Gen::T(k.clone()));
            gens.push(Gen::S);
            m = MatrixZ {
                a: m.c.clone(),
                b: m.d.clone(),
                c: &k * &m.c - &m.a,
                d: &k * &m.d - &m.b,
            };
        }
        // m = [[1, b], [0, 1]]
        gens.push(Gen::T(&m.b * &m.a));
        Word::from_gens(gens)
    }
}

impl fmt::Display for MatrixZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// A generator: `T^n` (any nonzero integer `n`) or `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    T(BigInt),
    S,
}

/// A word in the generators, kept reduced: adjacent powers of `T` merged,
/// zero powers dropped and `S S` pairs cancelled.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Gen>);

impl Word {
    pub fn from_gens(gens: impl IntoIterator<Item = Gen>) -> Self {
        let mut out: Vec<Gen> = Vec::new();
        for g in gens {
            match (out.last_mut(), g) {
                (_, Gen::T(n)) if n.is_zero() => {}
                (Some(Gen::T(m)), Gen::T(n)) => {
                    *m += n;
                    if m.is_zero() {
                        out.pop();
                    }
                }
                (Some(Gen::S), Gen::S) => {
                    out.pop();
                }
                (_, g) => out.push(g),
            }
        }
        Word(out)
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn matrix(&self) -> MatrixZ {
        self.0.iter().fold(MatrixZ::identity(), |acc, g| {
            let m = match g {
                Gen::T(n) => MatrixZ {
                    a: BigInt::one(),
                    b: n.clone(),
                    c: BigInt::zero(),
                    d: BigInt::one(),
                },
                Gen::S => MatrixZ::s(),
            };
            acc.mul(&m)
        })
    }

    /// Substitutes `T_q`, `S_q` and `T_q^-1 = [[1, -1], [0, q]]`.
    pub fn q_deform(&self) -> QMatrix {
        let mut acc = QMatrix::identity();
        for g in &self.0 {
            let m = match g {
                Gen::S => QMatrix::s(),
                Gen::T(n) => QMatrix::t_pow(n),
            };
            acc = acc.mul(&m);
        }
        acc
    }

    pub fn concat(&self, o: &Word) -> Word {
        Word::from_gens(self.0.iter().chain(&o.0).cloned())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            match g {
                Gen::S => f.write_str("S")?,
                Gen::T(n) if n.is_one() => f.write_str("T")?,
                Gen::T(n) => write!(f, "T{n}")?,
            }
        }
        Ok(())
    }
}

/// Whitespace-separated tokens `S`, `T`, `Tn`, `T-n` or `T^n`; `I` or an
/// empty string is the identity.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut gens = Vec::new();
        for tok in s.split_whitespace() {
            match tok {
                "S" => gens.push(Gen::S),
                "I" => {}
                _ => {
                    let rest = tok
                        .strip_prefix('T')
                        .ok_or_else(|| Error::Parse(format!("unknown generator {tok:?}")))?;
                    let rest = rest.strip_prefix('^').unwrap_or(rest);
                    let n = if rest.is_empty() {
                        BigInt::one()
                    } else {
                        rest.parse::<BigInt>()
                            .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?
                    };
                    gens.push(Gen::T(n));
                }
            }
        }
        Ok(Word::from_gens(gens))
    }
}

/// A 2x2 matrix over `Z[q]` taken up to scalar multiples, stored in
/// canonical form: no common power of `q` or common polynomial factor, and
/// the trace (or, if the trace vanishes, the first nonzero entry) has
/// positive lowest coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QMatrix {
    a: IntPoly,
    b: IntPoly,
    c: IntPoly,
    d: IntPoly,
}

impl QMatrix {
    pub fn from_laurent(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly, d: LaurentPoly) -> Self {
        let entries = [a, b, c, d];
        let v = entries
            .iter()
            .filter(|e| !e.is_zero())
            .map(LaurentPoly::valuation)
            .min()
            .expect("nonzero matrix");
        let [a, b, c, d] = entries.map(|e| e.shift(-v).to_poly().expect("nonnegative"));
        Self::canonical(a, b, c, d)
    }

    fn canonical(a: IntPoly, b: IntPoly, c: IntPoly, d: IntPoly) -> Self {
        let g = a.gcd(&b).gcd(&c).gcd(&d);
        let div = |p: IntPoly| p.div_exact(&g).expect("gcd divides");
        let (mut a, mut b, mut c, mut d) = (div(a), div(b), div(c), div(d));
        let tr = &a + &d;
        let flip = match tr.lowest() {
            Some(l) => l.is_negative(),
            None => [&a, &b, &c, &d]
                .iter()
                .find_map(|p| p.lowest())
                .is_some_and(Signed::is_negative),
        };
        if flip {
            (a, b, c, d) = (-a, -b, -c, -d);
        }
        QMatrix { a, b, c, d }
    }

    pub fn new(a: IntPoly, b: IntPoly, c: IntPoly, d: IntPoly) -> Self {
        Self::from_laurent(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Self::new(IntPoly::one(), IntPoly::zero(), IntPoly::zero(), IntPoly::one())
    }

    /// `T_q = [[q, 1], [0, 1]]`.
    pub fn t() -> Self {
        Self::new(IntPoly::q_pow(1), IntPoly::one(), IntPoly::zero(), IntPoly::one())
    }

    /// `T_q^-1 = [[1, -1], [0, q]]` (up to scalar).
    pub fn t_inv() -> Self {
        Self::new(IntPoly::one(), -IntPoly::one(), IntPoly::zero(), IntPoly::q_pow(1))
    }

    /// `S_q = [[0, -1], [q, 0]]`.
    pub fn s() -> Self {
        Self::new(IntPoly::zero(), -IntPoly::one(), IntPoly::q_pow(1), IntPoly::zero())
    }

    /// `T_q^n = [[q^n, [n]_q], [0, 1]]`, for negative `n` scaled to clear `q^-n`.
    pub fn t_pow(n: &BigInt) -> Self {
        let n: i64 = n.try_into().expect("exponent fits in i64");
        Self::from_laurent(
            LaurentPoly::q_pow(n),
            LaurentPoly::q_int(n),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    pub fn entries(&self) -> [&IntPoly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::canonical(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn trace(&self) -> IntPoly {
        &self.a + &self.d
    }

    pub fn det(&self) -> IntPoly {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Integer matrix at `q = 1`; equals `±` the undeformed product.
    pub fn eval_one(&self) -> [BigInt; 4] {
        [
            self.a.eval_one(),
            self.b.eval_one(),
            self.c.eval_one(),
            self.d.eval_one(),
        ]
    }

    /// `(a X + b)/(c X + d)`, with `X = 1/0` handled projectively.
    pub fn moebius(&self, x: &RatFunc) -> RatFunc {
        let (n, m) = (x.num(), x.den());
        RatFunc::reduce(&self.a * n + &self.b * m, &self.c * n + &self.d * m)
            .expect("invertible matrix never gives 0/0")
    }

    /// The same action on a truncated series.
    pub fn moebius_series(&self, s: &LaurentSeries) -> Result<LaurentSeries> {
        let l = |p: &IntPoly| LaurentPoly::from(p.clone());
        s.moebius(&l(&self.a), &l(&self.b), &l(&self.c), &l(&self.d))
    }
}

impl fmt::Display for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}
