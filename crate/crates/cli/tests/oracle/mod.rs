//! Reference computations for the acceptance and CLI tests, written against
//! the definitions only: the generator action on pairs, Pascal-type
//! recurrences, rational Gaussian elimination and winding numbers. Nothing
//! here calls the library's q-rational, Hankel or root-finding code.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use qnum_core::contfrac::Fraction;
use qnum_core::ring::{IntPoly, LaurentPoly, RatFunc};

type Pair = (LaurentPoly, LaurentPoly);

#[derive(Clone, Copy)]
enum Op {
    T,
    TInv,
    S,
}

fn q() -> LaurentPoly {
    LaurentPoly::q_pow(1)
}

fn apply(op: Op, (n, d): Pair) -> Pair {
    match op {
        // [x + 1] = q[x] + 1
        Op::T => (&(&q() * &n) + &d, d),
        // [x - 1] = ([x] - 1)/q
        Op::TInv => (&n - &d, &q() * &d),
        // [-1/x] = -1/(q[x])
        Op::S => (-&d, &q() * &n),
    }
}

/// Generator steps carrying 0 to `x`, outermost first.
fn descent(x: &Fraction) -> Vec<Op> {
    let mut ops = Vec::new();
    if x.is_infinite() {
        ops.push(Op::S);
        return ops;
    }
    let one = Fraction::from_int(1);
    let mut x = x.clone();
    while !x.num().is_zero() {
        if x >= one {
            ops.push(Op::T);
            x = x - one.clone();
        } else if x.is_positive() {
            ops.push(Op::S);
            x = -x.recip();
        } else {
            ops.push(Op::TInv);
            x = x + one.clone();
        }
    }
    ops
}

fn run(x: &Fraction, start: Pair) -> RatFunc {
    let (n, d) = descent(x).into_iter().rev().fold(start, |p, op| apply(op, p));
    RatFunc::from_laurent_pair(&n, &d).expect("nonzero pair")
}

/// `[x]_q`, built from `[0]_q = 0` by the generator action.
pub fn q_rational(x: &Fraction) -> RatFunc {
    run(x, (LaurentPoly::zero(), LaurentPoly::one()))
}

/// `[x]^flat_q`, the same steps started from `(q - 1)/q`.
pub fn q_rational_flat(x: &Fraction) -> RatFunc {
    run(x, (&q() - &LaurentPoly::one(), q()))
}

pub fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

pub fn unimodal(c: &[BigInt]) -> bool {
    let mut falling = false;
    for w in c.windows(2) {
        if w[1] < w[0] {
            falling = true;
        } else if w[1] > w[0] && falling {
            return false;
        }
    }
    true
}

/// Coefficients after removing the power of `q` that divides `p`.
pub fn body(p: &IntPoly) -> Vec<BigInt> {
    let c = p.coeffs();
    let start = c.iter().position(|x| !x.is_zero()).unwrap_or(c.len());
    c[start..].to_vec()
}

pub fn palindromic_up_to_shift(p: &IntPoly) -> bool {
    let b = body(p);
    b.iter().eq(b.iter().rev())
}

/// `(n choose m)_q` by `(n m) = (n-1 m-1) + q^m (n-1 m)`.
pub fn gaussian_binomial(n: usize, m: usize) -> Vec<BigInt> {
    let mut row: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for r in 1..=n {
        let mut next = Vec::with_capacity(r + 1);
        for k in 0..=r {
            let mut c = vec![BigInt::zero(); k * (r - k) + 1];
            if k > 0 {
                for (i, x) in row[k - 1].iter().enumerate() {
                    c[i] += x;
                }
            }
            if k < r {
                for (i, x) in row[k].iter().enumerate() {
                    c[i + k] += x;
                }
            }
            next.push(c);
        }
        row = next;
    }
    row.swap_remove(m)
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det(mut m: Vec<Vec<Fraction>>) -> BigInt {
    let n = m.len();
    let mut sign = false;
    let mut out = Fraction::from_int(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].num().is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            m.swap(p, col);
            sign = !sign;
        }
        let pivot = m[col][col].clone();
        out = out * pivot.clone();
        let (top, below) = m.split_at_mut(col + 1);
        let prow = &top[col];
        for row in below {
            let f = row[col].clone() / pivot.clone();
            if f.num().is_zero() {
                continue;
            }
            for (x, p) in row[col..].iter_mut().zip(&prow[col..]) {
                *x = x.clone() - f.clone() * p.clone();
            }
        }
    }
    assert!(out.den().is_one(), "integer matrix has integer determinant");
    let d = out.num().clone();
    if sign {
        -d
    } else {
        d
    }
}

/// `Delta^(k)_n = det (a_{k+i+j+1})_{0 <= i, j < n}` with `a_1` the constant
/// term, for `n = 0 .. count - 1`.
pub fn hankel_row(coeffs: &[BigInt], k: usize, count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|n| {
            let m = (0..n)
                .map(|i| (0..n).map(|j| Fraction::from_int(coeffs[k + i + j].clone())).collect())
                .collect();
            det(m)
        })
        .collect()
}

pub fn somos4(d: &[BigInt]) -> bool {
    d.windows(5).all(|w| &w[4] * &w[0] == &w[3] * &w[1] - &w[2] * &w[2])
}

pub fn catalan_numbers(n: usize) -> Vec<BigInt> {
    let mut c = vec![BigInt::one()];
    for k in 1..n {
        // C_k = C_{k-1} (4k - 2)/(k + 1)
        let next = &c[k - 1] * BigInt::from(4 * k - 2) / BigInt::from(k + 1);
        c.push(next);
    }
    c
}

pub fn motzkin_numbers(n: usize) -> Vec<BigInt> {
    let mut m: Vec<BigInt> = Vec::new();
    for k in 0..n {
        // M_k = M_{k-1} + sum_{i + j = k - 2} M_i M_j
        let mut v = if k == 0 { BigInt::one() } else { m[k - 1].clone() };
        if k >= 2 {
            for i in 0..=k - 2 {
                v += &m[i] * &m[k - 2 - i];
            }
        }
        m.push(v);
    }
    m
}

/// Cauchy product of two coefficient lists, truncated to `len` terms.
pub fn mul_trunc(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

/// Number of zeros of `p` inside `|q| < r`, from the winding number of
/// `p` along the circle. `None` if the circle passes too close to a zero.
pub fn zeros_inside(p: &IntPoly, r: f64) -> Option<i64> {
    let c: Vec<f64> = p.coeffs().iter().map(|x| x.to_string().parse().unwrap()).collect();
    let eval = |z: Complex64| c.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a);
    let samples = 64 * (c.len() + 8);
    let mut total = 0.0;
    let mut prev = eval(Complex64::from_polar(r, 0.0));
    let scale = c.iter().map(|a| a.abs()).fold(0.0, f64::max);
    for s in 1..=samples {
        let z = Complex64::from_polar(r, std::f64::consts::TAU * s as f64 / samples as f64);
        let v = eval(z);
        if v.norm() < 1e-9 * scale {
            return None;
        }
        let step = (v / prev).arg();
        if step.abs() > 1.0 {
            return None;
        }
        total += step;
        prev = v;
    }
    Some((total / std::f64::consts::TAU).round() as i64)
}

/// Reduced `n/m` for `1 <= m <= max_den`, `lo <= n/m < hi`.
pub fn grid(max_den: i64, lo: i64, hi: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for m in 1..=max_den {
        for n in lo * m..hi * m {
            if n.gcd(&m) == 1 {
                out.push(Fraction::new(n, m).unwrap());
            }
        }
    }
    out
}

/// Farey neighbor pairs `(left, right)` met while building the
/// Stern-Brocot tree under `[0, inf]` to the given depth.
pub fn stern_brocot_neighbors(depth: usize) -> Vec<(Fraction, Fraction)> {
    fn go(l: (i64, i64), r: (i64, i64), depth: usize, out: &mut Vec<(Fraction, Fraction)>) {
        let m = (l.0 + r.0, l.1 + r.1);
        let f = |p: (i64, i64)| if p.1 == 0 { Fraction::infinity() } else { Fraction::new(p.0, p.1).unwrap() };
        if r.1 != 0 {
            out.push((f(l), f(r)));
        }
        if depth == 0 {
            return;
        }
        go(l, m, depth - 1, out);
        go(m, r, depth - 1, out);
    }
    let mut out = Vec::new();
    go((0, 1), (1, 0), depth, &mut out);
    out
}

pub fn is_positive_poly(p: &IntPoly) -> bool {
    let b = body(p);
    !b.is_empty() && b.iter().all(|c| c.is_positive())
}
