//! Radii of convergence.
//!
//! Roots are found by Durand–Kerner iteration in double precision on the
//! squarefree part, then certified by Weierstrass inclusion discs: each disc
//! of radius `n |W_i|` around an approximation holds a root, and pairwise
//! disjoint discs hold exactly one each.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::surd::Surd;
use crate::error::{Error, Result};
use crate::qrational::QRational;
use crate::ring::{big_to_f64, IntPoly, LaurentSeries};

/// `3 - 2 sqrt 2`, below which no radius of a q-real is expected.
pub const UNIVERSAL_BOUND: f64 = 0.171_572_875_253_809_9;
/// `(3 - sqrt 5)/2`, the radius for the golden ratio.
pub const GOLDEN_RADIUS: f64 = 0.381_966_011_250_105_1;

/// Coefficients needed by the ratio estimate.
pub const MIN_RATIO_TERMS: usize = 64;

const STEP_TOL: f64 = 1e-14;
const MAX_ITER: usize = 20_000;
const CERT_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadiusMethod {
    DenominatorRoots,
    SurdDiscriminantRoots,
    CoefficientRatio,
}

impl RadiusMethod {
    pub fn name(self) -> &'static str {
        match self {
            RadiusMethod::DenominatorRoots => "denominator-roots",
            RadiusMethod::SurdDiscriminantRoots => "surd-discriminant-roots",
            RadiusMethod::CoefficientRatio => "coefficient-ratio",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RadiusReport {
    /// `f64::INFINITY` when the function is entire.
    pub value: f64,
    pub method: RadiusMethod,
    pub certified: bool,
    /// The singularity of least modulus, when one was located.
    #[serde(skip)]
    pub witness: Option<Complex64>,
}

impl RadiusReport {
    fn infinite(method: RadiusMethod) -> Self {
        RadiusReport {
            value: f64::INFINITY,
            method,
            certified: true,
            witness: None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.value.is_infinite()
    }

    pub fn above_universal_bound(&self) -> bool {
        self.value >= UNIVERSAL_BOUND - 1e-9
    }

    pub fn above_golden_bound(&self) -> bool {
        self.value >= GOLDEN_RADIUS - 1e-9
    }
}

/// Approximate roots with a flag telling whether all were certified.
#[derive(Clone, Debug)]
pub struct Roots {
    pub roots: Vec<Complex64>,
    pub certified: bool,
}

/// Roots of a squarefree polynomial of positive degree.
pub fn durand_kerner(p: &IntPoly) -> Roots {
    let n = p.degree().expect("nonzero polynomial");
    assert!(n >= 1, "constant polynomial has no roots");
    let lead = big_to_f64(p.leading().expect("nonzero"));
    let monic: Vec<f64> = p.coeffs().iter().map(|c| big_to_f64(c) / lead).collect();
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c);
    let bound = 1.0 + monic[..n].iter().fold(0.0f64, |m, c| m.max(c.abs()));

    let seed = Complex64::new(0.4, 0.9);
    let mut z: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound).collect();
    if n == 1 {
        z[0] = Complex64::new(-monic[0], 0.0);
    }
    for _ in 0..MAX_ITER {
        let mut worst = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            if den.norm() == 0.0 {
                z[i] += Complex64::new(1e-8, 1e-8);
                worst = f64::INFINITY;
                continue;
            }
            let step = eval(z[i]) / den;
            z[i] -= step;
            worst = worst.max(step.norm() / z[i].norm().max(1.0));
        }
        if worst < STEP_TOL {
            break;
        }
    }

    // Weierstrass inclusion radii
    let radii: Vec<f64> = (0..n)
        .map(|i| {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= z[i] - z[j];
                }
            }
            n as f64 * (eval(z[i]) / den).norm()
        })
        .collect();
    let small = radii.iter().all(|r| r.is_finite() && *r < CERT_TOL);
    let disjoint = (0..n).all(|i| (i + 1..n).all(|j| (z[i] - z[j]).norm() > radii[i] + radii[j]));
    Roots {
        roots: z,
        certified: small && disjoint,
    }
}

/// `p / gcd(p, p')` without the factor `q`.
fn squarefree_nonzero_roots(p: &IntPoly) -> IntPoly {
    let (p, _) = p.strip_q_power();
    let p = p.primitive_part();
    if p.degree().unwrap_or(0) == 0 {
        return p;
    }
    let g = p.gcd(&p.derivative()).primitive_part();
    p.div_exact(&g).expect("gcd divides").primitive_part()
}

/// Product of the factors of odd multiplicity (Yun's algorithm over Z).
fn odd_multiplicity_part(p: &IntPoly) -> IntPoly {
    let f = p.primitive_part();
    if f.degree().unwrap_or(0) == 0 {
        return IntPoly::one();
    }
    let df = f.derivative();
    let a0 = f.gcd(&df).primitive_part();
    let mut b = f.div_exact(&a0).expect("gcd divides");
    let c = df.div_exact(&a0).expect("gcd divides");
    let mut d = &c - &b.derivative();
    let mut out = IntPoly::one();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d).primitive_part();
        let nb = b.div_exact(&a).expect("gcd divides");
        let nc = d.div_exact(&a).expect("gcd divides");
        d = &nc - &nb.derivative();
        b = nb;
        if i % 2 == 1 {
            out = &out * &a;
        }
        i += 1;
    }
    out
}

fn min_modulus(roots: &[Complex64]) -> Option<Complex64> {
    roots
        .iter()
        .copied()
        .min_by(|a, b| a.norm().total_cmp(&b.norm()))
}

/// Least modulus of a nonzero pole of `[x]_q`.
pub fn radius_of_qrational(x: &QRational) -> RadiusReport {
    let den = squarefree_nonzero_roots(x.den());
    if den.degree().unwrap_or(0) == 0 {
        return RadiusReport::infinite(RadiusMethod::DenominatorRoots);
    }
    let r = durand_kerner(&den);
    let w = min_modulus(&r.roots).expect("positive degree");
    RadiusReport {
        value: w.norm(),
        method: RadiusMethod::DenominatorRoots,
        certified: r.certified,
        witness: Some(w),
    }
}

/// Analytic continuation of `q^(t/2) sqrt(Q/q^t)` from 0 to `z` along the
/// segment, following the branch with positive value at 0.
fn continued_root(q: &IntPoly, z: Complex64) -> Complex64 {
    let (qt, t) = q.strip_q_power();
    const STEPS: usize = 4096;
    let mut prev = Complex64::new(big_to_f64(&qt.coeff(0)).sqrt(), 0.0);
    for k in 1..=STEPS {
        let w = qt.eval_complex(z * (k as f64 / STEPS as f64)).sqrt();
        prev = if (w - prev).norm() <= (w + prev).norm() { w } else { -w };
    }
    prev * z.powu((t / 2) as u32)
}

/// Least modulus of a singularity of `(P + sqrt Q)/R`: branch points are
/// the odd-multiplicity roots of `Q`; roots of `R` count unless the
/// numerator vanishes there on the chosen branch.
pub fn radius_of_surd(s: &Surd) -> Result<RadiusReport> {
    let (_, t) = s.q.strip_q_power();
    if t % 2 == 1 {
        return Err(Error::NotASquare(format!("discriminant has odd valuation {t}")));
    }
    let mut certified = true;
    let mut best: Option<Complex64> = None;
    let consider = |z: Complex64, best: &mut Option<Complex64>| {
        if best.is_none_or(|b| z.norm() < b.norm()) {
            *best = Some(z);
        }
    };

    let branch = squarefree_nonzero_roots(&odd_multiplicity_part(&s.q));
    if branch.degree().unwrap_or(0) > 0 {
        let r = durand_kerner(&branch);
        certified &= r.certified;
        for z in r.roots {
            consider(z, &mut best);
        }
    }
    let poles = squarefree_nonzero_roots(&s.r);
    if poles.degree().unwrap_or(0) > 0 {
        let r = durand_kerner(&poles);
        certified &= r.certified;
        for z in r.roots {
            if best.is_some_and(|b| z.norm() >= b.norm()) {
                continue;
            }
            let num = s.p.eval_complex(z) + continued_root(&s.q, z);
            let scale = 1.0 + s.p.eval_complex(z).norm();
            if num.norm() > 1e-7 * scale {
                consider(z, &mut best);
            }
        }
    }
    Ok(match best {
        None => RadiusReport::infinite(RadiusMethod::SurdDiscriminantRoots),
        Some(w) => RadiusReport {
            value: w.norm(),
            method: RadiusMethod::SurdDiscriminantRoots,
            certified,
            witness: Some(w),
        },
    })
}

/// `ln |c|` for big integers beyond the range of `f64`.
fn ln_abs(c: &BigInt) -> f64 {
    let bits = c.bits();
    if bits <= 1000 {
        return big_to_f64(c).abs().ln();
    }
    let shift = bits - 64;
    big_to_f64(&(c.abs() >> shift)).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Cauchy–Hadamard estimate `1 / max |a_n|^(1/n)` over the upper half of
/// the known coefficients. Never certified.
pub fn radius_of_series(s: &LaurentSeries) -> Result<RadiusReport> {
    let top = s.order();
    if top < MIN_RATIO_TERMS as i64 {
        return Err(Error::InsufficientTerms {
            needed: MIN_RATIO_TERMS,
        });
    }
    let from = (top / 2).max(1);
    let mut best: Option<f64> = None;
    for n in from..=top {
        let c = s.coeff(n);
        if c.is_zero() {
            continue;
        }
        let root = ln_abs(&c) / n as f64;
        best = Some(best.map_or(root, |b: f64| b.max(root)));
    }
    Ok(match best {
        None => RadiusReport {
            value: f64::INFINITY,
            method: RadiusMethod::CoefficientRatio,
            certified: false,
            witness: None,
        },
        Some(l) => RadiusReport {
            value: (-l).exp(),
            method: RadiusMethod::CoefficientRatio,
            certified: false,
            witness: None,
        },
    })
}

/// Anything whose radius can be reported.
pub enum RadiusInput<'a> {
    Rational(&'a QRational),
    Surd(&'a Surd),
    Series(&'a LaurentSeries),
}

pub fn radius(input: RadiusInput<'_>) -> Result<RadiusReport> {
    match input {
        RadiusInput::Rational(x) => Ok(radius_of_qrational(x)),
        RadiusInput::Surd(s) => radius_of_surd(s),
        RadiusInput::Series(s) => radius_of_series(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contfrac::Fraction;
    use crate::qirrational::{metallic, q_irrational, CfStream};
    use crate::qrational::{q_rational, Method};

    #[test]
    fn golden_radius() {
        let r = radius_of_surd(&metallic(1).unwrap()).unwrap();
        assert!((r.value - GOLDEN_RADIUS).abs() < 1e-6, "{}", r.value);
        assert!(r.certified);
        // the witness is the negative real root of q^2 + 3q + 1
        let w = r.witness.unwrap();
        assert!(w.im.abs() < 1e-9 && w.re < 0.0);
    }

    #[test]
    fn rational_vs_ratio_method() {
        let x = q_rational(&"8/5".parse::<Fraction>().unwrap(), Method::Negcf);
        let exact = radius_of_qrational(&x);
        assert!(exact.certified);
        let series = x.value.taylor(200).unwrap();
        let est = radius_of_series(&series).unwrap();
        assert!(!est.certified);
        assert!((est.value / exact.value - 1.0).abs() < 0.05, "{} vs {}", est.value, exact.value);
    }

    #[test]
    fn integers_are_entire() {
        let x = q_rational(&Fraction::from_int(7), Method::Negcf);
        assert!(radius_of_qrational(&x).is_infinite());
    }

    #[test]
    fn roots_of_known_polynomials() {
        // (q - 2)(q^2 + 1)
        let r = durand_kerner(&IntPoly::from_i64s(&[-2, 1, -2, 1]));
        assert!(r.certified);
        let mut m: Vec<f64> = r.roots.iter().map(|z| z.norm()).collect();
        m.sort_by(f64::total_cmp);
        assert!((m[0] - 1.0).abs() < 1e-12 && (m[2] - 2.0).abs() < 1e-12);
    }

    #[test]
    fn odd_part() {
        // (1+q)^2 (1-q+q^2)^3 (2+q)
        let a = IntPoly::from_i64s(&[1, 1]);
        let b = IntPoly::from_i64s(&[1, -1, 1]);
        let c = IntPoly::from_i64s(&[2, 1]);
        let p = &(&(&a * &a) * &b.pow(3)) * &c;
        assert_eq!(odd_multiplicity_part(&p), (&b * &c).primitive_part());
    }

    #[test]
    fn ratio_needs_enough_terms() {
        let s = q_irrational(&CfStream::constant(1), 30).unwrap();
        assert!(matches!(radius_of_series(&s), Err(Error::InsufficientTerms { needed: 64 })));
    }

    #[test]
    fn metallic_radii_above_bound() {
        for k in 1..=6 {
            let r = radius_of_surd(&metallic(k).unwrap()).unwrap();
            assert!(r.above_universal_bound(), "k = {k}: {}", r.value);
        }
    }
}
