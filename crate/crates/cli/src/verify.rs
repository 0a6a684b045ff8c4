//! Batched property suites.
//!
//! Cases run in parallel; results are collected by case index so reports do
//! not depend on scheduling. Randomized cases draw from a ChaCha stream
//! seeded by `--seed`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use qnum_core::analysis::{
    catalan_motzkin_check, catalan_series, detect_periodicity, hankel, motzkin_series,
    probe_printed_operators, somos4_check, symmetry_check, vieta_check, Cubic, Periodicity,
};
use qnum_core::contfrac::Fraction;
use qnum_core::fixtures::{self, FixtureValue};
use qnum_core::modular::{Gen, MatrixZ, Word};
use qnum_core::qirrational::{
    metallic, q_irrational, radius_of_qrational, radius_of_surd, stabilization_experiment, Anchor,
    CfStream, Side, UNIVERSAL_BOUND, GOLDEN_RADIUS,
};
use qnum_core::qrational::{
    as_q_power, diff_poly, farey_tree, is_unimodal, q_rational, Method,
};
use qnum_core::ring::IntPoly;
use qnum_core::snake::{count_paths_by_area, path_count, q_binomial, snake_denominator, snake_of};

use crate::output::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Methods,
    Positivity,
    Unimodal,
    Trace,
    Farey,
    Snake,
    Stabilize,
    Hankel,
    Vieta,
    CatalanMotzkin,
    Symmetry,
    Radius,
    All,
}

impl Suite {
    pub const EACH: [Suite; 12] = [
        Suite::Methods,
        Suite::Positivity,
        Suite::Unimodal,
        Suite::Trace,
        Suite::Farey,
        Suite::Snake,
        Suite::Stabilize,
        Suite::Hankel,
        Suite::Vieta,
        Suite::CatalanMotzkin,
        Suite::Symmetry,
        Suite::Radius,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Methods => "methods",
            Suite::Positivity => "positivity",
            Suite::Unimodal => "unimodal",
            Suite::Trace => "trace",
            Suite::Farey => "farey",
            Suite::Snake => "snake",
            Suite::Stabilize => "stabilize",
            Suite::Hankel => "hankel",
            Suite::Vieta => "vieta",
            Suite::CatalanMotzkin => "catalan-motzkin",
            Suite::Symmetry => "symmetry",
            Suite::Radius => "radius",
            Suite::All => "all",
        }
    }
}

/// Ceilings for the suites. `None` picks the suite's own default.
#[derive(Clone, Debug)]
pub struct Limits {
    pub max_den: Option<u64>,
    pub depth: usize,
    pub order: i64,
    pub count: Option<usize>,
    pub seed: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_den: None,
            depth: 10,
            order: 32,
            count: None,
            seed: 0,
        }
    }
}

pub const MAX_DEN_CEILING: u64 = 200;
pub const DEPTH_CEILING: usize = 16;
pub const ORDER_CEILING: i64 = 400;
pub const COUNT_CEILING: usize = 1_000_000;

impl Limits {
    pub fn check(&self) -> Result<(), String> {
        if self.max_den.is_some_and(|d| d == 0 || d > MAX_DEN_CEILING) {
            return Err(format!("--max-den must be in 1..={MAX_DEN_CEILING}"));
        }
        if self.depth > DEPTH_CEILING {
            return Err(format!("--depth must be at most {DEPTH_CEILING}"));
        }
        if !(5..=ORDER_CEILING).contains(&self.order) {
            return Err(format!("--order must be in 5..={ORDER_CEILING} for verify"));
        }
        if self.count.is_some_and(|c| c == 0 || c > COUNT_CEILING) {
            return Err(format!("--count must be in 1..={COUNT_CEILING}"));
        }
        Ok(())
    }

    fn max_den(&self, default: u64) -> u64 {
        self.max_den.unwrap_or(default)
    }

    fn count(&self, default: usize) -> usize {
        self.count.unwrap_or(default)
    }

    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }
}

/// Tally of one property over a list of cases.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(rename = "firstFailure")]
    pub first_failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
    /// Observations that are reported but not asserted.
    pub notes: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Outcome = Result<(), String>;

fn tally<T: Sync>(name: &str, cases: &[T], f: impl Fn(&T) -> Outcome + Sync) -> Check {
    let results: Vec<Outcome> = cases.par_iter().map(&f).collect();
    let failures = results.iter().filter(|r| r.is_err()).count();
    Check {
        name: name.into(),
        cases: cases.len(),
        failures,
        first_failure: results.into_iter().find_map(Result::err),
    }
}

fn single(name: &str, f: impl FnOnce() -> Outcome) -> Check {
    let r = f();
    Check {
        name: name.into(),
        cases: 1,
        failures: usize::from(r.is_err()),
        first_failure: r.err(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn frac(n: i64, m: i64) -> Fraction {
    Fraction::new(n, m).expect("nonzero denominator")
}

/// Reduced `n/m` with `1 <= m <= max_den` and `lo*m <= n < hi*m`.
pub fn fractions(max_den: u64, lo: i64, hi: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for m in 1..=max_den as i64 {
        for n in lo * m..hi * m {
            if num_integer::gcd(n, m) == 1 {
                out.push(frac(n, m));
            }
        }
    }
    out
}

/// Reduced `n/m`, `n, m >= 1`, with `n + m <= bound`.
pub fn fractions_by_height(bound: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for m in 1..bound {
        for n in 1..=bound - m {
            if num_integer::gcd(n, m) == 1 {
                out.push(frac(n, m));
            }
        }
    }
    out
}

fn random_fraction(rng: &mut impl Rng, max_den: i64, lo: i64, hi: i64) -> Fraction {
    let m = rng.gen_range(1..=max_den);
    let n = rng.gen_range(lo * m..hi * m);
    frac(n, m)
}

fn random_word(rng: &mut impl Rng, max_len: usize, max_power: i64) -> Word {
    let len = rng.gen_range(1..=max_len);
    Word::from_gens((0..len).map(|_| {
        if rng.gen_bool(0.5) {
            Gen::S
        } else {
            let mut k = rng.gen_range(1..=max_power);
            if rng.gen_bool(0.5) {
                k = -k;
            }
            Gen::T(BigInt::from(k))
        }
    }))
}

fn strictly_positive(p: &IntPoly) -> bool {
    let (body, _) = p.strip_q_power();
    !p.is_zero() && body.coeffs().iter().all(Signed::is_positive)
}

fn nonnegative(p: &IntPoly) -> bool {
    p.coeffs().iter().all(|c| !c.is_negative())
}

pub fn run_suite(suite: Suite, lim: &Limits) -> Vec<SuiteReport> {
    if suite == Suite::All {
        return Suite::EACH.iter().flat_map(|&s| run_suite(s, lim)).collect();
    }
    let (checks, notes) = match suite {
        Suite::Methods => methods(lim),
        Suite::Positivity => positivity(lim),
        Suite::Unimodal => unimodal(lim),
        Suite::Trace => trace(lim),
        Suite::Farey => farey(lim),
        Suite::Snake => snake(lim),
        Suite::Stabilize => stabilize(lim),
        Suite::Hankel => hankel_suite(),
        Suite::Vieta => vieta(lim),
        Suite::CatalanMotzkin => catalan_motzkin(lim),
        Suite::Symmetry => symmetry(lim),
        Suite::Radius => radius(lim),
        Suite::All => unreachable!(),
    };
    vec![SuiteReport {
        suite,
        checks,
        notes,
    }]
}

type SuiteOut = (Vec<Check>, Vec<String>);

/// Four methods on every `n/m` with `n + m <= 2 max_den`, their negatives,
/// `0` and `inf`; q = 1 specialization; equivariance under random words.
fn methods(lim: &Limits) -> SuiteOut {
    let bound = 2 * lim.max_den(60) as i64;
    let mut xs = fractions_by_height(bound);
    let negs: Vec<Fraction> = xs.iter().map(|x| -x).collect();
    xs.extend(negs);
    xs.push(Fraction::zero());
    xs.push(Fraction::infinity());
    let agree = tally("four methods agree", &xs, |x| {
        let v: Vec<_> = Method::ALL.iter().map(|&m| q_rational(x, m).value).collect();
        match v.iter().position(|w| w != &v[0]) {
            None => Ok(()),
            Some(i) => Err(format!("{x}: {} gives {}, negcf gives {}", Method::ALL[i].name(), v[i], v[0])),
        }
    });
    let at_one = tally("value at q = 1", &xs, |x| {
        let v = q_rational(x, Method::Negcf).value;
        let got = if v.is_infinity() { Some(Fraction::infinity()) } else { v.eval_one() };
        ensure(got.as_ref() == Some(x), || format!("{x}: value at 1 is {got:?}"))
    });
    let positive: Vec<&Fraction> = xs.iter().filter(|x| x.is_positive() && !x.is_infinite()).collect();
    let coeffs = tally("positive coefficients for x > 0", &positive, |x| {
        let v = q_rational(x, Method::Negcf);
        ensure(nonnegative(v.num()) && nonnegative(v.den()), || format!("{x}: {}", v.value))
    });
    let mut rng = lim.rng(1);
    let pairs: Vec<(Word, Fraction)> = (0..lim.count(1000))
        .map(|_| (random_word(&mut rng, 12, 3), random_fraction(&mut rng, 30, -3, 3)))
        .collect();
    let equiv = tally("PSL(2,Z)-equivariance", &pairs, |(w, x)| {
        let lhs = q_rational(&w.matrix().apply(x), Method::Negcf).value;
        let rhs = w.q_deform().moebius(&q_rational(x, Method::Negcf).value);
        ensure(lhs == rhs, || format!("word {w}, x = {x}: {lhs} vs {rhs}"))
    });
    (vec![agree, at_one, coeffs, equiv], vec![])
}

/// Random ordered pairs and Farey-neighbor pairs.
fn positivity(lim: &Limits) -> SuiteOut {
    let den = lim.max_den(40) as i64;
    let mut rng = lim.rng(2);
    let mut pairs = Vec::new();
    while pairs.len() < lim.count(10_000) {
        let x = random_fraction(&mut rng, den, 0, 4);
        let y = random_fraction(&mut rng, den, 0, 4);
        match x.cmp(&y) {
            std::cmp::Ordering::Greater => pairs.push((x, y)),
            std::cmp::Ordering::Less => pairs.push((y, x)),
            std::cmp::Ordering::Equal => {}
        }
    }
    let positive = tally("diff_poly strictly positive", &pairs, |(x, y)| {
        let d = diff_poly(x, y).map_err(|e| e.to_string())?;
        ensure(strictly_positive(&d), || format!("({x}, {y}): {d}"))
    });
    let iff = tally("q-power iff Farey neighbors (random pairs)", &pairs, |(x, y)| {
        let d = diff_poly(x, y).map_err(|e| e.to_string())?;
        let neighbors = x.cross(y).abs().is_one();
        ensure(as_q_power(&d).is_some() == neighbors, || {
            format!("({x}, {y}): {d}, neighbors {neighbors}")
        })
    });
    let mut neighbor_pairs = Vec::new();
    for node in farey_tree(lim.depth) {
        for p in [&node.parents.0, &node.parents.1] {
            if p.is_infinite() {
                continue;
            }
            if &node.fraction > p {
                neighbor_pairs.push((node.fraction.clone(), p.clone()));
            } else {
                neighbor_pairs.push((p.clone(), node.fraction.clone()));
            }
        }
    }
    let neighbors = tally("Farey neighbors give a power of q", &neighbor_pairs, |(x, y)| {
        let d = diff_poly(x, y).map_err(|e| e.to_string())?;
        ensure(as_q_power(&d).is_some(), || format!("({x}, {y}): {d}"))
    });
    (vec![positive, iff, neighbors], vec![])
}

/// Numerators and denominators for `0 < x < 3` with bounded denominator,
/// and Gaussian binomials.
/// Upper end of the unimodality grid `(0, UNIMODAL_SPAN]`.
pub const UNIMODAL_SPAN: i64 = 8;

fn unimodal(lim: &Limits) -> SuiteOut {
    // Negative x has signed coefficients; the claim is for x > 0.
    let mut xs = fractions(lim.max_den(60), 0, UNIMODAL_SPAN);
    xs.retain(Fraction::is_positive);
    xs.push(Fraction::from(UNIMODAL_SPAN));
    let fr = tally("N and M unimodal", &xs, |x| {
        let v = q_rational(x, Method::Negcf);
        ensure(is_unimodal(v.num().coeffs()) && is_unimodal(v.den().coeffs()), || {
            format!("{x}: {}", v.value)
        })
    });
    let nm: Vec<(i64, i64)> = (0..=30).flat_map(|n| (0..=n).map(move |m| (n, m))).collect();
    let binom = tally("q-binomial unimodal and palindromic, n <= 30", &nm, |&(n, m)| {
        let p = q_binomial(n, m).map_err(|e| e.to_string())?;
        ensure(is_unimodal(p.coeffs()) && p.is_palindromic(), || format!("({n} {m})_q = {p}"))
    });
    let at_one = tally("q-binomial at q = 1", &nm, |&(n, m)| {
        let p = q_binomial(n, m).map_err(|e| e.to_string())?;
        let want = binomial(BigInt::from(n), BigInt::from(m));
        ensure(p.eval_one() == want, || format!("({n} {m})_q(1) = {}", p.eval_one()))
    });
    (vec![fr, binom, at_one], vec![])
}

fn trace(lim: &Limits) -> SuiteOut {
    let mut rng = lim.rng(3);
    let words: Vec<Word> = (0..lim.count(1000)).map(|_| random_word(&mut rng, 20, 4)).collect();
    let pal = tally("trace palindromic up to q^k", &words, |w| {
        let t = w.q_deform().trace();
        ensure(t.is_palindromic_up_to_shift(), || format!("{w}: trace {t}"))
    });
    // The lift is defined up to a scalar, so a q^k factor is allowed. Report
    // how often the canonical lift needs no shift at all.
    let strict = words.iter().filter(|w| w.q_deform().trace().is_palindromic()).count();
    let note = format!("{strict}/{} traces palindromic without removing a power of q", words.len());
    let at_one = tally("q = 1 specialization is +-(word product)", &words, |w| {
        let [a, b, c, d] = w.q_deform().eval_one();
        let m = MatrixZ { a, b, c, d };
        ensure(m.eq_projective(&w.matrix()), || format!("{w}: {m} vs {}", w.matrix()))
    });
    let det = tally("determinant is +-q^k", &words, |w| {
        let d = w.q_deform().det();
        let (body, _) = d.strip_q_power();
        ensure(body.is_constant() && body.coeff(0).abs().is_one(), || format!("{w}: det {d}"))
    });
    let bq = single("B_q fixture", || {
        let f = fixtures::expect("bq");
        let FixtureValue::QMatrix(want) = &f.value else {
            return Err("fixture bq is not a matrix".into());
        };
        let word: Word = f.input().unwrap_or_default().parse().map_err(|e: qnum_core::Error| e.to_string())?;
        let b = MatrixZ::new(5, 2, 2, 1).map_err(|e| e.to_string())?;
        ensure(&word.q_deform() == want, || format!("printed word gives {}", word.q_deform()))?;
        ensure(&b.decompose().q_deform() == want, || {
            format!("decomposition {} gives {}", b.decompose(), b.decompose().q_deform())
        })
    });
    (vec![pal, at_one, det, bq], vec![note])
}

fn farey(lim: &Limits) -> SuiteOut {
    let nodes = farey_tree(lim.depth);
    let values = tally("node value equals [x]_q", &nodes, |n| {
        let want = q_rational(&n.fraction, Method::Regcf).value;
        ensure(n.value == want, || format!("{}: {} vs {want}", n.fraction, n.value))
    });
    let neighbors = tally("parents are Farey neighbors of the node", &nodes, |n| {
        let ok = [&n.parents.0, &n.parents.1]
            .iter()
            .all(|p| n.fraction.cross(p).abs().is_one());
        ensure(ok, || format!("{} with parents {}, {}", n.fraction, n.parents.0, n.parents.1))
    });
    let weights = tally("edge weights: left 1, right d + 1", &nodes, |n| {
        ensure(n.left_edge_weight == 1 && n.right_edge_weight == n.weight + 1, || {
            format!("{}: weight {}, edges {} {}", n.fraction, n.weight, n.left_edge_weight, n.right_edge_weight)
        })
    });
    (vec![values, neighbors, weights], vec![])
}

/// Every `n/m >= 1` with `n <= 40`.
fn snake(lim: &Limits) -> SuiteOut {
    let max_n = lim.max_den(40) as i64;
    let mut xs = Vec::new();
    for n in 1..=max_n {
        for m in 1..=n {
            if num_integer::gcd(n, m) == 1 {
                xs.push(frac(n, m));
            }
        }
    }
    let num = tally("area-weighted paths equal N(q)", &xs, |x| {
        let region = snake_of(x).map_err(|e| e.to_string())?;
        let got = count_paths_by_area(&region);
        let want = q_rational(x, Method::Negcf);
        ensure(&got == want.num(), || format!("{x}: {got} vs {}", want.num()))
    });
    let count = tally("path count equals n", &xs, |x| {
        let region = snake_of(x).map_err(|e| e.to_string())?;
        let got = path_count(&region);
        ensure(&got == x.num(), || format!("{x}: {got} paths"))
    });
    let den = tally("smaller snake gives M(q)", &xs, |x| {
        let got = snake_denominator(x).map_err(|e| e.to_string())?;
        let want = q_rational(x, Method::Negcf);
        ensure(&got == want.den(), || format!("{x}: {got} vs {}", want.den()))
    });
    (vec![num, count, den], vec![])
}

fn stabilize(lim: &Limits) -> SuiteOut {
    let order = lim.order.min(20);
    let xs: Vec<Fraction> = ["0", "1", "1/2", "2/3", "2", "3/2", "5/3", "-3/2", "1/3", "7/5"]
        .iter()
        .map(|s| s.parse().expect("literal"))
        .collect();
    let cases: Vec<(Fraction, Side)> = xs
        .iter()
        .flat_map(|x| [(x.clone(), Side::Right), (x.clone(), Side::Left)])
        .collect();
    let limits = tally("right limit is [x]_q, left limit is [x]^flat_q", &cases, |(x, side)| {
        let r = stabilization_experiment(x, *side, 30, order).map_err(|e| e.to_string())?;
        let want = match side {
            Side::Right => Anchor::RightQ,
            Side::Left => Anchor::LeftFlat,
        };
        ensure(r.agrees_with.contains(&want) && r.stable_to >= order / 2, || {
            format!("{x} {side:?}: stable to {}, agrees with {:?}", r.stable_to, r.agrees_with)
        })
    });
    let flat_fixtures = single("left-value fixtures", || {
        for name in ["left-0", "left-1", "left-2", "left-inf"] {
            let f = fixtures::expect(name);
            let x: Fraction = f.input().unwrap_or_default().parse().map_err(|e: qnum_core::Error| e.to_string())?;
            let got = qnum_core::qrational::left_q_rational(&x).map_err(|e| e.to_string())?;
            ensure(Some(&got.value) == f.ratfunc(), || format!("{name}: {}", got.value))?;
        }
        Ok(())
    });
    let mut rng = lim.rng(4);
    let streams: Vec<CfStream> = (0..lim.count(40))
        .map(|_| {
            let plen = rng.gen_range(0..3);
            let mut prefix: Vec<i64> = (0..plen).map(|_| rng.gen_range(1..6)).collect();
            if let Some(p) = prefix.first_mut() {
                *p = rng.gen_range(-3..4);
            }
            let period = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(1..5)).collect();
            CfStream::Periodic { prefix, period }
        })
        .collect();
    let prefix = tally("stabilized prefixes are monotone in the order", &streams, |st| {
        let long = q_irrational(st, order).map_err(|e| e.to_string())?;
        for n in [0, order / 3, order / 2, order - 1] {
            let short = q_irrational(st, n).map_err(|e| e.to_string())?;
            ensure(long.truncate(n) == short, || format!("{st:?}: order {n} disagrees"))?;
        }
        Ok(())
    });
    (vec![limits, flat_fixtures, prefix], vec![])
}

/// Compares a computed row with the named fixture.
fn row_matches(name: &str, got: &[BigInt]) -> Outcome {
    let f = fixtures::expect(name);
    let want = f.ints().ok_or_else(|| format!("fixture {name} is not a sequence"))?;
    ensure(got.len() >= want.len() && &got[..want.len()] == want, || {
        format!("{name}: got {:?}", &got[..want.len().min(got.len())])
    })
}

fn hankel_suite() -> SuiteOut {
    let golden = q_irrational(&CfStream::constant(1), 120).expect("golden series");
    let a = golden.coeff_range(0, 120);
    let mut checks = Vec::new();
    for k in 0..4usize {
        checks.push(single(&format!("golden row {k} matches fixture"), || {
            let h = hankel(&a, k, 44).map_err(|e| e.to_string())?;
            row_matches(&format!("hankel-golden-{k}"), &h.values)?;
            let p = detect_periodicity(&h.values);
            ensure(p.kind == Periodicity::Antiperiodic && p.period == 4, || {
                format!("shift {k}: {p:?}")
            })
        }));
    }
    checks.push(single("Somos-4 on golden shifts 0, 1, 2 over 44 terms", || {
        for k in 0..3usize {
            let h = hankel(&a, k, 44).map_err(|e| e.to_string())?;
            let s = somos4_check(&h.values).map_err(|e| e.to_string())?;
            ensure(s.holds, || format!("shift {k} fails at {:?}", s.first_violation))?;
        }
        Ok(())
    }));
    let m = motzkin_series(60).coeff_range(0, 60);
    checks.push(single("Motzkin rows match fixtures", || {
        let h0 = hankel(&m, 0, 24).map_err(|e| e.to_string())?;
        ensure(h0.values.iter().all(One::is_one), || format!("shift 0: {:?}", h0.values))?;
        row_matches("hankel-motzkin-0", &h0.values)?;
        let h1 = hankel(&m, 1, 24).map_err(|e| e.to_string())?;
        row_matches("hankel-motzkin-1", &h1.values)?;
        let p = detect_periodicity(&h1.values);
        ensure(p.kind == Periodicity::Antiperiodic && p.period == 3, || format!("{p:?}"))
    }));
    let c = catalan_series(60).coeff_range(0, 60);
    checks.push(single("Catalan shifts 0 and 1 are all ones", || {
        for k in 0..2 {
            let h = hankel(&c, k, 24).map_err(|e| e.to_string())?;
            ensure(h.values.iter().all(One::is_one), || format!("shift {k}: {:?}", h.values))?;
        }
        Ok(())
    }));
    let h3 = hankel(&a, 3, 44).expect("shift 3");
    let s3 = somos4_check(&h3.values).expect("44 values");
    let notes = vec![format!(
        "Somos-4 on golden shift 3 (not asserted): holds = {}, first violation = {:?}",
        s3.holds, s3.first_violation
    )];
    (checks, notes)
}

fn vieta(lim: &Limits) -> SuiteOut {
    let mut notes = Vec::new();
    let checks = [Cubic::Heptagon, Cubic::Nonagon]
        .into_iter()
        .map(|eq| {
            single(&format!("{} identities vanish through q^{}", eq.name(), lim.order), || {
                let r = vieta_check(eq, lim.order).map_err(|e| e.to_string())?;
                if let Some(v) = &r.sign_variant {
                    notes.push(format!(
                        "{}: sign variant {} has max residual {} (not asserted)",
                        eq.name(),
                        v.identity,
                        v.max_abs
                    ));
                }
                ensure(r.holds(), || {
                    let parts: Vec<String> =
                        r.residuals.iter().map(|x| format!("{}: {}", x.identity, x.max_abs)).collect();
                    parts.join("; ")
                })
            })
        })
        .collect();
    (checks, notes)
}

fn catalan_motzkin(lim: &Limits) -> SuiteOut {
    let eq = single(&format!("functional equations vanish through q^{}", lim.order), || {
        let r = catalan_motzkin_check(lim.order).map_err(|e| e.to_string())?;
        ensure(r.holds(), || {
            format!("residuals {} and {}", r.catalan_residual, r.motzkin_residual)
        })
    });
    let prefixes = single("sequence prefixes match fixtures", || {
        row_matches("catalan-prefix", &catalan_series(10).coeff_range(0, 10))?;
        row_matches("motzkin-prefix", &motzkin_series(10).coeff_range(0, 10))
    });
    (vec![eq, prefixes], vec![])
}

fn symmetry(lim: &Limits) -> SuiteOut {
    let mut xs = fractions(lim.max_den(20), -3, 3);
    xs.push(Fraction::infinity());
    let neg = tally("[-x]_q = -q^-1 [x]_(1/q)", &xs, |x| {
        ensure(symmetry_check(x).negation_holds, || x.to_string())
    });
    let rec = tally("[1/x]_q = 1/[x]_(1/q)", &xs, |x| {
        ensure(symmetry_check(x).reciprocal_holds != Some(false), || x.to_string())
    });
    let mirror = tally("q -> 1/q is an involution", &xs, |x| {
        let v = q_rational(x, Method::Negcf).value;
        ensure(v.substitute_q_inverse().substitute_q_inverse() == v, || x.to_string())
    });
    let mut notes = Vec::new();
    for x in ["1", "2", "1/2"] {
        let x: Fraction = x.parse().expect("literal");
        if let Ok(probes) = probe_printed_operators(&x) {
            for p in probes {
                notes.push(format!(
                    "printed {:?} operator on [{x}]_q matches: {}",
                    p.operator,
                    if p.matches.is_empty() { "nothing".to_string() } else { p.matches.join(", ") }
                ));
            }
        }
    }
    (vec![neg, rec, mirror], notes)
}

fn radius(lim: &Limits) -> SuiteOut {
    let xs = fractions(lim.max_den(40), 0, 3);
    let xs: Vec<Fraction> = xs.into_iter().filter(|x| x.is_positive()).collect();
    let reports: Vec<_> = xs
        .par_iter()
        .map(|x| radius_of_qrational(&q_rational(x, Method::Negcf)))
        .collect();
    let idx: Vec<usize> = (0..xs.len()).collect();
    let universal = tally("rational radii exceed 3 - 2 sqrt 2", &idx, |&i| {
        ensure(reports[i].above_universal_bound(), || format!("{}: {}", xs[i], reports[i].value))
    });
    let golden = tally("rational denominator roots outside (3 - sqrt 5)/2", &idx, |&i| {
        ensure(reports[i].above_golden_bound(), || format!("{}: {}", xs[i], reports[i].value))
    });
    let ks: Vec<u32> = (1..=6).collect();
    let metallic_radii = tally("metallic radii exceed 3 - 2 sqrt 2, k <= 6", &ks, |&k| {
        let r = metallic(k).and_then(|s| radius_of_surd(&s)).map_err(|e| e.to_string())?;
        ensure(r.above_universal_bound(), || format!("k = {k}: {}", r.value))
    });
    let phi = single("R(phi) = 0.381966", || {
        let r = metallic(1).and_then(|s| radius_of_surd(&s)).map_err(|e| e.to_string())?;
        ensure((r.value - GOLDEN_RADIUS).abs() < 1e-6 && r.certified, || {
            format!("{} (certified {})", r.value, r.certified)
        })
    });
    let min = reports
        .iter()
        .zip(&xs)
        .filter(|(r, _)| !r.is_infinite())
        .min_by(|a, b| a.0.value.total_cmp(&b.0.value));
    let mut notes = vec![format!("universal bound {UNIVERSAL_BOUND:.6}")];
    if let Some((r, x)) = min {
        notes.push(format!("smallest rational radius {:.9} at {x}", r.value));
    }
    (vec![universal, golden, metallic_radii, phi], notes)
}

pub fn report(suite: Suite, lim: &Limits) -> Report {
    let reports = run_suite(suite, lim);
    let ok = reports.iter().all(SuiteReport::passed);
    let mut text = String::new();
    for r in &reports {
        let verdict = if r.passed() { "ok" } else { "FAILED" };
        let _ = writeln!(text, "{} ... {verdict}", r.suite.name());
        for c in &r.checks {
            let _ = writeln!(
                text,
                "  {} {}: {}/{} passed",
                if c.passed() { "+" } else { "x" },
                c.name,
                c.cases - c.failures,
                c.cases
            );
            if let Some(f) = &c.first_failure {
                let _ = writeln!(text, "      first failure: {f}");
            }
        }
        for n in &r.notes {
            let _ = writeln!(text, "  note: {n}");
        }
    }
    let total: usize = reports.iter().flat_map(|r| &r.checks).map(|c| c.cases).sum();
    let failed: usize = reports.iter().flat_map(|r| &r.checks).map(|c| c.failures).sum();
    let _ = writeln!(text, "{} cases, {failed} failures", total);
    let result = json!({
        "suite": suite,
        "passed": ok,
        "cases": total,
        "failures": failed,
        "suites": reports,
    });
    Report::new("verify", result, text)
        .provenance(json!({
            "maxDen": lim.max_den,
            "depth": lim.depth,
            "order": lim.order,
            "count": lim.count,
            "seed": lim.seed,
            "rng": "chacha8",
        }))
        .ok(ok)
}
