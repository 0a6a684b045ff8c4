//! The single-shot subcommands.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{json, Value};

use qnum_core::analysis::{
    detect_periodicity, hankel, somos4_check, vieta_check, catalan_series, motzkin_series, Cubic,
};
use qnum_core::contfrac::{AlgebraicNumber, ContinuedFraction, Fraction};
use qnum_core::json::{big_number, ints_from_json, series_from_json};
use qnum_core::modular::{MatrixZ, Word};
use qnum_core::qirrational::{
    metallic, q_irrational_with_depth, quadratic_fixed_point, radius_of_qrational,
    radius_of_series, radius_of_surd, stabilization_experiment, Anchor, CfStream, RadiusReport,
    Side,
};
use qnum_core::qrational::{
    as_q_power, check_shape, diff_poly, farey_tree, left_q_rational, q_rational, Method,
    QRational,
};
use qnum_core::ring::{IntPoly, LaurentSeries};
use qnum_core::snake::{count_paths_by_area, path_count, q_binomial, snake_denominator, snake_of};
use qnum_core::{Error, Result};

use crate::output::{to_value, Report};

fn q_rational_text(label: &str, x: &QRational) -> String {
    format!("[{}]{label} = {}", x.source, x.value)
}

fn q_rational_latex(label: &str, x: &QRational) -> String {
    format!("\\left[{}\\right]{label} = {}", x.source, x.value.to_latex())
}

pub fn rat(x: &Fraction, methods: &[Method]) -> Report {
    let values: Vec<QRational> = methods.iter().map(|&m| q_rational(x, m)).collect();
    let agree = values.windows(2).all(|w| w[0].value == w[1].value);
    let first = &values[0];
    let names: Vec<&str> = methods.iter().map(|m| m.name()).collect();
    let mut text = q_rational_text("_q", first);
    if methods.len() > 1 {
        let verdict = if agree { "agree" } else { "DISAGREE" };
        text.push_str(&format!("\nmethods: {} ({verdict})", names.join(", ")));
        if !agree {
            for (m, v) in names.iter().zip(&values) {
                text.push_str(&format!("\n  {m}: {}", v.value));
            }
        }
    }
    let mut result = to_value(first);
    result["methods"] = json!(names);
    result["agree"] = json!(agree);
    if !agree {
        result["values"] = Value::Array(values.iter().map(to_value).collect());
    }
    Report::new("rat", result, text)
        .provenance(json!({ "methods": names, "exact": true }))
        .latex(q_rational_latex("_q", first))
        .ok(agree)
}

pub fn left(x: &Fraction) -> Result<Report> {
    let v = left_q_rational(x)?;
    Ok(Report::new("left", to_value(&v), q_rational_text("^flat_q", &v))
        .provenance(json!({ "method": "matrix", "anchor": "(q - 1)/q", "exact": true }))
        .latex(q_rational_latex("^\\flat_q", &v)))
}

/// Where the partial quotients of `irr` and `radius` come from.
#[derive(Clone, Debug)]
pub enum CfSource {
    Periodic { prefix: Vec<i64>, period: Vec<i64> },
    Prefix(Vec<i64>),
    Rational(Fraction),
    Algebraic { poly: IntPoly, lo: Fraction, hi: Fraction },
}

impl CfSource {
    pub fn stream(&self) -> Result<CfStream> {
        Ok(match self {
            CfSource::Periodic { prefix, period } => CfStream::Periodic {
                prefix: prefix.clone(),
                period: period.clone(),
            },
            CfSource::Prefix(t) => CfStream::Prefix(t.clone()),
            CfSource::Rational(x) => {
                CfStream::Rational(ContinuedFraction::of_regular(x)?.terms().to_vec())
            }
            CfSource::Algebraic { poly, lo, hi } => {
                CfStream::Algebraic(AlgebraicNumber::new(poly.clone(), lo.clone(), hi.clone())?)
            }
        })
    }

    fn describe(&self) -> Value {
        match self {
            CfSource::Periodic { prefix, period } => {
                json!({ "kind": "periodic", "prefix": prefix, "period": period })
            }
            CfSource::Prefix(t) => json!({ "kind": "prefix", "terms": t.len() }),
            CfSource::Rational(x) => json!({ "kind": "rational", "x": x }),
            CfSource::Algebraic { poly, lo, hi } => json!({
                "kind": "algebraic",
                "minpoly": poly.display_in("x"),
                "interval": [lo, hi],
            }),
        }
    }
}

/// One integer per line; blank lines and `#` comments are skipped.
pub fn read_cf_file(path: &Path) -> Result<Vec<i64>> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.parse::<i64>()
                .map_err(|_| Error::Parse(format!("{}: not an integer: {l:?}", path.display())))
        })
        .collect()
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn irr(src: &CfSource, order: i64) -> Result<Report> {
    let s = q_irrational_with_depth(&src.stream()?, order)?;
    let text = format!(
        "{}\nterms used: {}{}",
        s.series,
        s.terms_used,
        if s.exact { " (exact, rational input)" } else { "" }
    );
    let result = json!({
        "input": src.describe(),
        "series": s.series,
        "termsUsed": s.terms_used,
        "exact": s.exact,
    });
    Ok(Report::new("irr", result, text)
        .provenance(json!({ "method": "stabilized convergents", "order": order }))
        .latex(s.series.to_latex()))
}

pub fn metallic_cmd(k: u32, order: i64) -> Result<Report> {
    let s = metallic(k)?;
    let [c0, c1, c2] = s.quadratic();
    let series = s.series(order)?;
    let equation = format!("({c2}) X^2 + ({c1}) X + ({c0}) = 0");
    let text = format!("[y_{k}]_q = {s}\nequation: {equation}\nseries: {series}");
    let result = json!({
        "k": k,
        "p": s.p,
        "disc": s.q,
        "r": s.r,
        "quadratic": [c0, c1, c2],
        "series": series,
    });
    Ok(Report::new("metallic", result, text)
        .provenance(json!({ "method": "closed form", "order": order }))
        .latex(format!("\\left[y_{{{k}}}\\right]_q = {}", s.to_latex())))
}

/// What `radius` should measure.
#[derive(Clone, Debug)]
pub enum RadiusTarget {
    Metallic(u32),
    Periodic(Vec<i64>),
    Rational(Fraction),
    Series(LaurentSeries),
    Cf(CfSource),
}

pub fn radius_json(r: &RadiusReport) -> Value {
    json!({
        "value": if r.is_infinite() { Value::Null } else { json!(r.value) },
        "infinite": r.is_infinite(),
        "method": r.method,
        "certified": r.certified,
        "aboveUniversalBound": r.above_universal_bound(),
        "aboveGoldenBound": r.above_golden_bound(),
    })
}

pub fn radius_cmd(target: &RadiusTarget, order: i64) -> Result<Report> {
    let (label, r) = match target {
        RadiusTarget::Metallic(k) => (format!("metallic {k}"), radius_of_surd(&metallic(*k)?)?),
        RadiusTarget::Periodic(p) => (
            format!("periodic {p:?}"),
            radius_of_surd(&quadratic_fixed_point(p)?)?,
        ),
        RadiusTarget::Rational(x) => (
            x.to_string(),
            radius_of_qrational(&q_rational(x, Method::Negcf)),
        ),
        RadiusTarget::Series(s) => ("series".into(), radius_of_series(s)?),
        RadiusTarget::Cf(src) => {
            let s = q_irrational_with_depth(&src.stream()?, order)?;
            ("continued fraction".into(), radius_of_series(&s.series)?)
        }
    };
    let value = if r.is_infinite() {
        "infinite".to_string()
    } else {
        format!("{:.9}", r.value)
    };
    let text = format!(
        "R({label}) = {value}\nmethod: {}, certified: {}",
        r.method.name(),
        r.certified
    );
    Ok(Report::new("radius", radius_json(&r), text)
        .provenance(json!({ "method": r.method, "certified": r.certified, "order": order })))
}

pub fn farey(depth: usize) -> Report {
    let nodes = farey_tree(depth);
    let mut text = String::new();
    let mut dot = String::from("digraph farey {\n  node [shape=box];\n");
    let mut list = Vec::with_capacity(nodes.len());
    for (i, n) in nodes.iter().enumerate() {
        text.push_str(&format!(
            "{:>2} {} = {}  (q^{} mediant of {} and {})\n",
            n.depth, n.fraction, n.value, n.weight, n.parents.0, n.parents.1
        ));
        dot.push_str(&format!("  n{i} [label=\"{}\"];\n", n.fraction));
        // breadth-first layout of a complete binary tree
        if n.depth < depth {
            dot.push_str(&format!(
                "  n{i} -> n{} [label=\"q^{}\"];\n  n{i} -> n{} [label=\"q^{}\"];\n",
                2 * i + 1,
                n.left_edge_weight,
                2 * i + 2,
                n.right_edge_weight
            ));
        }
        list.push(json!({
            "fraction": n.fraction,
            "value": n.value,
            "depth": n.depth,
            "weight": n.weight,
            "leftEdgeWeight": n.left_edge_weight,
            "rightEdgeWeight": n.right_edge_weight,
            "parents": [n.parents.0, n.parents.1],
        }));
    }
    dot.push_str("}\n");
    Report::new("farey", json!({ "depth": depth, "nodes": list }), text)
        .provenance(json!({ "method": "weighted mediants", "depth": depth }))
        .dot(dot)
}

pub fn diff(x: &Fraction, y: &Fraction) -> Result<Report> {
    let d = diff_poly(x, y)?;
    let (body, _) = d.strip_q_power();
    let positive = !d.is_zero() && body.coeffs().iter().all(|c| c.is_positive());
    let power = as_q_power(&d);
    let neighbors = x.cross(y).abs().is_one();
    let mut text = format!("N_x M_y - M_x N_y = {d}\npositive: {positive}");
    match power {
        Some(a) => text.push_str(&format!("\nequals q^{a}")),
        None => text.push_str("\nnot a power of q"),
    }
    text.push_str(&format!("\nFarey neighbors: {neighbors}"));
    let result = json!({
        "x": x, "y": y, "poly": d, "positive": positive,
        "qPower": power, "fareyNeighbors": neighbors,
    });
    Ok(Report::new("diff", result, text)
        .provenance(json!({ "method": "negcf", "exact": true }))
        .latex(d.to_latex()))
}

pub fn snake(x: &Fraction, ascii: bool) -> Result<Report> {
    let region = snake_of(x)?;
    let num = count_paths_by_area(&region);
    let den = snake_denominator(x)?;
    let v = q_rational(x, Method::Negcf);
    let matches = &num == v.num() && &den == v.den();
    let mut text = String::new();
    if ascii {
        text.push_str(&region.to_ascii());
    }
    text.push_str(&format!(
        "boxes: {}\npaths: {}\nN(q) = {num}\nM(q) = {den}\nmatches [x]_q: {matches}",
        region.len(),
        path_count(&region)
    ));
    let mut result = json!({
        "x": x,
        "cf": ContinuedFraction::of_regular(x)?,
        "boxes": region.boxes(),
        "paths": big_number(&path_count(&region)),
        "numerator": num,
        "denominator": den,
        "matchesQRational": matches,
    });
    if ascii {
        result["ascii"] = json!(region.to_ascii());
    }
    Ok(Report::new("snake", result, text)
        .provenance(json!({ "method": "area-weighted lattice paths" }))
        .ok(matches))
}

pub fn qbinom(n: i64, m: i64) -> Result<Report> {
    let p = q_binomial(n, m)?;
    let shape = check_shape(&p);
    let text = format!(
        "({n} choose {m})_q = {p}\nunimodal: {}, palindromic: {}",
        shape.unimodal, shape.palindromic
    );
    Ok(Report::new(
        "qbinom",
        json!({ "n": n, "m": m, "poly": p, "shape": shape }),
        text,
    )
    .latex(p.to_latex()))
}

pub fn trace(word: &Word) -> Report {
    let m = word.q_deform();
    let tr = m.trace();
    let at_one: MatrixZ = word.matrix();
    let pal = tr.is_palindromic();
    let pal_shift = tr.is_palindromic_up_to_shift();
    let [a, b, c, d] = m.entries();
    let text = format!(
        "word: {word}\nmatrix: {at_one}\nq-deformation: [[{a}, {b}], [{c}, {d}]]\ntrace: {tr}\n\
         palindromic: {pal}, palindromic up to q^k: {pal_shift}"
    );
    let result = json!({
        "word": word.to_string(),
        "matrix": at_one,
        "qMatrix": m,
        "trace": tr,
        "palindromic": pal,
        "palindromicUpToShift": pal_shift,
    });
    Report::new("trace", result, text)
        .latex(format!(
            "\\begin{{pmatrix}}{} & {}\\\\ {} & {}\\end{{pmatrix}}",
            a.to_latex(),
            b.to_latex(),
            c.to_latex(),
            d.to_latex()
        ))
        .ok(pal_shift)
}

/// Coefficient sequences for `hankel` and `somos`.
#[derive(Clone, Debug)]
pub enum SeqTarget {
    Metallic(u32),
    Catalan,
    Motzkin,
    File(Vec<BigInt>),
}

impl SeqTarget {
    pub fn name(&self) -> String {
        match self {
            SeqTarget::Metallic(1) => "golden".into(),
            SeqTarget::Metallic(2) => "silver".into(),
            SeqTarget::Metallic(k) => format!("metallic {k}"),
            SeqTarget::Catalan => "catalan".into(),
            SeqTarget::Motzkin => "motzkin".into(),
            SeqTarget::File(_) => "file".into(),
        }
    }

    /// The first `n` coefficients, `a_1` being the constant term.
    pub fn coeffs(&self, n: usize) -> Result<Vec<BigInt>> {
        let top = n as i64 - 1;
        Ok(match self {
            SeqTarget::Metallic(k) => {
                let s = qnum_core::qirrational::q_irrational(&CfStream::constant(*k as i64), top)?;
                s.coeff_range(0, top)
            }
            SeqTarget::Catalan => catalan_series(top).coeff_range(0, top),
            SeqTarget::Motzkin => motzkin_series(top).coeff_range(0, top),
            SeqTarget::File(v) => {
                if v.len() < n {
                    return Err(Error::InsufficientTerms { needed: n });
                }
                v[..n].to_vec()
            }
        })
    }
}

pub fn read_sequence(path: &Path) -> Result<Vec<BigInt>> {
    ints_from_json(&read_json(path)?)
}

pub fn read_series(path: &Path) -> Result<LaurentSeries> {
    let v = read_json(path)?;
    if v.is_array() {
        let c = ints_from_json(&v)?;
        let order = c.len() as i64 - 1;
        return Ok(LaurentSeries::new(0, order, c));
    }
    series_from_json(&v)
}

pub fn hankel_cmd(target: &SeqTarget, shift: usize, count: usize) -> Result<Report> {
    let needed = shift + 2 * count.max(1) - 1;
    let a = target.coeffs(needed)?;
    let h = hankel(&a, shift, count)?;
    let p = detect_periodicity(&h.values);
    let shown: Vec<String> = h.values.iter().map(|v| v.to_string()).collect();
    let text = format!(
        "Delta^({shift})_n, n = 0..{}: {}\nperiodicity: {:?} {}",
        count.saturating_sub(1),
        shown.join(", "),
        p.kind,
        p.period
    );
    let result = json!({
        "target": target.name(),
        "shift": shift,
        "count": count,
        "values": h.values.iter().map(big_number).collect::<Vec<_>>(),
        "periodicity": p,
    });
    Ok(Report::new("hankel", result, text).provenance(json!({
        "method": "bareiss",
        "convention": "a_1 = constant term, Delta_0 = 1",
        "coefficients": needed,
    })))
}

pub fn somos_cmd(values: &[BigInt], label: Value) -> Result<Report> {
    let r = somos4_check(values)?;
    let text = match r.first_violation {
        None => format!("Somos-4 holds on all {} windows", values.len() - 4),
        Some(i) => format!("Somos-4 fails at window {i}"),
    };
    Ok(Report::new(
        "somos",
        json!({ "sequence": label, "length": values.len(), "holds": r.holds, "firstViolation": r.first_violation }),
        text,
    )
    .ok(r.holds))
}

pub fn vieta(eq: Cubic, order: i64, emit_b: bool) -> Result<Report> {
    let r = vieta_check(eq, order)?;
    let mut text = format!("{} cubic {}, through q^{order}\n", eq.name(), eq.poly().display_in("x"));
    for res in &r.residuals {
        text.push_str(&format!("  {}: max |residual| = {}\n", res.identity, res.max_abs));
    }
    if let Some(v) = &r.sign_variant {
        text.push_str(&format!(
            "  (sign variant, not asserted) {}: max |residual| = {}\n",
            v.identity, v.max_abs
        ));
    }
    if emit_b {
        text.push_str(&format!("b(q) = {}\n", r.b_series));
    }
    let mut result = json!({
        "equation": eq,
        "order": order,
        "roots": r.roots,
        "residuals": r.residuals,
        "signVariant": r.sign_variant,
        "holds": r.holds(),
    });
    if emit_b {
        result["b"] = to_value(&r.b_series);
    }
    Ok(Report::new("vieta", result, text)
        .provenance(json!({ "method": "isolated roots, stabilized series", "order": order }))
        .latex(r.b_series.to_latex())
        .ok(r.holds()))
}

pub fn stabilize(x: &Fraction, side: Side, count: usize, order: i64) -> Result<Report> {
    let r = stabilization_experiment(x, side, count, order)?;
    let expected = match side {
        Side::Right => Anchor::RightQ,
        Side::Left => Anchor::LeftFlat,
    };
    let ok = r.agrees_with.contains(&expected);
    let seq: Vec<String> = r.sequence.iter().take(4).map(|f| f.to_string()).collect();
    let text = format!(
        "x = {x}, from the {:?} side: {}, ...\nstable through q^{}: {}\nagrees with: {:?}",
        side,
        seq.join(", "),
        r.stable_to,
        r.limit_series,
        r.agrees_with
    );
    Ok(Report::new("stabilize", to_value(&r), text)
        .provenance(json!({ "count": count, "order": order, "expected": expected }))
        .ok(ok))
}
