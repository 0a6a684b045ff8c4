//! Listing, checking and regenerating the bundled fixtures.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};

use qnum_core::analysis::{catalan_series, hankel, motzkin_series, vieta_check, Cubic};
use qnum_core::contfrac::Fraction;
use qnum_core::fixtures::{self, Fixture, FixtureFile, FixtureValue, Origin, RawFixture};
use qnum_core::modular::Word;
use qnum_core::qirrational::{metallic, q_irrational, radius_of_surd, CfStream, UNIVERSAL_BOUND};
use qnum_core::qrational::{left_q_rational, q_rational, Method};
use qnum_core::snake::q_binomial;

use crate::output::{to_value, Report};

/// Entries produced by this crate rather than transcribed. `fixtures
/// --regenerate` recomputes exactly these.
const REGRESSION: &[(&str, &str, &str, &str)] = &[
    ("vieta-b-heptagon", "series", "heptagon", "sum of the three q-deformed heptagon roots through q^30"),
    ("vieta-b-nonagon", "series", "nonagon", "sum of the three q-deformed nonagon roots through q^30"),
    ("hankel-silver-0", "ints", "0", "Hankel determinants of the q-silver ratio coefficients"),
    ("hankel-silver-1", "ints", "1", "Hankel determinants of the q-silver ratio coefficients"),
    ("hankel-silver-2", "ints", "2", "Hankel determinants of the q-silver ratio coefficients"),
    ("hankel-silver-3", "ints", "3", "Hankel determinants of the q-silver ratio coefficients"),
    ("hankel-silver-4", "ints", "4", "Hankel determinants of the q-silver ratio coefficients"),
];

const VIETA_ORDER: i64 = 30;
const SILVER_ROW: usize = 24;

type Computed = Result<FixtureValue, String>;

fn err(e: qnum_core::Error) -> String {
    e.to_string()
}

fn input_fraction(f: &RawFixture) -> Result<Fraction, String> {
    f.input.as_deref().unwrap_or("").parse().map_err(err)
}

fn golden_coeffs(n: usize) -> Result<Vec<BigInt>, String> {
    let top = n as i64 - 1;
    Ok(q_irrational(&CfStream::constant(1), top).map_err(err)?.coeff_range(0, top))
}

/// Recomputes a fixture from its name and input.
pub fn recompute(f: &RawFixture) -> Computed {
    let name = f.name.as_str();
    let input = f.input.as_deref().unwrap_or("");
    let order_of = |v: &Value| v.get("order").and_then(Value::as_i64).ok_or("fixture has no order");
    let value = if name.starts_with("rat-") || name.starts_with("fib-") || name.starts_with("pell-") {
        let x = input_fraction(f)?;
        let vals: Vec<_> = Method::ALL.iter().map(|&m| q_rational(&x, m).value).collect();
        if vals.iter().any(|v| v != &vals[0]) {
            return Err(format!("{name}: methods disagree"));
        }
        FixtureValue::RatFunc(vals[0].clone())
    } else if name.starts_with("left-") {
        FixtureValue::RatFunc(left_q_rational(&input_fraction(f)?).map_err(err)?.value)
    } else if name == "bq" {
        FixtureValue::QMatrix(input.parse::<Word>().map_err(err)?.q_deform())
    } else if let Some(rest) = name.strip_prefix("qbinom-") {
        let (n, m) = rest.split_once('-').ok_or("bad qbinom name")?;
        let n = n.parse().map_err(|_| "bad n")?;
        let m = m.parse().map_err(|_| "bad m")?;
        FixtureValue::Poly(q_binomial(n, m).map_err(err)?)
    } else if name == "golden-series" {
        let order = order_of(&f.value)?;
        FixtureValue::Series(q_irrational(&CfStream::constant(1), order).map_err(err)?)
    } else if name == "pi-series" {
        let terms = input
            .split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|_| format!("bad term {t}")))
            .collect::<Result<Vec<_>, _>>()?;
        let order = order_of(&f.value)?;
        FixtureValue::Series(q_irrational(&CfStream::Prefix(terms), order).map_err(err)?)
    } else if let Some(k) = name.strip_prefix("metallic-") {
        FixtureValue::Surd(metallic(k.parse().map_err(|_| "bad k")?).map_err(err)?)
    } else if name == "golden-equation" {
        FixtureValue::PolyList(metallic(1).map_err(err)?.quadratic().to_vec())
    } else if name == "golden-radius" {
        FixtureValue::Real(radius_of_surd(&metallic(1).map_err(err)?).map_err(err)?.value)
    } else if name == "universal-radius-bound" {
        FixtureValue::Real(UNIVERSAL_BOUND)
    } else if let Some(k) = name.strip_prefix("hankel-golden-") {
        let k: usize = k.parse().map_err(|_| "bad shift")?;
        let len = f.value.as_array().map_or(0, Vec::len);
        let a = golden_coeffs(k + 2 * len)?;
        FixtureValue::Ints(hankel(&a, k, len).map_err(err)?.values)
    } else if let Some(k) = name.strip_prefix("hankel-silver-") {
        let k: usize = k.parse().map_err(|_| "bad shift")?;
        let top = (k + 2 * SILVER_ROW) as i64;
        let a = q_irrational(&CfStream::constant(2), top).map_err(err)?.coeff_range(0, top);
        FixtureValue::Ints(hankel(&a, k, SILVER_ROW).map_err(err)?.values)
    } else if let Some(k) = name.strip_prefix("hankel-motzkin-") {
        let k: usize = k.parse().map_err(|_| "bad shift")?;
        let len = f.value.as_array().map_or(0, Vec::len);
        let top = (k + 2 * len) as i64;
        let a = motzkin_series(top).coeff_range(0, top);
        FixtureValue::Ints(hankel(&a, k, len).map_err(err)?.values)
    } else if name == "catalan-prefix" || name == "motzkin-prefix" {
        let len = f.value.as_array().map_or(0, Vec::len) as i64;
        let s = if name == "catalan-prefix" { catalan_series(len) } else { motzkin_series(len) };
        FixtureValue::Ints(s.coeff_range(0, len - 1))
    } else if let Some(eq) = name.strip_prefix("vieta-b-") {
        let eq: Cubic = eq.parse().map_err(err)?;
        FixtureValue::Series(vieta_check(eq, VIETA_ORDER).map_err(err)?.b_series)
    } else {
        return Err(format!("no recipe for fixture {name}"));
    };
    Ok(value)
}

fn agrees(stored: &FixtureValue, computed: &FixtureValue) -> bool {
    match (stored, computed) {
        (FixtureValue::Real(a), FixtureValue::Real(b)) => (a - b).abs() < 1e-6,
        _ => stored == computed,
    }
}

fn value_json(v: &FixtureValue) -> Value {
    match v {
        FixtureValue::Series(s) => to_value(s),
        FixtureValue::Ints(v) => json!(v.iter().map(qnum_core::json::big_number).collect::<Vec<_>>()),
        FixtureValue::Poly(p) => to_value(p),
        FixtureValue::RatFunc(r) => to_value(r),
        FixtureValue::PolyList(l) => to_value(l),
        FixtureValue::QMatrix(m) => to_value(m),
        FixtureValue::Surd(s) => to_value(s),
        FixtureValue::Real(x) => json!(x),
    }
}

pub struct CheckRow {
    pub name: String,
    pub origin: Origin,
    pub ok: bool,
    pub detail: Option<String>,
}

pub fn check_all(set: &[Fixture]) -> Vec<CheckRow> {
    set.iter()
        .map(|f| {
            let (ok, detail) = match recompute(&f.raw) {
                Ok(v) if agrees(&f.value, &v) => (true, None),
                Ok(v) => (false, Some(format!("computed {}", value_json(&v)))),
                Err(e) => (false, Some(e)),
            };
            CheckRow { name: f.raw.name.clone(), origin: f.raw.origin, ok, detail }
        })
        .collect()
}

pub fn list() -> Report {
    let set = fixtures::all();
    let mut text = String::new();
    for f in set {
        text.push_str(&format!("{:<24} {:<11} {}\n", f.name(), format!("{:?}", f.origin()).to_lowercase(), f.citation()));
    }
    let entries: Vec<Value> = set
        .iter()
        .map(|f| json!({ "name": f.name(), "kind": f.raw.kind, "origin": f.origin(), "citation": f.citation(), "input": f.input() }))
        .collect();
    Report::new("fixtures", json!({ "entries": entries }), text)
}

pub fn check() -> Report {
    let rows = check_all(fixtures::all());
    let ok = rows.iter().all(|r| r.ok);
    let mut text = String::new();
    for r in &rows {
        text.push_str(&format!("{} {}", if r.ok { "ok  " } else { "FAIL" }, r.name));
        if let Some(d) = &r.detail {
            text.push_str(&format!(": {d}"));
        }
        text.push('\n');
    }
    let failed = rows.iter().filter(|r| !r.ok).count();
    text.push_str(&format!("{} fixtures, {failed} mismatches\n", rows.len()));
    let result: Vec<Value> = rows
        .iter()
        .map(|r| json!({ "name": r.name, "origin": r.origin, "ok": r.ok, "detail": r.detail }))
        .collect();
    Report::new("fixtures", json!({ "checked": result, "passed": ok }), text).ok(ok)
}

/// Rewrites the regression entries of the fixture file at `path` (or of the
/// bundled set if it does not exist yet). Transcribed entries are copied
/// verbatim.
pub fn regenerate(path: &Path) -> Result<Report, String> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(_) => fixtures::FIXTURES_JSON.to_string(),
    };
    let mut file: FixtureFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let mut changed = Vec::new();
    for &(name, kind, input, citation) in REGRESSION {
        let mut raw = RawFixture {
            name: name.into(),
            kind: kind.into(),
            origin: Origin::Regression,
            citation: citation.into(),
            input: Some(input.into()),
            value: Value::Null,
        };
        let v = value_json(&recompute(&raw)?);
        raw.value = v;
        match file.entries.iter_mut().find(|e| e.name == name) {
            Some(e) if e.origin == Origin::Transcribed => {
                return Err(format!("{name} is a transcribed fixture and is never regenerated"));
            }
            Some(e) => {
                if e.value != raw.value {
                    changed.push(name);
                }
                *e = raw;
            }
            None => {
                changed.push(name);
                file.entries.push(raw);
            }
        }
    }
    let mut out = serde_json::to_string_pretty(&file).map_err(|e| e.to_string())?;
    out.push('\n');
    fs::write(path, out).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
    let text = format!(
        "wrote {} ({} regression entries, {} changed)\n",
        path.display(),
        REGRESSION.len(),
        changed.len()
    );
    Ok(Report::new("fixtures", json!({ "path": path.display().to_string(), "changed": changed }), text))
}
