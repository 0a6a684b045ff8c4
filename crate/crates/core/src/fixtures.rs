//! Golden values shipped with the crate.
//!
//! Entries are either transcribed by hand from published tables or
//! regression values produced by this crate. The data file is compiled in
//! and never written at run time; regression entries are refreshed only by
//! the CLI's explicit `fixtures --regenerate`.

use std::sync::OnceLock;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json::{ints_from_json, poly_from_json, ratfunc_from_json, series_from_json};
use crate::modular::QMatrix;
use crate::qirrational::Surd;
use crate::ring::{IntPoly, LaurentSeries, RatFunc};

pub const FIXTURES_JSON: &str = include_str!("../data/fixtures.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Origin {
    Transcribed,
    Regression,
}

#[derive(Clone, Debug, PartialEq)]
pub enum FixtureValue {
    RatFunc(RatFunc),
    Series(LaurentSeries),
    Poly(IntPoly),
    PolyList(Vec<IntPoly>),
    Ints(Vec<BigInt>),
    QMatrix(QMatrix),
    Surd(Surd),
    Real(f64),
}

/// One entry of the data file as stored on disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RawFixture {
    pub name: String,
    pub kind: String,
    pub origin: Origin,
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub value: Value,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixtureFile {
    pub entries: Vec<RawFixture>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub raw: RawFixture,
    pub value: FixtureValue,
}

impl Fixture {
    pub fn name(&self) -> &str {
        &self.raw.name
    }

    pub fn input(&self) -> Option<&str> {
        self.raw.input.as_deref()
    }

    pub fn citation(&self) -> &str {
        &self.raw.citation
    }

    pub fn origin(&self) -> Origin {
        self.raw.origin
    }

    pub fn ratfunc(&self) -> Option<&RatFunc> {
        match &self.value {
            FixtureValue::RatFunc(r) => Some(r),
            _ => None,
        }
    }

    pub fn series(&self) -> Option<&LaurentSeries> {
        match &self.value {
            FixtureValue::Series(s) => Some(s),
            _ => None,
        }
    }

    pub fn ints(&self) -> Option<&[BigInt]> {
        match &self.value {
            FixtureValue::Ints(v) => Some(v),
            _ => None,
        }
    }
}

fn field<'a>(v: &'a Value, k: &str) -> Result<&'a Value> {
    v.get(k)
        .ok_or_else(|| Error::Parse(format!("fixture value lacks `{k}`")))
}

pub fn decode(raw: &RawFixture) -> Result<FixtureValue> {
    let v = &raw.value;
    Ok(match raw.kind.as_str() {
        "ratfunc" => FixtureValue::RatFunc(ratfunc_from_json(v)?),
        "series" => FixtureValue::Series(series_from_json(v)?),
        "poly" => FixtureValue::Poly(poly_from_json(v)?),
        "poly_list" => FixtureValue::PolyList(
            v.as_array()
                .ok_or_else(|| Error::Parse("expected an array of polynomials".into()))?
                .iter()
                .map(poly_from_json)
                .collect::<Result<_>>()?,
        ),
        "ints" => FixtureValue::Ints(ints_from_json(v)?),
        "qmatrix" => FixtureValue::QMatrix(QMatrix::new(
            poly_from_json(field(v, "a")?)?,
            poly_from_json(field(v, "b")?)?,
            poly_from_json(field(v, "c")?)?,
            poly_from_json(field(v, "d")?)?,
        )),
        "surd" => {
            // the discriminant is stored factored, as printed
            let disc = field(v, "disc_factors")?
                .as_array()
                .ok_or_else(|| Error::Parse("expected disc_factors".into()))?
                .iter()
                .try_fold(IntPoly::one(), |acc, f| Ok::<_, Error>(&acc * &poly_from_json(f)?))?;
            FixtureValue::Surd(Surd::new(
                poly_from_json(field(v, "p")?)?,
                disc,
                poly_from_json(field(v, "r")?)?,
            )?)
        }
        "real" => FixtureValue::Real(
            v.as_f64()
                .ok_or_else(|| Error::Parse("expected a real number".into()))?,
        ),
        other => return Err(Error::Parse(format!("unknown fixture kind `{other}`"))),
    })
}

pub fn parse(text: &str) -> Result<Vec<Fixture>> {
    let file: FixtureFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture file: {e}")))?;
    file.entries
        .into_iter()
        .map(|raw| Ok(Fixture { value: decode(&raw)?, raw }))
        .collect()
}

/// The compiled-in fixture set.
pub fn all() -> &'static [Fixture] {
    static SET: OnceLock<Vec<Fixture>> = OnceLock::new();
    SET.get_or_init(|| parse(FIXTURES_JSON).expect("bundled fixtures parse"))
}

pub fn get(name: &str) -> Option<&'static Fixture> {
    all().iter().find(|f| f.name() == name)
}

/// Looks a fixture up by name, panicking if it is missing. For tests.
pub fn expect(name: &str) -> &'static Fixture {
    get(name).unwrap_or_else(|| panic!("no fixture named {name}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_set_parses() {
        let set = all();
        assert!(set.len() >= 30);
        let mut names: Vec<&str> = set.iter().map(Fixture::name).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), set.len(), "duplicate fixture names");
        assert!(set.iter().all(|f| !f.citation().is_empty()));
    }

    #[test]
    fn surd_discriminant_is_expanded() {
        let FixtureValue::Surd(s) = &expect("metallic-1").value else {
            panic!("metallic-1 is a surd");
        };
        assert_eq!(s.q, IntPoly::from_i64s(&[1, 2, -1, 2, 1]));
    }

    #[test]
    fn unknown_kind_is_rejected() {
        let text = r#"{"entries":[{"name":"x","kind":"blob","origin":"transcribed","citation":"c","value":1}]}"#;
        assert!(parse(text).is_err());
    }
}
