//! JSON shapes for the exact types.
//!
//! Integers are written as JSON numbers of any size. Polynomials are
//! coefficient arrays from the constant term up, series carry their
//! valuation and order, and fractions are strings such as `"5/2"`.

use num_bigint::BigInt;
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};
use serde_json::{Number, Value};

use crate::contfrac::Fraction;
use crate::error::{Error, Result};
use crate::modular::{MatrixZ, QMatrix};
use crate::qrational::QRational;
use crate::ring::{IntPoly, LaurentPoly, LaurentSeries, RatFunc};

pub fn big_number(c: &BigInt) -> Number {
    c.to_string().parse().expect("decimal integers are JSON numbers")
}

/// For `#[serde(serialize_with)]` on `BigInt` fields.
pub fn ser_big<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    big_number(c).serialize(s)
}

/// For `#[serde(serialize_with)]` on `Vec<BigInt>` fields.
pub fn ser_bigs<S: Serializer>(c: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    Coeffs(c).serialize(s)
}

struct Big<'a>(&'a BigInt);

impl Serialize for Big<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        big_number(self.0).serialize(s)
    }
}

struct Coeffs<'a>(&'a [BigInt]);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in self.0 {
            seq.serialize_element(&Big(c))?;
        }
        seq.end()
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Coeffs(self.coeffs()).serialize(s)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("valuation", &self.valuation())?;
        st.serialize_field("coeffs", self.body())?;
        st.end()
    }
}

impl Serialize for LaurentSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LaurentSeries", 3)?;
        st.serialize_field("valuation", &self.start())?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("coeffs", &Coeffs(self.coeffs()))?;
        st.end()
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", self.num())?;
        st.serialize_field("den", self.den())?;
        st.end()
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for MatrixZ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MatrixZ", 4)?;
        st.serialize_field("a", &Big(&self.a))?;
        st.serialize_field("b", &Big(&self.b))?;
        st.serialize_field("c", &Big(&self.c))?;
        st.serialize_field("d", &Big(&self.d))?;
        st.end()
    }
}

impl Serialize for QMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [a, b, c, d] = self.entries();
        let mut st = s.serialize_struct("QMatrix", 4)?;
        st.serialize_field("a", a)?;
        st.serialize_field("b", b)?;
        st.serialize_field("c", c)?;
        st.serialize_field("d", d)?;
        st.end()
    }
}

impl Serialize for QRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("QRational", 3)?;
        st.serialize_field("source", &self.source)?;
        st.serialize_field("num", self.num())?;
        st.serialize_field("den", self.den())?;
        st.end()
    }
}

fn bad(what: &str) -> Error {
    Error::Parse(format!("expected {what}"))
}

pub fn big_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| bad("an integer")),
        _ => Err(bad("an integer")),
    }
}

pub fn ints_from_json(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| bad("an array of integers"))?
        .iter()
        .map(big_from_json)
        .collect()
}

pub fn poly_from_json(v: &Value) -> Result<IntPoly> {
    ints_from_json(v).map(IntPoly::new)
}

pub fn series_from_json(v: &Value) -> Result<LaurentSeries> {
    let int = |k: &str| v.get(k).and_then(Value::as_i64).ok_or_else(|| bad(k));
    let coeffs = ints_from_json(v.get("coeffs").ok_or_else(|| bad("coeffs"))?)?;
    Ok(LaurentSeries::new(int("valuation")?, int("order")?, coeffs))
}

pub fn ratfunc_from_json(v: &Value) -> Result<RatFunc> {
    let num = poly_from_json(v.get("num").ok_or_else(|| bad("num"))?)?;
    let den = poly_from_json(v.get("den").ok_or_else(|| bad("den"))?)?;
    RatFunc::reduce(num, den)
}
