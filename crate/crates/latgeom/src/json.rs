//! JSON encoding: rationals as strings "p/q", quadratic irrationals as
//! {"a": "p/q", "b": "r/s", "d": n}, polygons as {"vertices": [[x, y], ...]}.

use serde_json::{json, Value};

use crate::exactnum::{Rational, Scalar};
use crate::geom::{Point, Polygon};
use crate::{Error, Result};

fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn scalar_to_json(s: &Scalar) -> Value {
    match s {
        Scalar::Rational(r) => Value::String(rational_string(r)),
        Scalar::Quad(q) => json!({
            "a": rational_string(q.rational_part()),
            "b": rational_string(q.radical_coeff()),
            "d": q.radicand(),
        }),
    }
}

pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::from_int)
            .ok_or(Error::Invalid("non-integer numeric literal")),
        Value::Object(fields) => {
            let rat = |key: &str| -> Result<Scalar> {
                scalar_from_json(fields.get(key).ok_or(Error::Invalid("missing field"))?)
            };
            let a = rat("a")?;
            let b = rat("b")?;
            let d = fields
                .get("d")
                .and_then(Value::as_u64)
                .ok_or(Error::Invalid("missing or malformed radicand"))?;
            let to_rational = |s: Scalar| -> Result<Rational> {
                s.as_rational()
                    .cloned()
                    .ok_or(Error::Invalid("nested radicals are not supported"))
            };
            Scalar::quad(to_rational(a)?, to_rational(b)?, d)
        }
        _ => Err(Error::Invalid("malformed scalar")),
    }
}

pub fn polygon_to_json(p: &Polygon) -> Value {
    let vertices: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| Value::Array(vec![scalar_to_json(&v.x), scalar_to_json(&v.y)]))
        .collect();
    json!({ "vertices": vertices })
}

pub fn polygon_from_json(v: &Value) -> Result<Polygon> {
    let vertices = v
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or(Error::Invalid("polygon JSON needs a \"vertices\" array"))?;
    let mut points = Vec::with_capacity(vertices.len());
    for entry in vertices {
        let pair = entry
            .as_array()
            .filter(|a| a.len() == 2)
            .ok_or(Error::Invalid("vertex must be a [x, y] pair"))?;
        points.push(Point::new(
            scalar_from_json(&pair[0])?,
            scalar_from_json(&pair[1])?,
        ));
    }
    Polygon::new(points)
}

pub fn polygon_to_string(p: &Polygon) -> String {
    serde_json::to_string_pretty(&polygon_to_json(p)).expect("serializable")
}

pub fn polygon_from_str(text: &str) -> Result<Polygon> {
    let value: Value =
        serde_json::from_str(text).map_err(|_| Error::Invalid("malformed JSON"))?;
    polygon_from_json(&value)
}
