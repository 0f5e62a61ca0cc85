//! JSON encodings shared by the subcommands.
//!
//! Exact values are strings (`"-1/2"`), floats are numbers printed with 17
//! significant digits so output is byte-stable.

use num_complex::Complex;
use serde_json::{json, Map, Number, Value};
use tessarine::scalar::{format_g17, Scalar};
use tessarine::{Bicomplex, Biquaternion, Multicomplex};

pub const SCHEMA: &str = "1";

pub fn float(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(serde_json::from_str::<Number>(&format_g17(x)).expect("g17 output is a JSON number"))
    } else {
        Value::String(format_g17(x))
    }
}

pub fn scalar<T: Scalar>(x: &T) -> Value {
    if T::EXACT {
        Value::String(x.to_literal())
    } else {
        float(x.to_f64().unwrap_or(f64::NAN))
    }
}

pub fn complex<T: Scalar>(z: &Complex<T>) -> Value {
    json!({ "re": scalar(&z.re), "im": scalar(&z.im) })
}

pub fn bicomplex<T: Scalar>(b: &Bicomplex<T>) -> Value {
    json!({ "w": scalar(&b.w), "x": scalar(&b.x), "y": scalar(&b.y), "z": scalar(&b.z) })
}

pub fn multicomplex<T: Scalar>(m: &Multicomplex<T>) -> Value {
    Value::Array(m.coeffs().iter().map(scalar).collect())
}

pub fn biquaternion<T: Scalar>(q: &Biquaternion<T>) -> Value {
    json!({ "c0": complex(&q.c0), "c1": complex(&q.c1), "c2": complex(&q.c2), "c3": complex(&q.c3) })
}

/// Top-level object: `schema`, `command`, then the payload fields.
pub fn envelope(command: &str, payload: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), Value::String(SCHEMA.into()));
    map.insert("command".into(), Value::String(command.into()));
    if let Value::Object(fields) = payload {
        map.extend(fields);
    }
    Value::Object(map)
}
