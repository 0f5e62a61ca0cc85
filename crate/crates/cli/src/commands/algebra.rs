use serde_json::{json, Value};
use tessarine::quadruple::derive_tables;
use tessarine::scalar::Rational;
use tessarine::text::parse_rational;
use tessarine::{CayleyTable, QuadElement, QuadSignature, QuadSystem, Scalar};

use super::{compute, usage};
use crate::args::AlgebraOp;
use crate::render::{envelope, scalar};
use crate::{CliError, Rendered};

fn system(name: &str) -> Result<QuadSystem, CliError> {
    name.parse().map_err(|e| usage("system", e))
}

fn element(table: CayleyTable, text: &str) -> Result<QuadElement<Rational>, CliError> {
    let parts: Vec<Rational> = text
        .split(',')
        .map(parse_rational)
        .collect::<Result<_, _>>()
        .map_err(|e| usage(&format!("invalid element {text:?}"), e))?;
    let coeffs: [Rational; 4] = parts.try_into().map_err(|p: Vec<Rational>| {
        usage(&format!("invalid element {text:?}"), format!("expected 4 coefficients, got {}", p.len()))
    })?;
    Ok(QuadElement::new(coeffs, table))
}

fn element_text(e: &QuadElement<Rational>) -> String {
    e.coeffs.iter().map(|c| c.to_literal()).collect::<Vec<_>>().join(",")
}

fn table_json(t: &CayleyTable) -> Value {
    let [a, b, c] = t.squares();
    json!({
        "classification": t.classify().name(),
        "canonical": t.is_canonical(),
        "squares": { "a": a, "b": b, "c": c },
        "associative": t.is_associative(),
        "commutative": t.is_normal(),
        "normal": t.is_normal(),
        "table": t.to_strings(),
    })
}

pub fn run(op: &AlgebraOp) -> Result<Rendered, CliError> {
    Ok(match op {
        AlgebraOp::Table { system: name } => {
            let s = system(name)?;
            let t = s.table();
            let mut payload = json!({ "system": s.name() });
            payload.as_object_mut().expect("object").extend(table_json(&t).as_object().expect("object").clone());
            let kind = if t.is_normal() { "normal (commutative)" } else { "abnormal (noncommutative)" };
            Rendered { json: envelope("algebra table", payload), text: format!("{s}: {kind}\n{t}") }
        }
        AlgebraOp::Derive { sq_a, sq_b } => {
            let sig = QuadSignature::new(*sq_a, *sq_b).map_err(|e| usage("signature", e))?;
            let tables = derive_tables(sig);
            let text = tables
                .iter()
                .map(|t| {
                    let kind = if t.is_normal() { "normal" } else { "abnormal" };
                    format!("c² = {}, {kind}, {}\n{t}", t.squares()[2], t.classify())
                })
                .collect::<Vec<_>>()
                .join("\n");
            Rendered {
                json: envelope(
                    "algebra derive",
                    json!({ "signature": [sq_a, sq_b], "tables": tables.iter().map(table_json).collect::<Vec<_>>() }),
                ),
                text,
            }
        }
        AlgebraOp::Mul { system: name, a, b } => {
            let t = system(name)?.table();
            let p = element(t, a)?.mul(&element(t, b)?).map_err(compute)?;
            Rendered {
                json: envelope("algebra mul", json!({ "result": p.coeffs.iter().map(scalar).collect::<Vec<_>>() })),
                text: element_text(&p),
            }
        }
        AlgebraOp::Norm { system: name, a } => {
            let n = element(system(name)?.table(), a)?.norm_form();
            Rendered { json: envelope("algebra norm", json!({ "norm_form": scalar(&n) })), text: n.to_literal() }
        }
    })
}
