use serde_json::{json, Value};
use tessarine::text::parse_multicomplex;
use tessarine::{Multicomplex, MulticomplexQ, Scalar};

use super::{compute, usage};
use crate::args::McOp;
use crate::render::{complex, envelope, multicomplex};
use crate::{CliError, Rendered};

fn element(order: usize, text: &str) -> Result<MulticomplexQ, CliError> {
    parse_multicomplex(order, text).map_err(|e| usage(&format!("invalid order-{order} element {text:?}"), e))
}

fn value(command: &str, v: &MulticomplexQ) -> Rendered {
    Rendered { json: envelope(command, json!({ "order": v.order(), "result": multicomplex(v) })), text: v.to_string() }
}

pub fn run(order: usize, op: &McOp) -> Result<Rendered, CliError> {
    Multicomplex::<tessarine::Rational>::zero(order).map_err(|e| usage("--order", e))?;
    Ok(match op {
        McOp::Add { a, b } => value("mc add", &(&element(order, a)? + &element(order, b)?)),
        McOp::Mul { a, b } => value("mc mul", &(&element(order, a)? * &element(order, b)?)),
        McOp::Inverse { a } => {
            let x = element(order, a)?;
            let inv = x.inverse().ok_or_else(|| compute("element is a zero divisor and has no inverse"))?;
            value("mc inverse", &inv)
        }
        McOp::Split { a } => {
            let s = element(order, a)?.split();
            let text = s
                .values
                .iter()
                .enumerate()
                .map(|(j, z)| format!("[{j}] {} + {}*𝕚", z.re.to_literal(), z.im.to_literal()))
                .collect::<Vec<_>>()
                .join("\n");
            Rendered {
                json: envelope(
                    "mc split",
                    json!({ "order": order, "components": Value::Array(s.values.iter().map(complex).collect()) }),
                ),
                text,
            }
        }
        McOp::ZeroDivisor { a } => {
            let z = element(order, a)?.is_zero_divisor().map_err(compute)?;
            Rendered {
                json: envelope("mc zero-divisor", json!({ "order": order, "zero_divisor": z })),
                text: z.to_string(),
            }
        }
        McOp::Idempotents => {
            let all = MulticomplexQ::primitive_idempotents(order).map_err(compute)?;
            Rendered {
                json: envelope(
                    "mc idempotents",
                    json!({ "order": order, "idempotents": Value::Array(all.iter().map(multicomplex).collect()) }),
                ),
                text: all.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
            }
        }
    })
}
