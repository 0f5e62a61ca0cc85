use serde_json::json;
use tessarine::text::parse_bicomplex;
use tessarine::{BicomplexQ, Scalar};

use super::{compute, usage};
use crate::args::BcOp;
use crate::render::{bicomplex, complex, envelope, float, scalar};
use crate::{CliError, Rendered};

fn element(text: &str) -> Result<BicomplexQ, CliError> {
    parse_bicomplex(text).map_err(|e| usage(&format!("invalid bicomplex element {text:?}"), e))
}

fn value(command: &str, v: &BicomplexQ) -> Rendered {
    Rendered { json: envelope(command, json!({ "result": bicomplex(v) })), text: v.to_string() }
}

pub fn run(op: &BcOp) -> Result<Rendered, CliError> {
    Ok(match op {
        BcOp::Add { a, b } => value("bc add", &(&element(a)? + &element(b)?)),
        BcOp::Sub { a, b } => value("bc sub", &(&element(a)? - &element(b)?)),
        BcOp::Mul { a, b } => value("bc mul", &(&element(a)? * &element(b)?)),
        BcOp::Pow { a, n } => value("bc pow", &element(a)?.pow(*n)),
        BcOp::Inverse { a } => value("bc inverse", &element(a)?.inverse().map_err(compute)?),
        BcOp::Decompose { a } => {
            let p = element(a)?.decompose();
            Rendered {
                json: envelope("bc decompose", json!({ "z1": complex(&p.z1), "z2": complex(&p.z2) })),
                text: format!(
                    "Z  = {} + {}*𝕚\nZ' = {} + {}*𝕚",
                    p.z1.re.to_literal(),
                    p.z1.im.to_literal(),
                    p.z2.re.to_literal(),
                    p.z2.im.to_literal()
                ),
            }
        }
        BcOp::Ideal { a } => {
            let tag = element(a)?.ideal();
            Rendered {
                json: envelope("bc ideal", json!({ "ideal": tag.as_str(), "zero_divisor": tag.is_zero_divisor() })),
                text: tag.as_str().to_string(),
            }
        }
        BcOp::Norm { a } => {
            let x = element(a)?;
            let sq = x.norm_sqr();
            Rendered {
                json: envelope("bc norm", json!({ "norm_sqr": scalar(&sq), "norm": float(x.norm()) })),
                text: format!("norm² = {}\nnorm  = {}", sq.to_literal(), tessarine::scalar::format_g17(x.norm())),
            }
        }
        BcOp::Conj { a } => {
            let (ci, ch, cih) = element(a)?.conjugates();
            Rendered {
                json: envelope("bc conj", json!({ "i": bicomplex(&ci), "h": bicomplex(&ch), "ih": bicomplex(&cih) })),
                text: format!("i:  {ci}\nh:  {ch}\nih: {cih}"),
            }
        }
    })
}
