use serde_json::json;
use tessarine::biquaternion::solve_quadratic;
use tessarine::scalar::format_g17;
use tessarine::text::parse_biquaternion;
use tessarine::BiquaternionQ;

use super::{compute, usage};
use crate::args::BiqOp;
use crate::render::{bicomplex, biquaternion, complex, envelope, float};
use crate::{CliError, Rendered};

fn element(text: &str) -> Result<BiquaternionQ, CliError> {
    parse_biquaternion(text).map_err(|e| usage(&format!("invalid biquaternion {text:?}"), e))
}

pub fn run(op: &BiqOp) -> Result<Rendered, CliError> {
    Ok(match op {
        BiqOp::Mul { a, b } => {
            let p = &element(a)? * &element(b)?;
            Rendered { json: envelope("biq mul", json!({ "result": biquaternion(&p) })), text: p.to_string() }
        }
        BiqOp::Nullifier { a } => {
            let n = element(a)?.is_nullifier().map_err(compute)?;
            Rendered { json: envelope("biq nullifier", json!({ "nullifier": n })), text: n.to_string() }
        }
        BiqOp::Matrix { a } => {
            let m = element(a)?.to_matrix();
            let rows: Vec<Vec<_>> = m.m.iter().map(|row| row.iter().map(complex).collect()).collect();
            let text =
                m.m.iter()
                    .map(|row| row.iter().map(|z| format!("({},{})", z.re, z.im)).collect::<Vec<_>>().join("  "))
                    .collect::<Vec<_>>()
                    .join("\n");
            Rendered { json: envelope("biq matrix", json!({ "matrix": rows, "det": complex(&m.det()) })), text }
        }
        BiqOp::Complanar { a } => {
            let b = element(a)?.complanar_to_bicomplex().map_err(compute)?;
            Rendered { json: envelope("biq complanar", json!({ "result": bicomplex(&b) })), text: b.to_string() }
        }
        BiqOp::SolveQuadratic { b, c } => {
            let sols = solve_quadratic(&element(b)?, &element(c)?).map_err(compute)?;
            let tag = |real: bool| if real { "quaternion" } else { "biquaternion" };
            let list: Vec<_> = sols
                .iter()
                .map(|s| json!({ "value": biquaternion(&s.value), "residual": float(s.residual), "tag": tag(s.real_quaternion) }))
                .collect();
            let mut text = format!("{} solutions", sols.len());
            for s in &sols {
                let [c0, c1, c2, c3] = s.value.coeffs();
                let shown: Vec<String> =
                    [c0, c1, c2, c3].iter().map(|z| format!("({},{})", format_g17(z.re), format_g17(z.im))).collect();
                text += &format!(
                    "\n  [{}] {} + {}*i + {}*j + {}*k    residual {}",
                    tag(s.real_quaternion),
                    shown[0],
                    shown[1],
                    shown[2],
                    shown[3],
                    format_g17(s.residual)
                );
            }
            Rendered { json: envelope("biq solve-quadratic", json!({ "count": sols.len(), "solutions": list })), text }
        }
    })
}
