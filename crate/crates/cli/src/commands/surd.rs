use serde_json::{json, Value};
use tessarine::scalar::format_g17;
use tessarine::surd::{classify_roots, CongenerStatus, RootAssignment, RootValue, Sign};
use tessarine::{parse_surd, SurdError};

use super::{compute, usage};
use crate::args::SurdOp;
use crate::render::{envelope, float};
use crate::{CliError, Rendered};

fn root_json(v: &RootValue) -> Value {
    match v {
        RootValue::Rational(q) => Value::String(q.to_string()),
        RootValue::Real(r) => float(*r),
        RootValue::Complex(z) => json!({ "re": float(z.re), "im": float(z.im) }),
    }
}

fn root_text(v: &RootValue) -> String {
    match v {
        RootValue::Rational(q) => q.to_string(),
        RootValue::Real(r) => format_g17(*r),
        RootValue::Complex(z) => format!("{} + {}*𝕚", format_g17(z.re), format_g17(z.im)),
    }
}

fn kind(v: &RootValue) -> &'static str {
    match v {
        RootValue::Rational(_) => "rational",
        RootValue::Real(_) => "real",
        RootValue::Complex(_) => "complex",
    }
}

fn signs(s: &[Sign]) -> Vec<&'static str> {
    s.iter().map(|s| if *s == Sign::Plus { "+" } else { "-" }).collect()
}

pub fn run(op: &SurdOp) -> Result<Rendered, CliError> {
    let SurdOp::Analyze { equation, .. } = op;
    let eq = parse_surd(equation).map_err(|e| match e {
        SurdError::Roots(_) | SurdError::ZeroStock => compute(e),
        _ => usage("equation", e),
    })?;
    let report = classify_roots(&eq).map_err(compute)?;

    let status = |s: CongenerStatus| match s {
        CongenerStatus::Possible => "possible",
        CongenerStatus::Impossible => "impossible",
    };
    let congeners: Vec<Value> = report
        .congeners
        .iter()
        .enumerate()
        .map(|(j, c)| {
            json!({
                "index": j,
                "signs": signs(&c.equation.signs()),
                "equation": c.equation.to_string(),
                "status": status(c.status),
                "roots": c.roots.iter().map(|&r| root_json(&report.roots[r].value)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let roots: Vec<Value> = report
        .roots
        .iter()
        .map(|r| {
            let (assignment, list) = match &r.assignment {
                RootAssignment::Assigned(c) => ("assigned", c),
                RootAssignment::Ambiguous { candidates } => ("ambiguous", candidates),
            };
            json!({
                "value": root_json(&r.value),
                "kind": kind(&r.value),
                "multiplicity": r.multiplicity,
                "assignment": assignment,
                "congeners": list,
            })
        })
        .collect();
    let stock = &report.stock.normalized;
    let json = envelope(
        "surd analyze",
        json!({
            "equation": eq.to_string(),
            "congeners": congeners,
            "stock": {
                "coeffs": stock.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "degree": report.stock.degree(),
                "polynomial": stock.to_string(),
            },
            "order": report.order.to_string(),
            "roots": roots,
        }),
    );

    let mut text = format!(
        "equation: {eq}\nstock:    {stock} = 0  (degree {})\norder:    {}\nroots:",
        report.stock.degree(),
        report.order
    );
    if report.roots.is_empty() {
        text += " none";
    }
    for r in &report.roots {
        let mult = if r.multiplicity > 1 { format!(" (multiplicity {})", r.multiplicity) } else { String::new() };
        let target = match &r.assignment {
            RootAssignment::Assigned(c) => format!("congener {}", join(c)),
            RootAssignment::Ambiguous { candidates } if candidates.is_empty() => "ambiguous".to_string(),
            RootAssignment::Ambiguous { candidates } => format!("ambiguous (principal branch: {})", join(candidates)),
        };
        text += &format!("\n  {}{mult} -> {target}", root_text(&r.value));
    }
    text += "\ncongeners:";
    for (j, c) in report.congeners.iter().enumerate() {
        let assigned: Vec<String> = c.roots.iter().map(|&r| root_text(&report.roots[r].value)).collect();
        let verdict = match c.status {
            CongenerStatus::Possible => format!("possible: {}", assigned.join(", ")),
            CongenerStatus::Impossible => "impossible".to_string(),
        };
        text += &format!("\n  [{j}] ({}) {}    {verdict}", signs(&c.equation.signs()).join(""), c.equation);
    }
    Ok(Rendered { json, text })
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
