use std::io::Read;

use serde_json::{json, Value};
use tessarine::polysolve::{mc_solve, solve, FoundRoot, RootFamily, RootKind, RootSet};
use tessarine::scalar::format_g17;
use tessarine::text::{parse_bicomplex, parse_multicomplex};
use tessarine::{BicomplexPolynomial, BicomplexQ, MulticomplexPolynomial, MulticomplexQ};

use super::{compute, usage};
use crate::args::PolyOp;
use crate::render::{complex, envelope, float};
use crate::{CliError, Rendered};

enum Algebra {
    Bicomplex,
    Multicomplex(usize),
}

fn algebra(name: &str) -> Result<Algebra, CliError> {
    match name {
        "bicomplex" => Ok(Algebra::Bicomplex),
        _ => name
            .strip_prefix("mc:")
            .and_then(|n| n.parse().ok())
            .map(Algebra::Multicomplex)
            .ok_or_else(|| usage("--algebra", format!("expected `bicomplex` or `mc:<n>`, got {name:?}"))),
    }
}

fn read_lines(path: &std::path::Path) -> Result<Vec<String>, CliError> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| usage("stdin", e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| usage(&path.display().to_string(), e))?;
    }
    Ok(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from).collect())
}

fn render<V, X>(
    set: &RootSet<V, X>,
    value_json: impl Fn(&V) -> Value,
    exact_json: impl Fn(&X) -> Value,
    show: impl Fn(&FoundRoot<V, X>) -> String,
) -> Rendered {
    let kind = match set.kind {
        RootKind::Finite => "finite",
        RootKind::InfiniteFamily => "infinite-family",
    };
    let roots: Vec<Value> = set
        .roots
        .iter()
        .map(|r| {
            json!({
                "value": value_json(&r.value),
                "exact": r.exact.as_ref().map(&exact_json),
                "spectrum": r.spectrum.iter().map(complex).collect::<Vec<_>>(),
            })
        })
        .collect();
    let residuals: Vec<Value> = set.roots.iter().map(|r| float(r.residual)).collect();
    let family = set.family.as_ref().map(|RootFamily { free, constrained }| {
        json!({
            "free": free,
            "constrained": constrained
                .iter()
                .map(|(j, roots)| json!({ "component": j, "roots": roots.iter().map(complex).collect::<Vec<_>>() }))
                .collect::<Vec<_>>(),
        })
    });
    let counts: Vec<Value> = set.counts.iter().map(|c| c.map_or(Value::Null, |d| json!(d))).collect();
    let json = envelope(
        "poly solve",
        json!({ "kind": kind, "counts": counts, "roots": roots, "residuals": residuals, "family": family }),
    );

    let mut text = format!("kind: {kind}\ncomponent degrees: ");
    text += &set.counts.iter().map(|c| c.map_or("zero".to_string(), |d| d.to_string())).collect::<Vec<_>>().join(", ");
    if let Some(f) = &set.family {
        text += &format!("\nfree components: {:?}", f.free);
        for (j, roots) in &f.constrained {
            let list: Vec<String> =
                roots.iter().map(|z| format!("{} + {}*𝕚", format_g17(z.re), format_g17(z.im))).collect();
            text += &format!("\ncomponent {j} roots: {}", list.join(", "));
        }
    } else {
        text += &format!("\nroots: {}", set.roots.len());
        for r in &set.roots {
            text += &format!("\n  {}    residual {}", show(r), format_g17(r.residual));
        }
    }
    Rendered { json, text }
}

pub fn run(op: &PolyOp) -> Result<Rendered, CliError> {
    let PolyOp::Solve { algebra: name, coeffs } = op;
    let lines = read_lines(coeffs)?;
    match algebra(name)? {
        Algebra::Bicomplex => {
            let cs: Vec<BicomplexQ> = lines
                .iter()
                .map(|l| parse_bicomplex(l).map_err(|e| usage(&format!("coefficient {l:?}"), e)))
                .collect::<Result<_, _>>()?;
            let p = BicomplexPolynomial::new(cs).map_err(|e| usage("polynomial", e))?;
            let set = solve(&p).map_err(compute)?;
            Ok(render(&set, crate::render::bicomplex, crate::render::bicomplex, |r| match &r.exact {
                Some(x) => x.to_string(),
                None => r.value.to_string(),
            }))
        }
        Algebra::Multicomplex(order) => {
            let cs: Vec<MulticomplexQ> = lines
                .iter()
                .map(|l| parse_multicomplex(order, l).map_err(|e| usage(&format!("coefficient {l:?}"), e)))
                .collect::<Result<_, _>>()?;
            let p = MulticomplexPolynomial::new(order, cs).map_err(|e| usage("polynomial", e))?;
            let set = mc_solve(&p).map_err(compute)?;
            Ok(render(&set, crate::render::multicomplex, crate::render::multicomplex, |r| match &r.exact {
                Some(x) => x.to_string(),
                None => r.value.to_string(),
            }))
        }
    }
}
