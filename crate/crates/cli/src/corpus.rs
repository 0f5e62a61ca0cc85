//! Golden-case runner.
//!
//! A case is a JSON file:
//!
//! ```json
//! { "args": ["--format", "json", "bc", "mul", "1 - 1*k", "1 + 1*k"],
//!   "expected": { "result": { "w": "0", "x": "0", "y": "0", "z": "0" } },
//!   "tolerance": 1e-9,
//!   "expected_exit": 0 }
//! ```
//!
//! `expected` is matched against the parsed JSON output: objects must
//! contain the expected keys (extra keys are ignored), arrays must match
//! element-wise with equal length, numbers match bit-exactly unless a
//! `tolerance` is given (then `|a - b| <= tol·max(1, |b|)`). Alternatively
//! `expected_text` compares the text output exactly. `{dir}` in an argument
//! is replaced with the case file's directory.

use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::Outcome;

struct CaseResult {
    name: String,
    failures: Vec<String>,
}

fn load(path: &Path) -> Result<(Vec<String>, Value), String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read case: {e}"))?;
    let case: Value = serde_json::from_str(&text).map_err(|e| format!("invalid JSON: {e}"))?;
    let dir = path.parent().unwrap_or(Path::new(".")).display().to_string();
    let args = case
        .get("args")
        .and_then(Value::as_array)
        .ok_or("missing \"args\" array")?
        .iter()
        .map(|a| a.as_str().map(|s| s.replace("{dir}", &dir)).ok_or("\"args\" must hold strings"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((args, case))
}

fn as_f64(n: &serde_json::Number) -> f64 {
    n.as_str().parse().unwrap_or(f64::NAN)
}

fn compare(path: &str, expected: &Value, actual: &Value, tol: Option<f64>, out: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => {
            for (k, v) in e {
                match a.get(k) {
                    Some(av) => compare(&format!("{path}.{k}"), v, av, tol, out),
                    None => out.push(format!("{path}.{k}: missing")),
                }
            }
        }
        (Value::Array(e), Value::Array(a)) => {
            if e.len() != a.len() {
                out.push(format!("{path}: expected {} elements, got {}", e.len(), a.len()));
                return;
            }
            for (n, (ev, av)) in e.iter().zip(a).enumerate() {
                compare(&format!("{path}[{n}]"), ev, av, tol, out);
            }
        }
        (Value::Number(e), Value::Number(a)) => {
            let ok = match tol {
                Some(t) => {
                    let (x, y) = (as_f64(a), as_f64(e));
                    (x - y).abs() <= t * y.abs().max(1.0)
                }
                None => e.as_str() == a.as_str(),
            };
            if !ok {
                out.push(format!("{path}: expected {e}, got {a}"));
            }
        }
        _ if expected == actual => {}
        _ => out.push(format!("{path}: expected {expected}, got {actual}")),
    }
}

fn run_case(path: &Path) -> CaseResult {
    let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
    let mut failures = Vec::new();
    let (args, case) = match load(path) {
        Ok(v) => v,
        Err(e) => return CaseResult { name, failures: vec![e] },
    };
    let outcome = crate::run(&args);
    let want_exit = case.get("expected_exit").and_then(Value::as_i64).unwrap_or(0);
    if i64::from(outcome.code) != want_exit {
        failures.push(format!("exit code: expected {want_exit}, got {} ({})", outcome.code, outcome.stderr.trim()));
    }
    let tol = case.get("tolerance").and_then(Value::as_f64);
    if let Some(expected) = case.get("expected") {
        match serde_json::from_str::<Value>(&outcome.stdout) {
            Ok(actual) => compare("$", expected, &actual, tol, &mut failures),
            Err(e) => failures.push(format!("output is not JSON ({e}): {}", outcome.stdout.trim())),
        }
    }
    if let Some(text) = case.get("expected_text").and_then(Value::as_str) {
        if outcome.stdout.trim_end() != text.trim_end() {
            failures.push(format!(
                "text output differs\n--- expected\n{}\n--- got\n{}",
                text.trim_end(),
                outcome.stdout.trim_end()
            ));
        }
    }
    CaseResult { name, failures }
}

pub fn run_corpus(dir: &Path) -> Outcome {
    let entries = match std::fs::read_dir(dir) {
        Ok(e) => e,
        Err(e) => {
            return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", dir.display()) }
        }
    };
    let mut paths: Vec<PathBuf> = entries
        .filter_map(Result::ok)
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Outcome {
            code: 0,
            stdout: "0 cases\n".into(),
            stderr: format!("warning: 0 cases in {}\n", dir.display()),
        };
    }

    let results: Vec<CaseResult> = std::thread::scope(|s| {
        let handles: Vec<_> = paths.iter().map(|p| s.spawn(move || run_case(p))).collect();
        handles.into_iter().map(|h| h.join().expect("case thread panicked")).collect()
    });

    let mut stdout = String::new();
    let failed = results.iter().filter(|r| !r.failures.is_empty()).count();
    for r in &results {
        if r.failures.is_empty() {
            stdout += &format!("ok    {}\n", r.name);
        } else {
            stdout += &format!("FAIL  {}\n", r.name);
            for f in &r.failures {
                for line in f.lines() {
                    stdout += &format!("        {line}\n");
                }
            }
        }
    }
    stdout += &format!("{} cases: {} passed, {} failed\n", results.len(), results.len() - failed, failed);
    Outcome { code: i32::from(failed > 0), stdout, stderr: String::new() }
}
