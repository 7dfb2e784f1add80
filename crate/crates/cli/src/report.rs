//! Reports: results, two-sided checks and warnings, rendered as canonical
//! JSON or as aligned text tables.

use std::path::Path;

use euler_trace::chi::{Eval, Rule};
use euler_trace::io::format_rational;
use euler_trace::Rational;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

/// One identity with both sides rendered verbatim.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub justification: String,
}

pub fn q(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

pub fn eval_string(x: &Eval<Rational>) -> String {
    match x {
        Ok(v) => format_rational(v),
        Err(u) => format!("undefined ({u})"),
    }
}

pub fn eval_value(x: &Eval<Rational>) -> Value {
    Value::String(eval_string(x))
}

pub fn rule_tags(rules: &[Rule]) -> String {
    rules.iter().map(|r| r.tag()).collect::<Vec<_>>().join(", ")
}

impl Check {
    pub fn new(
        name: impl Into<String>,
        lhs: impl Into<String>,
        rhs: impl Into<String>,
        equal: bool,
        justification: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            equal,
            justification: justification.into(),
        }
    }

    pub fn rational(
        name: impl Into<String>,
        lhs: &Rational,
        rhs: &Rational,
        justification: impl Into<String>,
    ) -> Self {
        Self::new(name, format_rational(lhs), format_rational(rhs), lhs == rhs, justification)
    }

    /// Equal only when both sides are defined and agree.
    pub fn eval(
        name: impl Into<String>,
        lhs: &Eval<Rational>,
        rhs: &Eval<Rational>,
        justification: impl Into<String>,
    ) -> Self {
        let equal = matches!((lhs, rhs), (Ok(a), Ok(b)) if a == b);
        Self::new(name, eval_string(lhs), eval_string(rhs), equal, justification)
    }

    /// `agreeing` of `total` trials; `first_failure` describes a mismatch.
    pub fn tally(
        name: impl Into<String>,
        agreeing: usize,
        total: usize,
        first_failure: Option<String>,
        justification: impl Into<String>,
    ) -> Self {
        let lhs = match first_failure {
            Some(f) => format!("{agreeing} agreeing trials; first mismatch: {f}"),
            None => format!("{agreeing} agreeing trials"),
        };
        Self::new(name, lhs, format!("{total} trials"), agreeing == total, justification)
    }

    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "justification": self.justification,
        })
    }
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<(String, String)>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

fn file_name(path: &Path) -> String {
    path.file_name()
        .map(|f| f.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            ..Default::default()
        }
    }

    /// Records the SHA-256 of a file under its base name.
    pub fn input_file(&mut self, path: &Path) -> anyhow::Result<()> {
        let bytes = std::fs::read(path)
            .map_err(|e| anyhow::anyhow!("cannot read {}: {e}", path.display()))?;
        self.inputs.push((file_name(path), sha256_hex(&bytes)));
        Ok(())
    }

    pub fn input_text(&mut self, name: &str, text: &str) {
        self.inputs.push((name.to_string(), sha256_hex(text.as_bytes())));
    }

    pub fn result(&mut self, key: &str, value: Value) {
        self.results.insert(key.to_string(), value);
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn warn(&mut self, w: impl Into<String>) {
        self.warnings.push(w.into());
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.equal)
    }

    pub fn status(&self) -> &'static str {
        if self.passed() {
            "pass"
        } else {
            "fail"
        }
    }

    pub fn to_value(&self) -> Value {
        let inputs: Map<String, Value> = self
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(format!("sha256:{v}"))))
            .collect();
        json!({
            "command": self.command,
            "inputs": inputs,
            "results": self.results,
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
            "warnings": self.warnings,
            "status": self.status(),
        })
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("plain values");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (k, v) in &self.inputs {
            out.push_str(&format!("input {k}: sha256:{v}\n"));
        }
        for (k, v) in &self.results {
            match v {
                Value::Array(rows) if rows.iter().all(Value::is_object) && !rows.is_empty() => {
                    out.push_str(&format!("\n{k}:\n"));
                    out.push_str(&object_table(rows));
                }
                other => out.push_str(&format!("{k}: {}\n", compact(other))),
            }
        }
        if !self.checks.is_empty() {
            out.push_str("\nchecks:\n");
            let mut rows = vec![vec![
                "name".to_string(),
                "lhs".into(),
                "rhs".into(),
                "equal".into(),
                "justification".into(),
            ]];
            rows.extend(self.checks.iter().map(|c| {
                vec![
                    c.name.clone(),
                    c.lhs.clone(),
                    c.rhs.clone(),
                    c.equal.to_string(),
                    c.justification.clone(),
                ]
            }));
            out.push_str(&align(&rows));
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out.push_str(&format!("status: {}\n", self.status()));
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn object_table(rows: &[Value]) -> String {
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().expect("object rows").keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let mut grid = vec![columns.clone()];
    grid.extend(rows.iter().map(|r| {
        columns
            .iter()
            .map(|c| r.get(c).map(compact).unwrap_or_default())
            .collect()
    }));
    align(&grid)
}

/// Left-aligned columns separated by two spaces.
pub fn align(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
            .collect();
        out.push_str("  ");
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use euler_trace::Scalar;

    #[test]
    fn status_is_the_conjunction() {
        let mut r = Report::new("t");
        r.check(Check::rational("a", &Rational::ratio(1, 2), &Rational::ratio(2, 4), "x"));
        assert!(r.passed());
        r.check(Check::rational("b", &Rational::ratio(1, 2), &Rational::ratio(1, 3), "x"));
        assert_eq!(r.status(), "fail");
        assert!(r.to_json().contains("\"lhs\": \"1/2\""));
    }

    #[test]
    fn json_keys_are_sorted() {
        let mut r = Report::new("t");
        r.result("zeta", json!(1));
        r.result("alpha", json!(2));
        let s = r.to_json();
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
        assert!(s.find("\"checks\"").unwrap() < s.find("\"command\"").unwrap());
    }

    #[test]
    fn tables_align() {
        let t = align(&[vec!["a".into(), "bb".into()], vec!["ccc".into(), "d".into()]]);
        assert_eq!(t, "  a    bb\n  ccc  d\n");
    }
}
