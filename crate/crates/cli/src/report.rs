use serde::Serialize;
use serde_json::Value;

#[derive(Serialize, Debug)]
pub struct Report {
    pub version: &'static str,
    pub input: Value,
    pub invariants: Option<Invariants>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    pub verifications: Vec<Verification>,
}

#[derive(Serialize, Debug)]
pub struct Invariants {
    pub mu: usize,
    pub weights: Vec<String>,
    pub mlct: String,
    pub lct: String,
    pub spectrum: Vec<SpectralEntry>,
    pub reduced_bs_roots: Vec<String>,
    pub hodge_floor: Option<u32>,
    pub warnings: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct SpectralEntry {
    pub alpha: String,
    pub multiplicity: usize,
}

#[derive(Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Serialize, Debug)]
pub struct Verification {
    pub name: String,
    pub status: Status,
    pub details: Value,
}

impl Verification {
    pub fn new(name: impl Into<String>, passed: bool, details: Value) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Verification { name: name.into(), status, details }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Verification { name: name.into(), status: Status::Skipped, details: Value::String(reason.into()) }
    }
}

impl Report {
    pub fn new(input: Value) -> Self {
        Report { version: env!("CARGO_PKG_VERSION"), input, invariants: None, result: None, verifications: Vec::new() }
    }

    pub fn failed(&self) -> bool {
        self.verifications.iter().any(|v| v.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let value = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &value {
            for key in ["input", "invariants", "result"] {
                if let Some(v) = map.get(key).filter(|v| !v.is_null()) {
                    out.push_str(key);
                    out.push_str(":\n");
                    render(v, 1, &mut out);
                }
            }
        }
        for v in &self.verifications {
            let tag = match v.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("[{tag}] {}\n", v.name));
            if v.status != Status::Pass {
                render(&v.details, 1, &mut out);
            }
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(item, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        let mut inner = String::new();
                        render(item, depth + 1, &mut inner);
                        let trimmed = inner.trim_start();
                        out.push_str(&format!("{pad}- {trimmed}"));
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
