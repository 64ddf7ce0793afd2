use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::certify::Certificate;
use crate::f090a::sha256_hex;

/// Everything a command produced. Timings are left out so identical inputs
/// give identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    /// Input name to SHA-256 of its bytes.
    pub inputs: BTreeMap<String, String>,
    pub certificates: Vec<Certificate>,
    pub statistics: Value,
    pub pass: bool,
    pub tool_version: String,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> RunReport {
        RunReport {
            command: command.into(),
            inputs: BTreeMap::new(),
            certificates: Vec::new(),
            statistics: Value::Null,
            pass: true,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    pub fn input(&mut self, name: impl Into<String>, bytes: &[u8]) {
        self.inputs.insert(name.into(), sha256_hex(bytes));
    }

    pub fn certificate(&mut self, c: &Certificate) {
        self.pass &= c.pass;
        self.certificates.push(c.without_timings());
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// One line per check, failures with their witness.
pub fn render(c: &Certificate) -> String {
    let mut out = format!("{}: {}\n", c.target, if c.pass { "PASS" } else { "FAIL" });
    for k in &c.checks {
        let tag = match (k.pass, k.skipped) {
            (true, _) => "ok  ",
            (false, true) => "skip",
            (false, false) => "FAIL",
        };
        out.push_str(&format!("  [{}] {}", tag, k.name));
        if let Some(n) = &k.note {
            out.push_str(&format!(" ({})", n));
        }
        if !k.pass {
            if let Some(w) = &k.witness {
                out.push_str(&format!(" {}", w));
            }
        }
        out.push('\n');
    }
    if let Some(c) = &c.conclusion {
        out.push_str(&format!("  => {}\n", c));
    }
    out
}
