use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

/// One named clause of a certificate.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    /// Set when the clause was deliberately not evaluated; such a check never passes.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub millis: u64,
}

/// Verdicts for a list of clauses; the overall verdict is their conjunction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub target: String,
    pub checks: Vec<Check>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conclusion: Option<String>,
}

/// What a clause evaluation returns before timing is attached.
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub pass: bool,
    pub witness: Option<Value>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass() -> Outcome {
        Outcome {
            pass: true,
            ..Outcome::default()
        }
    }

    pub fn fail(witness: Value) -> Outcome {
        Outcome {
            pass: false,
            witness: Some(witness),
            note: None,
        }
    }

    pub fn verdict(pass: bool, witness: Option<Value>) -> Outcome {
        Outcome {
            pass,
            witness,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Outcome {
        self.note = Some(note.into());
        self
    }
}

impl Certificate {
    pub fn new(target: impl Into<String>) -> Certificate {
        Certificate {
            target: target.into(),
            checks: Vec::new(),
            pass: true,
            conclusion: None,
        }
    }

    /// Evaluates `f` as the next clause and records its verdict and timing.
    pub fn run(&mut self, name: impl Into<String>, f: impl FnOnce() -> Outcome) -> bool {
        let t = Instant::now();
        let o = f();
        self.push(Check {
            name: name.into(),
            pass: o.pass,
            skipped: false,
            witness: o.witness,
            note: o.note,
            millis: t.elapsed().as_millis() as u64,
        });
        o.pass
    }

    /// Records a clause that was not evaluated.
    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.push(Check {
            name: name.into(),
            pass: false,
            skipped: true,
            witness: None,
            note: Some(reason.into()),
            millis: 0,
        });
    }

    /// Turns an evaluated clause into a skipped one.
    pub fn mark_skipped(&mut self, name: &str, reason: impl Into<String>) {
        if let Some(c) = self.checks.iter_mut().find(|c| c.name == name) {
            c.pass = false;
            c.skipped = true;
            c.witness = None;
            c.note = Some(reason.into());
        }
        self.pass = self.checks.iter().all(|c| c.pass);
    }

    pub fn push(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    /// Appends the checks of `other` under `prefix/`.
    pub fn absorb(&mut self, prefix: &str, other: Certificate) {
        for mut c in other.checks {
            c.name = format!("{}/{}", prefix, c.name);
            self.push(c);
        }
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    /// The same certificate with every timing zeroed, for byte comparisons.
    pub fn without_timings(&self) -> Certificate {
        let mut c = self.clone();
        for k in &mut c.checks {
            k.millis = 0;
        }
        c
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }
}
