//! Run reports: a deterministic record of one CLI invocation.
//!
//! The JSON rendering contains the command, content hashes of every
//! input file, and the named check results — and nothing that varies
//! between identical runs, so byte-identical inputs produce
//! byte-identical reports. Timing is printed only on the human side.

use std::collections::BTreeMap;
use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub status: Status,
    pub value: Value,
}

#[derive(Debug)]
pub struct RunReport {
    command: String,
    inputs: BTreeMap<String, String>,
    results: BTreeMap<String, CheckResult>,
    started: Instant,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            inputs: BTreeMap::new(),
            results: BTreeMap::new(),
            started: Instant::now(),
        }
    }

    pub fn record_input(&mut self, name: &str, contents: &[u8]) {
        let mut hasher = Sha256::new();
        hasher.update(contents);
        self.inputs
            .insert(name.to_string(), format!("{:x}", hasher.finalize()));
    }

    pub fn add(&mut self, name: &str, status: Status, value: Value) {
        let prior = self.results.insert(
            name.to_string(),
            CheckResult { status, value },
        );
        assert!(prior.is_none(), "duplicate check name {name:?}");
    }

    pub fn pass(&mut self, name: &str, value: Value) {
        self.add(name, Status::Pass, value);
    }

    pub fn check(&mut self, name: &str, ok: bool, value: Value) {
        self.add(name, if ok { Status::Pass } else { Status::Fail }, value);
    }

    pub fn all_passed(&self) -> bool {
        self.results.values().all(|r| r.status == Status::Pass)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> Value {
        let results: BTreeMap<String, Value> = self
            .results
            .iter()
            .map(|(name, r)| {
                (
                    name.clone(),
                    json!({"status": r.status.as_str(), "value": r.value}),
                )
            })
            .collect();
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": results,
        })
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        for (name, hash) in &self.inputs {
            out.push_str(&format!("input:   {name}  sha256:{}\n", &hash[..16]));
        }
        let width = self
            .results
            .keys()
            .map(String::len)
            .max()
            .unwrap_or(0)
            .max(5);
        for (name, r) in &self.results {
            let value = match &r.value {
                Value::Null => String::new(),
                v => format!("  {v}"),
            };
            out.push_str(&format!(
                "{:width$}  {:5}{}\n",
                name,
                r.status.as_str(),
                value,
                width = width
            ));
        }
        let elapsed = self.started.elapsed().as_millis();
        out.push_str(&format!(
            "{} checks, {} passed  ({elapsed} ms)\n",
            self.results.len(),
            self.results
                .values()
                .filter(|r| r.status == Status::Pass)
                .count(),
        ));
        out
    }
}
