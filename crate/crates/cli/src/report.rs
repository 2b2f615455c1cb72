use std::fmt;
use std::time::Duration;

use serde::Serialize;
use serde_json::{Map, Value};

/// Outcome of a subcommand. The exit code depends on this alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    /// The property holds.
    Holds,
    /// A requested witness was found.
    Found,
    /// A value was computed and there is nothing to decide.
    Computed,
    /// The property fails; the certificate carries the counterexample.
    Fails,
    /// The requested witness provably does not exist.
    Absent,
    /// The search budget ran out without a decision.
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(self) -> u8 {
        match self {
            Verdict::Holds | Verdict::Found | Verdict::Computed => 0,
            Verdict::Fails | Verdict::Absent => 1,
            Verdict::Inconclusive => 3,
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Found => "found",
            Verdict::Computed => "computed",
            Verdict::Fails => "fails",
            Verdict::Absent => "absent",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub verdict: Verdict,
    pub summary: String,
    /// Extra lines for the text format.
    pub details: Vec<String>,
    pub certificate: Map<String, Value>,
    pub budgets: Map<String, Value>,
    pub seed: Option<u64>,
    pub elapsed: Duration,
}

impl Report {
    pub fn new(command: &'static str, verdict: Verdict, summary: impl Into<String>) -> Self {
        Report {
            command,
            verdict,
            summary: summary.into(),
            details: Vec::new(),
            certificate: Map::new(),
            budgets: Map::new(),
            seed: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn detail(mut self, line: impl Into<String>) -> Self {
        self.details.push(line.into());
        self
    }

    pub fn cert(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.certificate.insert(key.to_string(), value.into());
        self
    }

    pub fn budget(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.budgets.insert(key.to_string(), value.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    pub fn exit_code(&self) -> u8 {
        self.verdict.exit_code()
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "command": self.command,
            "verdict": self.verdict,
            "summary": self.summary,
            "certificate": self.certificate,
            "budgets": self.budgets,
            "seed": self.seed,
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Machine => {
                let mut s = serde_json::to_string_pretty(&self.to_json()).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Text => {
                let mut out = format!("{}: {}\n{}\n", self.command, self.verdict, self.summary);
                for line in &self.details {
                    out.push_str("  ");
                    out.push_str(line);
                    out.push('\n');
                }
                if !self.budgets.is_empty() {
                    let parts: Vec<String> = self
                        .budgets
                        .iter()
                        .map(|(k, v)| format!("{k} = {}", plain(v)))
                        .collect();
                    out.push_str(&format!("budgets: {}\n", parts.join(", ")));
                }
                if let Some(seed) = self.seed {
                    out.push_str(&format!("seed: {seed}\n"));
                }
                out
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Anything printable, stored as its string form.
pub fn text(x: impl fmt::Display) -> Value {
    Value::String(x.to_string())
}

pub fn text_list<T: fmt::Display>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(text).collect())
}
