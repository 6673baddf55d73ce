//! Run reports: one header line with the wall-clock duration, then fully
//! deterministic content.

use dtl_core::suites::Check;
use serde::Serialize;

#[derive(Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub notes: Vec<String>,
    pub checks: Vec<Check>,
    pub pass: bool,
    /// wall-clock duration; the only non-deterministic field, confined to
    /// one line of output
    pub duration_ms: u128,
}

impl RunReport {
    pub fn new(command: String) -> RunReport {
        RunReport {
            schema: 1,
            command,
            notes: Vec::new(),
            checks: Vec::new(),
            pass: true,
            duration_ms: 0,
        }
    }

    pub fn note(&mut self, line: impl Into<String>) {
        self.notes.push(line.into());
    }

    pub fn push_check(&mut self, check: Check) {
        self.pass &= check.pass;
        self.checks.push(check);
    }

    pub fn emit(&self, json: bool) {
        // writes ignore broken pipes so that `dtl ... | head` stays quiet
        use std::io::Write;
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        if json {
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(self).expect("report serializes")
            );
            return;
        }
        let _ = writeln!(out, "# dtl {} ({} ms)", self.command, self.duration_ms);
        for n in &self.notes {
            let _ = writeln!(out, "{}", n);
        }
        for c in &self.checks {
            let _ = writeln!(
                out,
                "[{}] {} (expected {}, got {})",
                if c.pass { "pass" } else { "FAIL" },
                c.name,
                c.expected,
                c.actual
            );
        }
        let _ = writeln!(
            out,
            "verdict: {} ({}/{} checks)",
            if self.pass { "pass" } else { "FAIL" },
            self.checks.iter().filter(|c| c.pass).count(),
            self.checks.len()
        );
    }
}
