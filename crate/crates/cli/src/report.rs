use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Direction of the comparison between a residual and its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Passes when `residual <= tolerance`.
    AtMost,
    /// Passes when `residual >= tolerance`; used for checks that a wrong
    /// input is detected.
    AtLeast,
}

/// A check declared by a scenario.
#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub name: &'static str,
    pub kind: CheckKind,
    pub tolerance: f64,
    pub description: &'static str,
}

impl CheckSpec {
    pub const fn at_most(name: &'static str, tolerance: f64, description: &'static str) -> Self {
        Self { name, kind: CheckKind::AtMost, tolerance, description }
    }

    pub const fn at_least(name: &'static str, tolerance: f64, description: &'static str) -> Self {
        Self { name, kind: CheckKind::AtLeast, tolerance, description }
    }

    pub fn evaluate(&self, residual: f64, tolerance: f64) -> CheckResult {
        let passed = match self.kind {
            CheckKind::AtMost => residual <= tolerance,
            CheckKind::AtLeast => residual >= tolerance,
        };
        CheckResult { name: self.name.to_string(), kind: self.kind, residual, tolerance, passed }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub kind: CheckKind,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Outcome of one scenario run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub scenario: String,
    pub module: String,
    pub seed: u64,
    pub parameters: BTreeMap<String, String>,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
    pub wall_clock_s: f64,
    pub artifacts: Vec<String>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect()
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }
}

/// Numeric table written as CSV.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Comma-separated text; numbers use the shortest round-trip form.
    pub fn to_csv(&self) -> String {
        let mut s = self.header.join(",");
        s.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:?}")).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

/// Aggregate of several scenario runs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub reports: Vec<RunReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(RunReport::passed)
    }

    pub fn failures(&self) -> Vec<String> {
        self.reports.iter().flat_map(|r| r.failures().into_iter().map(String::from)).collect()
    }

    /// Fixed-width table of every check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<20} {:<40} {:>12} {:>4} {:>12}  status", "scenario", "check", "residual", "", "tolerance");
        for r in &self.reports {
            for c in &r.checks {
                let op = match c.kind {
                    CheckKind::AtMost => "<=",
                    CheckKind::AtLeast => ">=",
                };
                let status = if c.passed { "ok" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{:<20} {:<40} {:>12.3e} {:>4} {:>12.3e}  {status}",
                    r.scenario, c.name, c.residual, op, c.tolerance
                );
            }
            for n in &r.notes {
                let _ = writeln!(out, "{:<20} note: {n}", r.scenario);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_uses_round_trip_floats() {
        let mut t = Table::new(&["t", "x"]);
        t.push(vec![0.0, 0.1]);
        t.push(vec![1.0, 1.0 / 3.0]);
        assert_eq!(t.to_csv(), "t,x\n0.0,0.1\n1.0,0.3333333333333333\n");
    }

    #[test]
    fn check_directions() {
        let up = CheckSpec::at_most("a", 1e-6, "");
        assert!(up.evaluate(1e-7, 1e-6).passed);
        assert!(!up.evaluate(f64::NAN, 1e-6).passed);
        let down = CheckSpec::at_least("b", 0.1, "");
        assert!(down.evaluate(0.5, 0.1).passed);
        assert!(!down.evaluate(0.01, 0.1).passed);
    }
}
