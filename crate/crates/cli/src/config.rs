use crate::params::{parse_assignment, ParamValue};
use crate::{CliError, Result};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// Everything needed to run one scenario.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    #[serde(default)]
    pub scenario: String,
    #[serde(default)]
    pub parameters: BTreeMap<String, ParamValue>,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    /// Per-check tolerance overrides, keyed by check name.
    #[serde(default)]
    pub tolerances: BTreeMap<String, f64>,
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}

impl ScenarioConfig {
    pub fn new(scenario: &str) -> Self {
        Self {
            scenario: scenario.to_string(),
            parameters: BTreeMap::new(),
            output_dir: default_output_dir(),
            tolerances: BTreeMap::new(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Config(format!("invalid config: {e}")))
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn with_param(mut self, key: &str, value: ParamValue) -> Self {
        self.parameters.insert(key.to_string(), value);
        self
    }

    /// Applies `key=value` strings from the command line.
    pub fn apply_assignments<S: AsRef<str>>(&mut self, assignments: &[S]) -> Result<()> {
        for a in assignments {
            let (k, v) = parse_assignment(a.as_ref())?;
            self.parameters.insert(k, v);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_json() {
        let c = ScenarioConfig::from_json(
            r#"{"scenario":"riccati","parameters":{"dt":0.001,"A":"[[0,1],[-1,0]]"},"tolerances":{"riccati-cross-ratio-drift":1e-5}}"#,
        )
        .unwrap();
        assert_eq!(c.scenario, "riccati");
        assert_eq!(c.output_dir, PathBuf::from("out"));
        assert_eq!(c.parameters["dt"], ParamValue::Number(0.001));
        assert!(ScenarioConfig::from_json(r#"{"scenario":"x","extra":1}"#).is_err());
        assert!(ScenarioConfig::from_json("not json").is_err());
    }

    #[test]
    fn assignments_override() {
        let mut c = ScenarioConfig::new("calogero").with_param("t_end", ParamValue::Number(1.0));
        c.apply_assignments(&["t_end=3"]).unwrap();
        assert_eq!(c.parameters["t_end"], ParamValue::Text("3".into()));
    }
}
