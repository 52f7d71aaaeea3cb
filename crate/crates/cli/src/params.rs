use crate::{CliError, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// How a parameter's text is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    Number,
    Integer,
    /// A 2x2 real matrix written as `[[a,b],[c,d]]`.
    Matrix2,
}

/// Declared parameter of a scenario.
#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
    pub help: &'static str,
}

/// Raw value as it appears in a config file or on the command line.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Number(f64),
    Text(String),
}

impl ParamValue {
    fn as_text(&self) -> String {
        match self {
            ParamValue::Number(x) => format!("{x:?}"),
            ParamValue::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Resolved {
    Number(f64),
    Integer(usize),
    Matrix2([[f64; 2]; 2]),
}

/// Parameters of one scenario run after defaults have been applied.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Params(BTreeMap<&'static str, Resolved>);

impl Params {
    /// Applies `given` on top of the defaults in `specs`. Keys that are not
    /// declared are rejected.
    pub fn resolve(specs: &[ParamSpec], given: &BTreeMap<String, ParamValue>) -> Result<Self> {
        if let Some(k) = given.keys().find(|k| !specs.iter().any(|s| s.name == k.as_str())) {
            let known: Vec<&str> = specs.iter().map(|s| s.name).collect();
            return Err(CliError::Config(format!("unknown parameter `{k}` (expected one of: {})", known.join(", "))));
        }
        let mut out = BTreeMap::new();
        for spec in specs {
            let text = given.get(spec.name).map(ParamValue::as_text).unwrap_or_else(|| spec.default.to_string());
            out.insert(spec.name, parse(spec, &text)?);
        }
        Ok(Self(out))
    }

    pub fn number(&self, name: &str) -> f64 {
        match self.0.get(name) {
            Some(Resolved::Number(x)) => *x,
            Some(Resolved::Integer(n)) => *n as f64,
            _ => panic!("scenario asked for undeclared numeric parameter `{name}`"),
        }
    }

    pub fn integer(&self, name: &str) -> usize {
        match self.0.get(name) {
            Some(Resolved::Integer(n)) => *n,
            _ => panic!("scenario asked for undeclared integer parameter `{name}`"),
        }
    }

    pub fn matrix2(&self, name: &str) -> [[f64; 2]; 2] {
        match self.0.get(name) {
            Some(Resolved::Matrix2(m)) => *m,
            _ => panic!("scenario asked for undeclared matrix parameter `{name}`"),
        }
    }

    /// Resolved values rendered as text, for reports.
    pub fn render(&self) -> BTreeMap<String, String> {
        self.0
            .iter()
            .map(|(k, v)| {
                let s = match v {
                    Resolved::Number(x) => format!("{x:?}"),
                    Resolved::Integer(n) => n.to_string(),
                    Resolved::Matrix2(m) => format!("[[{:?},{:?}],[{:?},{:?}]]", m[0][0], m[0][1], m[1][0], m[1][1]),
                };
                (k.to_string(), s)
            })
            .collect()
    }
}

fn parse(spec: &ParamSpec, text: &str) -> Result<Resolved> {
    let bad = |why: &str| CliError::Config(format!("parameter `{}` = `{text}`: {why}", spec.name));
    match spec.kind {
        ParamKind::Number | ParamKind::Integer => {
            let x: f64 = text.trim().parse().map_err(|_| bad("not a number"))?;
            if !x.is_finite() {
                return Err(bad("must be finite"));
            }
            if spec.kind == ParamKind::Number {
                return Ok(Resolved::Number(x));
            }
            if x < 0.0 || x.fract() != 0.0 || x > u32::MAX as f64 {
                return Err(bad("must be a non-negative integer"));
            }
            Ok(Resolved::Integer(x as usize))
        }
        ParamKind::Matrix2 => {
            let m: [[f64; 2]; 2] = serde_json::from_str(text).map_err(|_| bad("expected [[a,b],[c,d]]"))?;
            if m.iter().flatten().any(|x| !x.is_finite()) {
                return Err(bad("entries must be finite"));
            }
            Ok(Resolved::Matrix2(m))
        }
    }
}

/// Splits `key=value`.
pub(crate) fn parse_assignment(s: &str) -> Result<(String, ParamValue)> {
    let (k, v) = s
        .split_once('=')
        .ok_or_else(|| CliError::Config(format!("parameter `{s}` is not of the form key=value")))?;
    if k.trim().is_empty() {
        return Err(CliError::Config(format!("parameter `{s}` has an empty key")));
    }
    Ok((k.trim().to_string(), ParamValue::Text(v.trim().to_string())))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPECS: [ParamSpec; 3] = [
        ParamSpec { name: "dt", kind: ParamKind::Number, default: "0.001", help: "" },
        ParamSpec { name: "n", kind: ParamKind::Integer, default: "10", help: "" },
        ParamSpec { name: "A", kind: ParamKind::Matrix2, default: "[[0,1],[-1,0]]", help: "" },
    ];

    #[test]
    fn defaults_and_overrides() {
        let p = Params::resolve(&SPECS, &BTreeMap::new()).unwrap();
        assert_eq!(p.number("dt"), 0.001);
        assert_eq!(p.integer("n"), 10);
        assert_eq!(p.matrix2("A"), [[0.0, 1.0], [-1.0, 0.0]]);
        let mut given = BTreeMap::new();
        given.insert("n".to_string(), ParamValue::Number(4.0));
        given.insert("A".to_string(), ParamValue::Text("[[1,2],[3,4]]".into()));
        let p = Params::resolve(&SPECS, &given).unwrap();
        assert_eq!(p.integer("n"), 4);
        assert_eq!(p.matrix2("A"), [[1.0, 2.0], [3.0, 4.0]]);
    }

    #[test]
    fn rejects_bad_input() {
        let mut given = BTreeMap::new();
        given.insert("bogus".to_string(), ParamValue::Number(1.0));
        assert!(matches!(Params::resolve(&SPECS, &given), Err(CliError::Config(_))));
        let mut given = BTreeMap::new();
        given.insert("n".to_string(), ParamValue::Number(1.5));
        assert!(Params::resolve(&SPECS, &given).is_err());
        let mut given = BTreeMap::new();
        given.insert("A".to_string(), ParamValue::Text("[1,2]".into()));
        assert!(Params::resolve(&SPECS, &given).is_err());
        assert!(parse_assignment("novalue").is_err());
        assert_eq!(parse_assignment("a = 3").unwrap(), ("a".into(), ParamValue::Text("3".into())));
    }
}
