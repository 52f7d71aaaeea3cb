use crate::params::Params;
use crate::report::{RunReport, Table, VerifyReport};
use crate::scenarios::{find, registry, Scenario};
use crate::{CliError, Context, Result, ScenarioConfig};
use std::path::PathBuf;
use std::time::Instant;

/// Files written by [`execute`].
#[derive(Debug, Clone, PartialEq)]
pub struct Artifacts {
    pub csv: PathBuf,
    pub report: PathBuf,
}

fn validated(config: &ScenarioConfig) -> Result<(&'static Scenario, Params)> {
    let sc = find(&config.scenario).ok_or_else(|| CliError::UnknownScenario(config.scenario.clone()))?;
    let params = Params::resolve(&sc.params, &config.parameters)?;
    for (name, tol) in &config.tolerances {
        if !sc.checks.iter().any(|c| c.name == name) {
            return Err(CliError::Config(format!("tolerance override for unknown check `{name}`")));
        }
        if !tol.is_finite() {
            return Err(CliError::Config(format!("tolerance for `{name}` must be finite")));
        }
    }
    Ok((sc, params))
}

/// Runs a scenario in memory.
pub fn run_scenario(config: &ScenarioConfig, ctx: &Context) -> Result<(RunReport, Table)> {
    let (sc, params) = validated(config)?;
    let start = Instant::now();
    let outcome = (sc.run)(&params, ctx)
        .map_err(|source| CliError::Scenario { scenario: sc.name.to_string(), source })?;
    let wall = start.elapsed().as_secs_f64();
    let checks = sc
        .checks
        .iter()
        .map(|spec| {
            let mut found = outcome.residuals.iter().filter(|(n, _)| *n == spec.name);
            let residual = found.next().map(|(_, r)| *r);
            assert!(found.next().is_none(), "check `{}` reported twice", spec.name);
            let residual = residual.unwrap_or_else(|| panic!("check `{}` was not reported", spec.name));
            let tol = config.tolerances.get(spec.name).copied().unwrap_or(spec.tolerance);
            spec.evaluate(residual, tol)
        })
        .collect();
    for (n, _) in &outcome.residuals {
        assert!(sc.checks.iter().any(|c| c.name == *n), "undeclared check `{n}`");
    }
    let report = RunReport {
        scenario: sc.name.to_string(),
        module: sc.module.to_string(),
        seed: ctx.seed,
        parameters: params.render(),
        checks,
        notes: outcome.notes,
        wall_clock_s: wall,
        artifacts: Vec::new(),
    };
    Ok((report, outcome.table))
}

/// Runs a scenario and writes `<scenario>.csv` and `<scenario>.json` into
/// the configured output directory. Nothing is written when the
/// configuration is rejected.
pub fn execute(config: &ScenarioConfig, ctx: &Context) -> Result<(RunReport, Artifacts)> {
    validated(config)?;
    let (mut report, table) = run_scenario(config, ctx)?;
    let dir = &config.output_dir;
    std::fs::create_dir_all(dir)?;
    let csv = dir.join(format!("{}.csv", report.scenario));
    let json = dir.join(format!("{}.json", report.scenario));
    std::fs::write(&csv, table.to_csv())?;
    report.artifacts = vec![csv.display().to_string(), json.display().to_string()];
    std::fs::write(&json, report.to_json()? + "\n")?;
    Ok((report, Artifacts { csv, report: json }))
}

/// Runs every scenario whose name or module contains `filter`, with default
/// parameters. A scenario that aborts is recorded as a failed check named
/// `<scenario>-aborted`.
pub fn verify(filter: Option<&str>, ctx: &Context) -> Result<VerifyReport> {
    let selected: Vec<&Scenario> = registry()
        .iter()
        .filter(|s| filter.is_none_or(|f| s.name.contains(f) || s.module.contains(f)))
        .collect();
    if selected.is_empty() {
        return Err(CliError::Config(format!("no scenario matches `{}`", filter.unwrap_or(""))));
    }
    let mut reports = Vec::new();
    for sc in selected {
        let config = ScenarioConfig::new(sc.name);
        match run_scenario(&config, ctx) {
            Ok((r, _)) => reports.push(r),
            Err(CliError::Scenario { source, .. }) => reports.push(RunReport {
                scenario: sc.name.to_string(),
                module: sc.module.to_string(),
                seed: ctx.seed,
                parameters: Default::default(),
                checks: vec![crate::CheckSpec::at_most("aborted", 0.0, "").evaluate(f64::INFINITY, 0.0)]
                    .into_iter()
                    .map(|mut c| {
                        c.name = format!("{}-aborted", sc.name);
                        c
                    })
                    .collect(),
                notes: vec![source.to_string()],
                wall_clock_s: 0.0,
                artifacts: Vec::new(),
            }),
            Err(e) => return Err(e),
        }
    }
    Ok(VerifyReport { reports })
}
