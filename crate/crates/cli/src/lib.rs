//! Scenario runner and verification front-end for `reductionlab`.
//!
//! A scenario is a named experiment with typed parameters and a fixed list of
//! checks. Running it yields a [`RunReport`] and a numeric [`Table`] that is
//! written as CSV. [`verify`] runs every registered scenario (or a filtered
//! subset) with default parameters and collects the failing checks.

mod config;
mod context;
mod error;
mod params;
mod report;
mod runner;
pub mod scenarios;

pub use config::ScenarioConfig;
pub use context::{Context, FieldFactory, Overrides, SEED_ENV, DEFAULT_SEED};
pub use error::{CliError, Result};
pub use params::{ParamKind, ParamSpec, ParamValue, Params};
pub use report::{CheckKind, CheckResult, CheckSpec, RunReport, Table, VerifyReport};
pub use runner::{execute, run_scenario, verify, Artifacts};
pub use scenarios::{find, registry, Scenario};
