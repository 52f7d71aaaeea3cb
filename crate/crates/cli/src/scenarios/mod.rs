//! The scenario registry.

mod classical;
mod diffops;
mod lie;
mod quantum;
mod star;

use crate::params::{ParamKind, ParamSpec, Params};
use crate::report::{CheckSpec, Table};
use crate::Context;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

/// What a scenario hands back to the runner.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub residuals: Vec<(&'static str, f64)>,
    pub table: Table,
    pub notes: Vec<String>,
}

impl Outcome {
    fn new(table: Table) -> Self {
        Self { table, ..Self::default() }
    }

    fn record(&mut self, name: &'static str, residual: f64) {
        self.residuals.push((name, residual));
    }
}

pub type RunFn = fn(&Params, &Context) -> reductionlab::Result<Outcome>;

/// A registered experiment.
pub struct Scenario {
    pub name: &'static str,
    pub module: &'static str,
    pub topic: &'static str,
    pub params: Vec<ParamSpec>,
    pub checks: Vec<CheckSpec>,
    pub run: RunFn,
}

impl std::fmt::Debug for Scenario {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Scenario").field("name", &self.name).field("module", &self.module).finish()
    }
}

/// All scenarios sorted by name.
pub fn registry() -> &'static [Scenario] {
    static REG: OnceLock<Vec<Scenario>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut v: Vec<Scenario> = [classical::all(), lie::all(), diffops::all(), star::all(), quantum::all()]
            .into_iter()
            .flatten()
            .collect();
        v.sort_by(|a, b| a.name.cmp(b.name));
        v
    })
}

pub fn find(name: &str) -> Option<&'static Scenario> {
    registry().iter().find(|s| s.name == name)
}

const fn num(name: &'static str, default: &'static str, help: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Number, default, help }
}

const fn int(name: &'static str, default: &'static str, help: &'static str) -> ParamSpec {
    ParamSpec { name, kind: ParamKind::Integer, default, help }
}

fn rng(ctx: &Context) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(ctx.seed)
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
