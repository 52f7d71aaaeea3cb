use reductionlab::numeric::ToleranceConfig;
use std::sync::Arc;

/// Environment variable holding the seed of every randomised suite.
pub const SEED_ENV: &str = "REDUCTIONLAB_SEED";
pub const DEFAULT_SEED: u64 = 42;

type Field = Box<dyn Fn(f64, &[f64], &mut [f64]) -> reductionlab::Result<()>>;

/// Builds a vector field from a scalar coupling.
pub type FieldFactory = Arc<dyn Fn(f64) -> Field + Send + Sync>;

/// Replacement implementations used in place of library routines.
#[derive(Clone, Default)]
pub struct Overrides {
    pub calogero_field: Option<FieldFactory>,
}

impl std::fmt::Debug for Overrides {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Overrides")
            .field("calogero_field", &self.calogero_field.is_some())
            .finish()
    }
}

/// Shared inputs of a run: PRNG seed, tolerance policy and overrides.
#[derive(Debug, Clone)]
pub struct Context {
    pub seed: u64,
    pub tolerances: ToleranceConfig,
    pub overrides: Overrides,
}

impl Default for Context {
    fn default() -> Self {
        Self::new(DEFAULT_SEED)
    }
}

impl Context {
    pub fn new(seed: u64) -> Self {
        Self { seed, tolerances: ToleranceConfig::default(), overrides: Overrides::default() }
    }

    /// Reads the seed from [`SEED_ENV`], falling back to [`DEFAULT_SEED`].
    pub fn from_env() -> std::result::Result<Self, String> {
        match std::env::var(SEED_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map(Self::new)
                .map_err(|_| format!("{SEED_ENV} must be an unsigned integer, got `{s}`")),
            Err(_) => Ok(Self::new(DEFAULT_SEED)),
        }
    }

    pub fn with_calogero_field(mut self, f: FieldFactory) -> Self {
        self.overrides.calogero_field = Some(f);
        self
    }
}
