use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::exec::Exec;

/// Limits for exhaustive searches. Exceeding one is an error, never a
/// silent truncation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumBudget {
    pub max_subspaces: u64,
    pub max_pairs: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time_limit: Option<Duration>,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_subspaces: 1_000_000,
            max_pairs: 10_000_000,
            time_limit: None,
        }
    }
}

/// A deliberately broken code path, used to check that the verification
/// suite notices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Fault {
    /// Build triangular decompositions from arbitrary linear complements
    /// (sheared by a vector of the ideal) instead of Fitting null components.
    LinearComplement,
}

/// Everything that can change a result besides the input algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Config {
    pub seed: u64,
    pub budget: EnumBudget,
    #[serde(skip)]
    pub exec: Exec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fault: Option<Fault>,
}

impl Config {
    pub fn with_seed(seed: u64) -> Self {
        Config {
            seed,
            ..Config::default()
        }
    }

    pub fn sequential(mut self) -> Self {
        self.exec = Exec::Sequential;
        self
    }
}

/// Wall-clock guard derived from [`EnumBudget::time_limit`].
#[derive(Clone, Copy, Debug)]
pub(crate) struct Deadline(Option<std::time::Instant>);

impl Deadline {
    pub(crate) fn start(budget: &EnumBudget) -> Self {
        Deadline(budget.time_limit.map(|d| std::time::Instant::now() + d))
    }

    pub(crate) fn check(&self, what: &str) -> crate::Result<()> {
        match self.0 {
            Some(t) if std::time::Instant::now() > t => {
                Err(crate::Error::BudgetExceeded(format!("time limit reached during {what}")))
            }
            _ => Ok(()),
        }
    }
}
