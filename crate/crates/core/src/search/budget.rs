use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("invalid search input: {0}")]
    InvalidInput(String),
}

/// Limits for one engine invocation. An exhausted budget always surfaces as
/// [`SearchError::BudgetExhausted`], never as a negative answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    pub deterministic: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { node_limit: None, time_limit: None, deterministic: true }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget { node_limit: Some(limit), ..Self::default() }
    }

    pub fn seconds(secs: f64) -> Self {
        SearchBudget { time_limit: Some(Duration::from_secs_f64(secs)), ..Self::default() }
    }

    pub fn meter(&self) -> Meter {
        Meter { budget: *self, started: Instant::now(), nodes: 0 }
    }
}

/// Running node/time counter shared by the nodes of one search.
#[derive(Debug, Clone)]
pub struct Meter {
    budget: SearchBudget,
    started: Instant,
    nodes: u64,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<(), SearchError> {
        self.nodes += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.nodes > limit {
                return Err(SearchError::BudgetExhausted { nodes: self.nodes });
            }
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(limit) = self.budget.time_limit {
                if self.started.elapsed() > limit {
                    return Err(SearchError::BudgetExhausted { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
