//! Node and wall-clock limits for the exhaustive searches.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

pub const DEFAULT_NODES: u64 = 10_000_000;
pub const DEFAULT_TIME: Duration = Duration::from_secs(30);
pub const BUDGET_ENV: &str = "GRUNBAUM_BUDGET";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exceeded")]
pub struct BudgetExceeded;

/// Shared counter; safe to tick from several worker threads.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    tripped: AtomicBool,
}

impl Budget {
    pub fn new(limit: u64, time: Option<Duration>) -> Self {
        Budget {
            limit,
            deadline: time.map(|t| Instant::now() + t),
            nodes: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX, None)
    }

    /// Default limits, with the node limit overridable through `GRUNBAUM_BUDGET`.
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_NODES);
        Self::new(limit, Some(DEFAULT_TIME))
    }

    pub fn tick(&self) -> Result<(), BudgetExceeded> {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.limit || self.tripped.load(Ordering::Relaxed) {
            self.tripped.store(true, Ordering::Relaxed);
            return Err(BudgetExceeded);
        }
        if n.is_multiple_of(4096) {
            if let Some(d) = self.deadline {
                if Instant::now() > d {
                    self.tripped.store(true, Ordering::Relaxed);
                    return Err(BudgetExceeded);
                }
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::from_env()
    }
}
