//! Element-count ceilings for enumerations.

/// Environment variable overriding every default budget.
pub const BUDGET_ENV: &str = "CONJRATIO_BUDGET";

pub const DEFAULT_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Budget {
    pub const fn new(limit: u64) -> Self {
        Self { limit }
    }

    pub const fn unlimited() -> Self {
        Self { limit: u64::MAX }
    }

    /// The default budget, or the value of `CONJRATIO_BUDGET` when set and parseable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().replace('_', "").parse().ok())
            .map(Self::new)
            .unwrap_or_default()
    }

    pub fn check(&self, used: u64, radius: usize) -> crate::Result<()> {
        if used > self.limit {
            Err(crate::Error::BudgetExceeded { limit: self.limit, radius })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_BUDGET)
    }
}
