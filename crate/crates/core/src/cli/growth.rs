use super::config::{Family, RunConfig};
use super::table::Table;
use super::Format;
use crate::budget::Budget;
use crate::cayley_oracle::{ball_enumerate, conjugacy_classes, counts_from_key, FreeAbelian, Heisenberg, InfiniteDihedral};
use crate::free_group::FreeGroup;
use crate::lamplighter::Lamplighter;
use crate::raag::Raag;
use crate::sequences::{decimal, GrowthCounts};
use crate::{Error, Result};

pub const DIGITS: usize = 12;

/// A result computed up to some radius, possibly below the requested one.
#[derive(Debug, Clone, PartialEq)]
pub struct Truncated<T> {
    pub value: T,
    /// First radius that could not be computed within the budget.
    pub truncated_at: Option<usize>,
}

/// Exact counts for `n ≤ max_n`.
pub fn growth_counts(cfg: &RunConfig, max_n: usize, budget: Budget) -> Result<GrowthCounts> {
    match cfg.family {
        Family::Free => FreeGroup::new(cfg.rank).counts(max_n, budget),
        Family::FreeAbelian => {
            let ball = ball_enumerate(&FreeAbelian::new(cfg.dim), max_n, budget)?;
            Ok(counts_from_key(&ball, |x| x.clone()))
        }
        Family::Raag => Ok(Raag::new(cfg.graph.clone().expect("checked")).counts(max_n, budget)?.growth),
        Family::Lamplighter => Lamplighter::counts(max_n, budget),
        Family::DihedralInf => Ok(conjugacy_classes(&InfiniteDihedral, max_n, cfg.slack, budget)?.growth_counts()),
        Family::Heisenberg => {
            let ball = ball_enumerate(&Heisenberg, max_n, budget)?;
            Ok(counts_from_key(&ball, Heisenberg::conj_key))
        }
    }
}

/// Runs `compute` at `max_n`; whenever the budget runs out at some radius,
/// retries below it. `extra` is how far beyond the table radius the
/// computation enumerates.
pub fn with_truncation<T>(max_n: usize, extra: usize, compute: impl Fn(usize) -> Result<T>) -> Result<Truncated<T>> {
    let mut n = max_n;
    loop {
        match compute(n) {
            Ok(value) => return Ok(Truncated { value, truncated_at: (n < max_n).then_some(n + 1) }),
            Err(Error::BudgetExceeded { radius, .. }) if n > 0 => {
                n = (n - 1).min(radius.saturating_sub(1 + extra));
            }
            Err(e) => return Err(e),
        }
    }
}

pub fn growth_with_truncation(cfg: &RunConfig, budget: Budget) -> Result<Truncated<GrowthCounts>> {
    let extra = if cfg.family == Family::DihedralInf { cfg.slack } else { 0 };
    with_truncation(cfg.max_n, extra, |n| growth_counts(cfg, n, budget))
}

pub fn growth_table(counts: &GrowthCounts) -> Table {
    let ints = |s: &crate::sequences::CountSequence| s.values.iter().map(|v| v.to_string()).collect();
    let decimals =
        |r: crate::sequences::RatioSequence| r.values.iter().map(|v| decimal(v, DIGITS)).collect::<Vec<_>>();
    let mut t = Table::default();
    t.column("n", (0..counts.len()).map(|n| n.to_string()).collect());
    t.column("ball", ints(&counts.ball));
    t.column("sphere", ints(&counts.sphere));
    t.column("conj_ball", ints(&counts.conj_ball));
    t.column("conj_sphere", ints(&counts.conj_sphere));
    t.column("ratio", decimals(counts.conjugacy_ratio()));
    t.column("n_sph_ratio", decimals(counts.scaled_spherical_ratio()));
    t
}

pub fn render(cfg: &RunConfig, result: &Truncated<GrowthCounts>, format: Format) -> String {
    let mut t = growth_table(&result.value);
    if format == Format::Json {
        t.meta("family", vec![super::table::json_string(&cfg.describe())]);
    }
    if let Some(r) = result.truncated_at {
        t.meta("truncated", vec![r.to_string()]);
    }
    t.render(format)
}
