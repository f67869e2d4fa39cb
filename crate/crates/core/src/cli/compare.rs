use num_rational::BigRational;
use num_traits::Signed;

use super::config::{Family, RunConfig};
use super::growth::{with_truncation, Truncated, DIGITS};
use super::table::{json_string, Table};
use super::Format;
use crate::budget::Budget;
use crate::cayley_oracle::{generating_set_comparison, FreeAbelian, GeneratingSetComparison, Group, InfiniteDihedral};
use crate::free_group::FreeGroup;
use crate::sequences::decimal;
use crate::{Error, Result};

/// Names of the two generating sets for a family.
pub fn generating_sets(family: Family) -> Option<(&'static str, &'static str)> {
    match family {
        Family::DihedralInf => Some(("a,b", "a,ab")),
        Family::FreeAbelian => Some(("e_i", "2e_i,3e_i")),
        Family::Free => Some(("a_i", "a_i,a_1a_2")),
        _ => None,
    }
}

pub fn run(cfg: &RunConfig, budget: Budget) -> Result<Truncated<GeneratingSetComparison>> {
    let compute = |n: usize| match cfg.family {
        Family::DihedralInf => {
            let g = InfiniteDihedral;
            generating_set_comparison(&g, &g.generators(), &InfiniteDihedral::alternative_generators(), n, cfg.slack, cfg.window, budget)
        }
        Family::FreeAbelian => {
            let g = FreeAbelian::new(cfg.dim);
            generating_set_comparison(&g, &g.generators(), &g.alternative_generators(), n, cfg.slack, cfg.window, budget)
        }
        Family::Free => {
            let g = FreeGroup::new(cfg.rank);
            generating_set_comparison(&g, &g.generators(), &g.alternative_generators(), n, cfg.slack, cfg.window, budget)
        }
        other => Err(Error::Config(format!(
            "compare supports dihedral-inf, free and free-abelian, not {}",
            other.name()
        ))),
    };
    with_truncation(cfg.max_n, cfg.slack, compute)
}

fn window_max(values: &[BigRational], window: usize) -> Option<&BigRational> {
    values[values.len().saturating_sub(window)..].iter().max()
}

fn stability(flag: Option<bool>) -> String {
    flag.map_or("null".into(), |b| b.to_string())
}

pub fn render(cfg: &RunConfig, result: &Truncated<GeneratingSetComparison>, format: Format) -> String {
    let c = &result.value;
    let diff: Vec<BigRational> = c.first.values.iter().zip(&c.second.values).map(|(a, b)| (a - b).abs()).collect();
    let cells = |v: &[BigRational]| v.iter().map(|r| decimal(r, DIGITS)).collect::<Vec<_>>();
    let mut t = Table::default();
    t.column("n", (0..diff.len()).map(|n| n.to_string()).collect());
    t.column("ratio_first", cells(&c.first.values));
    t.column("ratio_second", cells(&c.second.values));
    t.column("difference", cells(&diff));
    if format == Format::Json {
        let (first, second) = generating_sets(cfg.family).expect("supported");
        t.meta("generating_sets", vec![json_string(first), json_string(second)]);
    }
    let maxima = [&c.first.values, &c.second.values]
        .map(|v| window_max(v, cfg.window).map_or("null".into(), |r| decimal(r, DIGITS)));
    t.meta("window_max", maxima.to_vec());
    t.meta("stable", vec![stability(c.first_stable), stability(c.second_stable)]);
    if let Some(r) = result.truncated_at {
        t.meta("truncated", vec![r.to_string()]);
    }
    t.render(format)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_sets_agree_at_forty() {
        let cfg = RunConfig::new(Family::DihedralInf, 40);
        let result = run(&cfg, Budget::default()).unwrap();
        assert_eq!(result.truncated_at, None);
        let d = result.value.differences();
        assert!(*d.last().unwrap() < 0.05);
        let out = render(&cfg, &result, Format::Csv);
        assert!(out.starts_with("n,ratio_first,ratio_second,difference\n"));
        assert!(out.contains("\n#stable,true,true\n"));
    }

    #[test]
    fn integers_have_zero_difference() {
        let cfg = RunConfig { dim: 1, ..RunConfig::new(Family::FreeAbelian, 12) };
        let result = run(&cfg, Budget::default()).unwrap();
        assert!(result.value.differences().iter().all(|&d| d == 0.0));
    }

    #[test]
    fn unsupported_family_is_a_config_error() {
        let cfg = RunConfig::new(Family::Heisenberg, 4);
        assert!(matches!(run(&cfg, Budget::default()), Err(Error::Config(_))));
    }
}
