use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::config::{Family, RunConfig};
use super::Format;
use crate::budget::Budget;
use crate::cayley_oracle::{
    ball_enumerate, conjugacy_classes, counts_from_key, key_matches_oracle, ConjugacyTable, FreeAbelian,
    Heisenberg, InfiniteDihedral,
};
use crate::cyclic_language::{cycrep_counts, divisors, primitive_counts};
use crate::free_group::FreeGroup;
use crate::lamplighter::{LampElement, Lamplighter};
use crate::raag::Raag;
use crate::sequences::GrowthCounts;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub radius: usize,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub family: String,
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut s = String::from("status,check,radius,detail\n");
                for c in &self.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    let _ = writeln!(s, "{status},{},{},{}", c.name, c.radius, csv_field(&c.detail));
                }
                s
            }
            Format::Json => {
                let checks: Vec<serde_json::Value> = self
                    .checks
                    .iter()
                    .map(|c| {
                        serde_json::json!({
                            "check": c.name,
                            "radius": c.radius,
                            "passed": c.passed,
                            "detail": c.detail,
                        })
                    })
                    .collect();
                let report = serde_json::json!({
                    "family": self.family,
                    "passed": self.passed(),
                    "checks": checks,
                });
                serde_json::to_string_pretty(&report).expect("serializable") + "\n"
            }
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct Checks {
    results: Vec<CheckResult>,
}

impl Checks {
    fn run(&mut self, name: &'static str, radius: usize, check: impl FnOnce() -> Result<String>) {
        let (passed, detail) = match check() {
            Ok(detail) => (true, detail),
            Err(e) => (false, e.to_string()),
        };
        self.results.push(CheckResult { name, radius, passed, detail });
    }
}

fn fail(msg: String) -> Error {
    Error::Disagreement(msg)
}

fn stable<E: Clone + Eq + std::hash::Hash>(table: &ConjugacyTable<E>) -> Result<()> {
    table.require_stable().map(|_| ())
}

fn same_counts(module: &GrowthCounts, oracle: &GrowthCounts) -> Result<String> {
    if module == oracle {
        Ok(format!("{} classes in B({})", oracle.conj_ball.values.last().expect("nonempty"), oracle.len() - 1))
    } else {
        let n = (0..module.len().min(oracle.len()))
            .find(|&n| {
                module.sphere.values[n] != oracle.sphere.values[n]
                    || module.conj_sphere.values[n] != oracle.conj_sphere.values[n]
            })
            .unwrap_or(0);
        Err(fail(format!(
            "at n = {n}: module |S| = {}, C^s = {}; oracle |S| = {}, C^s = {}",
            module.sphere.values[n], module.conj_sphere.values[n], oracle.sphere.values[n], oracle.conj_sphere.values[n]
        )))
    }
}

fn key_agrees<E, K>(table: &ConjugacyTable<E>, key: impl Fn(&E) -> K) -> Result<String>
where
    E: Clone + Eq + std::hash::Hash + std::fmt::Debug,
    K: Eq + std::hash::Hash,
{
    stable(table)?;
    key_matches_oracle(table, key).map_err(|(i, j)| {
        fail(format!("key and oracle disagree on {:?} and {:?}", table.ball.elements[i], table.ball.elements[j]))
    })?;
    Ok(format!("{} elements, {} classes, slack {}", table.class_of.len(), table.class_count(), table.slack))
}

/// Lyndon-word relations between `a`, its primitive counts and its
/// rotation-class counts, for `a(n) = k^n`.
fn necklace_identities(max_n: usize) -> Result<String> {
    for k in [2u32, 3] {
        let a: Vec<BigUint> = (1..=max_n as u32).map(|n| BigUint::from(k).pow(n)).collect();
        let p = primitive_counts(&a)?;
        let c = cycrep_counts(&a)?;
        for n in 1..=max_n as u64 {
            let ds = divisors(n);
            let sum_p: BigUint = ds.iter().map(|&d| &p[d as usize - 1]).sum();
            let lyndon: BigUint = ds.iter().map(|&d| &p[d as usize - 1] / BigUint::from(d)).sum();
            if sum_p != a[n as usize - 1] || lyndon != c[n as usize - 1] {
                return Err(fail(format!("a(n) = {k}^n fails at n = {n}")));
            }
        }
    }
    Ok("a(n) = 2^n, 3^n".into())
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * BigUint::from(n - i) / BigUint::from(i + 1))
}

pub fn run(cfg: &RunConfig, budget: Budget) -> ValidationReport {
    let n = cfg.max_n;
    let slack = cfg.slack;
    let mut checks = Checks { results: Vec::new() };
    checks.run("necklace-identities", 30, || necklace_identities(30));
    match cfg.family {
        Family::Free => {
            let g = FreeGroup::new(cfg.rank);
            checks.run("free-conjugacy-two-methods", n, || {
                let (ball, _) = g.conjugacy_counts(n, budget)?;
                Ok(format!("C({n}) = {}", ball.values[n]))
            });
            checks.run("free-vs-oracle", n, || {
                let table = conjugacy_classes(&g, n, slack, budget)?;
                stable(&table)?;
                same_counts(&g.counts(n, budget)?, &table.growth_counts())
            });
        }
        Family::Raag => {
            let graph = cfg.graph.clone().expect("checked");
            let g = Raag::new(graph.clone());
            let table = conjugacy_classes(&g, n, slack, budget);
            checks.run("raag-key-vs-oracle", n, || key_agrees(table.as_ref().map_err(Clone::clone)?, |w| g.conj_key(w)));
            checks.run("raag-counts-vs-oracle", n, || {
                let table = table.as_ref().map_err(Clone::clone)?;
                stable(table)?;
                same_counts(&g.counts(n, budget)?.growth, &table.growth_counts())
            });
            if graph.all_vertices() != 0 && (0..graph.vertex_count()).all(|v| graph.neighbours(v) == 0) {
                checks.run("raag-vs-free-group", n, || {
                    same_counts(&g.counts(n, budget)?.growth, &FreeGroup::new(graph.vertex_count()).counts(n, budget)?)
                });
            }
            if graph.is_complete() {
                checks.run("raag-abelian-ratio-one", n, || {
                    let c = g.counts(n, budget)?.growth;
                    if c.conj_ball.values == c.ball.values {
                        Ok("C(n) = |B(n)|".into())
                    } else {
                        Err(fail("conjugacy ball differs from ball".into()))
                    }
                });
            }
        }
        Family::Lamplighter => {
            checks.run("lamplighter-word-length-vs-bfs", n, || {
                let ball = ball_enumerate(&Lamplighter, n, budget)?;
                match ball.elements.iter().zip(&ball.lengths).find(|(e, &l)| e.word_length() as usize != l) {
                    Some((e, l)) => Err(fail(format!("{e:?}: formula {} vs distance {l}", e.word_length()))),
                    None => Ok(format!("{} elements", ball.len())),
                }
            });
            let table = conjugacy_classes(&Lamplighter, n, slack, budget);
            checks.run("lamplighter-key-vs-oracle", n, || {
                key_agrees(table.as_ref().map_err(Clone::clone)?, LampElement::conj_key)
            });
            checks.run("lamplighter-counts-vs-oracle", n, || {
                let table = table.as_ref().map_err(Clone::clone)?;
                stable(table)?;
                same_counts(&Lamplighter::counts(n, budget)?, &table.growth_counts())
            });
        }
        Family::Heisenberg => {
            let table = conjugacy_classes(&Heisenberg, n, slack, budget);
            checks.run("heisenberg-key-vs-oracle", n, || key_agrees(table.as_ref().map_err(Clone::clone)?, Heisenberg::conj_key));
            checks.run("heisenberg-counts-vs-oracle", n, || {
                let table = table.as_ref().map_err(Clone::clone)?;
                stable(table)?;
                same_counts(&counts_from_key(&table.ball, Heisenberg::conj_key).truncated(n + 1), &table.growth_counts())
            });
        }
        Family::DihedralInf => {
            checks.run("dihedral-closed-form", n, || {
                let table = conjugacy_classes(&InfiniteDihedral, n, slack, budget)?;
                stable(&table)?;
                let c = table.growth_counts();
                for m in 0..=n {
                    let ball = 2 * m as u64 + 1;
                    let classes = if m == 0 { 1 } else { 3 + m as u64 / 2 };
                    if c.ball.values[m] != BigUint::from(ball) || c.conj_ball.values[m] != BigUint::from(classes) {
                        return Err(fail(format!("n = {m}: |B| = {}, C = {}", c.ball.values[m], c.conj_ball.values[m])));
                    }
                }
                Ok("|B(n)| = 2n + 1, C(n) = 3 + floor(n/2)".into())
            });
        }
        Family::FreeAbelian => {
            let g = FreeAbelian::new(cfg.dim);
            checks.run("free-abelian-ball-closed-form", n, || {
                let ball = ball_enumerate(&g, n, budget)?;
                let counts = ball.ball_counts();
                for m in 0..=n {
                    let expected: BigUint = (0..=cfg.dim.min(m))
                        .map(|k| (BigUint::one() << k) * binomial(cfg.dim, k) * binomial(m, k))
                        .sum();
                    if counts.values[m] != expected {
                        return Err(fail(format!("n = {m}: {} vs {expected}", counts.values[m])));
                    }
                }
                Ok(format!("|B({n})| = {}", counts.values[n]))
            });
            checks.run("free-abelian-singleton-classes", n, || {
                let table = conjugacy_classes(&g, n, slack, budget)?;
                let c = table.growth_counts();
                match (0..=n).find(|&m| c.conj_ball.values[m] != c.ball.values[m]) {
                    Some(m) => Err(fail(format!("n = {m}: C = {} vs |B| = {}", c.conj_ball.values[m], c.ball.values[m]))),
                    None if c.ball.values.iter().all(|v| !v.is_zero()) => Ok("C(n) = |B(n)|".into()),
                    None => Err(fail("empty ball".into())),
                }
            });
        }
    }
    ValidationReport { family: cfg.describe(), checks: checks.results }
}
