use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::{Raag, RaagConjKey};
use crate::budget::Budget;
use crate::cayley_oracle::ball_enumerate;
use crate::sequences::GrowthCounts;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaagCounts {
    pub growth: GrowthCounts,
    /// Vertex set `U` to the number of classes meeting the ball whose
    /// cyclically reduced representatives have support exactly `U`.
    pub support_decomposition: BTreeMap<u64, u64>,
}

impl Raag {
    /// Exact growth and conjugacy growth up to `max_radius`.
    pub fn counts(&self, max_radius: usize, budget: Budget) -> Result<RaagCounts> {
        let ball = ball_enumerate(self, max_radius, budget)?;
        let keys: Vec<RaagConjKey> = ball.elements.par_iter().map(|w| self.conj_key(w)).collect();
        let mut min_length: HashMap<RaagConjKey, usize> = HashMap::new();
        for (key, &len) in keys.into_iter().zip(&ball.lengths) {
            let entry = min_length.entry(key).or_insert(len);
            *entry = (*entry).min(len);
        }
        let mut conj_sphere = vec![0u64; max_radius + 1];
        let mut support_decomposition = BTreeMap::new();
        for (key, &len) in &min_length {
            conj_sphere[len] += 1;
            *support_decomposition.entry(key.support()).or_insert(0) += 1;
        }
        Ok(RaagCounts {
            growth: GrowthCounts::from_spheres(&ball.sphere_sizes, &conj_sphere),
            support_decomposition,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::FreeGroup;
    use crate::raag::GraphSpec;
    use crate::sequences::convolve;
    use num_bigint::BigUint;
    use num_traits::One;

    #[test]
    fn free_abelian_ratio_is_one() {
        for n in [2, 3] {
            let c = Raag::new(GraphSpec::complete(n)).counts(7, Budget::default()).unwrap();
            assert_eq!(c.growth.conj_ball.values, c.growth.ball.values);
            assert!(c.growth.conjugacy_ratio().values.iter().all(|r| r.is_one()));
        }
    }

    #[test]
    fn empty_graph_matches_free_group() {
        let raag = Raag::new(GraphSpec::empty(2)).counts(10, Budget::default()).unwrap();
        let free = FreeGroup::new(2).counts(10, Budget::default()).unwrap();
        assert_eq!(raag.growth, free);
    }

    #[test]
    fn square_is_product_of_free_groups() {
        let c4 = Raag::new(GraphSpec::cycle(4)).counts(8, Budget::default()).unwrap();
        let f2 = FreeGroup::new(2);
        let expected = convolve(&f2.ball_counts(8), &f2.sphere_counts(8)).unwrap();
        assert_eq!(c4.growth.ball.values, expected.values);
    }

    #[test]
    fn path_ratio_strictly_decreases() {
        let c = Raag::new(GraphSpec::path(3)).counts(10, Budget::default()).unwrap();
        let r = c.growth.conjugacy_ratio().values;
        for n in 3..10 {
            assert!(r[n + 1] < r[n], "n = {n}");
        }
    }

    #[test]
    fn support_decomposition_sums_to_class_count() {
        let g = Raag::new(GraphSpec::path(3));
        let c = g.counts(6, Budget::default()).unwrap();
        let total: u64 = c.support_decomposition.values().sum();
        assert_eq!(BigUint::from(total), c.growth.conj_ball.values[6]);
        // only the trivial class has empty support
        assert_eq!(c.support_decomposition[&0], 1);
        // in Z each non-trivial class a^k with |k| <= 6 is its own class
        assert_eq!(c.support_decomposition[&0b001], 12);
    }

    #[test]
    fn budget_is_enforced() {
        let err = Raag::new(GraphSpec::empty(3)).counts(12, Budget::new(1000)).unwrap_err();
        assert!(matches!(err, crate::Error::BudgetExceeded { .. }));
    }
}
