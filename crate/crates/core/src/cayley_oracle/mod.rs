//! Brute-force Cayley-graph engine.
//!
//! Balls are enumerated by breadth-first search and conjugacy classes are
//! discovered by closing a ball under conjugation by generators. This is the
//! independent check for every family-specific counting routine. It is only
//! trusted where a conjugator-length bound is known, or where the counts are
//! stable under an increase of the slack window and agree with an algebraic
//! class key.

mod dihedral;
mod free_abelian;
mod heisenberg;
mod union_find;

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

pub use dihedral::{DihedralElement, InfiniteDihedral};
pub use free_abelian::FreeAbelian;
pub use heisenberg::{Heisenberg, HeisenbergElement, HeisenbergKey};
pub use union_find::UnionFind;

use crate::budget::Budget;
use crate::sequences::{ratio, windowed_estimate, CountSequence, GrowthCounts, RatioSequence, SequenceKind, WindowEstimate};
use crate::{Error, Result};

/// A group presented by canonical elements and a finite generating set.
///
/// `Element` equality must coincide with equality in the group.
pub trait Group: Sync {
    type Element: Clone + Eq + Hash + Ord + Debug + Send + Sync;

    fn identity(&self) -> Self::Element;

    /// A generating set closed under inversion.
    fn generators(&self) -> Vec<Self::Element>;

    fn multiply(&self, x: &Self::Element, y: &Self::Element) -> Self::Element;

    fn inverse(&self, x: &Self::Element) -> Self::Element;

    fn conjugate(&self, x: &Self::Element, by: &Self::Element) -> Self::Element {
        self.multiply(&self.multiply(&self.inverse(by), x), by)
    }
}

/// A group with its generating set replaced.
pub struct WithGenerators<'a, G: Group> {
    group: &'a G,
    generators: Vec<G::Element>,
}

impl<'a, G: Group> WithGenerators<'a, G> {
    /// Symmetrizes `generators`, dropping duplicates and the identity.
    pub fn new(group: &'a G, generators: &[G::Element]) -> Self {
        let id = group.identity();
        let mut gens: Vec<G::Element> = Vec::new();
        for g in generators {
            for h in [g.clone(), group.inverse(g)] {
                if h != id && !gens.contains(&h) {
                    gens.push(h);
                }
            }
        }
        Self { group, generators: gens }
    }
}

impl<G: Group> Group for WithGenerators<'_, G> {
    type Element = G::Element;

    fn identity(&self) -> Self::Element {
        self.group.identity()
    }

    fn generators(&self) -> Vec<Self::Element> {
        self.generators.clone()
    }

    fn multiply(&self, x: &Self::Element, y: &Self::Element) -> Self::Element {
        self.group.multiply(x, y)
    }

    fn inverse(&self, x: &Self::Element) -> Self::Element {
        self.group.inverse(x)
    }
}

/// All elements of `B(N)` in breadth-first order, with their word lengths.
#[derive(Debug, Clone)]
pub struct Ball<E> {
    pub radius: usize,
    pub elements: Vec<E>,
    pub lengths: Vec<usize>,
    pub index: HashMap<E, usize>,
    /// `sphere_sizes[n] = |S(n)|`.
    pub sphere_sizes: Vec<u64>,
}

impl<E: Clone + Eq + Hash> Ball<E> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn length_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).map(|&i| self.lengths[i])
    }

    /// Number of elements of length at most `n`; they form a prefix.
    pub fn prefix_len(&self, n: usize) -> usize {
        self.sphere_sizes.iter().take(n + 1).sum::<u64>() as usize
    }

    pub fn ball_counts(&self) -> CountSequence {
        self.sphere_counts().cumulative()
    }

    pub fn sphere_counts(&self) -> CountSequence {
        CountSequence::from_u64s(SequenceKind::Sphere, &self.sphere_sizes)
    }
}

/// Breadth-first enumeration of `B(max_radius)`.
pub fn ball_enumerate<G: Group>(g: &G, max_radius: usize, budget: Budget) -> Result<Ball<G::Element>> {
    let gens = g.generators();
    let id = g.identity();
    let mut elements = vec![id.clone()];
    let mut lengths = vec![0];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut sphere_sizes = vec![1u64];
    let mut start = 0;
    for radius in 1..=max_radius {
        let end = elements.len();
        for i in start..end {
            for s in &gens {
                let next = g.multiply(&elements[i], s);
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                    lengths.push(radius);
                }
            }
            budget.check(elements.len() as u64, radius)?;
        }
        sphere_sizes.push((elements.len() - end) as u64);
        start = end;
    }
    Ok(Ball { radius: max_radius, elements, lengths, index, sphere_sizes })
}

/// Conjugacy classes meeting `B(N)`, discovered inside `B(N + slack)`.
#[derive(Debug, Clone)]
pub struct ConjugacyTable<E> {
    pub max_radius: usize,
    pub slack: usize,
    /// `B(N + slack)`; the first `prefix_len(N)` elements form `B(N)`.
    pub ball: Ball<E>,
    /// Class label of each element of `B(N)`, numbered by first appearance.
    pub class_of: Vec<usize>,
    /// Minimal word length of each class.
    pub min_length: Vec<usize>,
    pub conj_ball: CountSequence,
    pub conj_sphere: CountSequence,
    /// Whether the counts at `slack - 1` already equal those at `slack`;
    /// `None` when `slack == 0`.
    pub stable: Option<bool>,
}

impl<E: Clone + Eq + Hash> ConjugacyTable<E> {
    pub fn class_count(&self) -> usize {
        self.min_length.len()
    }

    pub fn require_stable(&self) -> Result<&Self> {
        match self.stable {
            Some(true) => Ok(self),
            _ => Err(Error::Unstable { slack: self.slack }),
        }
    }

    pub fn growth_counts(&self) -> GrowthCounts {
        let n = self.max_radius + 1;
        let sphere = CountSequence::from_u64s(SequenceKind::Sphere, &self.ball.sphere_sizes[..n]);
        GrowthCounts {
            ball: sphere.cumulative(),
            sphere,
            conj_ball: self.conj_ball.clone(),
            conj_sphere: self.conj_sphere.clone(),
        }
    }
}

struct Closure {
    class_of: Vec<usize>,
    min_length: Vec<usize>,
    conj_sphere: Vec<u64>,
}

/// Union-find closure of the first `limit` ball elements under conjugation
/// by generators, read off on `B(max_radius)`.
fn close_under_conjugation<G: Group>(
    g: &G,
    ball: &Ball<G::Element>,
    limit: usize,
    max_radius: usize,
) -> Closure {
    let gens = g.generators();
    let mut uf = UnionFind::new(limit);
    for i in 0..limit {
        for s in &gens {
            let v = g.conjugate(&ball.elements[i], s);
            if let Some(&j) = ball.index.get(&v) {
                if j < limit {
                    uf.union(i, j);
                }
            }
        }
    }
    let inner = ball.prefix_len(max_radius);
    let mut label: HashMap<usize, usize> = HashMap::new();
    let mut class_of = Vec::with_capacity(inner);
    let mut min_length = Vec::new();
    for i in 0..inner {
        let root = uf.find(i);
        let next = label.len();
        let c = *label.entry(root).or_insert(next);
        if c == min_length.len() {
            min_length.push(ball.lengths[i]);
        }
        class_of.push(c);
    }
    let mut conj_sphere = vec![0u64; max_radius + 1];
    for &l in &min_length {
        conj_sphere[l] += 1;
    }
    Closure { class_of, min_length, conj_sphere }
}

/// Conjugacy classes meeting `B(max_radius)`, with conjugation closure
/// computed inside `B(max_radius + slack)`.
pub fn conjugacy_classes<G: Group>(
    g: &G,
    max_radius: usize,
    slack: usize,
    budget: Budget,
) -> Result<ConjugacyTable<G::Element>> {
    let ball = ball_enumerate(g, max_radius + slack, budget)?;
    let full = close_under_conjugation(g, &ball, ball.len(), max_radius);
    let stable = (slack > 0).then(|| {
        let smaller = close_under_conjugation(g, &ball, ball.prefix_len(max_radius + slack - 1), max_radius);
        smaller.conj_sphere == full.conj_sphere
    });
    let conj_sphere = CountSequence::from_u64s(SequenceKind::ConjugacySphere, &full.conj_sphere);
    Ok(ConjugacyTable {
        max_radius,
        slack,
        conj_ball: conj_sphere.cumulative(),
        conj_sphere,
        ball,
        class_of: full.class_of,
        min_length: full.min_length,
        stable,
    })
}

/// Conjugacy counts from an algebraic class key evaluated on a ball: a class
/// meets `B(n)` iff some element of `B(n)` carries its key.
pub fn counts_from_key<E, K, F>(ball: &Ball<E>, key: F) -> GrowthCounts
where
    E: Clone + Eq + Hash,
    K: Eq + Hash,
    F: Fn(&E) -> K,
{
    let mut min_length: HashMap<K, usize> = HashMap::new();
    for (e, &l) in ball.elements.iter().zip(&ball.lengths) {
        let entry = min_length.entry(key(e)).or_insert(l);
        *entry = (*entry).min(l);
    }
    let mut conj_sphere = vec![0u64; ball.radius + 1];
    for &l in min_length.values() {
        conj_sphere[l] += 1;
    }
    GrowthCounts::from_spheres(&ball.sphere_sizes, &conj_sphere)
}

/// Checks that a class key induces exactly the oracle's partition of `B(N)`.
///
/// Returns the first offending pair of ball indices on mismatch.
pub fn key_matches_oracle<E, K, F>(table: &ConjugacyTable<E>, key: F) -> std::result::Result<(), (usize, usize)>
where
    E: Clone + Eq + Hash,
    K: Eq + Hash,
    F: Fn(&E) -> K,
{
    let mut by_key: HashMap<K, usize> = HashMap::new();
    let mut by_class: HashMap<usize, usize> = HashMap::new();
    for (i, &c) in table.class_of.iter().enumerate() {
        let k = key(&table.ball.elements[i]);
        let first_k = *by_key.entry(k).or_insert(i);
        let first_c = *by_class.entry(c).or_insert(i);
        if first_k != first_c {
            return Err((first_k.min(first_c), i));
        }
    }
    Ok(())
}

/// Conjugacy ratios of one group under two generating sets.
#[derive(Debug, Clone)]
pub struct GeneratingSetComparison {
    pub first: RatioSequence,
    pub second: RatioSequence,
    pub first_stable: Option<bool>,
    pub second_stable: Option<bool>,
    pub first_estimate: Option<WindowEstimate>,
    pub second_estimate: Option<WindowEstimate>,
}

impl GeneratingSetComparison {
    /// `|first[n] - second[n]|` as floating point.
    pub fn differences(&self) -> Vec<f64> {
        self.first.to_f64().iter().zip(self.second.to_f64()).map(|(a, b)| (a - b).abs()).collect()
    }
}

/// Radius within which each generator of one set must be reachable from the other.
pub const GENERATION_RADIUS: usize = 8;

fn check_generates<G: Group>(g: &G, from: &[G::Element], target: &[G::Element], budget: Budget) -> Result<()> {
    let tg = WithGenerators::new(g, target);
    let ball = ball_enumerate(&tg, GENERATION_RADIUS, budget)?;
    match from.iter().find(|x| !ball.index.contains_key(*x)) {
        Some(x) => Err(Error::Generation(format!(
            "{x:?} is not within distance {GENERATION_RADIUS} of the identity under {target:?}"
        ))),
        None => Ok(()),
    }
}

pub fn generating_set_comparison<G: Group>(
    g: &G,
    first: &[G::Element],
    second: &[G::Element],
    max_radius: usize,
    slack: usize,
    window: usize,
    budget: Budget,
) -> Result<GeneratingSetComparison> {
    check_generates(g, first, second, budget)?;
    check_generates(g, second, first, budget)?;
    let run = |gens: &[G::Element]| -> Result<(RatioSequence, Option<bool>)> {
        let wg = WithGenerators::new(g, gens);
        let table = conjugacy_classes(&wg, max_radius, slack, budget)?;
        let counts = table.growth_counts();
        Ok((ratio(&counts.conj_ball, &counts.ball)?, table.stable))
    };
    let (first, first_stable) = run(first)?;
    let (second, second_stable) = run(second)?;
    Ok(GeneratingSetComparison {
        first_estimate: windowed_estimate(&first, window),
        second_estimate: windowed_estimate(&second, window),
        first,
        second,
        first_stable,
        second_stable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_have_singleton_classes() {
        let z = FreeAbelian::new(1);
        let table = conjugacy_classes(&z, 10, 2, Budget::default()).unwrap();
        let counts = table.growth_counts();
        assert_eq!(counts.ball.to_f64(), (0..=10).map(|n| (2 * n + 1) as f64).collect::<Vec<_>>());
        assert_eq!(counts.conj_ball, CountSequence { kind: SequenceKind::ConjugacyBall, values: counts.ball.values.clone() });
        assert_eq!(table.stable, Some(true));
    }

    #[test]
    fn with_generators_symmetrizes() {
        let z = FreeAbelian::new(1);
        let wg = WithGenerators::new(&z, &[vec![2], vec![3], vec![-2], vec![0]]);
        assert_eq!(wg.generators(), vec![vec![2], vec![-2], vec![3], vec![-3]]);
    }

    #[test]
    fn budget_is_enforced() {
        let z2 = FreeAbelian::new(2);
        assert!(matches!(
            ball_enumerate(&z2, 50, Budget::new(100)),
            Err(Error::BudgetExceeded { limit: 100, .. })
        ));
    }

    #[test]
    fn prefix_len_tracks_radius() {
        let z = FreeAbelian::new(1);
        let ball = ball_enumerate(&z, 5, Budget::default()).unwrap();
        assert_eq!(ball.prefix_len(0), 1);
        assert_eq!(ball.prefix_len(3), 7);
        assert_eq!(ball.length_of(&vec![-4]), Some(4));
    }

    #[test]
    fn comparison_rejects_non_generating_set() {
        let z = FreeAbelian::new(1);
        let err = generating_set_comparison(&z, &[vec![1]], &[vec![2]], 5, 1, 3, Budget::default());
        assert!(matches!(err, Err(Error::Generation(_))));
    }

    #[test]
    fn integer_generating_sets_both_give_ratio_one() {
        let z = FreeAbelian::new(1);
        let cmp = generating_set_comparison(&z, &[vec![1]], &[vec![2], vec![3]], 12, 1, 5, Budget::default()).unwrap();
        assert!(cmp.first.to_f64().iter().all(|&r| r == 1.0));
        assert!(cmp.second.to_f64().iter().all(|&r| r == 1.0));
        assert!(cmp.differences().iter().all(|&d| d == 0.0));
    }
}
