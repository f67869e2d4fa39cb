//! The lamplighter group `C2 ≀ Z` with generators `t^±1` (move the cursor)
//! and `a` (toggle the lamp under the cursor).

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::budget::Budget;
use crate::cayley_oracle::Group;
use crate::cyclic_language::least_rotation_index;
use crate::sequences::GrowthCounts;
use crate::Result;

/// Lit lamps and cursor position.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LampElement {
    pub lamps: BTreeSet<i64>,
    pub cursor: i64,
}

impl LampElement {
    pub fn new(lamps: impl IntoIterator<Item = i64>, cursor: i64) -> Self {
        Self { lamps: lamps.into_iter().collect(), cursor }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// Group law: `(η, m)(θ, n) = (η + θ shifted by m, m + n)` over `C2`.
    pub fn multiply(&self, other: &Self) -> Self {
        let shifted: BTreeSet<i64> = other.lamps.iter().map(|i| i + self.cursor).collect();
        Self {
            lamps: self.lamps.symmetric_difference(&shifted).copied().collect(),
            cursor: self.cursor + other.cursor,
        }
    }

    pub fn invert(&self) -> Self {
        Self { lamps: self.lamps.iter().map(|i| i - self.cursor).collect(), cursor: -self.cursor }
    }

    /// Word length: every lit lamp costs one toggle, and the cursor travels
    /// from 0 to `m` covering `[p, q]`, which costs `2(q - p) - |m|`.
    pub fn word_length(&self) -> u64 {
        let (p, q) = self.travel_interval();
        self.lamps.len() as u64 + (2 * (q - p) - self.cursor.abs()) as u64
    }

    /// `[min(lamps ∪ {0, m}), max(lamps ∪ {0, m})]`.
    pub fn travel_interval(&self) -> (i64, i64) {
        let lo = self.cursor.min(0);
        let hi = self.cursor.max(0);
        let p = self.lamps.first().map_or(lo, |&x| x.min(lo));
        let q = self.lamps.last().map_or(hi, |&x| x.max(hi));
        (p, q)
    }

    pub fn conj_key(&self) -> LampConjKey {
        if self.cursor == 0 {
            let shift = self.lamps.first().copied().unwrap_or(0);
            LampConjKey::Static(self.lamps.iter().map(|i| i - shift).collect())
        } else {
            let modulus = self.cursor.unsigned_abs() as usize;
            let mut parities = vec![false; modulus];
            for i in &self.lamps {
                let r = i.rem_euclid(modulus as i64) as usize;
                parities[r] = !parities[r];
            }
            let k = least_rotation_index(&parities);
            parities.rotate_left(k);
            LampConjKey::Moving { cursor: self.cursor, parities }
        }
    }
}

/// Conjugacy invariant of a lamplighter element.
///
/// With the cursor fixed, conjugation only translates the configuration.
/// With cursor `m ≠ 0`, conjugating by a lamp toggles two lamps `m` apart and
/// conjugating by `t` rotates the residue classes mod `|m|`, so the class is
/// determined by the lamp parity of each residue class up to rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LampConjKey {
    Static(Vec<i64>),
    Moving { cursor: i64, parities: Vec<bool> },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Lamplighter;

impl Group for Lamplighter {
    type Element = LampElement;

    fn identity(&self) -> LampElement {
        LampElement::identity()
    }

    fn generators(&self) -> Vec<LampElement> {
        vec![LampElement::new([], 1), LampElement::new([], -1), LampElement::new([0], 0)]
    }

    fn multiply(&self, x: &LampElement, y: &LampElement) -> LampElement {
        x.multiply(y)
    }

    fn inverse(&self, x: &LampElement) -> LampElement {
        x.invert()
    }
}

impl Lamplighter {
    /// Travel shapes `(cursor, p, q, base cost)` of elements of length `≤ n`,
    /// together with the lamps forced on at the interval ends.
    fn shapes(n: i64, m: i64) -> impl Iterator<Item = Shape> {
        (-n..=m.min(0)).flat_map(move |p| {
            (m.max(0)..=n).filter_map(move |q| {
                let base = 2 * (q - p) - m.abs();
                let mut forced = Vec::new();
                if p < m.min(0) {
                    forced.push(p);
                }
                if q > m.max(0) {
                    forced.push(q);
                }
                let spare = n - base - forced.len() as i64;
                (base <= n && spare >= 0).then_some(Shape { p, q, base, forced, spare: spare as usize })
            })
        })
    }

    /// `|B(max_radius)|`, counted without materializing elements.
    pub fn ball_size(max_radius: usize) -> u128 {
        let n = max_radius as i64;
        (-n..=n)
            .flat_map(|m| Self::shapes(n, m))
            .map(|s| {
                let free = s.free_positions().count() as u128;
                (0..=s.spare as u128).map(|j| binomial(free, j)).sum::<u128>()
            })
            .sum()
    }

    /// Every element of `B(max_radius)` with its word length, cursor by cursor.
    ///
    /// The travel interval `[p, q]` of an element of length `≤ n` lies in
    /// `[-n, n]`; lamps lie inside it and its endpoints beyond `0` and `m`
    /// must be lit.
    pub fn enumerate(max_radius: usize, budget: Budget) -> Result<Vec<(LampElement, usize)>> {
        budget.check(Self::ball_size(max_radius).min(u64::MAX as u128) as u64, max_radius)?;
        let n = max_radius as i64;
        let per_cursor: Vec<Vec<(LampElement, usize)>> = (-n..=n)
            .into_par_iter()
            .map(|m| {
                let mut out = Vec::new();
                for shape in Self::shapes(n, m) {
                    let free: Vec<i64> = shape.free_positions().collect();
                    let mut chosen = shape.forced.clone();
                    extend_subsets(&free, 0, shape.spare, &mut chosen, &mut |lamps| {
                        let len = shape.base as usize + lamps.len();
                        out.push((LampElement::new(lamps.iter().copied(), m), len));
                    });
                }
                out
            })
            .collect();
        Ok(per_cursor.into_iter().flatten().collect())
    }

    /// `|B|, |S|, C, C^s` for `n ≤ max_radius`, keyed by [`LampConjKey`] with
    /// the minimal length per key.
    pub fn counts(max_radius: usize, budget: Budget) -> Result<GrowthCounts> {
        let elements = Self::enumerate(max_radius, budget)?;
        let mut sphere = vec![0u64; max_radius + 1];
        let mut min_length: HashMap<LampConjKey, usize> = HashMap::new();
        for (e, len) in &elements {
            sphere[*len] += 1;
            let entry = min_length.entry(e.conj_key()).or_insert(*len);
            *entry = (*entry).min(*len);
        }
        let mut conj_sphere = vec![0u64; max_radius + 1];
        for &l in min_length.values() {
            conj_sphere[l] += 1;
        }
        Ok(GrowthCounts::from_spheres(&sphere, &conj_sphere))
    }
}

struct Shape {
    p: i64,
    q: i64,
    base: i64,
    forced: Vec<i64>,
    spare: usize,
}

impl Shape {
    fn free_positions(&self) -> impl Iterator<Item = i64> + '_ {
        (self.p..=self.q).filter(|i| !self.forced.contains(i))
    }
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Calls `visit` on `chosen` extended by every subset of `free[from..]` with
/// at most `room` elements.
fn extend_subsets(free: &[i64], from: usize, room: usize, chosen: &mut Vec<i64>, visit: &mut impl FnMut(&[i64])) {
    visit(chosen);
    if room == 0 {
        return;
    }
    for i in from..free.len() {
        chosen.push(free[i]);
        extend_subsets(free, i + 1, room - 1, chosen, visit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_oracle::{ball_enumerate, conjugacy_classes, key_matches_oracle};
    use proptest::prelude::*;

    fn element(radius: i64) -> impl Strategy<Value = LampElement> {
        (prop::collection::btree_set(-radius..=radius, 0..6), -radius..=radius)
            .prop_map(|(lamps, cursor)| LampElement { lamps, cursor })
    }

    /// Products of at most `radius` generators, i.e. elements of `B(radius)`.
    fn ball_element(radius: usize) -> impl Strategy<Value = LampElement> {
        prop::collection::vec(0..3usize, 0..=radius).prop_map(|word| {
            let gens = Lamplighter.generators();
            word.iter().fold(LampElement::identity(), |acc, &i| acc.multiply(&gens[i]))
        })
    }

    #[test]
    fn multiplication_examples() {
        let t = LampElement::new([], 1);
        assert_eq!(t.multiply(&LampElement::new([], -1)), LampElement::identity());
        let a = LampElement::new([0], 0);
        assert_eq!(a.multiply(&a), LampElement::identity());
        let at = LampElement::new([0], 1);
        assert_eq!(at.multiply(&at), LampElement::new([0, 1], 2));
    }

    #[test]
    fn word_length_examples() {
        assert_eq!(LampElement::new([], 5).word_length(), 5);
        assert_eq!(LampElement::new([0], 0).word_length(), 1);
        assert_eq!(LampElement::new([-2], 3).word_length(), 8);
    }

    #[test]
    fn word_length_agrees_with_bfs() {
        let ball = ball_enumerate(&Lamplighter, 10, Budget::default()).unwrap();
        for (e, &l) in ball.elements.iter().zip(&ball.lengths) {
            assert_eq!(e.word_length(), l as u64, "{e:?}");
        }
        let enumerated = Lamplighter::enumerate(10, Budget::default()).unwrap();
        assert_eq!(enumerated.len(), ball.len());
        for (e, l) in &enumerated {
            assert_eq!(ball.length_of(e), Some(*l));
        }
    }

    #[test]
    fn ball_size_matches_enumeration() {
        for n in 0..=9 {
            assert_eq!(Lamplighter::ball_size(n), Lamplighter::enumerate(n, Budget::default()).unwrap().len() as u128);
        }
        assert!(Lamplighter::enumerate(30, Budget::default()).is_err());
    }

    #[test]
    fn first_sphere_has_three_elements() {
        let counts = Lamplighter::counts(3, Budget::default()).unwrap();
        assert_eq!(counts.sphere.values[1], 3u32.into());
    }

    #[test]
    fn key_matches_oracle_on_b7() {
        let table = conjugacy_classes(&Lamplighter, 7, 7, Budget::default()).unwrap();
        assert_eq!(table.stable, Some(true));
        key_matches_oracle(&table, LampElement::conj_key).unwrap();
        assert_eq!(table.growth_counts(), Lamplighter::counts(7, Budget::default()).unwrap());
    }

    #[test]
    fn ratio_decreases() {
        let ratios = Lamplighter::counts(14, Budget::default()).unwrap().conjugacy_ratio().values;
        assert!(ratios[4..].windows(2).all(|w| w[1] < w[0]), "{ratios:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn metric_changes_by_one_per_generator(g in element(12)) {
            for s in Lamplighter.generators() {
                let diff = g.multiply(&s).word_length() as i64 - g.word_length() as i64;
                prop_assert_eq!(diff.abs(), 1);
            }
        }

        #[test]
        fn key_is_conjugation_invariant(g in ball_element(8), h in ball_element(8)) {
            let conj = h.invert().multiply(&g).multiply(&h);
            prop_assert_eq!(conj.conj_key(), g.conj_key());
        }

        #[test]
        fn group_axioms(x in element(5), y in element(5), z in element(5)) {
            prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
            prop_assert_eq!(x.multiply(&x.invert()), LampElement::identity());
        }
    }
}
