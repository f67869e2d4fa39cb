//! Free groups `F_k` on their free basis.
//!
//! Conjugacy classes are counted as rotation classes of cyclically reduced
//! words, once by direct enumeration and once through the necklace formula
//! applied to the number of cyclically reduced words. The two must agree.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::budget::Budget;
use crate::cayley_oracle::Group;
use crate::cyclic_language::{cycrep_counts, least_rotation_index, Letter, Word};
use crate::sequences::{CountSequence, GrowthCounts, SequenceKind};
use crate::{Error, Result};

/// A freely reduced word: no letter is adjacent to its inverse.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ReducedWord(Word);

impl ReducedWord {
    /// Freely reduces an arbitrary word.
    pub fn reduce(w: &Word) -> Self {
        let mut out: Vec<Letter> = Vec::with_capacity(w.len());
        for &l in w.letters() {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        ReducedWord(Word::new(out))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::reduce(&Word::parse(s)?))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        let l = self.0.letters();
        l.len() < 2 || l[0] != l[l.len() - 1].inverse()
    }
}

/// The least rotation of the cyclic reduction; equal iff conjugate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeConjKey(pub Word);

/// Strips matching inverse letters from both ends.
pub fn cyclic_reduce(w: &ReducedWord) -> ReducedWord {
    let l = w.0.letters();
    let (mut i, mut j) = (0, l.len());
    while j - i >= 2 && l[i] == l[j - 1].inverse() {
        i += 1;
        j -= 1;
    }
    ReducedWord(Word::new(l[i..j].to_vec()))
}

pub fn conj_key(w: &ReducedWord) -> FreeConjKey {
    FreeConjKey(cyclic_reduce(w).0.least_rotation())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FreeGroup {
    pub rank: usize,
}

impl FreeGroup {
    pub fn new(rank: usize) -> Self {
        assert!(rank >= 1, "free group rank must be positive");
        Self { rank }
    }

    /// `|S(n)| = 2k (2k-1)^(n-1)` for `n ≥ 1`.
    pub fn sphere_size(&self, n: usize) -> BigUint {
        if n == 0 {
            BigUint::one()
        } else {
            let k = self.rank as u64;
            BigUint::from(2 * k) * BigUint::from(2 * k - 1).pow(n as u32 - 1)
        }
    }

    pub fn sphere_counts(&self, max_radius: usize) -> CountSequence {
        CountSequence::from_fn(SequenceKind::Sphere, max_radius + 1, |n| self.sphere_size(n))
    }

    pub fn ball_counts(&self, max_radius: usize) -> CountSequence {
        self.sphere_counts(max_radius).cumulative()
    }

    /// Sphere sizes by explicitly extending reduced words one letter at a time.
    pub fn enumerate_sphere_sizes(&self, max_radius: usize, budget: Budget) -> Result<Vec<u64>> {
        let alphabet = Letter::alphabet(self.rank);
        let mut sizes = vec![1u64];
        let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
        let mut total = 1u64;
        for radius in 1..=max_radius {
            let mut next = Vec::new();
            for w in &frontier {
                for &l in &alphabet {
                    if w.last() != Some(&l.inverse()) {
                        let mut v = w.clone();
                        v.push(l);
                        next.push(v);
                    }
                }
            }
            total += next.len() as u64;
            budget.check(total, radius)?;
            sizes.push(next.len() as u64);
            frontier = next;
        }
        Ok(sizes)
    }

    /// Number of cyclically reduced words of each length `1..=max_len`, by a
    /// transfer-matrix recursion over (first letter, last letter).
    pub fn cyclically_reduced_counts(&self, max_len: usize) -> Vec<BigUint> {
        let m = 2 * self.rank;
        let alphabet = Letter::alphabet(self.rank);
        let mut out = vec![BigUint::zero(); max_len];
        for &first in &alphabet {
            let mut by_last = vec![BigUint::zero(); m];
            by_last[first.code() as usize] = BigUint::one();
            for len in 1..=max_len {
                if len > 1 {
                    let mut next = vec![BigUint::zero(); m];
                    for &y in &alphabet {
                        for &x in &alphabet {
                            if y != x.inverse() {
                                next[y.code() as usize] += &by_last[x.code() as usize];
                            }
                        }
                    }
                    by_last = next;
                }
                for &x in &alphabet {
                    if len == 1 || x != first.inverse() {
                        out[len - 1] += &by_last[x.code() as usize];
                    }
                }
            }
        }
        out
    }

    /// Rotation classes of cyclically reduced words of length exactly `n`,
    /// by backtracking. Returns `(classes, words visited)`.
    fn count_rotation_classes(&self, n: usize) -> (u64, u64) {
        if n == 0 {
            return (1, 1);
        }
        let alphabet = Letter::alphabet(self.rank);
        alphabet
            .par_iter()
            .map(|&first| {
                let mut word = vec![first];
                let mut acc = (0u64, 0u64);
                self.extend_canonical(&mut word, n, &mut acc);
                acc
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    }

    // The least rotation starts with the smallest letter of the word, so only
    // letters >= the first letter are tried.
    fn extend_canonical(&self, word: &mut Vec<Letter>, n: usize, acc: &mut (u64, u64)) {
        let first = word[0];
        if word.len() == n {
            if n > 1 && word[n - 1] == first.inverse() {
                return;
            }
            acc.1 += 1;
            let k = least_rotation_index(word);
            if k == 0 || word[k..].iter().chain(&word[..k]).eq(word.iter()) {
                acc.0 += 1;
            }
            return;
        }
        let last = *word.last().expect("nonempty");
        for code in first.code()..(2 * self.rank) as u16 {
            let l = Letter::from_code(code);
            if l != last.inverse() {
                word.push(l);
                self.extend_canonical(word, n, acc);
                word.pop();
            }
        }
    }

    /// `(C(n), C^s(n))` for `n ≤ max_radius`, computed two ways.
    pub fn conjugacy_counts(&self, max_radius: usize, budget: Budget) -> Result<(CountSequence, CountSequence)> {
        let via_formula = cycrep_counts(&self.cyclically_reduced_counts(max_radius))?;
        let mut sphere = vec![BigUint::one()];
        let mut visited = 0u64;
        for n in 1..=max_radius {
            let (classes, seen) = self.count_rotation_classes(n);
            visited += seen;
            budget.check(visited, n)?;
            let classes = BigUint::from(classes);
            if classes != via_formula[n - 1] {
                return Err(Error::Disagreement(format!(
                    "F_{} at n = {n}: enumeration {classes} vs necklace formula {}",
                    self.rank,
                    via_formula[n - 1]
                )));
            }
            sphere.push(classes);
        }
        let sphere = CountSequence::new(SequenceKind::ConjugacySphere, sphere);
        Ok((sphere.cumulative(), sphere))
    }

    pub fn counts(&self, max_radius: usize, budget: Budget) -> Result<GrowthCounts> {
        let (conj_ball, conj_sphere) = self.conjugacy_counts(max_radius, budget)?;
        let sphere = self.sphere_counts(max_radius);
        Ok(GrowthCounts { ball: sphere.cumulative(), sphere, conj_ball, conj_sphere })
    }

    /// Standard basis plus the product `a_1 a_2` (rank ≥ 2).
    pub fn alternative_generators(&self) -> Vec<ReducedWord> {
        let mut gens: Vec<ReducedWord> =
            (0..self.rank).map(|i| ReducedWord(Word::new(vec![Letter::gen(i)]))).collect();
        if self.rank >= 2 {
            gens.push(ReducedWord(Word::new(vec![Letter::gen(0), Letter::gen(1)])));
        }
        gens
    }
}

impl Group for FreeGroup {
    type Element = ReducedWord;

    fn identity(&self) -> ReducedWord {
        ReducedWord::default()
    }

    fn generators(&self) -> Vec<ReducedWord> {
        Letter::alphabet(self.rank).into_iter().map(|l| ReducedWord(Word::new(vec![l]))).collect()
    }

    fn multiply(&self, x: &ReducedWord, y: &ReducedWord) -> ReducedWord {
        let a = x.0.letters();
        let b = y.0.letters();
        let mut k = 0;
        while k < a.len() && k < b.len() && a[a.len() - 1 - k] == b[k].inverse() {
            k += 1;
        }
        let mut v = a[..a.len() - k].to_vec();
        v.extend_from_slice(&b[k..]);
        ReducedWord(Word::new(v))
    }

    fn inverse(&self, x: &ReducedWord) -> ReducedWord {
        ReducedWord(x.0.inverse())
    }
}
