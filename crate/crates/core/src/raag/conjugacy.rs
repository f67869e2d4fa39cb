use std::collections::{BTreeSet, VecDeque};

use super::{Raag, RaagElement};
use crate::cyclic_language::{Letter, Word};
use crate::{Error, Result};

/// Split/non-split dichotomy for cyclically reduced elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SplitKind {
    NonSplit,
    /// Vertex sets of the commuting blocks, one per component of the
    /// complement of the support graph.
    Split(Vec<u64>),
}

/// The full subgraph on the support of a word and its complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SupportGraph {
    pub vertices: u64,
    pub complement_components: Vec<u64>,
}

impl SupportGraph {
    pub fn is_split(&self) -> bool {
        self.complement_components.len() > 1
    }
}

/// Canonical conjugacy invariant of a RAAG element.
///
/// Split keys list their block keys in sorted order. The support graph is
/// implicit: it is spanned by the letters occurring in the key.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RaagConjKey {
    NonSplit(Word),
    Split(Vec<RaagConjKey>),
}

impl RaagConjKey {
    /// Vertex set of the support.
    pub fn support(&self) -> u64 {
        match self {
            RaagConjKey::NonSplit(w) => support_of(w.letters()),
            RaagConjKey::Split(blocks) => blocks.iter().fold(0, |acc, b| acc | b.support()),
        }
    }

    /// Length of a shortest element of the class.
    pub fn min_length(&self) -> usize {
        match self {
            RaagConjKey::NonSplit(w) => w.len(),
            RaagConjKey::Split(blocks) => blocks.iter().map(RaagConjKey::min_length).sum(),
        }
    }
}

pub fn support_of(letters: &[Letter]) -> u64 {
    letters.iter().fold(0, |acc, l| acc | 1 << l.index())
}

impl Raag {
    /// Positions of letters that can be shuffled to the front.
    fn front_positions(&self, w: &[Letter]) -> Vec<usize> {
        let mut blocked = 0u64;
        let mut out = Vec::new();
        for (i, l) in w.iter().enumerate() {
            if blocked >> l.index() & 1 == 0 {
                out.push(i);
            }
            blocked |= self.blocking(l.index());
        }
        out
    }

    /// Positions of letters that can be shuffled to the back.
    fn back_positions(&self, w: &[Letter]) -> Vec<usize> {
        let mut blocked = 0u64;
        let mut out = Vec::new();
        for (i, l) in w.iter().enumerate().rev() {
            if blocked >> l.index() & 1 == 0 {
                out.push(i);
            }
            blocked |= self.blocking(l.index());
        }
        out
    }

    /// A letter that can move to the front whose inverse can move to the back.
    fn cancelling_pair(&self, w: &[Letter]) -> Option<(usize, usize)> {
        let back = self.back_positions(w);
        self.front_positions(w)
            .into_iter()
            .find_map(|i| back.iter().find(|&&j| j != i && w[j] == w[i].inverse()).map(|&j| (i, j)))
    }

    /// True iff no conjugation by a single letter shortens the element,
    /// equivalently every cyclic permutation of the trace is reduced.
    pub fn is_cyclically_reduced(&self, w: &RaagElement) -> bool {
        self.cancelling_pair(w.word().letters()).is_none()
    }

    /// Conjugates away matching first/last letters until none remain.
    pub fn cyclically_reduce(&self, w: &RaagElement) -> RaagElement {
        let mut letters = w.word().letters().to_vec();
        while let Some((i, j)) = self.cancelling_pair(&letters) {
            let (hi, lo) = (i.max(j), i.min(j));
            letters.remove(hi);
            letters.remove(lo);
        }
        self.normalize(&letters)
    }

    pub fn support_graph(&self, w: &RaagElement) -> SupportGraph {
        let vertices = support_of(w.word().letters());
        SupportGraph { vertices, complement_components: self.graph.complement_components(vertices) }
    }

    /// Split iff the complement of the support graph is disconnected.
    pub fn classify_split(&self, w: &RaagElement) -> Result<SplitKind> {
        if !self.is_cyclically_reduced(w) {
            return Err(Error::NotCyclicallyReduced);
        }
        let sg = self.support_graph(w);
        Ok(if sg.is_split() { SplitKind::Split(sg.complement_components) } else { SplitKind::NonSplit })
    }

    /// The sub-element spelled by the letters on `vertices`.
    fn block(&self, w: &RaagElement, vertices: u64) -> RaagElement {
        let letters: Vec<Letter> = w.word().letters().iter().copied().filter(|l| vertices >> l.index() & 1 == 1).collect();
        self.normalize(&letters)
    }

    /// All cyclically reduced conjugates reachable by moving a front letter
    /// of the trace to the back, as normal forms.
    pub fn cyclic_permutation_orbit(&self, w: &RaagElement) -> BTreeSet<RaagElement> {
        let mut seen = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            let letters = x.word().letters();
            for i in self.front_positions(letters) {
                let mut moved = letters.to_vec();
                let l = moved.remove(i);
                moved.push(l);
                let next = RaagElement(Word::new(self.lex_min(&moved)));
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        seen
    }

    /// Least cyclic normal form among the cyclically reduced conjugates of a
    /// non-split element. Falls back to the least normal form in the orbit
    /// when no cyclic normal form exists.
    fn non_split_key(&self, w: &RaagElement) -> RaagConjKey {
        let orbit = self.cyclic_permutation_orbit(w);
        let by_shortlex = |x: &&RaagElement| x.word().clone();
        let least = orbit
            .iter()
            .filter(|x| self.is_cyclic_normal_form(x))
            .min_by_key(by_shortlex)
            .or_else(|| orbit.iter().min_by_key(by_shortlex))
            .expect("orbit contains w");
        RaagConjKey::NonSplit(least.word().clone())
    }

    pub fn conj_key(&self, w: &RaagElement) -> RaagConjKey {
        let reduced = self.cyclically_reduce(w);
        let sg = self.support_graph(&reduced);
        if !sg.is_split() {
            return self.non_split_key(&reduced);
        }
        let mut blocks: Vec<RaagConjKey> =
            sg.complement_components.iter().map(|&c| self.conj_key(&self.block(&reduced, c))).collect();
        blocks.sort();
        RaagConjKey::Split(blocks)
    }

    /// Whether the class of `w` has a cyclic normal form representative.
    pub fn has_cyclic_normal_form(&self, w: &RaagElement) -> bool {
        let reduced = self.cyclically_reduce(w);
        self.cyclic_permutation_orbit(&reduced).iter().any(|x| self.is_cyclic_normal_form(x))
    }
}
