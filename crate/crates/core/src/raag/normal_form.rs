use super::{Raag, RaagElement};
use crate::cyclic_language::{Letter, Word};
use crate::Result;

impl Raag {
    /// Vertices that do not commute with `v`, including `v` itself.
    pub(crate) fn blocking(&self, v: usize) -> u64 {
        !self.graph.neighbours(v)
    }

    /// Cancels `x … x^-1` whenever everything in between commutes with `x`.
    ///
    /// The output is a geodesic word for the same element. Letters are
    /// appended one at a time; the prefix built so far is always reduced, so
    /// a new letter can only cancel against the nearest letter on its own
    /// vertex, and only if everything after that letter commutes with it.
    pub fn free_reduce(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::with_capacity(letters.len());
        for &y in letters {
            self.push_reduced(&mut out, y);
        }
        out
    }

    pub(crate) fn push_reduced(&self, out: &mut Vec<Letter>, y: Letter) {
        let v = y.index();
        for j in (0..out.len()).rev() {
            let u = out[j].index();
            if u == v {
                if out[j] == y.inverse() {
                    out.remove(j);
                    return;
                }
                break;
            }
            if !self.graph.adjacent(u, v) {
                break;
            }
        }
        out.push(y);
    }

    /// Lexicographically least word in the commutation class of a reduced word.
    ///
    /// Repeatedly emits the least letter that can be shuffled to the front,
    /// i.e. one commuting with every letter still ahead of it.
    pub fn lex_min(&self, letters: &[Letter]) -> Vec<Letter> {
        let mut remaining = letters.to_vec();
        let mut out = Vec::with_capacity(letters.len());
        while !remaining.is_empty() {
            let mut blocked = 0u64;
            let mut best: Option<usize> = None;
            for (i, l) in remaining.iter().enumerate() {
                let v = l.index();
                if blocked >> v & 1 == 0 && best.is_none_or(|b| *l < remaining[b]) {
                    best = Some(i);
                }
                blocked |= self.blocking(v);
                if blocked == u64::MAX {
                    break;
                }
            }
            out.push(remaining.remove(best.expect("first letter is always available")));
        }
        out
    }

    /// Shortlex normal form of the element spelled by `w`.
    pub fn normal_form(&self, w: &Word) -> Result<RaagElement> {
        w.check_rank(self.rank())?;
        Ok(self.normalize(w.letters()))
    }

    pub(crate) fn normalize(&self, letters: &[Letter]) -> RaagElement {
        RaagElement(Word::new(self.lex_min(&self.free_reduce(letters))))
    }

    /// Whether `letters` is itself a shortlex normal form.
    pub fn is_normal_form_word(&self, letters: &[Letter]) -> bool {
        self.normalize(letters).0.letters() == letters
    }

    /// True iff every cyclic rotation of the word is a shortlex normal form.
    pub fn is_cyclic_normal_form(&self, w: &RaagElement) -> bool {
        (0..w.len().max(1)).all(|k| self.is_normal_form_word(w.word().rotate(k).letters()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raag::GraphSpec;
    use proptest::prelude::*;
    use std::collections::{HashSet, VecDeque};

    fn nf(g: &Raag, s: &str) -> String {
        g.normal_form(&Word::parse(s).unwrap()).unwrap().to_string()
    }

    /// Every word reachable by swapping adjacent commuting letters and
    /// deleting adjacent inverse pairs.
    fn closure(g: &Raag, w: &[Letter]) -> HashSet<Vec<Letter>> {
        let mut seen = HashSet::from([w.to_vec()]);
        let mut queue = VecDeque::from([w.to_vec()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..x.len().saturating_sub(1) {
                let (p, q) = (x[i], x[i + 1]);
                let mut next = Vec::new();
                if p == q.inverse() {
                    let mut y = x.clone();
                    y.drain(i..i + 2);
                    next.push(y);
                } else if p.index() != q.index() && g.graph().adjacent(p.index(), q.index()) {
                    let mut y = x.clone();
                    y.swap(i, i + 1);
                    next.push(y);
                }
                for y in next {
                    if seen.insert(y.clone()) {
                        queue.push_back(y);
                    }
                }
            }
        }
        seen
    }

    fn shortlex_min(words: &HashSet<Vec<Letter>>) -> Vec<Letter> {
        words.iter().min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b))).unwrap().clone()
    }

    fn three_vertex_graphs() -> Vec<Raag> {
        let pairs = [(0, 1), (0, 2), (1, 2)];
        (0..8u32)
            .map(|bits| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, e)| *e).collect();
                Raag::new(GraphSpec::new(vec!["a".into(), "b".into(), "c".into()], &edges).unwrap())
            })
            .collect()
    }

    fn all_words(rank: usize, len: usize) -> Vec<Vec<Letter>> {
        let alphabet = Letter::alphabet(rank);
        let mut words = vec![Vec::new()];
        for _ in 0..len {
            words = words
                .into_iter()
                .flat_map(|w| alphabet.iter().map(move |&l| [w.clone(), vec![l]].concat()))
                .collect();
        }
        words
    }

    #[test]
    fn normal_form_examples() {
        let edge = Raag::new(GraphSpec::complete(2));
        assert_eq!(nf(&edge, "ba"), "ab");
        let free = Raag::new(GraphSpec::empty(2));
        assert_eq!(nf(&free, "abB"), "a");
        let p3 = Raag::new(GraphSpec::path(3));
        assert_eq!(nf(&p3, "ca"), "ca");
        assert_eq!(nf(&p3, "cb"), "bc");
        // cancellation across a commuting letter
        assert_eq!(nf(&p3, "aBA"), "B");
        assert_eq!(nf(&p3, "acA"), "acA");
    }

    #[test]
    fn lex_min_is_not_fooled_by_local_minima() {
        // a < b < c; b commutes with a and c, a and c do not commute:
        // "cab" has no decreasing adjacent swap yet "bca" is smaller.
        let g = Raag::new(GraphSpec::new(vec!["a".into(), "b".into(), "c".into()], &[(0, 1), (1, 2)]).unwrap());
        assert_eq!(nf(&g, "cab"), "bca");
    }

    #[test]
    fn rejects_foreign_letters() {
        let g = Raag::new(GraphSpec::empty(2));
        assert!(g.normal_form(&Word::parse("c").unwrap()).is_err());
    }

    #[test]
    fn normal_form_is_shortlex_least_of_commutation_closure() {
        for g in three_vertex_graphs() {
            for len in 0..=5 {
                for w in all_words(3, len) {
                    let expected = shortlex_min(&closure(&g, &w));
                    assert_eq!(g.normalize(&w).word().letters(), &expected[..], "{}: {:?}", g.graph(), w);
                }
            }
        }
    }

    #[test]
    fn cyclic_normal_form_examples() {
        let edge = Raag::new(GraphSpec::complete(2));
        let free = Raag::new(GraphSpec::empty(2));
        let p3 = Raag::new(GraphSpec::path(3));
        let el = |g: &Raag, s: &str| g.normal_form(&Word::parse(s).unwrap()).unwrap();
        assert!(!edge.is_cyclic_normal_form(&el(&edge, "ab")));
        assert!(free.is_cyclic_normal_form(&el(&free, "ab")));
        assert!(!free.is_cyclic_normal_form(&el(&free, "abA")));
        // "ac" and "ca" are both shortlex in P3 since a and c do not commute
        assert!(p3.is_normal_form_word(Word::parse("ca").unwrap().letters()));
        assert!(p3.is_cyclic_normal_form(&el(&p3, "ac")));
        assert!(!p3.is_cyclic_normal_form(&el(&p3, "ab")));
    }

    proptest! {
        #[test]
        fn normal_form_constant_on_commutation_class(
            graph in 0usize..8,
            codes in prop::collection::vec(0u16..6, 0..=8),
        ) {
            let g = &three_vertex_graphs()[graph];
            let w: Vec<Letter> = codes.iter().map(|&c| Letter::from_code(c)).collect();
            let target = g.normalize(&w);
            prop_assert!(g.is_normal_form_word(target.word().letters()));
            for x in closure(g, &w) {
                prop_assert_eq!(&g.normalize(&x), &target);
            }
        }
    }
}
