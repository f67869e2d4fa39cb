use super::Group;
use crate::cyclic_language::{Letter, Word};

/// An element of `D∞ = <a, b | a², b²>` as its alternating normal form:
/// the first letter (`0` for `a`, `1` for `b`) and the length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DihedralElement {
    first: u8,
    len: u32,
}

impl DihedralElement {
    pub const IDENTITY: Self = Self { first: 0, len: 0 };

    pub fn new(first: u8, len: u32) -> Self {
        assert!(first < 2);
        if len == 0 {
            Self::IDENTITY
        } else {
            Self { first, len }
        }
    }

    pub fn a() -> Self {
        Self::new(0, 1)
    }

    pub fn b() -> Self {
        Self::new(1, 1)
    }

    pub fn word_length(&self) -> u32 {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    fn letter_at(&self, i: u32) -> u8 {
        if i.is_multiple_of(2) {
            self.first
        } else {
            1 - self.first
        }
    }

    pub fn is_reflection(&self) -> bool {
        self.len % 2 == 1
    }

    /// The normal form spelled over generators `a = 0`, `b = 1`.
    pub fn word(&self) -> Word {
        Word::new((0..self.len).map(|i| Letter::gen(self.letter_at(i) as usize)).collect())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct InfiniteDihedral;

impl InfiniteDihedral {
    /// The generating set `{a, ab}` (symmetrized to `{a, ab, ba}`).
    pub fn alternative_generators() -> Vec<DihedralElement> {
        vec![DihedralElement::a(), DihedralElement::new(0, 2)]
    }
}

impl Group for InfiniteDihedral {
    type Element = DihedralElement;

    fn identity(&self) -> DihedralElement {
        DihedralElement::IDENTITY
    }

    fn generators(&self) -> Vec<DihedralElement> {
        vec![DihedralElement::a(), DihedralElement::b()]
    }

    fn multiply(&self, x: &DihedralElement, y: &DihedralElement) -> DihedralElement {
        if x.is_identity() {
            return *y;
        }
        if y.is_identity() {
            return *x;
        }
        if x.letter_at(x.len - 1) != y.first {
            return DihedralElement::new(x.first, x.len + y.len);
        }
        // Cancellation runs through the shorter word entirely.
        match x.len.cmp(&y.len) {
            std::cmp::Ordering::Greater => DihedralElement::new(x.first, x.len - y.len),
            std::cmp::Ordering::Less => DihedralElement::new(y.letter_at(x.len), y.len - x.len),
            std::cmp::Ordering::Equal => DihedralElement::IDENTITY,
        }
    }

    fn inverse(&self, x: &DihedralElement) -> DihedralElement {
        if x.is_identity() {
            *x
        } else {
            DihedralElement::new(x.letter_at(x.len - 1), x.len)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::cayley_oracle::{ball_enumerate, conjugacy_classes};
    use proptest::prelude::*;

    fn element() -> impl Strategy<Value = DihedralElement> {
        (0u8..2, 0u32..12).prop_map(|(f, l)| DihedralElement::new(f, l))
    }

    /// Multiplication by concatenating words and cancelling `aa`, `bb`.
    fn by_words(x: &DihedralElement, y: &DihedralElement) -> Word {
        let mut out: Vec<Letter> = Vec::new();
        for l in x.word().letters().iter().chain(y.word().letters()) {
            if out.last() == Some(l) {
                out.pop();
            } else {
                out.push(*l);
            }
        }
        Word::new(out)
    }

    #[test]
    fn multiplication_examples() {
        let d = InfiniteDihedral;
        let (a, b) = (DihedralElement::a(), DihedralElement::b());
        assert!(d.multiply(&a, &a).is_identity());
        assert_eq!(d.multiply(&a, &b).word(), Word::parse("ab").unwrap());
        let ab = d.multiply(&a, &b);
        let ba = d.inverse(&ab);
        assert_eq!(ba.word(), Word::parse("ba").unwrap());
        assert_eq!(d.multiply(&ab, &ab).word(), Word::parse("abab").unwrap());
        assert_eq!(d.multiply(&ab, &ba), DihedralElement::IDENTITY);
    }

    #[test]
    fn balls_grow_linearly() {
        let ball = ball_enumerate(&InfiniteDihedral, 20, Budget::default()).unwrap();
        let counts = ball.ball_counts().to_f64();
        for (n, c) in counts.iter().enumerate() {
            assert_eq!(*c, (2 * n + 1) as f64);
        }
    }

    #[test]
    fn class_counts_match_hand_count() {
        // identity, two reflection classes, one rotation class per length 2k
        let table = conjugacy_classes(&InfiniteDihedral, 20, 20, Budget::default()).unwrap();
        for (n, c) in table.conj_ball.to_f64().iter().enumerate() {
            let expected = if n == 0 { 1 } else { 3 + n / 2 };
            assert_eq!(*c, expected as f64, "n = {n}");
        }
        assert_eq!(table.stable, Some(true));
    }

    proptest! {
        #[test]
        fn multiply_agrees_with_word_reduction(x in element(), y in element()) {
            prop_assert_eq!(InfiniteDihedral.multiply(&x, &y).word(), by_words(&x, &y));
        }

        #[test]
        fn inverse_is_two_sided(x in element()) {
            let d = InfiniteDihedral;
            prop_assert!(d.multiply(&x, &d.inverse(&x)).is_identity());
            prop_assert!(d.multiply(&d.inverse(&x), &x).is_identity());
        }
    }
}
