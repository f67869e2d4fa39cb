use num_integer::Integer;

use super::Group;

/// An element of the integer Heisenberg group in Mal'cev coordinates, with
/// `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b')`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeisenbergElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl HeisenbergElement {
    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }
}

/// Conjugacy invariant: central elements are singletons; otherwise the class
/// of `(a, b, c)` is `(a, b, c + k·gcd(a, b))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeisenbergKey {
    Central(i64),
    Coset { a: i64, b: i64, c_mod: i64 },
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Heisenberg;

impl Heisenberg {
    pub fn conj_key(x: &HeisenbergElement) -> HeisenbergKey {
        if x.a == 0 && x.b == 0 {
            HeisenbergKey::Central(x.c)
        } else {
            let g = x.a.gcd(&x.b);
            HeisenbergKey::Coset { a: x.a, b: x.b, c_mod: x.c.rem_euclid(g) }
        }
    }
}

impl Group for Heisenberg {
    type Element = HeisenbergElement;

    fn identity(&self) -> HeisenbergElement {
        HeisenbergElement::new(0, 0, 0)
    }

    fn generators(&self) -> Vec<HeisenbergElement> {
        vec![
            HeisenbergElement::new(1, 0, 0),
            HeisenbergElement::new(-1, 0, 0),
            HeisenbergElement::new(0, 1, 0),
            HeisenbergElement::new(0, -1, 0),
        ]
    }

    fn multiply(&self, x: &HeisenbergElement, y: &HeisenbergElement) -> HeisenbergElement {
        HeisenbergElement::new(x.a + y.a, x.b + y.b, x.c + y.c + x.a * y.b)
    }

    fn inverse(&self, x: &HeisenbergElement) -> HeisenbergElement {
        HeisenbergElement::new(-x.a, -x.b, -x.c + x.a * x.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::cayley_oracle::{conjugacy_classes, key_matches_oracle};
    use proptest::prelude::*;

    fn element() -> impl Strategy<Value = HeisenbergElement> {
        (-6i64..6, -6i64..6, -20i64..20).prop_map(|(a, b, c)| HeisenbergElement::new(a, b, c))
    }

    #[test]
    fn commutator_is_central_generator() {
        let h = Heisenberg;
        let (x, y) = (HeisenbergElement::new(1, 0, 0), HeisenbergElement::new(0, 1, 0));
        let comm = h.multiply(&h.multiply(&x, &y), &h.multiply(&h.inverse(&x), &h.inverse(&y)));
        assert_eq!(comm, HeisenbergElement::new(0, 0, 1));
    }

    #[test]
    fn key_matches_oracle_on_b6() {
        let table = conjugacy_classes(&Heisenberg, 6, 6, Budget::default()).unwrap();
        assert_eq!(table.stable, Some(true));
        key_matches_oracle(&table, Heisenberg::conj_key).unwrap();
    }

    #[test]
    fn ratio_strictly_decreases_from_four() {
        let ball = crate::cayley_oracle::ball_enumerate(&Heisenberg, 12, Budget::default()).unwrap();
        let r = crate::cayley_oracle::counts_from_key(&ball, Heisenberg::conj_key).conjugacy_ratio().values;
        assert!(r[4..].windows(2).all(|w| w[1] < w[0]));
    }

    proptest! {
        #[test]
        fn group_axioms(x in element(), y in element(), z in element()) {
            let h = Heisenberg;
            prop_assert_eq!(h.multiply(&h.multiply(&x, &y), &z), h.multiply(&x, &h.multiply(&y, &z)));
            prop_assert_eq!(h.multiply(&x, &h.inverse(&x)), h.identity());
        }

        #[test]
        fn key_is_conjugation_invariant(x in element(), y in element()) {
            prop_assert_eq!(Heisenberg::conj_key(&Heisenberg.conjugate(&x, &y)), Heisenberg::conj_key(&x));
        }
    }
}
