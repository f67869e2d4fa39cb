//! Right-angled Artin groups on a finite simple graph.
//!
//! Elements are stored as shortlex normal forms with respect to the letter
//! order `a_1 < a_1^-1 < a_2 < ...` taken from the vertex declaration order.

mod conjugacy;
mod counts;
mod graph;
mod normal_form;

use std::fmt;

pub use conjugacy::{support_of, RaagConjKey, SplitKind, SupportGraph};
pub use counts::RaagCounts;
pub use graph::{GraphSpec, MAX_VERTICES};

use crate::cayley_oracle::Group;
use crate::cyclic_language::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raag {
    graph: GraphSpec,
}

/// A shortlex normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct RaagElement(pub(crate) Word);

impl RaagElement {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for RaagElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Raag {
    pub fn new(graph: GraphSpec) -> Self {
        Self { graph }
    }

    pub fn graph(&self) -> &GraphSpec {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.vertex_count()
    }
}

impl Group for Raag {
    type Element = RaagElement;

    fn identity(&self) -> RaagElement {
        RaagElement::default()
    }

    fn generators(&self) -> Vec<RaagElement> {
        Letter::alphabet(self.rank()).into_iter().map(|l| RaagElement(Word::new(vec![l]))).collect()
    }

    fn multiply(&self, x: &RaagElement, y: &RaagElement) -> RaagElement {
        let mut out = x.0.letters().to_vec();
        for &l in y.0.letters() {
            self.push_reduced(&mut out, l);
        }
        RaagElement(Word::new(self.lex_min(&out)))
    }

    fn inverse(&self, x: &RaagElement) -> RaagElement {
        self.normalize(x.0.inverse().letters())
    }
}
