use std::fmt;

use crate::{Error, Result};

/// A finite simple graph on at most 64 labelled vertices.
///
/// Vertex `i` is generator `i`; declaration order fixes the letter order
/// `a_1 < a_1^-1 < a_2 < ...` and with it the shortlex normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    labels: Vec<String>,
    adjacency: Vec<u64>,
}

pub const MAX_VERTICES: usize = 64;

impl GraphSpec {
    pub fn new(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        if labels.len() > MAX_VERTICES {
            return Err(Error::GraphSpec { line: 0, reason: format!("more than {MAX_VERTICES} vertices") });
        }
        let mut g = Self { adjacency: vec![0; labels.len()], labels };
        for &(u, v) in edges {
            g.add_edge(u, v).map_err(|reason| Error::GraphSpec { line: 0, reason })?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> std::result::Result<(), String> {
        let n = self.labels.len();
        if u >= n || v >= n {
            return Err(format!("edge ({u}, {v}) references a missing vertex"));
        }
        if u == v {
            return Err(format!("loop edge at vertex {}", self.labels[u]));
        }
        if self.adjacency[u] >> v & 1 == 1 {
            return Err(format!("duplicate edge {} {}", self.labels[u], self.labels[v]));
        }
        self.adjacency[u] |= 1 << v;
        self.adjacency[v] |= 1 << u;
        Ok(())
    }

    fn default_labels(n: usize) -> Vec<String> {
        (0..n)
            .map(|i| if i < 26 { ((b'a' + i as u8) as char).to_string() } else { format!("v{i}") })
            .collect()
    }

    /// No edges: the free group of rank `n`.
    pub fn empty(n: usize) -> Self {
        Self::new(Self::default_labels(n), &[]).expect("valid")
    }

    /// All edges: `Z^n`.
    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::new(Self::default_labels(n), &edges).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Self::new(Self::default_labels(n), &edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
        Self::new(Self::default_labels(n), &edges).expect("valid")
    }

    /// Parses
    ///
    /// ```text
    /// vertices: a b c
    /// edge: a b
    /// edge: b c
    /// ```
    ///
    /// Blank lines and `#` comments are ignored. Errors name the line.
    pub fn parse(text: &str) -> Result<Self> {
        let mut graph: Option<Self> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let err = |reason: String| Error::GraphSpec { line, reason };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (head, rest) =
                content.split_once(':').ok_or_else(|| err(format!("expected `key: value`, got {content:?}")))?;
            let fields: Vec<&str> = rest.split_whitespace().collect();
            match (head.trim(), graph.as_mut()) {
                ("vertices", None) => {
                    let labels: Vec<String> = fields.iter().map(|s| s.to_string()).collect();
                    for (k, l) in labels.iter().enumerate() {
                        if labels[..k].contains(l) {
                            return Err(err(format!("duplicate vertex {l}")));
                        }
                    }
                    if labels.len() > MAX_VERTICES {
                        return Err(err(format!("more than {MAX_VERTICES} vertices")));
                    }
                    graph = Some(Self { adjacency: vec![0; labels.len()], labels });
                }
                ("vertices", Some(_)) => return Err(err("vertices declared twice".into())),
                ("edge", Some(g)) => {
                    if fields.len() != 2 {
                        return Err(err(format!("an edge needs two endpoints, got {}", fields.len())));
                    }
                    let lookup = |name: &str| {
                        g.labels.iter().position(|l| l == name).ok_or_else(|| err(format!("unknown vertex {name}")))
                    };
                    let (u, v) = (lookup(fields[0])?, lookup(fields[1])?);
                    g.add_edge(u, v).map_err(err)?;
                }
                ("edge", None) => return Err(err("edge before vertices line".into())),
                (other, _) => return Err(err(format!("unknown key {other:?}"))),
            }
        }
        graph.ok_or(Error::GraphSpec { line: 0, reason: "missing vertices line".into() })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn all_vertices(&self) -> u64 {
        mask_of(self.vertex_count())
    }

    pub fn is_complete(&self) -> bool {
        (0..self.vertex_count()).all(|v| self.adjacency[v] == self.all_vertices() & !(1 << v))
    }

    /// Connected components of the complement graph restricted to `vertices`.
    pub fn complement_components(&self, vertices: u64) -> Vec<u64> {
        let mut rest = vertices;
        let mut components = Vec::new();
        while rest != 0 {
            let start = rest.trailing_zeros() as usize;
            let mut component = 1u64 << start;
            let mut frontier = component;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = !self.adjacency[v] & vertices & !component & !(1 << v);
                component |= fresh;
                frontier |= fresh;
            }
            rest &= !component;
            components.push(component);
        }
        components
    }

    pub fn format_vertex_set(&self, vertices: u64) -> String {
        let names: Vec<&str> =
            (0..self.vertex_count()).filter(|v| vertices >> v & 1 == 1).map(|v| self.labels[v].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

pub(crate) fn mask_of(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.labels.join(" "))?;
        for u in 0..self.vertex_count() {
            for v in u + 1..self.vertex_count() {
                if self.adjacent(u, v) {
                    writeln!(f, "edge: {} {}", self.labels[u], self.labels[v])?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let g = GraphSpec::parse("vertices: a b c\n# path\nedge: a b\nedge: b c\n").unwrap();
        assert_eq!(g, GraphSpec::path(3));
        assert_eq!(GraphSpec::parse(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn parse_errors_name_the_line() {
        let loop_edge = GraphSpec::parse("vertices: a b\nedge: a b\nedge: b b\n").unwrap_err();
        assert!(matches!(loop_edge, Error::GraphSpec { line: 3, ref reason } if reason.contains("loop")));
        let dup = GraphSpec::parse("vertices: a b\nedge: a b\nedge: b a\n").unwrap_err();
        assert!(matches!(dup, Error::GraphSpec { line: 3, .. }));
        let unknown = GraphSpec::parse("vertices: a b\n\nedge: a z\n").unwrap_err();
        assert!(matches!(unknown, Error::GraphSpec { line: 3, .. }));
        assert!(GraphSpec::parse("edge: a b\n").is_err());
        assert!(GraphSpec::parse("").is_err());
    }

    #[test]
    fn complement_components_of_square() {
        let c4 = GraphSpec::cycle(4);
        // complement of a-b-c-d-a is the two diagonals
        let mut comps = c4.complement_components(0b1111);
        comps.sort();
        assert_eq!(comps, vec![0b0101, 0b1010]);
        assert_eq!(c4.complement_components(0b0101), vec![0b0101]);
        assert_eq!(GraphSpec::complete(3).complement_components(0b111).len(), 3);
        assert_eq!(GraphSpec::empty(3).complement_components(0b111), vec![0b111]);
    }

    #[test]
    fn named_graphs() {
        assert!(GraphSpec::complete(3).is_complete());
        assert!(!GraphSpec::path(3).is_complete());
        assert!(GraphSpec::path(3).adjacent(0, 1) && !GraphSpec::path(3).adjacent(0, 2));
    }
}
