//! Finite undirected (multi)graphs with an oriented-edge table.
//!
//! Unoriented edge `j` is stored as the oriented pair `2j` (as listed) and
//! `2j+1` (reversed), so inverse lookup is index arithmetic and every
//! edge-indexed matrix has a deterministic layout.

pub mod edgelist;
pub mod graph6;
pub mod named;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result, Violation};
use crate::exact::IntMatrix;

/// One direction of an unoriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientedEdge {
    pub origin: usize,
    pub terminus: usize,
    pub inverse: usize,
}

/// Immutable graph with `n` vertices (0-based, dense) and `m` unoriented
/// edges; self-loops and multi-edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    unoriented: Vec<(usize, usize)>,
    oriented: Vec<OrientedEdge>,
    degrees: Vec<usize>,
    edges_from: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from unoriented edges over vertices `0..n`.
    pub fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidInput("graph needs at least one vertex".into()));
        }
        let mut oriented = Vec::with_capacity(2 * edges.len());
        let mut degrees = vec![0usize; n];
        let mut edges_from = vec![Vec::new(); n];
        for (j, &(x, y)) in edges.iter().enumerate() {
            if x >= n || y >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({x},{y}) references a vertex >= {n}"
                )));
            }
            oriented.push(OrientedEdge { origin: x, terminus: y, inverse: 2 * j + 1 });
            oriented.push(OrientedEdge { origin: y, terminus: x, inverse: 2 * j });
            degrees[x] += 1;
            degrees[y] += 1;
            edges_from[x].push(2 * j);
            edges_from[y].push(2 * j + 1);
        }
        Ok(Graph { n, unoriented: edges, oriented, degrees, edges_from })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.unoriented.len()
    }

    pub fn oriented_count(&self) -> usize {
        self.oriented.len()
    }

    pub fn unoriented_edges(&self) -> &[(usize, usize)] {
        &self.unoriented
    }

    pub fn oriented_edges(&self) -> &[OrientedEdge] {
        &self.oriented
    }

    pub fn origin(&self, e: usize) -> usize {
        self.oriented[e].origin
    }

    pub fn terminus(&self, e: usize) -> usize {
        self.oriented[e].terminus
    }

    pub fn inverse(&self, e: usize) -> usize {
        self.oriented[e].inverse
    }

    pub fn degree(&self, x: usize) -> usize {
        self.degrees[x]
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Oriented edges with origin `x`.
    pub fn edges_from(&self, x: usize) -> &[usize] {
        &self.edges_from[x]
    }

    pub fn min_degree(&self) -> usize {
        self.degrees.iter().copied().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(x, y) in &self.unoriented {
            if x == y {
                return false;
            }
            if !seen.insert((x.min(y), x.max(y))) {
                return false;
            }
        }
        true
    }

    pub fn adjacency_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::from_fn(self.n, |_, _| BigInt::from(0));
        for e in &self.oriented {
            let cur = m.get(e.origin, e.terminus).clone();
            m.set(e.origin, e.terminus, cur + 1);
        }
        m
    }

    pub fn degree_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            if i == j {
                BigInt::from(self.degrees[i])
            } else {
                BigInt::from(0)
            }
        })
    }

    /// D - A.
    pub fn laplacian(&self) -> IntMatrix {
        let a = self.adjacency_matrix();
        IntMatrix::from_fn(self.n, |i, j| {
            let d = if i == j { BigInt::from(self.degrees[i]) } else { BigInt::from(0) };
            d - a.get(i, j)
        })
    }

    /// D + A.
    pub fn signless_laplacian(&self) -> IntMatrix {
        let a = self.adjacency_matrix();
        IntMatrix::from_fn(self.n, |i, j| {
            let d = if i == j { BigInt::from(self.degrees[i]) } else { BigInt::from(0) };
            d + a.get(i, j)
        })
    }
}

/// Structural facts about a graph.
#[derive(Debug, Clone, Serialize)]
pub struct GraphClassification {
    pub connected: bool,
    pub bipartite: bool,
    pub bipartition: Option<(Vec<usize>, Vec<usize>)>,
    pub regular_degree: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub simple: bool,
}

/// Connectivity, bipartiteness (with a bipartition when one exists),
/// regularity, and degree extremes.
pub fn classify(g: &Graph) -> GraphClassification {
    let n = g.vertex_count();
    let mut color = vec![None::<u8>; n];
    let mut bipartite = true;
    let mut components = 0usize;
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        components += 1;
        color[start] = Some(0);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let cx = color[x].unwrap();
            for &e in g.edges_from(x) {
                let y = g.terminus(e);
                match color[y] {
                    None => {
                        color[y] = Some(1 - cx);
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => bipartite = false,
                    Some(_) => {}
                }
            }
        }
    }
    let bipartition = bipartite.then(|| {
        let mut v0 = Vec::new();
        let mut v1 = Vec::new();
        for (x, c) in color.iter().enumerate() {
            if *c == Some(0) {
                v0.push(x);
            } else {
                v1.push(x);
            }
        }
        (v0, v1)
    });
    let min_degree = g.min_degree();
    let max_degree = g.max_degree();
    GraphClassification {
        connected: components == 1,
        bipartite,
        bipartition,
        regular_degree: (min_degree == max_degree).then_some(min_degree),
        min_degree,
        max_degree,
        simple: g.is_simple(),
    }
}

/// Hypotheses needed by the two-step zeta machinery: simple, connected,
/// minimum degree at least 3. An empty list means the graph qualifies.
pub fn validate_for_modified_zeta(g: &Graph) -> Vec<Violation> {
    let c = classify(g);
    let mut v = Vec::new();
    if !c.simple {
        v.push(Violation::NotSimple);
    }
    if !c.connected {
        v.push(Violation::NotConnected);
    }
    if c.min_degree < 3 {
        v.push(Violation::MinDegree(c.min_degree));
    }
    v
}

/// Errors unless the graph satisfies the two-step zeta hypotheses.
pub fn require_modified_hypotheses(g: &Graph) -> Result<()> {
    let violations = validate_for_modified_zeta(g);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::Hypothesis { violations })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::generate;

    #[test]
    fn oriented_table_pairs_inverses() {
        let g = generate("petersen").unwrap();
        assert_eq!(g.oriented_count(), 2 * g.edge_count());
        for e in 0..g.oriented_count() {
            let inv = g.inverse(e);
            assert_ne!(inv, e);
            assert_eq!(g.inverse(inv), e);
            assert_eq!(g.origin(e), g.terminus(inv));
            assert_eq!(g.terminus(e), g.origin(inv));
        }
        let total: usize = g.degrees().iter().sum();
        assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn self_loop_counts_twice() {
        let g = Graph::from_edges(1, vec![(0, 0)]).unwrap();
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.oriented_count(), 2);
        assert_ne!(g.inverse(0), 0);
        assert!(!g.is_simple());
    }

    #[test]
    fn classify_k33() {
        let g = generate("k33").unwrap();
        let c = classify(&g);
        assert!(c.connected && c.bipartite && c.simple);
        assert_eq!(c.regular_degree, Some(3));
        let (v0, v1) = c.bipartition.unwrap();
        assert_eq!(v0, vec![0, 1, 2]);
        assert_eq!(v1, vec![3, 4, 5]);
    }

    #[test]
    fn classify_petersen() {
        let c = classify(&generate("petersen").unwrap());
        assert!(c.connected && !c.bipartite && c.simple);
        assert_eq!(c.regular_degree, Some(3));
    }

    #[test]
    fn classify_disjoint_triangles() {
        let g = Graph::from_edges(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let c = classify(&g);
        assert!(!c.connected);
        assert!(!c.bipartite);
    }

    #[test]
    fn validation_for_modified_zeta() {
        assert!(validate_for_modified_zeta(&generate("petersen").unwrap()).is_empty());
        let cycle = generate("cycle:5").unwrap();
        assert_eq!(
            validate_for_modified_zeta(&cycle),
            vec![Violation::MinDegree(2)]
        );
        let doubled = Graph::from_edges(3, vec![(0, 1), (0, 1), (1, 2), (2, 0)]).unwrap();
        let v = validate_for_modified_zeta(&doubled);
        assert!(v.contains(&Violation::NotSimple));
    }

    #[test]
    fn adjacency_of_self_loop() {
        let g = Graph::from_edges(1, vec![(0, 0)]).unwrap();
        let a = g.adjacency_matrix();
        assert_eq!(a.get(0, 0), &BigInt::from(2));
    }
}
