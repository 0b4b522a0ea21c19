//! Abstract finite simple graphs and exact predicates on them.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::planarity;
use crate::planemap::PlaneMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {p} vertices")]
    VertexOutOfRange { vertex: usize, p: usize },
    #[error("connectivity is only decided for k <= 3, got k = {0}")]
    KTooLarge(usize),
}

/// Undirected simple graph on vertices `0..p` with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn empty(p: usize) -> Self {
        Self { adj: vec![Vec::new(); p] }
    }

    pub fn from_edges(p: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut set = BTreeSet::new();
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= p {
                    return Err(GraphError::VertexOutOfRange { vertex: w, p });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self::from_edge_set(p, set))
    }

    /// Builds from an already normalised set of pairs `(u, v)` with `u < v < p`.
    pub fn from_edge_set(p: usize, edges: BTreeSet<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); p];
        for (u, v) in edges {
            debug_assert!(u < v && v < p);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { adj }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::from_edge_set(n, edges)
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Self {
        let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))).collect();
        Self::from_edge_set(m + n, edges)
    }

    pub fn cycle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
        Self::from_edge_set(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edge_set(n, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted list of pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            out.extend(list.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        self.edges().into_iter().collect()
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let p = self.vertex_count();
        let mut edges = self.edge_set();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + p, v + p)));
        Graph::from_edge_set(p + other.vertex_count(), edges)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        Graph::from_edge_set(self.vertex_count(), edges)
    }

    /// Subgraph induced by `keep`, renumbered in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut edges = BTreeSet::new();
        for &v in keep {
            for &w in &self.adj[v] {
                let (a, b) = (index[v], index[w]);
                if b != usize::MAX && a < b {
                    edges.insert((a, b));
                }
            }
        }
        Graph::from_edge_set(keep.len(), edges)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(&vec![false; self.vertex_count()])
    }

    fn components_avoiding(&self, removed: &[bool]) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    fn connected_avoiding(&self, removed: &[bool]) -> bool {
        self.components_avoiding(removed).len() <= 1
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut colour = vec![u8::MAX; n];
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &w in &self.adj[v] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    /// Exhaustive k-connectivity for `k <= 3`.
    ///
    /// A graph on at most `k` vertices is reported as not k-connected.
    pub fn is_k_connected(&self, k: usize) -> Result<bool, GraphError> {
        if k > 3 {
            return Err(GraphError::KTooLarge(k));
        }
        let n = self.vertex_count();
        if n <= k {
            return Ok(false);
        }
        if k == 0 {
            return Ok(true);
        }
        if self.adj.iter().any(|l| l.len() < k) {
            return Ok(false);
        }
        let mut removed = vec![false; n];
        if !self.connected_avoiding(&removed) {
            return Ok(false);
        }
        if k >= 2 {
            for a in 0..n {
                removed[a] = true;
                if !self.connected_avoiding(&removed) {
                    return Ok(false);
                }
                if k == 3 {
                    for b in a + 1..n {
                        removed[b] = true;
                        let ok = self.connected_avoiding(&removed);
                        removed[b] = false;
                        if !ok {
                            return Ok(false);
                        }
                    }
                }
                removed[a] = false;
            }
        }
        Ok(true)
    }

    pub fn is_maximal_planar(&self) -> bool {
        let p = self.vertex_count();
        p >= 4 && self.edge_count() == 3 * p - 6 && planarity::is_planar(self)
    }

    pub fn is_polyhedral(&self) -> bool {
        self.vertex_count() >= 4
            && self.is_k_connected(3).expect("k = 3 is supported")
            && planarity::is_planar(self)
    }
}

/// Forgets the rotation of a simple map.
pub fn underlying_graph(m: &PlaneMap) -> Graph {
    let edges = m
        .edges()
        .into_iter()
        .map(|(u, v)| (u.min(v), u.max(v)))
        .collect();
    Graph::from_edge_set(m.vertex_count(), edges)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    pub connected_components: usize,
    pub bipartite: bool,
    pub planar: bool,
    pub maximal_planar: bool,
    pub polyhedral: bool,
    pub max_degree: usize,
}

pub fn classify(g: &Graph) -> GraphClass {
    let p = g.vertex_count();
    let planar = planarity::is_planar(g);
    GraphClass {
        connected_components: g.components().len(),
        bipartite: g.is_bipartite(),
        planar,
        maximal_planar: planar && p >= 4 && g.edge_count() == 3 * p - 6,
        polyhedral: planar && p >= 4 && g.is_k_connected(3).expect("k = 3 is supported"),
        max_degree: g.max_degree(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cube() -> Graph {
        Graph::from_edges(
            8,
            &[
                (0, 1), (1, 2), (2, 3), (3, 0),
                (4, 5), (5, 6), (6, 7), (7, 4),
                (0, 4), (1, 5), (2, 6), (3, 7),
            ],
        )
        .unwrap()
    }

    fn prism3() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap()
    }

    #[test]
    fn connectivity_examples() {
        assert!(cube().is_k_connected(3).unwrap());
        assert!(!Graph::path(3).is_k_connected(2).unwrap());
        assert!(prism3().is_k_connected(3).unwrap());
        assert_eq!(cube().is_k_connected(4), Err(GraphError::KTooLarge(4)));
        assert!(!Graph::cycle(5).is_k_connected(3).unwrap());
        assert!(Graph::cycle(5).is_k_connected(2).unwrap());
    }

    #[test]
    fn classify_examples() {
        let c = classify(&cube());
        assert!(c.bipartite && c.planar && c.polyhedral && !c.maximal_planar);
        let k33 = classify(&Graph::complete_bipartite(3, 3));
        assert!(k33.bipartite && !k33.planar && !k33.polyhedral);
        let k4 = classify(&Graph::complete(4));
        assert!(k4.maximal_planar && k4.polyhedral && !k4.bipartite);
        assert_eq!(k4.max_degree, 3);
    }

    #[test]
    fn from_edges_validation() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, p: 2 })
        ));
    }

    #[test]
    fn components_of_union() {
        let g = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert_eq!(g.components().len(), 2);
        assert_eq!(g.edge_count(), 12);
    }
}
