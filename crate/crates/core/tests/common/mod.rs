//! Test-side oracles that share no code with the enumerators.

#![allow(dead_code)]

use std::collections::HashMap;

use polycon::{is_planar, Graph};

/// A small graph as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Small {
    pub adj: Vec<u16>,
}

impl Small {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn to_graph(&self) -> Graph {
        let mut e = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adj[u] >> v & 1 == 1 {
                    e.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n(), &e).unwrap()
    }

    fn vertex_key(&self, v: usize) -> (usize, Vec<usize>) {
        let mut nd: Vec<usize> = (0..self.n())
            .filter(|&w| self.adj[v] >> w & 1 == 1)
            .map(|w| self.degree(w))
            .collect();
        nd.sort_unstable();
        (self.degree(v), nd)
    }

    fn key(&self) -> Vec<(usize, Vec<usize>)> {
        let mut k: Vec<_> = (0..self.n()).map(|v| self.vertex_key(v)).collect();
        k.sort();
        k
    }

    /// Brute-force isomorphism, matching vertex keys.
    pub fn iso(&self, other: &Small) -> bool {
        let n = self.n();
        if n != other.n() || self.edges() != other.edges() || self.key() != other.key() {
            return false;
        }
        let ka: Vec<_> = (0..n).map(|v| self.vertex_key(v)).collect();
        let kb: Vec<_> = (0..n).map(|v| other.vertex_key(v)).collect();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn go(
            a: &Small,
            b: &Small,
            ka: &[(usize, Vec<usize>)],
            kb: &[(usize, Vec<usize>)],
            v: usize,
            map: &mut [usize],
            used: &mut [bool],
        ) -> bool {
            if v == a.n() {
                return true;
            }
            for w in 0..b.n() {
                if used[w] || ka[v] != kb[w] {
                    continue;
                }
                let ok = (0..v).all(|u| (a.adj[u] >> v & 1) == (b.adj[map[u]] >> w & 1));
                if ok {
                    map[v] = w;
                    used[w] = true;
                    if go(a, b, ka, kb, v + 1, map, used) {
                        return true;
                    }
                    used[w] = false;
                }
            }
            false
        }
        go(self, other, &ka, &kb, 0, &mut map, &mut used)
    }
}

/// All planar graphs on `n` vertices up to isomorphism, grown by adding a
/// vertex of minimum degree.
pub fn planar_graphs(n: usize) -> Vec<Small> {
    let mut level = vec![Small { adj: vec![0] }];
    for k in 1..n {
        let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<Small>> = HashMap::new();
        for g in &level {
            for s in 0u16..(1 << k) {
                let d = s.count_ones() as usize;
                let mut adj = g.adj.clone();
                for (w, a) in adj.iter_mut().enumerate() {
                    if s >> w & 1 == 1 {
                        *a |= 1 << k;
                    }
                }
                adj.push(s);
                let h = Small { adj };
                if (0..k).any(|w| h.degree(w) < d) {
                    continue;
                }
                if k + 1 >= 3 && h.edges() > 3 * (k + 1) - 6 {
                    continue;
                }
                let bucket = buckets.entry(h.key()).or_default();
                if bucket.iter().any(|x| x.iso(&h)) {
                    continue;
                }
                if is_planar(&h.to_graph()) {
                    bucket.push(h);
                }
            }
        }
        level = buckets.into_values().flatten().collect();
    }
    level
}

/// Counts of maximal planar and of 3-connected planar graphs on `n` vertices.
pub fn oracle_counts(n: usize) -> (usize, usize) {
    let all = planar_graphs(n);
    let tri = all.iter().filter(|g| g.edges() == 3 * n - 6).count();
    let poly = all
        .iter()
        .filter(|g| g.to_graph().is_k_connected(3).unwrap())
        .count();
    (tri, poly)
}
