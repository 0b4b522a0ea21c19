//! Graph isomorphism for small graphs: colour refinement plus backtracking.

use std::collections::BTreeMap;

use crate::graph::Graph;

/// Exact isomorphism test.
pub fn isomorphic(g1: &Graph, g2: &Graph) -> bool {
    find_isomorphism(g1, g2).is_some()
}

/// A bijection `phi` with `uv ∈ E(g1) ⇔ phi[u]phi[v] ∈ E(g2)`, if any.
pub fn find_isomorphism(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let union = g1.disjoint_union(g2);
    let colour = refine(&union);
    let (c1, c2) = colour.split_at(n);
    let mut h1: BTreeMap<usize, usize> = BTreeMap::new();
    let mut h2: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in c1 {
        *h1.entry(c).or_default() += 1;
    }
    for &c in c2 {
        *h2.entry(c).or_default() += 1;
    }
    if h1 != h2 {
        return None;
    }

    let order = search_order(g1, c1, &h1);
    let adj2: Vec<Vec<bool>> = (0..n)
        .map(|u| {
            let mut row = vec![false; n];
            for &w in g2.neighbors(u) {
                row[w] = true;
            }
            row
        })
        .collect();
    let mut phi = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if backtrack(0, &order, g1, &adj2, c1, c2, &mut phi, &mut used) {
        Some(phi)
    } else {
        None
    }
}

/// Stable 1-dimensional Weisfeiler-Leman colouring.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = count_distinct(&colour);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut s: Vec<usize> = g.neighbors(v).iter().map(|&w| colour[w]).collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| sorted.binary_search(s).expect("signature present"))
            .collect();
        let next_classes = count_distinct(&next);
        colour = next;
        if next_classes == classes {
            return colour;
        }
        classes = next_classes;
    }
}

fn count_distinct(c: &[usize]) -> usize {
    let mut v = c.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len()
}

/// Rarest colour first, then vertices adjacent to already ordered ones.
fn search_order(g: &Graph, colour: &[usize], hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut links = vec![0usize; n];
    while order.len() < n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], std::cmp::Reverse(hist[&colour[v]]), std::cmp::Reverse(v)))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    k: usize,
    order: &[usize],
    g1: &Graph,
    adj2: &[Vec<bool>],
    c1: &[usize],
    c2: &[usize],
    phi: &mut [usize],
    used: &mut [bool],
) -> bool {
    if k == order.len() {
        return true;
    }
    let u = order[k];
    'candidates: for t in 0..adj2.len() {
        if used[t] || c2[t] != c1[u] {
            continue;
        }
        // edges and non-edges to every mapped vertex must agree
        let mut mapped_nbrs = 0;
        for &w in g1.neighbors(u) {
            if phi[w] != usize::MAX {
                if !adj2[t][phi[w]] {
                    continue 'candidates;
                }
                mapped_nbrs += 1;
            }
        }
        let image_nbrs = (0..adj2.len())
            .filter(|&s| adj2[t][s] && used[s])
            .count();
        if image_nbrs != mapped_nbrs {
            continue;
        }
        phi[u] = t;
        used[t] = true;
        if backtrack(k + 1, order, g1, adj2, c1, c2, phi, used) {
            return true;
        }
        phi[u] = usize::MAX;
        used[t] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycle() {
        let g = Graph::cycle(7);
        let h = g.relabel(&[3, 6, 2, 0, 5, 1, 4]);
        let phi = find_isomorphism(&g, &h).unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(phi[u], phi[v]));
        }
    }

    #[test]
    fn prism_is_not_k33() {
        let prism = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
            .unwrap();
        assert!(!isomorphic(&prism, &Graph::complete_bipartite(3, 3)));
    }

    #[test]
    fn union_components_swapped() {
        let a = Graph::complete(4).disjoint_union(&Graph::cycle(4));
        let b = Graph::cycle(4).disjoint_union(&Graph::complete(4));
        assert!(isomorphic(&a, &b));
        let c = Graph::complete(4).disjoint_union(&Graph::complete(4));
        assert!(isomorphic(&c, &c.relabel(&[4, 5, 6, 7, 0, 1, 2, 3])));
    }

    #[test]
    fn regular_non_isomorphic() {
        // C6 vs two triangles: both 2-regular on 6 vertices
        let two_triangles = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(!isomorphic(&Graph::cycle(6), &two_triangles));
    }
}
