//! Planarity testing.
//!
//! The main test embeds each biconnected block with the path-addition
//! algorithm of Demoucron, Malgrange and Pertuiset and glues the block
//! rotations at cut vertices. [`is_planar_by_minors`] is a much slower,
//! independent check by Kuratowski minor search.

use std::collections::{BTreeMap, HashSet, VecDeque};

use crate::graph::Graph;

pub fn is_planar(g: &Graph) -> bool {
    let p = g.vertex_count();
    if p >= 3 && g.edge_count() > 3 * p - 6 {
        return false;
    }
    planar_rotation(g).is_some()
}

/// A planar rotation system (counterclockwise neighbour lists) if `g` is planar.
///
/// For connected `g` with at least one edge the result is accepted by
/// [`crate::planemap::PlaneMap::build_from_rotation`].
pub fn planar_rotation(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let p = g.vertex_count();
    if p >= 3 && g.edge_count() > 3 * p - 6 {
        return None;
    }
    let mut rotation = vec![Vec::new(); p];
    for block in biconnected_blocks(g) {
        let local = embed_block(&block)?;
        for (v, list) in local {
            rotation[v].extend(list);
        }
    }
    Some(rotation)
}

/// Edge sets of the biconnected blocks.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, parent, next neighbour index)
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut idx)) = frames.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&(u, _, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push(e);
                            if e == (u, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Embeds one block; returns the counterclockwise rotation of each of its vertices.
fn embed_block(block: &[(usize, usize)]) -> Option<BTreeMap<usize, Vec<usize>>> {
    let mut local: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    if block.len() == 1 {
        let (u, v) = block[0];
        local.insert(u, vec![v]);
        local.insert(v, vec![u]);
        return Some(local);
    }
    // adjacency restricted to the block
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(u, v) in block {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for list in adj.values_mut() {
        list.sort_unstable();
    }
    let vertices: Vec<usize> = adj.keys().copied().collect();

    let cycle = find_cycle(&adj, vertices[0]);
    let mut in_h: HashSet<usize> = cycle.iter().copied().collect();
    let mut h_edges: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        h_edges.insert((a.min(b), a.max(b)));
    }
    let mut reversed = cycle.clone();
    reversed.reverse();
    let mut faces: Vec<Vec<usize>> = vec![cycle, reversed];

    while h_edges.len() < block.len() {
        let fragments = fragments(&adj, &in_h, &h_edges);
        let mut chosen: Option<(usize, usize)> = None;
        for (i, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&f| frag.attachments.iter().all(|a| faces[f].contains(a)))
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    chosen = Some((i, admissible[0]));
                    break;
                }
                _ => {
                    if chosen.is_none() {
                        chosen = Some((i, admissible[0]));
                    }
                }
            }
        }
        let (fi, face) = chosen.expect("at least one fragment remains");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);
        for w in path.windows(2) {
            h_edges.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            in_h.insert(v);
        }
        let (f1, f2) = split_face(&faces[face], &path);
        faces[face] = f1;
        faces.push(f2);
    }

    // face walk x -> v -> y: y follows x counterclockwise at v
    let mut next_at: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for f in &faces {
        let k = f.len();
        for i in 0..k {
            let (x, v, y) = (f[(i + k - 1) % k], f[i], f[(i + 1) % k]);
            next_at.entry(v).or_default().insert(x, y);
        }
    }
    for (v, next) in next_at {
        let start = *next.keys().next().expect("block vertex has neighbours");
        let mut list = vec![start];
        let mut cur = next[&start];
        while cur != start {
            list.push(cur);
            cur = next[&cur];
        }
        local.insert(v, list);
    }
    Some(local)
}

fn find_cycle(adj: &BTreeMap<usize, Vec<usize>>, start: usize) -> Vec<usize> {
    // DFS until a back edge closes a cycle
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut depth: BTreeMap<usize, usize> = BTreeMap::new();
    let mut stack = vec![(start, 0usize)];
    depth.insert(start, 0);
    while let Some((v, idx)) = stack.pop() {
        let nbrs = &adj[&v];
        if idx >= nbrs.len() {
            continue;
        }
        stack.push((v, idx + 1));
        let w = nbrs[idx];
        if parent.get(&v) == Some(&w) {
            continue;
        }
        if let Some(&dw) = depth.get(&w) {
            if dw < depth[&v] {
                let mut cycle = vec![v];
                let mut cur = v;
                while cur != w {
                    cur = parent[&cur];
                    cycle.push(cur);
                }
                return cycle;
            }
            continue;
        }
        parent.insert(w, v);
        depth.insert(w, depth[&v] + 1);
        stack.push((w, 0));
    }
    unreachable!("a block with two or more edges contains a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// interior vertices (empty for a single chord)
    interior: Vec<usize>,
    chord: Option<(usize, usize)>,
}

fn fragments(
    adj: &BTreeMap<usize, Vec<usize>>,
    in_h: &HashSet<usize>,
    h_edges: &HashSet<(usize, usize)>,
) -> Vec<Fragment> {
    let mut out = Vec::new();
    for (&u, nbrs) in adj {
        if !in_h.contains(&u) {
            continue;
        }
        for &v in nbrs {
            if u < v && in_h.contains(&v) && !h_edges.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: vec![u, v],
                    interior: Vec::new(),
                    chord: Some((u, v)),
                });
            }
        }
    }
    let mut seen: HashSet<usize> = HashSet::new();
    for &s in adj.keys() {
        if in_h.contains(&s) || seen.contains(&s) {
            continue;
        }
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        seen.insert(s);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in &adj[&v] {
                if in_h.contains(&w) {
                    if !attachments.contains(&w) {
                        attachments.push(w);
                    }
                } else if seen.insert(w) {
                    interior.push(w);
                    queue.push_back(w);
                }
            }
        }
        attachments.sort_unstable();
        out.push(Fragment {
            attachments,
            interior,
            chord: None,
        });
    }
    out
}

/// A path through the fragment joining two distinct attachments.
fn fragment_path(adj: &BTreeMap<usize, Vec<usize>>, in_h: &HashSet<usize>, frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let inside: HashSet<usize> = frag.interior.iter().copied().collect();
    let a = frag.attachments[0];
    let s = *adj[&a]
        .iter()
        .find(|w| inside.contains(w))
        .expect("attachment touches the fragment");
    let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = VecDeque::from([s]);
    prev.insert(s, s);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[&v] {
            if in_h.contains(&w) && w != a {
                let mut path = vec![w, v];
                let mut cur = v;
                while cur != s {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.push(a);
                path.reverse();
                return path;
            }
            if inside.contains(&w) && !prev.contains_key(&w) {
                prev.insert(w, v);
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a block have at least two attachments")
}

/// Splits a face cycle along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let k = face.len();
    let a = path[0];
    let b = *path.last().unwrap();
    let i = face.iter().position(|&x| x == a).unwrap();
    let j = face.iter().position(|&x| x == b).unwrap();
    let interior = &path[1..path.len() - 1];
    let mut f1 = Vec::new();
    let mut t = i;
    loop {
        f1.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % k;
    }
    f1.extend(interior.iter().rev());
    let mut f2 = Vec::new();
    let mut t = j;
    loop {
        f2.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % k;
    }
    f2.extend(interior.iter());
    (f1, f2)
}

/// Planarity by exhaustive search for a K5 or K3,3 minor.
///
/// Exponential; intended for cross-checking on graphs of at most about
/// a dozen vertices.
pub fn is_planar_by_minors(g: &Graph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 64, "minor search is limited to 64 vertices");
    let masks: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut memo = HashSet::new();
    for comp in g.components() {
        let sub: Vec<u64> = comp
            .iter()
            .map(|&v| {
                let mut m = 0u64;
                for (i, &w) in comp.iter().enumerate() {
                    if masks[v] >> w & 1 == 1 {
                        m |= 1 << i;
                    }
                }
                m
            })
            .collect();
        if has_kuratowski_minor(sub, &mut memo) {
            return false;
        }
    }
    true
}

fn compact(adj: &[u64], alive: u64) -> Vec<u64> {
    let idx: Vec<usize> = (0..adj.len()).filter(|&v| alive >> v & 1 == 1).collect();
    idx.iter()
        .map(|&v| {
            let mut m = 0u64;
            for (i, &w) in idx.iter().enumerate() {
                if adj[v] >> w & 1 == 1 {
                    m |= 1 << i;
                }
            }
            m
        })
        .collect()
}

/// Removes vertices of degree <= 1 and suppresses vertices of degree 2.
fn reduce(mut adj: Vec<u64>) -> Vec<u64> {
    let n = adj.len();
    let mut alive: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    loop {
        let mut changed = false;
        for v in 0..n {
            if alive >> v & 1 == 0 {
                continue;
            }
            let d = adj[v].count_ones();
            if d <= 1 {
                if d == 1 {
                    let w = adj[v].trailing_zeros() as usize;
                    adj[w] &= !(1 << v);
                }
                adj[v] = 0;
                alive &= !(1 << v);
                changed = true;
            } else if d == 2 {
                let a = adj[v].trailing_zeros() as usize;
                let b = (adj[v] & !(1 << a)).trailing_zeros() as usize;
                adj[a] &= !(1 << v);
                adj[b] &= !(1 << v);
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
                adj[v] = 0;
                alive &= !(1 << v);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    compact(&adj, alive)
}

fn has_k33_subgraph(adj: &[u64]) -> bool {
    // adj has exactly six vertices; side A always contains vertex 0
    for a in 0u64..64 {
        if a & 1 == 0 || a.count_ones() != 3 {
            continue;
        }
        let b = !a & 0b111111;
        if (0..6).filter(|v| a >> v & 1 == 1).all(|v| adj[v] & b == b) {
            return true;
        }
    }
    false
}

fn has_kuratowski_minor(adj: Vec<u64>, memo: &mut HashSet<Vec<u64>>) -> bool {
    let adj = reduce(adj);
    let n = adj.len();
    if n < 5 {
        return false;
    }
    let m: u32 = adj.iter().map(|x| x.count_ones()).sum::<u32>() / 2;
    if m as usize > 3 * n - 6 {
        return true;
    }
    if n == 5 {
        return m == 10;
    }
    if n == 6 && has_k33_subgraph(&adj) {
        return true;
    }
    if !memo.insert(adj.clone()) {
        return false;
    }
    for u in 0..n {
        let mut rest = adj[u] & !((1u64 << (u + 1)) - 1);
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // contract v into u
            let mut next = adj.clone();
            let merged = (next[u] | next[v]) & !(1 << u) & !(1 << v);
            for (w, row) in next.iter_mut().enumerate().take(n) {
                if *row >> v & 1 == 1 {
                    *row &= !(1 << v);
                    if w != u {
                        *row |= 1 << u;
                    }
                }
            }
            next[u] = merged;
            next[v] = 0;
            let alive = ((1u64 << n) - 1) & !(1 << v);
            if has_kuratowski_minor(compact(&next, alive), memo) {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planemap::PlaneMap;

    #[test]
    fn small_cases() {
        assert!(!is_planar(&Graph::complete(5)));
        assert!(is_planar(&Graph::complete(4)));
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar(&Graph::complete_bipartite(2, 7)));
        assert!(is_planar(&Graph::complete(4).disjoint_union(&Graph::complete(4))));
    }

    #[test]
    fn witness_builds_map() {
        for g in [Graph::complete(4), Graph::complete_bipartite(2, 4), Graph::cycle(6)] {
            let rot = planar_rotation(&g).unwrap();
            let m = PlaneMap::build_from_rotation(&rot).unwrap();
            assert_eq!(m.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn cut_vertices_glue() {
        // two triangles sharing vertex 0, plus a pendant edge
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (4, 5)]).unwrap();
        let rot = planar_rotation(&g).unwrap();
        let m = PlaneMap::build_from_rotation(&rot).unwrap();
        assert_eq!(m.face_count(), 3);
    }

    #[test]
    fn petersen_is_not_planar() {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, &edges).unwrap();
        assert!(!is_planar(&g));
        assert!(!is_planar_by_minors(&g));
    }

    #[test]
    fn minors_agree_on_classics() {
        assert!(!is_planar_by_minors(&Graph::complete(5)));
        assert!(!is_planar_by_minors(&Graph::complete_bipartite(3, 3)));
        assert!(is_planar_by_minors(&Graph::complete(4)));
        assert!(is_planar_by_minors(&Graph::cycle(7)));
    }
}
