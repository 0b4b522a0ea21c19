//! Common neighbourhood operators and related constructions.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{underlying_graph, Graph};
use crate::planemap::{edge_of, twin, Dart, EdgeId, FaceId, PlaneMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("the map is not 2-connected")]
    NotTwoConnected,
    #[error("the map is not a polyhedron")]
    NotPolyhedral,
    #[error("the map is not 3-regular")]
    NotCubic,
    #[error("the map is not simple")]
    NotSimple,
    #[error("no minimal pairing of odd faces yields a valid evenisation")]
    EvenisationFailed,
}

/// Graph on the same vertices joining pairs with a common neighbour.
pub fn con(g: &Graph) -> Graph {
    let p = g.vertex_count();
    let mut edges = BTreeSet::new();
    for w in 0..p {
        let n = g.neighbors(w);
        for (i, &u) in n.iter().enumerate() {
            for &v in &n[i + 1..] {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edge_set(p, edges)
}

/// Graph joining vertices at distance two along some facial walk.
pub fn facecon(m: &PlaneMap) -> Result<Graph, OperatorError> {
    if !m.is_simple() {
        return Err(OperatorError::NotSimple);
    }
    if !underlying_graph(m).is_k_connected(2).expect("k = 2 is supported") {
        return Err(OperatorError::NotTwoConnected);
    }
    Ok(facecon_unchecked(m))
}

/// [`facecon`] without the 2-connectivity check.
pub fn facecon_unchecked(m: &PlaneMap) -> Graph {
    let mut edges = BTreeSet::new();
    for walk in m.faces() {
        let k = walk.len();
        for i in 0..k {
            let (u, v) = (walk[i], walk[(i + 2) % k]);
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    Graph::from_edge_set(m.vertex_count(), edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum OddDualTag {
    Empty,
    K2bar,
    K2,
    K4,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddDualClass {
    pub tag: OddDualTag,
    pub odd_face_ids: BTreeSet<FaceId>,
}

/// The subgraph of the dual induced by odd faces (vertex `i` is the `i`-th
/// smallest odd face id) and its classification.
pub fn odd_dual(m: &PlaneMap) -> (Graph, OddDualClass) {
    let odd: Vec<FaceId> = (0..m.face_count()).filter(|&f| m.face_len(f) % 2 == 1).collect();
    let mut edges = BTreeSet::new();
    for e in (0..m.dart_count()).step_by(2) {
        let (f, g) = m.edge_faces(e);
        if f == g {
            continue;
        }
        if let (Ok(i), Ok(j)) = (odd.binary_search(&f), odd.binary_search(&g)) {
            edges.insert((i.min(j), i.max(j)));
        }
    }
    let graph = Graph::from_edge_set(odd.len(), edges);
    let e = graph.edge_count();
    let tag = match (odd.len(), e) {
        (0, _) => OddDualTag::Empty,
        (2, 0) => OddDualTag::K2bar,
        (2, 1) => OddDualTag::K2,
        (4, 6) => OddDualTag::K4,
        _ => OddDualTag::Other,
    };
    (
        graph,
        OddDualClass {
            tag,
            odd_face_ids: odd.into_iter().collect(),
        },
    )
}

fn is_polyhedral_map(m: &PlaneMap) -> bool {
    m.is_simple()
        && m.vertex_count() >= 4
        && underlying_graph(m).is_k_connected(3).expect("k = 3 is supported")
}

/// Predicted planarity of `con(G)` for a polyhedron `G`: cubic, and either
/// bipartite or with odd dual `K̄2` or `K4`.
pub fn predict_con_planar(m: &PlaneMap) -> Result<bool, OperatorError> {
    if !is_polyhedral_map(m) {
        return Err(OperatorError::NotPolyhedral);
    }
    if m.vertex_count() == 4 {
        // the tetrahedron: con(K4) = K4
        return Ok(true);
    }
    if !m.is_regular(3) {
        return Ok(false);
    }
    let (_, class) = odd_dual(m);
    Ok(matches!(
        class.tag,
        OddDualTag::Empty | OddDualTag::K2bar | OddDualTag::K4
    ))
}

/// Breadth-first distances in the dual from face `src`.
fn dual_distances(m: &PlaneMap, src: FaceId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; m.face_count()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(f) = queue.pop_front() {
        for g in m.adjacent_faces(f) {
            if dist[g] == usize::MAX {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
        }
    }
    dist
}

/// Shortest dual path from `a` to `b`, stepping to the smallest face id on
/// each tie.
fn dual_path(m: &PlaneMap, a: FaceId, b: FaceId, dist_to_b: &[usize]) -> Vec<FaceId> {
    let mut path = vec![a];
    let mut cur = a;
    while cur != b {
        cur = m
            .adjacent_faces(cur)
            .into_iter()
            .find(|&g| dist_to_b[g] + 1 == dist_to_b[cur])
            .expect("dual is connected");
        path.push(cur);
    }
    path
}

/// The edge shared by two adjacent faces (smallest id if several).
fn shared_edge(m: &PlaneMap, f: FaceId, g: FaceId) -> EdgeId {
    m.face_darts(f)
        .into_iter()
        .filter(|&d| m.face_of(twin(d)) == g)
        .map(edge_of)
        .min()
        .expect("faces are adjacent")
}

/// Perfect pairings of `items` in lexicographic order.
fn pairings(items: &[usize]) -> Vec<Vec<(usize, usize)>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let first = items[0];
    let mut out = Vec::new();
    for i in 1..items.len() {
        let rest: Vec<usize> = items[1..]
            .iter()
            .enumerate()
            .filter(|&(j, _)| j + 1 != i)
            .map(|(_, &x)| x)
            .collect();
        for mut tail in pairings(&rest) {
            tail.insert(0, (first, items[i]));
            out.push(tail);
        }
    }
    out
}

/// The evenisation of a cubic polyhedron: odd faces are paired at minimal
/// total dual distance and the edges crossed by shortest dual paths between
/// partners are deleted.
pub fn evenise(m: &PlaneMap) -> Result<PlaneMap, OperatorError> {
    if !is_polyhedral_map(m) {
        return Err(OperatorError::NotPolyhedral);
    }
    if !m.is_regular(3) {
        return Err(OperatorError::NotCubic);
    }
    let odd: Vec<FaceId> = (0..m.face_count()).filter(|&f| m.face_len(f) % 2 == 1).collect();
    if odd.is_empty() {
        return Ok(m.clone());
    }
    let dist: Vec<Vec<usize>> = (0..m.face_count()).map(|f| dual_distances(m, f)).collect();
    let all = pairings(&odd);
    let cost = |p: &Vec<(usize, usize)>| p.iter().map(|&(a, b)| dist[a][b]).sum::<usize>();
    let best = all.iter().map(cost).min().expect("odd face count is even");
    for pairing in all.iter().filter(|p| cost(p) == best) {
        if let Some(out) = try_pairing(m, pairing, &dist) {
            return Ok(out);
        }
    }
    Err(OperatorError::EvenisationFailed)
}

fn try_pairing(m: &PlaneMap, pairing: &[(FaceId, FaceId)], dist: &[Vec<usize>]) -> Option<PlaneMap> {
    let mut deleted: Vec<EdgeId> = Vec::new();
    let mut dual_edges: BTreeSet<(FaceId, FaceId)> = BTreeSet::new();
    for &(a, b) in pairing {
        let path = dual_path(m, a, b, &dist[b]);
        for w in path.windows(2) {
            if !dual_edges.insert((w[0].min(w[1]), w[0].max(w[1]))) {
                return None;
            }
            deleted.push(shared_edge(m, w[0], w[1]));
        }
    }
    if !is_forest(m.face_count(), &dual_edges) {
        return None;
    }
    let out = m.delete_edges(&deleted).ok()?;
    let g = underlying_graph(&out);
    let ok = g.vertex_count() == m.vertex_count()
        && g.is_bipartite()
        && g.is_k_connected(2).expect("k = 2 is supported");
    ok.then_some(out)
}

fn is_forest(n: usize, edges: &BTreeSet<(usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

fn require_two_connected_simple(m: &PlaneMap) -> Result<(), OperatorError> {
    if !m.is_simple() {
        return Err(OperatorError::NotSimple);
    }
    if !underlying_graph(m).is_k_connected(2).expect("k = 2 is supported") {
        return Err(OperatorError::NotTwoConnected);
    }
    Ok(())
}

/// Vertex-face incidence map. Vertices `0..V` are the vertices of `m`,
/// `V + f` is face `f`.
pub fn radial(m: &PlaneMap) -> Result<PlaneMap, OperatorError> {
    require_two_connected_simple(m)?;
    let v = m.vertex_count();
    // radial edge per dart d: dart 2d at tail(d), dart 2d + 1 at face(d)
    let mut rotations: Vec<Vec<Dart>> = (0..v)
        .map(|x| m.darts_around(x).map(|d| 2 * d).collect())
        .collect();
    for f in 0..m.face_count() {
        let mut ds: Vec<Dart> = m.face_darts(f).into_iter().map(|d| 2 * d + 1).collect();
        ds.reverse();
        rotations.push(ds);
    }
    Ok(PlaneMap::from_dart_rotations(&rotations).expect("radial map is spherical"))
}

/// Medial map: one vertex per edge (vertex `k` is edge id `2k`), one edge per
/// corner of a face.
pub fn medial(m: &PlaneMap) -> Result<PlaneMap, OperatorError> {
    require_two_connected_simple(m)?;
    // corner at dart c joins edge(face_prev(c)) and edge(c):
    // dart 2c sits at edge(c), dart 2c + 1 at edge(face_prev(c))
    let rotations: Vec<Vec<Dart>> = (0..m.edge_count())
        .map(|k| {
            let d = 2 * k;
            let t = d + 1;
            vec![2 * d, 2 * m.face_next(d) + 1, 2 * t, 2 * m.face_next(t) + 1]
        })
        .collect();
    Ok(PlaneMap::from_dart_rotations(&rotations).expect("medial map is spherical"))
}
