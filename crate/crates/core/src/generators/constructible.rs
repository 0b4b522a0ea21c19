//! Breadth-first closure of the T1/T2/T3 steps from the K3 seed.
//!
//! States are identified by their mirror-inclusive canonical code together
//! with the red faces; a state is expanded once. Steps only add vertices, so
//! states are processed level by level in vertex count. Emitted maps are
//! deduplicated by plain canonical code; the first script found wins.
//!
//! T3 payloads are restricted to irreducible triangulations (K4 and those
//! without separating triangles). A reducible payload splits along a
//! separating triangle into two T3 steps, so nothing is lost.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_code, canonical_code_marked_sets, canonical_code_marked_tuple, Symmetry};
use crate::generators::enumerate::enumerate_triangulations;
use crate::generators::transform::{apply_transform, Payload, TransformState, TransformStep};
use crate::graph::underlying_graph;
use crate::planemap::PlaneMap;

/// A constructible polyhedron with a witnessing script.
#[derive(Clone, Debug)]
pub struct Constructible {
    pub code: Vec<u8>,
    pub state: TransformState,
}

/// Every polyhedron on at most `max_vertices` vertices reachable from K3,
/// sorted by canonical code.
pub fn enumerate_constructible(max_vertices: usize) -> Vec<Constructible> {
    let payloads = payload_variants(max_vertices);
    let mut levels: Vec<Vec<TransformState>> = vec![Vec::new(); max_vertices + 1];
    if max_vertices >= 3 {
        levels[3].push(TransformState::seed());
    }
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut emitted: HashSet<Vec<u8>> = HashSet::new();
    let mut out = Vec::new();
    for n in 3..=max_vertices {
        let nodes = std::mem::take(&mut levels[n]);
        let children: Vec<Vec<(Vec<u8>, TransformState)>> = nodes
            .par_iter()
            .map(|s| {
                expand(s, &payloads, max_vertices)
                    .into_iter()
                    .map(|c| (state_key(&c), c))
                    .collect()
            })
            .collect();
        for (key, child) in children.into_iter().flatten() {
            if seen.insert(key) {
                let k = child.map.vertex_count();
                levels[k].push(child);
            }
        }
        if n >= 4 {
            let codes: Vec<Vec<u8>> = nodes.par_iter().map(|s| canonical_code(&s.map)).collect();
            for (code, state) in codes.into_iter().zip(nodes) {
                if emitted.insert(code.clone()) {
                    out.push(Constructible { code, state });
                }
            }
        }
    }
    out.sort_by(|a, b| a.code.cmp(&b.code));
    out
}

fn state_key(s: &TransformState) -> Vec<u8> {
    let red: Vec<Vec<usize>> = s.red_faces.iter().map(|f| f.to_vec()).collect();
    canonical_code_marked_sets(&s.map, Symmetry::WithMirror, &red)
}

/// All legal steps from `s` that stay within the vertex bound.
fn expand(s: &TransformState, payloads: &[Payload], max_vertices: usize) -> Vec<TransformState> {
    let m = &s.map;
    let n = m.vertex_count();
    let mut out = Vec::new();
    for f in 0..m.face_count() {
        if m.face_len(f) != 3 {
            continue;
        }
        let w = m.face_walk(f);
        let face = [w[0], w[1], w[2]];
        if s.is_red(&face) {
            continue;
        }
        if n + 3 <= max_vertices {
            if let Ok(t) = apply_transform(s, &TransformStep::t1(face)) {
                out.push(t);
            }
        }
        if n + 4 <= max_vertices {
            for r in 0..3 {
                let rotated = [face[r], face[(r + 1) % 3], face[(r + 2) % 3]];
                if let Ok(t) = apply_transform(s, &TransformStep::t2(rotated)) {
                    out.push(t);
                }
            }
        }
        for p in payloads.iter().filter(|p| n + p.interior() <= max_vertices) {
            if let Ok(t) = apply_transform(s, &TransformStep::t3(face, p.clone())) {
                out.push(t);
            }
        }
    }
    out
}

/// K4, or a triangulation in which every 3-cycle bounds a face.
pub fn is_irreducible(m: &PlaneMap) -> bool {
    if m.vertex_count() == 4 {
        return true;
    }
    let g = underlying_graph(m);
    let mut triangles = 0;
    for (u, v) in g.edges() {
        triangles += g
            .neighbors(u)
            .iter()
            .filter(|&&w| w > v && g.has_edge(v, w))
            .count();
    }
    triangles == m.face_count()
}

/// Irreducible payloads with every marked face and role assignment, up to
/// orientation-preserving symmetry.
pub fn payload_variants(max_vertices: usize) -> Vec<Payload> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for n in 4..=max_vertices {
        for t in enumerate_triangulations(n).into_iter().filter(is_irreducible) {
            for m in [t.mirror(), t] {
                for f in 0..m.face_count() {
                    let w = m.face_walk(f);
                    for r in 0..3 {
                        let marked = [w[r], w[(r + 1) % 3], w[(r + 2) % 3]];
                        if seen.insert(canonical_code_marked_tuple(&m, Symmetry::Oriented, &marked)) {
                            out.push(Payload::new(m.clone(), marked).expect("valid payload"));
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octahedron_has_one_payload_variant() {
        let all = payload_variants(6);
        // K4 once, octahedron once
        assert_eq!(all.len(), 2);
    }

    #[test]
    fn small_closure() {
        let out = enumerate_constructible(7);
        let quads = out.iter().filter(|c| c.state.map.face_profile().f(4) > 0).count();
        assert_eq!(out.len() - quads, 1 + 1 + 2 + 5);
        for c in &out {
            assert_eq!(c.state.map.edge_count() % 3, 0);
            let replayed = TransformState::replay(&c.state.script).unwrap();
            assert_eq!(canonical_code(&replayed.map), c.code);
        }
    }
}
