//! Isomorph-free enumeration of triangulations and polyhedra.
//!
//! Triangulations grow from K4 by vertex splitting. Polyhedra are obtained
//! from the triangulations on the same vertex set by repeatedly deleting
//! edges while 3-connectivity survives. Both are deduplicated by canonical
//! code and returned in canonical form, sorted by code.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canon::{canonical_code, decode_code};
use crate::graph::underlying_graph;
use crate::planemap::{edge_of, PlaneMap};

/// All triangulations of the sphere on `n >= 4` vertices, one per isomorphism class.
pub fn enumerate_triangulations(n: usize) -> Vec<PlaneMap> {
    assert!(n >= 4, "triangulations need at least 4 vertices");
    decode_all(&triangulation_codes(n))
}

/// Sorted canonical codes of the triangulations on `n` vertices.
pub fn triangulation_codes(n: usize) -> Vec<Vec<u8>> {
    let k4 = PlaneMap::build_from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
        .expect("K4");
    let mut level = vec![canonical_code(&k4)];
    for _ in 4..n {
        let parents = decode_all(&level);
        let mut next: Vec<Vec<u8>> = parents
            .par_iter()
            .flat_map_iter(|m| {
                let mut local: Vec<Vec<u8>> = vertex_splits(m).iter().map(canonical_code).collect();
                local.sort_unstable();
                local.dedup();
                local
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    level
}

fn decode_all(codes: &[Vec<u8>]) -> Vec<PlaneMap> {
    codes
        .par_iter()
        .map(|c| decode_code(c).expect("stored codes decode"))
        .collect()
}

/// Every triangulation obtained by splitting one vertex of `m` in two.
///
/// Splitting `v` with counterclockwise neighbours `n_0..n_{d-1}` at `i < j`
/// gives `v1` the arc `n_i..n_j` and `v2` the arc `n_j..n_i`; both become
/// adjacent and gain `n_i`, `n_j` as common neighbours.
pub fn vertex_splits(m: &PlaneMap) -> Vec<PlaneMap> {
    let rot = m.rotation_lists();
    let n = rot.len();
    let mut out = Vec::new();
    for v in 0..n {
        let d = rot[v].len();
        for i in 0..d {
            for j in i + 1..d {
                let a = rot[v][i];
                let b = rot[v][j];
                let v1 = v;
                let v2 = n;
                let mut next = rot.clone();
                let mut l1: Vec<usize> = rot[v][i..=j].to_vec();
                l1.push(v2);
                let mut l2: Vec<usize> = rot[v][j..].iter().chain(&rot[v][..=i]).copied().collect();
                l2.push(v1);
                next[v1] = l1;
                next.push(l2);
                for (k, &w) in rot[v].iter().enumerate() {
                    let pos = rot[w].iter().position(|&x| x == v).expect("symmetric");
                    let list = &mut next[w];
                    if w == a {
                        list.splice(pos..=pos, [v1, v2]);
                    } else if w == b {
                        list.splice(pos..=pos, [v2, v1]);
                    } else if k > i && k < j {
                        list[pos] = v1;
                    } else {
                        list[pos] = v2;
                    }
                }
                out.push(PlaneMap::build_from_rotation(&next).expect("vertex split keeps the sphere"));
            }
        }
    }
    out
}

/// All polyhedra (3-connected planar graphs) on `n >= 4` vertices.
pub fn enumerate_polyhedra(n: usize) -> Vec<PlaneMap> {
    decode_all(&polyhedron_codes(n))
}

/// Sorted canonical codes of the polyhedra on `n` vertices.
pub fn polyhedron_codes(n: usize) -> Vec<Vec<u8>> {
    let mut all: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut level = triangulation_codes(n);
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let maps = decode_all(&level);
        let mut next: Vec<Vec<u8>> = maps
            .par_iter()
            .flat_map_iter(|m| {
                let mut local: Vec<Vec<u8>> = (0..m.dart_count())
                    .step_by(2)
                    .filter(|&e| m.degree(m.tail(e)) > 3 && m.degree(m.head(e)) > 3)
                    .filter_map(|e| {
                        let smaller = m.delete_edges(&[edge_of(e)]).ok()?;
                        underlying_graph(&smaller)
                            .is_k_connected(3)
                            .expect("k = 3 is supported")
                            .then(|| canonical_code(&smaller))
                    })
                    .collect();
                local.sort_unstable();
                local.dedup();
                local
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        level = next;
    }
    all.into_iter().collect()
}
