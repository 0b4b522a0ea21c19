//! Connected graphs embedded on the sphere, stored as rotation systems.
//!
//! A [`PlaneMap`] is built from darts (half-edges). Darts `2k` and `2k + 1`
//! are the two halves of edge `k`, so `twin(d) = d ^ 1` and the id of an edge
//! is the smaller of its two dart ids. `rot` sends a dart to the next dart
//! counterclockwise around its source vertex. Faces are the orbits of
//! `face_next(d) = rot(twin(d))`.
//!
//! Maps are immutable once built. Every constructor checks connectivity and
//! the Euler identity `V - E + F = 2`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use thiserror::Error;

pub type Dart = usize;
pub type VertexId = usize;
pub type FaceId = usize;
/// The smaller of the two dart ids of an edge (always even).
pub type EdgeId = usize;

#[inline]
pub fn twin(d: Dart) -> Dart {
    d ^ 1
}

#[inline]
pub fn edge_of(d: Dart) -> EdgeId {
    d & !1
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("vertex {vertex} lists neighbor {neighbor}, which does not list it back the same number of times")]
    NonSymmetricAdjacency { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {vertex} lists neighbor {neighbor} more than once")]
    DuplicateNeighbor { vertex: VertexId, neighbor: VertexId },
    #[error("vertex {vertex} lists itself as a neighbor")]
    SelfLoop { vertex: VertexId },
    #[error("vertex {vertex} lists neighbor {neighbor}, which is out of range")]
    NeighborOutOfRange { vertex: VertexId, neighbor: VertexId },
    #[error("not a spherical embedding: V - E + F = {vertices} - {edges} + {faces} != 2")]
    NotSpherical {
        vertices: usize,
        edges: usize,
        faces: usize,
    },
    #[error("the map is not connected")]
    Disconnected,
    #[error("a map needs at least one edge")]
    Empty,
    #[error("invalid dart rotation: {0}")]
    InvalidDarts(String),
    #[error("deleting the requested edges disconnects the map")]
    Disconnects,
    #[error("edge id {0} does not exist")]
    UnknownEdge(EdgeId),
    #[error("face walks do not describe a simple spherical map: {0}")]
    InvalidFaceWalks(String),
}

/// Face-length statistics of a map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FaceProfile {
    /// `f_i`: number of faces of length `i`.
    pub f_by_length: BTreeMap<usize, usize>,
    /// `q_{i,j}` for `i <= j`: number of edges with an `i`-face on one side and a `j`-face on the other.
    pub q_by_pair: BTreeMap<(usize, usize), usize>,
    pub odd_faces: BTreeSet<FaceId>,
    pub edge_count: usize,
    pub vertex_count: usize,
}

impl FaceProfile {
    pub fn f(&self, len: usize) -> usize {
        self.f_by_length.get(&len).copied().unwrap_or(0)
    }

    pub fn q(&self, i: usize, j: usize) -> usize {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.q_by_pair.get(&key).copied().unwrap_or(0)
    }

    pub fn face_count(&self) -> usize {
        self.f_by_length.values().sum()
    }

    pub fn max_face_length(&self) -> usize {
        self.f_by_length.keys().next_back().copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneMap {
    vertex_count: usize,
    rot: Vec<Dart>,
    rot_inv: Vec<Dart>,
    vertex_of: Vec<VertexId>,
    first_dart: Vec<Dart>,
    face_of: Vec<FaceId>,
    face_start: Vec<Dart>,
    face_len: Vec<usize>,
    simple: bool,
}

impl PlaneMap {
    /// Builds a map from per-vertex dart rotations.
    ///
    /// `rotations[v]` lists the darts leaving `v` in counterclockwise order.
    /// Every dart `0..2E` must appear exactly once overall.
    pub fn from_dart_rotations(rotations: &[Vec<Dart>]) -> Result<Self, MapError> {
        let vertex_count = rotations.len();
        let dart_count: usize = rotations.iter().map(Vec::len).sum();
        if dart_count == 0 {
            return Err(MapError::Empty);
        }
        if !dart_count.is_multiple_of(2) {
            return Err(MapError::InvalidDarts(format!(
                "odd number of darts ({dart_count})"
            )));
        }
        const UNSET: usize = usize::MAX;
        let mut rot = vec![UNSET; dart_count];
        let mut rot_inv = vec![UNSET; dart_count];
        let mut vertex_of = vec![UNSET; dart_count];
        let mut first_dart = Vec::with_capacity(vertex_count);
        for (v, darts) in rotations.iter().enumerate() {
            if darts.is_empty() {
                return Err(MapError::Disconnected);
            }
            first_dart.push(darts[0]);
            for (i, &d) in darts.iter().enumerate() {
                if d >= dart_count {
                    return Err(MapError::InvalidDarts(format!("dart {d} out of range")));
                }
                if vertex_of[d] != UNSET {
                    return Err(MapError::InvalidDarts(format!("dart {d} listed twice")));
                }
                vertex_of[d] = v;
                let next = darts[(i + 1) % darts.len()];
                rot[d] = next;
            }
        }
        for d in 0..dart_count {
            rot_inv[rot[d]] = d;
        }

        // connectivity over vertices
        let mut seen = vec![false; vertex_count];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &d in &rotations[v] {
                let w = vertex_of[twin(d)];
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        if reached != vertex_count {
            return Err(MapError::Disconnected);
        }

        let mut face_of = vec![UNSET; dart_count];
        let mut face_start = Vec::new();
        let mut face_len = Vec::new();
        for start in 0..dart_count {
            if face_of[start] != UNSET {
                continue;
            }
            let id = face_start.len();
            let mut d = start;
            let mut len = 0;
            loop {
                face_of[d] = id;
                len += 1;
                d = rot[twin(d)];
                if d == start {
                    break;
                }
            }
            face_start.push(start);
            face_len.push(len);
        }

        let edges = dart_count / 2;
        let faces = face_start.len();
        if vertex_count + faces != edges + 2 {
            return Err(MapError::NotSpherical {
                vertices: vertex_count,
                edges,
                faces,
            });
        }

        let mut simple = true;
        let mut pairs = BTreeSet::new();
        for e in (0..dart_count).step_by(2) {
            let (u, v) = (vertex_of[e], vertex_of[e + 1]);
            if u == v || !pairs.insert((u.min(v), u.max(v))) {
                simple = false;
                break;
            }
        }

        Ok(Self {
            vertex_count,
            rot,
            rot_inv,
            vertex_of,
            first_dart,
            face_of,
            face_start,
            face_len,
            simple,
        })
    }

    /// Builds a simple map from per-vertex neighbor lists in counterclockwise order.
    pub fn build_from_rotation(neighbors: &[Vec<VertexId>]) -> Result<Self, MapError> {
        let n = neighbors.len();
        for (v, list) in neighbors.iter().enumerate() {
            let mut seen = BTreeSet::new();
            for &w in list {
                if w >= n {
                    return Err(MapError::NeighborOutOfRange {
                        vertex: v,
                        neighbor: w,
                    });
                }
                if w == v {
                    return Err(MapError::SelfLoop { vertex: v });
                }
                if !seen.insert(w) {
                    return Err(MapError::DuplicateNeighbor {
                        vertex: v,
                        neighbor: w,
                    });
                }
            }
        }
        let mut dart_of: HashMap<(VertexId, VertexId), Dart> = HashMap::new();
        let mut next_edge = 0;
        for (v, list) in neighbors.iter().enumerate() {
            for &w in list {
                if v < w {
                    if !neighbors[w].contains(&v) {
                        return Err(MapError::NonSymmetricAdjacency {
                            vertex: v,
                            neighbor: w,
                        });
                    }
                    dart_of.insert((v, w), 2 * next_edge);
                    dart_of.insert((w, v), 2 * next_edge + 1);
                    next_edge += 1;
                } else if !neighbors[w].contains(&v) {
                    return Err(MapError::NonSymmetricAdjacency {
                        vertex: v,
                        neighbor: w,
                    });
                }
            }
        }
        let rotations: Vec<Vec<Dart>> = neighbors
            .iter()
            .enumerate()
            .map(|(v, list)| list.iter().map(|&w| dart_of[&(v, w)]).collect())
            .collect();
        Self::from_dart_rotations(&rotations)
    }

    /// Builds a simple map from its oriented face walks.
    ///
    /// Each walk lists vertices in face-traversal order; every directed edge
    /// must occur in exactly one walk.
    pub fn from_face_walks(vertex_count: usize, walks: &[Vec<VertexId>]) -> Result<Self, MapError> {
        // walk x -> v -> y means y follows x in the rotation at v
        let mut next_at: Vec<BTreeMap<VertexId, VertexId>> = vec![BTreeMap::new(); vertex_count];
        for walk in walks {
            let len = walk.len();
            if len < 3 {
                return Err(MapError::InvalidFaceWalks(format!("walk {walk:?} too short")));
            }
            for i in 0..len {
                let x = walk[(i + len - 1) % len];
                let v = walk[i];
                let y = walk[(i + 1) % len];
                if v >= vertex_count || x >= vertex_count || y >= vertex_count {
                    return Err(MapError::InvalidFaceWalks(format!("vertex out of range in {walk:?}")));
                }
                if next_at[v].insert(x, y).is_some() {
                    return Err(MapError::InvalidFaceWalks(format!(
                        "directed edge {x}->{v} used twice"
                    )));
                }
            }
        }
        let mut neighbors = Vec::with_capacity(vertex_count);
        for (v, next) in next_at.iter().enumerate() {
            let Some((&start, _)) = next.iter().next() else {
                return Err(MapError::Disconnected);
            };
            let mut list = vec![start];
            let mut cur = start;
            loop {
                let Some(&nx) = next.get(&cur) else {
                    return Err(MapError::InvalidFaceWalks(format!(
                        "rotation at {v} is not closed"
                    )));
                };
                if nx == start {
                    break;
                }
                if list.len() > next.len() {
                    return Err(MapError::InvalidFaceWalks(format!("rotation at {v} loops")));
                }
                list.push(nx);
                cur = nx;
            }
            if list.len() != next.len() {
                return Err(MapError::InvalidFaceWalks(format!(
                    "rotation at {v} splits into several cycles"
                )));
            }
            neighbors.push(list);
        }
        Self::build_from_rotation(&neighbors)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.rot.len() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.rot.len()
    }

    pub fn face_count(&self) -> usize {
        self.face_start.len()
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    #[inline]
    pub fn rot(&self, d: Dart) -> Dart {
        self.rot[d]
    }

    #[inline]
    pub fn rot_inv(&self, d: Dart) -> Dart {
        self.rot_inv[d]
    }

    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.rot[twin(d)]
    }

    #[inline]
    pub fn face_prev(&self, d: Dart) -> Dart {
        twin(self.rot_inv[d])
    }

    #[inline]
    pub fn tail(&self, d: Dart) -> VertexId {
        self.vertex_of[d]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> VertexId {
        self.vertex_of[twin(d)]
    }

    #[inline]
    pub fn face_of(&self, d: Dart) -> FaceId {
        self.face_of[d]
    }

    pub fn face_len(&self, f: FaceId) -> usize {
        self.face_len[f]
    }

    pub fn first_dart(&self, v: VertexId) -> Dart {
        self.first_dart[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.darts_around(v).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Darts leaving `v`, counterclockwise, starting at [`Self::first_dart`].
    pub fn darts_around(&self, v: VertexId) -> impl Iterator<Item = Dart> + '_ {
        let start = self.first_dart[v];
        let mut cur = Some(start);
        std::iter::from_fn(move || {
            let d = cur?;
            let next = self.rot[d];
            cur = if next == start { None } else { Some(next) };
            Some(d)
        })
    }

    /// Neighbors of `v` in counterclockwise order.
    pub fn neighbors_ccw(&self, v: VertexId) -> Vec<VertexId> {
        self.darts_around(v).map(|d| self.head(d)).collect()
    }

    /// Per-vertex counterclockwise neighbor lists; the inverse of [`Self::build_from_rotation`].
    pub fn rotation_lists(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count).map(|v| self.neighbors_ccw(v)).collect()
    }

    /// Darts of face `f` in traversal order.
    pub fn face_darts(&self, f: FaceId) -> Vec<Dart> {
        let start = self.face_start[f];
        let mut out = Vec::with_capacity(self.face_len[f]);
        let mut d = start;
        loop {
            out.push(d);
            d = self.face_next(d);
            if d == start {
                break;
            }
        }
        out
    }

    /// Vertex sequence of face `f`.
    pub fn face_walk(&self, f: FaceId) -> Vec<VertexId> {
        self.face_darts(f).into_iter().map(|d| self.tail(d)).collect()
    }

    /// All facial walks, indexed by face id.
    pub fn faces(&self) -> Vec<Vec<VertexId>> {
        (0..self.face_count()).map(|f| self.face_walk(f)).collect()
    }

    /// Edge list as `(tail, head)` of the even dart, in edge-id order.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        (0..self.dart_count())
            .step_by(2)
            .map(|d| (self.tail(d), self.head(d)))
            .collect()
    }

    /// The dart from `u` to `v`, if the edge exists.
    pub fn dart_between(&self, u: VertexId, v: VertexId) -> Option<Dart> {
        if u >= self.vertex_count {
            return None;
        }
        self.darts_around(u).find(|&d| self.head(d) == v)
    }

    /// The two faces on either side of an edge.
    pub fn edge_faces(&self, e: EdgeId) -> (FaceId, FaceId) {
        (self.face_of[e], self.face_of[twin(e)])
    }

    /// The dual map. Face `f` becomes vertex `f`; dart ids are kept.
    pub fn dual(&self) -> PlaneMap {
        let rotations: Vec<Vec<Dart>> = (0..self.face_count()).map(|f| self.face_darts(f)).collect();
        Self::from_dart_rotations(&rotations).expect("dual of a spherical map is spherical")
    }

    /// The mirror image: every rotation reversed.
    pub fn mirror(&self) -> PlaneMap {
        let rotations: Vec<Vec<Dart>> = (0..self.vertex_count)
            .map(|v| {
                let mut ds: Vec<Dart> = self.darts_around(v).collect();
                ds.reverse();
                ds
            })
            .collect();
        Self::from_dart_rotations(&rotations).expect("mirror of a spherical map is spherical")
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[VertexId]) -> PlaneMap {
        assert_eq!(perm.len(), self.vertex_count, "permutation length");
        let mut rotations = vec![Vec::new(); self.vertex_count];
        for v in 0..self.vertex_count {
            rotations[perm[v]] = self.darts_around(v).collect();
        }
        Self::from_dart_rotations(&rotations).expect("relabeling preserves the embedding")
    }

    /// Removes edges, keeping the rotation of every remaining dart.
    ///
    /// Surviving edges are renumbered densely in their original order; vertex
    /// ids are unchanged.
    pub fn delete_edges(&self, edges: &[EdgeId]) -> Result<PlaneMap, MapError> {
        Ok(self.delete_edges_traced(edges)?.0)
    }

    /// Like [`Self::delete_edges`], also reporting for each new face the old
    /// faces whose darts it inherited (the merged regions).
    pub fn delete_edges_traced(
        &self,
        edges: &[EdgeId],
    ) -> Result<(PlaneMap, Vec<BTreeSet<FaceId>>), MapError> {
        let mut deleted = vec![false; self.edge_count()];
        for &e in edges {
            if e % 2 != 0 || e >= self.dart_count() {
                return Err(MapError::UnknownEdge(e));
            }
            deleted[e / 2] = true;
        }
        let mut new_id = vec![usize::MAX; self.dart_count()];
        let mut next = 0;
        for k in 0..self.edge_count() {
            if !deleted[k] {
                new_id[2 * k] = 2 * next;
                new_id[2 * k + 1] = 2 * next + 1;
                next += 1;
            }
        }
        let mut rotations = Vec::with_capacity(self.vertex_count);
        for v in 0..self.vertex_count {
            let kept: Vec<Dart> = self
                .darts_around(v)
                .filter(|&d| !deleted[d / 2])
                .map(|d| new_id[d])
                .collect();
            if kept.is_empty() {
                return Err(MapError::Disconnects);
            }
            rotations.push(kept);
        }
        let map = match Self::from_dart_rotations(&rotations) {
            Ok(m) => m,
            Err(MapError::Disconnected) | Err(MapError::Empty) => return Err(MapError::Disconnects),
            Err(e) => return Err(e),
        };
        let mut old_of_new = vec![usize::MAX; map.dart_count()];
        for d in 0..self.dart_count() {
            if new_id[d] != usize::MAX {
                old_of_new[new_id[d]] = d;
            }
        }
        let merged = (0..map.face_count())
            .map(|f| {
                map.face_darts(f)
                    .into_iter()
                    .map(|d| self.face_of[old_of_new[d]])
                    .collect()
            })
            .collect();
        Ok((map, merged))
    }

    /// f-vector, edge-sharing counts and odd faces.
    pub fn face_profile(&self) -> FaceProfile {
        let mut profile = FaceProfile {
            edge_count: self.edge_count(),
            vertex_count: self.vertex_count,
            ..FaceProfile::default()
        };
        for f in 0..self.face_count() {
            let len = self.face_len[f];
            *profile.f_by_length.entry(len).or_default() += 1;
            if len % 2 == 1 {
                profile.odd_faces.insert(f);
            }
        }
        for e in (0..self.dart_count()).step_by(2) {
            let (f, g) = self.edge_faces(e);
            let (a, b) = (self.face_len[f], self.face_len[g]);
            *profile.q_by_pair.entry((a.min(b), a.max(b))).or_default() += 1;
        }
        profile
    }

    /// Faces adjacent to `f` across an edge, with multiplicity removed.
    pub fn adjacent_faces(&self, f: FaceId) -> BTreeSet<FaceId> {
        self.face_darts(f)
            .into_iter()
            .map(|d| self.face_of[twin(d)])
            .filter(|&g| g != f)
            .collect()
    }

    /// Locates the face whose walk contains `a -> b -> c` consecutively.
    pub fn face_with_corner(&self, a: VertexId, b: VertexId, c: VertexId) -> Option<FaceId> {
        let d = self.dart_between(a, b)?;
        let next = self.face_next(d);
        (self.head(next) == c).then(|| self.face_of[d])
    }

    pub fn is_bipartite(&self) -> bool {
        (0..self.face_count()).all(|f| self.face_len[f].is_multiple_of(2)) || {
            // faces of odd length can still occur in a bipartite graph only if
            // some face walk repeats a vertex; fall back to a colouring
            let mut colour = vec![u8::MAX; self.vertex_count];
            colour[0] = 0;
            let mut queue = VecDeque::from([0usize]);
            let mut ok = true;
            while let Some(v) = queue.pop_front() {
                for d in self.darts_around(v) {
                    let w = self.head(d);
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[v];
                        queue.push_back(w);
                    } else if colour[w] == colour[v] {
                        ok = false;
                    }
                }
            }
            ok
        }
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetrahedron() -> PlaneMap {
        PlaneMap::build_from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .unwrap()
    }

    fn cube() -> PlaneMap {
        // outer square 0..4, inner square 4..8
        PlaneMap::build_from_rotation(&[
            vec![1, 4, 3],
            vec![2, 5, 0],
            vec![3, 6, 1],
            vec![0, 7, 2],
            vec![0, 5, 7],
            vec![1, 6, 4],
            vec![2, 7, 5],
            vec![3, 4, 6],
        ])
        .unwrap()
    }

    #[test]
    fn tetrahedron_counts() {
        let m = tetrahedron();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (4, 6, 4));
        assert!(m.faces().iter().all(|w| w.len() == 3));
        assert!(m.is_simple());
    }

    #[test]
    fn cube_counts() {
        let m = cube();
        assert_eq!((m.vertex_count(), m.edge_count(), m.face_count()), (8, 12, 6));
        let p = m.face_profile();
        assert_eq!(p.f(4), 6);
        assert_eq!(p.q(4, 4), 12);
        assert!(p.odd_faces.is_empty());
    }

    #[test]
    fn triangle_has_two_faces() {
        let m = PlaneMap::build_from_rotation(&[vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(m.face_count(), 2);
        for w in m.faces() {
            let mut s = w.clone();
            s.sort();
            assert_eq!(s, vec![0, 1, 2]);
        }
    }

    #[test]
    fn asymmetric_adjacency_rejected() {
        let err = PlaneMap::build_from_rotation(&[vec![1, 2], vec![2], vec![0, 1]]).unwrap_err();
        assert_eq!(
            err,
            MapError::NonSymmetricAdjacency {
                vertex: 0,
                neighbor: 1
            }
        );
    }

    #[test]
    fn duplicate_and_loop_rejected() {
        assert!(matches!(
            PlaneMap::build_from_rotation(&[vec![1, 1], vec![0, 0]]),
            Err(MapError::DuplicateNeighbor { .. })
        ));
        assert!(matches!(
            PlaneMap::build_from_rotation(&[vec![0, 1], vec![0]]),
            Err(MapError::SelfLoop { vertex: 0 })
        ));
    }

    #[test]
    fn wrong_rotation_is_not_spherical() {
        // K4 with one rotation flipped lands on the torus
        let err = PlaneMap::build_from_rotation(&[
            vec![1, 3, 2],
            vec![0, 3, 2],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap_err();
        assert!(matches!(err, MapError::NotSpherical { .. }));
    }

    #[test]
    fn face_walks_partition_darts() {
        let m = cube();
        let total: usize = (0..m.face_count()).map(|f| m.face_len(f)).sum();
        assert_eq!(total, m.dart_count());
        let mut seen = vec![false; m.dart_count()];
        for f in 0..m.face_count() {
            for d in m.face_darts(f) {
                assert!(!seen[d]);
                seen[d] = true;
            }
        }
    }

    #[test]
    fn dual_of_dual_keeps_rotation() {
        let m = cube();
        let dd = m.dual().dual();
        assert_eq!(dd.vertex_count(), m.vertex_count());
        for d in 0..m.dart_count() {
            assert_eq!(dd.rot(d), m.rot(d));
        }
        let dual = m.dual();
        assert_eq!((dual.vertex_count(), dual.edge_count(), dual.face_count()), (6, 12, 8));
        assert!(dual.is_regular(4));
    }

    #[test]
    fn delete_one_cube_edge_merges_two_squares() {
        let m = cube();
        let (d, merged) = m.delete_edges_traced(&[0]).unwrap();
        assert_eq!(d.face_count(), 5);
        let hexagons: Vec<_> = (0..d.face_count()).filter(|&f| d.face_len(f) == 6).collect();
        assert_eq!(hexagons.len(), 1);
        assert_eq!(merged[hexagons[0]].len(), 2);
    }

    #[test]
    fn delete_opposite_tetrahedron_edges_gives_square() {
        let m = tetrahedron();
        // edges 0-1 and 2-3
        let e01 = edge_of(m.dart_between(0, 1).unwrap());
        let e23 = edge_of(m.dart_between(2, 3).unwrap());
        let d = m.delete_edges(&[e01, e23]).unwrap();
        assert_eq!(d.face_count(), 2);
        assert!(d.is_regular(2));
        assert_eq!(d.edge_count(), 4);
    }

    #[test]
    fn deleting_a_vertex_star_disconnects() {
        let m = tetrahedron();
        let star: Vec<EdgeId> = m.darts_around(0).map(edge_of).collect();
        assert_eq!(m.delete_edges(&star), Err(MapError::Disconnects));
    }

    #[test]
    fn face_walks_roundtrip() {
        let m = cube();
        let rebuilt = PlaneMap::from_face_walks(m.vertex_count(), &m.faces()).unwrap();
        let normal = |m: &PlaneMap| {
            m.rotation_lists()
                .into_iter()
                .map(|mut l| {
                    let k = (0..l.len()).min_by_key(|&i| l[i]).unwrap();
                    l.rotate_left(k);
                    l
                })
                .collect::<Vec<_>>()
        };
        assert_eq!(normal(&rebuilt), normal(&m));
    }
}
