//! The face replacements T1, T2 and T3 with red-face bookkeeping.
//!
//! A step targets a triangular face given by its walk `[a, b, c]` in the
//! current map; the order of the triple fixes the roles of the vertices.
//!
//! * T1 inserts a triangle `u, v, w` with faces `[a,b,v,u]`, `[b,c,w,v]`,
//!   `[c,a,u,w]`, `[u,v,w]`.
//! * T2 inserts `x, p, q, r` with faces `[x,p,b,c]`, `[x,c,a,q]`,
//!   `[x,q,r,p]`, `[p,r,b]`, `[r,q,a]` and the red face `[b,r,a]`.
//! * T3 glues a triangulation into the face.

use std::sync::Arc;

use serde_json::{json, Value};
use thiserror::Error;

use crate::graph::underlying_graph;
use crate::planemap::{FaceId, MapError, PlaneMap, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("[{0}, {1}, {2}] is not a face walk of the map")]
    UnknownFace(VertexId, VertexId, VertexId),
    #[error("target face has length {0}, not 3")]
    NotTriangular(usize),
    #[error("target face is red")]
    RedTarget,
    #[error("edge {0}-{1} does not lie on a triangular face outside the target")]
    PreconditionTriangleMissing(VertexId, VertexId),
    #[error("invalid payload: {0}")]
    InvalidPayload(String),
    #[error("result is not 3-connected")]
    NotThreeConnected,
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    T1,
    T2,
    T3,
}

/// A triangulation with a marked face walk `[x, y, z]`. Gluing sends
/// `x -> a`, `y -> c`, `z -> b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Payload {
    pub map: Arc<PlaneMap>,
    pub marked: [VertexId; 3],
}

impl Payload {
    pub fn new(map: PlaneMap, marked: [VertexId; 3]) -> Result<Self, TransformError> {
        let p = Self {
            map: Arc::new(map),
            marked,
        };
        p.validate()?;
        Ok(p)
    }

    /// Interior vertex count.
    pub fn interior(&self) -> usize {
        self.map.vertex_count() - 3
    }

    fn validate(&self) -> Result<(), TransformError> {
        let m = &self.map;
        if m.vertex_count() < 4 {
            return Err(TransformError::InvalidPayload("fewer than 4 vertices".into()));
        }
        if !m.is_simple() || (0..m.face_count()).any(|f| m.face_len(f) != 3) {
            return Err(TransformError::InvalidPayload("not a triangulation".into()));
        }
        let [x, y, z] = self.marked;
        if m.face_with_corner(x, y, z).is_none() {
            return Err(TransformError::InvalidPayload(format!(
                "[{x}, {y}, {z}] is not a face walk"
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformStep {
    pub kind: StepKind,
    pub face: [VertexId; 3],
    pub payload: Option<Payload>,
}

impl TransformStep {
    pub fn t1(face: [VertexId; 3]) -> Self {
        Self {
            kind: StepKind::T1,
            face,
            payload: None,
        }
    }

    pub fn t2(face: [VertexId; 3]) -> Self {
        Self {
            kind: StepKind::T2,
            face,
            payload: None,
        }
    }

    pub fn t3(face: [VertexId; 3], payload: Payload) -> Self {
        Self {
            kind: StepKind::T3,
            face,
            payload: Some(payload),
        }
    }

    pub fn to_json(&self) -> Value {
        let kind = match self.kind {
            StepKind::T1 => "T1",
            StepKind::T2 => "T2",
            StepKind::T3 => "T3",
        };
        let mut v = json!({ "kind": kind, "face": self.face });
        if let Some(p) = &self.payload {
            v["payload"] = json!({ "rotation": p.map.rotation_lists(), "marked": p.marked });
        }
        v
    }
}

#[derive(Clone, Debug)]
pub struct TransformState {
    pub map: PlaneMap,
    /// Red faces as face walks of `map`.
    pub red_faces: Vec<[VertexId; 3]>,
    pub script: Vec<TransformStep>,
}

impl TransformState {
    /// K3 on the sphere: two triangular faces.
    pub fn seed() -> Self {
        Self {
            map: PlaneMap::build_from_rotation(&[vec![1, 2], vec![2, 0], vec![0, 1]]).expect("K3"),
            red_faces: Vec::new(),
            script: Vec::new(),
        }
    }

    pub fn is_red(&self, face: &[VertexId; 3]) -> bool {
        let mut key = *face;
        key.sort_unstable();
        self.red_faces.iter().any(|r| {
            let mut s = *r;
            s.sort_unstable();
            s == key
        })
    }

    pub fn certificate(&self) -> Value {
        json!({
            "seed": "K3",
            "steps": self.script.iter().map(TransformStep::to_json).collect::<Vec<_>>(),
        })
    }

    /// Replays a script from the seed.
    pub fn replay(script: &[TransformStep]) -> Result<Self, TransformError> {
        script
            .iter()
            .try_fold(Self::seed(), |s, step| apply_transform(&s, step))
    }
}

fn face_of_walk(m: &PlaneMap, [a, b, c]: [VertexId; 3]) -> Result<FaceId, TransformError> {
    if a.max(b).max(c) >= m.vertex_count() {
        return Err(TransformError::UnknownFace(a, b, c));
    }
    let f = m
        .face_with_corner(a, b, c)
        .ok_or(TransformError::UnknownFace(a, b, c))?;
    if m.face_len(f) != 3 {
        return Err(TransformError::NotTriangular(m.face_len(f)));
    }
    Ok(f)
}

/// The face on the far side of the directed edge `u -> v` is a triangle.
fn outer_triangle(m: &PlaneMap, u: VertexId, v: VertexId) -> Result<(), TransformError> {
    let d = m.dart_between(v, u).ok_or(TransformError::PreconditionTriangleMissing(u, v))?;
    if m.face_len(m.face_of(d)) == 3 {
        Ok(())
    } else {
        Err(TransformError::PreconditionTriangleMissing(u, v))
    }
}

pub fn apply_transform(s: &TransformState, step: &TransformStep) -> Result<TransformState, TransformError> {
    let m = &s.map;
    let [a, b, c] = step.face;
    let target = face_of_walk(m, step.face)?;
    if s.is_red(&step.face) {
        return Err(TransformError::RedTarget);
    }
    let n = m.vertex_count();
    let mut walks: Vec<Vec<VertexId>> = (0..m.face_count())
        .filter(|&f| f != target)
        .map(|f| m.face_walk(f))
        .collect();
    let mut red_faces = s.red_faces.clone();
    let new_n = match step.kind {
        StepKind::T1 => {
            outer_triangle(m, a, b)?;
            outer_triangle(m, b, c)?;
            outer_triangle(m, c, a)?;
            let (u, v, w) = (n, n + 1, n + 2);
            walks.extend([vec![a, b, v, u], vec![b, c, w, v], vec![c, a, u, w], vec![u, v, w]]);
            n + 3
        }
        StepKind::T2 => {
            outer_triangle(m, b, c)?;
            outer_triangle(m, c, a)?;
            let (x, p, q, r) = (n, n + 1, n + 2, n + 3);
            walks.extend([
                vec![x, p, b, c],
                vec![x, c, a, q],
                vec![x, q, r, p],
                vec![p, r, b],
                vec![r, q, a],
                vec![b, r, a],
            ]);
            red_faces.push([b, r, a]);
            n + 4
        }
        StepKind::T3 => {
            let payload = step
                .payload
                .as_ref()
                .ok_or_else(|| TransformError::InvalidPayload("T3 needs a payload".into()))?;
            payload.validate()?;
            let pm = &payload.map;
            let [x, y, z] = payload.marked;
            let mut image = vec![usize::MAX; pm.vertex_count()];
            image[x] = a;
            image[y] = c;
            image[z] = b;
            let mut next = n;
            for slot in image.iter_mut() {
                if *slot == usize::MAX {
                    *slot = next;
                    next += 1;
                }
            }
            let marked = pm.face_with_corner(x, y, z).expect("validated");
            for f in (0..pm.face_count()).filter(|&f| f != marked) {
                walks.push(pm.face_walk(f).into_iter().map(|v| image[v]).collect());
            }
            next
        }
    };
    let map = PlaneMap::from_face_walks(new_n, &walks)?;
    if !underlying_graph(&map).is_k_connected(3).expect("k = 3 is supported") {
        return Err(TransformError::NotThreeConnected);
    }
    debug_assert!(red_faces
        .iter()
        .all(|&[x, y, z]| map.face_with_corner(x, y, z).is_some()));
    let mut script = s.script.clone();
    script.push(step.clone());
    Ok(TransformState {
        map,
        red_faces,
        script,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::prism;
    use crate::graph::Graph;
    use crate::iso::isomorphic;
    use crate::operators::facecon;

    fn k4_payload() -> Payload {
        let k4 = PlaneMap::build_from_rotation(&[vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
            .unwrap();
        let walk = k4.face_walk(0);
        Payload::new(k4, [walk[0], walk[1], walk[2]]).unwrap()
    }

    fn seed_face(s: &TransformState) -> [VertexId; 3] {
        let w = s.map.face_walk(0);
        [w[0], w[1], w[2]]
    }

    #[test]
    fn t1_on_seed_is_prism() {
        let s = TransformState::seed();
        let t = apply_transform(&s, &TransformStep::t1(seed_face(&s))).unwrap();
        assert_eq!(crate::canonical_code(&t.map), crate::canonical_code(&prism(3)));
        let fc = facecon(&t.map).unwrap();
        let oct = underlying_graph(&crate::generators::families::antiprism(3));
        assert!(isomorphic(&fc, &oct));
    }

    #[test]
    fn t3_on_seed_is_k4() {
        let s = TransformState::seed();
        let t = apply_transform(&s, &TransformStep::t3(seed_face(&s), k4_payload())).unwrap();
        assert_eq!(underlying_graph(&t.map), Graph::complete(4));
    }

    #[test]
    fn t2_on_seed() {
        let s = TransformState::seed();
        let t = apply_transform(&s, &TransformStep::t2(seed_face(&s))).unwrap();
        assert_eq!((t.map.vertex_count(), t.map.edge_count()), (7, 12));
        assert_eq!(t.map.face_profile().f(4), 3);
        let fc = facecon(&t.map).unwrap();
        assert_eq!(fc.edge_count(), 15);
        assert!(fc.is_maximal_planar());
        assert_eq!(t.red_faces.len(), 1);
        let red = t.red_faces[0];
        assert!(matches!(
            apply_transform(&t, &TransformStep::t1(red)),
            Err(TransformError::RedTarget)
        ));
    }

    #[test]
    fn precondition_reported() {
        let s = TransformState::seed();
        let t = apply_transform(&s, &TransformStep::t1(seed_face(&s))).unwrap();
        // a triangle of the prism borders three squares
        let tri = (0..t.map.face_count()).find(|&f| t.map.face_len(f) == 3).unwrap();
        let w = t.map.face_walk(tri);
        let err = apply_transform(&t, &TransformStep::t1([w[0], w[1], w[2]])).unwrap_err();
        assert!(matches!(err, TransformError::PreconditionTriangleMissing(..)));
    }

    #[test]
    fn bad_targets() {
        let s = TransformState::seed();
        assert!(matches!(
            apply_transform(&s, &TransformStep::t1([0, 0, 1])),
            Err(TransformError::UnknownFace(..))
        ));
        let t = apply_transform(&s, &TransformStep::t1(seed_face(&s))).unwrap();
        let quad = (0..t.map.face_count()).find(|&f| t.map.face_len(f) == 4).unwrap();
        let w = t.map.face_walk(quad);
        assert!(matches!(
            apply_transform(&t, &TransformStep::t1([w[0], w[1], w[2]])),
            Err(TransformError::NotTriangular(4))
        ));
    }

    #[test]
    fn replay_reproduces() {
        let s = TransformState::seed();
        let t = apply_transform(&s, &TransformStep::t2(seed_face(&s))).unwrap();
        let r = TransformState::replay(&t.script).unwrap();
        assert_eq!(r.map, t.map);
        assert_eq!(r.red_faces, t.red_faces);
    }
}
