//! Canonical codes for plane maps.
//!
//! A breadth-first code is produced from every admissible starting dart and
//! both orientations; the lexicographically smallest one is the canonical
//! code. Two connected simple maps get the same code iff they are isomorphic
//! as maps, reflections included.

use std::cmp::Ordering;

use crate::planemap::{twin, Dart, PlaneMap, VertexId};

/// Which isomorphisms the code is invariant under.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Orientation-preserving relabelings only.
    Oriented,
    /// Orientation-preserving and reversing.
    WithMirror,
}

/// Mirror-inclusive canonical code.
pub fn canonical_code(m: &PlaneMap) -> Vec<u8> {
    canonical_code_with(m, Symmetry::WithMirror, |_| Vec::new())
}

/// Canonical code up to orientation-preserving isomorphism only.
pub fn oriented_code(m: &PlaneMap) -> Vec<u8> {
    canonical_code_with(m, Symmetry::Oriented, |_| Vec::new())
}

/// Canonical code of a map with a set of marked vertex sets (e.g. coloured
/// faces). The order of the sets and of the vertices within them is ignored.
pub fn canonical_code_marked_sets(m: &PlaneMap, sym: Symmetry, sets: &[Vec<VertexId>]) -> Vec<u8> {
    canonical_code_with(m, sym, |label| {
        let mut coded: Vec<Vec<u32>> = sets
            .iter()
            .map(|s| {
                let mut c: Vec<u32> = s.iter().map(|&v| label[v]).collect();
                c.sort_unstable();
                c
            })
            .collect();
        coded.sort();
        let mut out = vec![coded.len() as u32];
        for c in coded {
            out.push(c.len() as u32);
            out.extend(c);
        }
        out
    })
}

/// Canonical code of a map with one ordered tuple of marked vertices.
pub fn canonical_code_marked_tuple(m: &PlaneMap, sym: Symmetry, tuple: &[VertexId]) -> Vec<u8> {
    canonical_code_with(m, sym, |label| tuple.iter().map(|&v| label[v]).collect())
}

/// The map in canonical form: vertices renumbered by the canonical labeling
/// and rotations read off the code. Isomorphic maps give identical results.
pub fn canonical_map(m: &PlaneMap) -> PlaneMap {
    decode_code(&canonical_code(m)).expect("canonical codes decode")
}

/// Rebuilds a map from the structural part of a code.
pub fn decode_code(bytes: &[u8]) -> Option<PlaneMap> {
    if bytes.len() < 8 {
        return None;
    }
    let n = u32::from_be_bytes(bytes[0..4].try_into().ok()?) as usize;
    let e = u32::from_be_bytes(bytes[4..8].try_into().ok()?) as usize;
    let wide = n >= 255;
    let mut entries = Vec::with_capacity(2 * e + n);
    let mut rest = &bytes[8..];
    while entries.len() < 2 * e + n {
        if wide {
            if rest.len() < 2 {
                return None;
            }
            entries.push(u16::from_be_bytes([rest[0], rest[1]]) as usize);
            rest = &rest[2..];
        } else {
            entries.push(*rest.first()? as usize);
            rest = &rest[1..];
        }
    }
    let mut rotation = vec![Vec::new(); n];
    let mut v = 0;
    for x in entries {
        if x == 0 {
            v += 1;
        } else {
            rotation.get_mut(v)?.push(x - 1);
        }
    }
    PlaneMap::build_from_rotation(&rotation).ok()
}

/// General form: `extra` maps the 1-based labeling of a candidate to
/// additional entries compared after the structural code.
pub fn canonical_code_with<F>(m: &PlaneMap, sym: Symmetry, extra: F) -> Vec<u8>
where
    F: Fn(&[u32]) -> Vec<u32>,
{
    let starts = start_darts(m);
    let orientations: &[bool] = match sym {
        Symmetry::Oriented => &[true],
        Symmetry::WithMirror => &[true, false],
    };
    let mut best: Option<(Vec<u32>, Vec<u32>)> = None;
    let mut scratch = Scratch::new(m.vertex_count());
    for &ccw in orientations {
        for &d in &starts {
            let bound = best.as_ref().map(|(c, _)| c.as_slice());
            let Some(ord) = scratch.bfs(m, d, ccw, bound) else {
                continue;
            };
            let ex = extra(&scratch.label);
            match ord {
                Ordering::Less => best = Some((scratch.code.clone(), ex)),
                Ordering::Equal => {
                    if let Some((_, best_ex)) = &best {
                        if ex < *best_ex {
                            best = Some((scratch.code.clone(), ex));
                        }
                    } else {
                        best = Some((scratch.code.clone(), ex));
                    }
                }
                Ordering::Greater => unreachable!(),
            }
        }
    }
    let (code, ex) = best.expect("a map has at least one dart");
    encode(m.vertex_count(), m.edge_count(), &code, &ex)
}

/// Darts whose (tail degree, head degree) pair is maximal.
fn start_darts(m: &PlaneMap) -> Vec<Dart> {
    let deg: Vec<usize> = (0..m.vertex_count()).map(|v| m.degree(v)).collect();
    let key = |d: Dart| (deg[m.tail(d)], deg[m.head(d)]);
    let best = (0..m.dart_count()).map(key).max().unwrap_or((0, 0));
    (0..m.dart_count()).filter(|&d| key(d) == best).collect()
}

struct Scratch {
    label: Vec<u32>,
    first: Vec<Dart>,
    order: Vec<VertexId>,
    code: Vec<u32>,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Self {
            label: vec![0; n],
            first: vec![0; n],
            order: Vec::with_capacity(n),
            code: Vec::new(),
        }
    }

    /// Builds the code from `start` into `self.code`. Returns `None` as soon
    /// as the code is known to exceed `bound`; otherwise its order relative to `bound`
    /// (`Less` when there is no bound).
    fn bfs(&mut self, m: &PlaneMap, start: Dart, ccw: bool, bound: Option<&[u32]>) -> Option<Ordering> {
        self.label.iter_mut().for_each(|l| *l = 0);
        self.order.clear();
        self.code.clear();
        let mut state = if bound.is_some() { Ordering::Equal } else { Ordering::Less };
        let v0 = m.tail(start);
        self.label[v0] = 1;
        self.first[v0] = start;
        self.order.push(v0);
        let mut next_label = 2;
        let mut head = 0;
        while head < self.order.len() {
            let v = self.order[head];
            head += 1;
            let first = self.first[v];
            let mut d = first;
            loop {
                let w = m.head(d);
                if self.label[w] == 0 {
                    self.label[w] = next_label;
                    next_label += 1;
                    self.first[w] = twin(d);
                    self.order.push(w);
                }
                if !self.push(self.label[w], &mut state, bound) {
                    return None;
                }
                d = if ccw { m.rot(d) } else { m.rot_inv(d) };
                if d == first {
                    break;
                }
            }
            if !self.push(0, &mut state, bound) {
                return None;
            }
        }
        Some(state)
    }

    #[inline]
    fn push(&mut self, x: u32, state: &mut Ordering, bound: Option<&[u32]>) -> bool {
        if *state == Ordering::Equal {
            let b = bound.expect("equal state implies a bound")[self.code.len()];
            match x.cmp(&b) {
                Ordering::Greater => return false,
                Ordering::Less => *state = Ordering::Less,
                Ordering::Equal => {}
            }
        }
        self.code.push(x);
        true
    }
}

fn encode(n: usize, e: usize, code: &[u32], extra: &[u32]) -> Vec<u8> {
    let wide = n >= 255;
    let mut out = Vec::with_capacity(8 + (code.len() + extra.len()) * if wide { 2 } else { 1 });
    out.extend_from_slice(&(n as u32).to_be_bytes());
    out.extend_from_slice(&(e as u32).to_be_bytes());
    for &x in code.iter().chain(extra) {
        if wide {
            out.extend_from_slice(&(x as u16).to_be_bytes());
        } else {
            out.push(x as u8);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> PlaneMap {
        // 0 top, 5 bottom, equator 1..=4
        PlaneMap::build_from_rotation(&[
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ])
        .unwrap()
    }

    #[test]
    fn relabel_invariance() {
        let m = octahedron();
        let perm = [3, 5, 0, 1, 4, 2];
        assert_eq!(canonical_code(&m), canonical_code(&m.relabel(&perm)));
    }

    #[test]
    fn mirror_invariance() {
        let m = octahedron();
        assert_eq!(canonical_code(&m), canonical_code(&m.mirror()));
    }

    #[test]
    fn dual_differs() {
        let m = octahedron();
        assert_ne!(canonical_code(&m), canonical_code(&m.dual()));
    }

    #[test]
    fn canonical_map_is_a_fixed_point() {
        let m = octahedron().relabel(&[2, 4, 0, 5, 1, 3]);
        let c = canonical_map(&m);
        assert_eq!(canonical_code(&c), canonical_code(&m));
        assert_eq!(canonical_map(&c), c);
    }

    #[test]
    fn header_layout() {
        let c = canonical_code(&octahedron());
        assert_eq!(&c[..8], &[0, 0, 0, 6, 0, 0, 0, 12]);
        assert_eq!(c.len(), 8 + 24 + 6);
    }

    #[test]
    fn marks_distinguish_positions() {
        let m = octahedron();
        let faces = m.faces();
        let a = canonical_code_marked_sets(&m, Symmetry::WithMirror, &[faces[0].clone()]);
        let b = canonical_code_marked_sets(&m, Symmetry::WithMirror, &[faces[1].clone()]);
        // all faces of the octahedron are equivalent
        assert_eq!(a, b);
        let two_adjacent = {
            let f0 = &faces[0];
            let other = (1..faces.len())
                .find(|&g| faces[g].iter().filter(|v| f0.contains(v)).count() == 2)
                .unwrap();
            canonical_code_marked_sets(&m, Symmetry::WithMirror, &[f0.clone(), faces[other].clone()])
        };
        let two_opposite = {
            let f0 = &faces[0];
            let other = (1..faces.len())
                .find(|&g| faces[g].iter().all(|v| !f0.contains(v)))
                .unwrap();
            canonical_code_marked_sets(&m, Symmetry::WithMirror, &[f0.clone(), faces[other].clone()])
        };
        assert_ne!(two_adjacent, two_opposite);
    }
}
