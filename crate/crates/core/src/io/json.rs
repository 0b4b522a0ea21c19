//! JSON Lines formats: lossless rotation records and lossy edge lists.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::io::planar_code::{clockwise_lists, from_clockwise_lists};
use crate::io::FormatError;
use crate::planemap::PlaneMap;

/// One map: 0-based clockwise neighbour lists, as in planar_code.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RotationRecord {
    pub n: usize,
    pub rotation: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct EdgeRecord {
    pub p: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for EdgeRecord {
    fn from(g: &Graph) -> Self {
        EdgeRecord {
            p: g.vertex_count(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

pub fn write_rotations(maps: &[PlaneMap]) -> String {
    let mut out = String::new();
    for m in maps {
        let rec = RotationRecord {
            n: m.vertex_count(),
            rotation: clockwise_lists(m),
        };
        out.push_str(&serde_json::to_string(&rec).expect("serializable"));
        out.push('\n');
    }
    out
}

pub fn write_edges(graphs: &[Graph]) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&serde_json::to_string(&EdgeRecord::from(g)).expect("serializable"));
        out.push('\n');
    }
    out
}

fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut offset = 0;
    text.split_inclusive('\n').filter_map(move |line| {
        let start = offset;
        offset += line.len();
        let trimmed = line.trim();
        (!trimmed.is_empty()).then_some((start, trimmed))
    })
}

pub fn read_rotation_records(text: &str) -> Result<Vec<RotationRecord>, FormatError> {
    lines(text)
        .map(|(offset, line)| {
            let rec: RotationRecord =
                serde_json::from_str(line).map_err(|e| FormatError::at(offset, e.to_string()))?;
            if rec.rotation.len() != rec.n {
                return Err(FormatError::at(offset, "n does not match the rotation length"));
            }
            Ok(rec)
        })
        .collect()
}

pub fn read_rotations(text: &str) -> Result<Vec<PlaneMap>, FormatError> {
    let mut offset_iter = lines(text).map(|(o, _)| o);
    read_rotation_records(text)?
        .into_iter()
        .map(|rec| {
            let offset = offset_iter.next().unwrap_or(0);
            from_clockwise_lists(&rec.rotation).map_err(|e| FormatError::at(offset, e.to_string()))
        })
        .collect()
}

pub fn read_edges(text: &str) -> Result<Vec<Graph>, FormatError> {
    lines(text)
        .map(|(offset, line)| {
            let rec: EdgeRecord =
                serde_json::from_str(line).map_err(|e| FormatError::at(offset, e.to_string()))?;
            let pairs: Vec<(usize, usize)> = rec.edges.iter().map(|e| (e[0], e[1])).collect();
            Graph::from_edges(rec.p, &pairs).map_err(|e| FormatError::at(offset, e.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::{antiprism, prism};
    use crate::graph::underlying_graph;

    #[test]
    fn rotation_roundtrip() {
        let maps = vec![prism(3), antiprism(4)];
        let text = write_rotations(&maps);
        assert_eq!(text.lines().count(), 2);
        assert_eq!(read_rotations(&text).unwrap(), maps);
    }

    #[test]
    fn edges_sorted() {
        let g = underlying_graph(&prism(3));
        let text = write_edges(std::slice::from_ref(&g));
        assert!(text.starts_with("{\"p\":6,\"edges\":[[0,1],"));
        assert_eq!(read_edges(&text).unwrap(), vec![g]);
    }

    #[test]
    fn bad_line_offset() {
        let text = format!("{}{{\"n\":2", write_rotations(&[prism(3)]));
        let first_len = text.find('\n').unwrap() + 1;
        match read_rotations(&text) {
            Err(FormatError::MalformedInput { offset, .. }) => assert_eq!(offset, first_len),
            other => panic!("unexpected {other:?}"),
        }
    }
}
