//! plantri-compatible planar_code.
//!
//! Each graph is one byte `n` followed, for every vertex `1..=n`, by its
//! neighbours (1-based) in clockwise order and a terminating zero. Streams
//! written here always start with the `>>planar_code<<` header; reading
//! accepts streams with or without it.

use crate::io::FormatError;
use crate::planemap::PlaneMap;

pub const HEADER: &[u8] = b">>planar_code<<";

/// Clockwise 0-based neighbour lists, the order used on disk.
pub fn clockwise_lists(m: &PlaneMap) -> Vec<Vec<usize>> {
    m.rotation_lists()
        .into_iter()
        .map(|mut l| {
            l.reverse();
            l
        })
        .collect()
}

/// Builds a map from clockwise 0-based neighbour lists.
pub fn from_clockwise_lists(lists: &[Vec<usize>]) -> Result<PlaneMap, crate::planemap::MapError> {
    let ccw: Vec<Vec<usize>> = lists
        .iter()
        .map(|l| l.iter().rev().copied().collect())
        .collect();
    PlaneMap::build_from_rotation(&ccw)
}

pub fn write_one(m: &PlaneMap, out: &mut Vec<u8>) -> Result<(), FormatError> {
    let n = m.vertex_count();
    if n > 255 {
        return Err(FormatError::TooLarge(n));
    }
    out.push(n as u8);
    for list in clockwise_lists(m) {
        out.extend(list.iter().map(|&w| (w + 1) as u8));
        out.push(0);
    }
    Ok(())
}

pub fn write(maps: &[PlaneMap]) -> Result<Vec<u8>, FormatError> {
    let mut out = HEADER.to_vec();
    for m in maps {
        write_one(m, &mut out)?;
    }
    Ok(out)
}

/// Clockwise lists of one record.
pub type Lists = Vec<Vec<usize>>;

/// Raw clockwise lists of every record, with the byte offset of each record.
pub fn read_lists(bytes: &[u8]) -> Result<Vec<(usize, Lists)>, FormatError> {
    let mut pos = if bytes.starts_with(HEADER) { HEADER.len() } else { 0 };
    let mut out = Vec::new();
    while pos < bytes.len() {
        let start = pos;
        let n = bytes[pos] as usize;
        pos += 1;
        if n == 0 {
            return Err(FormatError::at(start, "vertex count 0"));
        }
        let mut lists = Vec::with_capacity(n);
        for v in 0..n {
            let mut list = Vec::new();
            loop {
                let Some(&b) = bytes.get(pos) else {
                    return Err(FormatError::at(
                        pos,
                        format!("input ends inside the list of vertex {}", v + 1),
                    ));
                };
                pos += 1;
                if b == 0 {
                    break;
                }
                if b as usize > n {
                    return Err(FormatError::at(pos - 1, format!("neighbour {b} exceeds n = {n}")));
                }
                list.push(b as usize - 1);
            }
            lists.push(list);
        }
        out.push((start, lists));
    }
    Ok(out)
}

pub fn read(bytes: &[u8]) -> Result<Vec<PlaneMap>, FormatError> {
    read_lists(bytes)?
        .into_iter()
        .map(|(offset, lists)| {
            from_clockwise_lists(&lists).map_err(|e| FormatError::at(offset, e.to_string()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::{prism, pyramid};

    #[test]
    fn roundtrip() {
        let maps = vec![pyramid(3), prism(5)];
        let bytes = write(&maps).unwrap();
        assert!(bytes.starts_with(HEADER));
        let back = read(&bytes).unwrap();
        assert_eq!(back, maps);
        assert_eq!(write(&back).unwrap(), bytes);
    }

    #[test]
    fn tetrahedron_bytes() {
        let bytes = write(&[pyramid(3)]).unwrap();
        let body = &bytes[HEADER.len()..];
        assert_eq!(body[0], 4);
        assert_eq!(body.len(), 1 + 4 * 4);
    }

    #[test]
    fn truncated() {
        let bytes = write(&[prism(4)]).unwrap();
        let cut = &bytes[..bytes.len() - 3];
        assert!(matches!(read(cut), Err(FormatError::MalformedInput { .. })));
    }

    #[test]
    fn headerless_accepted() {
        let bytes = write(&[prism(3)]).unwrap();
        assert_eq!(read(&bytes[HEADER.len()..]).unwrap(), vec![prism(3)]);
    }

    #[test]
    fn out_of_range_neighbour() {
        let err = read(&[2, 3, 0, 1, 0]).unwrap_err();
        assert_eq!(err, FormatError::at(1, "neighbour 3 exceeds n = 2"));
    }
}
