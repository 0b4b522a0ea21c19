//! Pyramids, prisms, antiprisms and the Platonic solids.

use thiserror::Error;

use crate::planemap::PlaneMap;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("family {name} is not defined for n = {n}")]
    BadSize { name: String, n: usize },
}

/// Looks up a family by name. For `platonic`, `n` is the number of faces.
pub fn family(name: &str, n: usize) -> Result<PlaneMap, FamilyError> {
    let bad = || FamilyError::BadSize {
        name: name.to_string(),
        n,
    };
    match name {
        "pyramid" | "prism" | "antiprism" if n < 3 => Err(bad()),
        "pyramid" => Ok(pyramid(n)),
        "prism" => Ok(prism(n)),
        "antiprism" => Ok(antiprism(n)),
        "platonic" => match n {
            4 => Ok(pyramid(3)),
            6 => Ok(prism(4)),
            8 => Ok(antiprism(3)),
            12 => Ok(dodecahedron()),
            20 => Ok(icosahedron()),
            _ => Err(bad()),
        },
        _ => Err(FamilyError::UnknownFamily(name.to_string())),
    }
}

/// Wheel: rim `0..n`, apex `n`.
pub fn pyramid(n: usize) -> PlaneMap {
    let mut rot: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + 1) % n, n, (i + n - 1) % n]).collect();
    rot.push((0..n).collect());
    PlaneMap::build_from_rotation(&rot).expect("pyramid")
}

/// Outer cycle `0..n`, inner cycle `n..2n`, spokes `i -- n + i`.
pub fn prism(n: usize) -> PlaneMap {
    let mut rot: Vec<Vec<usize>> = (0..n).map(|i| vec![(i + 1) % n, n + i, (i + n - 1) % n]).collect();
    rot.extend((0..n).map(|i| vec![i, n + (i + 1) % n, n + (i + n - 1) % n]));
    PlaneMap::build_from_rotation(&rot).expect("prism")
}

/// Outer cycle `0..n`, inner cycle `n..2n`; inner `n + i` sits between outer `i` and `i + 1`.
pub fn antiprism(n: usize) -> PlaneMap {
    let mut rot: Vec<Vec<usize>> = (0..n)
        .map(|i| vec![(i + 1) % n, n + i, n + (i + n - 1) % n, (i + n - 1) % n])
        .collect();
    rot.extend((0..n).map(|i| vec![(i + 1) % n, n + (i + 1) % n, n + (i + n - 1) % n, i]));
    PlaneMap::build_from_rotation(&rot).expect("antiprism")
}

/// Top `0`, upper ring `1..=5`, lower ring `6..=10`, bottom `11`.
pub fn icosahedron() -> PlaneMap {
    let u = |i: usize| 1 + i % 5;
    let l = |i: usize| 6 + i % 5;
    let mut rot = vec![(0..5).map(u).collect::<Vec<_>>()];
    for i in 0..5 {
        rot.push(vec![l(i), u(i + 1), 0, u(i + 4), l(i + 4)]);
    }
    for i in 0..5 {
        rot.push(vec![11, l(i + 1), u(i + 1), u(i), l(i + 4)]);
    }
    rot.push((0..5).rev().map(l).collect());
    PlaneMap::build_from_rotation(&rot).expect("icosahedron")
}

pub fn dodecahedron() -> PlaneMap {
    icosahedron().dual()
}
