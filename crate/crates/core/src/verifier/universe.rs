//! Instance universes, cached per size and shared between claims.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::canon::{canonical_code, decode_code};
use crate::generators::constructible::enumerate_constructible;
use crate::generators::enumerate::{polyhedron_codes, triangulation_codes};
use crate::generators::transform::TransformState;
use crate::planemap::PlaneMap;

/// A map in canonical form together with its canonical code.
#[derive(Clone, Debug)]
pub struct Instance {
    pub code: Vec<u8>,
    pub map: PlaneMap,
}

impl Instance {
    pub fn new(map: &PlaneMap) -> Self {
        let code = canonical_code(map);
        let map = decode_code(&code).expect("canonical codes decode");
        Self { code, map }
    }

    fn from_code(code: Vec<u8>) -> Self {
        let map = decode_code(&code).expect("canonical codes decode");
        Self { code, map }
    }
}

/// A constructible map with its witnessing state.
#[derive(Clone, Debug)]
pub struct Built {
    pub instance: Instance,
    pub state: TransformState,
}

const TRIANGULATIONS: [(usize, u64); 11] = [
    (4, 1),
    (5, 1),
    (6, 2),
    (7, 5),
    (8, 14),
    (9, 50),
    (10, 233),
    (11, 1249),
    (12, 7595),
    (13, 49566),
    (14, 339722),
];

const POLYHEDRA: [(usize, u64); 9] = [
    (4, 1),
    (5, 2),
    (6, 7),
    (7, 34),
    (8, 257),
    (9, 2606),
    (10, 32300),
    (11, 440564),
    (12, 6384634),
];

fn table_sum(table: &[(usize, u64)], max: usize) -> Option<u64> {
    if max < 4 {
        return Some(0);
    }
    let last = table.last().expect("non-empty table").0;
    (max <= last).then(|| table.iter().filter(|&&(n, _)| n <= max).map(|&(_, c)| c).sum())
}

/// Number of triangulations on at most `n` vertices, if tabulated.
pub fn estimate_triangulations(n: usize) -> Option<u64> {
    table_sum(&TRIANGULATIONS, n)
}

/// Number of polyhedra on at most `n` vertices, if tabulated.
pub fn estimate_polyhedra(n: usize) -> Option<u64> {
    table_sum(&POLYHEDRA, n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Key {
    Triangulations(usize),
    Cubic(usize),
    Polyhedra(usize),
}

/// Lazily built universes.
#[derive(Default)]
pub struct UniverseCache {
    levels: Mutex<HashMap<Key, Arc<Vec<Instance>>>>,
    built: Mutex<BTreeMap<usize, Arc<Vec<Built>>>>,
}

impl UniverseCache {
    fn level(&self, key: Key) -> Arc<Vec<Instance>> {
        if let Some(v) = self.levels.lock().expect("cache lock").get(&key) {
            return v.clone();
        }
        let items: Vec<Instance> = match key {
            Key::Triangulations(n) => triangulation_codes(n).into_iter().map(Instance::from_code).collect(),
            Key::Polyhedra(n) => polyhedron_codes(n).into_iter().map(Instance::from_code).collect(),
            Key::Cubic(f) => {
                let tri = self.level(Key::Triangulations(f));
                let mut out: Vec<Instance> = tri.par_iter().map(|t| Instance::new(&t.map.dual())).collect();
                out.sort_by(|a, b| a.code.cmp(&b.code));
                out
            }
        };
        let items = Arc::new(items);
        self.levels.lock().expect("cache lock").insert(key, items.clone());
        items
    }

    fn collect(&self, keys: impl Iterator<Item = Key>) -> Vec<Instance> {
        keys.flat_map(|k| self.level(k).as_ref().clone()).collect()
    }

    /// Triangulations on `4..=n` vertices.
    pub fn triangulations(&self, n: usize) -> Vec<Instance> {
        self.collect((4..=n).map(Key::Triangulations))
    }

    /// Polyhedra on `4..=n` vertices.
    pub fn polyhedra(&self, n: usize) -> Vec<Instance> {
        self.collect((4..=n).map(Key::Polyhedra))
    }

    /// Polyhedra on exactly `n` vertices.
    pub fn polyhedra_exact(&self, n: usize) -> Arc<Vec<Instance>> {
        self.level(Key::Polyhedra(n))
    }

    /// Cubic polyhedra with `4..=faces` faces.
    pub fn cubic(&self, faces: usize) -> Vec<Instance> {
        self.collect((4..=faces).map(Key::Cubic))
    }

    /// The constructible closure on at most `n` vertices, sorted by code.
    pub fn constructible(&self, n: usize) -> Arc<Vec<Built>> {
        if let Some(v) = self.built.lock().expect("cache lock").get(&n) {
            return v.clone();
        }
        let items: Vec<Built> = enumerate_constructible(n)
            .into_iter()
            .map(|c| Built {
                instance: Instance::from_code(c.code),
                state: c.state,
            })
            .collect();
        let items = Arc::new(items);
        self.built.lock().expect("cache lock").insert(n, items.clone());
        items
    }
}

/// Concatenates instance lists, dropping repeated codes; sorted by code.
pub fn merge(parts: Vec<Vec<Instance>>) -> Vec<Instance> {
    let mut by_code: BTreeMap<Vec<u8>, Instance> = BTreeMap::new();
    for inst in parts.into_iter().flatten() {
        by_code.entry(inst.code.clone()).or_insert(inst);
    }
    by_code.into_values().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn estimates() {
        assert_eq!(estimate_triangulations(6), Some(4));
        assert_eq!(estimate_polyhedra(7), Some(44));
        assert_eq!(estimate_polyhedra(3), Some(0));
        assert_eq!(estimate_polyhedra(13), None);
    }

    #[test]
    fn cubic_universe_is_cubic() {
        let cache = UniverseCache::default();
        let cubic = cache.cubic(8);
        assert_eq!(cubic.len(), 1 + 1 + 2 + 5 + 14);
        assert!(cubic.iter().all(|i| i.map.is_regular(3)));
        assert!(cache.cubic(8).len() == cubic.len());
    }
}
