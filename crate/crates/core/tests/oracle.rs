mod common;

use polycon::generators::{enumerate_polyhedra, enumerate_triangulations};
use polycon::underlying_graph;

#[test]
fn all_planar_graphs_small() {
    // connected or not: 1, 2, 4, 11 graphs on 1..4 vertices, all planar
    let counts: Vec<usize> = (1..=4).map(|n| common::planar_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11]);
    // K5 is the only non-planar graph on 5 vertices
    assert_eq!(common::planar_graphs(5).len(), 34 - 1);
}

#[test]
fn enumeration_matches_oracle() {
    for n in 4..=7 {
        let (tri, poly) = common::oracle_counts(n);
        assert_eq!(enumerate_triangulations(n).len(), tri, "triangulations n={n}");
        assert_eq!(enumerate_polyhedra(n).len(), poly, "polyhedra n={n}");
    }
}

#[test]
fn enumerated_graphs_are_distinct() {
    let graphs: Vec<_> = enumerate_polyhedra(7).iter().map(underlying_graph).collect();
    for i in 0..graphs.len() {
        for j in i + 1..graphs.len() {
            assert!(!polycon::isomorphic(&graphs[i], &graphs[j]));
        }
    }
}
