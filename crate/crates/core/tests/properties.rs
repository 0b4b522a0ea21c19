use std::sync::OnceLock;

use polycon::canon::{canonical_code, canonical_map};
use polycon::generators::enumerate_polyhedra;
use polycon::graph::Graph;
use polycon::io::planar_code;
use polycon::operators::{con, facecon};
use polycon::planarity::{is_planar, is_planar_by_minors};
use polycon::{isomorphic, underlying_graph, PlaneMap};
use proptest::prelude::*;
use proptest::sample::Index;

fn pool() -> &'static Vec<PlaneMap> {
    static P: OnceLock<Vec<PlaneMap>> = OnceLock::new();
    P.get_or_init(|| (4..=8).flat_map(enumerate_polyhedra).collect())
}

fn perm(n: usize, seed: &[Index]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        p.swap(i, seed[i].index(i + 1));
    }
    p
}

fn seeds() -> impl Strategy<Value = Vec<Index>> {
    prop::collection::vec(any::<Index>(), 32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn code_invariant_under_relabel_and_mirror(i in any::<Index>(), s in seeds()) {
        let m = i.get(pool());
        let p = perm(m.vertex_count(), &s);
        let r = m.relabel(&p);
        prop_assert_eq!(canonical_code(&r), canonical_code(m));
        prop_assert_eq!(canonical_code(&r.mirror()), canonical_code(m));
        prop_assert_eq!(canonical_map(&r), canonical_map(m));
    }

    #[test]
    fn euler_and_double_dual(i in any::<Index>()) {
        let m = i.get(pool());
        prop_assert_eq!(m.vertex_count() + m.face_count(), m.edge_count() + 2);
        let d = m.dual();
        prop_assert_eq!(d.vertex_count(), m.face_count());
        prop_assert_eq!(canonical_code(&d.dual()), canonical_code(m));
    }

    #[test]
    fn isomorphic_under_relabel(i in any::<Index>(), s in seeds()) {
        let g = underlying_graph(i.get(pool()));
        let h = g.relabel(&perm(g.vertex_count(), &s));
        prop_assert!(isomorphic(&g, &h));
        prop_assert!(isomorphic(&g, &g));
    }

    #[test]
    fn facecon_inside_con(i in any::<Index>()) {
        let m = i.get(pool());
        let g = underlying_graph(m);
        let f = facecon(m).unwrap();
        prop_assert!(f.edge_set().is_subset(&con(&g).edge_set()));
        if m.is_regular(3) {
            prop_assert_eq!(f, con(&g));
        }
    }

    #[test]
    fn planar_code_roundtrip(i in any::<Index>()) {
        let m = i.get(pool());
        let bytes = planar_code::write(std::slice::from_ref(m)).unwrap();
        let back = planar_code::read(&bytes).unwrap();
        prop_assert_eq!(back.len(), 1);
        prop_assert_eq!(back[0].rotation_lists(), m.rotation_lists());
    }

    #[test]
    fn planarity_agrees_with_minor_search(n in 1usize..=8, bits in any::<u32>(), extra in any::<u32>()) {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                // bias toward dense graphs so both outcomes occur
                if (bits >> (k % 32)) & 1 == 1 || (extra >> ((k * 7) % 32)) & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        let g = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(is_planar(&g), is_planar_by_minors(&g));
    }
}
