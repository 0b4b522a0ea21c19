//! Hypothesis and conclusion predicates, one pair per claim.
//!
//! Hypotheses return `bool`; conclusions return `Err(detail)` on violation.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::generators::families::{antiprism, prism};
use crate::generators::transform::{apply_transform, TransformState, TransformStep};
use crate::graph::{underlying_graph, Graph};
use crate::iso::{find_isomorphism, isomorphic};
use crate::operators::{con, evenise, facecon_unchecked, medial, odd_dual, predict_con_planar, radial, OddDualTag};
use crate::planarity::is_planar;
use crate::planemap::PlaneMap;

pub type Verdict = Result<(), String>;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn two_connected(g: &Graph) -> bool {
    g.is_k_connected(2).expect("k = 2 is supported")
}

fn three_connected(g: &Graph) -> bool {
    g.is_k_connected(3).expect("k = 3 is supported")
}

fn odd_tag(m: &PlaneMap) -> OddDualTag {
    odd_dual(m).1.tag
}

fn is_cube(m: &PlaneMap) -> bool {
    m.vertex_count() == 8 && m.is_regular(3) && m.face_profile().f(4) == 6
}

pub fn always(_: &PlaneMap) -> bool {
    true
}

pub fn is_cubic(m: &PlaneMap) -> bool {
    m.is_regular(3)
}

// THM0

pub fn thm0_conclusion(m: &PlaneMap) -> Verdict {
    let c = con(&underlying_graph(m));
    let planar = is_planar(&c);
    let predicted = predict_con_planar(m).map_err(|e| e.to_string())?;
    ensure(planar == predicted, || {
        format!("is_planar(con) = {planar}, predicted {predicted}")
    })?;
    if !planar || m.vertex_count() == 4 {
        return Ok(());
    }
    ensure(m.is_regular(3), || "con planar but G not cubic".into())?;
    if m.is_bipartite() {
        let comps = c.components();
        ensure(comps.len() == 2, || format!("bipartite with {} con components", comps.len()))?;
        for comp in comps {
            ensure(two_connected(&c.induced(&comp)), || {
                "con component not 2-connected".into()
            })?;
        }
        Ok(())
    } else {
        let tag = odd_tag(m);
        ensure(matches!(tag, OddDualTag::K2bar | OddDualTag::K4), || {
            format!("non-bipartite with odd dual {tag:?}")
        })?;
        ensure(c.is_polyhedral(), || "con planar but not polyhedral".into())
    }
}

// THM1

/// The three conditions (A) con planar and connected, (B) con polyhedral,
/// (C) odd dual is K̄2 or K4.
pub fn thm1_conditions(m: &PlaneMap) -> [bool; 3] {
    let c = con(&underlying_graph(m));
    let a = is_planar(&c) && c.is_connected();
    let b = c.is_polyhedral();
    let cc = matches!(odd_tag(m), OddDualTag::K2bar | OddDualTag::K4);
    [a, b, cc]
}

pub fn thm1_conclusion(m: &PlaneMap) -> Verdict {
    let [a, b, c] = thm1_conditions(m);
    ensure(a == b && b == c, || format!("(A) = {a}, (B) = {b}, (C) = {c}"))
}

// THM2, LE5

pub fn max_degree_at_least_4(m: &PlaneMap) -> bool {
    m.max_degree() >= 4
}

pub fn thm2_conclusion(m: &PlaneMap) -> Verdict {
    ensure(!is_planar(&con(&underlying_graph(m))), || "con is planar".into())
}

pub fn max_degree_at_least_5(m: &PlaneMap) -> bool {
    m.max_degree() >= 5
}

pub fn le5_conclusion(m: &PlaneMap) -> Verdict {
    let g = underlying_graph(m);
    let c = con(&g);
    let x = (0..g.vertex_count())
        .find(|&v| g.degree(v) == g.max_degree())
        .expect("non-empty graph");
    let n = g.neighbors(x);
    for (i, &u) in n.iter().enumerate() {
        for &v in &n[i + 1..] {
            ensure(c.has_edge(u, v), || format!("neighbours {u}, {v} of {x} not joined in con"))?;
        }
    }
    ensure(!is_planar(&c), || "con is planar".into())
}

// CUODD

pub fn two_odd_vertices(m: &PlaneMap) -> bool {
    (0..m.vertex_count()).filter(|&v| m.degree(v) % 2 == 1).count() == 2
}

pub fn cuodd_conclusion(m: &PlaneMap) -> Verdict {
    let odd: Vec<usize> = (0..m.vertex_count()).filter(|&v| m.degree(v) % 2 == 1).collect();
    ensure(m.dart_between(odd[0], odd[1]).is_none(), || {
        format!("odd vertices {} and {} are adjacent", odd[0], odd[1])
    })
}

// LE_DEG, COR_BDS, EFCG

/// Lengths of the faces around `v` in rotation order; consecutive entries
/// share an edge at `v`.
fn face_lengths_around(m: &PlaneMap, v: usize) -> Vec<usize> {
    m.darts_around(v).map(|d| m.face_len(m.face_of(d))).collect()
}

pub fn le_deg_conclusion(m: &PlaneMap) -> Verdict {
    let fc = facecon_unchecked(m);
    for v in 0..m.vertex_count() {
        let d = m.degree(v);
        let k = fc.degree(v);
        let lens = face_lengths_around(m, v);
        let all_quads = lens.iter().all(|&l| l == 4);
        let adjacent_triangles = (0..lens.len()).any(|i| lens[i] == 3 && lens[(i + 1) % lens.len()] == 3);
        let upper_case = !lens.contains(&4) && !adjacent_triangles;
        ensure(d <= k && k <= 2 * d, || format!("vertex {v}: deg {d}, facecon deg {k}"))?;
        ensure((k == d) == all_quads, || format!("vertex {v}: lower bound equality case"))?;
        ensure((k == 2 * d) == upper_case, || format!("vertex {v}: upper bound equality case"))?;
    }
    Ok(())
}

pub fn cor_bds_conclusion(m: &PlaneMap) -> Verdict {
    let q = m.edge_count();
    let e = facecon_unchecked(m).edge_count();
    let prof = m.face_profile();
    let quadrangulation = prof.f(4) == prof.face_count();
    ensure(q <= e && e <= 2 * q, || format!("|E(facecon)| = {e}, q = {q}"))?;
    ensure((e == q) == quadrangulation, || "lower bound equality case".into())?;
    ensure((e == 2 * q) == (prof.f(4) == 0 && prof.q(3, 3) == 0), || {
        "upper bound equality case".into()
    })
}

pub fn efcg_conclusion(m: &PlaneMap) -> Verdict {
    let prof = m.face_profile();
    let e = facecon_unchecked(m).edge_count();
    let expected = 2 * m.edge_count() - 2 * prof.f(4) - prof.q(3, 3);
    ensure(e == expected, || format!("|E(facecon)| = {e}, formula gives {expected}"))
}

// ECG_CUBIC

pub fn ecg_cubic_hypothesis(m: &PlaneMap) -> bool {
    m.is_regular(3) && (m.vertex_count() == 4 || m.face_profile().q(3, 3) == 0)
}

pub fn ecg_cubic_conclusion(m: &PlaneMap) -> Verdict {
    let c = con(&underlying_graph(m));
    ensure(c == facecon_unchecked(m), || "con differs from facecon".into())?;
    if m.vertex_count() == 4 {
        return ensure(isomorphic(&c, &Graph::complete(4)), || "con(K4) is not K4".into());
    }
    let p = m.vertex_count();
    let f4 = m.face_profile().f(4);
    ensure(c.edge_count() + 2 * f4 == 3 * p, || {
        format!("|E(con)| = {}, 3p - 2f4 = {}", c.edge_count(), 3 * p - 2 * f4)
    })
}

// P_BD

pub fn p_bd_hypothesis(m: &PlaneMap) -> bool {
    m.is_regular(3) && m.is_bipartite() && !is_cube(m)
}

fn is_prism(m: &PlaneMap, k: usize) -> bool {
    k >= 3 && m.vertex_count() == 2 * k && isomorphic(&underlying_graph(m), &underlying_graph(&prism(k)))
}

pub fn p_bd_conclusion(m: &PlaneMap) -> Verdict {
    let p = m.vertex_count();
    let prof = m.face_profile();
    let f4 = prof.f(4);
    let tail: usize = prof
        .f_by_length
        .iter()
        .filter(|&(&l, _)| l >= 8)
        .map(|(&l, &c)| (l / 2 - 3) * c)
        .sum();
    ensure(f4 == 6 + tail, || format!("f4 = {f4}, 6 + sum = {}", 6 + tail))?;
    let c = con(&underlying_graph(m));
    let e = c.edge_count();
    ensure(2 * p <= e && e + 12 <= 3 * p, || format!("|E(con)| = {e} outside [2p, 3p-12], p = {p}"))?;
    let prism_case = p.is_multiple_of(4) && is_prism(m, p / 2);
    ensure((e == 2 * p) == prism_case, || "lower bound equality case".into())?;
    if prism_case {
        let a = underlying_graph(&antiprism(p / 4));
        ensure(isomorphic(&c, &a.disjoint_union(&a)), || {
            "con of the prism is not two antiprisms".into()
        })?;
    }
    let upper_case = f4 == 6 && f4 + prof.f(6) == prof.face_count();
    ensure((e + 12 == 3 * p) == upper_case, || "upper bound equality case".into())?;
    if upper_case {
        let comps = c.components();
        ensure(
            comps.len() == 2 && comps.iter().all(|comp| c.induced(comp).is_maximal_planar()),
            || "con is not two maximal planar graphs".into(),
        )?;
    }
    Ok(())
}

// P_BD2

pub fn con_polyhedral(m: &PlaneMap) -> bool {
    con(&underlying_graph(m)).is_polyhedral()
}

pub fn p_bd2_conclusion(m: &PlaneMap) -> Verdict {
    let p = m.vertex_count();
    let prof = m.face_profile();
    let c = con(&underlying_graph(m));
    let e = c.edge_count();
    ensure(2 * p <= e && e + 6 <= 3 * p, || format!("|E(con)| = {e} outside [2p, 3p-6], p = {p}"))?;
    if m.is_regular(3) {
        let lhs = 3 * prof.f(3) + 2 * prof.f(4) + prof.f(5);
        let rhs = 12 + prof.f_by_length.iter().filter(|&(&l, _)| l >= 7).map(|(&l, &c)| (l - 6) * c).sum::<usize>();
        ensure(lhs == rhs, || format!("3f3 + 2f4 + f5 = {lhs}, expected {rhs}"))?;
    }
    let prism_case = p.is_multiple_of(2) && (p / 2) % 2 == 1 && is_prism(m, p / 2);
    ensure((e == 2 * p) == prism_case, || "lower bound equality case".into())?;
    if prism_case {
        ensure(isomorphic(&c, &underlying_graph(&antiprism(p / 2))), || {
            "con of the odd prism is not the antiprism".into()
        })?;
    }
    if p == 4 {
        return Ok(());
    }
    let upper = e + 6 == 3 * p;
    ensure(upper == (prof.f(4) == 3), || "upper bound equality case".into())?;
    if upper {
        let tag = odd_tag(m);
        let odd = prof.odd_faces.len();
        let ok = (tag == OddDualTag::K2bar && odd == 2 && prof.f(3) == 2)
            || (tag == OddDualTag::K4 && prof.f(3) == 1 && prof.f(5) == 3);
        ensure(ok, || format!("upper bound with odd dual {tag:?}, f3 = {}, f5 = {}", prof.f(3), prof.f(5)))?;
    }
    Ok(())
}

// P_MIN, P_3456, LE_QIJ

pub fn facecon_planar(m: &PlaneMap) -> bool {
    is_planar(&facecon_unchecked(m))
}

pub fn p_min_conclusion(m: &PlaneMap) -> Verdict {
    let p = m.vertex_count();
    let e = facecon_unchecked(m).edge_count();
    let prof = m.face_profile();
    ensure(e + 4 >= 2 * p, || format!("|E(facecon)| = {e} < 2p - 4, p = {p}"))?;
    ensure((e + 4 == 2 * p) == (prof.f(4) == prof.face_count()), || {
        "equality case".into()
    })
}

pub fn facecon_maximal_planar(m: &PlaneMap) -> bool {
    facecon_unchecked(m).is_maximal_planar()
}

pub fn p_3456_conclusion(m: &PlaneMap) -> Verdict {
    let l = m.face_profile().max_face_length();
    ensure(l <= 6, || format!("face of length {l}"))
}

pub fn le_qij_conclusion(m: &PlaneMap) -> Verdict {
    let prof = m.face_profile();
    let lhs = 3 * prof.face_count();
    let rhs = m.edge_count() + prof.q(3, 3) + 2 * prof.f(4);
    ensure(lhs == rhs, || format!("3f = {lhs}, q + q33 + 2f4 = {rhs}"))
}

// LE_2SQ, P_3SQ, THM_MAXPL

pub fn maxpl_hypothesis(m: &PlaneMap) -> bool {
    m.face_profile().max_face_length() <= 4 && facecon_maximal_planar(m)
}

pub fn le_2sq_conclusion(m: &PlaneMap) -> Verdict {
    for f in 0..m.face_count() {
        if m.face_len(f) != 4 {
            continue;
        }
        let mut quads = 0;
        let mut triangles = 0;
        for d in m.face_darts(f) {
            match m.face_len(m.face_of(d ^ 1)) {
                3 => triangles += 1,
                4 => quads += 1,
                _ => {}
            }
        }
        ensure(quads == 2 && triangles == 2, || {
            format!("quadrangle {:?} meets {quads} quadrangles and {triangles} triangles", m.face_walk(f))
        })?;
    }
    let prof = m.face_profile();
    let (f3, f4) = (prof.f(3), prof.f(4));
    let (q33, q34, q44) = (prof.q(3, 3), prof.q(3, 4), prof.q(4, 4));
    ensure(f4 == q44, || format!("f4 = {f4}, q44 = {q44}"))?;
    ensure(2 * f4 == q34, || format!("2f4 = {}, q34 = {q34}", 2 * f4))?;
    ensure(3 * f3 == 2 * q33 + q34, || format!("3f3 = {}, 2q33 + q34 = {}", 3 * f3, 2 * q33 + q34))
}

struct Patterns {
    ring: Graph,
    star: Graph,
    star_face: [usize; 3],
}

fn patterns() -> &'static Patterns {
    static P: OnceLock<Patterns> = OnceLock::new();
    P.get_or_init(|| {
        let seed = TransformState::seed();
        let ring = apply_transform(&seed, &TransformStep::t1([0, 1, 2])).expect("T1 on the seed");
        let star = apply_transform(&seed, &TransformStep::t2([0, 1, 2])).expect("T2 on the seed");
        Patterns {
            ring: underlying_graph(&ring.map),
            star: underlying_graph(&star.map),
            star_face: star.red_faces[0],
        }
    })
}

/// Vertex sets of the clusters of quadrangles, two quadrangles being
/// clustered when they share an edge.
pub fn quad_clusters(m: &PlaneMap) -> Vec<Vec<usize>> {
    let quads: Vec<usize> = (0..m.face_count()).filter(|&f| m.face_len(f) == 4).collect();
    let mut edges = BTreeSet::new();
    for (i, &f) in quads.iter().enumerate() {
        for g in m.adjacent_faces(f) {
            if let Ok(j) = quads.binary_search(&g) {
                edges.insert((i.min(j), i.max(j)));
            }
        }
    }
    Graph::from_edge_set(quads.len(), edges)
        .components()
        .into_iter()
        .map(|comp| {
            let verts: BTreeSet<usize> = comp.iter().flat_map(|&i| m.face_walk(quads[i])).collect();
            verts.into_iter().collect()
        })
        .collect()
}

pub fn p_3sq_conclusion(m: &PlaneMap) -> Verdict {
    let pat = patterns();
    let g = underlying_graph(m);
    for comp in quad_clusters(m) {
        let h = g.induced(&comp);
        if isomorphic(&h, &pat.ring) {
            continue;
        }
        let Some(phi) = find_isomorphism(&pat.star, &h) else {
            return Err(format!("quadrangle component {comp:?} matches neither pattern"));
        };
        let tri: Vec<usize> = pat.star_face.iter().map(|&v| comp[phi[v]]).collect();
        let is_face = m
            .faces()
            .iter()
            .any(|w| w.len() == 3 && tri.iter().all(|v| w.contains(v)));
        ensure(is_face, || format!("triangle {tri:?} of component {comp:?} is not a face"))?;
    }
    Ok(())
}

/// Properties every constructible map must have.
pub fn constructible_conclusion(m: &PlaneMap) -> Verdict {
    ensure(three_connected(&underlying_graph(m)), || "not 3-connected".into())?;
    ensure(m.face_profile().max_face_length() <= 4, || "face longer than 4".into())?;
    ensure(facecon_maximal_planar(m), || "facecon not maximal planar".into())?;
    ensure(m.edge_count().is_multiple_of(3), || format!("{} edges", m.edge_count()))
}

// P_2CONN

pub fn p_2conn_hypothesis(g: &Graph) -> bool {
    two_connected(g) && !g.is_bipartite()
}

pub fn p_2conn_conclusion(g: &Graph) -> Verdict {
    ensure(two_connected(&con(g)), || "con not 2-connected".into())
}

// P_K24, NEG_CONTROL

pub fn odd_dual_is_k2(m: &PlaneMap) -> bool {
    odd_tag(m) == OddDualTag::K2
}

pub fn p_k24_conclusion(m: &PlaneMap) -> Verdict {
    ensure(!three_connected(&facecon_unchecked(m)), || "facecon is 3-connected".into())
}

pub fn neg_control_conclusion(m: &PlaneMap) -> Verdict {
    ensure(!odd_dual_is_k2(m), || "odd dual is K2".into())
}

// RADIAL_ROUNDTRIP

pub fn radial_conclusion(m: &PlaneMap) -> Verdict {
    let r = radial(m).map_err(|e| e.to_string())?;
    ensure(r.faces().iter().all(|w| w.len() == 4), || "radial map is not a quadrangulation".into())?;
    let med = medial(m).map_err(|e| e.to_string())?;
    let rg = underlying_graph(&r);
    ensure(isomorphic(&underlying_graph(&med.dual()), &rg), || {
        "dual(medial) differs from radial".into()
    })?;
    let target = underlying_graph(m).disjoint_union(&underlying_graph(&m.dual()));
    ensure(isomorphic(&facecon_unchecked(&r), &target), || {
        "facecon(radial) differs from G + dual".into()
    })
}

// EVENISE_POST

pub fn not_bipartite(m: &PlaneMap) -> bool {
    !m.is_bipartite()
}

pub fn evenise_conclusion(m: &PlaneMap) -> Verdict {
    let out = evenise(m).map_err(|e| e.to_string())?;
    let g = underlying_graph(&out);
    let orig = underlying_graph(m);
    ensure(g.vertex_count() == m.vertex_count(), || "not spanning".into())?;
    ensure(g.edge_set().is_subset(&orig.edge_set()), || "not a subgraph".into())?;
    ensure(g.is_bipartite(), || "not bipartite".into())?;
    ensure(two_connected(&g), || "not 2-connected".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::families::{pyramid, prism};

    #[test]
    fn cube_checks() {
        let cube = prism(4);
        assert!(thm0_conclusion(&cube).is_ok());
        assert!(thm1_conclusion(&cube).is_ok());
        assert_eq!(thm1_conditions(&cube), [false, false, false]);
        assert!(!p_bd_hypothesis(&cube));
    }

    #[test]
    fn tetrahedron_checks() {
        let k4 = pyramid(3);
        assert_eq!(thm1_conditions(&k4), [true, true, true]);
        assert!(ecg_cubic_hypothesis(&k4));
        assert!(ecg_cubic_conclusion(&k4).is_ok());
    }

    #[test]
    fn prism_lower_bounds() {
        assert!(p_bd_conclusion(&prism(6)).is_ok());
        assert!(con_polyhedral(&prism(5)));
        assert!(p_bd2_conclusion(&prism(5)).is_ok());
    }

    #[test]
    fn seed_patterns_match_themselves() {
        let pat = patterns();
        assert_eq!(pat.ring.edge_count(), 9);
        assert_eq!(pat.star.edge_count(), 12);
    }
}
