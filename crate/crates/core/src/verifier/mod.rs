//! Exhaustive claim verification over bounded universes.
//!
//! Every claim pairs a hypothesis with a conclusion (see [`checks`]) and a
//! universe of instances. A report lists each instance satisfying the
//! hypothesis but violating the conclusion, sorted by canonical code.

pub mod checks;
pub mod universe;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::underlying_graph;
use crate::io::planar_code;
use crate::planemap::{edge_of, PlaneMap};
use checks::Verdict;
use universe::{estimate_polyhedra, estimate_triangulations, merge, Instance, UniverseCache};

pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimId {
    Thm0,
    Thm1,
    Thm2,
    Cuodd,
    LeDeg,
    CorBds,
    Efcg,
    EcgCubic,
    PBd,
    PBd2,
    PMin,
    #[serde(rename = "P_3456")]
    P3456,
    LeQij,
    #[serde(rename = "LE_2SQ")]
    Le2sq,
    #[serde(rename = "P_3SQ")]
    P3sq,
    ThmMaxpl,
    #[serde(rename = "P_2CONN")]
    P2conn,
    PK24,
    RadialRoundtrip,
    EvenisePost,
    Le5,
    NegControl,
}

impl ClaimId {
    pub const ALL: [ClaimId; 22] = [
        ClaimId::Thm0,
        ClaimId::Thm1,
        ClaimId::Thm2,
        ClaimId::Cuodd,
        ClaimId::LeDeg,
        ClaimId::CorBds,
        ClaimId::Efcg,
        ClaimId::EcgCubic,
        ClaimId::PBd,
        ClaimId::PBd2,
        ClaimId::PMin,
        ClaimId::P3456,
        ClaimId::LeQij,
        ClaimId::Le2sq,
        ClaimId::P3sq,
        ClaimId::ThmMaxpl,
        ClaimId::P2conn,
        ClaimId::PK24,
        ClaimId::RadialRoundtrip,
        ClaimId::EvenisePost,
        ClaimId::Le5,
        ClaimId::NegControl,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Thm0 => "THM0",
            ClaimId::Thm1 => "THM1",
            ClaimId::Thm2 => "THM2",
            ClaimId::Cuodd => "CUODD",
            ClaimId::LeDeg => "LE_DEG",
            ClaimId::CorBds => "COR_BDS",
            ClaimId::Efcg => "EFCG",
            ClaimId::EcgCubic => "ECG_CUBIC",
            ClaimId::PBd => "P_BD",
            ClaimId::PBd2 => "P_BD2",
            ClaimId::PMin => "P_MIN",
            ClaimId::P3456 => "P_3456",
            ClaimId::LeQij => "LE_QIJ",
            ClaimId::Le2sq => "LE_2SQ",
            ClaimId::P3sq => "P_3SQ",
            ClaimId::ThmMaxpl => "THM_MAXPL",
            ClaimId::P2conn => "P_2CONN",
            ClaimId::PK24 => "P_K24",
            ClaimId::RadialRoundtrip => "RADIAL_ROUNDTRIP",
            ClaimId::EvenisePost => "EVENISE_POST",
            ClaimId::Le5 => "LE5",
            ClaimId::NegControl => "NEG_CONTROL",
        }
    }

    /// Default universe bounds.
    pub fn default_limits(self) -> Limits {
        let v = |n| Limits {
            max_vertices: Some(n),
            ..Limits::default()
        };
        let f = |n| Limits {
            max_faces: Some(n),
            ..Limits::default()
        };
        match self {
            ClaimId::Thm0 | ClaimId::Thm2 | ClaimId::Le5 | ClaimId::PK24 | ClaimId::P2conn => v(9),
            ClaimId::Thm1 | ClaimId::EcgCubic | ClaimId::PBd | ClaimId::EvenisePost => f(12),
            ClaimId::Cuodd => v(12),
            ClaimId::LeDeg
            | ClaimId::CorBds
            | ClaimId::Efcg
            | ClaimId::PBd2
            | ClaimId::PMin
            | ClaimId::P3456
            | ClaimId::LeQij => Limits {
                max_vertices: Some(9),
                max_faces: Some(12),
                exhaustive_vertices: None,
            },
            ClaimId::Le2sq | ClaimId::P3sq | ClaimId::ThmMaxpl => Limits {
                max_vertices: Some(12),
                max_faces: None,
                exhaustive_vertices: Some(9),
            },
            ClaimId::RadialRoundtrip => v(8),
            ClaimId::NegControl => f(10),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.to_ascii_uppercase().replace('-', "_");
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == key)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

/// Universe bounds. Unset fields are unused by the claim.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_faces: Option<usize>,
    /// For THM_MAXPL, LE_2SQ and P_3SQ: vertex bound of the full polyhedron enumeration.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive_vertices: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: ClaimId,
    pub limits: Limits,
}

impl Claim {
    pub fn new(id: ClaimId) -> Self {
        Self {
            id,
            limits: id.default_limits(),
        }
    }

    /// Replaces the bounds the claim uses; bounds it does not use are ignored.
    pub fn with_overrides(mut self, max_vertices: Option<usize>, max_faces: Option<usize>) -> Self {
        if self.limits.max_vertices.is_some() {
            self.limits.max_vertices = max_vertices.or(self.limits.max_vertices);
        }
        if self.limits.max_faces.is_some() {
            self.limits.max_faces = max_faces.or(self.limits.max_faces);
        }
        if let (Some(e), Some(v)) = (self.limits.exhaustive_vertices, self.limits.max_vertices) {
            self.limits.exhaustive_vertices = Some(e.min(v));
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub planar_code_hex: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim: ClaimId,
    pub limits: Limits,
    pub universe: String,
    pub checked: usize,
    /// Instances satisfying the hypothesis.
    pub hypothesis_held: usize,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_s: f64,
    pub pass: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown claim {0:?}")]
    UnknownClaim(String),
    #[error("claim {claim} needs about {estimate} instances, budget is {budget}")]
    LimitTooLarge { claim: ClaimId, estimate: u64, budget: u64 },
    #[error("claim {0} has no size estimate for these limits")]
    Unbounded(ClaimId),
}

/// The cube with one face diagonal.
pub fn cube_with_diagonal() -> PlaneMap {
    PlaneMap::build_from_rotation(&[
        vec![1, 4, 3, 2],
        vec![2, 5, 0],
        vec![3, 6, 1, 0],
        vec![0, 7, 2],
        vec![0, 5, 7],
        vec![1, 6, 4],
        vec![2, 7, 5],
        vec![3, 4, 6],
    ])
    .expect("cube with a diagonal")
}

fn hex(m: &PlaneMap) -> String {
    let bytes = planar_code::write(std::slice::from_ref(m)).expect("small maps encode");
    hex::encode(bytes)
}

struct Found {
    code: Vec<u8>,
    example: Counterexample,
}

impl Found {
    fn new(inst: &Instance, detail: String) -> Self {
        Self {
            code: inst.code.clone(),
            example: Counterexample {
                planar_code_hex: hex(&inst.map),
                detail,
            },
        }
    }
}

struct Outcome {
    universe: String,
    checked: usize,
    hypothesis_held: usize,
    found: Vec<Found>,
}

fn scan(items: &[Instance], hyp: fn(&PlaneMap) -> bool, concl: fn(&PlaneMap) -> Verdict) -> (usize, Vec<Found>) {
    let held: Vec<&Instance> = items.par_iter().filter(|i| hyp(&i.map)).collect();
    let found = held
        .par_iter()
        .filter_map(|i| concl(&i.map).err().map(|d| Found::new(i, format!("conclusion: {d}"))))
        .collect();
    (held.len(), found)
}

/// Runs claims, sharing enumerated universes between them.
pub struct Verifier {
    budget: u64,
    cache: UniverseCache,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier {
    pub fn new() -> Self {
        Self::with_budget(DEFAULT_BUDGET)
    }

    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            cache: UniverseCache::default(),
        }
    }

    /// The shared universes.
    pub fn cache(&self) -> &UniverseCache {
        &self.cache
    }

    /// Rough instance count of a claim's universe, `None` if unknown.
    pub fn estimate(claim: &Claim) -> Option<u64> {
        let l = claim.limits;
        let v = l.max_vertices.unwrap_or(0);
        let f = l.max_faces.unwrap_or(0);
        let e = l.exhaustive_vertices.unwrap_or(0);
        Some(match claim.id {
            ClaimId::Thm0 | ClaimId::Thm2 | ClaimId::Le5 | ClaimId::PK24 | ClaimId::RadialRoundtrip => {
                estimate_polyhedra(v)?
            }
            ClaimId::P2conn => estimate_polyhedra(v)? * (3 * v as u64),
            ClaimId::Thm1 | ClaimId::EcgCubic | ClaimId::PBd | ClaimId::EvenisePost | ClaimId::NegControl => {
                estimate_triangulations(f)?
            }
            ClaimId::Cuodd => estimate_triangulations(v)?,
            ClaimId::LeDeg
            | ClaimId::CorBds
            | ClaimId::Efcg
            | ClaimId::PBd2
            | ClaimId::PMin
            | ClaimId::P3456
            | ClaimId::LeQij => estimate_polyhedra(v)? + estimate_triangulations(f)?,
            ClaimId::Le2sq | ClaimId::P3sq | ClaimId::ThmMaxpl => {
                estimate_polyhedra(e)? + 2 * estimate_triangulations(v)?
            }
        })
    }

    pub fn run(&self, claim: &Claim) -> Result<VerificationReport, VerifyError> {
        let estimate = Self::estimate(claim).ok_or(VerifyError::Unbounded(claim.id))?;
        if estimate > self.budget {
            return Err(VerifyError::LimitTooLarge {
                claim: claim.id,
                estimate,
                budget: self.budget,
            });
        }
        let start = Instant::now();
        let Outcome {
            universe,
            checked,
            hypothesis_held,
            mut found,
        } = self.evaluate(claim);
        found.sort_by(|a, b| a.code.cmp(&b.code).then_with(|| a.example.detail.cmp(&b.example.detail)));
        let counterexamples: Vec<Counterexample> = found.into_iter().map(|f| f.example).collect();
        Ok(VerificationReport {
            claim: claim.id,
            limits: claim.limits,
            universe,
            checked,
            hypothesis_held,
            pass: counterexamples.is_empty(),
            counterexamples,
            elapsed_s: start.elapsed().as_secs_f64(),
        })
    }

    /// Runs `claims` in order.
    pub fn run_suite(&self, claims: &[Claim]) -> Vec<Result<VerificationReport, VerifyError>> {
        claims.iter().map(|c| self.run(c)).collect()
    }

    fn evaluate(&self, claim: &Claim) -> Outcome {
        use checks::*;
        let l = claim.limits;
        let v = l.max_vertices.unwrap_or(0);
        let f = l.max_faces.unwrap_or(0);
        let polyhedra = || (format!("polyhedra on at most {v} vertices"), self.cache.polyhedra(v));
        let cubic = || (format!("cubic polyhedra with at most {f} faces"), self.cache.cubic(f));
        let formula = || {
            (
                format!("polyhedra on at most {v} vertices and cubic polyhedra with at most {f} faces"),
                merge(vec![self.cache.polyhedra(v), self.cache.cubic(f)]),
            )
        };
        let simple = |(desc, items): (String, Vec<Instance>), hyp: fn(&PlaneMap) -> bool, concl: fn(&PlaneMap) -> Verdict| {
            let (hypothesis_held, found) = scan(&items, hyp, concl);
            Outcome {
                universe: desc,
                checked: items.len(),
                hypothesis_held,
                found,
            }
        };
        match claim.id {
            ClaimId::Thm0 => simple(polyhedra(), always, thm0_conclusion),
            ClaimId::Thm1 => simple(cubic(), is_cubic, thm1_conclusion),
            ClaimId::Thm2 => simple(polyhedra(), max_degree_at_least_4, thm2_conclusion),
            ClaimId::Le5 => simple(polyhedra(), max_degree_at_least_5, le5_conclusion),
            ClaimId::Cuodd => simple(
                (format!("triangulations on at most {v} vertices"), self.cache.triangulations(v)),
                two_odd_vertices,
                cuodd_conclusion,
            ),
            ClaimId::LeDeg => simple(formula(), always, le_deg_conclusion),
            ClaimId::CorBds => simple(formula(), always, cor_bds_conclusion),
            ClaimId::Efcg => simple(formula(), always, efcg_conclusion),
            ClaimId::EcgCubic => simple(cubic(), ecg_cubic_hypothesis, ecg_cubic_conclusion),
            ClaimId::PBd => simple(cubic(), p_bd_hypothesis, p_bd_conclusion),
            ClaimId::PBd2 => simple(formula(), con_polyhedral, p_bd2_conclusion),
            ClaimId::PMin => simple(formula(), facecon_planar, p_min_conclusion),
            ClaimId::P3456 => simple(formula(), facecon_maximal_planar, p_3456_conclusion),
            ClaimId::LeQij => simple(formula(), facecon_maximal_planar, le_qij_conclusion),
            ClaimId::Le2sq => simple(self.maxpl_universe(&l), maxpl_hypothesis, le_2sq_conclusion),
            ClaimId::P3sq => simple(self.maxpl_universe(&l), maxpl_hypothesis, p_3sq_conclusion),
            ClaimId::ThmMaxpl => self.thm_maxpl(&l),
            ClaimId::P2conn => self.p_2conn(v),
            ClaimId::PK24 => {
                let (desc, mut items) = polyhedra();
                items.push(Instance::new(&cube_with_diagonal()));
                simple((desc + " and the cube with a diagonal", merge(vec![items])), odd_dual_is_k2, p_k24_conclusion)
            }
            ClaimId::RadialRoundtrip => simple(polyhedra(), always, radial_conclusion),
            ClaimId::EvenisePost => simple(cubic(), not_bipartite, evenise_conclusion),
            ClaimId::NegControl => {
                let (desc, mut items) = cubic();
                items.push(Instance::new(&cube_with_diagonal()));
                simple((desc + " and the cube with a diagonal", merge(vec![items])), always, neg_control_conclusion)
            }
        }
    }

    fn maxpl_universe(&self, l: &Limits) -> (String, Vec<Instance>) {
        let v = l.max_vertices.unwrap_or(0);
        let e = l.exhaustive_vertices.unwrap_or(0).min(v);
        let built = self.cache.constructible(v);
        let items = merge(vec![
            self.cache.polyhedra(e),
            built.iter().map(|b| b.instance.clone()).collect(),
        ]);
        (
            format!("polyhedra on at most {e} vertices and constructible maps on at most {v} vertices"),
            items,
        )
    }

    fn thm_maxpl(&self, l: &Limits) -> Outcome {
        let v = l.max_vertices.unwrap_or(0);
        let e = l.exhaustive_vertices.unwrap_or(0).min(v);
        let built = self.cache.constructible(v);
        let mut found: Vec<Found> = built
            .par_iter()
            .filter_map(|b| {
                let replayed = crate::generators::TransformState::replay(&b.state.script)
                    .map(|s| crate::canon::canonical_code(&s.map) == b.instance.code)
                    .unwrap_or(false);
                if !replayed {
                    return Some(Found::new(&b.instance, "constructible: script does not replay".into()));
                }
                checks::constructible_conclusion(&b.instance.map)
                    .err()
                    .map(|d| Found::new(&b.instance, format!("constructible: {d}")))
            })
            .collect();
        let mut checked = built.len();
        let mut held = built.len();
        for n in 4..=e {
            let level = self.cache.polyhedra_exact(n);
            checked += level.len();
            let filtered: Vec<&Instance> = level.par_iter().filter(|i| checks::maxpl_hypothesis(&i.map)).collect();
            held += filtered.len();
            let constructed: Vec<&Instance> = built
                .iter()
                .map(|b| &b.instance)
                .filter(|i| i.map.vertex_count() == n)
                .collect();
            found.extend(maxpl_mismatches(&filtered, &constructed));
        }
        Outcome {
            universe: format!("constructible maps on at most {v} vertices, compared with polyhedra on at most {e} vertices"),
            checked,
            hypothesis_held: held,
            found,
        }
    }

    fn p_2conn(&self, v: usize) -> Outcome {
        let items = self.cache.polyhedra(v);
        let per: Vec<(usize, usize, Vec<Found>)> = items
            .par_iter()
            .map(|inst| {
                let m = &inst.map;
                let mut checked = 0;
                let mut held = 0;
                let mut found = Vec::new();
                let mut candidates = vec![(m.clone(), None)];
                for e in (0..m.dart_count()).step_by(2) {
                    if let Ok(smaller) = m.delete_edges(&[edge_of(e)]) {
                        candidates.push((smaller, Some((m.tail(e), m.head(e)))));
                    }
                }
                for (map, removed) in candidates {
                    checked += 1;
                    let g = underlying_graph(&map);
                    if !checks::p_2conn_hypothesis(&g) {
                        continue;
                    }
                    held += 1;
                    if let Err(d) = checks::p_2conn_conclusion(&g) {
                        let detail = match removed {
                            Some((a, b)) => format!("conclusion: {d} (polyhedron minus edge {a}-{b})"),
                            None => format!("conclusion: {d}"),
                        };
                        found.push(Found {
                            code: inst.code.clone(),
                            example: Counterexample {
                                planar_code_hex: hex(&map),
                                detail,
                            },
                        });
                    }
                }
                (checked, held, found)
            })
            .collect();
        Outcome {
            universe: format!("polyhedra on at most {v} vertices and their single-edge deletions"),
            checked: per.iter().map(|(c, _, _)| c).sum(),
            hypothesis_held: per.iter().map(|(_, h, _)| h).sum(),
            found: per.into_iter().flat_map(|(_, _, f)| f).collect(),
        }
    }
}

/// Differences between the filtered and the constructed code sets.
fn maxpl_mismatches(filtered: &[&Instance], constructed: &[&Instance]) -> Vec<Found> {
    let a: BTreeSet<&[u8]> = filtered.iter().map(|i| i.code.as_slice()).collect();
    let b: BTreeSet<&[u8]> = constructed.iter().map(|i| i.code.as_slice()).collect();
    let mut out = Vec::new();
    for i in filtered.iter().filter(|i| !b.contains(i.code.as_slice())) {
        out.push(Found::new(i, "facecon maximal planar with faces of length at most 4, not constructible".into()));
    }
    for i in constructed.iter().filter(|i| !a.contains(i.code.as_slice())) {
        out.push(Found::new(i, "constructible but missing from the filtered enumeration".into()));
    }
    out
}

/// Runs one claim with a fresh verifier and the default budget.
pub fn run_claim(claim: &Claim) -> Result<VerificationReport, VerifyError> {
    Verifier::new().run(claim)
}

/// Every claim except the negative control, at default limits.
pub fn default_suite() -> Vec<Claim> {
    ClaimId::ALL
        .into_iter()
        .filter(|&c| c != ClaimId::NegControl)
        .map(Claim::new)
        .collect()
}

/// Runs [`default_suite`] with shared universes.
pub fn run_suite() -> Vec<Result<VerificationReport, VerifyError>> {
    Verifier::new().run_suite(&default_suite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{odd_dual, OddDualTag};

    #[test]
    fn claim_names_roundtrip() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.name()));
        }
        assert_eq!("thm1".parse::<ClaimId>().unwrap(), ClaimId::Thm1);
        assert!("nope".parse::<ClaimId>().is_err());
    }

    #[test]
    fn planted_fixture() {
        let m = cube_with_diagonal();
        assert_eq!(m.edge_count(), 13);
        assert_eq!(odd_dual(&m).1.tag, OddDualTag::K2);
    }

    #[test]
    fn budget_is_enforced() {
        let v = Verifier::with_budget(10);
        let err = v.run(&Claim::new(ClaimId::Thm0)).unwrap_err();
        assert!(matches!(err, VerifyError::LimitTooLarge { .. }));
        let huge = Claim::new(ClaimId::Thm0).with_overrides(Some(20), None);
        assert_eq!(Verifier::new().run(&huge).unwrap_err(), VerifyError::Unbounded(ClaimId::Thm0));
    }

    #[test]
    fn small_claims_pass() {
        let v = Verifier::new();
        for id in [ClaimId::Thm0, ClaimId::Thm1, ClaimId::Cuodd, ClaimId::Efcg] {
            let claim = Claim::new(id).with_overrides(Some(7), Some(8));
            let r = v.run(&claim).unwrap();
            assert!(r.pass, "{id}: {:?}", r.counterexamples);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn mismatch_detection() {
        let a = Instance::new(&crate::generators::families::prism(3));
        let b = Instance::new(&crate::generators::families::pyramid(3));
        let found = maxpl_mismatches(&[&a, &b], &[&a]);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].code, b.code);
    }
}
