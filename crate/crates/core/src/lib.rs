//! Plane maps, polyhedral graphs and the common neighbourhood operators.
//!
//! The crate is organised bottom-up:
//!
//! * [`planemap`] and [`canon`]: rotation systems, faces, duals, canonical codes;
//! * [`graph`], [`planarity`], [`iso`]: abstract graphs and exact predicates;
//! * [`operators`]: `con`, `facecon`, odd duals, evenisation, radial and medial maps;
//! * [`generators`]: named families, isomorph-free enumeration, the T1/T2/T3 engine;
//! * [`verifier`]: exhaustive bounded checks with counterexample reports;
//! * [`io`]: planar_code, rotation JSON, edge-list JSON and DOT.

pub mod canon;
pub mod generators;
pub mod graph;
pub mod io;
pub mod iso;
pub mod operators;
pub mod planarity;
pub mod planemap;
pub mod verifier;

pub use canon::{canonical_code, canonical_map};
pub use graph::{classify, underlying_graph, Graph, GraphClass, GraphError};
pub use iso::isomorphic;
pub use planarity::is_planar;
pub use planemap::{FaceProfile, MapError, PlaneMap};
