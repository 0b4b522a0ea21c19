//! Named families, isomorph-free enumeration and the T1/T2/T3 engine.

pub mod constructible;
pub mod enumerate;
pub mod families;
pub mod transform;

pub use constructible::{enumerate_constructible, Constructible};
pub use enumerate::{enumerate_polyhedra, enumerate_triangulations};
pub use families::{family, FamilyError};
pub use transform::{apply_transform, Payload, StepKind, TransformError, TransformState, TransformStep};
