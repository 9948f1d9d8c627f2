//! Embedded-graph kernel: rotation systems, face tracing, closed
//! tessellations and patches, duality, validation and file I/O.

pub mod closed;
pub mod io;
pub mod patch;
pub mod rotation;
pub mod trace;
pub mod validate;

pub use closed::{ClosedTessellation, DualMaps};
pub use io::{load, load_from_str, save, save_to_string, Loaded};
pub use patch::Patch;
pub use rotation::RotationSystem;
pub use trace::{Faces, NO_FACE};
pub use validate::{validate_closed, validate_patch, ValidationReport, Violation};

/// An incident pair (vertex, face).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Corner {
    pub vertex: u32,
    pub face: u32,
}
