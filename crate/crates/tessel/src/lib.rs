//! Tessellations of surfaces as combinatorial objects.
//!
//! The crate builds embedded graphs from rotation systems (a cyclic order of
//! neighbors at every vertex), derives their faces by face tracing, and
//! computes exact combinatorial curvature together with the geometric and
//! spectral quantities that curvature controls:
//!
//! - [`surface`]: rotation systems, face tracing, closed tessellations and
//!   finite patches of infinite ones, duals, validation and file I/O.
//! - [`generate`]: deterministic constructors: platonic solids, prisms and
//!   antiprisms, flat lattices and torus quotients, hyperbolic `(p,q)` balls,
//!   the trihexagonal family, triangulations with a radial degree schedule,
//!   and a few hand-built fixtures.
//! - [`curvature`]: exact rational corner and vertex curvature, Gauss–Bonnet
//!   sums, curvature bounds, sphere averages and curvature-at-infinity
//!   estimates.
//! - [`geometry`]: distance spheres, cut loci, boundary/volume counting,
//!   isoperimetric constants and their bounds.
//! - [`growth`]: sphere-size recursions for face-regular tessellations,
//!   Salem polynomials and growth rates, ball-growth comparisons.
//! - [`spectral`]: the combinatorial Laplacian on finite regions, eigenvalue
//!   bounds, eigenvalue–degree pairing, compactly supported eigenfunctions
//!   and the polar decomposition by distance spheres.
//! - [`report`]: reproducible JSON/CSV report bundles for the CLI.
//!
//! All curvature arithmetic is exact: curvature values are rationals and are
//! kept that way end to end. Floating point enters only where the checked
//! quantities are genuinely irrational (square roots, eigenvalues, growth
//! rates), and every such check carries an explicit tolerance.

pub mod curvature;
pub mod error;
pub mod generate;
pub mod geometry;
pub mod growth;
pub mod rat;
pub mod report;
pub mod spectral;
pub mod surface;

pub use error::TessError;
pub use rat::Rational;
pub use surface::{ClosedTessellation, Patch, RotationSystem};
