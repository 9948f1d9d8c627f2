//! Spectral theory of the combinatorial Laplacian on finite regions.
//!
//! The assembled operator is the positive `L = Deg - Adj` representing
//! `-Δ`; statements about `-Δ` carry over verbatim, and eigen-equations
//! written as `Δφ = λφ` with `λ > 0` are read as `-Δφ = λφ`.

pub mod bounds;
pub mod compact;
pub mod decay;
pub mod eigs;
pub mod exact;
pub mod laplacian;
pub mod pairing;
pub mod polar;

pub use bounds::{detect_regular, lambda0_bounds_report, Lambda0Report};
pub use compact::{compact_eigenfunction_search, enumerate_supports, CompactCertificate};
pub use decay::{decay_profile, DecayProfile};
pub use eigs::{sym_eigs_dense, sym_eigs_top, Spectrum, DENSE_LIMIT, RESIDUAL_TOL};
pub use laplacian::LaplacianOperator;
pub use pairing::{eigen_degree_pairing, PairingReport, PairingRow};
pub use polar::{polar_ranks, PolarReport, PolarRow};
