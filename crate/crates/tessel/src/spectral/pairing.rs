//! Eigenvalue–degree pairing for tessellations with uniformly decreasing
//! curvature: large Dirichlet eigenvalues track large degrees,
//! `d - 2 sqrt(d) <~ lambda <~ d + 2 sqrt(d)`.
//!
//! The ordering lives on the infinite graph; pairing sorted eigenvalues
//! with sorted degrees of a truncation is a finite-stage surrogate.

use std::f64::consts::PI;

use crate::curvature::{curvature_at_infinity_estimate, face_regular_degree, vertex_curvature};
use crate::error::{Result, TessError};
use crate::rat::to_f64;
use crate::spectral::eigs::{sym_eigs_dense, sym_eigs_top, Spectrum, DENSE_LIMIT};
use crate::spectral::laplacian::LaplacianOperator;
use crate::surface::Patch;

#[derive(Debug, Clone)]
pub struct PairingRow {
    pub rank: usize,
    pub eigenvalue: f64,
    pub degree: u32,
    pub ratio: f64,
    /// `(lambda - d) / sqrt(d)`; the window is asymptotically `[-2, 2]`.
    pub normalized_gap: f64,
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct PairingReport {
    pub rows: Vec<PairingRow>,
    /// `-2 pi Phi(v_n) / lambda_n` against the interior angle
    /// `beta(p) = pi (p-2)/p` when the patch is `p`-face-regular; the ratio
    /// approaches `beta(p)` only as degrees blow up, so it is reported, not
    /// asserted.
    pub beta_rows: Vec<(usize, f64, f64)>,
}

/// Pairs the `k` largest Dirichlet eigenvalues of the interior region with
/// the `k` largest interior degrees.
///
/// The hypothesis gate is uniformly decreasing curvature: the finite-stage
/// estimates `u_r` must strictly decrease; bounded-degree inputs are
/// rejected as inapplicable.
pub fn eigen_degree_pairing(patch: &Patch, k: usize, seed: u64) -> Result<PairingReport> {
    let est = curvature_at_infinity_estimate(patch)?;
    let strictly_decreasing = est.u.windows(2).all(|w| w[1] < w[0]) && est.u.len() >= 3;
    if !strictly_decreasing {
        return Err(TessError::Hypothesis(
            "curvature-at-infinity estimates do not strictly decrease; \
             eigenvalue-degree pairing is inapplicable"
                .into(),
        ));
    }
    let interior = patch.interior_vertices();
    if interior.len() < k {
        return Err(TessError::Precondition(format!(
            "interior has {} vertices, fewer than k = {k}",
            interior.len()
        )));
    }
    let l = LaplacianOperator::from_patch(patch, &interior)?;
    let spectrum: Spectrum = if l.n() <= DENSE_LIMIT {
        sym_eigs_dense(&l)?
    } else {
        sym_eigs_top(&l, k, seed)?
    };
    let m = spectrum.eigenvalues.len();
    let mut degrees: Vec<u32> = interior
        .iter()
        .map(|&v| patch.rotation().degree(v) as u32)
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));

    let mut rows = Vec::with_capacity(k);
    for n in 0..k {
        let lambda = spectrum.eigenvalues[m - 1 - n];
        let residual = spectrum.residuals[m - 1 - n];
        let d = degrees[n];
        let ratio = lambda / d as f64;
        let normalized_gap = (lambda - d as f64) / (d as f64).sqrt();
        rows.push(PairingRow {
            rank: n,
            eigenvalue: lambda,
            degree: d,
            ratio,
            normalized_gap,
            residual,
        });
    }

    let mut beta_rows = Vec::new();
    if let Ok(p) = face_regular_degree(patch) {
        let beta_p = PI * (p as f64 - 2.0) / p as f64;
        // Pair by degree rank again: Phi is determined by the degree on a
        // face-regular patch.
        let mut phis: Vec<f64> = interior
            .iter()
            .map(|&v| to_f64(&vertex_curvature(patch, v).expect("interior")))
            .collect();
        phis.sort_by(|a, b| a.total_cmp(b));
        for n in 0..k {
            let lambda = spectrum.eigenvalues[m - 1 - n];
            let ratio = -2.0 * PI * phis[n] / lambda;
            beta_rows.push((n, ratio, beta_p));
        }
    }
    Ok(PairingReport { rows, beta_rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn schedule_pairing_window() {
        let qs: Vec<u32> = (0..=5).map(|r| 6 + 4 * r).collect();
        let patch = generate::schedule_triangulation(&qs, 5).unwrap();
        let rep = eigen_degree_pairing(&patch, 10, 1).unwrap();
        for row in &rep.rows {
            let tol = 3.0 / (row.degree as f64).sqrt();
            assert!(
                (row.ratio - 1.0).abs() <= tol,
                "rank {}: lambda={} d={} ratio={}",
                row.rank,
                row.eigenvalue,
                row.degree,
                row.ratio
            );
        }
        // beta rows exist (triangulation) and the ratio is below the
        // interior angle, approaching it from below as degrees grow.
        assert!(!rep.beta_rows.is_empty());
        for (_, ratio, beta) in &rep.beta_rows {
            assert!(*ratio > 0.5 * beta && *ratio <= *beta * 1.05);
        }
    }

    #[test]
    fn bounded_degrees_are_inapplicable() {
        let patch = generate::hyperbolic_ball(3, 7, 5).unwrap();
        match eigen_degree_pairing(&patch, 5, 1) {
            Err(TessError::Hypothesis(_)) => {}
            other => panic!("expected hypothesis gate, got {other:?}"),
        }
    }
}
