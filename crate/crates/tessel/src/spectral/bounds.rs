//! Bottom-of-spectrum bounds on Dirichlet truncations.
//!
//! The Dirichlet restriction to a finite region only raises the bottom of
//! the spectrum, so lower bounds for the infinite operator are asserted
//! against the computed values, while upper bounds for the essential
//! spectrum are reported for context only.

use crate::curvature::{curvature_at_infinity_estimate, face_regular_degree, vertex_curvature};
use crate::error::{Result, TessError};
use crate::geometry::iso_regular_exact;
use crate::growth::salem_root;
use crate::rat::to_f64;
use crate::spectral::eigs::sym_eigs_dense;
use crate::spectral::laplacian::LaplacianOperator;
use crate::surface::Patch;

#[derive(Debug, Clone)]
pub struct Lambda0Report {
    /// Dirichlet bottom eigenvalue per ball radius.
    pub lambda0_by_radius: Vec<(u32, f64)>,
    pub monotone_nonincreasing: bool,
    /// Minimal covered degree `m`.
    pub m: usize,
    /// `m (1 - sqrt(1 - alpha^2))` with the exact `(p,q)` constant, when
    /// the patch is `(p,q)`-regular.
    pub lower_iso: Option<f64>,
    /// `m (1 - sqrt(1 - 4 C_{p,q}^2 K^2))`, when curvature is negative.
    pub lower_curvature: Option<f64>,
    /// `2 m K^2`, when curvature is negative.
    pub lower_2mk2: Option<f64>,
    /// Essential-spectrum upper bound `M_inf (1 - 2 e^{mu/2}/(e^mu + 1))`
    /// with `mu = log x_{p,q}`; context only, not compared against
    /// Dirichlet values.
    pub upper_essential: Option<f64>,
    /// Computed bottoms dominate every asserted lower bound.
    pub lower_bounds_ok: bool,
}

/// Detects `(p,q)`-regularity of the interior (constant complete-face
/// degree and constant interior degree).
pub fn detect_regular(patch: &Patch) -> Option<(u32, u32)> {
    let p = face_regular_degree(patch).ok()? as u32;
    let mut q = None;
    for v in patch.interior_vertices() {
        let d = patch.rotation().degree(v) as u32;
        match q {
            None => q = Some(d),
            Some(x) if x != d => return None,
            _ => {}
        }
    }
    q.map(|q| (p, q))
}

pub fn lambda0_bounds_report(patch: &Patch, max_radius: u32) -> Result<Lambda0Report> {
    let est = curvature_at_infinity_estimate(patch)?;
    let interior = patch.interior_vertices();
    let m = interior
        .iter()
        .map(|&v| patch.rotation().degree(v))
        .min()
        .ok_or_else(|| TessError::Precondition("patch has empty interior".into()))?;

    let dist = patch.distances();
    let rmax = patch.full_rotation_radius().min(max_radius);
    if rmax < 1 {
        return Err(TessError::Precondition("no usable Dirichlet radii".into()));
    }
    let mut lambda0_by_radius = Vec::new();
    for r in 1..=rmax {
        let region: Vec<u32> = (0..patch.vertex_count() as u32)
            .filter(|&v| dist[v as usize] <= r)
            .collect();
        if region.len() > crate::spectral::eigs::DENSE_LIMIT {
            break;
        }
        let l = LaplacianOperator::from_patch(patch, &region)?;
        let s = sym_eigs_dense(&l)?;
        lambda0_by_radius.push((r, s.lambda0()));
    }
    let monotone_nonincreasing = lambda0_by_radius
        .windows(2)
        .all(|w| w[1].1 <= w[0].1 + 1e-12);

    let regular = detect_regular(patch);
    let lower_iso = regular.and_then(|(p, q)| {
        let alpha = iso_regular_exact(p, q).ok()?.to_f64();
        Some(m as f64 * (1.0 - (1.0 - alpha * alpha).sqrt()))
    });

    let negative = interior.iter().all(|&v| {
        vertex_curvature(patch, v)
            .map(|phi| phi < crate::rat::int(0))
            .unwrap_or(false)
    });
    let (lower_curvature, lower_2mk2) = if negative {
        let k = to_f64(&est.k);
        let pmax = (0..patch.faces().count() as u32)
            .map(|f| patch.faces().degree(f) as u32)
            .max();
        let qmax = interior
            .iter()
            .map(|&v| patch.rotation().degree(v) as u32)
            .max();
        let c = to_f64(&crate::geometry::iso_constant_cpq(pmax, qmax));
        let inner = 1.0 - 4.0 * c * c * k * k;
        let mckean = if inner >= 0.0 {
            Some(m as f64 * (1.0 - inner.sqrt()))
        } else {
            None
        };
        (mckean, Some(2.0 * m as f64 * k * k))
    } else {
        (None, None)
    };

    let upper_essential = regular.and_then(|(p, q)| {
        let root = salem_root(p, q).ok()?;
        let x = root.value;
        let m_inf = q as f64;
        Some(m_inf * (1.0 - 2.0 * x.sqrt() / (x + 1.0)))
    });

    let lambda_last = lambda0_by_radius.last().unwrap().1;
    let mut lower_bounds_ok = true;
    for bound in [lower_iso, lower_curvature, lower_2mk2]
        .into_iter()
        .flatten()
    {
        lower_bounds_ok &= lambda_last >= bound - 1e-12;
    }
    Ok(Lambda0Report {
        lambda0_by_radius,
        monotone_nonincreasing,
        m,
        lower_iso,
        lower_curvature,
        lower_2mk2,
        upper_essential,
        lower_bounds_ok,
    })
}
