//! Per-radius mass profile of eigenvectors: `a_r = sum_{v in S_r} φ(v)^2`.

use crate::error::{Result, TessError};
use crate::surface::Patch;

#[derive(Debug, Clone)]
pub struct DecayProfile {
    /// `(r, a_r)` over the radii the region meets.
    pub mass: Vec<(u32, f64)>,
    /// `log(a_{r+1}/a_r)` between consecutive radii with positive mass.
    pub log_slopes: Vec<f64>,
    /// Index of the mass peak.
    pub peak: usize,
    /// Mass nonincreasing beyond the peak.
    pub decays_past_peak: bool,
}

/// Radial mass distribution of an eigenvector given over `region`.
pub fn decay_profile(patch: &Patch, region: &[u32], phi: &[f64]) -> Result<DecayProfile> {
    if region.len() != phi.len() {
        return Err(TessError::Precondition(format!(
            "vector length {} does not match region size {}",
            phi.len(),
            region.len()
        )));
    }
    let dist = patch.distances();
    let rmax = region.iter().map(|&v| dist[v as usize]).max().unwrap_or(0);
    let mut acc = vec![0.0f64; rmax as usize + 1];
    for (&v, &x) in region.iter().zip(phi) {
        acc[dist[v as usize] as usize] += x * x;
    }
    let mass: Vec<(u32, f64)> = acc
        .iter()
        .enumerate()
        .map(|(r, &a)| (r as u32, a))
        .collect();
    let mut log_slopes = Vec::new();
    for w in acc.windows(2) {
        if w[0] > 0.0 && w[1] > 0.0 {
            log_slopes.push((w[1] / w[0]).ln());
        }
    }
    let peak = acc
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.total_cmp(b.1))
        .map(|(i, _)| i)
        .unwrap_or(0);
    let decays_past_peak = acc[peak..].windows(2).all(|w| w[1] <= w[0] + 1e-12);
    Ok(DecayProfile {
        mass,
        log_slopes,
        peak,
        decays_past_peak,
    })
}
