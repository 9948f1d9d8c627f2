//! Compactly supported eigenfunctions with exact certificates.
//!
//! A finitely supported `φ` is an eigenfunction of the ambient operator
//! `L = Deg - Adj` for eigenvalue `λ` iff
//!
//! 1. `(L_W - λ) φ = 0` on the support `W` (full ambient degrees), and
//! 2. `sum_{w in W, w ~ u} φ(w) = 0` for every `u` outside `W` adjacent
//!    to `W`.
//!
//! The search scans candidate supports numerically (eigenvalue clusters of
//! `L_W` annihilated by the outer adjacency map) and then certifies every
//! candidate in integer arithmetic; only exact certificates are returned.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Result, TessError};
use crate::rat::{int, rat, Rational};
use crate::spectral::eigs::sym_eigs_dense;
use crate::spectral::exact::{clear_denominators, rational_kernel};
use crate::spectral::laplacian::LaplacianOperator;
use crate::surface::Patch;

#[derive(Debug, Clone)]
pub struct CompactCertificate {
    pub support: Vec<u32>,
    pub eigenvalue: Rational,
    /// Integer vector aligned with `support`; exact residual zero.
    pub vector: Vec<BigInt>,
}

/// Candidate supports: single complete faces, and balls `B_k(v)` for
/// `k <= 2`, all with full neighborhoods inside the patch and inside
/// `B_limit` of the center.
pub fn enumerate_supports(patch: &Patch, radius_limit: u32) -> Vec<Vec<u32>> {
    let dist = patch.distances();
    let usable = |v: u32| !patch.is_partial(v) && dist[v as usize] <= radius_limit;
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |mut w: Vec<u32>| {
        w.sort_unstable();
        w.dedup();
        if !w.is_empty() && seen.insert(w.clone()) {
            out.push(w);
        }
    };
    for (_, cycle) in patch.faces().iter() {
        if cycle.iter().all(|&v| usable(v)) {
            push(cycle.to_vec());
        }
    }
    let rs = patch.rotation();
    for v in 0..patch.vertex_count() as u32 {
        if !usable(v) {
            continue;
        }
        // Depth-bounded local BFS; full-graph scans would be quadratic.
        let mut ball = vec![v];
        let mut frontier = vec![v];
        let mut in_ball = std::collections::BTreeSet::from([v]);
        for _ in 1..=2u32 {
            let mut next = Vec::new();
            for &x in &frontier {
                for &u in rs.neighbors(x) {
                    if in_ball.insert(u) {
                        next.push(u);
                    }
                }
            }
            ball.extend_from_slice(&next);
            frontier = next;
            if ball.iter().all(|&u| usable(u)) {
                push(ball.clone());
            }
        }
    }
    out
}

/// Rows of the outer adjacency map: one row per outside vertex adjacent to
/// the support, over the support columns.
fn outer_adjacency(patch: &Patch, support: &[u32]) -> Vec<Vec<i64>> {
    let index: std::collections::HashMap<u32, usize> =
        support.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut rows: std::collections::BTreeMap<u32, Vec<i64>> = std::collections::BTreeMap::new();
    for (&v, &i) in index.iter() {
        for &u in patch.rotation().neighbors(v) {
            if !index.contains_key(&u) {
                rows.entry(u).or_insert_with(|| vec![0; support.len()])[i] = 1;
            }
        }
    }
    rows.into_values().collect()
}

/// Exhaustive search over the given supports. Only exactly certified
/// eigenfunctions are returned.
pub fn compact_eigenfunction_search(
    patch: &Patch,
    supports: &[Vec<u32>],
) -> Result<Vec<CompactCertificate>> {
    let mut certs: Vec<CompactCertificate> = Vec::new();
    for support in supports {
        for &v in support {
            if patch.is_partial(v) {
                return Err(TessError::Precondition(format!(
                    "support vertex {v} has an unknown full neighborhood"
                )));
            }
        }
        let l = LaplacianOperator::from_patch(patch, support)?;
        let spectrum = sym_eigs_dense(&l)?;
        let b_rows = outer_adjacency(patch, &l.region);
        let scale = l.max_degree as f64;

        // Cluster the numeric eigenvalues and test whether the outer map
        // annihilates some vector of the cluster span.
        let vals = &spectrum.eigenvalues;
        let vecs = spectrum.eigenvectors.as_ref().unwrap();
        let n = l.n();
        let mut i = 0;
        while i < n {
            let mut j = i + 1;
            while j < n && vals[j] - vals[j - 1] < 1e-6 * scale.max(1.0) {
                j += 1;
            }
            let lambda_num = vals[i..j].iter().sum::<f64>() / (j - i) as f64;
            let annihilated = if b_rows.is_empty() {
                true
            } else {
                let mut bv = DMatrix::zeros(b_rows.len(), j - i);
                for (r, row) in b_rows.iter().enumerate() {
                    for (c, vec) in vecs[i..j].iter().enumerate() {
                        let mut acc = 0.0;
                        for (k, &coef) in row.iter().enumerate() {
                            acc += coef as f64 * vec[k];
                        }
                        bv[(r, c)] = acc;
                    }
                }
                let sv = bv.svd(false, false);
                let smin = sv
                    .singular_values
                    .iter()
                    .cloned()
                    .fold(f64::INFINITY, f64::min);
                smin < 1e-7 * scale.max(1.0)
            };
            if annihilated {
                if let Some(lambda) = rationalize(lambda_num, 1e-6) {
                    if let Some(cert) = certify(&l, &b_rows, &lambda) {
                        if !certs
                            .iter()
                            .any(|c| c.support == l.region && c.eigenvalue == cert.eigenvalue)
                        {
                            certs.push(cert);
                        }
                    }
                }
            }
            i = j;
        }
    }
    Ok(certs)
}

/// Exact verification: kernel of the stacked system over the rationals,
/// re-checked entry by entry after clearing denominators.
fn certify(
    l: &LaplacianOperator,
    b_rows: &[Vec<i64>],
    lambda: &Rational,
) -> Option<CompactCertificate> {
    let n = l.n();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n + b_rows.len());
    for i in 0..n {
        let mut row = vec![Rational::zero(); n];
        row[i] = int(l.degree[i] as i64) - lambda.clone();
        for &j in &l.adj[i] {
            row[j as usize] = int(-1);
        }
        rows.push(row);
    }
    for brow in b_rows {
        rows.push(brow.iter().map(|&x| int(x)).collect());
    }
    let kernel = rational_kernel(rows, n);
    let basis = kernel.first()?;
    let vector = clear_denominators(basis);

    // Independent exact re-check of both eigenfunction conditions.
    for i in 0..n {
        let mut acc =
            (int(l.degree[i] as i64) - lambda.clone()) * Rational::from_integer(vector[i].clone());
        for &j in &l.adj[i] {
            acc -= Rational::from_integer(vector[j as usize].clone());
        }
        if !acc.is_zero() {
            return None;
        }
    }
    for brow in b_rows {
        let mut acc = BigInt::zero();
        for (k, &coef) in brow.iter().enumerate() {
            acc += coef * &vector[k];
        }
        if !acc.is_zero() {
            return None;
        }
    }
    if vector.iter().all(|x| x.is_zero()) {
        return None;
    }
    Some(CompactCertificate {
        support: l.region.clone(),
        eigenvalue: lambda.clone(),
        vector,
    })
}

/// Nearest rational with small denominator within `tol`.
fn rationalize(x: f64, tol: f64) -> Option<Rational> {
    for den in 1..=1000i64 {
        let num = (x * den as f64).round();
        if (x - num / den as f64).abs() < tol {
            return Some(rat(num as i64, den));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn kagome_hexagon_state() {
        let patch = generate::kagome_family_ball(6, 4).unwrap();
        let supports = enumerate_supports(&patch, 3);
        let certs = compact_eigenfunction_search(&patch, &supports).unwrap();
        assert!(!certs.is_empty());
        let hex = certs
            .iter()
            .find(|c| c.support.len() == 6 && c.eigenvalue == int(6))
            .expect("alternating hexagon state with eigenvalue 6");
        // Alternating ±1 around the hexagon.
        let norm: Vec<BigInt> = hex.vector.clone();
        assert!(norm.iter().all(|x| x.magnitude() == norm[0].magnitude()));
        // Support is a complete hexagonal face.
        let is_face = (0..patch.faces().count() as u32).any(|f| {
            let mut cyc = patch.faces().vertices(f).to_vec();
            cyc.sort_unstable();
            cyc == hex.support
        });
        assert!(is_face);
    }

    #[test]
    fn octagon_family_has_certificates() {
        let patch = generate::kagome_family_ball(8, 5).unwrap();
        let supports = enumerate_supports(&patch, 4);
        let certs = compact_eigenfunction_search(&patch, &supports).unwrap();
        assert!(certs
            .iter()
            .any(|c| c.support.len() == 8 && c.eigenvalue == int(6)));
    }

    #[test]
    fn seven_three_has_none() {
        let patch = generate::hyperbolic_ball(7, 3, 5).unwrap();
        let supports = enumerate_supports(&patch, 3);
        assert!(!supports.is_empty());
        let certs = compact_eigenfunction_search(&patch, &supports).unwrap();
        assert!(certs.is_empty(), "{certs:?}");
    }

    #[test]
    fn rationalize_prefers_small_denominators() {
        assert_eq!(rationalize(6.0 + 1e-9, 1e-6), Some(int(6)));
        assert_eq!(rationalize(0.5, 1e-9), Some(rat(1, 2)));
    }
}
