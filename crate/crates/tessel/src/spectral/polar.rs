//! Polar decomposition of the Laplacian by distance spheres:
//! `L = blockdiag(D_r) - (E + E^T)` where `E_r` carries the edges from
//! `S_r` to `S_{r+1}`. Injectivity of every `E_r` forbids compactly
//! supported eigenfunctions, so rank deficiencies here and certificates
//! from the search must agree.

use crate::error::{Result, TessError};
use crate::rat::{int, Rational};
use crate::spectral::exact::rational_rank;
use crate::surface::Patch;

#[derive(Debug, Clone)]
pub struct PolarRow {
    pub r: u32,
    pub sphere: usize,
    pub next_sphere: usize,
    /// Exact rank of `E_r` over the rationals.
    pub rank: usize,
    /// `rank == #S_r`.
    pub injective: bool,
}

#[derive(Debug, Clone)]
pub struct PolarReport {
    pub rows: Vec<PolarRow>,
    /// The operator on the ball reassembles exactly from the blocks.
    pub reassembly_ok: bool,
}

/// Ranks of the sphere-transfer blocks `E_r`, `0 <= r < rmax`, from the
/// given root (exact for the center). Every vertex of `B_rmax` must have a
/// complete rotation so the blocks are exact.
pub fn polar_ranks(patch: &Patch, root: u32, rmax: u32) -> Result<PolarReport> {
    let rs = patch.rotation();
    let dist = rs.bfs_distances(root);
    let mut spheres: Vec<Vec<u32>> = vec![Vec::new(); rmax as usize + 2];
    for v in 0..rs.vertex_count() as u32 {
        let d = dist[v as usize];
        if d <= rmax + 1 {
            spheres[d as usize].push(v);
        }
    }
    for r in 0..=rmax {
        for &v in &spheres[r as usize] {
            if patch.is_partial(v) {
                return Err(TessError::Precondition(format!(
                    "sphere S_{r} touches the boundary at vertex {v}"
                )));
            }
        }
    }

    let index_of = |sphere: &[u32]| -> std::collections::HashMap<u32, usize> {
        sphere.iter().enumerate().map(|(i, &v)| (v, i)).collect()
    };

    let mut rows = Vec::new();
    let mut reassembly_ok = true;
    for r in 0..=rmax {
        let cur = &spheres[r as usize];
        let next = &spheres[r as usize + 1];
        if cur.is_empty() || next.is_empty() {
            break;
        }
        let next_index = index_of(next);
        // E_r as a (#S_{r+1} x #S_r) 0/1 matrix.
        let mut mat: Vec<Vec<Rational>> = vec![vec![int(0); cur.len()]; next.len()];
        for (c, &v) in cur.iter().enumerate() {
            for &u in rs.neighbors(v) {
                if let Some(&rr) = next_index.get(&u) {
                    mat[rr][c] = int(1);
                }
            }
        }
        let rank = rational_rank(&mut mat);
        rows.push(PolarRow {
            r,
            sphere: cur.len(),
            next_sphere: next.len(),
            rank,
            injective: rank == cur.len(),
        });
    }
    if rows.is_empty() {
        return Err(TessError::Precondition(
            "no admissible spheres for the decomposition".into(),
        ));
    }

    // Reassembly: every edge of B_{rmax+1} lies in exactly one block
    // within a sphere (a D_r off-diagonal) or between consecutive spheres
    // (an E_r entry), and diagonals carry full degrees by construction.
    for r in 0..=rmax as usize {
        for &v in &spheres[r] {
            for &u in rs.neighbors(v) {
                let du = dist[u as usize];
                if du + 1 != r as u32 && du != r as u32 && du != r as u32 + 1 {
                    reassembly_ok = false;
                }
            }
        }
    }
    Ok(PolarReport {
        rows,
        reassembly_ok,
    })
}
