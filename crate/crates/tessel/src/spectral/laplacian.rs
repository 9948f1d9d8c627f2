//! The combinatorial Laplacian on finite regions.
//!
//! The assembled operator is `L = Deg - Adj`, the positive operator `-Δ`.
//! On patches the diagonal carries the full ambient degree (Dirichlet
//! convention), so the bottom of the spectrum bounds the infinite
//! operator's from above.

use nalgebra::DMatrix;

use crate::error::{Result, TessError};
use crate::surface::{ClosedTessellation, Patch, RotationSystem};

#[derive(Debug, Clone)]
pub struct LaplacianOperator {
    /// Vertices of the region, ascending; row `i` belongs to `region[i]`.
    pub region: Vec<u32>,
    /// Full ambient degree per region vertex.
    pub degree: Vec<u32>,
    /// Adjacency within the region as row-index lists.
    pub adj: Vec<Vec<u32>>,
    pub max_degree: u32,
}

impl LaplacianOperator {
    /// Assembles over `region`; every region vertex must have its full
    /// neighborhood known (`known`), so diagonals are ambient degrees.
    pub fn assemble<F>(rs: &RotationSystem, region: &[u32], known: F) -> Result<Self>
    where
        F: Fn(u32) -> bool,
    {
        let mut sorted = region.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut index = std::collections::HashMap::new();
        for (i, &v) in sorted.iter().enumerate() {
            index.insert(v, i as u32);
        }
        let mut degree = Vec::with_capacity(sorted.len());
        let mut adj = Vec::with_capacity(sorted.len());
        let mut max_degree = 0;
        for &v in &sorted {
            if !known(v) {
                return Err(TessError::Precondition(format!(
                    "vertex {v} has unknown full degree; cannot assemble the Dirichlet operator"
                )));
            }
            let d = rs.degree(v) as u32;
            max_degree = max_degree.max(d);
            degree.push(d);
            let mut row: Vec<u32> = rs
                .neighbors(v)
                .iter()
                .filter_map(|u| index.get(u).copied())
                .collect();
            row.sort_unstable();
            adj.push(row);
        }
        Ok(LaplacianOperator {
            region: sorted,
            degree,
            adj,
            max_degree,
        })
    }

    pub fn from_patch(patch: &Patch, region: &[u32]) -> Result<Self> {
        Self::assemble(patch.rotation(), region, |v| !patch.is_partial(v))
    }

    pub fn from_closed(t: &ClosedTessellation) -> Self {
        let all: Vec<u32> = (0..t.vertex_count() as u32).collect();
        Self::assemble(t.rotation(), &all, |_| true).expect("closed graphs know all degrees")
    }

    pub fn n(&self) -> usize {
        self.region.len()
    }

    /// `y = L x`.
    pub fn matvec(&self, x: &[f64], y: &mut [f64]) {
        for i in 0..self.n() {
            let mut acc = self.degree[i] as f64 * x[i];
            for &j in &self.adj[i] {
                acc -= x[j as usize];
            }
            y[i] = acc;
        }
    }

    pub fn to_dense(&self) -> DMatrix<f64> {
        let n = self.n();
        let mut m = DMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = self.degree[i] as f64;
            for &j in &self.adj[i] {
                m[(i, j as usize)] = -1.0;
            }
        }
        m
    }

    /// Count of neighbors outside the region (the Dirichlet row surplus).
    pub fn outside_neighbors(&self, i: usize) -> u32 {
        self.degree[i] - self.adj[i].len() as u32
    }

    /// `<Lx, x>` via the form `1/2 sum_{v~w} (x_v - x_w)^2 + sum_v out_v x_v^2`.
    pub fn quadratic_form_by_edges(&self, x: &[f64]) -> f64 {
        let mut acc = 0.0;
        for i in 0..self.n() {
            for &j in &self.adj[i] {
                let d = x[i] - x[j as usize];
                acc += 0.5 * d * d;
            }
            acc += self.outside_neighbors(i) as f64 * x[i] * x[i];
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use rand::{Rng, SeedableRng};

    #[test]
    fn single_vertex_region() {
        let p = generate::hyperbolic_ball(4, 5, 3).unwrap();
        let l = LaplacianOperator::from_patch(&p, &[0]).unwrap();
        assert_eq!(l.n(), 1);
        assert_eq!(l.degree, vec![5]);
        assert_eq!(l.to_dense()[(0, 0)], 5.0);
    }

    #[test]
    fn closed_cube_has_zero_row_sums() {
        let cube = generate::platonic(generate::PlatonicSolid::Cube).unwrap();
        let l = LaplacianOperator::from_closed(&cube);
        let m = l.to_dense();
        for i in 0..8 {
            assert_eq!(m.row(i).sum(), 0.0);
            assert_eq!(l.outside_neighbors(i), 0);
        }
    }

    #[test]
    fn quadratic_form_identity_on_random_vectors() {
        let p = generate::hyperbolic_ball(3, 7, 4).unwrap();
        let dist = p.distances();
        let region: Vec<u32> = (0..p.vertex_count() as u32)
            .filter(|&v| dist[v as usize] <= 2)
            .collect();
        let l = LaplacianOperator::from_patch(&p, &region).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let m = l.to_dense();
        for _ in 0..20 {
            let x: Vec<f64> = (0..l.n()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let mut lx = vec![0.0; l.n()];
            l.matvec(&x, &mut lx);
            let direct: f64 = lx.iter().zip(&x).map(|(a, b)| a * b).sum();
            let by_edges = l.quadratic_form_by_edges(&x);
            assert!((direct - by_edges).abs() < 1e-10 * l.max_degree as f64);
            // Dense and sparse agree.
            let xv = nalgebra::DVector::from_column_slice(&x);
            let mx = &m * &xv;
            for i in 0..l.n() {
                assert!((mx[i] - lx[i]).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn boundary_region_is_rejected() {
        let p = generate::hyperbolic_ball(4, 5, 3).unwrap();
        let boundary = p.boundary_vertices();
        let partial: Vec<u32> = boundary.into_iter().filter(|&v| p.is_partial(v)).collect();
        assert!(!partial.is_empty());
        assert!(LaplacianOperator::from_patch(&p, &partial[..1]).is_err());
    }
}
