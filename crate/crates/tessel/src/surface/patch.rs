//! Finite patches of (typically infinite) tessellations.
//!
//! A patch is a rotation system together with bookkeeping for what the
//! truncation destroyed: vertices whose rotation is incomplete, and corners
//! whose face did not survive. Complete faces are traced exactly as for
//! closed surfaces, skipping suppressed corners. Curvature, cut-locus and
//! spectral computations restrict to interior vertices so truncation
//! artifacts never leak into theorem checks.

use super::rotation::RotationSystem;
use super::trace::{trace_faces, Faces, NO_FACE};
use crate::error::{Result, TessError};

#[derive(Debug, Clone)]
pub struct Patch {
    rs: RotationSystem,
    center: u32,
    radius: u32,
    /// Rotation known to be missing neighbors.
    partial: Vec<bool>,
    /// Suppressed corner indices per vertex, sorted. Corner `i` of `v` sits
    /// between `neighbors(v)[i]` and `neighbors(v)[i+1 mod deg]`.
    gaps: Vec<Vec<u32>>,
    faces: Faces,
    face_at: Vec<u32>,
    interior: Vec<bool>,
}

impl Patch {
    /// Assembles a patch from its stored parts, traces the complete faces
    /// and classifies interior vertices.
    pub fn from_parts(
        rs: RotationSystem,
        center: u32,
        radius: u32,
        partial: Vec<bool>,
        mut gaps: Vec<Vec<u32>>,
    ) -> Result<Self> {
        rs.validate()?;
        let n = rs.vertex_count();
        if center as usize >= n {
            return Err(TessError::DanglingId {
                at: center,
                id: center,
            });
        }
        if partial.len() != n || gaps.len() != n {
            return Err(TessError::Structure(
                "patch metadata length mismatch".into(),
            ));
        }
        for (v, g) in gaps.iter_mut().enumerate() {
            g.sort_unstable();
            g.dedup();
            if g.last()
                .is_some_and(|&i| i as usize >= rs.degree(v as u32).max(1))
            {
                return Err(TessError::Structure(format!(
                    "gap corner index out of range at vertex {v}"
                )));
            }
        }
        let t = {
            let gaps = &gaps;
            trace_faces(&rs, |v, i| {
                gaps[v as usize].binary_search(&(i as u32)).is_ok()
            })
        };
        let mut interior = vec![false; n];
        for v in 0..n as u32 {
            if partial[v as usize] || !gaps[v as usize].is_empty() || rs.degree(v) == 0 {
                continue;
            }
            let covered = (0..rs.degree(v)).all(|i| {
                let j = (i + 1) % rs.degree(v);
                t.face_at[rs.dart(v, j) as usize] != NO_FACE
            });
            interior[v as usize] = covered;
        }
        Ok(Patch {
            rs,
            center,
            radius,
            partial,
            gaps,
            faces: t.faces,
            face_at: t.face_at,
            interior,
        })
    }

    /// Builds a patch from consistently oriented complete-face cycles.
    /// Vertices whose corner chain does not close are marked partial with
    /// the single gap at the chain wrap. Used for hand-built fixtures.
    pub fn from_oriented_faces(
        nverts: usize,
        face_cycles: &[Vec<u32>],
        center: u32,
    ) -> Result<Self> {
        let rot = super::closed::assemble_rotations(nverts, face_cycles, true)?;
        // A chain that closed has every consecutive pair backed by a face;
        // an open chain is missing exactly the wrap corner.
        let mut partial = vec![false; nverts];
        let mut gaps: Vec<Vec<u32>> = vec![Vec::new(); nverts];
        let mut corners_filled: Vec<usize> = vec![0; nverts];
        for cycle in face_cycles {
            for &v in cycle {
                corners_filled[v as usize] += 1;
            }
        }
        for (v, r) in rot.iter().enumerate() {
            if corners_filled[v] < r.len() {
                partial[v] = true;
                gaps[v].push(r.len() as u32 - 1);
            }
        }
        let rs = RotationSystem::new(rot)?;
        let dist = rs.bfs_distances(center);
        let radius = dist.iter().copied().max().unwrap_or(0);
        let p = Self::from_parts(rs, center, radius, partial, gaps)?;
        if p.faces.count() != face_cycles.len() {
            return Err(TessError::Structure(format!(
                "face list is not a consistent patch: traced {} complete faces, expected {}",
                p.faces.count(),
                face_cycles.len()
            )));
        }
        Ok(p)
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rs
    }

    pub fn center(&self) -> u32 {
        self.center
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    pub fn vertex_count(&self) -> usize {
        self.rs.vertex_count()
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    pub fn is_interior(&self, v: u32) -> bool {
        self.interior[v as usize]
    }

    pub fn is_partial(&self, v: u32) -> bool {
        self.partial[v as usize]
    }

    pub fn gap_corners(&self, v: u32) -> &[u32] {
        &self.gaps[v as usize]
    }

    /// Vertices classified as boundary (not interior).
    pub fn boundary_vertices(&self) -> Vec<u32> {
        (0..self.vertex_count() as u32)
            .filter(|&v| !self.is_interior(v))
            .collect()
    }

    pub fn interior_vertices(&self) -> Vec<u32> {
        (0..self.vertex_count() as u32)
            .filter(|&v| self.is_interior(v))
            .collect()
    }

    /// Ambient degree of `v`; defined whenever the rotation is complete,
    /// which holds in particular for interior vertices.
    pub fn full_degree(&self, v: u32) -> Option<usize> {
        if self.partial[v as usize] {
            None
        } else {
            Some(self.rs.degree(v))
        }
    }

    /// Face at corner `i` of `v`, if that corner's face is complete.
    pub fn face_at_corner(&self, v: u32, i: usize) -> Option<u32> {
        let j = (i + 1) % self.rs.degree(v);
        let f = self.face_at[self.rs.dart(v, j) as usize];
        (f != NO_FACE).then_some(f)
    }

    /// Complete faces around an interior vertex, in rotation order.
    pub fn faces_at_vertex(&self, v: u32) -> Option<Vec<u32>> {
        if !self.is_interior(v) {
            return None;
        }
        (0..self.rs.degree(v))
            .map(|i| self.face_at_corner(v, i))
            .collect()
    }

    /// BFS distances from the center.
    pub fn distances(&self) -> Vec<u32> {
        self.rs.bfs_distances(self.center)
    }

    /// Largest `r` such that every vertex of `B_r` has a complete rotation.
    pub fn full_rotation_radius(&self) -> u32 {
        let dist = self.distances();
        let mut r = self.radius;
        for v in 0..self.vertex_count() {
            if self.partial[v] {
                r = r.min(dist[v].saturating_sub(1));
            }
        }
        r
    }

    /// Largest `r` such that every vertex of `B_r` is interior.
    pub fn interior_radius(&self) -> Option<u32> {
        let dist = self.distances();
        if !self.is_interior(self.center) {
            return None;
        }
        let mut r = self.radius;
        for v in 0..self.vertex_count() as u32 {
            if !self.is_interior(v) {
                r = r.min(dist[v as usize].saturating_sub(1));
            }
        }
        Some(r)
    }

    pub(crate) fn parts(&self) -> (&RotationSystem, &[bool], &[Vec<u32>]) {
        (&self.rs, &self.partial, &self.gaps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One square with all four boundary vertices partial.
    #[test]
    fn single_face_patch() {
        let p = Patch::from_oriented_faces(4, &[vec![0, 1, 2, 3]], 0).unwrap();
        assert_eq!(p.faces().count(), 1);
        assert_eq!(p.faces().degree(0), 4);
        assert!(p.interior_vertices().is_empty());
        assert_eq!(p.radius(), 2);
    }

    /// Three triangles fanned around vertex 0 leave 0 with an open chain.
    #[test]
    fn fan_patch_interior() {
        // 0 surrounded by triangles (0,1,2), (0,2,3), (0,3,4): still open.
        let faces = vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4]];
        let p = Patch::from_oriented_faces(5, &faces, 0).unwrap();
        assert!(!p.is_interior(0));
        assert_eq!(p.faces().count(), 3);
        // Closing the fan with (0,4,1) makes 0 interior of degree 4.
        let faces = vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 1]];
        let p = Patch::from_oriented_faces(5, &faces, 0).unwrap();
        assert!(p.is_interior(0));
        assert_eq!(p.full_degree(0), Some(4));
        assert!(!p.is_interior(1));
        assert_eq!(p.interior_radius(), Some(0));
        assert_eq!(p.full_rotation_radius(), 0);
    }
}
