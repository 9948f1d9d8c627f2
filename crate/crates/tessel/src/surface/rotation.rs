//! Rotation systems: the combinatorial encoding of an embedded graph.

use crate::error::{Result, TessError};

/// An embedded graph given by the counterclockwise cyclic order of neighbors
/// at every vertex. Vertex ids are dense `0..n`.
///
/// Darts (directed edges) are indexed contiguously: dart `offsets[u] + j`
/// is `u -> neighbors(u)[j]`. With the fixed orientation convention the
/// faces of the embedding are recovered by the next-dart rule: from `(u,v)`
/// continue to `(v,w)` where `w` follows `u` in the rotation at `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    flat: Vec<u32>,
    offsets: Vec<u32>,
    tails: Vec<u32>,
}

impl RotationSystem {
    /// Builds and validates a rotation system from per-vertex neighbor lists.
    ///
    /// Requires symmetric adjacency, no self-loops, no repeated neighbor
    /// within one rotation, ids in range, and a connected graph.
    pub fn new(rot: Vec<Vec<u32>>) -> Result<Self> {
        let rs = Self::new_unchecked(rot);
        rs.validate()?;
        Ok(rs)
    }

    /// Builds without validation. Callers that assemble rotations from
    /// already-consistent data use this and validate in tests.
    pub fn new_unchecked(rot: Vec<Vec<u32>>) -> Self {
        let n = rot.len();
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0u32);
        let total: usize = rot.iter().map(|r| r.len()).sum();
        let mut flat = Vec::with_capacity(total);
        let mut tails = Vec::with_capacity(total);
        for (v, r) in rot.iter().enumerate() {
            flat.extend_from_slice(r);
            tails.extend(std::iter::repeat(v as u32).take(r.len()));
            offsets.push(flat.len() as u32);
        }
        RotationSystem {
            flat,
            offsets,
            tails,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        if n == 0 {
            return Err(TessError::Structure("empty vertex set".into()));
        }
        for v in 0..n as u32 {
            let nb = self.neighbors(v);
            for (j, &u) in nb.iter().enumerate() {
                if u as usize >= n {
                    return Err(TessError::DanglingId { at: v, id: u });
                }
                if u == v {
                    return Err(TessError::Structure(format!("self-loop at vertex {v}")));
                }
                if nb[..j].contains(&u) {
                    return Err(TessError::Structure(format!(
                        "repeated neighbor {u} in rotation of vertex {v}"
                    )));
                }
                if self.position_of(u, v).is_none() {
                    return Err(TessError::Asymmetric { u: v, v: u });
                }
            }
        }
        // Connectivity.
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut count = 1usize;
        while let Some(v) = queue.pop_front() {
            for &u in self.neighbors(v) {
                if !seen[u as usize] {
                    seen[u as usize] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        if count != n {
            return Err(TessError::Structure(format!(
                "graph not connected: reached {count} of {n} vertices"
            )));
        }
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn dart_count(&self) -> usize {
        self.flat.len()
    }

    pub fn edge_count(&self) -> usize {
        self.flat.len() / 2
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        (self.offsets[v as usize + 1] - self.offsets[v as usize]) as usize
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.flat[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }

    #[inline]
    pub fn position_of(&self, v: u32, u: u32) -> Option<usize> {
        self.neighbors(v).iter().position(|&x| x == u)
    }

    /// Dart id of `u -> neighbors(u)[j]`.
    #[inline]
    pub fn dart(&self, u: u32, j: usize) -> u32 {
        self.offsets[u as usize] + j as u32
    }

    #[inline]
    pub fn dart_tail(&self, d: u32) -> u32 {
        self.tails[d as usize]
    }

    #[inline]
    pub fn dart_head(&self, d: u32) -> u32 {
        self.flat[d as usize]
    }

    /// Position of the dart within its tail's rotation.
    #[inline]
    pub fn dart_slot(&self, d: u32) -> usize {
        (d - self.offsets[self.dart_tail(d) as usize]) as usize
    }

    /// The reverse dart `v -> u` of `d = u -> v`.
    pub fn reverse(&self, d: u32) -> u32 {
        let u = self.dart_tail(d);
        let v = self.dart_head(d);
        let j = self
            .position_of(v, u)
            .expect("validated rotation systems have symmetric adjacency");
        self.dart(v, j)
    }

    pub fn darts_of(&self, v: u32) -> std::ops::Range<u32> {
        self.offsets[v as usize]..self.offsets[v as usize + 1]
    }

    /// BFS distances from `root`; unreachable is impossible on validated systems.
    pub fn bfs_distances(&self, root: u32) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = std::collections::VecDeque::new();
        dist[root as usize] = 0;
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let dv = dist[v as usize];
            for &u in self.neighbors(v) {
                if dist[u as usize] == u32::MAX {
                    dist[u as usize] = dv + 1;
                    queue.push_back(u);
                }
            }
        }
        dist
    }

    pub fn rotations(&self) -> Vec<Vec<u32>> {
        (0..self.vertex_count() as u32)
            .map(|v| self.neighbors(v).to_vec())
            .collect()
    }
}
