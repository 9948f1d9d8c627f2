//! Closed tessellations: embeddings of finite graphs in compact oriented
//! surfaces, with Euler characteristic, genus and duality.

use super::rotation::RotationSystem;
use super::trace::{trace_faces, Faces};
use crate::error::{Result, TessError};

/// A finite tessellation of a closed oriented surface. Faces are derived
/// from the rotation system by face tracing, never stored as primary input.
#[derive(Debug, Clone)]
pub struct ClosedTessellation {
    rs: RotationSystem,
    faces: Faces,
    face_at: Vec<u32>,
    euler: i64,
    genus: u32,
}

/// Correspondence maps returned with a dual tessellation: original faces
/// become dual vertices (identically indexed) and original vertices become
/// dual faces.
#[derive(Debug, Clone)]
pub struct DualMaps {
    /// `vertex_to_dual_face[v]` is the dual face id corresponding to `v`.
    pub vertex_to_dual_face: Vec<u32>,
}

impl ClosedTessellation {
    /// Traces the faces of the rotation system and closes the surface.
    pub fn from_rotation(rs: RotationSystem) -> Result<Self> {
        rs.validate()?;
        let t = trace_faces(&rs, |_, _| false);
        let v = rs.vertex_count() as i64;
        let e = rs.edge_count() as i64;
        let f = t.faces.count() as i64;
        let euler = v - e + f;
        if (2 - euler) % 2 != 0 || euler > 2 {
            return Err(TessError::Structure(format!(
                "Euler characteristic {euler} is not of the form 2-2g"
            )));
        }
        let genus = ((2 - euler) / 2) as u32;
        Ok(ClosedTessellation {
            rs,
            faces: t.faces,
            face_at: t.face_at,
            euler,
            genus,
        })
    }

    /// Builds the rotation system from consistently oriented face cycles and
    /// closes the surface. Tracing the assembled rotation must reproduce the
    /// input faces; this is checked by count.
    pub fn from_oriented_faces(nverts: usize, face_cycles: &[Vec<u32>]) -> Result<Self> {
        let rot = assemble_rotations(nverts, face_cycles, false)?;
        let t = Self::from_rotation(RotationSystem::new(rot)?)?;
        if t.faces.count() != face_cycles.len() {
            return Err(TessError::Structure(format!(
                "face list is not a consistent orientation: traced {} faces, expected {}",
                t.faces.count(),
                face_cycles.len()
            )));
        }
        Ok(t)
    }

    pub fn rotation(&self) -> &RotationSystem {
        &self.rs
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.rs.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.rs.edge_count()
    }

    pub fn face_count(&self) -> usize {
        self.faces.count()
    }

    /// `(χ, g)` with `χ = |V| - |E| + |F| = 2 - 2g`.
    pub fn euler_genus(&self) -> (i64, u32) {
        (self.euler, self.genus)
    }

    /// Face at corner `i` of `v`, i.e. the face whose boundary runs
    /// `neighbors(v)[i] -> v -> neighbors(v)[i+1]`.
    pub fn face_at_corner(&self, v: u32, i: usize) -> u32 {
        let j = (i + 1) % self.rs.degree(v);
        self.face_at[self.rs.dart(v, j) as usize]
    }

    /// The faces around `v` in rotation order (one per corner).
    pub fn faces_at_vertex(&self, v: u32) -> Vec<u32> {
        (0..self.rs.degree(v))
            .map(|i| self.face_at_corner(v, i))
            .collect()
    }

    /// Face on the other side of dart `d` (the face of the reverse dart).
    pub fn face_across(&self, d: u32) -> u32 {
        self.face_at[self.rs.reverse(d) as usize]
    }

    /// The dual tessellation: vertices of the dual are the faces of `self`,
    /// two dual vertices are adjacent when the faces share an edge, and the
    /// dual rotation is induced by the orientation. Dual faces correspond
    /// one-to-one with the vertices of `self`.
    pub fn dual(&self) -> Result<(ClosedTessellation, DualMaps)> {
        let nf = self.faces.count();
        let mut dual_rot: Vec<Vec<u32>> = Vec::with_capacity(nf);
        for f in 0..nf as u32 {
            let cycle = self.faces.vertices(f);
            let k = cycle.len();
            let mut nb = Vec::with_capacity(k);
            for j in 0..k {
                let u = cycle[j];
                let v = cycle[(j + 1) % k];
                // The face across edge (u,v) owns the reverse dart v -> u.
                let pos = self.rs.position_of(v, u).expect("face edge exists");
                let g = self.face_at[self.rs.dart(v, pos) as usize];
                if g == f {
                    return Err(TessError::Unsupported(format!(
                        "face {f} lies on both sides of edge ({u},{v}); dual is not simple"
                    )));
                }
                nb.push(g);
            }
            // Walking the face boundary forward crosses its edges in clockwise
            // order around the dual vertex; reverse to keep rotations ccw.
            nb.reverse();
            for (j, &g) in nb.iter().enumerate() {
                if nb[..j].contains(&g) {
                    return Err(TessError::Unsupported(format!(
                        "dual is not simple: faces {f} and {g} share more than one edge"
                    )));
                }
            }
            dual_rot.push(nb);
        }
        let dual = ClosedTessellation::from_rotation(RotationSystem::new(dual_rot)?)?;

        // Each dual face surrounds exactly one original vertex: all its dual
        // vertices are faces of `self` sharing that vertex.
        if dual.face_count() != self.vertex_count() {
            return Err(TessError::Structure(format!(
                "dual face count {} does not match vertex count {}",
                dual.face_count(),
                self.vertex_count()
            )));
        }
        let mut vertex_to_dual_face = vec![u32::MAX; self.vertex_count()];
        for (df, dcycle) in dual.faces().iter() {
            let common = self.common_vertex_of_faces(dcycle)?;
            vertex_to_dual_face[common as usize] = df;
        }
        if vertex_to_dual_face.iter().any(|&x| x == u32::MAX) {
            return Err(TessError::Structure(
                "dual face correspondence is not a bijection".into(),
            ));
        }
        Ok((
            dual,
            DualMaps {
                vertex_to_dual_face,
            },
        ))
    }

    fn common_vertex_of_faces(&self, face_ids: &[u32]) -> Result<u32> {
        let first = self.faces.vertices(face_ids[0]);
        'cand: for &v in first {
            for &f in &face_ids[1..] {
                if !self.faces.vertices(f).contains(&v) {
                    continue 'cand;
                }
            }
            return Ok(v);
        }
        Err(TessError::Structure(
            "dual face has no common original vertex".into(),
        ))
    }
}

/// Builds per-vertex rotations from oriented face cycles.
///
/// Consecutive boundary vertices `u -> v -> w` of a face force `w` to follow
/// `u` in the rotation at `v`. For a closed surface the successor map at
/// every vertex is a single cycle; with `allow_partial` a single open chain
/// is accepted (finite patches) and returned in chain order.
pub fn assemble_rotations(
    nverts: usize,
    face_cycles: &[Vec<u32>],
    allow_partial: bool,
) -> Result<Vec<Vec<u32>>> {
    let mut succ: Vec<Vec<(u32, u32)>> = vec![Vec::new(); nverts];
    for (fid, cycle) in face_cycles.iter().enumerate() {
        let k = cycle.len();
        if k < 3 {
            return Err(TessError::Structure(format!(
                "face {fid} has degree {k} < 3"
            )));
        }
        for j in 0..k {
            let u = cycle[j];
            let v = cycle[(j + 1) % k];
            let w = cycle[(j + 2) % k];
            if v as usize >= nverts {
                return Err(TessError::DanglingId { at: u, id: v });
            }
            if succ[v as usize].iter().any(|&(a, _)| a == u) {
                return Err(TessError::Structure(format!(
                    "two faces claim the corner after {u} at vertex {v}"
                )));
            }
            succ[v as usize].push((u, w));
        }
    }
    let mut rot = Vec::with_capacity(nverts);
    for (v, pairs) in succ.iter().enumerate() {
        if pairs.is_empty() {
            return Err(TessError::Structure(format!("vertex {v} lies on no face")));
        }
        let mut next = std::collections::HashMap::new();
        let mut has_pred = std::collections::HashSet::new();
        for &(a, b) in pairs {
            next.insert(a, b);
            has_pred.insert(b);
        }
        // Start of the chain: a neighbor that is no successor. A full cycle
        // has none; start at the smallest id for determinism.
        let start = pairs
            .iter()
            .map(|&(a, _)| a)
            .filter(|a| !has_pred.contains(a))
            .min()
            .unwrap_or_else(|| pairs.iter().map(|&(a, _)| a).min().unwrap());
        let mut order = vec![start];
        let mut cur = start;
        while let Some(&nxt) = next.get(&cur) {
            if nxt == start {
                break;
            }
            if order.contains(&nxt) {
                return Err(TessError::Structure(format!(
                    "corner structure at vertex {v} is not a single chain"
                )));
            }
            order.push(nxt);
            cur = nxt;
        }
        let closed = next.get(&cur) == Some(&start) && order.len() == next.len();
        if order.len() != next.len() + if closed { 0 } else { 1 } {
            return Err(TessError::Structure(format!(
                "corner structure at vertex {v} splits into several chains"
            )));
        }
        if !closed && !allow_partial {
            return Err(TessError::Structure(format!(
                "vertex {v} has an incomplete rotation in a closed surface"
            )));
        }
        rot.push(order);
    }
    Ok(rot)
}
