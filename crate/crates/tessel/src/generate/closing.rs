//! Layer-by-layer construction of combinatorial balls in infinite
//! tessellations.
//!
//! The builder grows a disk: vertices are closed in order of (distance,
//! creation id), and closing a vertex creates each still-missing face around
//! it as a complete cycle at once. New faces attach to the frontier along
//! the arc `arc_last(v), v` (plus `arc_first(v)` for the face that closes
//! the wrap corner); every other face vertex is fresh. The rotation arcs of
//! unclosed vertices grow only at their ends, which keeps the frontier a
//! single cycle and makes the construction deterministic.
//!
//! The result is truncated to the requested radius. Faces that lose a vertex
//! are dropped and the corners they occupied are recorded as gaps, so the
//! patch classifies interior vertices honestly.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Result, TessError};
use crate::surface::{Patch, RotationSystem};

/// Which face pattern the tessellation follows.
#[derive(Debug, Clone)]
pub(crate) enum Rule {
    /// `q` faces of degree `p` around every vertex.
    Regular { p: u32, q: u32 },
    /// Degree-4 vertices with faces alternating triangle, polygon.
    Kagome { polygon: u32 },
    /// All faces triangles; vertices at distance `r` have degree `qs[r]`.
    Schedule { qs: Vec<u32> },
}

impl Rule {
    fn target_degree(&self, layer: u32) -> usize {
        match self {
            Rule::Regular { q, .. } => *q as usize,
            Rule::Kagome { .. } => 4,
            Rule::Schedule { qs } => qs[layer as usize] as usize,
        }
    }

    /// Degree of the face at corner index `i` of a vertex with the given
    /// kagome phase (ignored for the other rules).
    fn face_degree(&self, phase: i8, i: usize) -> usize {
        match self {
            Rule::Regular { p, .. } => *p as usize,
            Rule::Schedule { .. } => 3,
            Rule::Kagome { polygon } => {
                debug_assert!(phase >= 0, "kagome phase must be set before use");
                if (i + phase as usize) % 2 == 0 {
                    3
                } else {
                    *polygon as usize
                }
            }
        }
    }

    fn is_kagome(&self) -> bool {
        matches!(self, Rule::Kagome { .. })
    }
}

struct Vert {
    /// Known neighbors counterclockwise. While unclosed this is an arc whose
    /// missing sector sits at the wrap.
    arc: Vec<u32>,
    /// Face at corner `i` (between `arc[i]` and `arc[i+1]`); one entry per
    /// filled corner, so `arc.len()-1` entries while unclosed and
    /// `arc.len()` once closed.
    cface: Vec<u32>,
    layer: u32,
    closed: bool,
    /// Kagome corner parity; -1 while no incident face pins it.
    phase: i8,
}

pub(crate) struct Grower {
    rule: Rule,
    verts: Vec<Vert>,
    fdata: Vec<u32>,
    foffs: Vec<u32>,
    heap: BinaryHeap<Reverse<(u32, u32)>>,
}

impl Grower {
    pub(crate) fn build(rule: Rule, radius: u32) -> Result<Patch> {
        if radius == 0 {
            let rs = RotationSystem::new_unchecked(vec![vec![]]);
            return Patch::from_parts(rs, 0, 0, vec![true], vec![vec![]]);
        }
        let mut g = Grower {
            rule,
            verts: Vec::new(),
            fdata: Vec::new(),
            foffs: vec![0],
            heap: BinaryHeap::new(),
        };
        let seed_phase = if g.rule.is_kagome() { 0 } else { -1 };
        g.verts.push(Vert {
            arc: vec![1],
            cface: Vec::new(),
            layer: 0,
            closed: false,
            phase: seed_phase,
        });
        g.verts.push(Vert {
            arc: vec![0],
            cface: Vec::new(),
            layer: 1,
            closed: false,
            phase: -1,
        });
        g.heap.push(Reverse((0, 0)));
        g.heap.push(Reverse((1, 1)));

        while let Some(&Reverse((layer, v))) = g.heap.peek() {
            if layer > radius - 1 {
                break;
            }
            g.heap.pop();
            g.close(v)?;
        }
        g.truncate(radius)
    }

    fn close(&mut self, v: u32) -> Result<()> {
        if self.verts[v as usize].closed {
            return Ok(());
        }
        let layer = self.verts[v as usize].layer;
        let target = self.rule.target_degree(layer);
        let have = self.verts[v as usize].arc.len();
        if have > target {
            return Err(TessError::Infeasible {
                layer,
                msg: format!("vertex {v} has {have} neighbors, exceeding target degree {target}"),
            });
        }
        let remaining = target - have + 1;
        for j in 0..remaining {
            let is_last = j + 1 == remaining;
            let corner = self.verts[v as usize].arc.len() - 1;
            let d = self.rule.face_degree(self.verts[v as usize].phase, corner);
            self.create_face(v, d, is_last)?;
        }
        let vs = &self.verts[v as usize];
        debug_assert!(vs.closed);
        debug_assert_eq!(vs.arc.len(), target);
        debug_assert_eq!(vs.cface.len(), target);
        Ok(())
    }

    /// A vertex whose rotation already carries all its neighbors but whose
    /// wrap corner is still open. The next face touching it along the
    /// frontier is forced to fill that wrap corner.
    fn saturated(&self, x: u32) -> bool {
        let xs = &self.verts[x as usize];
        !xs.closed && xs.arc.len() == self.rule.target_degree(xs.layer)
    }

    /// Creates one complete face of degree `d` at the gap of `v`, filling
    /// the corner after `arc_last(v)`.
    ///
    /// The face runs along the frontier: backward from `arc_last(v)` and
    /// when it is v's wrap face: forward from `arc_first(v)`, extending
    /// through every saturated vertex it meets; all remaining boundary
    /// vertices are fresh.
    fn create_face(&mut self, v: u32, d: usize, is_last: bool) -> Result<()> {
        let fid = (self.foffs.len() - 1) as u32;
        let lv = self.verts[v as usize].layer;
        let fail = |msg: String| TessError::Infeasible { layer: lv, msg };

        // Existing boundary, in face order ending at v: [x_k, ..., x_1, a, v].
        let mut path: Vec<u32> = vec![v];
        let mut x = *self.verts[v as usize].arc.last().unwrap();
        loop {
            if path.contains(&x) {
                return Err(fail(format!(
                    "face at vertex {v} wraps around the whole frontier"
                )));
            }
            path.push(x);
            if !self.saturated(x) {
                break;
            }
            x = *self.verts[x as usize].arc.last().unwrap();
        }
        path.reverse();
        let back_count = path.len() - 1;
        // Forward along the frontier, only for the face closing v's wrap.
        let mut fwd_count = 0usize;
        if is_last {
            let mut y = self.verts[v as usize].arc[0];
            loop {
                if path.contains(&y) {
                    return Err(fail(format!(
                        "face at vertex {v} wraps around the whole frontier"
                    )));
                }
                path.push(y);
                fwd_count += 1;
                if !self.saturated(y) {
                    break;
                }
                y = self.verts[y as usize].arc[0];
            }
        }
        let n_exist = path.len();
        if n_exist > d {
            return Err(fail(format!(
                "face of degree {d} at vertex {v} must absorb {n_exist} frontier vertices"
            )));
        }

        // Fresh boundary vertices complete the cycle.
        let mut cycle = path.clone();
        for i in n_exist..d {
            let lay = (0..n_exist)
                .map(|j| {
                    let dist = (i - j).min(d - (i - j)) as u32;
                    self.verts[cycle[j] as usize].layer + dist
                })
                .min()
                .unwrap();
            let id = self.verts.len() as u32;
            self.verts.push(Vert {
                arc: Vec::new(),
                cface: Vec::new(),
                layer: lay,
                closed: false,
                phase: -1,
            });
            self.heap.push(Reverse((lay, id)));
            cycle.push(id);
        }

        // Stitch: existing path interior vertices get their wrap filled;
        // the path endpoints gain one fresh (or mutually new) neighbor;
        // fresh vertices record their two cycle neighbors.
        let vpos = back_count;
        for (i, &u) in cycle.iter().enumerate() {
            let prev = cycle[(i + d - 1) % d];
            let next = cycle[(i + 1) % d];
            if i >= n_exist {
                let us = &mut self.verts[u as usize];
                us.arc.push(prev);
                us.arc.push(next);
                us.cface.push(fid);
                self.set_phase(u, 0, d);
            } else if i == vpos {
                if is_last {
                    self.close_wrap(u, fid);
                } else {
                    self.push_back(u, next, fid, d);
                }
            } else if i > 0 && i + 1 < n_exist {
                // Extended through: both face neighbors already present.
                debug_assert_eq!(*self.verts[u as usize].arc.last().unwrap(), prev);
                debug_assert_eq!(self.verts[u as usize].arc[0], next);
                self.close_wrap(u, fid);
            } else if i == 0 {
                debug_assert_eq!(self.verts[u as usize].arc[0], next);
                self.push_front(u, prev, fid, d);
            } else {
                // i == n_exist - 1 > vpos: forward endpoint.
                debug_assert_eq!(*self.verts[u as usize].arc.last().unwrap(), prev);
                self.push_back(u, next, fid, d);
            }
        }
        let _ = fwd_count;

        self.fdata.extend_from_slice(&cycle);
        self.foffs.push(self.fdata.len() as u32);
        Ok(())
    }

    fn push_back(&mut self, w: u32, u: u32, fid: u32, d: usize) {
        let ws = &mut self.verts[w as usize];
        debug_assert!(!ws.closed);
        debug_assert!(!ws.arc.contains(&u), "edge ({w},{u}) created twice");
        ws.arc.push(u);
        ws.cface.push(fid);
        let corner = ws.arc.len() - 2;
        self.set_phase(w, corner, d);
    }

    fn push_front(&mut self, w: u32, u: u32, fid: u32, d: usize) {
        let ws = &mut self.verts[w as usize];
        debug_assert!(!ws.closed);
        debug_assert!(!ws.arc.contains(&u), "edge ({w},{u}) created twice");
        ws.arc.insert(0, u);
        ws.cface.insert(0, fid);
        if ws.phase >= 0 {
            ws.phase ^= 1;
        }
        self.set_phase(w, 0, d);
    }

    fn close_wrap(&mut self, w: u32, fid: u32) {
        let ws = &mut self.verts[w as usize];
        debug_assert!(!ws.closed);
        debug_assert_eq!(ws.cface.len(), ws.arc.len() - 1);
        ws.cface.push(fid);
        ws.closed = true;
    }

    fn set_phase(&mut self, w: u32, corner: usize, d: usize) {
        if !self.rule.is_kagome() {
            return;
        }
        let ws = &mut self.verts[w as usize];
        let want = if d == 3 { corner % 2 } else { (corner + 1) % 2 } as i8;
        if ws.phase < 0 {
            ws.phase = want;
        } else {
            debug_assert_eq!(
                ws.phase, want,
                "kagome face pattern out of phase at vertex {w}"
            );
        }
    }

    /// Keeps the ball of the requested radius, relabels vertices by
    /// (distance, creation order), drops truncated faces and records the
    /// corners they occupied as gaps.
    fn truncate(self, radius: u32) -> Result<Patch> {
        let n = self.verts.len();
        let rot_full: Vec<Vec<u32>> = self.verts.iter().map(|v| v.arc.clone()).collect();
        let rs_full = RotationSystem::new_unchecked(rot_full);
        let dist = rs_full.bfs_distances(0);
        for (v, vert) in self.verts.iter().enumerate() {
            if dist[v] != vert.layer {
                return Err(TessError::Infeasible {
                    layer: vert.layer,
                    msg: format!(
                        "creation layer {} of vertex {v} disagrees with BFS distance {}",
                        vert.layer, dist[v]
                    ),
                });
            }
        }

        let mut order: Vec<u32> = (0..n as u32)
            .filter(|&v| dist[v as usize] <= radius)
            .collect();
        order.sort_by_key(|&v| (dist[v as usize], v));
        let mut new_id = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            new_id[v as usize] = i as u32;
        }

        let nfaces = self.foffs.len() - 1;
        let mut survives = vec![true; nfaces];
        for f in 0..nfaces {
            let s = self.foffs[f] as usize;
            let e = self.foffs[f + 1] as usize;
            if self.fdata[s..e].iter().any(|&u| dist[u as usize] > radius) {
                survives[f] = false;
            }
        }

        let mut rot = Vec::with_capacity(order.len());
        let mut partial = Vec::with_capacity(order.len());
        let mut gaps: Vec<Vec<u32>> = Vec::with_capacity(order.len());
        for &old in &order {
            let vert = &self.verts[old as usize];
            let l = vert.arc.len();
            let kept: Vec<usize> = (0..l)
                .filter(|&i| dist[vert.arc[i] as usize] <= radius)
                .collect();
            let mut nb = Vec::with_capacity(kept.len());
            let mut g = Vec::new();
            for (j, &i) in kept.iter().enumerate() {
                nb.push(new_id[vert.arc[i] as usize]);
                let i_next = kept[(j + 1) % kept.len()];
                // Corner between kept positions i and i_next survives iff
                // they were adjacent corners of a surviving face.
                let adjacent = (i + 1) % l == i_next && (i + 1 < l || vert.closed);
                let ok = adjacent && i < vert.cface.len() && survives[vert.cface[i] as usize];
                if !ok && !kept.is_empty() {
                    g.push(j as u32);
                }
            }
            if kept.len() == 1 {
                // A single neighbor has a single (wrap) corner.
                g = vec![0];
            }
            partial.push(!vert.closed || kept.len() < l);
            rot.push(nb);
            gaps.push(g);
        }

        let rs = RotationSystem::new(rot)?;
        Patch::from_parts(rs, 0, radius, partial, gaps)
    }
}

/// Combinatorial ball of radius `radius` in the `(p,q)`-regular tessellation
/// of the plane. Requires nonpositive corner curvature, i.e.
/// `(p-2)(q-2) >= 4`; spherical parameters are refused.
pub fn regular_ball(p: u32, q: u32, radius: u32) -> Result<Patch> {
    if p < 3 || q < 3 {
        return Err(TessError::BadSpec(format!(
            "(p,q)=({p},{q}) needs p,q >= 3"
        )));
    }
    if (p - 2) * (q - 2) < 4 {
        return Err(TessError::BadSpec(format!(
            "(p,q)=({p},{q}) is spherical; use the platonic/prism families"
        )));
    }
    Grower::build(Rule::Regular { p, q }, radius)
}

/// Ball in the tessellation where two triangles and two `polygon`-gons meet
/// at every vertex, faces of equal degree opposite. `polygon = 6` is the
/// Kagome lattice.
pub fn kagome_family_ball(polygon: u32, radius: u32) -> Result<Patch> {
    if polygon < 6 || polygon % 2 != 0 {
        return Err(TessError::BadSpec(format!(
            "kagome family needs an even polygon degree >= 6, got {polygon}"
        )));
    }
    Grower::build(Rule::Kagome { polygon }, radius)
}

/// Triangulation in which every vertex at distance `r` from the center has
/// degree `qs[r]`. The schedule must be nondecreasing with entries >= 6 and
/// cover every layer that gets closed.
pub fn schedule_triangulation(qs: &[u32], radius: u32) -> Result<Patch> {
    if qs.len() < radius as usize + 1 {
        return Err(TessError::BadSpec(format!(
            "schedule has {} entries but radius {radius} needs {}",
            qs.len(),
            radius + 1
        )));
    }
    for (r, &q) in qs.iter().enumerate() {
        if q < 6 {
            return Err(TessError::BadSpec(format!(
                "schedule entry q_{r} = {q} < 6"
            )));
        }
        if r > 0 && q < qs[r - 1] {
            return Err(TessError::BadSpec(format!(
                "schedule must be nondecreasing, q_{r} = {q} < q_{} = {}",
                r - 1,
                qs[r - 1]
            )));
        }
    }
    Grower::build(Rule::Schedule { qs: qs.to_vec() }, radius)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::validate_patch;

    fn sphere_sizes(p: &Patch) -> Vec<usize> {
        let dist = p.distances();
        let mut counts = vec![0usize; p.radius() as usize + 1];
        for &d in &dist {
            counts[d as usize] += 1;
        }
        counts
    }

    #[test]
    fn ball_4_5_radius_3_sphere_sizes() {
        let p = regular_ball(4, 5, 3).unwrap();
        assert_eq!(sphere_sizes(&p), vec![1, 5, 15, 40]);
        assert!(validate_patch(&p).is_clean());
    }

    #[test]
    fn ball_3_7_spheres_follow_bfs_oracle() {
        let p = regular_ball(3, 7, 5).unwrap();
        assert_eq!(sphere_sizes(&p), vec![1, 7, 21, 56, 147, 385]);
        assert!(validate_patch(&p).is_clean());
    }

    #[test]
    fn ball_7_3_spheres() {
        let p = regular_ball(7, 3, 6).unwrap();
        assert_eq!(sphere_sizes(&p), vec![1, 3, 6, 12, 18, 30, 45]);
        assert!(validate_patch(&p).is_clean());
        // Radius 4 is clean among complete faces too.
        assert!(validate_patch(&regular_ball(7, 3, 4).unwrap()).is_clean());
    }

    #[test]
    fn hexagonal_lattice_spheres() {
        let p = regular_ball(6, 3, 6).unwrap();
        assert_eq!(sphere_sizes(&p), vec![1, 3, 6, 9, 12, 15, 18]);
    }

    #[test]
    fn square_lattice_spheres() {
        let p = regular_ball(4, 4, 5).unwrap();
        assert_eq!(sphere_sizes(&p), vec![1, 4, 8, 12, 16, 20]);
        assert!(validate_patch(&p).is_clean());
    }

    #[test]
    fn interior_vertices_have_exact_degree_and_face_degree() {
        let p = regular_ball(4, 5, 4).unwrap();
        let mut saw_interior = false;
        for v in p.interior_vertices() {
            saw_interior = true;
            assert_eq!(p.full_degree(v), Some(5));
            for f in p.faces_at_vertex(v).unwrap() {
                assert_eq!(p.faces().degree(f), 4);
            }
        }
        assert!(saw_interior);
    }

    #[test]
    fn spherical_parameters_are_refused() {
        assert!(regular_ball(3, 5, 2).is_err());
        assert!(regular_ball(4, 3, 2).is_err());
    }

    #[test]
    fn kagome_interior_pattern() {
        let p = kagome_family_ball(6, 4).unwrap();
        assert!(validate_patch(&p).is_clean());
        let mut saw = false;
        for v in p.interior_vertices() {
            saw = true;
            assert_eq!(p.full_degree(v), Some(4));
            let degs: Vec<usize> = p
                .faces_at_vertex(v)
                .unwrap()
                .iter()
                .map(|&f| p.faces().degree(f))
                .collect();
            // Alternating triangle, hexagon in rotation order.
            let ok = degs == [3, 6, 3, 6] || degs == [6, 3, 6, 3];
            assert!(ok, "cyclic face pattern {degs:?} at vertex {v}");
        }
        assert!(saw);
    }

    #[test]
    fn kagome_radius_3_has_vertex_with_no_neighbor_outside() {
        let p = kagome_family_ball(6, 4).unwrap();
        let dist = p.distances();
        let found = (0..p.vertex_count() as u32).any(|v| {
            dist[v as usize] == 3
                && !p.is_partial(v)
                && p.rotation()
                    .neighbors(v)
                    .iter()
                    .all(|&u| dist[u as usize] <= 3)
        });
        assert!(found, "expected an opposite hexagon vertex trapped in B_3");
    }

    #[test]
    fn schedule_constant_7_matches_3_7_ball() {
        let s = schedule_triangulation(&[7, 7, 7, 7, 7], 4).unwrap();
        let h = regular_ball(3, 7, 4).unwrap();
        assert_eq!(sphere_sizes(&s), sphere_sizes(&h));
    }

    #[test]
    fn schedule_layer_degrees_are_exact() {
        let qs = [6, 8, 10, 12, 14];
        let p = schedule_triangulation(&qs, 4).unwrap();
        let dist = p.distances();
        for v in p.interior_vertices() {
            assert_eq!(
                p.full_degree(v),
                Some(qs[dist[v as usize] as usize] as usize),
                "vertex {v} at layer {}",
                dist[v as usize]
            );
        }
        assert!(validate_patch(&p).is_clean());
    }

    #[test]
    fn schedule_constant_6_is_the_flat_triangular_lattice() {
        let s = schedule_triangulation(&[6; 6], 5).unwrap();
        let f = regular_ball(3, 6, 5).unwrap();
        assert_eq!(sphere_sizes(&s), sphere_sizes(&f));
        assert_eq!(
            crate::surface::save_to_string(&crate::surface::Loaded::Patch(s)),
            crate::surface::save_to_string(&crate::surface::Loaded::Patch(f))
        );
    }

    #[test]
    fn schedule_rejects_bad_inputs() {
        assert!(schedule_triangulation(&[5, 6], 2).is_err());
        assert!(schedule_triangulation(&[8, 6], 2).is_err());
        assert!(schedule_triangulation(&[6], 2).is_err());
    }

    #[test]
    fn generation_is_deterministic() {
        let a = regular_ball(4, 5, 4).unwrap();
        let b = regular_ball(4, 5, 4).unwrap();
        assert_eq!(
            crate::surface::save_to_string(&crate::surface::Loaded::Patch(a)),
            crate::surface::save_to_string(&crate::surface::Loaded::Patch(b))
        );
    }
}
