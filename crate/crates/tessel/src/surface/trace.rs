//! Face tracing: recovering the faces of the embedding from the rotation.

use super::rotation::RotationSystem;

pub const NO_FACE: u32 = u32::MAX;

/// Faces stored as flat vertex cycles. Face `i` is a boundary walk
/// `v_0, v_1, ..., v_{k-1}` whose darts `(v_j -> v_{j+1})` all belong to it.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Faces {
    data: Vec<u32>,
    offsets: Vec<u32>,
}

impl Faces {
    pub fn new() -> Self {
        Faces {
            data: Vec::new(),
            offsets: vec![0],
        }
    }

    pub fn push(&mut self, cycle: &[u32]) -> u32 {
        self.data.extend_from_slice(cycle);
        self.offsets.push(self.data.len() as u32);
        (self.offsets.len() - 2) as u32
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn vertices(&self, f: u32) -> &[u32] {
        &self.data[self.offsets[f as usize] as usize..self.offsets[f as usize + 1] as usize]
    }

    /// Number of boundary edges (equals the number of boundary vertices).
    #[inline]
    pub fn degree(&self, f: u32) -> usize {
        (self.offsets[f as usize + 1] - self.offsets[f as usize]) as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &[u32])> {
        (0..self.count() as u32).map(move |f| (f, self.vertices(f)))
    }

    /// Total dart count over all faces.
    pub fn total_degree(&self) -> usize {
        self.data.len()
    }
}

/// Result of tracing: the traced faces and, per dart, the face it belongs to
/// (`NO_FACE` for darts whose walk runs through a suppressed corner).
pub struct TraceResult {
    pub faces: Faces,
    pub face_at: Vec<u32>,
}

/// Traces all faces of the embedding.
///
/// From dart `(u,v)` the walk continues with `(v,w)` where `w` follows `u`
/// in the rotation at `v`; this step passes the corner `(u,w)` at `v`.
/// `suppressed(v, i)` marks corners that are not face corners (patch
/// truncation); walks touching one yield no face. For closed tessellations
/// pass `|_, _| false` and every dart lands in exactly one face.
pub fn trace_faces<F>(rs: &RotationSystem, suppressed: F) -> TraceResult
where
    F: Fn(u32, usize) -> bool,
{
    let nd = rs.dart_count();
    let mut face_at = vec![NO_FACE; nd];
    let mut visited = vec![false; nd];
    let mut faces = Faces::new();
    let mut walk: Vec<u32> = Vec::new();

    // Next dart after d, or None when the corner it would pass is suppressed.
    let next = |d: u32| -> Option<u32> {
        let u = rs.dart_tail(d);
        let v = rs.dart_head(d);
        let i = rs
            .position_of(v, u)
            .expect("validated rotation systems have symmetric adjacency");
        if suppressed(v, i) {
            return None;
        }
        let j = (i + 1) % rs.degree(v);
        Some(rs.dart(v, j))
    };

    for d0 in 0..nd as u32 {
        if visited[d0 as usize] {
            continue;
        }
        walk.clear();
        walk.push(d0);
        visited[d0 as usize] = true;
        let mut closed = false;
        loop {
            let last = *walk.last().unwrap();
            match next(last) {
                None => break,
                Some(nd) => {
                    if nd == d0 {
                        closed = true;
                        break;
                    }
                    if visited[nd as usize] {
                        // Ran into an already-processed walk: not a cycle.
                        break;
                    }
                    visited[nd as usize] = true;
                    walk.push(nd);
                }
            }
        }
        if closed {
            let cycle: Vec<u32> = walk.iter().map(|&d| rs.dart_tail(d)).collect();
            let f = faces.push(&cycle);
            for &d in &walk {
                face_at[d as usize] = f;
            }
        }
    }

    TraceResult { faces, face_at }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tetra_rotation() -> RotationSystem {
        // Each vertex lists the other three; the cyclic orders below are the
        // ones induced by the standard outward-oriented tetrahedron.
        RotationSystem::new(vec![
            vec![1, 2, 3],
            vec![2, 0, 3],
            vec![0, 1, 3],
            vec![0, 2, 1],
        ])
        .unwrap()
    }

    #[test]
    fn tetrahedron_traces_four_triangles() {
        let rs = tetra_rotation();
        let t = trace_faces(&rs, |_, _| false);
        assert_eq!(t.faces.count(), 4);
        for (f, _) in t.faces.iter() {
            assert_eq!(t.faces.degree(f), 3);
        }
        // Dart partition: sum of face degrees = 2|E|.
        assert_eq!(t.faces.total_degree(), rs.dart_count());
        assert!(t.face_at.iter().all(|&f| f != NO_FACE));
    }

    #[test]
    fn cycle_graph_traces_two_faces() {
        for n in [3usize, 5, 8] {
            let rot: Vec<Vec<u32>> = (0..n)
                .map(|i| vec![((i + 1) % n) as u32, ((i + n - 1) % n) as u32])
                .collect();
            let rs = RotationSystem::new(rot).unwrap();
            let t = trace_faces(&rs, |_, _| false);
            assert_eq!(t.faces.count(), 2, "cycle of length {n}");
            assert_eq!(t.faces.degree(0), n);
            assert_eq!(t.faces.degree(1), n);
        }
    }
}
