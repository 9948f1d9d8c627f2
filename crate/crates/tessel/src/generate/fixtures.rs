//! Hand-built fixtures: corner wheels, small Cairo and Penrose-style
//! patches, and a genus-2 surface glued from two square tori.
//!
//! The aperiodic tilings are represented by fixed finite patches (their role
//! here is curvature sign checks only), not by parametric generators.

use crate::error::Result;
use crate::generate::torus::square_faces;
use crate::surface::{ClosedTessellation, Patch};

/// A single vertex surrounded by faces of the given degrees, in rotation
/// order. Only the center is interior; its curvature is
/// `1 - d/2 + sum(1/f_i)`.
pub fn corner_fixture(face_degrees: &[u32]) -> Result<Patch> {
    let d = face_degrees.len() as u32;
    let mut faces: Vec<Vec<u32>> = Vec::with_capacity(face_degrees.len());
    let mut next_id = d + 1;
    for (i, &fd) in face_degrees.iter().enumerate() {
        let a = 1 + i as u32;
        let b = 1 + ((i + 1) % face_degrees.len()) as u32;
        // Cycle a, 0, b, then fd-3 path vertices back to a.
        let mut cycle = vec![a, 0, b];
        for _ in 0..fd - 3 {
            cycle.push(next_id);
            next_id += 1;
        }
        faces.push(cycle);
    }
    Patch::from_oriented_faces(next_id as usize, &faces, 0)
}

/// A fragment of the Cairo pentagon tiling: four pentagons around a
/// degree-4 vertex (curvature -1/5) and a fifth pentagon completing a
/// degree-3 vertex (curvature 1/10).
pub fn cairo_patch() -> Result<Patch> {
    // center 0; spokes a_i = 1..4; pentagon i has outer path x_i, y_i.
    let a = |i: usize| 1 + (i % 4) as u32;
    let x = |i: usize| (5 + 2 * i) as u32;
    let y = |i: usize| (6 + 2 * i) as u32;
    let mut faces: Vec<Vec<u32>> = (0..4)
        .map(|i| vec![0, a(i), x(i), y(i), a(i + 1)])
        .collect();
    // Fifth pentagon closing the fan at a_0 = 1: it borders edges
    // (1, x_0) and (y_3, 1).
    faces.push(vec![a(0), y(3), 13, 14, x(0)]);
    Patch::from_oriented_faces(15, &faces, 0)
}

/// A fragment of a rhombus (Penrose-style) tiling, all faces of degree 4:
/// a five-fold sun vertex (curvature -1/4), one degree-4 vertex (flat) and
/// one degree-3 vertex (curvature 1/4).
pub fn penrose_patch() -> Result<Patch> {
    let p = |i: usize| 1 + (i % 5) as u32;
    let q = |i: usize| 6 + (i % 5) as u32;
    // Sun: five rhombi around vertex 0.
    let mut faces: Vec<Vec<u32>> = (0..5).map(|i| vec![0, p(i), q(i), p(i + 1)]).collect();
    let (m, s, t, w) = (11, 12, 13, 14);
    // Two rhombi completing p_0 = 1 to degree 4.
    faces.push(vec![q(0), p(0), m, s]);
    faces.push(vec![m, p(0), q(4), t]);
    // One rhombus completing q_0 = 6 to degree 3.
    faces.push(vec![p(1), q(0), s, w]);
    Patch::from_oriented_faces(15, &faces, 0)
}

/// A closed genus-2 tessellation: two 4x4 square torus quotients, one face
/// removed from each, glued along the resulting boundary squares with
/// opposite orientations.
pub fn genus2_surface() -> Result<ClosedTessellation> {
    let mut faces_a = square_faces(4, 4);
    let mut faces_b = square_faces(4, 4);
    // Face (0,0) of each torus has boundary [0, 4, 5, 1].
    let hole = vec![0u32, 4, 5, 1];
    faces_a.retain(|f| *f != hole);
    faces_b.retain(|f| *f != hole);

    // Torus B relabels: seam vertices map onto A's hole with reversed
    // orientation (0->0, 4->1, 5->5, 1->4); the rest shift past A's ids.
    let mut map = vec![0u32; 16];
    let mut next = 16u32;
    for v in 0..16u32 {
        map[v as usize] = match v {
            0 => 0,
            4 => 1,
            5 => 5,
            1 => 4,
            _ => {
                let id = next;
                next += 1;
                id
            }
        };
    }
    for f in &mut faces_b {
        for v in f.iter_mut() {
            *v = map[*v as usize];
        }
    }
    faces_a.extend(faces_b);
    ClosedTessellation::from_oriented_faces(28, &faces_a)
}
