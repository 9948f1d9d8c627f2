//! Flat torus quotients of the three flat lattices.

use crate::error::{Result, TessError};
use crate::surface::ClosedTessellation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticeKind {
    Square,
    Triangular,
    Hexagonal,
}

impl LatticeKind {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "square" => LatticeKind::Square,
            "triangular" => LatticeKind::Triangular,
            "hexagonal" => LatticeKind::Hexagonal,
            other => return Err(TessError::BadSpec(format!("unknown lattice `{other}`"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            LatticeKind::Square => "square",
            LatticeKind::Triangular => "triangular",
            LatticeKind::Hexagonal => "hexagonal",
        }
    }

    /// `(p, q)` of the corresponding flat regular tessellation.
    pub fn pq(&self) -> (u32, u32) {
        match self {
            LatticeKind::Square => (4, 4),
            LatticeKind::Triangular => (3, 6),
            LatticeKind::Hexagonal => (6, 3),
        }
    }
}

/// An `m x n` quotient of the flat lattice, obtained by identifying opposite
/// sides of the fundamental rectangle. The result is a closed tessellation
/// of the torus.
pub fn torus_quotient(kind: LatticeKind, m: u32, n: u32) -> Result<ClosedTessellation> {
    if m < 3 || n < 3 {
        return Err(TessError::BadSpec(format!(
            "torus quotient needs m,n >= 3 to stay simple, got {m}x{n}"
        )));
    }
    let faces = match kind {
        LatticeKind::Square => square_faces(m, n),
        LatticeKind::Triangular => triangular_faces(m, n),
        LatticeKind::Hexagonal => hexagonal_faces(m, n),
    };
    let nverts = match kind {
        LatticeKind::Hexagonal => 2 * m * n,
        _ => m * n,
    };
    let t = ClosedTessellation::from_oriented_faces(nverts as usize, &faces)?;
    if t.euler_genus() != (0, 1) {
        return Err(TessError::Structure(format!(
            "torus quotient has Euler characteristic {}",
            t.euler_genus().0
        )));
    }
    Ok(t)
}

/// Face cycles of the square torus; exposed for the genus-2 gluing fixture.
pub(crate) fn square_faces(m: u32, n: u32) -> Vec<Vec<u32>> {
    let v = |i: u32, j: u32| (i % m) * n + (j % n);
    let mut faces = Vec::with_capacity((m * n) as usize);
    for i in 0..m {
        for j in 0..n {
            faces.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    faces
}

fn triangular_faces(m: u32, n: u32) -> Vec<Vec<u32>> {
    let v = |i: u32, j: u32| (i % m) * n + (j % n);
    let mut faces = Vec::with_capacity(2 * (m * n) as usize);
    for i in 0..m {
        for j in 0..n {
            faces.push(vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            faces.push(vec![v(i, j), v(i + 1, j + 1), v(i, j + 1)]);
        }
    }
    faces
}

fn hexagonal_faces(m: u32, n: u32) -> Vec<Vec<u32>> {
    let a = |i: u32, j: u32| 2 * ((i % m) * n + (j % n));
    let b = |i: u32, j: u32| 2 * ((i % m) * n + (j % n)) + 1;
    let mut faces = Vec::with_capacity((m * n) as usize);
    for i in 0..m {
        for j in 0..n {
            faces.push(vec![
                a(i, j + 1),
                b(i, j + 1),
                a(i + 1, j + 1),
                b(i + 1, j),
                a(i + 1, j),
                b(i, j),
            ]);
        }
    }
    faces
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::validate_closed;

    #[test]
    fn square_torus_counts() {
        let t = torus_quotient(LatticeKind::Square, 4, 4).unwrap();
        assert_eq!(t.vertex_count(), 16);
        assert_eq!(t.edge_count(), 32);
        assert_eq!(t.face_count(), 16);
        assert_eq!(t.euler_genus(), (0, 1));
        assert!(validate_closed(&t).is_clean());
    }

    #[test]
    fn triangular_torus_is_6_regular() {
        let t = torus_quotient(LatticeKind::Triangular, 5, 4).unwrap();
        assert_eq!(t.euler_genus(), (0, 1));
        assert!((0..t.vertex_count() as u32).all(|v| t.rotation().degree(v) == 6));
        assert!((0..t.face_count() as u32).all(|f| t.faces().degree(f) == 3));
        assert!(validate_closed(&t).is_clean());
    }

    #[test]
    fn hexagonal_torus_is_3_regular() {
        let t = torus_quotient(LatticeKind::Hexagonal, 3, 4).unwrap();
        assert_eq!(t.euler_genus(), (0, 1));
        assert!((0..t.vertex_count() as u32).all(|v| t.rotation().degree(v) == 3));
        assert!((0..t.face_count() as u32).all(|f| t.faces().degree(f) == 6));
        assert!(validate_closed(&t).is_clean());
    }

    #[test]
    fn too_small_quotients_are_refused() {
        assert!(torus_quotient(LatticeKind::Square, 2, 4).is_err());
        assert!(torus_quotient(LatticeKind::Triangular, 4, 2).is_err());
    }
}
