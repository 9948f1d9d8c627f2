//! Sphere tessellations: the platonic solids, prisms and antiprisms.

use crate::error::{Result, TessError};
use crate::surface::ClosedTessellation;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlatonicSolid {
    Tetrahedron,
    Cube,
    Octahedron,
    Dodecahedron,
    Icosahedron,
}

impl PlatonicSolid {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "tetrahedron" => PlatonicSolid::Tetrahedron,
            "cube" => PlatonicSolid::Cube,
            "octahedron" => PlatonicSolid::Octahedron,
            "dodecahedron" => PlatonicSolid::Dodecahedron,
            "icosahedron" => PlatonicSolid::Icosahedron,
            other => {
                return Err(TessError::BadSpec(format!(
                    "unknown platonic solid `{other}`"
                )))
            }
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            PlatonicSolid::Tetrahedron => "tetrahedron",
            PlatonicSolid::Cube => "cube",
            PlatonicSolid::Octahedron => "octahedron",
            PlatonicSolid::Dodecahedron => "dodecahedron",
            PlatonicSolid::Icosahedron => "icosahedron",
        }
    }
}

pub fn platonic(which: PlatonicSolid) -> Result<ClosedTessellation> {
    match which {
        PlatonicSolid::Tetrahedron => ClosedTessellation::from_oriented_faces(
            4,
            &[vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 1], vec![1, 3, 2]],
        ),
        PlatonicSolid::Cube => prism(4),
        PlatonicSolid::Octahedron => antiprism(3),
        PlatonicSolid::Icosahedron => icosahedron(),
        PlatonicSolid::Dodecahedron => {
            let (dual, _) = icosahedron()?.dual()?;
            Ok(dual)
        }
    }
}

/// Two `p`-gons joined by a belt of `p` squares.
pub fn prism(p: u32) -> Result<ClosedTessellation> {
    if p < 3 {
        return Err(TessError::BadSpec(format!("prism needs p >= 3, got {p}")));
    }
    let p = p as usize;
    let top: Vec<u32> = (0..p as u32).collect();
    let bottom: Vec<u32> = (0..p as u32).rev().map(|i| p as u32 + i).collect();
    let mut faces = vec![top, bottom];
    for i in 0..p as u32 {
        let j = (i + 1) % p as u32;
        faces.push(vec![j, i, p as u32 + i, p as u32 + j]);
    }
    ClosedTessellation::from_oriented_faces(2 * p, &faces)
}

/// Two `p`-gons joined by a belt of `2p` triangles.
pub fn antiprism(p: u32) -> Result<ClosedTessellation> {
    if p < 3 {
        return Err(TessError::BadSpec(format!(
            "antiprism needs p >= 3, got {p}"
        )));
    }
    let p = p as usize;
    let top: Vec<u32> = (0..p as u32).collect();
    let bottom: Vec<u32> = (0..p as u32).rev().map(|i| p as u32 + i).collect();
    let mut faces = vec![top, bottom];
    for i in 0..p as u32 {
        let j = (i + 1) % p as u32;
        faces.push(vec![j, i, p as u32 + i]);
        faces.push(vec![p as u32 + i, p as u32 + j, j]);
    }
    ClosedTessellation::from_oriented_faces(2 * p, &faces)
}

fn icosahedron() -> Result<ClosedTessellation> {
    // Apex 0, upper ring 1..=5, lower ring 6..=10, apex 11: a pentagonal
    // antiprism with pyramids on both pentagons.
    let u = |i: u32| 1 + i % 5;
    let l = |i: u32| 6 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push(vec![0, u(i), u(i + 1)]);
        faces.push(vec![u(i + 1), u(i), l(i)]);
        faces.push(vec![l(i), l(i + 1), u(i + 1)]);
        faces.push(vec![11, l(i + 1), l(i)]);
    }
    ClosedTessellation::from_oriented_faces(12, &faces)
}
