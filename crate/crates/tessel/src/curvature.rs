//! Exact combinatorial curvature.
//!
//! The corner curvature of an incident pair `(v,f)` is
//! `1/d_v - 1/2 + 1/deg(f)` and the vertex curvature is its sum over the
//! corners at `v`, equivalently `1 - d_v/2 + sum_f 1/deg(f)`. Both are
//! rational and are computed exactly; on patches they are defined only at
//! interior vertices.

use num_traits::Signed;

use crate::error::{Result, TessError};
use crate::rat::{int, rat, Rational};
use crate::surface::{ClosedTessellation, Corner, Patch};

/// Anything curvature can be evaluated on: closed tessellations cover every
/// vertex, patches cover their interior.
pub trait CurvatureSite {
    fn covered_vertices(&self) -> Vec<u32>;
    fn is_covered(&self, v: u32) -> bool;
    fn degree_of(&self, v: u32) -> usize;
    /// Faces around a covered vertex in rotation order.
    fn faces_around(&self, v: u32) -> Vec<u32>;
    fn face_degree(&self, f: u32) -> usize;
}

impl CurvatureSite for ClosedTessellation {
    fn covered_vertices(&self) -> Vec<u32> {
        (0..self.vertex_count() as u32).collect()
    }
    fn is_covered(&self, _v: u32) -> bool {
        true
    }
    fn degree_of(&self, v: u32) -> usize {
        self.rotation().degree(v)
    }
    fn faces_around(&self, v: u32) -> Vec<u32> {
        self.faces_at_vertex(v)
    }
    fn face_degree(&self, f: u32) -> usize {
        self.faces().degree(f)
    }
}

impl CurvatureSite for Patch {
    fn covered_vertices(&self) -> Vec<u32> {
        self.interior_vertices()
    }
    fn is_covered(&self, v: u32) -> bool {
        self.is_interior(v)
    }
    fn degree_of(&self, v: u32) -> usize {
        self.rotation().degree(v)
    }
    fn faces_around(&self, v: u32) -> Vec<u32> {
        self.faces_at_vertex(v)
            .expect("faces_around is called on interior vertices only")
    }
    fn face_degree(&self, f: u32) -> usize {
        self.faces().degree(f)
    }
}

/// `1/d - 1/2 + 1/deg` for a corner of a degree-`d` vertex on a
/// degree-`deg` face.
pub fn corner_value(d: usize, deg: usize) -> Rational {
    rat(1, d as i64) - rat(1, 2) + rat(1, deg as i64)
}

/// Corner curvature of `(v, f)`; `v` must be covered and `f` incident.
pub fn corner_curvature<S: CurvatureSite>(site: &S, v: u32, f: u32) -> Result<Rational> {
    if !site.is_covered(v) {
        return Err(TessError::Precondition(format!(
            "curvature is undefined at non-interior vertex {v}"
        )));
    }
    if !site.faces_around(v).contains(&f) {
        return Err(TessError::Precondition(format!(
            "({v},{f}) is not a corner"
        )));
    }
    Ok(corner_value(site.degree_of(v), site.face_degree(f)))
}

/// Vertex curvature `1 - d_v/2 + sum 1/deg(f)`, exactly.
pub fn vertex_curvature<S: CurvatureSite>(site: &S, v: u32) -> Result<Rational> {
    if !site.is_covered(v) {
        return Err(TessError::Precondition(format!(
            "curvature is undefined at non-interior vertex {v}"
        )));
    }
    let d = site.degree_of(v);
    let mut phi = int(1) - rat(d as i64, 2);
    for f in site.faces_around(v) {
        phi += rat(1, site.face_degree(f) as i64);
    }
    Ok(phi)
}

/// Per-vertex and per-corner curvature with aggregates over the covered set.
#[derive(Debug, Clone)]
pub struct CurvatureReport {
    pub vertex: Vec<(u32, Rational)>,
    pub corner: Vec<(Corner, Rational)>,
    pub total: Rational,
    pub min: Option<(u32, Rational)>,
    pub max: Option<(u32, Rational)>,
}

impl CurvatureReport {
    pub fn compute<S: CurvatureSite>(site: &S) -> Self {
        let mut vertex = Vec::new();
        let mut corner = Vec::new();
        let mut total = int(0);
        let mut min: Option<(u32, Rational)> = None;
        let mut max: Option<(u32, Rational)> = None;
        for v in site.covered_vertices() {
            let d = site.degree_of(v);
            let mut phi = int(1) - rat(d as i64, 2);
            for f in site.faces_around(v) {
                let c = corner_value(d, site.face_degree(f));
                phi += rat(1, site.face_degree(f) as i64);
                corner.push((Corner { vertex: v, face: f }, c));
            }
            total += &phi;
            if min.as_ref().is_none_or(|(_, m)| phi < *m) {
                min = Some((v, phi.clone()));
            }
            if max.as_ref().is_none_or(|(_, m)| phi > *m) {
                max = Some((v, phi.clone()));
            }
            vertex.push((v, phi));
        }
        CurvatureReport {
            vertex,
            corner,
            total,
            min,
            max,
        }
    }

    pub fn phi(&self, v: u32) -> Option<&Rational> {
        self.vertex.iter().find(|(w, _)| *w == v).map(|(_, p)| p)
    }
}

/// The exact Gauss–Bonnet sum over all vertices of a closed tessellation;
/// equals the Euler characteristic.
pub fn gauss_bonnet(t: &ClosedTessellation) -> Rational {
    CurvatureReport::compute(t).total
}

/// Face curvature of the dual, pulled back along the duality: returns, per
/// original vertex `v`, the value `1 - deg(v*)/2 + sum_{w in v*} 1/d_w`
/// computed on the dual tessellation. Equals the vertex curvature of `v`.
pub fn dual_face_curvature(t: &ClosedTessellation) -> Result<Vec<(u32, Rational)>> {
    let (dual, maps) = t.dual()?;
    let mut out = Vec::with_capacity(t.vertex_count());
    for v in 0..t.vertex_count() as u32 {
        let f = maps.vertex_to_dual_face[v as usize];
        let cycle = dual.faces().vertices(f);
        let mut phi = int(1) - rat(cycle.len() as i64, 2);
        for &w in cycle {
            phi += rat(1, dual.rotation().degree(w) as i64);
        }
        out.push((v, phi));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub enum BoundViolation {
    /// Φ(v) outside [-d/2, 1 - d/6].
    DegreeBound { v: u32, phi: Rational },
    /// Φ(v) above the global maximum 3/2.
    GlobalMax { v: u32, phi: Rational },
    /// All covered curvatures are negative but the maximum beats -1/1806.
    HiguchiGap { v: u32, phi: Rational },
}

/// Checks `-d_v/2 <= Φ(v) <= 1 - d_v/6` and `Φ <= 3/2` for every covered
/// vertex, and: when every covered vertex has negative curvature: the
/// uniform gap `Φ <= -1/1806`.
pub fn curvature_bounds_check<S: CurvatureSite>(
    site: &S,
    report: &CurvatureReport,
) -> Vec<BoundViolation> {
    let mut out = Vec::new();
    for (v, phi) in &report.vertex {
        let d = site.degree_of(*v) as i64;
        if *phi < rat(-d, 2) || *phi > int(1) - rat(d, 6) {
            out.push(BoundViolation::DegreeBound {
                v: *v,
                phi: phi.clone(),
            });
        }
        if *phi > rat(3, 2) {
            out.push(BoundViolation::GlobalMax {
                v: *v,
                phi: phi.clone(),
            });
        }
    }
    let all_negative =
        !report.vertex.is_empty() && report.vertex.iter().all(|(_, phi)| phi.is_negative());
    if all_negative {
        if let Some((v, max)) = &report.max {
            if *max > rat(-1, 1806) {
                out.push(BoundViolation::HiguchiGap {
                    v: *v,
                    phi: max.clone(),
                });
            }
        }
    }
    out
}

/// Normalized average curvature of the sphere `S_r`:
/// `(2p/(p-2)) * avg_{v in S_r} Φ(v)` on a `p`-face-regular patch.
pub fn avg_sphere_curvature(patch: &Patch, r: u32) -> Result<Rational> {
    let p = face_regular_degree(patch)?;
    let dist = patch.distances();
    let mut sum = int(0);
    let mut count = 0i64;
    for v in 0..patch.vertex_count() as u32 {
        if dist[v as usize] != r {
            continue;
        }
        if !patch.is_interior(v) {
            return Err(TessError::Precondition(format!(
                "sphere S_{r} touches the boundary at vertex {v}"
            )));
        }
        sum += vertex_curvature(patch, v)?;
        count += 1;
    }
    if count == 0 {
        return Err(TessError::Precondition(format!("sphere S_{r} is empty")));
    }
    Ok(rat(2 * p as i64, p as i64 - 2) * sum / int(count))
}

/// The constant complete-face degree of a face-regular patch.
pub fn face_regular_degree(patch: &Patch) -> Result<usize> {
    let faces = patch.faces();
    let mut deg = None;
    for (f, _) in faces.iter() {
        let d = faces.degree(f);
        match deg {
            None => deg = Some(d),
            Some(p) if p != d => {
                return Err(TessError::Precondition(format!(
                    "patch is not face-regular: faces of degree {p} and {d}"
                )))
            }
            _ => {}
        }
    }
    deg.ok_or_else(|| TessError::Precondition("patch has no complete faces".into()))
}

/// Finite-stage estimates of the curvature at infinity.
#[derive(Debug, Clone)]
pub struct InfinityEstimate {
    /// `u_r = max { Φ(v) : v interior, d(o,v) >= r }`, nonincreasing in r.
    pub u: Vec<Rational>,
    /// `K = min over interior v of -Φ(v)/d_v`.
    pub k: Rational,
}

/// Upper estimates of the curvature at infinity over the ball exhaustion,
/// plus the constant `K` entering the isoperimetric lower bound.
pub fn curvature_at_infinity_estimate(patch: &Patch) -> Result<InfinityEstimate> {
    let dist = patch.distances();
    let interior = patch.interior_vertices();
    if interior.is_empty() {
        return Err(TessError::Precondition("patch has empty interior".into()));
    }
    let rmax = interior.iter().map(|&v| dist[v as usize]).max().unwrap();
    let mut per_radius: Vec<Option<Rational>> = vec![None; rmax as usize + 1];
    let mut k: Option<Rational> = None;
    for &v in &interior {
        let phi = vertex_curvature(patch, v)?;
        let r = dist[v as usize] as usize;
        if per_radius[r].as_ref().is_none_or(|m| phi > *m) {
            per_radius[r] = Some(phi.clone());
        }
        let kv = -phi / int(patch.rotation().degree(v) as i64);
        if k.as_ref().is_none_or(|m| kv < *m) {
            k = Some(kv);
        }
    }
    // Suffix maxima: u_r covers all interior vertices at distance >= r.
    let mut suffix: Vec<Rational> = Vec::with_capacity(per_radius.len());
    let mut best: Option<Rational> = None;
    for m in per_radius.into_iter().rev() {
        if let Some(m) = m {
            if best.as_ref().is_none_or(|b| m > *b) {
                best = Some(m);
            }
        }
        suffix.push(best.clone().expect("outermost interior sphere is nonempty"));
    }
    suffix.reverse();
    Ok(InfinityEstimate {
        u: suffix,
        k: k.unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn corner_values() {
        assert_eq!(corner_value(3, 4), rat(1, 12));
        assert_eq!(corner_value(3, 7), rat(-1, 42));
        assert_eq!(corner_value(3, 43), rat(1, 3) - rat(1, 2) + rat(1, 43));
    }

    #[test]
    fn dodecahedron_vertices_have_phi_one_tenth() {
        let t = generate::platonic(generate::PlatonicSolid::Dodecahedron).unwrap();
        for v in 0..t.vertex_count() as u32 {
            assert_eq!(vertex_curvature(&t, v).unwrap(), rat(1, 10));
        }
        assert_eq!(gauss_bonnet(&t), int(2));
    }

    #[test]
    fn corner_sum_equals_vertex_curvature() {
        let t = generate::platonic(generate::PlatonicSolid::Icosahedron).unwrap();
        let report = CurvatureReport::compute(&t);
        for (v, phi) in &report.vertex {
            let sum: Rational = report
                .corner
                .iter()
                .filter(|(c, _)| c.vertex == *v)
                .map(|(_, x)| x.clone())
                .sum();
            assert_eq!(sum, *phi);
        }
    }

    #[test]
    fn higuchi_vertex_hits_the_gap_exactly() {
        let p = generate::corner_fixture(&[3, 7, 43]).unwrap();
        assert_eq!(vertex_curvature(&p, 0).unwrap(), rat(-1, 1806));
        let report = CurvatureReport::compute(&p);
        assert!(curvature_bounds_check(&p, &report).is_empty());
    }

    #[test]
    fn non_interior_vertex_is_rejected() {
        let p = generate::corner_fixture(&[3, 3, 3]).unwrap();
        assert!(vertex_curvature(&p, 1).is_err());
    }

    #[test]
    fn seven_three_interior_curvature() {
        let p = generate::hyperbolic_ball(7, 3, 5).unwrap();
        let interior = p.interior_vertices();
        assert!(!interior.is_empty());
        for v in interior {
            assert_eq!(vertex_curvature(&p, v).unwrap(), rat(-1, 14));
        }
        // Radius 2 leaves no interior at all: heptagons span three layers.
        let small = generate::hyperbolic_ball(7, 3, 2).unwrap();
        assert!(small.interior_vertices().is_empty());
    }

    #[test]
    fn kagome_and_octagon_family_values() {
        let k6 = generate::kagome_family_ball(6, 3).unwrap();
        assert!(!k6.interior_vertices().is_empty());
        for v in k6.interior_vertices() {
            assert_eq!(vertex_curvature(&k6, v).unwrap(), int(0));
        }
        // Octagons span four layers, so radius 3 has no interior yet.
        assert!(generate::kagome_family_ball(8, 3)
            .unwrap()
            .interior_vertices()
            .is_empty());
        let k8 = generate::kagome_family_ball(8, 4).unwrap();
        assert!(!k8.interior_vertices().is_empty());
        for v in k8.interior_vertices() {
            assert_eq!(vertex_curvature(&k8, v).unwrap(), rat(-1, 12));
        }
    }

    #[test]
    fn dual_face_curvature_matches_vertex_curvature() {
        for t in [
            generate::platonic(generate::PlatonicSolid::Cube).unwrap(),
            generate::platonic(generate::PlatonicSolid::Dodecahedron).unwrap(),
            generate::platonic(generate::PlatonicSolid::Tetrahedron).unwrap(),
        ] {
            let dualcurv = dual_face_curvature(&t).unwrap();
            for (v, phi_star) in dualcurv {
                assert_eq!(phi_star, vertex_curvature(&t, v).unwrap());
            }
        }
    }

    #[test]
    fn interior_angle_form_of_corner_curvature() {
        // 2 pi Phi_C = (1/d)(2 pi - d beta(f)) with beta(f) the interior
        // angle 2 pi (deg-2)/(2 deg): symbolically, Phi_C = 1/d - (deg-2)/(2 deg).
        for d in 3..12usize {
            for deg in 3..12usize {
                let alt = rat(1, d as i64) - rat(deg as i64 - 2, 2 * deg as i64);
                assert_eq!(corner_value(d, deg), alt);
            }
        }
    }

    #[test]
    fn dual_corner_bijection_preserves_values() {
        // The corner (v,f) corresponds to (f*, v*) with f* the dual vertex
        // of f and v* the dual face of v; corner curvature is preserved
        // exactly under the correspondence.
        let t = generate::platonic(generate::PlatonicSolid::Dodecahedron).unwrap();
        let (dual, maps) = t.dual().unwrap();
        let orig = CurvatureReport::compute(&t);
        let dual_rep = CurvatureReport::compute(&dual);
        assert_eq!(orig.corner.len(), dual_rep.corner.len());
        for (c, value) in &orig.corner {
            let dual_vertex = c.face;
            let dual_face = maps.vertex_to_dual_face[c.vertex as usize];
            let found = dual_rep
                .corner
                .iter()
                .find(|(dc, _)| dc.vertex == dual_vertex && dc.face == dual_face)
                .map(|(_, x)| x);
            assert_eq!(found, Some(value), "corner ({}, {})", c.vertex, c.face);
        }
    }

    #[test]
    fn corner_curvature_multiset_is_dual_invariant() {
        let t = generate::platonic(generate::PlatonicSolid::Dodecahedron).unwrap();
        let (dual, _) = t.dual().unwrap();
        let mut a: Vec<Rational> = CurvatureReport::compute(&t)
            .corner
            .into_iter()
            .map(|(_, x)| x)
            .collect();
        let mut b: Vec<Rational> = CurvatureReport::compute(&dual)
            .corner
            .into_iter()
            .map(|(_, x)| x)
            .collect();
        a.sort();
        b.sort();
        assert_eq!(a, b);
    }

    #[test]
    fn avg_sphere_curvature_is_minus_one_for_4_5() {
        let p = generate::hyperbolic_ball(4, 5, 5).unwrap();
        let rmax = p.interior_radius().unwrap();
        assert!(rmax >= 2);
        for r in 0..=rmax {
            assert_eq!(avg_sphere_curvature(&p, r).unwrap(), int(-1));
        }
        let flat = generate::flat_lattice(generate::LatticeKind::Hexagonal, 5).unwrap();
        for r in 0..=flat.interior_radius().unwrap() {
            assert_eq!(avg_sphere_curvature(&flat, r).unwrap(), int(0));
        }
        let p37 = generate::hyperbolic_ball(3, 7, 4).unwrap();
        for r in 0..=p37.interior_radius().unwrap() {
            assert_eq!(avg_sphere_curvature(&p37, r).unwrap(), int(-1));
        }
    }

    #[test]
    fn flat_square_interior_is_flat() {
        let p = generate::flat_lattice(generate::LatticeKind::Square, 3).unwrap();
        assert!(!p.interior_vertices().is_empty());
        for v in p.interior_vertices() {
            assert_eq!(vertex_curvature(&p, v).unwrap(), int(0));
        }
    }

    #[test]
    fn infinity_estimate_on_schedule() {
        let qs: Vec<u32> = (0..6).map(|r| 6 + 2 * r).collect();
        let p = generate::schedule_triangulation(&qs, 5).unwrap();
        let est = curvature_at_infinity_estimate(&p).unwrap();
        // u_r = 1 - q_r/6 strictly decreasing in r.
        for w in est.u.windows(2) {
            assert!(w[1] < w[0]);
        }
        for (r, u) in est.u.iter().enumerate() {
            assert_eq!(*u, int(1) - rat(6 + 2 * r as i64, 6));
        }

        let h = generate::hyperbolic_ball(7, 3, 5).unwrap();
        let est = curvature_at_infinity_estimate(&h).unwrap();
        assert!(est.u.iter().all(|u| *u == rat(-1, 14)));
        assert_eq!(est.k, rat(1, 42));
    }
}
