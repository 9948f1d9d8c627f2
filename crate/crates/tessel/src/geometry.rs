//! Metric structure and isoperimetry: distance spheres, cut loci, boundary
//! and volume counting, isoperimetric constants and their bounds.

use num_traits::Signed;
use rand::Rng;

use crate::curvature::{vertex_curvature, CurvatureSite};
use crate::error::{Result, TessError};
use crate::rat::{int, rat, QuadraticValue, Rational};
use crate::surface::{Patch, RotationSystem};

/// BFS structure from a root: distances, spheres, balls and ball volumes.
#[derive(Debug, Clone)]
pub struct MetricProfile {
    pub root: u32,
    pub dist: Vec<u32>,
    pub parent: Vec<Option<u32>>,
    /// `sphere_sizes[r] = #S_r`.
    pub sphere_sizes: Vec<u64>,
    /// `ball_sizes[r] = #B_r`.
    pub ball_sizes: Vec<u64>,
    /// `volumes[r] = vol(B_r) = sum of degrees`, where every degree in
    /// `B_r` is known; `None` beyond that.
    pub volumes: Vec<Option<u64>>,
}

/// Exact BFS profile. `full_degree_known(v)` gates the volume column; pass
/// `|_| true` on closed tessellations.
pub fn bfs_profile<F>(rs: &RotationSystem, root: u32, full_degree_known: F) -> MetricProfile
where
    F: Fn(u32) -> bool,
{
    let n = rs.vertex_count();
    let mut dist = vec![u32::MAX; n];
    let mut parent = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    dist[root as usize] = 0;
    queue.push_back(root);
    while let Some(v) = queue.pop_front() {
        for &u in rs.neighbors(v) {
            if dist[u as usize] == u32::MAX {
                dist[u as usize] = dist[v as usize] + 1;
                parent[u as usize] = Some(v);
                queue.push_back(u);
            }
        }
    }
    let rmax = dist.iter().copied().max().unwrap_or(0);
    let mut sphere_sizes = vec![0u64; rmax as usize + 1];
    let mut vol = vec![0u64; rmax as usize + 1];
    let mut vol_ok = vec![true; rmax as usize + 1];
    for v in 0..n as u32 {
        let r = dist[v as usize] as usize;
        sphere_sizes[r] += 1;
        if full_degree_known(v) {
            vol[r] += rs.degree(v) as u64;
        } else {
            vol_ok[r] = false;
        }
    }
    let mut ball_sizes = Vec::with_capacity(sphere_sizes.len());
    let mut volumes = Vec::with_capacity(sphere_sizes.len());
    let mut acc = 0u64;
    let mut vacc = 0u64;
    let mut ok = true;
    for r in 0..sphere_sizes.len() {
        acc += sphere_sizes[r];
        ball_sizes.push(acc);
        ok &= vol_ok[r];
        vacc += vol[r];
        volumes.push(if ok { Some(vacc) } else { None });
    }
    MetricProfile {
        root,
        dist,
        parent,
        sphere_sizes,
        ball_sizes,
        volumes,
    }
}

pub fn patch_profile(p: &Patch, root: u32) -> MetricProfile {
    bfs_profile(p.rotation(), root, |v| !p.is_partial(v))
}

/// Cut locus of `root` restricted to vertices where local maximality is
/// decidable inside the patch.
#[derive(Debug, Clone)]
pub struct CutLocus {
    pub root: u32,
    /// Decidable vertices where the distance from the root has a local
    /// maximum.
    pub locus: Vec<u32>,
    /// Vertices whose status the truncation leaves open.
    pub undecidable: Vec<u32>,
}

/// Distance function local maxima. Distances are patch-internal: exact from
/// the center; from other roots a vertex only counts as decidable when no
/// path through the truncated region could be shorter.
pub fn cut_locus(patch: &Patch, root: u32) -> CutLocus {
    let rs = patch.rotation();
    let dist_root = rs.bfs_distances(root);
    let dist_center = patch.distances();
    let radius = patch.radius();
    let exact = |v: u32| {
        // A detour outside enters and leaves S_{radius+1}.
        let outside = (2 * (radius as u64 + 1))
            .saturating_sub(dist_center[root as usize] as u64)
            .saturating_sub(dist_center[v as usize] as u64);
        (dist_root[v as usize] as u64) < outside
    };
    let mut locus = Vec::new();
    let mut undecidable = Vec::new();
    for v in 0..rs.vertex_count() as u32 {
        if v == root {
            continue;
        }
        let decidable = !patch.is_partial(v)
            && dist_root[v as usize] < radius
            && exact(v)
            && rs.neighbors(v).iter().all(|&u| exact(u));
        if !decidable {
            undecidable.push(v);
            continue;
        }
        if rs
            .neighbors(v)
            .iter()
            .all(|&u| dist_root[u as usize] <= dist_root[v as usize])
        {
            locus.push(v);
        }
    }
    CutLocus {
        root,
        locus,
        undecidable,
    }
}

/// `(#∂W, vol(W), #E_W)` with all three counted independently; the exact
/// identity `vol(W) = 2 #E_W + #∂W` is a theorem, not an assumption.
pub fn boundary_and_volume(patch: &Patch, w: &[u32]) -> Result<(u64, u64, u64)> {
    for &v in w {
        if patch.is_partial(v) {
            return Err(TessError::Precondition(format!(
                "vertex {v} has an incomplete neighborhood; boundary counts would be wrong"
            )));
        }
    }
    Ok(boundary_and_volume_known(patch.rotation(), w))
}

/// Same counts on a graph whose degrees are all known (closed surfaces).
pub fn boundary_and_volume_known(rs: &RotationSystem, w: &[u32]) -> (u64, u64, u64) {
    let mut in_w = vec![false; rs.vertex_count()];
    for &v in w {
        in_w[v as usize] = true;
    }
    let mut boundary = 0u64;
    let mut volume = 0u64;
    let mut inner_darts = 0u64;
    for &v in w {
        volume += rs.degree(v) as u64;
        for &u in rs.neighbors(v) {
            if in_w[u as usize] {
                inner_darts += 1;
            } else {
                boundary += 1;
            }
        }
    }
    (boundary, volume, inner_darts / 2)
}

/// One candidate set in an isoperimetric sweep.
#[derive(Debug, Clone)]
pub struct IsoEntry {
    pub label: String,
    pub boundary: u64,
    pub volume: u64,
    pub edges: u64,
    /// `#∂W / vol(W)` exactly.
    pub ratio: Rational,
    /// Sets without inner edges are excluded from the infimum estimate.
    pub admissible: bool,
}

#[derive(Debug, Clone, Default)]
pub struct IsoReport {
    pub entries: Vec<IsoEntry>,
    /// Minimum admissible ratio: an upper witness for the isoperimetric
    /// constant.
    pub min_ratio: Option<Rational>,
}

impl IsoReport {
    fn push(&mut self, label: String, b: u64, vol: u64, e: u64) {
        let ratio = rat(b as i64, vol as i64);
        let admissible = e >= 1;
        if admissible && self.min_ratio.as_ref().is_none_or(|m| ratio < *m) {
            self.min_ratio = Some(ratio.clone());
        }
        self.entries.push(IsoEntry {
            label,
            boundary: b,
            volume: vol,
            edges: e,
            ratio,
            admissible,
        });
    }
}

/// Ratios `#∂B_r / vol(B_r)` over all balls whose neighborhoods the patch
/// knows completely.
pub fn iso_ball_sweep(patch: &Patch) -> Result<IsoReport> {
    let rmax = patch.full_rotation_radius();
    if rmax < 2 {
        return Err(TessError::Precondition(
            "patch has fewer than two radii with known neighborhoods".into(),
        ));
    }
    let dist = patch.distances();
    let mut report = IsoReport::default();
    for r in 0..=rmax {
        let ball: Vec<u32> = (0..patch.vertex_count() as u32)
            .filter(|&v| dist[v as usize] <= r)
            .collect();
        let (b, vol, e) = boundary_and_volume(patch, &ball)?;
        report.push(format!("B_{r}"), b, vol, e);
    }
    Ok(report)
}

/// Annulus sweep behind the isoperimetric constant at infinity: for each
/// inner radius `r` the best ratio over annuli `B_s \ B_r`, `r < s`.
pub fn alpha_infinity_sweep(patch: &Patch) -> Result<Vec<(u32, Rational)>> {
    let rmax = patch.full_rotation_radius();
    if rmax < 2 {
        return Err(TessError::Precondition(
            "patch too shallow for annuli".into(),
        ));
    }
    let dist = patch.distances();
    let mut out = Vec::new();
    for r in 0..rmax {
        let mut best: Option<Rational> = None;
        for s in r + 1..=rmax {
            let ann: Vec<u32> = (0..patch.vertex_count() as u32)
                .filter(|&v| dist[v as usize] > r && dist[v as usize] <= s)
                .collect();
            if ann.is_empty() {
                continue;
            }
            let (b, vol, e) = boundary_and_volume(patch, &ann)?;
            if e == 0 {
                continue;
            }
            let ratio = rat(b as i64, vol as i64);
            if best.as_ref().is_none_or(|m| ratio < *m) {
                best = Some(ratio);
            }
        }
        if let Some(best) = best {
            out.push((r, best));
        }
    }
    Ok(out)
}

/// The exact isoperimetric constant of the `(p,q)`-regular tessellation:
/// `(q-2)/q * sqrt(1 - 4/((p-2)(q-2)))`.
pub fn iso_regular_exact(p: u32, q: u32) -> Result<QuadraticValue> {
    if p < 3 || q < 3 || (p - 2) * (q - 2) < 4 {
        return Err(TessError::Precondition(format!(
            "({p},{q}) is spherical; the isoperimetric constant formula needs corner curvature <= 0"
        )));
    }
    let coeff = rat(q as i64 - 2, q as i64);
    let radicand = int(1) - rat(4, ((p - 2) * (q - 2)) as i64);
    Ok(QuadraticValue::new(coeff, radicand))
}

/// The constant `C_{p,q} >= 1` entering the curvature lower bound for the
/// isoperimetric constant; `None` means unbounded degree.
pub fn iso_constant_cpq(p: Option<u32>, q: Option<u32>) -> Rational {
    match (p, q) {
        (None, _) => int(1),
        (Some(p), None) => int(1) + rat(2, p as i64 - 2),
        (Some(p), Some(q)) => {
            (int(1) + rat(2, p as i64 - 2)) * (int(1) + rat(2, ((p - 2) * (q - 2)) as i64 - 2))
        }
    }
}

/// Lower bound `alpha >= 2 C_{p,q} K` from a negative upper curvature bound
/// (`K = inf -Φ(v)/d_v > 0`).
pub fn iso_lower_bound(
    p: Option<u32>,
    q: Option<u32>,
    k: &Rational,
) -> Result<(Rational, Rational)> {
    if !k.is_positive() {
        return Err(TessError::Precondition(format!(
            "isoperimetric lower bound needs K > 0, got {k}"
        )));
    }
    let c = iso_constant_cpq(p, q);
    let bound = int(2) * &c * k;
    Ok((c, bound))
}

/// Checks the curvature formula for a finite simply connected set `W`:
/// `sum_{v in W} Φ(v) = 1 - #∂W/2 + sum_{f meets both sides} #(f∩W)/deg f`.
/// Returns the exact residual (zero when the identity holds).
pub fn derksen_check(patch: &Patch, w: &[u32]) -> Result<Rational> {
    check_simply_connected(patch, w)?;
    let (boundary, _, _) = boundary_and_volume(patch, w)?;
    let mut in_w = vec![false; patch.vertex_count()];
    for &v in w {
        in_w[v as usize] = true;
    }
    let mut lhs = int(0);
    for &v in w {
        lhs += vertex_curvature(patch, v)?;
    }
    // Faces meeting W: every face at an interior vertex is complete, so the
    // incidence scan is exhaustive.
    let mut counted = std::collections::BTreeSet::new();
    let mut boundary_face_sum = int(0);
    for &v in w {
        for f in patch.faces_at_vertex(v).expect("W is interior") {
            if !counted.insert(f) {
                continue;
            }
            let cycle = patch.faces().vertices(f);
            let inside = cycle.iter().filter(|&&x| in_w[x as usize]).count();
            if inside < cycle.len() {
                boundary_face_sum += rat(inside as i64, cycle.len() as i64);
            }
        }
    }
    let rhs = int(1) - rat(boundary as i64, 2) + boundary_face_sum;
    Ok(lhs - rhs)
}

/// `W` and its patch complement must both be connected and `W` interior.
pub fn check_simply_connected(patch: &Patch, w: &[u32]) -> Result<()> {
    if w.is_empty() {
        return Err(TessError::Precondition("W is empty".into()));
    }
    let n = patch.vertex_count();
    let mut in_w = vec![false; n];
    for &v in w {
        if !patch.is_interior(v) {
            return Err(TessError::Precondition(format!(
                "W touches the boundary at {v}"
            )));
        }
        in_w[v as usize] = true;
    }
    let connected = |members: &dyn Fn(u32) -> bool, start: u32, count: usize| -> bool {
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[start as usize] = true;
        queue.push_back(start);
        let mut reached = 1usize;
        while let Some(v) = queue.pop_front() {
            for &u in patch.rotation().neighbors(v) {
                if members(u) && !seen[u as usize] {
                    seen[u as usize] = true;
                    reached += 1;
                    queue.push_back(u);
                }
            }
        }
        reached == count
    };
    let inside = |u: u32| in_w[u as usize];
    if !connected(&inside, w[0], w.len()) {
        return Err(TessError::Precondition("W is not connected".into()));
    }
    let out_count = n - w.len();
    if out_count > 0 {
        let outside = |u: u32| !in_w[u as usize];
        let start = (0..n as u32).find(|&v| !in_w[v as usize]).unwrap();
        if !connected(&outside, start, out_count) {
            return Err(TessError::Precondition(
                "complement of W is not connected".into(),
            ));
        }
    }
    Ok(())
}

/// `β` and `δ` of a `(p,q)`-regular tessellation and the duality residual
/// `β(p,q) + δ(q,p) - 1`, which vanishes identically.
#[derive(Debug, Clone)]
pub struct BetaDelta {
    pub beta: f64,
    pub delta_dual: f64,
    pub residual: f64,
}

pub fn beta_delta_regular(p: u32, q: u32) -> Result<BetaDelta> {
    let alpha = iso_regular_exact(p, q)?.to_f64();
    let alpha_dual = iso_regular_exact(q, p)?.to_f64();
    let beta = 2.0 / (q as f64 * (1.0 - alpha));
    let delta_dual = 2.0 / (p as f64 * (1.0 + alpha_dual));
    Ok(BetaDelta {
        beta,
        delta_dual,
        residual: beta + delta_dual - 1.0,
    })
}

/// A random subset of vertices with known neighborhoods (for the volume
/// identity check).
pub fn random_known_set<R: Rng>(patch: &Patch, rng: &mut R, max_size: usize) -> Vec<u32> {
    let candidates: Vec<u32> = (0..patch.vertex_count() as u32)
        .filter(|&v| !patch.is_partial(v))
        .collect();
    if candidates.is_empty() {
        return Vec::new();
    }
    let size = rng.gen_range(1..=max_size.min(candidates.len()));
    let mut picked = std::collections::BTreeSet::new();
    while picked.len() < size {
        picked.insert(candidates[rng.gen_range(0..candidates.len())]);
    }
    picked.into_iter().collect()
}

/// Grows a random connected interior set and keeps it only if its patch
/// complement is connected; retries until one passes.
pub fn random_simply_connected_set<R: Rng>(
    patch: &Patch,
    rng: &mut R,
    target_size: usize,
    max_tries: usize,
) -> Option<Vec<u32>> {
    let interior = patch.interior_vertices();
    if interior.is_empty() {
        return None;
    }
    for _ in 0..max_tries {
        let start = interior[rng.gen_range(0..interior.len())];
        let mut set = vec![start];
        let mut in_set = std::collections::BTreeSet::new();
        in_set.insert(start);
        let mut frontier: Vec<u32> = patch
            .rotation()
            .neighbors(start)
            .iter()
            .copied()
            .filter(|&u| patch.is_interior(u))
            .collect();
        while set.len() < target_size && !frontier.is_empty() {
            let i = rng.gen_range(0..frontier.len());
            let v = frontier.swap_remove(i);
            if !in_set.insert(v) {
                continue;
            }
            set.push(v);
            for &u in patch.rotation().neighbors(v) {
                if patch.is_interior(u) && !in_set.contains(&u) {
                    frontier.push(u);
                }
            }
        }
        set.sort_unstable();
        if set.len() == target_size && check_simply_connected(patch, &set).is_ok() {
            return Some(set);
        }
    }
    None
}

/// Largest `k` with `Φ(v) <= -k` over the covered set, when curvature is
/// strictly negative everywhere; `None` otherwise.
pub fn uniform_negative_bound(patch: &Patch) -> Option<Rational> {
    let mut max: Option<Rational> = None;
    for v in patch.interior_vertices() {
        let phi = vertex_curvature(patch, v).ok()?;
        if !phi.is_negative() {
            return None;
        }
        if max.as_ref().is_none_or(|m| phi > *m) {
            max = Some(phi);
        }
    }
    max.map(|m| -m)
}

/// Minimum covered degree (`m` in the spectral bounds).
pub fn min_covered_degree<S: CurvatureSite>(site: &S) -> Option<usize> {
    site.covered_vertices()
        .iter()
        .map(|&v| site.degree_of(v))
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;
    use rand::SeedableRng;

    #[test]
    fn bfs_profile_of_cube() {
        let cube = generate::platonic(generate::PlatonicSolid::Cube).unwrap();
        let prof = bfs_profile(cube.rotation(), 0, |_| true);
        assert_eq!(prof.sphere_sizes, vec![1, 3, 3, 1]);
        assert_eq!(prof.ball_sizes, vec![1, 4, 7, 8]);
        assert_eq!(prof.volumes[3], Some(24));
        // Parent pointers realize geodesics: each step drops the distance
        // by exactly one.
        for v in 0..8u32 {
            let mut cur = v;
            let mut steps = 0;
            while let Some(p) = prof.parent[cur as usize] {
                assert_eq!(prof.dist[p as usize] + 1, prof.dist[cur as usize]);
                cur = p;
                steps += 1;
            }
            assert_eq!(steps, prof.dist[v as usize]);
        }
    }

    #[test]
    fn bfs_profile_of_4_5_ball() {
        let p = generate::hyperbolic_ball(4, 5, 3).unwrap();
        let prof = patch_profile(&p, 0);
        assert_eq!(prof.sphere_sizes, vec![1, 5, 15, 40]);
    }

    #[test]
    fn path_fixture_spheres_are_singletons() {
        let n = 6usize;
        let mut rot: Vec<Vec<u32>> = Vec::new();
        for i in 0..n {
            let mut nb = Vec::new();
            if i > 0 {
                nb.push(i as u32 - 1);
            }
            if i + 1 < n {
                nb.push(i as u32 + 1);
            }
            rot.push(nb);
        }
        let rs = RotationSystem::new(rot).unwrap();
        let prof = bfs_profile(&rs, 0, |_| true);
        assert!(prof.sphere_sizes.iter().all(|&s| s == 1));
    }

    #[test]
    fn hyperbolic_balls_have_empty_cut_locus() {
        for (p, q) in [(7u32, 3u32), (4, 5), (3, 7), (6, 3), (4, 4), (5, 4)] {
            let ball = generate::hyperbolic_ball(p, q, 5).unwrap();
            let cl = cut_locus(&ball, 0);
            assert!(
                cl.locus.is_empty(),
                "({p},{q}) has cut locus {:?}",
                cl.locus
            );
        }
    }

    #[test]
    fn seven_three_cut_locus_empty_from_every_interior_root() {
        let ball = generate::hyperbolic_ball(7, 3, 5).unwrap();
        for root in ball.interior_vertices() {
            let cl = cut_locus(&ball, root);
            assert!(cl.locus.is_empty(), "root {root}: {:?}", cl.locus);
        }
    }

    #[test]
    fn kagome_cut_locus_has_the_two_opposite_vertices() {
        let ball = generate::kagome_family_ball(6, 5).unwrap();
        let cl = cut_locus(&ball, 0);
        let dist = ball.distances();
        let in_b3: Vec<u32> = cl
            .locus
            .iter()
            .copied()
            .filter(|&v| dist[v as usize] <= 3)
            .collect();
        assert_eq!(in_b3.len(), 2, "locus {:?}", cl.locus);
        for &v in &in_b3 {
            assert_eq!(dist[v as usize], 3);
            // Opposite vertex of a hexagon through the center: shares a
            // complete hexagonal face with the root.
            let shares_hexagon = (0..ball.faces().count() as u32).any(|f| {
                let cyc = ball.faces().vertices(f);
                cyc.len() == 6 && cyc.contains(&0) && cyc.contains(&v)
            });
            assert!(shares_hexagon);
        }
    }

    #[test]
    fn octagon_family_cut_locus_in_b4() {
        let ball = generate::kagome_family_ball(8, 6).unwrap();
        let cl = cut_locus(&ball, 0);
        let dist = ball.distances();
        let witnesses: Vec<u32> = cl
            .locus
            .iter()
            .copied()
            .filter(|&v| dist[v as usize] <= 4)
            .collect();
        assert!(!witnesses.is_empty());
        for &v in &witnesses {
            assert!(ball
                .rotation()
                .neighbors(v)
                .iter()
                .all(|&u| dist[u as usize] <= dist[v as usize]));
        }
    }

    #[test]
    fn volume_identity_on_single_vertices_and_balls() {
        let p = generate::hyperbolic_ball(4, 5, 4).unwrap();
        // Single interior vertex: #∂ = d, vol = d, E = 0.
        assert_eq!(boundary_and_volume(&p, &[0]).unwrap(), (5, 5, 0));
        // B_1 in (4,5): vol = 30, E = 5, #∂ = 20.
        let dist = p.distances();
        let b1: Vec<u32> = (0..p.vertex_count() as u32)
            .filter(|&v| dist[v as usize] <= 1)
            .collect();
        assert_eq!(boundary_and_volume(&p, &b1).unwrap(), (20, 30, 5));
        // Whole closed cube graph: no boundary, vol = 24.
        let as_patch = cube_as_patch();
        let all: Vec<u32> = (0..8).collect();
        assert_eq!(boundary_and_volume(&as_patch, &all).unwrap(), (0, 24, 12));
    }

    fn cube_as_patch() -> Patch {
        let cube = generate::platonic(generate::PlatonicSolid::Cube).unwrap();
        let rot = cube.rotation().rotations();
        let n = rot.len();
        Patch::from_parts(
            RotationSystem::new(rot).unwrap(),
            0,
            3,
            vec![false; n],
            vec![Vec::new(); n],
        )
        .unwrap()
    }

    #[test]
    fn volume_identity_holds_on_random_sets() {
        let p = generate::hyperbolic_ball(3, 7, 4).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let w = random_known_set(&p, &mut rng, 40);
            let (b, vol, e) = boundary_and_volume(&p, &w).unwrap();
            assert_eq!(vol, 2 * e + b);
        }
    }

    #[test]
    fn iso_exact_values() {
        let a73 = iso_regular_exact(7, 3).unwrap();
        assert_eq!(a73.coeff, rat(1, 3));
        assert_eq!(a73.radicand, rat(1, 5));
        assert!((a73.to_f64() - 0.149071).abs() < 1e-6);

        let a45 = iso_regular_exact(4, 5).unwrap();
        assert_eq!(a45.coeff, rat(3, 5));
        assert_eq!(a45.radicand, rat(1, 3));
        assert!((a45.to_f64() - 0.346410).abs() < 1e-6);

        assert!(iso_regular_exact(4, 4).unwrap().is_zero());
        assert!(iso_regular_exact(3, 5).is_err());
    }

    #[test]
    fn iso_lower_bound_values() {
        let (c, bound) = iso_lower_bound(Some(7), Some(3), &rat(1, 42)).unwrap();
        assert_eq!(c, rat(7, 3));
        assert_eq!(bound, rat(1, 9));
        assert!(crate::rat::to_f64(&bound) <= iso_regular_exact(7, 3).unwrap().to_f64());

        assert_eq!(iso_constant_cpq(None, Some(3)), int(1));
        let (c45, bound45) = iso_lower_bound(Some(4), Some(5), &rat(1, 20)).unwrap();
        assert_eq!(c45, int(3));
        assert_eq!(bound45, rat(3, 10));
        assert!(crate::rat::to_f64(&bound45) <= iso_regular_exact(4, 5).unwrap().to_f64());

        assert!(iso_lower_bound(Some(7), Some(3), &int(0)).is_err());
    }

    #[test]
    fn ball_sweep_respects_the_exact_constant() {
        let p = generate::hyperbolic_ball(4, 5, 6).unwrap();
        let report = iso_ball_sweep(&p).unwrap();
        let alpha = iso_regular_exact(4, 5).unwrap().to_f64();
        for entry in report.entries.iter().filter(|e| e.admissible) {
            assert!(
                crate::rat::to_f64(&entry.ratio) >= alpha - 1e-12,
                "{}",
                entry.label
            );
        }
        // B_0 is reported but not admissible (no inner edge, ratio 1).
        assert!(!report.entries[0].admissible);
        assert_eq!(report.entries[0].ratio, int(1));
    }

    #[test]
    fn flat_sweep_ratios_decay() {
        let p = generate::flat_lattice(generate::LatticeKind::Square, 8).unwrap();
        let report = iso_ball_sweep(&p).unwrap();
        let ratios: Vec<f64> = report
            .entries
            .iter()
            .filter(|e| e.admissible)
            .map(|e| crate::rat::to_f64(&e.ratio))
            .collect();
        for w in ratios.windows(2) {
            assert!(w[1] < w[0]);
        }
        assert!(*ratios.last().unwrap() < 0.5);
    }

    #[test]
    fn derksen_identity() {
        // Single vertex: reduces to the curvature definition.
        let p = generate::hyperbolic_ball(4, 5, 4).unwrap();
        assert_eq!(derksen_check(&p, &[0]).unwrap(), int(0));
        // B_2 in (4,5).
        let dist = p.distances();
        let b2: Vec<u32> = (0..p.vertex_count() as u32)
            .filter(|&v| dist[v as usize] <= 2)
            .collect();
        assert_eq!(derksen_check(&p, &b2).unwrap(), int(0));
    }

    #[test]
    fn derksen_on_random_simply_connected_sets() {
        let p = generate::hyperbolic_ball(3, 7, 5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut found = 0;
        for _ in 0..50 {
            if let Some(w) = random_simply_connected_set(&p, &mut rng, 30, 50) {
                assert_eq!(derksen_check(&p, &w).unwrap(), int(0));
                found += 1;
            }
        }
        assert!(found >= 40, "only {found} random sets produced");
    }

    #[test]
    fn derksen_rejects_disconnected_sets() {
        let p = generate::hyperbolic_ball(4, 5, 4).unwrap();
        // Two far-apart interior singletons.
        let interior = p.interior_vertices();
        let a = interior[0];
        let dist = p.rotation().bfs_distances(a);
        let b = interior
            .iter()
            .copied()
            .find(|&v| dist[v as usize] >= 2)
            .unwrap();
        assert!(derksen_check(&p, &[a, b]).is_err());
    }

    #[test]
    fn beta_delta_duality() {
        for (p, q) in [(7u32, 3u32), (4, 5), (3, 7), (5, 5), (8, 4)] {
            let bd = beta_delta_regular(p, q).unwrap();
            assert!(bd.residual.abs() < 1e-12, "({p},{q}): {}", bd.residual);
        }
        // Flat case: alpha = 0 on both sides, beta + delta = 2/3 + 1/3.
        let bd = beta_delta_regular(6, 3).unwrap();
        assert!((bd.beta - 2.0 / 3.0).abs() < 1e-15);
        assert!((bd.delta_dual - 1.0 / 3.0).abs() < 1e-15);
        assert!(bd.residual.abs() < 1e-15);
    }

    #[test]
    fn annulus_ratios_rise_on_exploding_schedules() {
        let qs: Vec<u32> = (0..=5).map(|r| 6 + 4 * r).collect();
        let p = generate::schedule_triangulation(&qs, 5).unwrap();
        let sweep = alpha_infinity_sweep(&p).unwrap();
        assert!(sweep.len() >= 3);
        for w in sweep.windows(2) {
            assert!(w[1].1 >= w[0].1, "{sweep:?}");
        }
        let last = crate::rat::to_f64(&sweep.last().unwrap().1);
        assert!(last > 0.8, "annulus ratio should head toward 1, got {last}");
    }
}
