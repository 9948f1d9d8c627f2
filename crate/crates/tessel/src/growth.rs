//! Sphere-size recursions for face-regular tessellations, Salem polynomials
//! and growth rates, and the ball-growth comparison theorem.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::curvature::{avg_sphere_curvature, face_regular_degree};
use crate::error::{Result, TessError};
use crate::geometry::{cut_locus, patch_profile};
use crate::rat::{int, rat, Rational};
use crate::surface::Patch;

/// The coefficients of the sphere-size recursion for `p`-face-regular
/// tessellations: an `(N+1)`-step recursion with `N = (p-2)/2` for even `p`
/// and `N = p-2` for odd `p`.
#[derive(Debug, Clone)]
pub struct RecursionSpec {
    pub p: u32,
    pub n: usize,
    /// `b_l` for `0 <= l <= N-1`: `4/(p-2)`, except `4/(p-2) - 2` at the
    /// middle index `(N-1)/2` when `p` is odd.
    pub b: Vec<Rational>,
}

impl RecursionSpec {
    pub fn new(p: u32) -> Result<Self> {
        if p < 3 {
            return Err(TessError::Precondition(format!("face degree {p} < 3")));
        }
        let n = if p % 2 == 0 {
            (p as usize - 2) / 2
        } else {
            p as usize - 2
        };
        let base = rat(4, p as i64 - 2);
        let b = (0..n)
            .map(|l| {
                if p % 2 == 1 && l == (n - 1) / 2 {
                    base.clone() - int(2)
                } else {
                    base.clone()
                }
            })
            .collect();
        Ok(RecursionSpec { p, n, b })
    }
}

/// One radius of a recursion check: measured and predicted sphere size plus
/// the sphere curvature average that fed the prediction.
#[derive(Debug, Clone)]
pub struct RecursionRow {
    pub r: u32,
    pub measured: BigInt,
    pub predicted: BigInt,
    pub phi_bar: Rational,
}

#[derive(Debug, Clone)]
pub struct GrowthPrediction {
    pub spec: RecursionSpec,
    /// Measured sphere sizes `#S_0 ..`.
    pub measured: Vec<BigInt>,
    /// Rows for radii `r+1` where the prediction is defined (r >= 1).
    pub rows: Vec<RecursionRow>,
    pub all_match: bool,
}

/// Predicts `#S_{r+1}` from measured sphere sizes and normalized average
/// sphere curvatures, and compares with the BFS counts. Exact rational
/// arithmetic; a non-integer prediction is a hypothesis violation.
///
/// For `r = 0` the stated recursion is the tautology `#S_1 = #S_1`, so
/// predictions start at `r = 1`.
pub fn recursion_predict(patch: &Patch) -> Result<GrowthPrediction> {
    let p = face_regular_degree(patch)? as u32;
    let spec = RecursionSpec::new(p)?;
    let cl = cut_locus(patch, patch.center());
    if !cl.locus.is_empty() {
        return Err(TessError::Hypothesis(format!(
            "recursion needs an empty cut locus; found {:?}",
            cl.locus
        )));
    }
    let prof = patch_profile(patch, patch.center());
    let measured: Vec<BigInt> = prof.sphere_sizes.iter().map(|&s| BigInt::from(s)).collect();
    let interior_radius = patch
        .interior_radius()
        .ok_or_else(|| TessError::Precondition("patch center is not interior".into()))?;

    let mut phi_bar: Vec<Rational> = Vec::with_capacity(interior_radius as usize + 1);
    for r in 0..=interior_radius {
        phi_bar.push(avg_sphere_curvature(patch, r)?);
    }

    let n = spec.n;
    let mut rows = Vec::new();
    let mut all_match = true;
    // Predicting #S_{r+1} uses curvature averages through S_r.
    for r in 1..=interior_radius as usize {
        if r + 1 >= measured.len() {
            break;
        }
        let s = |j: usize| Rational::from_integer(measured[j].clone());
        let mut pred = int(0);
        if r < n {
            for l in 0..r {
                pred += (spec.b[l].clone() - phi_bar[r - l].clone()) * s(r - l);
            }
            pred += s(1);
        } else {
            for l in 0..n {
                pred += (spec.b[l].clone() - phi_bar[r - l].clone()) * s(r - l);
            }
            if r > n {
                pred -= s(r - n);
            }
        }
        if !pred.denom().is_one() {
            return Err(TessError::Hypothesis(format!(
                "prediction for #S_{} is not an integer: {pred}",
                r + 1
            )));
        }
        let predicted = pred.numer().clone();
        all_match &= predicted == measured[r + 1];
        rows.push(RecursionRow {
            r: (r + 1) as u32,
            measured: measured[r + 1].clone(),
            predicted,
            phi_bar: phi_bar[r].clone(),
        });
    }
    if rows.is_empty() {
        return Err(TessError::Precondition(
            "no admissible radii for the recursion".into(),
        ));
    }
    Ok(GrowthPrediction {
        spec,
        measured,
        rows,
        all_match,
    })
}

/// Integer coefficients of the reciprocal Salem polynomial `g_{p,q}`,
/// ascending in degree: `1 - (q-2)z - ... - (q-2)z^N + z^{N+1}`, with the
/// middle coefficient `-(q-4)` when `p` is odd.
pub fn salem_polynomial(p: u32, q: u32) -> Result<Vec<i64>> {
    if p < 3 || q < 3 || (p - 2) * (q - 2) < 4 {
        return Err(TessError::Precondition(format!(
            "({p},{q}) is spherical; no growth polynomial"
        )));
    }
    let spec = RecursionSpec::new(p)?;
    let n = spec.n;
    let mut c = vec![0i64; n + 2];
    c[0] = 1;
    c[n + 1] = 1;
    for l in 1..=n {
        c[l] = -(q as i64 - 2);
    }
    if p % 2 == 1 {
        c[(n + 1) / 2] = -(q as i64 - 4);
    }
    Ok(c)
}

/// Checks the palindrome property `c_l = c_{deg-l}` that makes
/// `x^deg g(1/x) = g(x)`.
pub fn is_reciprocal(coeffs: &[i64]) -> bool {
    let k = coeffs.len();
    (0..k).all(|l| coeffs[l] == coeffs[k - 1 - l])
}

pub fn eval_poly(coeffs: &[i64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
}

fn eval_poly_at_one(coeffs: &[i64]) -> i64 {
    coeffs.iter().sum()
}

/// The largest real root of `g_{p,q}`, by bisection to absolute tolerance
/// 1e-12 with the sign-change bracket as certificate. The bracket is
/// `(1, q-1)`: spheres obey the tree bound `#S_{r+1} <= (q-1) #S_r`, so the
/// growth base stays below `q-1`.
#[derive(Debug, Clone)]
pub struct SalemRoot {
    pub value: f64,
    pub bracket: (f64, f64),
    /// Flat parameters give the degenerate root 1.
    pub degenerate_flat: bool,
}

pub fn salem_root(p: u32, q: u32) -> Result<SalemRoot> {
    let coeffs = salem_polynomial(p, q)?;
    salem_root_of(&coeffs, (q - 1) as f64)
}

pub fn salem_root_of(coeffs: &[i64], upper: f64) -> Result<SalemRoot> {
    if eval_poly_at_one(coeffs) == 0 {
        return Ok(SalemRoot {
            value: 1.0,
            bracket: (1.0, 1.0),
            degenerate_flat: true,
        });
    }
    let mut lo = 1.0f64;
    let mut hi = upper;
    if eval_poly(coeffs, hi) <= 0.0 {
        // Cauchy bound: every root is below 1 + max |c_l|.
        hi = 1.0 + coeffs.iter().map(|c| c.abs()).max().unwrap_or(1) as f64;
    }
    let flo = eval_poly(coeffs, lo);
    let fhi = eval_poly(coeffs, hi);
    if !(flo < 0.0 && fhi > 0.0) {
        return Err(TessError::Numeric(format!(
            "no sign change on (1, {hi}): g(1)={flo}, g({hi})={fhi}"
        )));
    }
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if eval_poly(coeffs, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(SalemRoot {
        value: 0.5 * (lo + hi),
        bracket: (lo, hi),
        degenerate_flat: false,
    })
}

/// Finite-stage growth-rate estimates `(1/r) log #S_r`, `(1/r) log #B_r`
/// and `(1/r) log vol(B_r)`.
#[derive(Debug, Clone)]
pub struct RateReport {
    /// Rows `(r, rate_sphere, rate_ball, rate_volume)`.
    pub rows: Vec<(u32, f64, f64, Option<f64>)>,
    pub last_sphere_rate: f64,
    pub last_ball_rate: f64,
}

fn log_big(x: &BigInt) -> f64 {
    // Exact enough for rate estimates: f64 conversion saturates far beyond
    // the sizes reached here.
    x.to_f64().map(|v| v.ln()).unwrap_or(f64::INFINITY)
}

pub fn growth_rate(patch: &Patch) -> Result<RateReport> {
    let prof = patch_profile(patch, patch.center());
    let rmax = patch.radius() as usize;
    if rmax < 4 {
        return Err(TessError::Precondition(format!(
            "growth rate needs at least 4 radii, patch has {rmax}"
        )));
    }
    let mut rows = Vec::new();
    for r in 1..=rmax {
        let rs = log_big(&BigInt::from(prof.sphere_sizes[r])) / r as f64;
        let rb = log_big(&BigInt::from(prof.ball_sizes[r])) / r as f64;
        let rv = prof.volumes[r].map(|v| log_big(&BigInt::from(v)) / r as f64);
        rows.push((r as u32, rs, rb, rv));
    }
    let last = rows.last().unwrap();
    Ok(RateReport {
        last_sphere_rate: last.1,
        last_ball_rate: last.2,
        rows,
    })
}

/// Comparison of two `p`-face-regular patches with nonpositive curvature:
/// when the normalized average curvatures satisfy
/// `phi_bar_b(r) <= phi_bar_a(r) <= 0` on the admissible range, the sphere
/// difference `#S_r(b) - #S_r(a)` is nonnegative and nondecreasing.
#[derive(Debug, Clone)]
pub struct ComparisonRow {
    pub r: u32,
    pub phi_bar_a: Rational,
    pub phi_bar_b: Rational,
    pub hypothesis_ok: bool,
    pub diff: BigInt,
}

#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub rows: Vec<ComparisonRow>,
    /// Difference sequence nonnegative and nondecreasing over the verified
    /// range.
    pub monotone_ok: bool,
}

pub fn comparison_check(a: &Patch, b: &Patch) -> Result<ComparisonReport> {
    let pa = face_regular_degree(a)?;
    let pb = face_regular_degree(b)?;
    if pa != pb {
        return Err(TessError::Precondition(format!(
            "comparison needs equal face degrees, got {pa} and {pb}"
        )));
    }
    for (name, patch) in [("first", a), ("second", b)] {
        let cl = cut_locus(patch, patch.center());
        if !cl.locus.is_empty() {
            return Err(TessError::Hypothesis(format!(
                "{name} patch has nonempty cut locus"
            )));
        }
    }
    let ra = a.interior_radius().unwrap_or(0);
    let rb = b.interior_radius().unwrap_or(0);
    let rmax = ra.min(rb);
    if rmax < 1 {
        return Err(TessError::Precondition("no common interior radii".into()));
    }
    let prof_a = patch_profile(a, a.center());
    let prof_b = patch_profile(b, b.center());
    let mut rows = Vec::new();
    let mut monotone_ok = true;
    let mut prev = BigInt::zero();
    for r in 0..=rmax {
        let phi_a = avg_sphere_curvature(a, r)?;
        let phi_b = avg_sphere_curvature(b, r)?;
        let hypothesis_ok = phi_b <= phi_a && !phi_a.is_positive();
        let diff = BigInt::from(prof_b.sphere_sizes[r as usize])
            - BigInt::from(prof_a.sphere_sizes[r as usize]);
        if hypothesis_ok {
            monotone_ok &= !diff.is_negative() && diff >= prev;
            prev = diff.clone();
        }
        rows.push(ComparisonRow {
            r,
            phi_bar_a: phi_a,
            phi_bar_b: phi_b,
            hypothesis_ok,
            diff,
        });
    }
    Ok(ComparisonReport { rows, monotone_ok })
}

/// Ball-growth bounds on a generated patch, checked on the radii the patch
/// resolves:
///
/// - with `Φ <= -k < 0` and empty cut locus, `#B_r >= (1 + 2Ck)^r` where
///   `C = p/(p-1)` for maximal face degree `p`;
/// - spheres obey the tree bound `#S_{r+1} <= (q-1) #S_r` for `r >= 1`
///   (hence `#B_r` grows at rate at most `q-1`), `q` the maximal degree;
/// - with `Φ >= 0`, `#B_r <= C r^2` with the fitted constant reported.
#[derive(Debug, Clone)]
pub struct BallBounds {
    pub lower_base: Option<f64>,
    pub lower_ok: bool,
    pub tree_ok: bool,
    pub quadratic_fit: Option<f64>,
}

pub fn ball_bounds_check(patch: &Patch) -> Result<BallBounds> {
    let prof = patch_profile(patch, patch.center());
    let report = crate::curvature::CurvatureReport::compute(patch);
    if report.vertex.is_empty() {
        return Err(TessError::Precondition("patch has empty interior".into()));
    }

    let mut lower_base = None;
    let mut lower_ok = true;
    let negative = report.vertex.iter().all(|(_, phi)| phi.is_negative());
    if negative && cut_locus(patch, patch.center()).locus.is_empty() {
        let k = -report.max.as_ref().unwrap().1.clone();
        let p = (0..patch.faces().count() as u32)
            .map(|f| patch.faces().degree(f))
            .max()
            .unwrap_or(3) as f64;
        let c = p / (p - 1.0);
        let base = 1.0 + 2.0 * c * crate::rat::to_f64(&k);
        lower_base = Some(base);
        for (r, &b) in prof.ball_sizes.iter().enumerate() {
            lower_ok &= b as f64 >= base.powi(r as i32) - 1e-9;
        }
    }

    let q = (0..patch.vertex_count() as u32)
        .filter(|&v| !patch.is_partial(v))
        .map(|v| patch.rotation().degree(v))
        .max()
        .unwrap_or(3) as u64;
    let mut tree_ok = true;
    // Only spheres whose predecessors are fully known count.
    let rmax = patch.full_rotation_radius() as usize;
    for r in 1..rmax.min(prof.sphere_sizes.len().saturating_sub(1)) {
        tree_ok &= prof.sphere_sizes[r + 1] <= (q - 1) * prof.sphere_sizes[r];
    }

    let mut quadratic_fit = None;
    let nonneg = report.vertex.iter().all(|(_, phi)| !phi.is_negative());
    if nonneg {
        let fit = prof
            .ball_sizes
            .iter()
            .enumerate()
            .skip(1)
            .map(|(r, &b)| b as f64 / (r * r) as f64)
            .fold(0.0f64, f64::max);
        quadratic_fit = Some(fit);
    }
    Ok(BallBounds {
        lower_base,
        lower_ok,
        tree_ok,
        quadratic_fit,
    })
}
