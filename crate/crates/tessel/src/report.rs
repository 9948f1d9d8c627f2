//! Reproducible report bundles.
//!
//! Every numeric claim carries the tag of the statement it instantiates and
//! a pass/fail/inapplicable status. Reports embed the input hash and the
//! seed, and identical configurations produce byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Signed;
use rand::SeedableRng;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::curvature::{
    self, curvature_bounds_check, dual_face_curvature, gauss_bonnet, CurvatureReport, CurvatureSite,
};
use crate::error::Result;
use crate::generate;
use crate::geometry;
use crate::growth;
use crate::rat::{display, to_f64, Rational};
use crate::spectral;
use crate::surface::{validate_closed, validate_patch, ClosedTessellation, Loaded, Patch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRow {
    pub tag: String,
    pub status: CheckStatus,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportHeader {
    pub tool: String,
    pub input: String,
    pub sha256: String,
    pub kind: String,
    pub seed: u64,
    pub tolerance: f64,
    pub sections: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateJson {
    pub support: Vec<u32>,
    pub eigenvalue: String,
    pub vector: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportBundle {
    pub header: ReportHeader,
    pub checks: Vec<CheckRow>,
    /// CSV tables by name; written as separate files alongside the JSON.
    pub tables: BTreeMap<String, String>,
    /// Exact compactly-supported eigenfunction certificates, when the
    /// spectrum section ran a search.
    pub certificates: Vec<CertificateJson>,
}

impl ReportBundle {
    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    fn check(&mut self, tag: &str, status: CheckStatus, details: String) {
        self.checks.push(CheckRow {
            tag: tag.to_string(),
            status,
            details,
        });
    }

    fn pass_fail(&mut self, tag: &str, ok: bool, details: String) {
        self.check(
            tag,
            if ok {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            details,
        );
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sections {
    pub curvature: bool,
    pub geometry: bool,
    pub growth: bool,
    pub spectrum: bool,
}

impl Sections {
    pub fn all() -> Self {
        Sections {
            curvature: true,
            geometry: true,
            growth: true,
            spectrum: true,
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        if s == "all" {
            return Ok(Self::all());
        }
        let mut out = Sections {
            curvature: false,
            geometry: false,
            growth: false,
            spectrum: false,
        };
        for tok in s.split(',') {
            match tok.trim() {
                "curvature" => out.curvature = true,
                "geometry" => out.geometry = true,
                "growth" => out.growth = true,
                "spectrum" => out.spectrum = true,
                other => {
                    return Err(crate::TessError::BadSpec(format!(
                        "unknown section `{other}`"
                    )))
                }
            }
        }
        Ok(out)
    }

    fn names(&self) -> Vec<String> {
        let mut v = Vec::new();
        if self.curvature {
            v.push("curvature".into());
        }
        if self.geometry {
            v.push("geometry".into());
        }
        if self.growth {
            v.push("growth".into());
        }
        if self.spectrum {
            v.push("spectrum".into());
        }
        v
    }
}

pub fn run_report(
    input_name: &str,
    raw: &[u8],
    loaded: &Loaded,
    sections: Sections,
    seed: u64,
    tolerance: f64,
) -> ReportBundle {
    let mut bundle = ReportBundle {
        header: ReportHeader {
            tool: format!("tessel {}", env!("CARGO_PKG_VERSION")),
            input: input_name.to_string(),
            sha256: hex(&Sha256::digest(raw)),
            kind: loaded.kind().to_string(),
            seed,
            tolerance,
            sections: sections.names(),
        },
        checks: Vec::new(),
        tables: BTreeMap::new(),
        certificates: Vec::new(),
    };
    if sections.curvature {
        match loaded {
            Loaded::Closed(t) => curvature_section_closed(&mut bundle, t),
            Loaded::Patch(p) => curvature_section_patch(&mut bundle, p),
        }
    }
    if sections.geometry {
        match loaded {
            Loaded::Closed(t) => geometry_section_closed(&mut bundle, t),
            Loaded::Patch(p) => geometry_section_patch(&mut bundle, p, seed),
        }
    }
    if sections.growth {
        match loaded {
            Loaded::Closed(_) => bundle.check(
                "RECUR",
                CheckStatus::Inapplicable,
                "growth recursion concerns patches of infinite tessellations".into(),
            ),
            Loaded::Patch(p) => growth_section(&mut bundle, p),
        }
    }
    if sections.spectrum {
        match loaded {
            Loaded::Closed(t) => spectrum_section_closed(&mut bundle, t),
            Loaded::Patch(p) => spectrum_section_patch(&mut bundle, p, seed),
        }
    }
    bundle
}

fn hex(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        write!(s, "{b:02x}").unwrap();
    }
    s
}

fn curvature_csv<S: CurvatureSite>(site: &S, report: &CurvatureReport) -> String {
    let mut csv = String::from("vertex,degree,phi_numerator,phi_denominator\n");
    for (v, phi) in &report.vertex {
        writeln!(
            csv,
            "{v},{},{},{}",
            site.degree_of(*v),
            phi.numer(),
            phi.denom()
        )
        .unwrap();
    }
    csv
}

fn bounds_checks<S: CurvatureSite>(bundle: &mut ReportBundle, site: &S, report: &CurvatureReport) {
    let violations = curvature_bounds_check(site, report);
    let degree_ok = violations
        .iter()
        .all(|v| matches!(v, curvature::BoundViolation::HiguchiGap { .. }));
    bundle.pass_fail(
        "BOUNDS",
        degree_ok,
        format!(
            "-d/2 <= phi <= 1 - d/6 and phi <= 3/2 on {} vertices",
            report.vertex.len()
        ),
    );
    let all_negative =
        !report.vertex.is_empty() && report.vertex.iter().all(|(_, phi)| phi.is_negative());
    if all_negative {
        let gap_ok = !violations
            .iter()
            .any(|v| matches!(v, curvature::BoundViolation::HiguchiGap { .. }));
        let max = report.max.as_ref().unwrap();
        bundle.pass_fail(
            "HIGUCHI",
            gap_ok,
            format!("all phi < 0; max phi = {} <= -1/1806", display(&max.1)),
        );
    } else {
        bundle.check(
            "HIGUCHI",
            CheckStatus::Inapplicable,
            "curvature is not everywhere negative".into(),
        );
    }
    // Corner sums rebuild the vertex values exactly.
    let mut sums: BTreeMap<u32, Rational> = BTreeMap::new();
    for (c, x) in &report.corner {
        *sums.entry(c.vertex).or_insert_with(|| crate::rat::int(0)) += x.clone();
    }
    let ok = report
        .vertex
        .iter()
        .all(|(v, phi)| sums.get(v) == Some(phi));
    bundle.pass_fail(
        "CORNER-SUM",
        ok,
        "phi(v) equals the sum of its corner curvatures".into(),
    );
}

fn aggregates_csv(report: &CurvatureReport) -> String {
    let mut csv = String::from("quantity,numerator,denominator\n");
    writeln!(
        csv,
        "total,{},{}",
        report.total.numer(),
        report.total.denom()
    )
    .unwrap();
    if let Some((v, min)) = &report.min {
        writeln!(csv, "min(at {v}),{},{}", min.numer(), min.denom()).unwrap();
    }
    if let Some((v, max)) = &report.max {
        writeln!(csv, "max(at {v}),{},{}", max.numer(), max.denom()).unwrap();
    }
    csv
}

fn curvature_section_closed(bundle: &mut ReportBundle, t: &ClosedTessellation) {
    let report = CurvatureReport::compute(t);
    bundle
        .tables
        .insert("curvature".into(), curvature_csv(t, &report));
    bundle
        .tables
        .insert("curvature_aggregates".into(), aggregates_csv(&report));
    let (chi, genus) = t.euler_genus();
    let total = gauss_bonnet(t);
    bundle.pass_fail(
        "GB",
        total == crate::rat::int(chi),
        format!(
            "sum phi = {} vs chi = {chi} (genus {genus})",
            display(&total)
        ),
    );
    bounds_checks(bundle, t, &report);
    match dual_face_curvature(t) {
        Ok(pairs) => {
            let ok = pairs.iter().all(|(v, phi)| report.phi(*v) == Some(phi));
            bundle.pass_fail(
                "DUAL",
                ok,
                "phi(v) equals the dual face curvature at v*".into(),
            );
        }
        Err(e) => bundle.check("DUAL", CheckStatus::Inapplicable, e.to_string()),
    }
    let validation = validate_closed(t);
    bundle.pass_fail(
        "T1T2",
        validation.is_clean(),
        format!("{} violations", validation.violations.len()),
    );
}

fn curvature_section_patch(bundle: &mut ReportBundle, p: &Patch) {
    let report = CurvatureReport::compute(p);
    bundle
        .tables
        .insert("curvature".into(), curvature_csv(p, &report));
    let mut agg = aggregates_csv(&report);
    // Per-sphere curvature sums over the interior.
    let dist = p.distances();
    let mut sums: BTreeMap<u32, Rational> = BTreeMap::new();
    for (v, phi) in &report.vertex {
        *sums
            .entry(dist[*v as usize])
            .or_insert_with(|| crate::rat::int(0)) += phi.clone();
    }
    for (r, sum) in &sums {
        writeln!(agg, "sphere_sum S_{r},{},{}", sum.numer(), sum.denom()).unwrap();
    }
    bundle.tables.insert("curvature_aggregates".into(), agg);
    bundle.check(
        "GB",
        CheckStatus::Inapplicable,
        "Gauss-Bonnet sums concern closed tessellations".into(),
    );
    bounds_checks(bundle, p, &report);
    let validation = validate_patch(p);
    bundle.pass_fail(
        "T1T2",
        validation.is_clean(),
        format!(
            "{} violations among complete faces",
            validation.violations.len()
        ),
    );
    if let Ok(est) = curvature::curvature_at_infinity_estimate(p) {
        let monotone = est.u.windows(2).all(|w| w[1] <= w[0]);
        let mut csv = String::from("r,u_numerator,u_denominator\n");
        for (r, u) in est.u.iter().enumerate() {
            writeln!(csv, "{r},{},{}", u.numer(), u.denom()).unwrap();
        }
        bundle.tables.insert("curvature_infinity".into(), csv);
        bundle.pass_fail(
            "PHI-INF",
            monotone,
            format!(
                "u_r nonincreasing over {} radii; K = {}",
                est.u.len(),
                display(&est.k)
            ),
        );
    }
}

fn profile_csv(prof: &geometry::MetricProfile) -> String {
    let mut csv = String::from("r,sphere,ball,volume\n");
    for r in 0..prof.sphere_sizes.len() {
        let vol = prof.volumes[r]
            .map(|v| v.to_string())
            .unwrap_or_else(|| "-".into());
        writeln!(
            csv,
            "{r},{},{},{vol}",
            prof.sphere_sizes[r], prof.ball_sizes[r]
        )
        .unwrap();
    }
    csv
}

fn geometry_section_closed(bundle: &mut ReportBundle, t: &ClosedTessellation) {
    let prof = geometry::bfs_profile(t.rotation(), 0, |_| true);
    bundle.tables.insert("profile".into(), profile_csv(&prof));
    // Volume identity on seeded random subsets.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(bundle.header.seed);
    use rand::Rng as _;
    let n = t.vertex_count();
    let mut ok = true;
    for _ in 0..100 {
        let size = rng.gen_range(1..=n);
        let mut picked = std::collections::BTreeSet::new();
        while picked.len() < size {
            picked.insert(rng.gen_range(0..n) as u32);
        }
        let w: Vec<u32> = picked.into_iter().collect();
        let (b, vol, e) = geometry::boundary_and_volume_known(t.rotation(), &w);
        ok &= vol == 2 * e + b;
    }
    bundle.pass_fail("VOLID", ok, "vol = 2E + boundary on 100 random sets".into());
    bundle.check(
        "CUTLOC",
        CheckStatus::Inapplicable,
        "cut locus concerns patches of infinite tessellations".into(),
    );
}

fn geometry_section_patch(bundle: &mut ReportBundle, p: &Patch, seed: u64) {
    let prof = geometry::patch_profile(p, p.center());
    bundle.tables.insert("profile".into(), profile_csv(&prof));

    // Volume identity on seeded random sets.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut ok = true;
    let mut tried = 0;
    for _ in 0..100 {
        let w = geometry::random_known_set(p, &mut rng, 40);
        if w.is_empty() {
            continue;
        }
        tried += 1;
        if let Ok((b, vol, e)) = geometry::boundary_and_volume(p, &w) {
            ok &= vol == 2 * e + b;
        }
    }
    bundle.pass_fail(
        "VOLID",
        ok,
        format!("vol = 2E + boundary on {tried} random sets"),
    );

    // Cut locus: forced empty under nonpositive corner curvature.
    let report = CurvatureReport::compute(p);
    let corners_nonpositive =
        !report.corner.is_empty() && report.corner.iter().all(|(_, x)| !x.is_positive());
    let cl = geometry::cut_locus(p, p.center());
    if corners_nonpositive {
        bundle.pass_fail(
            "CUTLOC",
            cl.locus.is_empty(),
            format!(
                "corner curvature <= 0: decidable cut locus has {} vertices",
                cl.locus.len()
            ),
        );
    } else {
        bundle.check(
            "CUTLOC",
            CheckStatus::Inapplicable,
            format!(
                "positive corners present; decidable cut locus has {} vertices: {:?}",
                cl.locus.len(),
                cl.locus.iter().take(8).collect::<Vec<_>>()
            ),
        );
    }

    match geometry::iso_ball_sweep(p) {
        Ok(sweep) => {
            let mut csv = String::from("label,boundary,volume,edges,ratio,admissible\n");
            for e in &sweep.entries {
                writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    e.label,
                    e.boundary,
                    e.volume,
                    e.edges,
                    display(&e.ratio),
                    e.admissible
                )
                .unwrap();
            }
            bundle.tables.insert("iso_sweep".into(), csv);
            let min = sweep.min_ratio.clone();
            if let Some((pp, qq)) = spectral::detect_regular(p) {
                match geometry::iso_regular_exact(pp, qq) {
                    Ok(alpha) => {
                        let a = alpha.to_f64();
                        let ok = min.as_ref().is_none_or(|m| to_f64(m) >= a - 1e-12);
                        bundle.pass_fail(
                            "ISO-EXACT",
                            ok,
                            format!(
                                "alpha({pp},{qq}) = {alpha} = {a:.6}; sampled ratios stay above"
                            ),
                        );
                        if let Ok(bd) = geometry::beta_delta_regular(pp, qq) {
                            bundle.pass_fail(
                                "BETA-DELTA",
                                bd.residual.abs() < 1e-12,
                                format!("beta + delta* - 1 = {:e}", bd.residual),
                            );
                        }
                        if let Some(k) = geometry::uniform_negative_bound(p) {
                            let kk = curvature::curvature_at_infinity_estimate(p)
                                .map(|e| e.k)
                                .unwrap_or(k);
                            match geometry::iso_lower_bound(Some(pp), Some(qq), &kk) {
                                Ok((c, bound)) => bundle.pass_fail(
                                    "ISO-LOWER",
                                    to_f64(&bound) <= a + 1e-12,
                                    format!(
                                        "2 C K = 2 * {} * {} = {} <= alpha",
                                        display(&c),
                                        display(&kk),
                                        display(&bound)
                                    ),
                                ),
                                Err(e) => bundle.check(
                                    "ISO-LOWER",
                                    CheckStatus::Inapplicable,
                                    e.to_string(),
                                ),
                            }
                        } else {
                            bundle.check(
                                "ISO-LOWER",
                                CheckStatus::Inapplicable,
                                "curvature is not strictly negative".into(),
                            );
                        }
                    }
                    Err(e) => bundle.check("ISO-EXACT", CheckStatus::Inapplicable, e.to_string()),
                }
            } else {
                bundle.check(
                    "ISO-EXACT",
                    CheckStatus::Inapplicable,
                    "patch is not (p,q)-regular".into(),
                );
            }
        }
        Err(e) => bundle.check("ISO-SWEEP", CheckStatus::Inapplicable, e.to_string()),
    }

    match geometry::alpha_infinity_sweep(p) {
        Ok(sweep) => {
            let mut csv =
                String::from("inner_radius,best_ratio_numerator,best_ratio_denominator\n");
            for (r, ratio) in &sweep {
                writeln!(csv, "{r},{},{}", ratio.numer(), ratio.denom()).unwrap();
            }
            bundle.tables.insert("alpha_infinity".into(), csv);
            let nondecreasing = sweep.windows(2).all(|w| w[1].1 >= w[0].1);
            bundle.check(
                "ALPHA-INF",
                CheckStatus::Pass,
                format!(
                    "annulus minima over {} inner radii{}",
                    sweep.len(),
                    if nondecreasing { ", nondecreasing" } else { "" }
                ),
            );
        }
        Err(e) => bundle.check("ALPHA-INF", CheckStatus::Inapplicable, e.to_string()),
    }

    // Derksen residuals on seeded random simply connected sets.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let mut produced = 0;
    let mut derksen_ok = true;
    for _ in 0..50 {
        if let Some(w) = geometry::random_simply_connected_set(p, &mut rng, 12, 40) {
            produced += 1;
            match geometry::derksen_check(p, &w) {
                Ok(res) => derksen_ok &= res == crate::rat::int(0),
                Err(_) => {}
            }
        }
    }
    if produced > 0 {
        bundle.pass_fail(
            "DERKSEN",
            derksen_ok,
            format!("residual 0 on {produced} random sets"),
        );
    } else {
        bundle.check(
            "DERKSEN",
            CheckStatus::Inapplicable,
            "interior too small for samples".into(),
        );
    }
}

fn growth_section(bundle: &mut ReportBundle, p: &Patch) {
    match growth::recursion_predict(p) {
        Ok(g) => {
            let mut csv =
                String::from("r,measured,predicted,phi_bar_numerator,phi_bar_denominator\n");
            for row in &g.rows {
                writeln!(
                    csv,
                    "{},{},{},{},{}",
                    row.r,
                    row.measured,
                    row.predicted,
                    row.phi_bar.numer(),
                    row.phi_bar.denom()
                )
                .unwrap();
            }
            bundle.tables.insert("recursion".into(), csv);
            bundle.pass_fail(
                "RECUR",
                g.all_match,
                format!(
                    "{} radii predicted exactly (N = {})",
                    g.rows.len(),
                    g.spec.n
                ),
            );
        }
        Err(e) => bundle.check("RECUR", CheckStatus::Inapplicable, e.to_string()),
    }

    if let Some((pp, qq)) = spectral::detect_regular(p) {
        match (growth::salem_polynomial(pp, qq), growth::salem_root(pp, qq)) {
            (Ok(coeffs), Ok(root)) => {
                let rec = growth::is_reciprocal(&coeffs);
                bundle.pass_fail(
                    "SALEM",
                    rec,
                    format!(
                        "g_({pp},{qq}) = {coeffs:?}; x = {:.12} in [{:.12}, {:.12}]{}",
                        root.value,
                        root.bracket.0,
                        root.bracket.1,
                        if root.degenerate_flat {
                            " (flat, degenerate)"
                        } else {
                            ""
                        }
                    ),
                );
                if let Ok(rate) = growth::growth_rate(p) {
                    let logx = root.value.ln();
                    let gap = (rate.last_sphere_rate - logx).abs();
                    let mut csv = String::from("r,sphere_rate,ball_rate,volume_rate\n");
                    for (r, rs, rb, rv) in &rate.rows {
                        let rv = rv.map(|v| format!("{v}")).unwrap_or_else(|| "-".into());
                        writeln!(csv, "{r},{rs},{rb},{rv}").unwrap();
                    }
                    bundle.tables.insert("rates".into(), csv);
                    bundle.check(
                        "RATE",
                        CheckStatus::Pass,
                        format!(
                            "(1/R) log #S_R = {:.6}, log x = {:.6}, |gap| = {:.6}",
                            rate.last_sphere_rate, logx, gap
                        ),
                    );
                }
            }
            (Err(e), _) | (_, Err(e)) => {
                bundle.check("SALEM", CheckStatus::Inapplicable, e.to_string())
            }
        }
    } else {
        bundle.check(
            "SALEM",
            CheckStatus::Inapplicable,
            "patch is not (p,q)-regular".into(),
        );
    }

    match growth::ball_bounds_check(p) {
        Ok(b) => {
            bundle.pass_fail(
                "GROWTH-BOUNDS",
                b.lower_ok && b.tree_ok,
                format!(
                    "lower base {:?}, tree bound ok = {}, quadratic fit {:?}",
                    b.lower_base, b.tree_ok, b.quadratic_fit
                ),
            );
        }
        Err(e) => bundle.check("GROWTH-BOUNDS", CheckStatus::Inapplicable, e.to_string()),
    }
}

fn spectrum_csv(s: &spectral::Spectrum) -> String {
    let mut csv = String::from("index,eigenvalue,residual\n");
    for (i, (l, r)) in s.eigenvalues.iter().zip(&s.residuals).enumerate() {
        writeln!(csv, "{i},{l},{r}").unwrap();
    }
    csv
}

fn spectrum_section_closed(bundle: &mut ReportBundle, t: &ClosedTessellation) {
    let l = spectral::LaplacianOperator::from_closed(t);
    match spectral::sym_eigs_dense(&l) {
        Ok(s) => {
            bundle.tables.insert("spectrum".into(), spectrum_csv(&s));
            let ok = s.eigenvalues[0].abs() < 1e-8
                && s.eigenvalues
                    .iter()
                    .all(|&x| x > -1e-10 && x <= 2.0 * l.max_degree as f64 + 1e-9);
            bundle.pass_fail(
                "SPECTRUM-RANGE",
                ok,
                format!(
                    "lambda_0 = {:.2e}, range [0, 2 max degree]",
                    s.eigenvalues[0]
                ),
            );
        }
        Err(e) => bundle.check("SPECTRUM-RANGE", CheckStatus::Inapplicable, e.to_string()),
    }
}

fn spectrum_section_patch(bundle: &mut ReportBundle, p: &Patch, seed: u64) {
    match spectral::lambda0_bounds_report(p, 6) {
        Ok(rep) => {
            let mut csv = String::from("r,lambda0\n");
            for (r, l) in &rep.lambda0_by_radius {
                writeln!(csv, "{r},{l}").unwrap();
            }
            bundle.tables.insert("lambda0".into(), csv);
            bundle.pass_fail(
                "FUJIWARA-LOWER",
                rep.lower_bounds_ok && rep.monotone_nonincreasing,
                format!(
                    "lambda0(B_r) monotone, above iso bound {:?} and curvature bounds {:?}/{:?}; essential upper {:?}",
                    rep.lower_iso, rep.lower_curvature, rep.lower_2mk2, rep.upper_essential
                ),
            );
        }
        Err(e) => bundle.check("FUJIWARA-LOWER", CheckStatus::Inapplicable, e.to_string()),
    }

    // Full spectrum of the largest dense-able Dirichlet ball, for the
    // record, plus the radial mass profile of its ground state.
    {
        let dist = p.distances();
        let rmax = p.full_rotation_radius().min(6);
        let mut best: Option<Vec<u32>> = None;
        for r in 1..=rmax {
            let region: Vec<u32> = (0..p.vertex_count() as u32)
                .filter(|&v| dist[v as usize] <= r)
                .collect();
            if region.len() <= spectral::DENSE_LIMIT {
                best = Some(region);
            }
        }
        if let Some(region) = best {
            if let Ok(l) = spectral::LaplacianOperator::from_patch(p, &region) {
                if let Ok(s) = spectral::sym_eigs_dense(&l) {
                    bundle.tables.insert("spectrum".into(), spectrum_csv(&s));
                    let ground = &s.eigenvectors.as_ref().unwrap()[0];
                    if let Ok(prof) = spectral::decay_profile(p, &l.region, ground) {
                        let mut csv = String::from("r,mass\n");
                        for (r, a) in &prof.mass {
                            writeln!(csv, "{r},{a}").unwrap();
                        }
                        bundle.tables.insert("decay".into(), csv);
                        let est = curvature::curvature_at_infinity_estimate(p).ok();
                        let decreasing = est
                            .map(|e| e.u.len() >= 3 && e.u.windows(2).all(|w| w[1] < w[0]))
                            .unwrap_or(false);
                        if decreasing {
                            bundle.pass_fail(
                                "DECAY",
                                prof.decays_past_peak,
                                format!(
                                    "ground-state mass peaks at r={}, nonincreasing after",
                                    prof.peak
                                ),
                            );
                        } else {
                            bundle.check(
                                "DECAY",
                                CheckStatus::Inapplicable,
                                format!(
                                    "no decay claim without uniformly decreasing curvature; peak at r={}",
                                    prof.peak
                                ),
                            );
                        }
                    }
                }
            }
        }
    }

    match spectral::eigen_degree_pairing(p, 10, seed) {
        Ok(rep) => {
            let mut csv = String::from("rank,eigenvalue,degree,ratio,normalized_gap,residual\n");
            let mut ok = true;
            for row in &rep.rows {
                ok &= (row.ratio - 1.0).abs() <= 3.0 / (row.degree as f64).sqrt();
                writeln!(
                    csv,
                    "{},{},{},{},{},{}",
                    row.rank,
                    row.eigenvalue,
                    row.degree,
                    row.ratio,
                    row.normalized_gap,
                    row.residual
                )
                .unwrap();
            }
            bundle.tables.insert("pairing".into(), csv);
            bundle.pass_fail(
                "PAIRING",
                ok,
                "top pairs within |lambda/d - 1| <= 3/sqrt(d)".into(),
            );
        }
        Err(e) => bundle.check("PAIRING", CheckStatus::Inapplicable, e.to_string()),
    }

    // Compact eigenfunctions and polar ranks, on small patches only.
    if p.vertex_count() > 20_000 {
        bundle.check(
            "COMPACT-EF",
            CheckStatus::Inapplicable,
            "patch too large for the support sweep".into(),
        );
        return;
    }
    let limit = p.radius().min(3);
    let supports = spectral::enumerate_supports(p, limit);
    if supports.is_empty() {
        bundle.check(
            "COMPACT-EF",
            CheckStatus::Inapplicable,
            "no admissible supports".into(),
        );
        return;
    }
    match spectral::compact_eigenfunction_search(p, &supports) {
        Ok(certs) => {
            let report = CurvatureReport::compute(p);
            let corners_nonpositive =
                !report.corner.is_empty() && report.corner.iter().all(|(_, x)| !x.is_positive());
            for c in &certs {
                bundle.certificates.push(CertificateJson {
                    support: c.support.clone(),
                    eigenvalue: display(&c.eigenvalue),
                    vector: c.vector.iter().map(|x| x.to_string()).collect(),
                });
            }
            if corners_nonpositive {
                bundle.pass_fail(
                    "COMPACT-EF",
                    certs.is_empty(),
                    format!(
                        "corner curvature <= 0 forbids compact support; search found {}",
                        certs.len()
                    ),
                );
            } else {
                bundle.check(
                    "COMPACT-EF",
                    CheckStatus::Pass,
                    format!(
                        "{} exact certificates over {} supports",
                        certs.len(),
                        supports.len()
                    ),
                );
            }

            let rmax = p.full_rotation_radius().min(limit);
            if rmax >= 1 {
                match spectral::polar_ranks(p, p.center(), rmax) {
                    Ok(polar) => {
                        let mut csv = String::from("r,sphere,next_sphere,rank,injective\n");
                        for row in &polar.rows {
                            writeln!(
                                csv,
                                "{},{},{},{},{}",
                                row.r, row.sphere, row.next_sphere, row.rank, row.injective
                            )
                            .unwrap();
                        }
                        bundle.tables.insert("polar_ranks".into(), csv);
                        // Certificates within B_r force a rank deficiency at
                        // some r' <= r.
                        let dist = p.distances();
                        let mut consistent = polar.reassembly_ok;
                        for c in &certs {
                            let r = c.support.iter().map(|&v| dist[v as usize]).max().unwrap();
                            if r <= rmax {
                                consistent &=
                                    polar.rows.iter().any(|row| row.r <= r && !row.injective);
                            }
                        }
                        bundle.pass_fail(
                            "POLAR-RANK",
                            consistent,
                            "rank deficiencies agree with compact-support certificates".into(),
                        );
                    }
                    Err(e) => bundle.check("POLAR-RANK", CheckStatus::Inapplicable, e.to_string()),
                }
            }
        }
        Err(e) => bundle.check("COMPACT-EF", CheckStatus::Inapplicable, e.to_string()),
    }
}

/// Serializes the bundle deterministically.
pub fn to_json(bundle: &ReportBundle) -> String {
    serde_json::to_string_pretty(bundle).expect("report serialization cannot fail")
}

/// Writes `report.json` plus one CSV per table into `dir`, atomically.
pub fn write_bundle(bundle: &ReportBundle, dir: &std::path::Path, format: &str) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let write_atomic = |name: &str, data: &str| -> Result<()> {
        let tmp = dir.join(format!(".{name}.tmp"));
        std::fs::write(&tmp, data)?;
        std::fs::rename(&tmp, dir.join(name))?;
        Ok(())
    };
    if format != "csv" {
        write_atomic("report.json", &to_json(bundle))?;
    }
    if format != "json" {
        for (name, table) in &bundle.tables {
            write_atomic(&format!("{name}.csv"), table)?;
        }
    }
    Ok(())
}

/// Corpus verification: validation plus the applicable exact checks for
/// every tessellation file in a directory. Returns the per-file report
/// lines and whether everything passed.
pub fn verify_corpus(dir: &std::path::Path) -> Result<(Vec<String>, bool)> {
    let mut entries: Vec<_> = std::fs::read_dir(dir)?
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .map(|e| e.path())
        .filter(|p| p.extension().is_some_and(|x| x == "tess"))
        .collect();
    entries.sort();
    if entries.is_empty() {
        return Err(crate::TessError::Precondition(format!(
            "no .tess files under {}",
            dir.display()
        )));
    }
    let mut lines = Vec::new();
    let mut all_ok = true;
    for path in entries {
        let name = path.file_name().unwrap().to_string_lossy().to_string();
        let loaded = crate::surface::load(&path)?;
        let mut ok = true;
        let mut notes = Vec::new();
        match &loaded {
            Loaded::Closed(t) => {
                let validation = validate_closed(t);
                if !validation.is_clean() {
                    ok = false;
                    notes.push(format!("validation: {}", validation.violations[0]));
                }
                let (chi, _) = t.euler_genus();
                if gauss_bonnet(t) != crate::rat::int(chi) {
                    ok = false;
                    notes.push("gauss-bonnet mismatch".into());
                }
                let report = CurvatureReport::compute(t);
                if !curvature_bounds_check(t, &report).is_empty() {
                    ok = false;
                    notes.push("curvature bounds violated".into());
                }
            }
            Loaded::Patch(p) => {
                let validation = validate_patch(p);
                if !validation.is_clean() {
                    ok = false;
                    notes.push(format!("validation: {}", validation.violations[0]));
                }
                let report = CurvatureReport::compute(p);
                let violations = curvature_bounds_check(p, &report);
                if !violations.is_empty() {
                    ok = false;
                    notes.push("curvature bounds violated".into());
                }
            }
        }
        all_ok &= ok;
        lines.push(format!(
            "{} {} {}",
            if ok { "ok  " } else { "FAIL" },
            name,
            notes.join("; ")
        ));
    }
    Ok((lines, all_ok))
}

/// Builds the deterministic fixture corpus used by `verify` and the
/// acceptance suite.
pub fn default_corpus() -> Vec<(String, Loaded)> {
    use generate::GeneratorSpec as G;
    let specs: Vec<(&str, G)> = vec![
        (
            "tetrahedron",
            G::Platonic {
                name: generate::PlatonicSolid::Tetrahedron,
            },
        ),
        (
            "cube",
            G::Platonic {
                name: generate::PlatonicSolid::Cube,
            },
        ),
        (
            "octahedron",
            G::Platonic {
                name: generate::PlatonicSolid::Octahedron,
            },
        ),
        (
            "dodecahedron",
            G::Platonic {
                name: generate::PlatonicSolid::Dodecahedron,
            },
        ),
        (
            "icosahedron",
            G::Platonic {
                name: generate::PlatonicSolid::Icosahedron,
            },
        ),
        ("prism7", G::Prism { p: 7 }),
        ("antiprism5", G::Antiprism { p: 5 }),
        (
            "torus4x4",
            G::Torus {
                kind: generate::LatticeKind::Square,
                m: 4,
                n: 4,
            },
        ),
        (
            "torus_tri4x4",
            G::Torus {
                kind: generate::LatticeKind::Triangular,
                m: 4,
                n: 4,
            },
        ),
        (
            "torus_hex3x3",
            G::Torus {
                kind: generate::LatticeKind::Hexagonal,
                m: 3,
                n: 3,
            },
        ),
        ("genus2", G::Genus2),
        (
            "ball_7_3_r5",
            G::Hyperbolic {
                p: 7,
                q: 3,
                radius: 5,
            },
        ),
        (
            "ball_4_5_r4",
            G::Hyperbolic {
                p: 4,
                q: 5,
                radius: 4,
            },
        ),
        (
            "ball_3_7_r4",
            G::Hyperbolic {
                p: 3,
                q: 7,
                radius: 4,
            },
        ),
        (
            "flat_square_r5",
            G::Flat {
                kind: generate::LatticeKind::Square,
                radius: 5,
            },
        ),
        (
            "flat_hex_r5",
            G::Flat {
                kind: generate::LatticeKind::Hexagonal,
                radius: 5,
            },
        ),
        (
            "kagome6_r4",
            G::Kagome {
                polygon: 6,
                radius: 4,
            },
        ),
        (
            "kagome8_r5",
            G::Kagome {
                polygon: 8,
                radius: 5,
            },
        ),
        (
            "schedule_6p2r_r4",
            G::Schedule {
                base: 6,
                slope: 2,
                radius: 4,
            },
        ),
        ("cairo", G::Cairo),
        ("penrose", G::Penrose),
        (
            "wheel_3_7_43",
            G::Platonic {
                name: generate::PlatonicSolid::Tetrahedron,
            },
        ),
    ];
    let mut out = Vec::new();
    for (name, spec) in specs {
        if name == "wheel_3_7_43" {
            let p = generate::corner_fixture(&[3, 7, 43]).expect("fixture");
            out.push((name.to_string(), Loaded::Patch(p)));
            continue;
        }
        out.push((name.to_string(), spec.build().expect("corpus generator")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_on_cube_passes_and_is_deterministic() {
        let t = generate::platonic(generate::PlatonicSolid::Cube).unwrap();
        let loaded = Loaded::Closed(t);
        let raw = crate::surface::save_to_string(&loaded).into_bytes();
        let a = run_report("cube", &raw, &loaded, Sections::all(), 7, 1e-8);
        let b = run_report("cube", &raw, &loaded, Sections::all(), 7, 1e-8);
        assert!(!a.failed(), "{:?}", a.checks);
        assert_eq!(to_json(&a), to_json(&b));
        assert!(a
            .checks
            .iter()
            .any(|c| c.tag == "GB" && c.status == CheckStatus::Pass));
    }

    #[test]
    fn report_on_hyperbolic_ball() {
        let p = generate::hyperbolic_ball(4, 5, 5).unwrap();
        let loaded = Loaded::Patch(p);
        let raw = crate::surface::save_to_string(&loaded).into_bytes();
        let bundle = run_report("ball", &raw, &loaded, Sections::all(), 7, 1e-8);
        assert!(!bundle.failed(), "{:#?}", bundle.checks);
        for tag in ["RECUR", "SALEM", "ISO-EXACT", "CUTLOC", "FUJIWARA-LOWER"] {
            assert!(
                bundle
                    .checks
                    .iter()
                    .any(|c| c.tag == tag && c.status == CheckStatus::Pass),
                "{tag} missing or failed: {:?}",
                bundle.checks
            );
        }
        // Pairing is gated by uniformly decreasing curvature.
        assert!(bundle
            .checks
            .iter()
            .any(|c| c.tag == "PAIRING" && c.status == CheckStatus::Inapplicable));
    }

    #[test]
    fn report_on_kagome_emits_certificates() {
        let p = generate::kagome_family_ball(6, 4).unwrap();
        let loaded = Loaded::Patch(p);
        let raw = crate::surface::save_to_string(&loaded).into_bytes();
        let bundle = run_report("kagome", &raw, &loaded, Sections::all(), 7, 1e-8);
        assert!(!bundle.failed(), "{:#?}", bundle.checks);
        assert!(bundle
            .certificates
            .iter()
            .any(|c| c.support.len() == 6 && c.eigenvalue == "6"));
        assert!(bundle
            .checks
            .iter()
            .any(|c| c.tag == "POLAR-RANK" && c.status == CheckStatus::Pass));
    }

    #[test]
    fn corpus_builds_and_verifies() {
        let dir = tempfile::tempdir().unwrap();
        for (name, loaded) in default_corpus() {
            crate::surface::save(&loaded, &dir.path().join(format!("{name}.tess"))).unwrap();
        }
        let (lines, ok) = verify_corpus(dir.path()).unwrap();
        assert!(ok, "{lines:?}");
        assert!(lines.len() >= 20);
    }
}
