//! Property-based invariants across randomly drawn parameters.

use num_traits::Signed;
use proptest::prelude::*;
use rand::SeedableRng;

use tessel::curvature::{vertex_curvature, CurvatureReport};
use tessel::generate;
use tessel::geometry;
use tessel::growth;
use tessel::rat::{int, rat};
use tessel::surface::{load_from_str, save_to_string, Loaded};

/// Hyperbolic or flat (p,q) with small balls.
fn pq_strategy() -> impl Strategy<Value = (u32, u32)> {
    (3u32..=8, 3u32..=8).prop_filter("nonpositive corner curvature", |(p, q)| {
        (p - 2) * (q - 2) >= 4
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    /// Saving and reloading a generated patch is the identity on bytes.
    #[test]
    fn save_load_round_trip((p, q) in pq_strategy(), r in 2u32..=4) {
        let ball = generate::hyperbolic_ball(p, q, r).unwrap();
        let s1 = save_to_string(&Loaded::Patch(ball));
        let loaded = load_from_str(&s1).unwrap();
        let s2 = save_to_string(&loaded);
        prop_assert_eq!(s1, s2);
    }

    /// Closed torus quotients survive the save/load round trip byte for
    /// byte as well.
    #[test]
    fn save_load_round_trip_closed(m in 3u32..6, n in 3u32..6) {
        for kind in [
            generate::LatticeKind::Square,
            generate::LatticeKind::Triangular,
            generate::LatticeKind::Hexagonal,
        ] {
            let t = generate::torus_quotient(kind, m, n).unwrap();
            let s1 = save_to_string(&Loaded::Closed(t));
            let s2 = save_to_string(&load_from_str(&s1).unwrap());
            prop_assert_eq!(s1, s2);
        }
    }

    /// Dart partition and handshake on generated balls: the complete faces
    /// use each allowed corner once, and degrees sum to twice the edges.
    #[test]
    fn handshake_and_corner_sum((p, q) in pq_strategy(), r in 2u32..=4) {
        let ball = generate::hyperbolic_ball(p, q, r).unwrap();
        let rs = ball.rotation();
        let degree_sum: usize = (0..rs.vertex_count() as u32).map(|v| rs.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * rs.edge_count());

        let report = CurvatureReport::compute(&ball);
        for (v, phi) in &report.vertex {
            let sum: tessel::Rational = report
                .corner
                .iter()
                .filter(|(c, _)| c.vertex == *v)
                .map(|(_, x)| x.clone())
                .sum();
            prop_assert_eq!(sum, phi.clone());
            // Regular value 1 - q/2 + q/p.
            prop_assert_eq!(
                phi.clone(),
                int(1) - rat(q as i64, 2) + rat(q as i64, p as i64)
            );
        }
    }

    /// vol(W) = 2 #E_W + #∂W for arbitrary known-degree subsets.
    #[test]
    fn volume_identity((p, q) in pq_strategy(), seed in 0u64..1000) {
        let ball = generate::hyperbolic_ball(p, q, 4).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let w = geometry::random_known_set(&ball, &mut rng, 30);
        let (b, vol, e) = geometry::boundary_and_volume(&ball, &w).unwrap();
        prop_assert_eq!(vol, 2 * e + b);
    }

    /// Growth polynomials are reciprocal and their largest root sits in
    /// (1, q-1]; strictly negative curvature gives a strict interior root.
    #[test]
    fn salem_reciprocity((p, q) in pq_strategy()) {
        let coeffs = growth::salem_polynomial(p, q).unwrap();
        prop_assert!(growth::is_reciprocal(&coeffs));
        let root = growth::salem_root(p, q).unwrap();
        if (p - 2) * (q - 2) == 4 {
            prop_assert!(root.degenerate_flat);
        } else {
            prop_assert!(root.value > 1.0 && root.value < (q - 1) as f64);
        }
    }

    /// Derksen's identity on random simply connected sets of random sizes.
    #[test]
    fn derksen_residual_vanishes(seed in 0u64..200, size in 2usize..20) {
        let ball = generate::hyperbolic_ball(4, 5, 5).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        if let Some(w) = geometry::random_simply_connected_set(&ball, &mut rng, size, 60) {
            prop_assert_eq!(geometry::derksen_check(&ball, &w).unwrap(), int(0));
        }
    }

    /// Curvature of every covered vertex respects the degree bounds.
    #[test]
    fn degree_bounds_hold((p, q) in pq_strategy(), r in 2u32..=4) {
        let ball = generate::hyperbolic_ball(p, q, r).unwrap();
        for v in ball.interior_vertices() {
            let phi = vertex_curvature(&ball, v).unwrap();
            let d = ball.rotation().degree(v) as i64;
            prop_assert!(phi >= rat(-d, 2));
            prop_assert!(phi <= int(1) - rat(d, 6));
            prop_assert!((phi <= int(0)) == (d >= 6 || (p - 2) * (q - 2) >= 4));
        }
    }

    /// Sphere monotonicity under the comparison hypothesis, on random
    /// same-p pairs.
    #[test]
    fn comparison_property(p in 4u32..=6, dq in 0u32..2) {
        let qa = match p { 4 => 4, 5 => 4, _ => 3 };
        let qb = qa + dq;
        let a = generate::hyperbolic_ball(p, qa, 5).unwrap();
        let b = generate::hyperbolic_ball(p, qb, 5).unwrap();
        let rep = growth::comparison_check(&a, &b).unwrap();
        prop_assert!(rep.monotone_ok);
        for row in &rep.rows {
            prop_assert!(row.hypothesis_ok);
            prop_assert!(!row.diff.is_negative());
        }
    }
}
