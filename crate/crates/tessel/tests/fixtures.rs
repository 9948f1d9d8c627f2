//! The shipped fixture files are part of the contract: these tests pin
//! their content, not just the builders that produced them.

use tessel::curvature::{vertex_curvature, CurvatureReport};
use tessel::rat::{int, rat};
use tessel::surface::{load, validate_closed, validate_patch, Loaded};

fn fixture(name: &str) -> Loaded {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    load(&path).unwrap_or_else(|e| panic!("loading {name}: {e}"))
}

#[test]
fn genus2_file_counts() {
    match fixture("genus2.tess") {
        Loaded::Closed(t) => {
            assert_eq!(t.vertex_count(), 28);
            assert_eq!(t.edge_count(), 60);
            assert_eq!(t.face_count(), 30);
            assert_eq!(t.euler_genus(), (-2, 2));
            assert_eq!(tessel::curvature::gauss_bonnet(&t), int(-2));
            assert!(validate_closed(&t).is_clean());
        }
        _ => panic!("genus2 fixture must be closed"),
    }
}

#[test]
fn cairo_file_has_both_signs() {
    match fixture("cairo.tess") {
        Loaded::Patch(p) => {
            assert!(validate_patch(&p).is_clean());
            let report = CurvatureReport::compute(&p);
            let values: Vec<_> = report.vertex.iter().map(|(_, phi)| phi.clone()).collect();
            assert!(values.contains(&rat(-1, 5)));
            assert!(values.contains(&rat(1, 10)));
        }
        _ => panic!("cairo fixture must be a patch"),
    }
}

#[test]
fn penrose_file_has_three_signs() {
    match fixture("penrose.tess") {
        Loaded::Patch(p) => {
            assert!(validate_patch(&p).is_clean());
            let report = CurvatureReport::compute(&p);
            let values: Vec<_> = report.vertex.iter().map(|(_, phi)| phi.clone()).collect();
            assert!(values.contains(&rat(-1, 4)));
            assert!(values.contains(&int(0)));
            assert!(values.contains(&rat(1, 4)));
            // Faces are all squares.
            for f in 0..p.faces().count() as u32 {
                assert_eq!(p.faces().degree(f), 4);
            }
        }
        _ => panic!("penrose fixture must be a patch"),
    }
}

#[test]
fn wheel_file_realizes_the_higuchi_bound() {
    match fixture("wheel_3_7_43.tess") {
        Loaded::Patch(p) => {
            assert!(p.is_interior(0));
            assert_eq!(vertex_curvature(&p, 0).unwrap(), rat(-1, 1806));
        }
        _ => panic!("wheel fixture must be a patch"),
    }
}

#[test]
fn shipped_files_are_canonical() {
    // save(load(file)) reproduces the committed bytes.
    for name in [
        "cairo.tess",
        "penrose.tess",
        "wheel_3_7_43.tess",
        "genus2.tess",
        "cube.tess",
        "ball_4_5_r4.tess",
        "kagome6_r4.tess",
    ] {
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
            .join("../../fixtures")
            .join(name);
        let bytes = std::fs::read_to_string(&path).unwrap();
        let reloaded = tessel::surface::load_from_str(&bytes).unwrap();
        assert_eq!(tessel::surface::save_to_string(&reloaded), bytes, "{name}");
    }
}
