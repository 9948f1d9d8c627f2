//! End-to-end checks of the command-line interface, including the exit-code
//! contract: 0 pass, 1 check failure, 2 usage, 3 I/O.

use std::path::Path;
use std::process::Command;

fn tessel(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_tessel"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn generate_hyperbolic_writes_the_stated_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.tess");
    let res = tessel(&[
        "generate",
        "--family",
        "hyperbolic",
        "--p",
        "7",
        "--q",
        "3",
        "--radius",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(
        text.starts_with("tess v1 patch center=0 radius=5\n"),
        "{text}"
    );
}

#[test]
fn generate_cube_has_eight_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cube.tess");
    let res = tessel(&[
        "generate",
        "--family",
        "platonic",
        "--name",
        "cube",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    match tessel::surface::load(&out).unwrap() {
        tessel::surface::Loaded::Closed(t) => assert_eq!(t.vertex_count(), 8),
        _ => panic!("expected closed"),
    }
}

#[test]
fn generate_kagome_interior_degree_four() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("k.tess");
    let res = tessel(&[
        "generate",
        "--family",
        "kagome",
        "--polygon",
        "6",
        "--radius",
        "4",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    match tessel::surface::load(&out).unwrap() {
        tessel::surface::Loaded::Patch(p) => {
            assert!(!p.interior_vertices().is_empty());
            for v in p.interior_vertices() {
                assert_eq!(p.full_degree(v), Some(4));
            }
        }
        _ => panic!("expected patch"),
    }
}

#[test]
fn usage_errors_exit_2() {
    let res = tessel(&[
        "generate",
        "--family",
        "noneuclidean",
        "--out",
        "/tmp/x.tess",
    ]);
    assert_eq!(res.status.code(), Some(2));
    let res = tessel(&["generate", "--family", "prism", "--out", "/tmp/x.tess"]);
    assert_eq!(res.status.code(), Some(2), "missing --p is a usage error");
}

#[test]
fn report_runs_and_is_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("d.tess");
    assert!(tessel(&[
        "generate",
        "--family",
        "platonic",
        "--name",
        "dodecahedron",
        "--out",
        input.to_str().unwrap(),
    ])
    .status
    .success());
    let out1 = dir.path().join("r1");
    let out2 = dir.path().join("r2");
    for out in [&out1, &out2] {
        let res = tessel(&[
            "report",
            "--input",
            input.to_str().unwrap(),
            "--out",
            out.to_str().unwrap(),
            "--seed",
            "9",
        ]);
        assert!(
            res.status.success(),
            "{}",
            String::from_utf8_lossy(&res.stderr)
        );
    }
    let j1 = std::fs::read(out1.join("report.json")).unwrap();
    let j2 = std::fs::read(out2.join("report.json")).unwrap();
    // The bundles embed input name and seed but no timestamps or paths, so
    // fixed inputs give identical bytes.
    let s1 = String::from_utf8(j1.clone()).unwrap();
    let s2 = String::from_utf8(j2).unwrap();
    let normalize = |s: &str| s.replace("r1", "rX").replace("r2", "rX");
    assert_eq!(normalize(&s1), normalize(&s2));
    assert!(out1.join("curvature.csv").exists());
    assert!(s1.contains("\"tag\": \"GB\""));
}

#[test]
fn report_section_filter() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("b.tess");
    assert!(tessel(&[
        "generate",
        "--family",
        "hyperbolic",
        "--p",
        "4",
        "--q",
        "5",
        "--radius",
        "4",
        "--out",
        input.to_str().unwrap(),
    ])
    .status
    .success());
    let out = dir.path().join("rep");
    let res = tessel(&[
        "report",
        "--input",
        input.to_str().unwrap(),
        "--sections",
        "curvature",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(res.status.success());
    assert!(out.join("report.json").exists());
    assert!(
        !out.join("curvature.csv").exists(),
        "csv suppressed by --format json"
    );
}

fn write_corpus(dir: &Path) {
    for (name, loaded) in tessel::report::default_corpus().into_iter().take(8) {
        tessel::surface::save(&loaded, &dir.join(format!("{name}.tess"))).unwrap();
    }
}

#[test]
fn verify_clean_corpus_exits_0() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path());
    let res = tessel(&["verify", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(
        res.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&res.stdout)
    );
}

#[test]
fn verify_corrupted_file_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path());
    std::fs::write(
        dir.path().join("broken.tess"),
        "tess v1 closed center=- radius=-\n0 1 2\n",
    )
    .unwrap();
    let res = tessel(&["verify", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(3));
}

#[test]
fn verify_planted_t2_violation_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    write_corpus(dir.path());
    // Two triangles glued along their whole boundary: loads fine, violates
    // the face-intersection condition.
    std::fs::write(
        dir.path().join("pillow.tess"),
        "tess v1 closed center=- radius=-\n0: 1 2\n1: 2 0\n2: 0 1\n",
    )
    .unwrap();
    let res = tessel(&["verify", "--corpus", dir.path().to_str().unwrap()]);
    assert_eq!(res.status.code(), Some(1));
    let stdout = String::from_utf8_lossy(&res.stdout);
    assert!(stdout.contains("pillow"), "{stdout}");
    assert!(stdout.contains("FAIL"), "{stdout}");
}
