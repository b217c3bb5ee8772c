use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diskgeo"))
        .args(args)
        .output()
        .unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["schema"], "diskgeo/1");
    v
}

fn golden_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

/// Compares stdout with a golden file; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}");
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &out.stdout).unwrap();
    }
    let want = std::fs::read(&path).unwrap();
    assert!(want == out.stdout, "{args:?} differs from {name}");
}

#[test]
fn sectional_rp3() {
    let v = ok_json(&["sectional", "--name", "rp3"]);
    let values: Vec<&str> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["1/5", "7/30"]);
    assert_eq!(v["euler"], 0);
    golden("sectional_rp3.json", &["sectional", "--name", "rp3"]);
}

#[test]
fn flow_path_orbit() {
    let v = ok_json(&["flow", "--name", "path3", "--start", "1,2"]);
    assert_eq!(v["period"], 6);
    golden(
        "flow_path3.json",
        &["flow", "--name", "path3", "--start", "1,2"],
    );
    golden(
        "orbit_path3.dot",
        &[
            "export", "--name", "path3", "--dot", "orbit", "--start", "1,2",
        ],
    );
}

#[test]
fn flow_partition_report() {
    let v = ok_json(&["flow", "--name", "simplex3", "--all", "--billiard-stats"]);
    assert_eq!(v["bundle_size"], 24);
    assert_eq!(v["period_histogram"]["4"], 6);
    assert_eq!(v["ergodic"], false);
}

#[test]
fn partitions_verify() {
    let v = ok_json(&["partitions", "--verify-31", "--n-max", "40"]);
    assert_eq!(v["pass"], true);
    let row33 = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["n"] == 33)
        .unwrap();
    let negs: Vec<String> = row33["negatives"]
        .as_array()
        .unwrap()
        .iter()
        .map(|n| n["value"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(negs, ["-2/945", "-1/210", "-5/756", "-1/108"]);
    golden("partitions_33.json", &["partitions", "--n", "33"]);
}

#[test]
fn partitions_csv_and_filters() {
    let out = run(&[
        "partitions",
        "--n",
        "24",
        "--min-part",
        "6",
        "--exclude-part",
        "7",
        "--csv",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "n,partition,value,decimal\n24,6 6 6 6,1/9,0.111111111111\n"
    );
}

#[test]
fn refine_writes_complex() {
    let dir = std::env::temp_dir().join(format!("diskgeo-refine-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("rp3-1.json");
    let v = ok_json(&[
        "refine",
        "--name",
        "rp3",
        "--depth",
        "1",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(v["f_vector"], serde_json::json!([182, 1142, 1920, 960]));
    let info = ok_json(&["info", "--input", file.to_str().unwrap()]);
    assert_eq!(info["f_vector"], v["f_vector"]);
    let oct = dir.join("oct-2.json");
    ok_json(&[
        "refine",
        "--name",
        "octahedron",
        "--depth",
        "2",
        "--out",
        oct.to_str().unwrap(),
    ]);
    let sp = ok_json(&["sectional", "--input", oct.to_str().unwrap()]);
    let values: Vec<&str> = sp["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["-1/9", "-1/72", "0/1", "1/72", "1/36", "1/9"]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        run(&["refine", "--name", "rp3", "--depth", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["info"]).status.code(), Some(2));
    assert_eq!(
        run(&["info", "--name", "rp3", "--input", "x.json"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["export", "--name", "rp3", "--dot", "nonsense"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn domain_errors_exit_1_with_json() {
    let out = run(&["flow", "--name", "no-such-thing"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "unknown_catalog");

    let dir = std::env::temp_dir().join(format!("diskgeo-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let book = dir.join("book.json");
    std::fs::write(&book, r#"{"facets":[[1,2,3],[1,2,4],[1,2,5]]}"#).unwrap();
    let out = run(&["flow", "--input", book.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "not_geodesic_ready");

    let bad = dir.join("bad.json");
    std::fs::write(&bad, "{\"facets\": [[1,2],\n []]}").unwrap();
    let out = run(&["info", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["error"]["kind"], "parse");
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("facets[1] is empty"));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn check_reports() {
    let v = ok_json(&["check", "--name", "octahedron"]);
    assert_eq!(v["sphere"], true);
    assert_eq!(v["boundary_walls"], 0);
    let v = ok_json(&["check", "--name", "path3", "--fast"]);
    assert_eq!(v["manifold"], false);
    assert_eq!(v["boundary_walls"], 2);
}

#[test]
fn curvature_modes() {
    let v = ok_json(&["curvature", "--name", "icosahedron"]);
    assert_eq!(v["total"], "2/1");
    let v = ok_json(&["curvature", "--name", "icosahedron", "--per-triangle"]);
    assert_eq!(v["spectrum"][0]["value"], "1/10");
    let v = ok_json(&[
        "curvature",
        "--name",
        "octahedron",
        "--first-order",
        "levitt",
    ]);
    assert_eq!(v["spectrum"][0]["value"], "1/3");
    let out = run(&["curvature", "--name", "torus13", "--csv"]);
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .starts_with("site,value,decimal\n1,0/1,0\n"));
    assert_eq!(run(&["curvature", "--name", "rp3"]).status.code(), Some(1));
}

#[test]
fn sheets_and_dot_exports() {
    let v = ok_json(&["sheets", "--name", "icosahedron", "--bone", "1", "--grow"]);
    assert_eq!(v["closed"], true);
    assert_eq!(v["facet_count"], 20);
    let v = ok_json(&["sheets", "--name", "rp3", "--bone", "1,2"]);
    assert_eq!(v["curvature"], "1/5");
    golden(
        "sheet_rp3_1-2.dot",
        &[
            "sheets", "--name", "rp3", "--bone", "1,2", "--grow", "--dot",
        ],
    );
    golden(
        "dual_octahedron.dot",
        &["export", "--name", "octahedron", "--dot", "dual"],
    );
    let dual = std::fs::read_to_string(golden_path("dual_octahedron.dot")).unwrap();
    assert_eq!(dual.matches(" -- ").count(), 12);
}

#[test]
fn ph_reports() {
    let v = ok_json(&["ph", "--name", "rp3", "--seed", "3", "--trials", "100"]);
    assert_eq!(v["conserved"], true);
    assert_eq!(v["trials"].as_array().unwrap().len(), 100);
    golden(
        "ph_octahedron_seed7.json",
        &["ph", "--name", "octahedron", "--seed", "7"],
    );
    let out = run(&["ph", "--name", "octahedron", "--seed", "7", "--emit-map"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches(" -> ").count(), 6);
}

#[test]
fn catalog_list() {
    let v = ok_json(&["catalog", "list"]);
    let names: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"rp3") && names.contains(&"tetrakis-hexahedron"));
}

#[test]
fn output_is_byte_identical_across_runs_and_threads() {
    let runs = [
        vec!["sectional", "--name", "octahedron@2", "--per-bone"],
        vec!["flow", "--name", "rp3", "--all"],
        vec![
            "ph",
            "--name",
            "icosahedron@1",
            "--seed",
            "11",
            "--trials",
            "5",
        ],
        vec!["curvature", "--name", "disdyakis-triacontahedron"],
    ];
    for args in runs {
        let a = run(&args).stdout;
        let mut threaded = args.clone();
        threaded.extend(["--threads", "1"]);
        let b = run(&threaded).stdout;
        let last = threaded.len() - 1;
        threaded[last] = "4";
        let c = run(&threaded).stdout;
        assert!(a == b && b == c, "{args:?}");
    }
}
