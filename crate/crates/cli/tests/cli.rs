// SPDX-License-Identifier: Apache-2.0

//! End-to-end runs of the `coarse` binary.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn coarse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coarse")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_str(&stdout(out)).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn delta_on_tree() {
    let v = json(&coarse(&["analyze", "delta", "--family", "tree:3,5"]));
    assert_eq!(v["delta"], "0/2");
    assert_eq!(v["exact"], true);
    assert_eq!(v["witness"].as_array().unwrap().len(), 4);
}

#[test]
fn cheeger_csv_on_path() {
    let text = stdout(&coarse(&["analyze", "cheeger", "--family", "path:60", "--vertex", "30", "--radii", "5..25", "--format", "csv"]));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("r,ratio_num,ratio_den,exact_flag,witness_size"));
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 21);
    for row in rows {
        let r: u64 = row[0].parse().unwrap();
        assert_eq!((row[1], row[2].parse::<u64>().unwrap()), ("2", 2 * r + 1));
    }
}

#[test]
fn pole_and_boundary_reports() {
    let v = json(&coarse(&["analyze", "pole", "--family", "comb:40,0.5", "--vertex", "0", "--radii", "12,16,20,24"]));
    assert_eq!(v["margins"], serde_json::json!([3, 4, 5, 6]));
    assert_eq!(v["verdict"], "no-pole-like");
    assert!(v["M_estimate"].is_null());

    let v = json(&coarse(&["analyze", "pole", "--family", "tree:3,6", "--radii", "3..6"]));
    assert_eq!(v["M_estimate"], 0);
    assert_eq!(v["M_bound"], "1/1");

    let v = json(&coarse(&["analyze", "boundary", "--family", "path:20", "--radius", "6"]));
    assert_eq!(v["S_star"], "inf");
    assert_eq!(v["n_points"], 2);
    let v = json(&coarse(&["analyze", "boundary", "--family", "tree:3,6", "--radii", "4..6"]));
    for row in v.as_array().unwrap() {
        assert_eq!(row["S_star"], 2.0);
    }
}

#[test]
fn lambda1_thin_and_defaults() {
    let v = json(&coarse(&["analyze", "lambda1", "--family", "path:10", "--radius", "3"]));
    let l = v["points"][0]["lambda1"].as_f64().unwrap();
    assert!((l - (2.0 - 2.0 * (std::f64::consts::PI / 8.0).cos())).abs() < 1e-9);
    let v = json(&coarse(&["analyze", "thin", "--family", "cycle:6"]));
    assert_eq!((v["delta_thin"].as_u64(), v["exact"].as_bool()), (Some(1), Some(true)));
    // default base vertex is the one farthest from the frontier
    let v = json(&coarse(&["analyze", "cheeger", "--family", "grid:7,7"]));
    assert_eq!(v["v"], 24);
    assert_eq!(v["points"].as_array().unwrap().len(), 2);
}

#[test]
fn errors_name_module_and_code() {
    let cases: [(&[&str], &str); 4] = [
        (&["analyze", "delta", "--family", "torus:3"], "[graph-core:E_INVALID_FAMILY]"),
        (&["analyze", "cheeger", "--family", "path:10", "--vertex", "5", "--radius", "5"], "[cheeger:E_RADIUS_MARGIN]"),
        (&["analyze", "pole", "--family", "path:10", "--radii", "2,3"], "[pole:E_TOO_FEW_RADII]"),
        (&["analyze", "net", "--kind", "poincare", "--disk-radius", "2", "--count", "10", "--epsilon=-1"], "[cli:E_CONFIG]"),
    ];
    for (args, needle) in cases {
        let out = coarse(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
    let out = coarse(&["analyze", "delta", "--input", "/nonexistent/graph.json"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("[io:E_IO]"));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<Vec<u8>> = (0..2)
        .map(|i| {
            let out = dir.path().join(format!("qi{i}.json"));
            let args = ["analyze", "qi", "--kind", "poincare", "--disk-radius", "2.5", "--count", "1500", "--epsilon", "0.3", "--seed", "7", "--out", path_str(&out)];
            stdout(&coarse(&args));
            std::fs::read(&out).unwrap()
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    let v: Value = serde_json::from_slice(&runs[0]).unwrap();
    assert_eq!(v["holds"], true);

    let a = stdout(&coarse(&["gen", "--kind", "euclidean", "--disk-radius", "3", "--count", "50"]));
    let b = stdout(&coarse(&["gen", "--kind", "euclidean", "--disk-radius", "3", "--count", "50"]));
    assert_eq!(a, b);
    assert!(a.starts_with("# kind: euclidean\n# radius: 3\nx,y\n"));
}

#[test]
fn gen_and_reload_graph() {
    let dir = tempfile::tempdir().unwrap();
    let json_path = dir.path().join("t.json");
    let edges_path = dir.path().join("t.edges");
    stdout(&coarse(&["gen", "--family", "tree:3,4", "--out", path_str(&json_path)]));
    stdout(&coarse(&["gen", "--family", "tree:3,4", "--format", "csv", "--out", path_str(&edges_path)]));
    for p in [&json_path, &edges_path] {
        let v = json(&coarse(&["analyze", "cheeger", "--input", path_str(p), "--radii", "1..3"]));
        assert_eq!(v["points"][2]["ratio_num"], 12);
        assert_eq!(v["points"][2]["ratio_den"], 11);
    }
}

#[test]
fn net_export_writes_graph_and_mapping() {
    let dir = tempfile::tempdir().unwrap();
    let cloud = dir.path().join("cloud.csv");
    let net = dir.path().join("net.json");
    stdout(&coarse(&["gen", "--kind", "poincare", "--disk-radius", "2", "--count", "800", "--seed", "3", "--out", path_str(&cloud)]));
    stdout(&coarse(&["net", "--input", path_str(&cloud), "--epsilon", "0.3", "--out", path_str(&net)]));
    let g: Value = serde_json::from_str(&std::fs::read_to_string(&net).unwrap()).unwrap();
    let mapping = std::fs::read_to_string(dir.path().join("net.mapping.csv")).unwrap();
    let mut lines = mapping.lines();
    assert_eq!(lines.next(), Some("vertex,cloud_index,x,y"));
    assert_eq!(lines.count() as u64, g["n"].as_u64().unwrap());
    assert!(!g["frontier"].as_array().unwrap().is_empty());

    let summary = json(&coarse(&["analyze", "net", "--input", path_str(&cloud), "--epsilon", "0.3"]));
    assert_eq!(summary["vertices"], g["n"]);
    assert!(summary["covering_radius"].as_f64().unwrap() < 0.3);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    std::fs::write(&cfg, r#"{"family": "comb:40,0.5", "vertex": 0, "radii": [12, 16, 20, 24]}"#).unwrap();
    let v = json(&coarse(&["analyze", "pole", "--config", path_str(&cfg)]));
    assert_eq!(v["margins"], serde_json::json!([3, 4, 5, 6]));
    let v = json(&coarse(&["analyze", "pole", "--config", path_str(&cfg), "--radii", "12,16,20"]));
    assert_eq!(v["margins"], serde_json::json!([3, 4, 5]));

    std::fs::write(&cfg, r#"{"family": "path:4", "epsilonn": 1}"#).unwrap();
    let out = coarse(&["analyze", "delta", "--config", path_str(&cfg)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("[cli:E_CONFIG]"));
}

#[test]
fn plot_data_tables() {
    let dir = tempfile::tempdir().unwrap();
    let pole = dir.path().join("pole.json");
    let prof = dir.path().join("profile.json");
    let bnd = dir.path().join("boundary.json");
    stdout(&coarse(&["analyze", "pole", "--family", "ladder:30", "--vertex", "0", "--radii", "8..12", "--out", path_str(&pole)]));
    stdout(&coarse(&["analyze", "cheeger", "--family", "path:30", "--radii", "3,6", "--out", path_str(&prof)]));
    stdout(&coarse(&["analyze", "boundary", "--family", "tree:3,5", "--radii", "4,5", "--out", path_str(&bnd)]));
    let out_dir = dir.path().join("plots");
    stdout(&coarse(&["plot-data", "--input", path_str(&pole), "--input", path_str(&prof), "--input", path_str(&bnd), "--out", path_str(&out_dir)]));
    let read = |f: &str| std::fs::read_to_string(out_dir.join(f)).unwrap();
    let margins = read("margins.csv");
    assert!(margins.starts_with("family,v,r,margin\nladder:30,0,8,"));
    assert_eq!(margins.lines().count(), 6);
    assert_eq!(read("profiles.csv"), "family,r,ratio\npath:30,3,0.2857142857142857\npath:30,6,0.15384615384615385\n");
    assert_eq!(read("s_star.csv"), "family,depth,a,S_star\n\"tree:3,5\",4,2.0,2\n\"tree:3,5\",5,2.0,2\n");

    let out = coarse(&["plot-data", "--input", path_str(&dir.path().join("missing.json")), "--out", path_str(&out_dir)]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    let out = coarse(&["analyze", "delta", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(coarse(&["--help"]).status.success());
}
