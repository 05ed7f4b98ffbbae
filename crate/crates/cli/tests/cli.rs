use std::path::Path;
use std::process::Command;

use serde_json::{json, Value};
use srconf_cli::claims::{self, ClaimEnv, ClaimOutcome};
use srconf_cli::{run, ClaimCheck, Outcome, RunReport};
use srconf_core::graphs::encode_graph6;
use srconf_core::{Graph, GraphSpec};

fn srconf(args: &[&str]) -> Outcome {
    run(std::iter::once("srconf").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> RunReport {
    let out = srconf(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    let parsed: RunReport = serde_json::from_str(&out.stdout).expect("stdout is a report");
    assert_eq!(Some(&parsed), out.report.as_ref());
    parsed
}

#[test]
fn usage_errors_exit_2_and_list_verbs() {
    for args in [&["bogus"][..], &[][..]] {
        let out = srconf(args);
        assert_eq!(out.code, 2, "{args:?}");
        assert!(out.stderr.contains("valid verbs: feasible-table, construct"), "{}", out.stderr);
    }
    assert_eq!(srconf(&["classify", "--graph", "paley:13"]).code, 2);
    assert_eq!(srconf(&["--help"]).code, 0);
}

#[test]
fn missing_file_is_a_domain_error() {
    let out = srconf(&["verify", "missing-file.cfg"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("file not found: missing-file.cfg"), "{}", out.stderr);
    let out = srconf(&["verify", "plane:6"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("not a prime power"), "{}", out.stderr);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_srconf");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let o = status(&["reproduce", "paley-13"]);
    assert_eq!(o.status.code(), Some(0));
    let report: RunReport = serde_json::from_slice(&o.stdout).unwrap();
    assert!(report.claim_check.unwrap().matches);
    assert_eq!(status(&["verify", "missing-file.cfg"]).status.code(), Some(1));
    assert_eq!(status(&["no-such-verb"]).status.code(), Some(2));
}

#[test]
fn feasible_table() {
    let r = ok(&["feasible-table", "--vmax", "200"]);
    let s = &r.results["summary"];
    assert_eq!((s["feasible"].clone(), s["candidates"].clone(), s["enumerated"].clone()), (json!(41), json!(64), json!(67)));
    let rows = r.results["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 67);
    assert_eq!(rows.iter().filter(|row| row["overall"] == json!("Feasible")).count(), 41);

    let plain = ok(&["feasible-table", "--no-exclusions"]);
    assert_eq!(plain.results["summary"]["feasible"], json!(43));

    let text = srconf(&["feasible-table", "--text"]);
    assert_eq!(text.code, 0);
    assert_eq!(text.stdout.lines().count(), 68);
    assert!(text.stdout.contains("(196_13;125,120)"));
}

#[test]
fn exclusion_file_and_missing_exclusion_file() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("excl.txt");
    std::fs::write(&p, "76 30 8 14  # test\n").unwrap();
    let r = ok(&["feasible-table", "--exclusions", p.to_str().unwrap()]);
    assert_eq!(r.results["summary"]["known_nonexistent"], json!(1));
    assert_eq!(srconf(&["feasible-table", "--exclusions", "/nonexistent/x"]).code, 1);
}

#[test]
fn construct_write_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["text", "json"] {
        let path = dir.path().join(format!("lp4.{format}"));
        let r = ok(&["construct", "lp4:2:hyperplane", "--write", path.to_str().unwrap(), "--format", format]);
        assert_eq!(r.results["params"], json!("(155_7;17,9)"));
        assert_eq!(r.inputs["spec"], json!("lp4:2:hyperplane"));
        let v = ok(&["verify", path.to_str().unwrap()]);
        assert_eq!(v.results["valid"], json!(true));
        assert_eq!(v.results["params"], json!("(155_7;17,9)"));
        assert_eq!(v.results["point_graph"], v.results["line_graph"]);
        assert_eq!(v.results["primitive"], json!(true));
        assert_eq!(v.results["geometry"]["kind"], json!("General"));
    }
}

#[test]
fn verify_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cfg");
    std::fs::write(&path, "4 2\n0 1\n0 1\n2 3\n2 3\n").unwrap();
    let v = ok(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.results["valid"], json!(false));
    assert!(!v.results["violations"].as_array().unwrap().is_empty());
    assert!(v.results.get("params").is_none());
}

#[test]
fn iso_aut_selfdual_dual_spectrum() {
    assert_eq!(ok(&["iso", "triangle:5", "field-pairs:5"]).results["isomorphic"], json!(true));
    assert_eq!(ok(&["iso", "triangle:9", "quaternion-pairs:1"]).results["isomorphic"], json!(false));
    assert_eq!(ok(&["aut", "moore:petersen"]).results["aut_order"], json!(120));
    assert_eq!(ok(&["selfdual", "moore:petersen"]).results["self_dual"], json!(true));
    assert_eq!(ok(&["selfdual", "lp4:2:point"]).results["self_dual"], json!(false));
    let s = ok(&["spectrum", "moore:petersen"]);
    assert_eq!(s.results["kind"], json!({ "SemipartialGeometry": { "alpha": 2, "mu": 4 } }));
    assert_eq!(s.results["values"], json!([0, 2]));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dual.cfg");
    let d = ok(&["dual", "lp4:2:hyperplane", "--write", path.to_str().unwrap()]);
    assert_eq!(d.results["params"], json!("(155_7;17,9)"));
    assert_eq!(ok(&["iso", path.to_str().unwrap(), "lp4:2:point"]).results["isomorphic"], json!(true));
}

#[test]
fn json_construction_spec() {
    let spec = r#"{"family":"triangle-removal","q":7}"#;
    let r = ok(&["verify", spec]);
    assert_eq!(r.results["params"], json!("(36_5;10,12)"));
    assert_eq!(r.results["proper"], json!(true));
}

#[test]
fn classify_specs_and_files() {
    let r = ok(&["classify", "--graph", "paley:13", "--k", "3"]);
    let g = &r.results["graphs"][0];
    assert_eq!((g["cliques"].clone(), g["edges"].clone(), g["configurations"].clone()), (json!(26), json!(286), json!(2)));
    assert_eq!(g["classes"][0]["aut_order"], json!(39));
    assert_eq!(g["classes"][0]["params"], json!("(13_3;2,3)"));
    assert!(g.get("warning").is_none());

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("two.g6");
    let graphs: Vec<Graph> = ["shrikhande", "rook:4"].iter().map(|s| s.parse::<GraphSpec>().unwrap().build().unwrap()).collect();
    let text: String = graphs.iter().map(|g| encode_graph6(g) + "\n").collect();
    std::fs::write(&path, text).unwrap();
    let r = ok(&["classify", "--graph", path.to_str().unwrap(), "--k", "3"]);
    let configs: Vec<Value> = r.results["graphs"].as_array().unwrap().iter().map(|g| g["configurations"].clone()).collect();
    assert_eq!(configs, vec![json!(2), json!(0)]);

    let limited = ok(&["classify", "--graph", "complement:petersen", "--k", "3", "--limit", "1"]);
    assert_eq!(limited.results["graphs"][0]["configurations"], json!(1));
    let warned = ok(&["classify", "--graph", "petersen", "--k", "3"]);
    assert!(warned.results["graphs"][0]["warning"].is_string());
}

#[test]
fn sdds_verbs() {
    let r = ok(&["sdds-check", "--group", "z13", "--indices", "7,8,11"]);
    assert_eq!(r.results["sdds"], json!([2, 3]));
    assert_eq!(r.results["development"]["params"], json!("(13_3;2,3)"));
    let r = ok(&["sdds-check", "--group", "s5", "--set", "id;(1,2,5,3,4);(1,3,4,2,5);(1,5,3,2,4);(1,4)(2,3,5);(1,4,5,2);(1,2,4);(1,2,5)"]);
    assert_eq!(r.results["sdds"], json!([28, 24]));
    let r = ok(&["sdds-check", "--group", "z13", "--indices", "0,1,2"]);
    assert_eq!((r.results["deficient"].clone(), r.results["sdds"].clone()), (json!(false), Value::Null));
    assert_eq!(srconf(&["sdds-check", "--group", "z13", "--indices", "0,13"]).code, 1);
    assert_eq!(srconf(&["sdds-check", "--group", "s5", "--set", "(1,2,3,4,5,6)"]).code, 1);

    let r = ok(&["sdds-search", "--group", "z13", "--k", "3", "--lambda", "2", "--mu", "3", "--develop"]);
    assert_eq!(r.results["count"], json!(4));
    assert_eq!(r.results["classes"].as_array().unwrap().len(), 1);
    let all = ok(&["sdds-search", "--group", "z13", "--k", "3", "--lambda", "2", "--mu", "3", "--normalization", "none"]);
    assert_eq!(all.results["count"], json!(52));
    assert_eq!(srconf(&["sdds-search", "--group", "z12", "--k", "3", "--lambda", "2", "--mu", "3"]).code, 1);
}

#[test]
fn cayley_file_groups() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z13.txt");
    std::fs::write(&path, srconf_core::Group::cyclic(13).to_cayley_text()).unwrap();
    let r = ok(&["sdds-check", "--group", path.to_str().unwrap(), "--indices", "7,8,11"]);
    assert_eq!(r.results["sdds"], json!([2, 3]));
}

#[test]
fn reproduce_list_and_checks() {
    let list = ok(&["reproduce", "--list"]);
    let claims = list.results["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 13);
    let criteria: Vec<u64> = claims.iter().map(|c| c["criterion"].as_u64().unwrap()).collect();
    assert_eq!(criteria, (1..=13).collect::<Vec<_>>());

    for key in ["paley-13", "4", "square-28-4"] {
        let r = ok(&["reproduce", key]);
        let check = r.claim_check.unwrap();
        assert!(check.matches && check.is_consistent(), "{key}");
    }
    assert_eq!(srconf(&["reproduce", "no-such-claim"]).code, 1);
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    for args in [
        &["classify", "--graph", "complement:petersen", "--k", "3"][..],
        &["sdds-search", "--group", "z13", "--k", "3", "--lambda", "2", "--mu", "3", "--normalization", "none"][..],
        &["feasible-table", "--vmax", "120"][..],
        &["reproduce", "lp4-2"][..],
    ] {
        let a = ok(args).without_timing();
        let b = ok(args).without_timing();
        assert_eq!(a.to_json(), b.to_json(), "{args:?}");
        let mut one = vec!["--threads", "1"];
        one.extend_from_slice(args);
        assert_eq!(ok(&one).without_timing().to_json(), a.to_json(), "{args:?}");
    }
}

#[test]
fn report_file_option() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = srconf(&["--report", path.to_str().unwrap(), "aut", "moore:petersen"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    let r: RunReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(r.command, "aut");
}

#[test]
fn claim_check_match_field() {
    let c = ClaimCheck::new(json!({ "a": 1 }), json!({ "a": 2 }));
    assert!(!c.matches && c.is_consistent());
    let text = serde_json::to_string(&c).unwrap();
    assert!(text.contains("\"match\":false"));
    let back: ClaimCheck = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
    let forged: ClaimCheck = serde_json::from_str(r#"{"expected":1,"observed":2,"match":true}"#).unwrap();
    assert!(!forged.is_consistent());
}

/// Hermitian unital points of `PG(3,4)`, adjacent when orthogonal: the
/// collinearity graph of `GQ(4,2)`, an `SRG(45,12,3,3)`.
fn hermitian_45() -> Graph {
    let mul = |a: u8, b: u8| -> u8 {
        let mut r = 0u8;
        for i in 0..2 {
            if b >> i & 1 == 1 {
                r ^= a << i;
            }
        }
        if r & 4 != 0 {
            r ^= 0b111;
        }
        r
    };
    let form = |x: &[u8; 4], y: &[u8; 4]| (0..4).fold(0, |s, i| s ^ mul(x[i], mul(y[i], y[i])));
    let mut pts = Vec::new();
    for n in 0..256u32 {
        let x = [0, 1, 2, 3].map(|i| (n >> (2 * i) & 3) as u8);
        if x.iter().find(|&&c| c != 0) == Some(&1) && form(&x, &x) == 0 {
            pts.push(x);
        }
    }
    let mut g = Graph::empty(pts.len());
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            if form(&pts[a], &pts[b]) == 0 {
                g.add_edge(a, b);
            }
        }
    }
    g
}

fn write_matrix(g: &Graph, path: &Path) {
    let mut text = String::from("Graph 1\n");
    for a in 0..g.order() {
        text.extend((0..g.order()).map(|b| if g.has_edge(a, b) { '1' } else { '0' }));
        text.push('\n');
    }
    std::fs::write(path, text).unwrap();
}

#[test]
fn external_data_claim_on_fixture_graphs() {
    let dir = tempfile::tempdir().unwrap();
    write_matrix(&"paley:25".parse::<GraphSpec>().unwrap().build().unwrap(), &dir.path().join("25.12.5.6"));
    std::fs::write(dir.path().join("45.g6"), encode_graph6(&hermitian_45()) + "\n").unwrap();
    std::fs::write(dir.path().join("notes.txt"), "not a graph list\n").unwrap();
    let env = ClaimEnv { data_dir: Some(dir.path().to_path_buf()) };
    let claim = claims::find("13").unwrap();
    let ClaimOutcome::Checked(ch) = claim.run(&env).unwrap() else { panic!("data dir was given") };
    // one graph of each family instead of the published 15 and 78
    assert!(!ch.check.matches);
    assert_eq!(ch.check.observed["srg25"], json!({ "graphs": 1, "clique_counts_in_range": true, "configurations": 0 }));
    assert_eq!(ch.check.observed["srg45"], json!({ "graphs": 1, "clique_counts_in_range": true, "configurations": 0 }));
    assert_eq!(ch.details["srg25"]["min_cliques"], json!(75));
    assert_eq!(ch.details["srg45"]["max_cliques"], json!(135));
    assert_eq!(ch.details["unreadable_files"].as_array().unwrap().len(), 1);

    let missing = ClaimEnv { data_dir: None };
    assert!(matches!(claim.run(&missing).unwrap(), ClaimOutcome::MissingData(_)));
    let nowhere = ClaimEnv { data_dir: Some(dir.path().join("absent")) };
    assert!(claim.run(&nowhere).is_err());
}
