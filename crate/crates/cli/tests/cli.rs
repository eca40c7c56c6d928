use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn gendo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gendo")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let out = gendo(&a);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    gendo(args).status.code().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn nakayama_455_report() {
    let r = json(&["nakayama", "4,5,5", "--cyclic"]);
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["domdim"]["finite"], 2);
    assert_eq!(r["gordim_right"]["finite"], 2);
    assert_eq!(r["fdomdim"]["value"], 4);
    let table = &r["nakayama"]["domdim_table"];
    assert_eq!(table[0][0], "4");
    assert_eq!(table[1][0], "2");
    assert_eq!(table[0][1], "2");
    assert_eq!(r["nakayama"]["resolution_quiver"]["successor"], serde_json::json!([1, 0, 1]));
}

#[test]
fn nakayama_56_has_infinite_gorenstein_dimension() {
    let r = json(&["nakayama", "5,6"]);
    assert!(r["gordim_right"]["infinite"].is_object());
    assert_eq!(r["nearly_gorenstein"], true);
}

#[test]
fn linear_a2_has_projective_gp() {
    let r = json(&["nakayama", "2,1", "--linear"]);
    let gp: Vec<&str> = r["gp"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let proj: Vec<&str> = r["modules"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|m| m["projective"] == true)
        .map(|m| m["name"].as_str().unwrap())
        .collect();
    assert_eq!(gp, proj);
}

#[test]
fn endo_fixtures() {
    let r = json(&["endo", "--fixture", "sym-777-gendo"]);
    assert_eq!(r["domdim"]["finite"], 3);
    assert!(r["gordim_right"]["infinite"].is_object());
    let r = json(&["endo", "--fixture", "penny-farthing-gendo"]);
    assert_eq!(r["domdim"]["finite"], 3);
    assert_eq!(r["gordim_left"]["finite"], 3);
    assert_eq!(r["gordim_right"]["finite"], 3);
    assert_eq!(r["fdomdim"]["value"], 4);
}

#[test]
fn endo_from_summands_matches_fixture() {
    let fx = json(&["endo", "--fixture", "sym-777-gendo"]);
    let built = json(&["endo", "--nakayama", "7,7,7", "--summand", "J0^2"]);
    for key in ["domdim", "codomdim", "dim", "gendo_symmetric"] {
        assert_eq!(fx[key], built[key], "{key}");
    }
}

#[test]
fn module_examples() {
    let r = json(&["module", "--nakayama", "4,5,5", "[0,3]"]);
    assert_eq!(r["module"]["domdim"]["finite"], 4);
    let r = json(&["module", "--fixture", "penny-farthing-gendo", "Hom(W,e2J2)"]);
    assert_eq!(r["module"]["domdim"]["finite"], 4);
    let r = json(&["module", "--nakayama", "4,5,5", "[1,5]"]);
    assert!(r["module"]["domdim"]["infinite"].is_object());
    assert!(r["module"]["gp"]["yes"].is_object());
    assert!(r["module"]["gi"]["yes"].is_object());
}

#[test]
fn module_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("m.json");
    let first = json(&["module", "--fixture", "penny-farthing-gendo", "Hom(W,e2J2)", "--emit-module", path(&file)]);
    let spec = format!("@{}", path(&file));
    let second = json(&["module", &spec]);
    assert_eq!(first, second);
}

#[test]
fn algebra_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let r0 = json(&["endo", "--fixture", "penny-farthing-gendo", "--emit-algebra", path(&a)]);
    assert!(std::fs::read_to_string(&a).unwrap().trim_start().starts_with("{\n  \"schema_version\": 1,"));
    let r1 = json(&["suite", "--algebra", path(&a), "--emit-algebra", path(&b)]);
    let r2 = json(&["suite", "--algebra", path(&b)]);
    assert_eq!(r1, r2);
    assert_eq!(std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    let m = json(&["module", "--algebra", path(&a), "P0"]);
    let f = json(&["module", "--fixture", "penny-farthing-gendo", "P0"]);
    assert_eq!(m["module"], f["module"]);
    assert_eq!(r0["domdim"], json(&["module", "--algebra", path(&a), "P0"])["module"]["domdim"]);
}

#[test]
fn csv_outputs_lead_with_schema_version() {
    for args in [
        vec!["scan", "--n-max", "2", "--c-max", "4"],
        vec!["nakayama", "4,5,5", "--format", "csv"],
        vec!["suite", "--fixture", "a2-line", "--format", "csv"],
    ] {
        let out = gendo(&args);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        for line in text.lines().skip(1) {
            assert!(line.starts_with("1,"), "{args:?}: {line}");
        }
        assert!(text.starts_with("schema_version,"));
    }
}

#[test]
fn scan_includes_455_and_selfinjective_rows() {
    let out = gendo(&["scan", "--n-max", "3", "--c-max", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = rdr.records().map(Result::unwrap).collect();
    let row455 = rows.iter().find(|r| &r[1] == "(4,5,5)").unwrap();
    assert_eq!(&row455[5], "4");
    assert!(rows.iter().any(|r| &r[3] == "inf"));
    assert!(rows.iter().all(|r| &r[10] == "false" && &r[11] != "true" && &r[12] == "false"));
}

#[test]
fn seed_is_recorded() {
    let r = json(&["nakayama", "4,5,5", "--seed", "17"]);
    assert_eq!(r["seed"], 17);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["nakayama", "3,1"]), 1);
    assert_eq!(code(&["nakayama", "x"]), 1);
    assert_eq!(code(&["module", "--fixture", "no-such", "P0"]), 1);
    assert_eq!(code(&["scan", "--n-max", "20", "--c-max", "20"]), 1);
    assert_eq!(code(&["nakayama", "4,5,5", "--cutoff", "0"]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["suite", "--fixture", "penny-farthing-gendo"]), 0);
    assert_eq!(code(&["--help"]), 0);
}
