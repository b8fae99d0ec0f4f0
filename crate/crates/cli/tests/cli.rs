use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

use mcz_core::family::{presets, InstanceBlock};
use mcz_core::scheduler::{all_to_all, ScheduleFile};
use mcz_core::gates::LogicalCircuit;
use serde_json::Value;

fn mcz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcz")).args(args).output().expect("binary runs")
}

fn tmp(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_all_to_all_ccz() -> PathBuf {
    let inst = presets::rs16_ccz();
    let circuit = LogicalCircuit { m: 3, gates: all_to_all(&inst, 3) };
    let path = tmp("all_to_all_ccz.json");
    fs::write(&path, serde_json::to_string(&circuit).unwrap()).unwrap();
    path
}

#[test]
fn check_passes_on_rs16() {
    let out = mcz(&["check", "rs16-ccz", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = json(&out);
    assert_eq!(report["passed"], true);
    assert_eq!(report["arity"], 3);
    let names: Vec<&str> = report["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for expected in ["multiplication", "standard_form", "delta_property", "block_independence", "corollary_sums", "main_theorem"] {
        assert!(names.contains(&expected), "missing {expected}");
    }
    assert!(report["checks"].as_array().unwrap().iter().all(|c| !c["claim"].as_str().unwrap().is_empty()));
}

#[test]
fn check_reports_corrupted_twist() {
    let mut block: InstanceBlock = presets::rs8_cz().to_block();
    block.u[3] = 5;
    let path = tmp("corrupt_u.json");
    fs::write(&path, serde_json::to_string(&block).unwrap()).unwrap();
    let out = mcz(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    assert_eq!(report["passed"], false);
    assert!(!report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn compile_all_to_all_ccz_gives_four_layers() {
    let circuit = write_all_to_all_ccz();
    let out = mcz(&["compile", "rs16-ccz", circuit.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let schedule: ScheduleFile = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(schedule.m, 3);
    assert_eq!(schedule.layers.len(), 4);
    let again = mcz(&["compile", "rs16-ccz", circuit.to_str().unwrap()]);
    assert_eq!(again.stdout, out.stdout);
}

#[test]
fn compile_rejects_arity_mismatch() {
    let circuit = write_all_to_all_ccz();
    let out = mcz(&["compile", "rs8-cz", circuit.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_code_file_is_an_input_error() {
    let mut block = serde_json::to_value(presets::rs8_cz().to_block()).unwrap();
    block["code"]["gens"][0].as_array_mut().unwrap().pop();
    let path = tmp("bad_rows.json");
    fs::write(&path, block.to_string()).unwrap();
    for cmd in ["check", "build", "distance"] {
        let out = mcz(&[cmd, path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{cmd}");
        assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    }
    let garbage = tmp("garbage.json");
    fs::write(&garbage, "{ not json").unwrap();
    assert_eq!(mcz(&["build", garbage.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn instance_files_round_trip() {
    let path = tmp("rs16.json");
    let out = mcz(&["instance", "rs16-ccz", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let block: InstanceBlock = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(block, presets::rs16_ccz().to_block());
    let built = mcz(&["instance", "--p", "2", "--e", "4", "--k", "4", "--subgroup", "2"]);
    let block: InstanceBlock = serde_json::from_slice(&built.stdout).unwrap();
    assert_eq!(block, presets::rs16_ccz().to_block());
    assert_eq!(mcz(&["check", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn bounds_and_hypothesis_guard() {
    let out = mcz(&["bounds", "--ell", "8", "--s", "4", "--n", "28"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!((r["K_lb_floor"].as_u64(), r["D_lb_floor"].as_u64(), r["Dperp_lb_floor"].as_u64()), (Some(5), Some(25), Some(9)));
    assert_eq!(mcz(&["bounds", "--ell", "6", "--s", "4", "--n", "28"]).status.code(), Some(2));
}

#[test]
fn distance_on_rs8() {
    let out = mcz(&["distance", "rs8-cz"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert!(r["d"].as_u64().unwrap() >= 2);
    assert_eq!(r["passed"], true);
    assert_eq!(mcz(&["distance", "rs16-ccz", "--budget", "100"]).status.code(), Some(2));
}

#[test]
fn phase_logical_and_encoded() {
    let logical = tmp("cz.json");
    fs::write(&logical, r#"{"m":2,"gates":[{"gamma":1,"targets":[0,1]}]}"#).unwrap();
    let out = mcz(&["phase", "rs8-cz", logical.to_str().unwrap(), "--values", "[[1,0],[0,1]]"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(json(&out)["phase"], 1);

    let sched = mcz(&["compile", "rs8-cz", logical.to_str().unwrap()]);
    let schedule: ScheduleFile = serde_json::from_slice(&sched.stdout).unwrap();
    let physical = tmp("cz_physical.json");
    let gates = serde_json::json!({ "m": 2, "gates": schedule.layers[0].gates });
    fs::write(&physical, gates.to_string()).unwrap();
    let out = mcz(&["phase", "rs8-cz", physical.to_str().unwrap(), "--values", "[[1,0],[0,1]]", "--encode"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    assert_eq!(r["terms"], 64);
    assert_eq!(r["uniform"], 1);

    let bad = mcz(&["phase", "rs8-cz", logical.to_str().unwrap(), "--values", "[[9,0],[0,1]]"]);
    assert_eq!(bad.status.code(), Some(2));
}
