use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cluster-index"))
        .args(args)
        .env_remove("CLUSTER_INDEX_OUT_DIR")
        .output()
        .expect("run cluster-index")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn verify_collisions_reports_the_shift_pair() {
    let o = cli(&["verify", "--n", "2", "--d", "2", "--checks", "collisions", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema_version"], 1);
    let witnesses = v["cases"][0]["checks"][0]["witnesses"].as_array().unwrap();
    let pair = witnesses.iter().any(|w| {
        w["detail"]["a"] == serde_json::json!([1, 3, 5]) && w["detail"]["b"] == serde_json::json!([2, 4, 7])
    });
    assert!(pair);
}

#[test]
fn enumerate_csv_has_five_rows() {
    let o = cli(&["enumerate", "--n", "2", "--d", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("id,object,shift"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn tilting_table_has_fourteen_rows() {
    let o = cli(&["tilting", "--n", "3", "--d", "1", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().skip(1).count(), 14);
}

#[test]
fn anomalies_set_their_own_exit_code() {
    assert_eq!(cli(&["tilting", "--n", "2", "--d", "3"]).status.code(), Some(3));
    let o = cli(&["verify", "--n", "2", "--d", "3", "--checks", "tilting-sanity"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(json(&o)["summary"]["status"], "anomaly");
}

#[test]
fn usage_errors_exit_2() {
    let o = cli(&["verify", "--n", "4", "--d", "3", "--cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("55"));
    assert_eq!(cli(&["index", "--n", "2", "--d", "2", "--tilting", "1,3,5;2,4,6"]).status.code(), Some(2));
    assert_eq!(cli(&["enumerate", "--n", "2"]).status.code(), Some(2));
    assert_eq!(cli(&["enumerate", "--n", "2", "--d", "1", "--format", "dot"]).status.code(), Some(2));
}

#[test]
fn invalid_explicit_tilting_fails_verification_with_witness() {
    let o = cli(&["verify", "--n", "2", "--d", "2", "--tilting", "1,3,5;2,4,6", "--checks", "serre"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    let sanity = &v["cases"][0]["checks"][0];
    assert_eq!(sanity["check"], "tilting-sanity");
    assert_eq!(sanity["witnesses"][0]["detail"]["kind"], "tilting-rejected");
}

#[test]
fn index_defaults_to_vertex_one_family() {
    let explicit = cli(&["index", "--n", "2", "--d", "2", "--tilting", "1,3,5;1,3,6;1,4,6"]);
    let default = cli(&["index", "--n", "2", "--d", "2"]);
    assert_eq!(explicit.stdout, default.stdout);
    let v = json(&default);
    assert_eq!(v["verified"], true);
    assert_eq!(v["collisions"].as_array().unwrap().len(), 3);
}

#[test]
fn hom_queries() {
    let o = cli(&["hom", "--n", "2", "--d", "1", "--source", "1,3", "--target", "1,4", "--format", "csv"]);
    assert_eq!(stdout(&o), "source,target,dim\n\"1,3\",\"1,4\",1\n");
    let o = cli(&["hom", "--n", "2", "--d", "1", "--source", "2,4", "--target", "2,4", "--modulo", "2,5;3,5"]);
    assert_eq!(json(&o)["entries"][0]["dim"], 1);
    let o = cli(&["hom", "--n", "2", "--d", "1", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 26);
}

#[test]
fn export_graph_is_dot_by_default() {
    let o = cli(&["export-graph", "--n", "2", "--d", "1"]);
    let text = stdout(&o);
    assert!(text.starts_with("graph compatibility {"));
    assert_eq!(text.matches(" -- ").count(), 5);
    assert!(text.contains("\"{1,3}\""));
}

#[test]
fn replay_reproduces_report_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = cli(&["verify", "--n", "2", "--d", "2", "--checks", "collisions,disjointness", "--out", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = cli(&["replay", "--witness", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let replays = v["replays"].as_array().unwrap();
    assert!(!replays.is_empty());
    for r in replays {
        assert_eq!(r["original"], r["recomputed"]);
    }

    let single = dir.path().join("one.json");
    std::fs::write(&single, serde_json::to_string(&replays[0]["original"]).unwrap()).unwrap();
    let o = cli(&["replay", "--witness", single.to_str().unwrap(), "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn replay_rejects_garbage() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\"nope\": 1}").unwrap();
    assert_eq!(cli(&["replay", "--witness", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn config_file_and_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.toml");
    std::fs::write(
        &config,
        "cases = [{ n = 2, d = 1 }, { n = 3, d = 1 }]\ntilting = { first = 3 }\nchecks = [\"injectivity\"]\nformat = \"csv\"\n",
    )
    .unwrap();
    let o = cli(&["verify", "--config", config.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "n,d,check,status,instances,violations,witnesses\n2,1,injectivity,pass,30,0,0\n3,1,injectivity,pass,108,0,0\n");

    let o = cli(&["verify", "--config", config.to_str().unwrap(), "--n", "2", "--d", "1", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["config"]["cases"].as_array().unwrap().len(), 1);
    assert_eq!(v["config"]["tilting"]["first"], 3);
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_cluster-index"))
        .args(["enumerate", "--n", "2", "--d", "1", "--format", "csv"])
        .env("CLUSTER_INDEX_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(dir.path().join("enumerate.csv")).unwrap();
    assert_eq!(written.lines().count(), 6);
    assert!(Path::new(&dir.path().join("enumerate.csv")).exists());
}

#[test]
fn timing_is_a_separate_block() {
    let plain = json(&cli(&["verify", "--n", "2", "--d", "1", "--checks", "serre"]));
    let timed = json(&cli(&["verify", "--n", "2", "--d", "1", "--checks", "serre", "--timing"]));
    assert!(plain.get("timing").is_none());
    assert!(timed["timing"]["total_ms"].is_number());
    let mut stripped = timed.clone();
    stripped.as_object_mut().unwrap().remove("timing");
    assert_eq!(stripped, plain);
}

#[test]
fn workers_do_not_change_bytes() {
    let a = cli(&["verify", "--n", "3", "--d", "2", "--workers", "1"]);
    let b = cli(&["verify", "--n", "3", "--d", "2", "--workers", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn prime_check_agrees_on_small_cases() {
    let o = cli(&["verify", "--n", "3", "--d", "2", "--checks", "tilting-sanity", "--prime-check"]);
    assert_eq!(o.status.code(), Some(0));
}
