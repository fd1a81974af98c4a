use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn isospec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isospec"))
        .args(args)
        .env_remove("ISOSPEC_MAX_ENUMERATION")
        .output()
        .expect("spawn isospec")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_q9_certifies_nine_members() {
    let out = isospec(&["verify", "--q", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = json(&out);
    assert_eq!(doc["schema"], "isospec.verify/1");
    let r = &doc["result"];
    assert_eq!(r["family_size"], 9);
    assert_eq!(r["pairs"].as_array().unwrap().len(), 36);
    assert_eq!(r["class_count"], 89);
    assert_eq!(r["verdict"]["verified"], true);
    assert!(r["counterexample"].is_null());
}

#[test]
fn verify_q4_with_oracle() {
    let out = isospec(&["verify", "--q", "4", "--exhaustive-oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert_eq!(r["oracle"]["subgroups_of_order"], 87);
    assert_eq!(r["oracle"]["discrepancies"], 0);
    assert_eq!(r["verdict"]["oracle_agrees"], true);
}

#[test]
fn verify_rejects_non_prime_power() {
    let out = isospec(&["verify", "--q", "6"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn negative_control_is_a_counterexample() {
    let out = isospec(&["verify", "--q", "4", "--negative-control"]);
    assert_eq!(out.status.code(), Some(1));
    let r = &json(&out)["result"];
    assert_eq!(r["verdict"]["verified"], false);
    assert_eq!(r["counterexample"]["kind"], "not_almost_conjugate");
}

#[test]
fn verify_product() {
    let out = isospec(&["verify", "--q", "2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert_eq!(r["ambient_order"], "216");
    assert_eq!(r["family_size"], 1);
}

#[test]
fn pair_work_cap() {
    let out = isospec(&["verify", "--q", "81"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn env_cap_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_isospec"))
        .args(["verify", "--q", "9"])
        .env("ISOSPEC_MAX_ENUMERATION", "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn fields_single_candidate() {
    let out = isospec(&["fields", "--candidates", "5", "--limit", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out)["result"]["rows"].as_array().unwrap().clone();
    let ls: Vec<u64> = rows.iter().map(|r| r["l"].as_u64().unwrap()).collect();
    assert_eq!(ls, [7, 17, 23]);
    assert_eq!(rows[0]["rd_exact"], "7^2/3");
    assert_eq!(rows[0]["disc"], "49");
}

#[test]
fn fields_empty_range() {
    let out = isospec(&["fields", "--limit", "3"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(json(&out)["result"]["count"], 0);
}

#[test]
fn fields_bad_candidate() {
    assert_eq!(isospec(&["fields", "--candidates", "13"]).status.code(), Some(2));
}

#[test]
fn fields_csv() {
    let out = isospec(&["--format", "csv", "fields", "--limit", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("l,d,disc,rd_exact,witness,f,m"));
    assert_eq!(lines.next(), Some("7,3,49,7^2/3,5,3,1"));
}

#[test]
fn pipeline_default_a2() {
    let out = isospec(&["pipeline", "--type", "A2", "--pprime", "5", "--drange", "150:400"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    let a = r["growth"]["a"].as_f64().unwrap();
    assert!(a > 0.0);
    assert_eq!(r["growth"]["monotone_beyond_threshold"], true);
    let conductors = r["conductors"].as_array().unwrap();
    assert!(!conductors.is_empty());
    for c in conductors {
        assert_eq!(c["degree"].as_u64().unwrap() + 1, c["l"].as_u64().unwrap());
    }
}

#[test]
fn pipeline_excludes_a1() {
    assert_eq!(isospec(&["pipeline", "--type", "A1"]).status.code(), Some(2));
}

#[test]
fn pipeline_count_variants_differ() {
    let base = json(&isospec(&["pipeline", "--drange", "150:160"]));
    let lit = json(&isospec(&["pipeline", "--drange", "150:160", "--paper-literal-count"]));
    assert_eq!(lit["result"]["params"]["count_variant"], "paper_literal");
    assert_ne!(base["result"]["growth"]["a"], lit["result"]["growth"]["a"]);
}

#[test]
fn pipeline_without_positive_count() {
    let out = isospec(&["pipeline", "--drange", "2:10"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(json(&out)["result"]["growth"]["a"].is_null());
}

#[test]
fn bounds_csv_columns() {
    let out = isospec(&["--format", "csv", "bounds", "--drange", "150:152"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text.lines().next(),
        Some("d,log_x,log_subgroup_count,log_class_cap,log_nonconjugate_count,a_running")
    );
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn bad_range_is_usage() {
    assert_eq!(isospec(&["bounds", "--drange", "400:150"]).status.code(), Some(2));
    assert_eq!(isospec(&["bounds", "--drange", "x"]).status.code(), Some(2));
}

#[test]
fn embed_both_types() {
    for (ty, q) in [("A2", "4"), ("B2", "3")] {
        let out = isospec(&["embed", "--type", ty, "--q", q]);
        assert_eq!(out.status.code(), Some(0), "{ty}");
        let r = &json(&out)["result"];
        assert_eq!(r["isomorphism"], true);
        let n: u64 = q.parse().unwrap();
        assert_eq!(r["map_table"].as_array().unwrap().len() as u64, n * n * n);
    }
    assert_eq!(isospec(&["embed", "--type", "B2", "--q", "2"]).status.code(), Some(2));
}

#[test]
fn order_and_index_bound() {
    let out = isospec(&["order", "--type", "A2", "--q", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["order"], "168");
    let out = isospec(&["order", "--type", "A2", "--q", "5", "--inertia-degrees", "1"]);
    assert_eq!(json(&out)["result"]["index_bound"]["value"], "74400");
    assert_eq!(isospec(&["order", "--type", "A2", "--q", "6"]).status.code(), Some(2));
}

#[test]
fn output_file_is_written_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cert.json");
    let out = isospec(&["verify", "--q", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert_eq!(doc["result"]["verdict"]["verified"], true);
    let leftovers: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(leftovers.len(), 1);
}

#[test]
fn unwritable_output_is_usage() {
    let out = isospec(&["verify", "--q", "3", "--output", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!Path::new("/nonexistent-dir/x.json").exists());
}

#[test]
fn json_is_deterministic_apart_from_timestamp() {
    let strip = |out: Output| {
        let mut v = json(&out);
        v.as_object_mut().unwrap().remove("timestamp");
        v
    };
    let a = strip(isospec(&["verify", "--q", "4"]));
    let b = strip(isospec(&["verify", "--q", "4"]));
    assert_eq!(a, b);
    let a = strip(isospec(&["fields", "--limit", "200"]));
    let b = strip(isospec(&["fields", "--limit", "200"]));
    assert_eq!(a, b);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(isospec(&["--help"]).status.code(), Some(0));
    assert_eq!(isospec(&["--version"]).status.code(), Some(0));
    assert_eq!(isospec(&["nope"]).status.code(), Some(2));
}
