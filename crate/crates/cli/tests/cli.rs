//! Behavior of the command-line surface: exit codes, formats, determinism.

use k3bn_cli::run;
use serde_json::Value;

#[test]
fn rho_example_prints_the_value() {
    let out = run(["rho", "--g", "14", "--r", "2", "--d", "11"]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.is_empty());
    assert!(out.stdout.contains("-1"), "{}", out.stdout);
    assert!(out.stdout.starts_with("g"), "header row first");
}

#[test]
fn domain_error_exits_1_and_echoes_the_precondition() {
    let out = run(["rho", "--g", "1", "--r", "0", "--d", "0"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.contains("g must be >= 2"), "{}", out.stderr);

    let out = run(["rho", "--g", "5", "--r", "-1", "--d", "0"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("r must be >= 0"), "{}", out.stderr);
}

#[test]
fn usage_errors_exit_2() {
    let out = run(["frobnicate"]);
    assert_eq!(out.code, 2);
    assert!(!out.stderr.is_empty());

    let out = run(["rho", "--g", "14", "--r", "2"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--d"), "{}", out.stderr);

    let out = run(["rho", "--g", "14", "--r", "2", "--d", "11", "--format", "yaml"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("--format"), "{}", out.stderr);

    // Mixed mukai argument groups.
    let out = run(["mukai", "--rank", "3", "--g", "18"]);
    assert_eq!(out.code, 2);
}

#[test]
fn help_exits_0() {
    let out = run(["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("audit"));
}

#[test]
fn noncomputing_g13_is_an_empty_table() {
    let out = run(["noncomputing", "--g", "13"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "r  d  rho  gamma\n");

    let csv = run(["noncomputing", "--g", "13", "--format", "csv"]);
    assert_eq!(csv.stdout, "r,d,rho,gamma\n");

    let json = run(["noncomputing", "--g", "13", "--format", "json"]);
    let doc: Value = serde_json::from_str(&json.stdout).unwrap();
    assert_eq!(doc["rows"].as_array().unwrap().len(), 0);
}

#[test]
fn lifts_json_lists_the_five_candidates_sorted() {
    let out = run([
        "lifts", "--g", "18", "--r", "3", "--d", "16", "--gamma-c", "8", "--format", "json",
    ]);
    assert_eq!(out.code, 0);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "lifts");
    assert_eq!(doc["inputs"]["gamma_c"], 8);
    let rows = doc["rows"].as_array().unwrap();
    let types: Vec<(i64, i64)> = rows
        .iter()
        .map(|r| (r["r_p"].as_i64().unwrap(), r["d_p"].as_i64().unwrap()))
        .collect();
    assert_eq!(types, vec![(3, 16), (4, 16), (4, 17), (5, 18), (6, 20)]);
    for row in rows {
        assert_eq!(row["special"], true);
    }
}

#[test]
fn lifts_gamma_c_defaults_to_the_generic_clifford_index() {
    let explicit = run(["lifts", "--g", "18", "--r", "3", "--d", "16", "--gamma-c", "8"]);
    let defaulted = run(["lifts", "--g", "18", "--r", "3", "--d", "16"]);
    assert_eq!(explicit.stdout, defaulted.stdout);
}

#[test]
fn lifts_box_oracle_agrees_on_types() {
    let boxed = run([
        "lifts", "--g", "18", "--r", "3", "--d", "16", "--box", "--format", "csv",
    ]);
    assert_eq!(boxed.code, 0);
    let lines: Vec<&str> = boxed.stdout.lines().collect();
    assert_eq!(lines[0], "r_p,d_p");
    assert_eq!(
        &lines[1..],
        ["3,16", "4,16", "4,17", "5,18", "6,20"],
        "{}",
        boxed.stdout
    );
    let doc: Value =
        serde_json::from_str(&run(["lifts", "--g", "18", "--r", "3", "--d", "16", "--box", "--format", "json"]).stdout)
            .unwrap();
    assert!(doc["flags"].as_array().unwrap().iter().any(|f| f == "box_oracle"));
}

#[test]
fn json_output_round_trips_canonically() {
    for argv in [
        vec!["classify-nl", "--g", "14", "--format", "json"],
        vec!["audit", "--g", "18", "--detail", "--format", "json"],
        vec!["bounds", "--g", "18", "--r", "3", "--gamma-a", "10", "--format", "json"],
        vec!["mukai", "--rank", "3", "--c1sq", "4", "--c2", "4", "--format", "json"],
    ] {
        let out = run(argv.clone());
        assert_eq!(out.code, 0, "{argv:?}: {}", out.stderr);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        let mut reserialized = serde_json::to_string(&doc).unwrap();
        reserialized.push('\n');
        assert_eq!(out.stdout, reserialized, "non-canonical JSON for {argv:?}");
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    for argv in [
        vec!["audit", "--from", "14", "--to", "19"],
        vec!["lifts", "--g", "19", "--r", "3", "--d", "17", "--format", "json"],
        vec!["classify-nl", "--g", "20", "--format", "csv"],
    ] {
        let a = run(argv.clone());
        let b = run(argv.clone());
        assert_eq!(a.stdout.as_bytes(), b.stdout.as_bytes(), "{argv:?}");
        assert_eq!(a.code, b.code);
    }
}

#[test]
fn audit_exit_code_contract() {
    let ok = run(["audit", "--from", "14", "--to", "19"]);
    assert_eq!(ok.code, 0);
    let lines = ok.stdout.lines().count();
    assert_eq!(lines, 16, "15 cases plus header:\n{}", ok.stdout);
    assert!(!ok.stdout.contains("false"));

    // Genus 20 has an expected-maximal rank-4 case: verdict false, exit 1.
    let g20 = run(["audit", "--g", "20", "--format", "json"]);
    assert_eq!(g20.code, 1);
    let doc: Value = serde_json::from_str(&g20.stdout).unwrap();
    assert!(doc["flags"]
        .as_array()
        .unwrap()
        .iter()
        .any(|f| f == "out_of_theorem_range"));
    assert!(doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["verdict"] == false));

    let usage = run(["audit", "--from", "14"]);
    assert_eq!(usage.code, 2);
}

#[test]
fn audit_detail_rows_carry_certificates() {
    let out = run(["audit", "--g", "15", "--detail", "--format", "json"]);
    assert_eq!(out.code, 0);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2, "g=15 has one case with two candidates");
    for row in rows {
        assert_eq!(row["special"], true);
        assert!(row["rho_p"].as_i64().unwrap() < 0);
        assert!(row["disc"].as_i64().unwrap() < 0);
    }
}

#[test]
fn bounds_renders_rationals_exactly() {
    let out = run(["bounds", "--g", "18", "--r", "3", "--format", "csv"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("proof_strategy,35/2"), "{}", out.stdout);

    let neg = run(["bounds", "--g", "18", "--r", "4", "--gamma-a", "10", "--format", "csv"]);
    assert!(neg.stdout.contains("glm_gamma_ceiling,-2/5"), "{}", neg.stdout);

    // g in {2,3,4,8} is outside the g^3_d lifting theorem.
    let bad = run(["bounds", "--g", "8", "--r", "3", "--gamma", "3", "--m", "0", "--mu", "0"]);
    assert_eq!(bad.code, 1);

    let partial = run(["bounds", "--g", "18", "--r", "3", "--gamma", "8"]);
    assert_eq!(partial.code, 2);
}

#[test]
fn mukai_bundle_mode_reports_lm_invariants() {
    let out = run(["mukai", "--g", "18", "--r", "3", "--d", "16", "--format", "json"]);
    assert_eq!(out.code, 0);
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    let row = &doc["rows"][0];
    assert_eq!(row["rank"], 4);
    assert_eq!(row["c1_sq"], 34);
    assert_eq!(row["c2"], 16);
    assert_eq!(row["h0"], 9);
    assert_eq!(row["gamma"], 10);
    assert_eq!(row["chi_f_tensor_e"], 6);
}

#[test]
fn delta_subcommand_reports_the_hodge_constraint() {
    let out = run(["delta", "--g", "14", "--r", "2", "--d", "11", "--format", "csv"]);
    assert_eq!(out.stdout, "g,r,d,delta,hodge\n14,2,11,-69,true\n");
    let zero = run(["delta", "--g", "5", "--r", "2", "--d", "4", "--format", "csv"]);
    assert_eq!(zero.stdout, "g,r,d,delta,hodge\n5,2,4,0,false\n");
}
