use std::process::{Command, Output};

use fatpoint::oracle::GradedBettiTable;
use fatpoint::reduce::ReductionTrace;

fn fatpoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fatpoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = fatpoint(args);
    assert!(
        o.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn series_linear_shorthand() {
    let v = json(&[
        "series", "--l", "3", "--k", "1", "--ideal", "J", "--method", "geometry", "--json",
    ]);
    assert_eq!(v["phi"], serde_json::json!([5, 4, 3]));
    assert_eq!(v["classification"], "linear");
    assert_eq!(v["method"], "geometry");
    assert_eq!(
        v["series"],
        serde_json::json!([1, 3, 6, 10, 15, 18, 19, 18, 12, 6])
    );
}

#[test]
fn series_char_two_oracle() {
    let o = fatpoint(&[
        "series", "--phi", "3,2,1", "--ideal", "J", "--method", "oracle", "--field", "p=2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("1 + 3t + 6t^2 + 6t^3 + 4t^4 + t^5"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn series_trivial_monomial() {
    let v = json(&[
        "series", "--phi", "1,1,1", "--ideal", "I", "--method", "taylor", "--json",
    ]);
    assert_eq!(v["series"], serde_json::json!([1]));
    assert_eq!(v["classification"], "general");
}

#[test]
fn series_methods_agree() {
    let mut seen = Vec::new();
    for (ideal, method) in [
        ("J", "geometry"),
        ("J", "closed"),
        ("J", "oracle"),
        ("I", "taylor"),
        ("I", "counting"),
        ("I", "oracle"),
    ] {
        let v = json(&[
            "series", "--phi", "8,5,3", "--ideal", ideal, "--method", method, "--json",
        ]);
        seen.push(v["series"].clone());
    }
    assert!(seen.windows(2).all(|w| w[0] == w[1]), "{seen:?}");
}

#[test]
fn series_generic() {
    let v = json(&["series", "--phi", "5,4,3", "--ideal", "generic", "--json"]);
    assert_eq!(
        v["series"],
        serde_json::json!([1, 3, 6, 10, 15, 18, 19, 18, 12])
    );
    assert_eq!(v["method"], "generic");
}

#[test]
fn series_general_needs_max_degree() {
    assert_eq!(
        fatpoint(&["series", "--phi", "10,5,3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fatpoint(&["series", "--phi", "10,5,3", "--max-degree", "40"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn reduce_examples() {
    let o = fatpoint(&["reduce", "--phi", "5,3,1", "--j", "6"]);
    let text = stdout(&o);
    assert!(text.contains("3E0 - E1 - E2 - E3 - E7"), "{text}");
    assert!(text.contains("h0 = 6"));

    let v = json(&["reduce", "--phi", "8,5,3", "--j", "13", "--json"]);
    let tr: ReductionTrace = serde_json::from_value(v.clone()).unwrap();
    let copies: Vec<i64> = tr.steps.iter().map(|s| s.copies).collect();
    assert_eq!(copies, [2, 2, 2, 1, 1, 1]);
    assert_eq!(tr.h0, 6);
    assert_eq!(v["chi"], 6);

    let v = json(&["reduce", "--divisor", "0,0,0,0,0,0,0,0", "--json"]);
    assert_eq!(v["steps"], serde_json::json!([]));
    assert_eq!(v["h0"], 1);
}

#[test]
fn reduce_rejects_malformed_divisor() {
    assert_eq!(
        fatpoint(&["reduce", "--divisor", "1,2,3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        fatpoint(&["reduce", "--divisor", "1,a,0,0,0,0,0,0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fatpoint(&["reduce", "--phi", "5,3,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn h0_command() {
    let o = fatpoint(&["h0", "--divisor", "6,-2,-2,-2,-1,-1,-1,-4"]);
    assert_eq!(stdout(&o).trim(), "6");
    let o = fatpoint(&["h0", "--phi", "5,3,1", "--j", "7"]);
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn betti_tables() {
    let v = json(&["betti", "--phi", "8,5,1", "--ideal", "J", "--json"]);
    let t: GradedBettiTable = serde_json::from_value(v).unwrap();
    assert_eq!(t.ideal_step(0), [(3, 1), (8, 3)]);
    assert_eq!(t.ideal_step(1), [(11, 3), (13, 6)]);
    assert_eq!(t.ideal_step(2), [(14, 6)]);

    let v = json(&["betti", "--phi", "8,5,1", "--ideal", "both", "--json"]);
    assert_eq!(v["series_equal_betti_differ"], true);
    let text = stdout(&fatpoint(&["betti", "--phi", "8,5,1", "--ideal", "both"]));
    assert!(text.contains("series equal, Betti differ"), "{text}");

    let v = json(&["betti", "--phi", "3,2,1", "--ideal", "I", "--json"]);
    let t: GradedBettiTable = serde_json::from_value(v).unwrap();
    assert_eq!(t.ideal_step(0), [(3, 4), (4, 3)]);
}

#[test]
fn verify_grids() {
    let o = fatpoint(&["verify", "--grid", "linear", "--max-l", "3", "--max-k", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("estimated work"));

    let o = fatpoint(&[
        "verify", "--phi", "8,5,3", "--phi", "16,12,7", "--phi", "20,16,13",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(" 0 failures"));
}

#[test]
fn verify_corruption_and_budget() {
    let dir = std::env::temp_dir().join(format!("fatpoint-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("mismatch.csv");
    let o = fatpoint(&[
        "verify",
        "--phi",
        "5,3,1",
        "--corrupt",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
    let body = std::fs::read_to_string(&csv).unwrap();
    let mut lines = body.lines();
    assert_eq!(
        lines.next(),
        Some("phi1,phi2,phi3,j,method_a,method_b,value_a,value_b,pass")
    );
    assert!(lines.all(|l| l.starts_with("5,3,1,") && l.ends_with(",false") && l.contains("closed")));
    std::fs::remove_dir_all(&dir).ok();

    let o = fatpoint(&[
        "verify", "--grid", "linear", "--max-l", "5", "--max-k", "5", "--budget", "10",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("estimated work"));
}

#[test]
fn points_listing() {
    let v = json(&["points", "--json"]);
    assert_eq!(v["points"][6], serde_json::json!([1, 1, 1]));
    assert_eq!(v["negative_curves"].as_array().unwrap().len(), 16);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["betti", "--phi", "8,5,3", "--ideal", "both", "--json"][..],
        &[
            "verify",
            "--grid",
            "almost-linear",
            "--max-l",
            "2",
            "--max-k",
            "2",
            "--output",
            "csv",
        ][..],
    ] {
        let a = fatpoint(args);
        let b = fatpoint(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn thread_count_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_fatpoint"))
        .args(["verify", "--phi", "5,3,1"])
        .env("FATPOINT_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fatpoint(&[]).status.code(), Some(2));
    assert_eq!(
        fatpoint(&["series", "--field", "p=4", "--phi", "5,3,1", "--method", "oracle"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        fatpoint(&["series", "--phi", "0,1,1"]).status.code(),
        Some(2)
    );
    assert_eq!(fatpoint(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_char_scan() {
    let v = json(&["verify", "--phi", "3,2,1", "--char-scan", "--json"]);
    assert_eq!(v["char_scan"][0]["bound"], 4);
    assert_eq!(v["char_scan"][0]["first_divergent_prime"], 2);
    let text = stdout(&fatpoint(&["verify", "--phi", "5,3,1", "--char-scan"]));
    assert!(text.contains("char scan"), "{text}");
}
