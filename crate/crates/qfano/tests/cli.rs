//! End-to-end tests for the command-line interface.

use qfano::cli::run;

fn argv(rest: &str) -> Vec<String> {
    std::iter::once("qfano".to_string())
        .chain(rest.split_whitespace().map(str::to_string))
        .collect()
}

#[test]
fn info_reports_space_invariants() {
    let (code, out) = run(argv("info --dim 3 --degrees 4"));
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["space"]["euler_characteristic"], "-56");
    assert_eq!(doc["space"]["primitive_rank"], "60");
    assert_eq!(doc["space"]["fano_index"], 1);
    assert_eq!(doc["space"]["borderline"], true);
}

#[test]
fn euler_quadric_closed_coefficients() {
    let (code, out) = run(argv("euler --dim 3 --degrees 2"));
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    let coeffs = doc["payload"]["closed"]["coefficients"].as_array().unwrap();
    let mut seen: Vec<(u64, u64, String)> = coeffs
        .iter()
        .map(|c| {
            (
                c["basis_index"].as_u64().unwrap(),
                c["q_power"].as_u64().unwrap(),
                c["value"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    seen.sort();
    assert_eq!(
        seen,
        vec![(0, 1, "-2".to_string()), (3, 0, "2".to_string())]
    );
}

#[test]
fn euler_both_routes_agree() {
    let (code, out) = run(argv("euler --dim 3 --degrees 4 --both"));
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["payload"]["routes_agree"], true);
    assert_eq!(doc["payload"]["case"], "borderline");
    assert!(doc["payload"]["shifted"].is_object());
}

#[test]
fn tevelev_quadric_fixture() {
    let (code, out) = run(argv("tevelev --dim 3 --degrees 2 --genus 1 --points 1"));
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["payload"]["k"], 1);
    assert_eq!(doc["payload"]["value"], "2");
    assert_eq!(doc["payload"]["disc"], "1");
    assert_eq!(doc["payload"]["routes_agree"], true);
}

#[test]
fn tevelev_rejects_non_integral_curve_degree() {
    // cubic threefold: d = 2 does not divide r(n+g-1) = 3
    let (code, out) = run(argv("tevelev --dim 3 --degrees 3 --genus 0 --points 2"));
    assert_eq!(code, 2);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["error"]["kind"], "invalid_query");
}

#[test]
fn tevelev_rejects_unstable_input() {
    let (code, _) = run(argv("tevelev --dim 3 --degrees 2 --genus 0 --points 1"));
    assert_eq!(code, 2);
}

#[test]
fn rejects_invalid_space() {
    let (code, out) = run(argv("info --dim 3 --degrees 5"));
    assert_eq!(code, 2);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["error"]["kind"], "invalid_space");

    let (code, _) = run(argv("info --dim 2 --degrees 2"));
    assert_eq!(code, 2);
}

#[test]
fn verify_exits_zero_when_all_checks_pass() {
    let (code, out) = run(argv("verify --dim 4 --degrees 2,3"));
    assert_eq!(code, 0);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["payload"]["all_pass"], true);
    assert!(!doc["payload"]["checks"].as_array().unwrap().is_empty());
}

#[test]
fn output_is_deterministic() {
    let a = run(argv("gw --dim 3 --degrees 4 --k 3"));
    let b = run(argv("gw --dim 3 --degrees 4 --k 3"));
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
}

#[test]
fn format_csv_and_text_render() {
    let (code, csv) = run(argv("info --dim 3 --degrees 2 --format csv"));
    assert_eq!(code, 0);
    assert!(csv.lines().any(|l| l == "space.euler_characteristic,4"), "{csv}");

    let (code, text) = run(argv("info --dim 3 --degrees 2 --format text"));
    assert_eq!(code, 0);
    assert!(text.lines().any(|l| l == "space.euler_characteristic = 4"), "{text}");
}

#[test]
fn cache_round_trip_and_mismatch_rejection() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.json");
    let path_arg = path.display().to_string();

    let (code, first) = run(argv(&format!(
        "gw --dim 3 --degrees 4 --k 4 --cache {path_arg}"
    )));
    assert_eq!(code, 0);
    assert!(path.exists());

    // warm run must agree byte-for-byte with the cold run
    let (code, second) = run(argv(&format!(
        "gw --dim 3 --degrees 4 --k 4 --cache {path_arg}"
    )));
    assert_eq!(code, 0);
    assert_eq!(first, second);

    // a cache written for a different space is rejected, not silently used
    let (code, out) = run(argv(&format!(
        "gw --dim 3 --degrees 3 --k 2 --cache {path_arg}"
    )));
    assert_eq!(code, 2);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["error"]["kind"], "cache");
}
