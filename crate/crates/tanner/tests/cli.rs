mod common;

use common::{fixture_str, tanner};

fn field<'a>(out: &'a str, name: &str) -> Option<&'a str> {
    out.lines().find_map(|l| l.strip_prefix(name)?.strip_prefix('='))
}

#[test]
fn girth_reads_both_formats() {
    let (code, out) = tanner(&["girth", &fixture_str("eight_cycle.alist"), "--format", "lines"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "girth"), Some("8"));
    let (_, out) = tanner(&["--format", "lines", "girth", &fixture_str("petersen.edges")]);
    assert_eq!((field(&out, "nodes"), field(&out, "girth")), (Some("10"), Some("5")));
}

#[test]
fn bounds_prints_exact_rationals() {
    let (code, out) = tanner(&["bounds", "--gamma", "5", "--girth", "10", "--t", "2", "--format", "lines"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "moore_half_gamma"), Some("29/4"));
    assert_eq!(field(&out, "ldpc_guarantee"), Some("29/8"));
    assert_eq!(field(&out, "ldpc_guarantee_floor"), Some("3"));
    assert_eq!(field(&out, "gldpc_beta"), Some("2/3"));
    assert_eq!(tanner(&["bounds", "--gamma", "4", "--girth", "7"]).0, 2);
}

#[test]
fn decode_reports_status_and_exit_code() {
    let host = fixture_str("eight_cycle_host.alist");
    let (code, out) = tanner(&["decode", &host, "--errors", "0,1,2,3", "--format", "lines"]);
    assert_eq!(code, 1);
    assert_eq!(field(&out, "status"), Some("fixed_point"));
    assert_eq!(field(&out, "final_support"), Some("0,1,2,3"));
    let (code, out) = tanner(&["decode", &fixture_str("gamma4_girth12.alist"), "--errors", "3", "--algorithm", "serial", "--format", "lines"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "status"), Some("codeword"));
    let (code, out) = tanner(&["decode", &host, "--weight", "2", "--seed", "5", "--format", "lines"]);
    assert!(code <= 1);
    assert_eq!(field(&out, "errors").unwrap().split(',').count(), 2);
}

#[test]
fn gldpc_decode_needs_a_subcode() {
    let (code, out) = tanner(&["decode", &fixture_str("gldpc_4_7.alist"), "--errors", "1", "--algorithm", "gldpc"]);
    assert_eq!(code, 2);
    assert!(out.contains("--subcode"));
    let (code, _) = tanner(&[
        "decode",
        &fixture_str("gldpc_4_7.alist"),
        "--errors",
        "1,50",
        "--algorithm",
        "gldpc",
        "--subcode",
        &fixture_str("hamming_7_4.sub"),
    ]);
    assert_eq!(code, 0);
}

#[test]
fn expansion_modes() {
    let frag = tempfile::tempdir().unwrap();
    let prefix = frag.path().join("frag");
    let (code, _) = tanner(&["trapping", "construct", "--gamma", "4", "--g-prime", "4", "--out", prefix.to_str().unwrap()]);
    assert_eq!(code, 0);
    let alist = prefix.with_extension("alist");
    let alist = alist.to_str().unwrap();
    let (code, out) = tanner(&["expansion", alist, "--k-max", "4", "--delta", "3", "--format", "lines"]);
    assert_eq!(code, 1);
    assert_eq!((field(&out, "strict"), field(&out, "non_strict")), (Some("fail"), Some("pass")));
    let (code, _) = tanner(&["expansion", alist, "--k-max", "4", "--delta", "3", "--comparison", "non-strict"]);
    assert_eq!(code, 0);
    let (code, out) = tanner(&["expansion", &fixture_str("gamma4_girth8.alist"), "--certificate", "ldpc", "--format", "lines"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("size=")).count(), 3);
    let (code, out) = tanner(&["--budget", "10", "expansion", &fixture_str("gamma4_girth8.alist"), "--certificate", "ldpc"]);
    assert_eq!(code, 2);
    assert!(out.contains("budget"));
    assert_eq!(tanner(&["expansion", alist, "--delta", "3/0", "--k-max", "1"]).0, 2);
}

#[test]
fn trapping_verify_and_critical() {
    let host = fixture_str("eight_cycle_host.alist");
    let sidecar = fixture_str("eight_cycle_host.set");
    let (code, out) = tanner(&["trapping", "verify", &host, "--sidecar", &sidecar, "--format", "lines"]);
    assert_eq!(code, 0);
    assert_eq!((field(&out, "a"), field(&out, "b")), (Some("4"), Some("8")));
    let (code, _) = tanner(&["trapping", "verify", &host, "--set", "0,1"]);
    assert_eq!(code, 1);
    let (code, out) = tanner(&["trapping", "critical", &host, "--sidecar", &sidecar, "--format", "lines"]);
    assert_eq!(code, 0);
    assert_eq!(field(&out, "critical_number"), Some("4"));
    assert_eq!(field(&out, "patterns_tried"), Some("16"));
}

#[test]
fn sweep_verdicts() {
    let (code, out) = tanner(&["sweep", &fixture_str("gamma4_girth12.alist"), "--format", "lines"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(field(&out, "verdict"), Some("consistent"));
    // Above the guarantee the embedded set fails, but the verdict only
    // covers weights the bounds promise.
    let (code, out) = tanner(&["sweep", &fixture_str("eight_cycle_host.alist"), "--w-max", "4", "--format", "lines"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.starts_with("weight=4") && !l.ends_with("first_failure=none")), "{out}");
    let (code, out) = tanner(&["sweep", &fixture_str("gamma4_girth8.alist"), "--w-max", "3", "--sample", "20", "--seed", "3", "--format", "lines"]);
    assert_eq!(code, 0);
    assert!(out.contains("ChaCha8Rng"));
    assert_eq!(tanner(&["sweep", &fixture_str("eight_cycle.alist")]).0, 2);
}

#[test]
fn construct_peg_is_seeded() {
    let args = ["construct", "peg", "--n", "40", "--gamma", "3", "--rho", "6", "--girth", "6", "--seed", "4"];
    let (code, a) = tanner(&args);
    assert_eq!(code, 0);
    assert_eq!(a, tanner(&args).1);
    let g = tanner::format::parse_alist(&a).unwrap();
    assert!(g.girth().unwrap() >= 6);
    assert_eq!(tanner(&["construct", "peg", "--n", "7", "--gamma", "3", "--rho", "4", "--girth", "6"]).0, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(tanner(&["frobnicate"]).0, 2);
    assert_eq!(tanner(&["girth"]).0, 2);
    assert_eq!(tanner(&["girth", "/nonexistent.alist"]).0, 2);
    assert_eq!(tanner(&["--help"]).0, 0);
}
