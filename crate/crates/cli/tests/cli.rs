use std::process::Command;

use cyclotomy49::scan::{run_scan, Format, ScanConfig, ScanReport};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cyclotomy49"))
}

fn code(args: &[&str]) -> i32 {
    bin().args(args).output().unwrap().status.code().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify", "--prime", "197"]), 0);
    assert_eq!(code(&["verify", "--prime", "196"]), 2);
    assert_eq!(code(&["verify", "--prime", "29"]), 2);
    assert_eq!(code(&["verify", "--prime", "197", "--generator", "4"]), 2);
    assert_eq!(code(&["classify", "--prime", "29"]), 0);
    assert_eq!(code(&["classify", "--prime", "23"]), 2);
    assert_eq!(code(&["selftest"]), 0);
    assert_eq!(code(&["selftest", "--inject-fault"]), 1);
    assert_eq!(code(&["scan", "--min", "2", "--max", "10", "--modulus", "7", "--output", "x"]), 2);
}

#[test]
fn verify_emits_certificate() {
    let out = bin().args(["verify", "--prime", "197"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["p"], 197);
    assert_eq!(v["certificates"][0]["match"], true);
    assert_eq!(v["certificates"][0]["n"], 1);
    assert_eq!(v["classification"]["kind"], "ordinary");
}

#[test]
fn classify_includes_coefficient_evidence_for_197() {
    let out = bin().args(["classify", "--prime", "197"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["evidence"]["coeff_conditions"].is_object());
    assert_eq!(v["evidence"]["artiad_conditions"], true);
    let out = bin().args(["classify", "--prime", "29"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["evidence"]["coeff_conditions"].is_null());
    assert_eq!(v["evidence"]["via_x"], v["evidence"]["via_cubic"]);
}

fn config(min: u64, max: u64, modulus: u64, jobs: usize, output: &str) -> ScanConfig {
    ScanConfig {
        min,
        max,
        modulus,
        all_n: false,
        jobs,
        extend_to_artiad: false,
        output: output.into(),
        format: Format::Json,
    }
}

#[test]
fn scan_visits_sieved_primes() {
    let r = run_scan(&config(2, 2000, 49, 2, "-")).unwrap();
    let ps: Vec<u64> = r.entries.iter().map(|e| e.p).collect();
    assert_eq!(ps, [197, 491, 883, 1373, 1471, 1667]);
    assert!(r.passed());
    assert_eq!(r.summary.ordinary + r.summary.artiad + r.summary.hyperartiad, ps.len());
    assert_eq!(r.summary.certificates, ps.len());
}

#[test]
fn scan_is_deterministic_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for jobs in ["1", "8"] {
        let path = dir.path().join(format!("r{jobs}.json"));
        let st = bin()
            .args(["scan", "--min", "2", "--max", "3000", "--modulus", "14", "--jobs", jobs, "--output"])
            .arg(&path)
            .output()
            .unwrap();
        assert_eq!(st.status.code(), Some(0));
        let mut r: ScanReport = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
        r.runtime_ms = 0;
        r.config.jobs = 0;
        r.config.output.clear();
        bodies.push(serde_json::to_string(&r).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
    let r: ScanReport = serde_json::from_str(&bodies[0]).unwrap();
    assert!(r.entries.windows(2).all(|w| w[0].p < w[1].p));
}

#[test]
fn empty_range_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.json");
    let st = bin()
        .args(["scan", "--min", "200", "--max", "400", "--modulus", "49", "--output"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0));
    let r: ScanReport = serde_json::from_slice(&std::fs::read(&path).unwrap()).unwrap();
    assert!(r.entries.is_empty() && r.summary.certificates == 0);

    let csv_path = dir.path().join("r.csv");
    let st = bin()
        .args([
            "scan",
            "--min",
            "2",
            "--max",
            "1000",
            "--modulus",
            "49",
            "--all-n",
            "--format",
            "csv",
            "--output",
        ])
        .arg(&csv_path)
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0));
    let mut rd = csv::Reader::from_path(&csv_path).unwrap();
    assert_eq!(rd.headers().unwrap().len(), 5 + 16);
    assert_eq!(rd.records().count(), 3 * 48);
}

#[test]
fn unwritable_output_is_a_usage_error() {
    assert_eq!(
        code(&[
            "scan",
            "--min",
            "2",
            "--max",
            "300",
            "--modulus",
            "49",
            "--output",
            "/nonexistent/dir/r.json"
        ]),
        2
    );
}
