//! End-to-end tests against the built binary: the documented exit-code
//! contract, the report content for known regions, and byte-identical JSON
//! round-trips.

use std::process::{Command, Output};

use biinterval_cli::report::{
    AnalysisReport, ParsevalCheck, STildeCheck, TilingCheck, VerifyReport, ZerosCheck,
};

fn biinterval(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biinterval"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn analyze_integer_gap_region_reports_both_witnesses() {
    let out = biinterval(&["analyze", "0", "1/3", "4/3", "2", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.schema, "biinterval/1");
    assert!(report.classification.case_i);
    assert_eq!(report.classification.case_ii_n, None);
    assert!(report.spectral);
    assert_eq!(
        report.spectrum,
        Some(biinterval_core::SpectrumSpec::Lattice)
    );
    let tiling = report.tiling.unwrap();
    assert_eq!(tiling.period(), biinterval_core::rat(1, 1));
    assert_eq!(tiling.residues(), &[biinterval_core::rat(0, 1)]);
    let verification = report.verification.unwrap();
    assert!(verification.gram_max_off_diagonal < 1e-12);
    assert!(verification.coverage_exact);
    assert!(verification.parseval.defect <= verification.parseval.tail_bound);
}

#[test]
fn analyze_non_spectral_region_reports_no_witnesses() {
    let out = biinterval(&["analyze", "0", "1/3", "1/2", "7/6", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!report.spectral);
    assert!(report.spectrum.is_none() && report.tiling.is_none());
    assert!(report.verification.is_none());

    let text = biinterval(&["analyze", "0", "1/3", "1/2", "7/6"]);
    assert!(stdout(&text).contains("not spectral / does not tile"));
}

#[test]
fn analyze_with_offset_numerator_selects_half_half_spectrum() {
    let out = biinterval(&["analyze", "0", "1/2", "3/2", "2", "--p", "5", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: AnalysisReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report.classification.case_ii_n, Some(3));
    assert_eq!(
        report.spectrum,
        Some(biinterval_core::SpectrumSpec::HalfInteger { n: 3, p: 5 })
    );
}

#[test]
fn analyze_rejects_even_p() {
    let out = biinterval(&["analyze", "0", "1/2", "3/2", "2", "--p", "4"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn analyze_json_round_trips_byte_identically() {
    for args in [
        vec!["analyze", "0", "1/3", "4/3", "2", "--json"],
        vec!["analyze", "0", "1/2", "3/2", "2", "--p", "5", "--json"],
        vec!["analyze", "0", "1/3", "1/2", "7/6", "--json"],
        vec!["analyze", "2", "4", "5", "7", "--json"],
    ] {
        let printed = stdout(&biinterval(&args));
        let parsed: AnalysisReport = serde_json::from_str(&printed).unwrap();
        let reprinted = biinterval_cli::report::to_json(&parsed);
        assert_eq!(printed, reprinted, "round trip changed bytes for {args:?}");
    }
}

#[test]
fn verify_json_round_trips_byte_identically() {
    let zeros = stdout(&biinterval(&[
        "verify", "zeros", "0", "1/2", "3/2", "2", "--window", "0", "2", "--json",
    ]));
    let parsed: VerifyReport<ZerosCheck> = serde_json::from_str(&zeros).unwrap();
    assert_eq!(zeros, biinterval_cli::report::to_json(&parsed));

    let tiling = stdout(&biinterval(&[
        "verify",
        "tiling",
        "0",
        "1/2",
        "1",
        "3/2",
        "--period",
        "1",
        "--residues",
        "0",
        "--window",
        "0",
        "3",
        "--json",
    ]));
    let parsed: VerifyReport<TilingCheck> = serde_json::from_str(&tiling).unwrap();
    assert_eq!(tiling, biinterval_cli::report::to_json(&parsed));

    let parseval = stdout(&biinterval(&[
        "verify", "parseval", "0", "1/3", "4/3", "2", "--lambda", "1/6", "--json",
    ]));
    let parsed: VerifyReport<ParsevalCheck> = serde_json::from_str(&parseval).unwrap();
    assert_eq!(parseval, biinterval_cli::report::to_json(&parsed));

    let stilde = stdout(&biinterval(&[
        "verify", "stilde", "--beta", "1/2", "--json",
    ]));
    let parsed: VerifyReport<STildeCheck> = serde_json::from_str(&stilde).unwrap();
    assert_eq!(stilde, biinterval_cli::report::to_json(&parsed));
}

#[test]
fn verify_stilde_passes_and_exits_zero() {
    let out = biinterval(&["verify", "stilde", "--beta", "1/2", "--K", "1000", "--json"]);
    assert_eq!(exit_code(&out), 0);
    let report: VerifyReport<STildeCheck> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.pass);
    assert!(report.detail.deviation <= report.detail.tail_bound);
}

#[test]
fn verify_stilde_rejects_out_of_domain_beta() {
    let out = biinterval(&["verify", "stilde", "--beta", "3/2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_tiling_failure_exits_one_with_overlaps() {
    let out = biinterval(&[
        "verify",
        "tiling",
        "0",
        "1/2",
        "1",
        "3/2",
        "--period",
        "1",
        "--residues",
        "0",
        "--window",
        "0",
        "3",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 1);
    let report: VerifyReport<TilingCheck> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!report.pass);
    assert_eq!(report.detail.coverage.overlaps.len(), 3);
    assert_eq!(report.detail.coverage.gaps.len(), 3);
}

#[test]
fn verify_tiling_of_constructed_spec_passes() {
    let out = biinterval(&[
        "verify",
        "tiling",
        "0",
        "1/2",
        "3/2",
        "2",
        "--period",
        "3",
        "--residues",
        "0,1/2,1",
    ]);
    assert_eq!(exit_code(&out), 0);
}

#[test]
fn verify_zeros_confirms_half_half_zero_set() {
    let out = biinterval(&[
        "verify", "zeros", "0", "1/2", "3/2", "2", "--window", "0", "2", "--step", "1/1000",
        "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let report: VerifyReport<ZerosCheck> = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.pass);
    assert_eq!(report.detail.matched.len(), 4);
}

#[test]
fn verify_parseval_on_non_spectral_region_is_usage_error() {
    let out = biinterval(&["verify", "parseval", "0", "1/3", "1/2", "7/6"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn decimal_endpoints_require_rationalize() {
    let rejected = biinterval(&["analyze", "0", "0.3333333", "1/2", "7/6"]);
    assert_eq!(exit_code(&rejected), 2);
    let accepted = biinterval(&[
        "analyze",
        "0",
        "0.3333333",
        "1/2",
        "7/6",
        "--rationalize",
        "--json",
    ]);
    assert_eq!(exit_code(&accepted), 0);
    let report: AnalysisReport = serde_json::from_str(&stdout(&accepted)).unwrap();
    assert_eq!(report.input.rationalized.len(), 1);
    assert_eq!(
        report.input.rationalized[0].value,
        biinterval_core::rat(1, 3)
    );
    assert_eq!(report.canonical.r(), biinterval_core::rat(1, 3));
}

#[test]
fn overlapping_intervals_are_a_usage_error() {
    let out = biinterval(&["analyze", "0", "1", "1/2", "3/2"]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8(out.stderr).unwrap().contains("overlap"));
}

#[test]
fn unknown_flags_exit_two() {
    let out = biinterval(&["analyze", "0", "1/3", "4/3", "2", "--bogus"]);
    assert_eq!(exit_code(&out), 2);
}
