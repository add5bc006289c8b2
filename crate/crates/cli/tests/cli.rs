use std::process::{Command, Output};

use abvar_aut::classify::WitnessCertificate;
use abvar_aut_cli::report::{AmitsurReport, ClassifyReport, WeilReport};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abvar-aut"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exited normally")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    String::from_utf8(out.stdout).unwrap()
}

/// Parses the json output as `T` and checks that re-emitting it gives the
/// same bytes.
fn round_trip<T: Serialize + DeserializeOwned>(args: &[&str]) -> T {
    let text = stdout(args);
    let value: T = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    let mut again = serde_json::to_string_pretty(&value).unwrap();
    again.push('\n');
    assert_eq!(again, text, "{args:?}");
    value
}

#[test]
fn weil_examples() {
    let args = ["weil", "--q", "125", "--poly", "125,5,1"];
    assert_eq!(code(&args), 0);
    let text = stdout(&args);
    assert!(text.contains("Q(sqrt(-19))"), "{text}");
    let mut json_args = args.to_vec();
    json_args.extend(["--format", "json"]);
    let report: WeilReport = round_trip(&json_args);
    assert_eq!((report.g, report.d, report.e), (3, 3, 2));

    let zeta: WeilReport = round_trip(&["weil", "--zeta", "22", "--p", "11", "--a", "2", "--format", "json"]);
    assert_eq!((zeta.g, zeta.d, zeta.e), (5, 1, 10));

    assert_eq!(code(&["weil", "--q", "125", "--poly", "125,30,1"]), 1);
}

#[test]
fn weil_usage_errors() {
    assert_eq!(code(&["weil", "--q", "125"]), 2);
    assert_eq!(code(&["weil", "--q", "125", "--poly", "125,5,1", "--zeta", "22"]), 2);
    assert_eq!(code(&["weil", "--poly", "125,5,1"]), 2);
    assert_eq!(code(&["weil", "--q", "125", "--poly", "1,x,1"]), 2);
    assert_eq!(code(&["weil", "--zeta", "22", "--p", "12", "--a", "2"]), 2);
    assert_eq!(code(&["weil", "--q", "125", "--poly", "125,5,1", "--format", "csv"]), 2);
}

#[test]
fn amitsur_examples() {
    let out = stdout(&["amitsur", "--m", "4", "--r", "3"]);
    assert!(out.contains("EMBEDDABLE via (1)"), "{out}");
    assert_eq!(code(&["amitsur", "--m", "4", "--r", "3"]), 0);

    let out = stdout(&["amitsur", "--m", "18", "--r", "7"]);
    assert!(out.contains("NOT EMBEDDABLE"), "{out}");
    assert_eq!(code(&["amitsur", "--m", "18", "--r", "7"]), 1);

    assert!(stdout(&["amitsur", "--m", "6", "--r", "1"]).contains("EMBEDDABLE (cyclic)"));
    assert_eq!(code(&["amitsur", "--m", "6", "--r", "3"]), 2);
    // negative r is reduced modulo m
    assert_eq!(code(&["amitsur", "--m", "4", "--r", "-1"]), 0);

    let report: AmitsurReport = round_trip(&["amitsur", "--m", "18", "--r", "13", "--format", "json"]);
    assert!(!report.embeddable);
    assert_eq!((report.s, report.t, report.n), (6, 3, 3));
}

#[test]
fn classify_examples() {
    let g3: ClassifyReport = round_trip(&["classify", "--g", "3", "--format", "json"]);
    assert_eq!(g3.rows.len(), 5);
    let g11: ClassifyReport = round_trip(&["classify", "--g", "11", "--format", "json"]);
    let orders: Vec<u64> = g11.rows.iter().map(|r| r.order()).collect();
    assert_eq!(orders, vec![2, 4, 6, 46]);
    let closed: ClassifyReport = round_trip(&["classify", "--closed", "--format", "json"]);
    let orders: Vec<u64> = closed.rows.iter().map(|r| r.order()).collect();
    assert_eq!(orders, vec![2, 4, 6, 14, 18]);

    assert_eq!(code(&["classify", "--g", "9"]), 2);
    assert_eq!(code(&["classify", "--g", "2"]), 2);
    assert_eq!(code(&["classify"]), 2);
    assert_eq!(code(&["classify", "--g", "3", "--closed"]), 2);
}

#[test]
fn classify_csv() {
    let csv = stdout(&["classify", "--g", "5", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "group_order,g_condition");
    assert_eq!(&lines[1..], ["2,all", "4,all", "6,all", "22,g>=5 and 2g+1 prime"]);
}

#[test]
fn witness_examples() {
    assert_eq!(code(&["witness", "--id", "1"]), 0);
    assert!(stdout(&["witness", "--id", "1"]).contains("PASS"));
    assert_eq!(code(&["witness", "--all", "--g", "5"]), 0);
    assert_eq!(code(&["witness", "--all"]), 0);
    assert_eq!(code(&["witness", "--id", "6", "--g", "9"]), 2);
    // 2g + 1 = 15 is not prime, so the construction does not apply
    assert_eq!(code(&["witness", "--id", "6", "--g", "7"]), 3);
    assert_eq!(code(&["witness", "--id", "alt3", "--g", "13"]), 0);
    assert_eq!(code(&["witness", "--id", "nope"]), 2);
    assert_eq!(code(&["witness"]), 2);

    let cert: WitnessCertificate = round_trip(&["witness", "--id", "4", "--format", "json"]);
    assert!(cert.overall);
    let all: Vec<WitnessCertificate> = round_trip(&["witness", "--all", "--format", "json"]);
    assert_eq!(all.len(), 14);
    assert!(all.iter().all(|c| c.overall));
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 5] = [
        &["weil", "--q", "6859", "--poly", "6859,19,1", "--format", "json"],
        &["amitsur", "--m", "8", "--r", "7"],
        &["classify", "--g", "23", "--format", "csv"],
        &["witness", "--all", "--format", "json"],
        &["witness", "--id", "closed4"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status.code(), b.status.code(), "{args:?}");
    }
}

#[test]
fn exit_codes_stay_in_range() {
    let cases: [&[&str]; 8] = [
        &[],
        &["--help"],
        &["bogus"],
        &["weil", "--q", "abc", "--poly", "1,0,1"],
        &["amitsur", "--m", "0", "--r", "1"],
        &["amitsur", "--m", "x", "--r", "1"],
        &["witness", "--id", "1", "--all"],
        &["classify", "--g", "3", "--format", "xml"],
    ];
    for args in cases {
        let c = code(args);
        assert!((0..=3).contains(&c), "{args:?} exited {c}");
    }
    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["bogus"]), 2);
}
