use nodal_cli::{run_with, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use nodal_core::classify::{read_csv, Status, TableRow};

fn run(args: &[&str]) -> (i32, Vec<u8>, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("nodal").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, out, String::from_utf8(err).unwrap())
}

#[test]
fn count_eight_three() {
    let (code, out, _) = run(&[
        "count",
        "--p",
        "8",
        "--q",
        "3",
        "--theta",
        "0.1",
        "--resolution",
        "1024",
    ]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(report["count"], 12);
    assert_eq!(report["certified"], true);
}

#[test]
fn symbolic_theta_is_tagged() {
    let (code, out, _) = run(&["count", "--p", "4", "--q", "0", "--theta", "pi/4"]);
    assert_eq!(code, EXIT_OK);
    let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(report["count"], 13);
    assert!(!report["thetaTag"].is_null());
}

#[test]
fn exit_codes() {
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("Usage"));

    let (code, _, err) = run(&["count", "--p", "2", "--q", "1", "--bogus"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("Usage"));

    let (code, _, err) = run(&["count", "--p", "2", "--q", "1", "--theta", "nonsense"]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(err.contains("angle"));

    let (code, _, _) = run(&["chessboard", "--p", "3", "--q", "1"]);
    assert_eq!(code, EXIT_FAILURE, "(3,1) shares zeros, no chessboard");

    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(String::from_utf8(out).unwrap().contains("render"));
}

#[test]
fn unwritable_output_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("x.svg");
    let (code, _, err) = run(&[
        "render",
        "--kind",
        "fgraph",
        "--p",
        "2",
        "--q",
        "1",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(!err.is_empty());
}

#[test]
fn table_csv_matches_json() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("table.csv");
    let (code, _, _) = run(&[
        "table",
        "--n-max",
        "208",
        "--format",
        "csv",
        "-o",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(code, EXIT_OK);
    let (code, json, _) = run(&["table", "--n-max", "208", "--format", "json"]);
    assert_eq!(code, EXIT_OK);

    let from_json: Vec<TableRow> = serde_json::from_slice(&json).unwrap();
    let from_csv = read_csv(std::fs::File::open(&csv_path).unwrap()).unwrap();
    assert_eq!(from_csv, from_json);
    assert_eq!(from_csv.last().unwrap().verdict.n_hi, 208);

    let sharp: Vec<u32> = from_csv
        .iter()
        .filter(|r| r.verdict.status == Status::CourantSharp)
        .map(|r| r.verdict.n_lo)
        .collect();
    assert_eq!(sharp, [1, 2, 4, 5, 9]);
}

#[test]
fn render_is_byte_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [&[&str]; 5] = [
        &[
            "--kind", "nodal", "--p", "4", "--q", "0", "--theta", "pi/4", "--size", "200",
        ],
        &[
            "--kind", "nodal", "--p", "5", "--q", "2", "--theta", "0.3", "--format", "pgm",
            "--size", "64",
        ],
        &["--kind", "fgraph", "--p", "2", "--q", "1"],
        &["--kind", "chessboard", "--p", "9", "--q", "4"],
        &["--kind", "sweep-profile", "--p", "3", "--q", "2"],
    ];
    for (k, case) in cases.iter().enumerate() {
        let mut bytes = Vec::new();
        for rep in 0..2 {
            let path = dir.path().join(format!("{k}-{rep}"));
            let mut args = vec!["render"];
            args.extend_from_slice(case);
            args.extend_from_slice(&["-o", path.to_str().unwrap()]);
            let (code, _, err) = run(&args);
            assert_eq!(code, EXIT_OK, "{case:?}: {err}");
            bytes.push(std::fs::read(&path).unwrap());
        }
        assert!(!bytes[0].is_empty());
        assert_eq!(bytes[0], bytes[1], "{case:?}");
    }
}

#[test]
fn chessboard_render_has_ninety_seven_corners() {
    let (code, out, _) = run(&["render", "--kind", "chessboard", "--p", "9", "--q", "4"]);
    assert_eq!(code, EXIT_OK);
    let svg = String::from_utf8(out).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("class=\"admissible\"").count(), 9 * 9 + 4 * 4);
}

#[test]
fn pgm_only_for_nodal() {
    let (code, _, _) = run(&[
        "render", "--kind", "fgraph", "--p", "2", "--q", "1", "--format", "pgm",
    ]);
    assert_eq!(code, EXIT_FAILURE);
}

#[test]
fn spectrum_and_classify() {
    let (code, out, _) = run(&["spectrum", "--lambda-max", "5"]);
    assert_eq!(code, EXIT_OK);
    let entries: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(entries.as_array().unwrap().len(), 5);
    assert_eq!(entries[4]["pairs"], serde_json::json!([[2, 1], [1, 2]]));

    let (code, out, _) = run(&["classify", "--n", "209"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["rule"], "PLEIJEL_GATE");
}
