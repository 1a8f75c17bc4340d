use std::process::{Command, Output};

use umbral_cli::render::{parse_json_table, render_table};
use umbral_cli::OutputFormat;

fn umbral(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_umbral"))
        .args(args)
        .output()
        .expect("spawn umbral")
}

fn stdout(args: &[&str]) -> String {
    let out = umbral(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    umbral(args).status.code().expect("exit code")
}

#[test]
fn value_queries() {
    assert_eq!(stdout(&["value", "2", "2"]), "2/15\n");
    assert_eq!(stdout(&["value", "0", "0"]), "1\n");
    assert_eq!(stdout(&["value", "4", "8"]), "2524/15015\n");
    assert_eq!(stdout(&["value", "1", "0", "--poly"]), "[1/2, 1]\n");
    assert_eq!(stdout(&["value", "0", "2", "--poly", "--format", "csv"]), "1/6,-1,1\n");
    assert_eq!(stdout(&["--format", "json", "value", "8", "8"]), "{\"num\":362624,\"den\":36465}\n");
    assert_eq!(stdout(&["value", "0", "1", "--format", "latex"]), "-\\frac{1}{2}\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&["value", "two", "2"]), 2);
    assert_eq!(code(&["value", "2"]), 2);
    assert_eq!(code(&["table", "1", "-1"]), 2);
    assert_eq!(code(&["bogus"]), 2);
    assert_eq!(code(&["--format", "xml", "value", "1", "1"]), 2);
    assert_eq!(code(&["--jobs", "0", "verify", "paths", "--max-r", "2", "--max-s", "2"]), 2);
}

#[test]
fn tables() {
    assert_eq!(stdout(&["table", "0", "3"]), "1, -1/2, 1/6, 0\n");
    assert_eq!(stdout(&["table", "2", "2", "--denoms"]), "1, 2, 6\n2, 3, 6\n6, 6, 15\n");
    assert_eq!(stdout(&["table", "1", "2", "--format", "csv"]), "1,-1/2,1/6\n1/2,-1/3,1/6\n");
    assert_eq!(
        stdout(&["table", "1", "1", "--format", "json"]),
        "[[{\"num\":1,\"den\":1},{\"num\":-1,\"den\":2}],[{\"num\":1,\"den\":2},{\"num\":-1,\"den\":3}]]\n"
    );
    assert_eq!(stdout(&["table", "1", "2", "--denoms", "--format", "json"]), "[[1,2,6],[2,3,6]]\n");
}

#[test]
fn latex_table_reproduces_published_rows() {
    let body = stdout(&["table", "8", "8", "--format", "latex"]);
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 11);
    assert_eq!(lines[1], "\\hline");
    assert_eq!(
        lines[2],
        "$0$ & $1$ & $-\\frac{1}{2}$ & $\\frac{1}{6}$ & $0$ & $-\\frac{1}{30}$ & $0$ & $\\frac{1}{42}$ & $0$ & $-\\frac{1}{30}$ \\\\"
    );
    assert_eq!(
        lines[10],
        "$8$ & $-\\frac{1}{30}$ & $\\frac{1}{30}$ & $\\frac{7}{165}$ & $-\\frac{32}{165}$ & $\\frac{2524}{15015}$ & $\\frac{8128}{15015}$ & $-\\frac{22928}{15015}$ & $-\\frac{1856}{2145}$ & $\\frac{362624}{36465}$ \\\\"
    );
}

#[test]
fn csv_is_byte_stable() {
    let a = umbral(&["table", "8", "8", "--format", "csv"]).stdout;
    let b = umbral(&["table", "8", "8", "--format", "csv"]).stdout;
    assert!(!a.is_empty());
    assert_eq!(a, b);
}

#[test]
fn json_round_trips_byte_identically() {
    // B_40 has a numerator beyond 2^53, so strings and numbers both occur
    let text = stdout(&["table", "3", "40", "--format", "json"]);
    assert!(text.contains("\"num\":\"-261082718496449122051\""));
    assert!(!text.contains('.'));
    let grid = parse_json_table(&text).unwrap();
    let rows: Vec<&[_]> = grid.iter().map(Vec::as_slice).collect();
    assert_eq!(render_table(rows, OutputFormat::Json), text);
}

#[test]
fn psi_queries() {
    assert_eq!(stdout(&["psi", "2", "2", "5"]), "1\n");
    assert_eq!(stdout(&["psi", "2", "2", "11"]), "0\n");
    assert_eq!(stdout(&["psi", "3", "3", "5", "--show-indices"]), "3  {ν=1}\n");
    let out = umbral(&["psi", "3", "3", "9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("9 is not prime"));
}

#[test]
fn denom_queries() {
    assert_eq!(stdout(&["denom", "8", "8"]), "36465\n");
    assert_eq!(stdout(&["denom", "1", "2", "--factors"]), "6 = 2 * 3\n");
    assert_eq!(stdout(&["denom", "0", "7", "--factors"]), "1 = 1\n");
    assert_eq!(stdout(&["denom", "12", "0", "--format", "json"]), "{\"r\":12,\"s\":0,\"denom\":2730,\"eps2\":1,\"primes\":[3,5,7,13]}\n");
}

#[test]
fn verify_reciprocity_counts_instances() {
    let out = stdout(&["verify", "reciprocity", "--max-r", "40", "--max-s", "40"]);
    assert!(out.contains("instances  1681\n"), "{out}");
    assert!(out.contains("failures   0\n"));
    assert!(out.ends_with("PASS\n"));
}

#[test]
fn verify_denominators_and_nonvanishing() {
    let out = stdout(&["verify", "denominators", "--max-r", "30", "--max-s", "30", "--jobs", "4"]);
    assert!(out.contains("failures   0\n"), "{out}");
    let out = stdout(&["--format", "json", "verify", "nonvanishing", "--max-r", "60", "--max-s", "60", "--jobs", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["instances"], 3721);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["notes"][0].as_str().unwrap().starts_with("58 zeros, all exceptional: (0,3)"));
}

#[test]
fn verify_unknown_property_lists_names() {
    let out = umbral(&["verify", "goldbach", "--max-r", "1", "--max-s", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    for name in ["reciprocity", "psi-congruences", "hermite-stern", "theorem4"] {
        assert!(err.contains(name), "{err}");
    }
}

#[test]
fn verify_every_property_exits_zero() {
    for name in umbral_cli::Property::names() {
        let out = umbral(&["verify", &name, "--max-r", "10", "--max-s", "10", "--jobs", "2"]);
        assert_eq!(out.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&out.stdout));
    }
}
