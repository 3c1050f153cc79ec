use std::process::Command;

use extschur::cli::{run, Outcome, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("extschur").chain(args.iter().copied()))
}

#[test]
fn expand_fundamental() {
    let out = cli(&["expand", "--alpha", "2,1,3", "--basis", "F"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "F(1,1,2,2) + F(1,2,3) + F(2,1,3)\n");
    assert_eq!(cli(&["expand", "--alpha", "3"]).stdout, "F(3)\n");
}

#[test]
fn expand_monomial() {
    let out = cli(&["expand", "--alpha", "1,2", "--basis", "M"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "M(1,1,1) + M(1,2)\n");
}

#[test]
fn expand_json_shape() {
    let out = cli(&["--format", "json", "expand", "--alpha", "2,1,3"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["degree"], 6);
    assert_eq!(v["basis"], "F");
    let comps: Vec<_> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["composition"].clone(), t["coefficient"].clone()))
        .collect();
    assert_eq!(
        comps,
        vec![
            (serde_json::json!([1, 1, 2, 2]), serde_json::json!(1)),
            (serde_json::json!([1, 2, 3]), serde_json::json!(1)),
            (serde_json::json!([2, 1, 3]), serde_json::json!(1)),
        ]
    );
}

#[test]
fn tableaux_listing() {
    let out = cli(&[
        "tableaux",
        "--alpha",
        "2,1,3",
        "--kind",
        "set",
        "--show-descents",
    ]);
    assert_eq!(out.code, EXIT_OK);
    let blocks: Vec<&str> = out.stdout.trim_end().split("\n\n").collect();
    assert_eq!(blocks.len(), 3);
    assert_eq!(blocks[0], "4 5 6\n3\n1 2\nDes: (2,1,3)");
    assert!(blocks[1].ends_with("Des: (1,2,3)"));
    assert!(blocks[2].ends_with("Des: (1,1,2,2)"));

    let srit = cli(&["tableaux", "--alpha", "1,1", "--kind", "srit"]);
    assert_eq!(srit.stdout, "2\n1\n\n1\n2\n");
    let set = cli(&["tableaux", "--alpha", "1,1,1"]);
    assert_eq!(set.stdout, "3\n2\n1\n");
}

#[test]
fn tableaux_json_rows_are_bottom_up() {
    let out = cli(&[
        "tableaux",
        "--alpha",
        "1,2",
        "--format",
        "json",
        "--show-descents",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(
        v,
        serde_json::json!([{"shape": [1, 2], "rows": [[1], [2, 3]], "descent": [1, 2]}])
    );
}

#[test]
fn kmatrix_csv() {
    let out = cli(&["kmatrix", "--n", "3", "--format", "csv"]);
    assert_eq!(out.code, EXIT_OK);
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .from_reader(out.stdout.as_bytes());
    let rows: Vec<Vec<String>> = rdr
        .records()
        .map(|r| r.unwrap().iter().map(str::to_owned).collect())
        .collect();
    assert_eq!(rows[0], ["", "1,1,1", "1,2", "2,1", "3"]);
    let body: Vec<Vec<u8>> = rows[1..]
        .iter()
        .map(|r| r[1..].iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(
        body,
        vec![
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 1, 1, 0],
            vec![0, 0, 0, 1]
        ]
    );
}

#[test]
fn kmatrix_small_identities() {
    let one = cli(&["kmatrix", "--n", "1", "--format", "csv"]);
    assert_eq!(one.stdout, ",1\n1,1\n");
    let two = cli(&["kmatrix", "--n", "2", "--format", "csv"]);
    assert_eq!(two.stdout, ",\"1,1\",2\n\"1,1\",1,0\n2,0,1\n");
}

#[test]
fn kmatrix_zero_is_rejected() {
    assert_eq!(cli(&["kmatrix", "--n", "0"]).code, EXIT_USAGE);
}

#[test]
fn analyze_reports() {
    let out = cli(&["analyze", "--alpha", "2,1,3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["dim"], 3);
    assert_eq!(
        v["factors"],
        serde_json::json!([[1, 1, 2, 2], [1, 2, 3], [2, 1, 3]])
    );
    assert_eq!(v["commutant_dimension"], 1);
    assert_eq!(v["indecomposable"], true);
    assert_eq!(v["characteristic"]["terms"].as_array().unwrap().len(), 3);

    let four = cli(&["analyze", "--alpha", "4"]);
    assert!(four.stdout.contains("dim: 1\n"));
    assert!(four.stdout.contains("characteristic: F(4)\n"));

    let col = cli(&["analyze", "--alpha", "1,1"]);
    assert!(col.stdout.contains("characteristic: F(1,1)\n"));
}

#[test]
fn char_matches_expand() {
    let a = cli(&["char", "--alpha", "3,1,2"]);
    let b = cli(&["expand", "--alpha", "3,1,2"]);
    assert_eq!(a, b);
}

#[test]
fn verify_passes() {
    let out = cli(&["verify", "--n", "5"]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stdout);
    assert!(out
        .stdout
        .ends_with("PASS (all compositions of weight <= 5)\n"));

    let endo = cli(&[
        "verify",
        "--n",
        "5",
        "--checks",
        "endomorphism",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&endo.stdout).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 1);
    assert_eq!(checks[0]["check"], "endomorphism");
    // 16 + 8 + 4 + 2 + 1 compositions, plus the empty one.
    assert_eq!(checks[0]["passed"], 32);
    assert_eq!(checks[0]["failed"], 0);
}

#[test]
fn verify_zero_is_vacuous() {
    let out = cli(&["verify", "--n", "0"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(!out.stdout.contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["expand", "--alpha", "2,0"][..],
        &["expand", "--alpha", "a,b"],
        &["expand", "--alpha", "-1"],
        &["expand", "--alpha", "9"],
        &["--max-n", "3", "expand", "--alpha", "2,2"],
        &["--max-n", "0", "kmatrix", "--n", "1"],
        &["verify", "--n", "-2"],
        &["verify", "--n", "9"],
        &["verify", "--n", "3", "--checks", "bogus"],
        &["tableaux", "--alpha", "2", "--format", "csv"],
        &["analyze", "--alpha", "2", "--format", "csv"],
        &["frobnicate"],
        &[],
    ] {
        let out = cli(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_ne!(EXIT_FAILED, EXIT_USAGE);
}

#[test]
fn max_n_can_be_raised() {
    let out = cli(&["--max-n", "9", "expand", "--alpha", "9"]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout, "F(9)\n");
}

#[test]
fn help_exits_zero() {
    let out = cli(&["--help"]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.stdout.contains("kmatrix"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--n", "6", "--format", "json"];
    let first = cli(&args);
    for _ in 0..3 {
        assert_eq!(cli(&args), first);
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_extschur");
    let ok = Command::new(bin)
        .args(["expand", "--alpha", "2,1,3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(ok.stdout).unwrap(),
        "F(1,1,2,2) + F(1,2,3) + F(2,1,3)\n"
    );
    let bad = Command::new(bin)
        .args(["expand", "--alpha", "0"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}
