use std::fs;
use std::process::{Command, Output};

fn polydiff(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polydiff"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn matrix_bernstein_csv() {
    let out = polydiff(&["matrix", "--basis", "bernstein", "--degree", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "-4,4,0,0,0\n-1,-2,3,0,0\n0,-2,0,2,0\n0,0,-3,2,1\n0,0,0,-4,4\n");
}

#[test]
fn matrix_hermite_json() {
    let out = polydiff(&[
        "matrix", "--basis", "hermite", "--nodes", "-1,0,1", "--confluency", "3,4,2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["dimension"], 9);
    let row6: Vec<&str> = v["entries"][6].as_array().unwrap().iter().map(|e| e.as_str().unwrap()).collect();
    assert_eq!(row6, ["83/4", "6", "1", "-24", "12", "-12", "4", "13/4", "-1/2"]);
}

#[test]
fn matrix_monomial_degree_zero() {
    let out = polydiff(&["matrix", "--basis", "monomial", "--degree", "0"]);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn matrix_real_field_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.csv");
    let out = polydiff(&[
        "matrix", "--basis", "chebyshev", "--degree", "2", "--field", "real", "--pinv", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    assert_eq!(fs::read_to_string(&path).unwrap(), "0,0,0\n1,0,-0.5\n0,0.25,0\n");
}

#[test]
fn matrix_recurrence() {
    let out = polydiff(&[
        "matrix", "--basis", "recurrence", "--alpha", "1,1/2", "--beta", "0,0", "--gamma", "0,1/2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "0,1,0\n0,0,4\n0,0,0\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["matrix", "--basis", "monomial", "--degree", "3", "--nodes", "0,1"][..],
        &["matrix", "--basis", "lagrange", "--degree", "3", "--nodes", "0,1"],
        &["matrix", "--basis", "lagrange", "--nodes", "0,1/2,0"],
        &["matrix", "--basis", "lagrange", "--nodes", "0,i", "--field", "real"],
        &["matrix", "--basis", "nope", "--degree", "2"],
        &["weights", "--nodes", "1,1"],
        &["experiment", "--which", "plot"],
        &["frobnicate"],
    ] {
        let out = polydiff(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn weights_rows() {
    let out = polydiff(&["weights", "--nodes", "-1,-0.5,0.5,1"]);
    assert_eq!(stdout(&out), "0,0,-2/3\n1,0,4/3\n2,0,-4/3\n3,0,2/3\n");
    let out = polydiff(&["weights", "--nodes", "0,1", "--confluency", "2,1"]);
    assert_eq!(stdout(&out), "0,0,-1\n0,1,-1\n1,0,1\n");
}

#[test]
fn verify_exit_codes() {
    let ok = polydiff(&["verify", "--basis", "bernstein"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).lines().all(|l| !l.starts_with("FAIL")));
    let bad = polydiff(&["verify", "--basis", "bernstein", "--corrupt"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn verify_hermite_includes_reference_matrix() {
    let out = polydiff(&["verify", "--basis", "hermite"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS hermite: 9x9 reference matrix"));
    assert!(stdout(&out).contains("PASS hermite: matches conjugation oracle"));
}

#[test]
fn experiment_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = polydiff(&[
            "experiment", "--which", "hermite-norms", "--nodes", "equispaced", "--n", "3,5,8", "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with('#') && lines[0].contains("1001"));
    assert_eq!(lines[1], "n,node_family,confluency,norm_D,norm_Z,max_err");
    let ns: Vec<&str> = lines[2..].iter().map(|l| l.split(',').next().unwrap()).collect();
    assert_eq!(ns, ["3", "5", "8"]);
    assert!(lines[2].starts_with("3,equispaced,3,"));
}

#[test]
fn experiment_default_fibonacci() {
    let out = polydiff(&["experiment", "--which", "lagrange-error"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let ns: Vec<usize> = text.lines().skip(2).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
    assert_eq!(ns, [3, 5, 8, 13, 21, 34, 55]);
    assert!(text.lines().skip(2).all(|l| l.contains(",chebyshev,1,")));
}
