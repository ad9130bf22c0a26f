//! End-to-end tests of the binary: golden outputs, exit codes, determinism,
//! and JSON round trips through the library parsers.

use std::process::Command;

use facschur::lr::{enumerate_lr_tableaux, lr_expand};
use facschur::{BarredSkewTableau, CoeffTable, MultiShape, Partition};

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_facschur"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("no signal"),
        String::from_utf8(out.stdout).expect("stdout is UTF-8"),
        String::from_utf8(out.stderr).expect("stderr is UTF-8"),
    )
}

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("test partition")
}

#[test]
fn expand_latex_contains_known_coefficient() {
    let (code, stdout, _) = run(&["expand", "--shape", "[[2,1],[1,1]]", "--n", "2", "--format", "latex"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("c^{(2,2)} = y^{(1)}_{1} + y^{(1)}_{2} + y^{(1)}_{3} + y^{(2)}_{1}"));
    assert!(stdout.contains("c^{(3,2)} = 1"));
}

#[test]
fn expand_empty_shape_is_the_unit() {
    let (code, stdout, _) = run(&["expand", "--shape", "[]", "--n", "1"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "c() = 1\n");
}

#[test]
fn expand_is_deterministic_and_check_does_not_alter_output() {
    let args = ["expand", "--shape", "[[2,1],[1]]", "--n", "3", "--format", "json"];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    let mut checked = args.to_vec();
    checked.push("--check");
    let (c3, out3, _) = run(&checked);
    assert_eq!((c1, c2, c3), (0, 0, 0));
    assert_eq!(out1, out2);
    assert_eq!(out1, out3);
}

#[test]
fn expand_json_round_trips() {
    let (code, stdout, _) = run(&["expand", "--shape", "[[2,1],[1,1]]", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    let table = CoeffTable::from_json(&v).expect("documented schema");
    let shape = MultiShape::new(vec![p(&[2, 1]), p(&[1, 1])]);
    assert_eq!(table, lr_expand(&shape, 2).unwrap());
}

#[test]
fn coeff_plain_golden() {
    let (code, stdout, _) = run(&["coeff", "--shape", "[[2,1],[1,1]]", "--mu", "[2,2]", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "y1_1 + y1_2 + y1_3 + y2_1\n");
}

#[test]
fn coeff_specializations() {
    let base = ["coeff", "--shape", "[[2,1],[1,1]]", "--mu", "[2,2]", "--n", "2"];
    let (code, stdout, _) = run(&[&base[..], &["--specialize", "y1=0"]].concat());
    assert_eq!(code, 0);
    assert_eq!(stdout, "y2_1\n");
    let points = [
        "--specialize", "y1_1=5", "--specialize", "y1_2=0",
        "--specialize", "y1_3=0", "--specialize", "y2_1=2",
    ];
    let (code, stdout, _) = run(&[&base[..], &points[..]].concat());
    assert_eq!(code, 0);
    assert_eq!(stdout, "7\n");
}

#[test]
fn coeff_with_too_many_rows_is_zero() {
    let (code, stdout, _) = run(&["coeff", "--shape", "[[1]]", "--mu", "[1,1,1]", "--n", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "0\n");
}

#[test]
fn coeff_check_passes() {
    let (code, _, stderr) = run(&[
        "coeff", "--shape", "[[2],[1,1]]", "--mu", "[2,1]", "--n", "3", "--check",
    ]);
    assert_eq!(code, 0, "{stderr}");
}

#[test]
fn tableaux_lr_emits_four_json_lines() {
    let (code, stdout, _) = run(&[
        "tableaux", "--shape", "[[2,1],[1,1]]", "--n", "2", "--lr", "--mu", "[2,2]",
    ]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 4);
    let shape = MultiShape::new(vec![p(&[2, 1]), p(&[1, 1])]);
    let expected = enumerate_lr_tableaux(&shape, &p(&[2, 2]), 2).unwrap();
    for (line, want) in lines.iter().zip(&expected) {
        let v: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        let t = BarredSkewTableau::from_json(&v).expect("documented schema");
        assert_eq!(&t, want);
    }
}

#[test]
fn tableaux_all_on_a_single_box() {
    let (code, stdout, _) = run(&["tableaux", "--shape", "[[1]]", "--n", "1", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 2);
}

#[test]
fn tableaux_lr_without_mu_covers_every_content() {
    let (code, stdout, _) = run(&["tableaux", "--shape", "[[1],[1]]", "--n", "2", "--lr"]);
    assert_eq!(code, 0);
    let total = stdout.lines().count();
    let mut by_content = 0;
    for mu in ["[]", "[1]", "[1,1]", "[2]"] {
        let (code, out, _) = run(&["tableaux", "--shape", "[[1],[1]]", "--n", "2", "--lr", "--mu", mu]);
        assert_eq!(code, 0);
        by_content += out.lines().count();
    }
    // two free boxes in different rows and columns: 4 + 4 + 1 + 1 fillings
    assert_eq!(total, 10);
    assert_eq!(by_content, total);
}

#[test]
fn tableaux_render_is_deterministic() {
    let args = [
        "tableaux", "--shape", "[[2,1],[1,1]]", "--n", "2", "--lr", "--mu", "[2,2]", "--render",
    ];
    let (c1, out1, _) = run(&args);
    let (c2, out2, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(out1, out2);
    assert!(out1.contains('~'), "barred entries are marked: {out1}");
}

#[test]
fn change_basis_unit_example() {
    let (code, stdout, _) = run(&[
        "change-basis", "--shape", "[1]", "--n", "1", "--direction", "schur-to-factorial",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "d() = -y1_1\nd(1) = 1\n");
}

#[test]
fn change_basis_json_names_the_target_basis() {
    let (code, stdout, _) = run(&[
        "change-basis", "--shape", "[1]", "--n", "1",
        "--direction", "schur-to-factorial", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(v["basis"], "factorial");
    let (code, stdout, _) = run(&[
        "change-basis", "--shape", "[1]", "--n", "1",
        "--direction", "factorial-to-schur", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).expect("valid JSON");
    assert_eq!(v["basis"], "schur");
}

#[test]
fn change_basis_methods_cross_check() {
    for direction in ["factorial-to-schur", "schur-to-factorial"] {
        for method in ["det", "dual", "tableau"] {
            let (code, _, stderr) = run(&[
                "change-basis", "--shape", "[2,1]", "--n", "2",
                "--direction", direction, "--method", method, "--check",
            ]);
            assert_eq!(code, 0, "{direction}/{method}: {stderr}");
        }
    }
}

#[test]
fn change_basis_accepts_a_singleton_shape_list() {
    let (code, a, _) = run(&[
        "change-basis", "--shape", "[[2,1]]", "--n", "2", "--direction", "factorial-to-schur",
    ]);
    let (code2, b, _) = run(&[
        "change-basis", "--shape", "[2,1]", "--n", "2", "--direction", "factorial-to-schur",
    ]);
    assert_eq!((code, code2), (0, 0));
    assert_eq!(a, b);
}

#[test]
fn change_basis_inadmissible_rectangle_exits_one() {
    let (code, _, stderr) = run(&[
        "change-basis", "--shape", "[2,1]", "--n", "2",
        "--direction", "schur-to-factorial", "--method", "dual", "--m", "1",
    ]);
    assert_eq!(code, 1);
    assert!(stderr.contains("rectangle"), "{stderr}");
}

#[test]
fn malformed_inputs_exit_two() {
    let cases: &[&[&str]] = &[
        &["expand", "--shape", "[[1,2]]", "--n", "2"],
        &["expand", "--shape", "not json", "--n", "2"],
        &["expand", "--shape", "[[1]]", "--n", "0"],
        &["expand", "--n", "2"],
        &["coeff", "--shape", "[[1]]", "--mu", "[-1]", "--n", "2"],
        &["coeff", "--shape", "[[1]]", "--mu", "[1]", "--n", "2", "--specialize", "y0=0"],
        &["coeff", "--shape", "[[1]]", "--mu", "[1]", "--n", "2", "--specialize", "y1=3"],
        &["coeff", "--shape", "[[1]]", "--mu", "[1]", "--n", "2", "--specialize", "x1=1"],
        &["tableaux", "--shape", "[[1]]", "--n", "1"],
        &["tableaux", "--shape", "[[1]]", "--n", "1", "--all", "--mu", "[1]"],
        &["change-basis", "--shape", "[1,1,1]", "--n", "2", "--direction", "factorial-to-schur"],
        &["verify", "--suite", "nonsense"],
    ];
    for args in cases {
        let (code, _, _) = run(args);
        assert_eq!(code, 2, "args: {args:?}");
    }
}

#[test]
fn verify_small_envelopes_pass() {
    let (code, stdout, _) = run(&["verify", "--suite", "theorem", "--max-boxes", "4", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("suite theorem") && stdout.contains("PASS"), "{stdout}");
    let (code, stdout, _) = run(&[
        "verify", "--suite", "basis", "--max-size", "3", "--max-boxes", "4", "--n", "2",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("suite basis") && stdout.contains("suite compose"), "{stdout}");
    let (code, stdout, _) = run(&[
        "verify", "--suite", "all", "--max-boxes", "3", "--max-size", "2", "--n", "2", "--seed", "1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(stdout.matches("PASS").count(), 6, "{stdout}");
}
