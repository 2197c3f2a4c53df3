mod common;

use common::{corpus, mismatches, snapshot};

#[test]
fn corpus_matches_golden_files() {
    let cases = corpus();
    let bad = mismatches(&cases);
    assert!(bad.is_empty(), "golden mismatches: {bad:?}");
}

#[test]
fn every_subcommand_is_covered() {
    let names: Vec<String> = corpus().iter().map(|c| {
        c.args.iter().find(|a| !a.starts_with("--") && a.parse::<usize>().is_err()).cloned().unwrap_or_default()
    }).collect();
    for sub in [
        "plethysm", "mult", "kron", "schur-expand", "char", "lr", "lambda", "tau", "taudot", "box",
        "wreath-induce", "wreath-restrict", "universal-p", "universal-q", "axioms", "kx-rank",
        "char-table",
    ] {
        assert!(names.iter().any(|n| n == sub), "{sub} not in corpus");
    }
}

#[test]
fn exit_codes() {
    let code = |name: &str| {
        let case = corpus().into_iter().find(|c| c.name == name).unwrap();
        snapshot(&case).lines().last().unwrap().to_string()
    };
    assert_eq!(code("lambda-2-s2"), "--- exit 0");
    for name in ["err-cap", "err-cap-flag", "err-parse", "err-odd-cell", "err-bad-group", "err-unknown"] {
        assert_eq!(code(name), "--- exit 1", "{name}");
    }
}

#[test]
fn binary_output_is_repeatable() {
    let exe = env!("CARGO_BIN_EXE_klambda");
    let run = || {
        std::process::Command::new(exe)
            .args(["--json", "tau", "s[2,1]", "--max", "3"])
            .output()
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let fail = std::process::Command::new(exe).args(["lambda", "2", "s[2"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let help = std::process::Command::new(exe).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
}
