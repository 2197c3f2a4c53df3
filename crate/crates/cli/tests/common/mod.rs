#![allow(dead_code)]

use std::path::PathBuf;

pub struct Case {
    pub name: String,
    pub args: Vec<String>,
}

pub fn cli_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_dir() -> PathBuf {
    cli_dir().join("tests/golden")
}

pub fn corpus() -> Vec<Case> {
    let data = cli_dir().join("data");
    let text = std::fs::read_to_string(golden_dir().join("corpus.txt")).unwrap();
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let mut words = l.split_whitespace();
            let name = words.next().unwrap().to_string();
            let args = words
                .map(|w| w.replace("{data}", data.to_str().unwrap()))
                .collect();
            Case { name, args }
        })
        .collect()
}

/// Stdout, then stderr and the exit code, as one snapshot. The data
/// directory is masked so snapshots do not depend on the checkout path.
pub fn snapshot(case: &Case) -> String {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("klambda".to_string()).chain(case.args.iter().cloned());
    let code = klambda_cli::run(argv, &mut out, &mut err);
    let data = cli_dir().join("data");
    let mask = |b: Vec<u8>| String::from_utf8(b).unwrap().replace(data.to_str().unwrap(), "{data}");
    let mut s = mask(out);
    let err = mask(err);
    if !err.is_empty() {
        s.push_str("--- stderr\n");
        s.push_str(&err);
    }
    s.push_str(&format!("--- exit {code}\n"));
    s
}

pub fn golden_path(case: &Case) -> PathBuf {
    golden_dir().join(format!("{}.txt", case.name))
}

/// Cases whose snapshot differs from the checked-in file.
pub fn mismatches(cases: &[Case]) -> Vec<String> {
    let bless = std::env::var_os("KLAMBDA_BLESS").is_some();
    let mut bad = Vec::new();
    for case in cases {
        let got = snapshot(case);
        let path = golden_path(case);
        if bless {
            std::fs::write(&path, &got).unwrap();
            continue;
        }
        match std::fs::read_to_string(&path) {
            Ok(want) if want == got => {}
            _ => bad.push(case.name.clone()),
        }
    }
    bad
}

