mod common;

use common::{corpus, snapshot};
use klambda_core::rep_sn::{RepRecord, RepSn};
use klambda_core::symcore::{parse_symfunc, Basis, Expansion, SymRecord};
use klambda_core::wreath::{WreathRecord, WreathRep};

fn stdout_of(name: &str) -> String {
    let case = corpus().into_iter().find(|c| c.name == name).unwrap();
    let snap = snapshot(&case);
    snap[..snap.find("--- ").unwrap()].to_string()
}

fn basis_of(text: &str) -> Basis {
    let c = text.trim().trim_start_matches(['-', ' ']).chars().find(|c| c.is_alphabetic()).unwrap();
    Basis::from_letter(c).unwrap()
}

#[test]
fn symmetric_function_outputs_reparse() {
    for name in [
        "plethysm-e2-e2", "plethysm-h3-h2", "plethysm-h-basis", "mult", "mult-e-basis", "kron",
        "schur-expand", "lr", "lambda-1-s5", "lambda-2-s2", "lambda-3-virtual",
    ] {
        let text = stdout_of(name);
        let b = basis_of(&text);
        let again = parse_symfunc(text.trim()).unwrap().expand(b).to_string();
        assert_eq!(again, text.trim(), "{name}");
    }
}

#[test]
fn json_records_reparse() {
    for name in ["plethysm-json", "kron-json", "schur-expand-json"] {
        let text = stdout_of(name);
        let rec: SymRecord = serde_json::from_str(&text).unwrap();
        let e = Expansion::try_from(&rec).unwrap();
        assert_eq!(SymRecord::from(&e), rec, "{name}");
    }
    let rec: WreathRecord = serde_json::from_str(&stdout_of("wreath-restrict-json")).unwrap();
    let w = WreathRep::try_from(&rec).unwrap();
    assert_eq!(WreathRecord::from(&w), rec);
}

#[test]
fn representation_outputs_reparse() {
    for name in ["wreath-induce", "wreath-induce-virtual"] {
        let text = stdout_of(name);
        let r: RepSn = text.trim().parse().unwrap();
        assert_eq!(r.to_string(), text.trim());
        let rec = RepRecord::from(&r);
        assert_eq!(RepSn::try_from(&rec).unwrap(), r);
    }
    for (name, l, k) in [("wreath-restrict", 2, 2), ("wreath-restrict-rep", 3, 2)] {
        let text = stdout_of(name);
        let w = WreathRep::parse(l, k, text.trim()).unwrap();
        assert_eq!(w.to_string(), text.trim());
    }
}

#[test]
fn cli_accepts_its_own_output() {
    // λ¹ is the identity, so feeding an output back reproduces it.
    let text = stdout_of("plethysm-h3-h2");
    let mut out = Vec::new();
    let code = klambda_cli::run(["klambda", "lambda", "1", text.trim()], &mut out, &mut Vec::new());
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), text);
    let rep = stdout_of("wreath-induce");
    let mut out = Vec::new();
    let code = klambda_cli::run(["klambda", "wreath-restrict", "2", "2", rep.trim()], &mut out, &mut Vec::new());
    assert_eq!(code, 0);
    // Res Ind of {[2]->[2]} contains it.
    assert!(String::from_utf8(out).unwrap().contains("{[2]->[2]}"));
}
