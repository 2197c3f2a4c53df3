//! One line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Signed};

use klambda_cli::crosscheck::{
    axiom5_wreath_checks, symmetric_tables_agree, wreath_tables_agree, Check,
};
use klambda_core::kmodel::{excision_check, point_monomial_det, rank_table, CellComplex, FreeModel};
use klambda_core::lambda_tau::{
    check_lambda_axioms, check_lambda_closed_form, check_tau_axioms, lambda_plethysm,
    IntegerLambdaRing, LambdaBudget, TauBudget,
};
use klambda_core::symcore::{Basis, Partition, SymFunc};
use klambda_oracle::checks::{frobenius_holds, mackey_instance};
use klambda_oracle::{build_symmetric, build_wreath, build_wreath_diagonal, build_young, partitions};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg.into()) }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    let e = t.elapsed();
    ensure(e <= limit, format!("took {:.1?}, limit {:?}", e, limit))
}

fn load(name: &str) -> CellComplex {
    let path = common::cli_dir().join("data").join(name);
    CellComplex::from_toml_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn failed(checks: &[Check]) -> Vec<String> {
    checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect()
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let ranks = FreeModel::on_generators(1, 8).ranks(8);
    let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
    ensure(ranks == counts, format!("ranks {ranks:?} vs partition counts {counts:?}"))?;
    ensure(counts[8] == 22, "p(8) != 22")?;
    for n in 0..=7 {
        let d = point_monomial_det(n).map_err(|e| e.to_string())?;
        ensure(d.abs().is_one(), format!("det at n={n} is {d}"))?;
    }
    within(t, Duration::from_secs(10))?;
    Ok(format!("ranks {ranks:?}, dets ±1 for n<=7"))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let int = check_lambda_axioms(&IntegerLambdaRing { max_abs: 6 }, LambdaBudget { max_k: 3, max_kl: 3 });
    ensure(int.is_clean(), format!("integer instance:\n{int}"))?;
    let mut model = FreeModel::on_generators(2, 16);
    model.sample_degree = 4;
    let free = check_lambda_axioms(&model, LambdaBudget { max_k: 2, max_kl: 2 });
    ensure(free.is_clean(), format!("free model:\n{free}"))?;
    within(t, Duration::from_secs(60))?;
    Ok(format!("{} + {} identities", int.records.len(), free.records.len()))
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let budget = TauBudget::default();
    let report = check_tau_axioms(&budget);
    ensure(report.is_clean(), format!("{report}"))?;
    let checks = axiom5_wreath_checks(&budget.axiom5_pairs);
    let bad = failed(&checks);
    ensure(bad.is_empty(), bad.join("; "))?;
    within(t, Duration::from_secs(300))?;
    Ok(format!("{} identities, {} oracle confirmations", report.records.len(), checks.len()))
}

/// Monomials in four variables, by exponent vector.
type Poly = BTreeMap<[u8; 4], i64>;

/// `s_λ(x₁,…,x₄)` as a sum over semistandard tableaux.
fn schur_poly(shape: &[usize]) -> Poly {
    fn fill(cells: &[(usize, usize)], t: &mut Vec<Vec<u8>>, i: usize, out: &mut Poly) {
        if i == cells.len() {
            let mut e = [0u8; 4];
            for row in t.iter() {
                for &v in row {
                    e[v as usize] += 1;
                }
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[i];
        let lo = if c > 0 { t[r][c - 1] } else { 0 };
        let lo = if r > 0 { lo.max(t[r - 1][c] + 1) } else { lo };
        for v in lo..4 {
            t[r].push(v);
            fill(cells, t, i + 1, out);
            t[r].pop();
        }
    }
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &n)| (0..n).map(move |c| (r, c))).collect();
    let mut out = Poly::new();
    fill(&cells, &mut vec![Vec::new(); shape.len()], 0, &mut out);
    out
}

/// `λ²` of a representation whose weights are the monomials of `v`.
fn exterior_square(v: &Poly) -> Poly {
    let weights: Vec<[u8; 4]> =
        v.iter().flat_map(|(e, &c)| std::iter::repeat_n(*e, c as usize)).collect();
    let mut out = Poly::new();
    for i in 0..weights.len() {
        for j in i + 1..weights.len() {
            let mut e = weights[i];
            for (a, b) in e.iter_mut().zip(weights[j]) {
                *a += b;
            }
            *out.entry(e).or_insert(0) += 1;
        }
    }
    out
}

fn engine_poly(f: &SymFunc) -> Poly {
    let mut out = Poly::new();
    for (lambda, c) in f.expand(Basis::S).terms {
        assert!(c.is_integer());
        let c: i64 = c.to_integer().try_into().unwrap();
        for (e, n) in schur_poly(lambda.parts()) {
            *out.entry(e).or_insert(0) += c * n;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn criterion_4() -> Outcome {
    let report = check_lambda_closed_form(4, 3);
    ensure(report.is_clean(), format!("{report}"))?;
    for (input, expected) in [(vec![2], vec![3, 1]), (vec![1, 1], vec![2, 1, 1])] {
        let lam = lambda_plethysm(2, &SymFunc::schur(Partition::new(input.clone()).unwrap()));
        let want = SymFunc::schur(Partition::new(expected.clone()).unwrap());
        ensure(lam == want, format!("λ²(s{input:?}) = {}", lam.expand(Basis::S)))?;
        let oracle = exterior_square(&schur_poly(&input));
        ensure(engine_poly(&lam) == oracle, format!("monomial oracle disagrees at s{input:?}"))?;
        ensure(schur_poly(&expected) == oracle, format!("oracle is not s{expected:?}"))?;
    }
    Ok(format!("{} identities, spot values match", report.records.len()))
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    for name in ["cp1.toml", "cp2.toml", "cp1xcp1.toml"] {
        let table = rank_table(&load(name), 6).map_err(|e| e.to_string())?;
        ensure(table.consistent(), format!("{name}:\n{table}"))?;
    }
    let cp1 = rank_table(&load("cp1.toml"), 2).unwrap();
    let row = &cp1.rows[2];
    ensure(row.entries == [2, 1, 2] && row.total == 5, format!("CP1 N=2 row {row:?}"))?;
    within(t, Duration::from_secs(5))?;
    Ok("row sums equal totals for N<=6, CP1 N=2: 5 = 2+1+2".into())
}

fn criterion_6() -> Outcome {
    let mut checks: Vec<Check> = (1..=6).map(symmetric_tables_agree).collect();
    checks.extend([(2, 2), (2, 3), (3, 2)].map(|(l, k)| wreath_tables_agree(l, k)));
    let bad = failed(&checks);
    ensure(bad.is_empty(), bad.join("; "))?;
    let e = |x: klambda_oracle::OracleError| x.to_string();
    let mut frob = 0;
    for sizes in [vec![1, 1], vec![2, 1], vec![2, 2], vec![3, 1], vec![2, 2, 2], vec![3, 3], vec![4, 2]] {
        let g = build_symmetric(sizes.iter().sum()).map_err(e)?;
        ensure(frobenius_holds(&build_young(&sizes).map_err(e)?, &g).map_err(e)?, format!("Frobenius {sizes:?}"))?;
        frob += 1;
    }
    for (l, k) in [(2, 2), (2, 3), (3, 2)] {
        let g = build_symmetric(l * k).map_err(e)?;
        ensure(frobenius_holds(&build_wreath(l, k).map_err(e)?, &g).map_err(e)?, format!("Frobenius wreath {l},{k}"))?;
        frob += 1;
    }
    for (n, m) in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2)] {
        let g = build_young(&[m, n * m]).map_err(e)?;
        ensure(frobenius_holds(&build_wreath_diagonal(n, m).map_err(e)?, &g).map_err(e)?, format!("Frobenius diagonal {n},{m}"))?;
        frob += 1;
    }
    let mut mackey = 0;
    for n in 1..=3 {
        for l in 2..=6 {
            if n * l > 6 {
                continue;
            }
            for i in 1..l {
                let r = mackey_instance(n, i, l - i).map_err(e)?;
                ensure(r.holds(), format!("Mackey n={n} i={i} j={}", l - i))?;
                mackey += 1;
            }
        }
    }
    Ok(format!("{} tables, {frob} Frobenius pairs, {mackey} Mackey instances", checks.len()))
}

fn criterion_7() -> Outcome {
    let mut out = Vec::new();
    for name in ["excise_all.toml", "excise_points.toml", "excise_cp2.toml"] {
        let r = excision_check(&load(name), 6).map_err(|e| e.to_string())?;
        ensure(r.holds, format!("{name}: {:?} vs {:?}", r.left_ranks, r.right_ranks))?;
        out.push(format!("{name} {:?}", r.left_ranks));
    }
    Ok(out.join(", "))
}

fn criterion_8() -> Outcome {
    let cases = common::corpus();
    let bad = common::mismatches(&cases);
    ensure(bad.is_empty(), format!("golden mismatches: {bad:?}"))?;
    for case in &cases {
        ensure(common::snapshot(case) == common::snapshot(case), format!("{} not repeatable", case.name))?;
    }
    Ok(format!("{} commands byte-identical", cases.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("free λ-ring on one generator", criterion_1),
        ("λ-ring axioms", criterion_2),
        ("τ-ring axioms with oracle confirmation", criterion_3),
        ("closed form λⁿ = eₙ∘x", criterion_4),
        ("filtration rank loop", criterion_5),
        ("oracle equivalence, Frobenius, Mackey", criterion_6),
        ("excision", criterion_7),
        ("CLI golden corpus", criterion_8),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {} PASS  {name} ({secs:.2} s): {detail}", i + 1),
            Err(why) => {
                all = false;
                println!("criterion {} FAIL  {name} ({secs:.2} s): {why}", i + 1);
            }
        }
    }
    if !all {
        std::process::exit(1);
    }
}
