//! The `klambda` command line: argument grammar, dispatch and output.
//!
//! Exit codes: 0 success, 1 argument or input error, 2 internal invariant
//! violation, 3 axiom violation found.

pub mod crosscheck;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use klambda_core::kmodel::{rank_table, CellComplex, FreeModel};
use klambda_core::lambda_tau::{
    check_lambda_axioms, check_tau_axioms, lambda_plethysm, tau_dot, tau_symfunc, universal_p,
    universal_q, AxiomReport, IntegerLambdaRing, LambdaBudget, SymFuncLambdaRing, TauBudget, TauQ,
    TauSeries,
};
use klambda_core::rep_sn::{character_table, lr_product, mn_character, RepRecord, RepSn};
use klambda_core::symcore::{parse_symfunc, Basis, Expansion, Partition, SymFunc, SymRecord};
use klambda_core::wreath::{wreath_induce, wreath_restrict, wreath_table, WreathRecord, WreathRep};
use klambda_core::Error;

pub const DEFAULT_CAP: usize = 12;

#[derive(Parser, Debug)]
#[command(name = "klambda", version, about = "Exact λ-ring and τ-ring calculator")]
struct Cli {
    /// Emit structured JSON records instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest degree any argument or result may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Plethysm f∘g.
    Plethysm {
        f: String,
        g: String,
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// Product f·g.
    Mult {
        f: String,
        g: String,
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// Kronecker (internal) product f∗g.
    Kron {
        f: String,
        g: String,
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// Rewrite f in the Schur basis.
    SchurExpand { f: String },
    /// Character value χ^λ(μ).
    Char { lambda: String, mu: String },
    /// Littlewood–Richardson expansion of s_λ s_μ.
    Lr { lambda: String, mu: String },
    /// λⁿ(f) = eₙ∘f.
    Lambda {
        n: usize,
        f: String,
        #[arg(long, default_value = "s")]
        basis: String,
    },
    /// τ(f) truncated at Σ_m.
    Tau {
        f: String,
        #[arg(long)]
        max: usize,
    },
    /// τ̇ applied to τ(f) at the given (l,k) pairs.
    Taudot {
        f: String,
        /// Comma-separated `l:k` pairs.
        #[arg(long)]
        pairs: Option<String>,
    },
    /// □ applied to τ(f) at the given (l,k) pairs.
    Box {
        f: String,
        /// Comma-separated `l:k` pairs.
        #[arg(long)]
        pairs: Option<String>,
    },
    /// Induce a representation of Σ_l≀Σ_k to Σ_lk.
    WreathInduce { l: usize, k: usize, phi: String },
    /// Restrict a representation of Σ_lk to Σ_l≀Σ_k.
    WreathRestrict { l: usize, k: usize, nu: String },
    /// The universal polynomial p_k.
    UniversalP { k: usize },
    /// The universal polynomial q_{k,l}.
    UniversalQ { k: usize, l: usize },
    /// Run an axiom suite.
    Axioms {
        suite: Suite,
        /// `key=value`; may be repeated.
        #[arg(long)]
        budget: Vec<String>,
    },
    /// Filtration rank table of a cell complex.
    KxRank {
        file: PathBuf,
        #[arg(long)]
        max: usize,
    },
    /// Character table of `S<n>` or `S<l>~S<k>`.
    CharTable {
        group: String,
        /// Compute by brute force on permutations instead of combinatorially.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Lambda,
    Tau,
}

enum Failure {
    Usage(String),
    Invariant(String),
    Axioms(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Invariant(_) => 2,
            Failure::Axioms(_) => 3,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Integrality { .. } | Error::NonIntegralMultiplicity { .. } => {
                Failure::Invariant(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

/// Runs one command. Output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Invariant(m) => format!("error: {m}\n"),
                Failure::Axioms(report) => {
                    let _ = out.write_all(report.as_bytes());
                    "error: axiom violations found\n".to_string()
                }
            };
            let _ = err.write_all(msg.as_bytes());
            f.code()
        }
    }
}

fn usage<T>(msg: impl Into<String>) -> std::result::Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn check_cap(what: &str, degree: usize, cap: usize) -> std::result::Result<(), Failure> {
    if degree > cap {
        return Err(Failure::Usage(format!("{what} reaches degree {degree}, above cap {cap}")));
    }
    Ok(())
}

fn max_degree(f: &SymFunc) -> usize {
    f.degrees().into_iter().max().unwrap_or(0)
}

fn sym(src: &str) -> std::result::Result<SymFunc, Failure> {
    Ok(parse_symfunc(src)?)
}

fn partition(src: &str) -> std::result::Result<Partition, Failure> {
    Ok(src.parse::<Partition>()?)
}

fn basis(src: &str) -> std::result::Result<Basis, Failure> {
    Ok(src.parse::<Basis>()?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records serialize");
    s.push('\n');
    s
}

fn emit_expansion(e: &Expansion, json: bool) -> String {
    if json {
        to_json(&SymRecord::from(e))
    } else {
        format!("{e}\n")
    }
}

fn sym_value(f: &SymFunc) -> Value {
    serde_json::to_value(SymRecord::from(&f.expand(Basis::S))).expect("records serialize")
}

fn render_s(f: &SymFunc) -> String {
    f.expand(Basis::S).to_string()
}

/// Parses `1:2,2:2`.
fn parse_pairs(src: &str) -> std::result::Result<Vec<(usize, usize)>, Failure> {
    src.split(',')
        .map(|item| {
            let (l, k) = item
                .trim()
                .split_once(':')
                .ok_or_else(|| Failure::Usage(format!("bad pair `{item}`, expected l:k")))?;
            match (l.trim().parse(), k.trim().parse()) {
                (Ok(l), Ok(k)) => Ok((l, k)),
                _ => usage(format!("bad pair `{item}`, expected l:k")),
            }
        })
        .collect()
}

fn tau_q_json(q: &TauQ<SymFunc>) -> Value {
    let components: Vec<Value> = q
        .components
        .iter()
        .map(|((l, k), comp)| {
            let terms: Vec<Value> = comp
                .iter()
                .map(|(phi, a)| json!({ "label": phi.to_string(), "coefficient": sym_value(a) }))
                .collect();
            json!({ "l": l, "k": k, "terms": terms })
        })
        .collect();
    json!({ "components": components })
}

fn tau_series_json(s: &TauSeries<SymFunc>) -> Value {
    let components: Vec<Value> = (0..=s.cap())
        .map(|m| {
            let terms: Vec<Value> = s
                .component(m)
                .iter()
                .map(|(mu, a)| json!({ "partition": mu, "coefficient": sym_value(a) }))
                .collect();
            json!({ "m": m, "terms": terms })
        })
        .collect();
    json!({ "cap": s.cap(), "components": components })
}

fn dispatch(cli: &Cli) -> Outcome {
    let cap = cli.cap;
    let json = cli.json;
    match &cli.command {
        Command::Plethysm { f, g, basis: b } => {
            let (f, g) = (sym(f)?, sym(g)?);
            check_cap("plethysm", max_degree(&f) * max_degree(&g), cap)?;
            Ok(emit_expansion(&f.plethysm(&g).expand(basis(b)?), json))
        }
        Command::Mult { f, g, basis: b } => {
            let (f, g) = (sym(f)?, sym(g)?);
            check_cap("product", max_degree(&f) + max_degree(&g), cap)?;
            Ok(emit_expansion(&f.multiply(&g).expand(basis(b)?), json))
        }
        Command::Kron { f, g, basis: b } => {
            let (f, g) = (sym(f)?, sym(g)?);
            check_cap("Kronecker product", max_degree(&f).max(max_degree(&g)), cap)?;
            Ok(emit_expansion(&f.kronecker(&g).expand(basis(b)?), json))
        }
        Command::SchurExpand { f } => {
            let f = sym(f)?;
            check_cap("input", max_degree(&f), cap)?;
            Ok(emit_expansion(&f.expand(Basis::S), json))
        }
        Command::Char { lambda, mu } => {
            let (lambda, mu) = (partition(lambda)?, partition(mu)?);
            check_cap("character", lambda.size(), cap)?;
            let v = mn_character(&lambda, &mu)?;
            Ok(if json {
                to_json(&json!({ "lambda": lambda, "mu": mu, "value": v }))
            } else {
                format!("{v}\n")
            })
        }
        Command::Lr { lambda, mu } => {
            let (lambda, mu) = (partition(lambda)?, partition(mu)?);
            check_cap("product", lambda.size() + mu.size(), cap)?;
            let mut e = Expansion::new(Basis::S);
            for (nu, c) in lr_product(&lambda, &mu).iter() {
                e.add_term(nu.clone(), BigRational::from(c.clone()));
            }
            Ok(emit_expansion(&e, json))
        }
        Command::Lambda { n, f, basis: b } => {
            let f = sym(f)?;
            check_cap("λ-operation", n * max_degree(&f), cap)?;
            Ok(emit_expansion(&lambda_plethysm(*n, &f).expand(basis(b)?), json))
        }
        Command::Tau { f, max } => {
            let f = sym(f)?;
            check_cap("series", *max, cap)?;
            check_cap("series coefficient", max * max_degree(&f), cap)?;
            let t = tau_symfunc(&f, *max)?;
            Ok(if json { to_json(&tau_series_json(&t)) } else { t.render(render_s) })
        }
        Command::Taudot { f, pairs } | Command::Box { f, pairs } => {
            let f = sym(f)?;
            let pairs = match pairs {
                Some(p) => parse_pairs(p)?,
                None => TauBudget::default().axiom5_pairs,
            };
            let top = pairs.iter().map(|&(l, k)| l * k).max().unwrap_or(0);
            check_cap("wreath component", top, cap)?;
            check_cap("series coefficient", top * max_degree(&f), cap)?;
            let q = if matches!(cli.command, Command::Box { .. }) {
                tau_symfunc(&f, top)?.box_map(&pairs)?
            } else {
                let lmax = pairs.iter().map(|p| p.0).max().unwrap_or(0);
                tau_dot(&tau_symfunc(&f, lmax)?, &pairs)?
            };
            Ok(if json { to_json(&tau_q_json(&q)) } else { q.render(render_s) })
        }
        Command::WreathInduce { l, k, phi } => {
            check_cap("wreath product", l * k, cap)?;
            let w = WreathRep::parse(*l, *k, phi)?;
            let r = wreath_induce(&w)?;
            Ok(if json { to_json(&RepRecord::from(&r)) } else { format!("{r}\n") })
        }
        Command::WreathRestrict { l, k, nu } => {
            check_cap("wreath product", l * k, cap)?;
            let r: RepSn = if nu.trim_start().starts_with("R(") {
                nu.parse()?
            } else {
                RepSn::irreducible(partition(nu)?)
            };
            let w = wreath_restrict(&r, *l, *k)?;
            Ok(if json { to_json(&WreathRecord::from(&w)) } else { format!("{w}\n") })
        }
        Command::UniversalP { k } => {
            check_cap("universal polynomial", *k, cap)?;
            let p = universal_p(*k);
            Ok(if json {
                let terms: Vec<Value> = p
                    .terms
                    .iter()
                    .map(|((a, b), c)| json!({ "x": a, "y": b, "coefficient": c.to_string() }))
                    .collect();
                to_json(&json!({ "k": k, "terms": terms }))
            } else {
                format!("{p}\n")
            })
        }
        Command::UniversalQ { k, l } => {
            check_cap("universal polynomial", k * l, cap)?;
            let q = universal_q(*k, *l);
            Ok(if json {
                let terms: Vec<Value> = q
                    .terms
                    .iter()
                    .map(|(a, c)| json!({ "x": a, "coefficient": c.to_string() }))
                    .collect();
                to_json(&json!({ "k": k, "l": l, "terms": terms }))
            } else {
                format!("{q}\n")
            })
        }
        Command::Axioms { suite, budget } => {
            let report = match suite {
                Suite::Lambda => lambda_suite(budget, cap)?,
                Suite::Tau => {
                    let b = tau_budget(budget)?;
                    check_cap("series", b.cap, cap)?;
                    check_tau_axioms(&b)
                }
            };
            let text = if json { to_json(&report) } else { report.to_string() };
            if report.is_clean() {
                Ok(text)
            } else {
                Err(Failure::Axioms(text))
            }
        }
        Command::KxRank { file, max } => {
            check_cap("rank table", *max, cap)?;
            let src = std::fs::read_to_string(file)
                .map_err(|e| Failure::Usage(format!("{}: {e}", file.display())))?;
            let cx = CellComplex::from_toml_str(&src)?;
            let table = rank_table(&cx, *max)?;
            let text = if json {
                let rows: Vec<Value> = table
                    .rows
                    .iter()
                    .map(|r| {
                        let split: Vec<Value> = r
                            .entries
                            .iter()
                            .enumerate()
                            .map(|(k, rank)| json!({ "N": r.n, "k": k, "rank": rank }))
                            .collect();
                        json!({ "N": r.n, "total": r.total, "split": split })
                    })
                    .collect();
                to_json(&json!({ "complex": cx.name, "rows": rows }))
            } else {
                table.to_string()
            };
            if !table.consistent() {
                return Err(Failure::Invariant(format!("split does not sum to rank\n{text}")));
            }
            Ok(text)
        }
        Command::CharTable { group, oracle } => char_table(group, *oracle, cap, json),
    }
}

fn budget_pairs(items: &[String]) -> std::result::Result<Vec<(String, String)>, Failure> {
    items
        .iter()
        .map(|s| match s.split_once('=') {
            Some((k, v)) => Ok((k.trim().to_string(), v.trim().to_string())),
            None => usage(format!("bad budget item `{s}`, expected key=value")),
        })
        .collect()
}

fn budget_num(key: &str, v: &str) -> std::result::Result<usize, Failure> {
    v.parse().map_err(|_| Failure::Usage(format!("budget `{key}` needs a number, got `{v}`")))
}

/// Keys: `instance` (int, sym or model), `max-abs`, `k`, `kl`, `degree`,
/// `generators`.
fn lambda_suite(items: &[String], cap: usize) -> std::result::Result<AxiomReport, Failure> {
    let mut instance = "int".to_string();
    let (mut max_abs, mut k, mut kl, mut degree, mut generators) = (None, None, None, None, 2);
    for (key, v) in budget_pairs(items)? {
        match key.as_str() {
            "instance" => instance = v,
            "max-abs" => max_abs = Some(budget_num(&key, &v)?),
            "k" => k = Some(budget_num(&key, &v)?),
            "kl" => kl = Some(budget_num(&key, &v)?),
            "degree" => degree = Some(budget_num(&key, &v)?),
            "generators" => generators = budget_num(&key, &v)?,
            _ => return usage(format!("unknown lambda budget key `{key}`")),
        }
    }
    let small = instance != "int";
    let budget = LambdaBudget {
        max_k: k.unwrap_or(if small { 2 } else { 3 }),
        max_kl: kl.unwrap_or(if small { 2 } else { 3 }),
    };
    check_cap("λ-operation", budget.max_k.max(budget.max_kl * budget.max_kl), cap)?;
    Ok(match instance.as_str() {
        "int" => {
            let ring = IntegerLambdaRing { max_abs: max_abs.unwrap_or(6) as i64 };
            check_lambda_axioms(&ring, budget)
        }
        "sym" => {
            let d = degree.unwrap_or(2);
            check_cap("sample", d * budget.max_kl * budget.max_kl, cap)?;
            check_lambda_axioms(&SymFuncLambdaRing { max_degree: d }, budget)
        }
        "model" => {
            let mut m = FreeModel::on_generators(generators, cap);
            m.sample_degree = degree.unwrap_or(4);
            check_lambda_axioms(&m, budget)
        }
        other => return usage(format!("unknown instance `{other}`, expected int, sym or model")),
    })
}

/// Keys: `degree`, `cap`, `pairs` (`l:k` list), `a5-degree`.
fn tau_budget(items: &[String]) -> std::result::Result<TauBudget, Failure> {
    let mut b = TauBudget::default();
    for (key, v) in budget_pairs(items)? {
        match key.as_str() {
            "degree" => b.max_degree = budget_num(&key, &v)?,
            "cap" => b.cap = budget_num(&key, &v)?,
            "pairs" => b.axiom5_pairs = parse_pairs(&v)?,
            "a5-degree" => b.axiom5_max_degree = budget_num(&key, &v)?,
            _ => return usage(format!("unknown tau budget key `{key}`")),
        }
    }
    Ok(b)
}

/// `S4`, `S2~S3` or `S2wrS3`.
fn parse_group(text: &str) -> std::result::Result<(usize, Option<usize>), Failure> {
    let bad = || Failure::Usage(format!("bad group `{text}`, expected S<n> or S<l>~S<k>"));
    let num = |s: &str| -> std::result::Result<usize, Failure> {
        s.trim().strip_prefix(['S', 's']).ok_or_else(bad)?.parse().map_err(|_| bad())
    };
    let normalized = text.replace("wr", "~");
    match normalized.split_once('~') {
        None => Ok((num(&normalized)?, None)),
        Some((a, b)) => Ok((num(a)?, Some(num(b)?))),
    }
}

fn format_table(title: &str, classes: &[String], rows: &[(String, Vec<BigInt>)]) -> String {
    let label_w = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    let widths: Vec<usize> = classes
        .iter()
        .enumerate()
        .map(|(j, c)| {
            rows.iter()
                .map(|r| r.1[j].to_string().len())
                .chain([c.chars().count()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w - s.chars().count()));
    let mut out = format!("{title}\n");
    let mut head = " ".repeat(label_w);
    for (c, w) in classes.iter().zip(&widths) {
        head.push_str("  ");
        head.push_str(&pad(c, *w));
    }
    out.push_str(head.trim_end());
    out.push('\n');
    for (label, values) in rows {
        let mut line = format!("{label}{}", " ".repeat(label_w - label.chars().count()));
        for (v, w) in values.iter().zip(&widths) {
            line.push_str("  ");
            line.push_str(&pad(&v.to_string(), *w));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

fn integer_values(f: &klambda_oracle::ClassFunction) -> std::result::Result<Vec<BigInt>, Failure> {
    f.values
        .iter()
        .map(|v| {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Failure::Invariant(format!("non-integral character value {v}")))
            }
        })
        .collect()
}

/// Rows and columns follow the combinatorial labelling either way, so the
/// two sources print identically when they agree.
fn char_table(group: &str, oracle: bool, cap: usize, json: bool) -> Outcome {
    let (a, b) = parse_group(group)?;
    let (title, classes, rows): (String, Vec<String>, Vec<(String, Vec<BigInt>)>) = match b {
        None => {
            let n = a;
            check_cap("group degree", n, cap)?;
            let t = character_table(n);
            let classes: Vec<String> = t.partitions().iter().map(|p| p.to_string()).collect();
            let rows = if oracle {
                let o = crosscheck::OracleSymmetric::new(n).map_err(Failure::Invariant)?;
                let col: Vec<usize> = t
                    .partitions()
                    .iter()
                    .map(|mu| {
                        o.group
                            .classes()
                            .iter()
                            .position(|c| c.rep.cycle_type() == mu.parts())
                            .expect("every cycle type occurs")
                    })
                    .collect();
                let mut rows = Vec::new();
                for lambda in t.partitions() {
                    let (_, f) = o.rows.iter().find(|(l, _)| l == lambda).ok_or_else(|| {
                        Failure::Invariant(format!("oracle has no row {lambda}"))
                    })?;
                    let vals = integer_values(f)?;
                    rows.push((lambda.to_string(), col.iter().map(|&j| vals[j].clone()).collect()));
                }
                rows
            } else {
                t.partitions()
                    .iter()
                    .map(|l| (l.to_string(), t.row(l).iter().map(|&v| BigInt::from(v)).collect()))
                    .collect()
            };
            (format!("S_{n}"), classes, rows)
        }
        Some(k) => {
            let l = a;
            check_cap("group degree", l * k, cap)?;
            let t = wreath_table(l, k);
            let classes: Vec<String> = t.classes().iter().map(|c| c.to_string()).collect();
            let rows = if oracle {
                let o = crosscheck::OracleWreath::new(l, k).map_err(Failure::Invariant)?;
                let col: Vec<usize> = t
                    .classes()
                    .iter()
                    .map(|c| o.labels.iter().position(|x| x == c).expect("labels biject"))
                    .collect();
                let mut rows = Vec::new();
                for phi in t.irreducibles() {
                    let vals = integer_values(o.row(phi))?;
                    rows.push((phi.to_string(), col.iter().map(|&j| vals[j].clone()).collect()));
                }
                rows
            } else {
                t.irreducibles().iter().map(|p| (p.to_string(), t.row(p).to_vec())).collect()
            };
            (format!("S_{l}~S_{k}"), classes, rows)
        }
    };
    Ok(if json {
        let rows: Vec<Value> = rows
            .iter()
            .map(|(label, v)| {
                json!({ "label": label, "values": v.iter().map(|x| x.to_string()).collect::<Vec<_>>() })
            })
            .collect();
        to_json(&json!({ "group": title, "classes": classes, "rows": rows }))
    } else {
        format_table(&title, &classes, &rows)
    })
}
