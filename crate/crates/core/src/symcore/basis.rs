//! Change of basis among the monomial, elementary, complete, power-sum and
//! Schur bases. Transition data is computed once per degree and cached.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::linalg::invert;
use super::partition::{gen_partitions, Partition};
use super::symfunc::{add_into, rat, SymFunc};
use crate::error::{Error, Result};
use crate::rep_sn::character::character_table;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    M,
    E,
    H,
    P,
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn letter(self) -> char {
        match self {
            Basis::M => 'm',
            Basis::E => 'e',
            Basis::H => 'h',
            Basis::P => 'p',
            Basis::S => 's',
        }
    }

    pub fn from_letter(c: char) -> Option<Basis> {
        match c {
            'm' => Some(Basis::M),
            'e' => Some(Basis::E),
            'h' => Some(Basis::H),
            'p' => Some(Basis::P),
            's' => Some(Basis::S),
            _ => None,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Basis> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => Basis::from_letter(c),
            _ => None,
        }
        .ok_or_else(|| Error::Parse(format!("unknown basis `{s}` (expected m, e, h, p or s)")))
    }
}

/// Transition data for one basis in one degree.
struct Transition {
    /// `b_λ` written in power sums.
    to_p: HashMap<Partition, SymFunc>,
    /// `p_μ` written in the basis `b`.
    from_p: HashMap<Partition, BTreeMap<Partition, BigRational>>,
}

type Cache = Mutex<HashMap<(Basis, usize), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn transition(basis: Basis, n: usize) -> Arc<Transition> {
    if let Some(t) = cache().lock().unwrap().get(&(basis, n)) {
        return t.clone();
    }
    let t = Arc::new(build_transition(basis, n));
    cache()
        .lock()
        .unwrap()
        .entry((basis, n))
        .or_insert(t)
        .clone()
}

fn complete_p(n: usize) -> SymFunc {
    SymFunc::from_power_sums(
        gen_partitions(n)
            .into_iter()
            .map(|mu| {
                let z = BigRational::new(BigInt::one(), mu.z());
                (mu, z)
            }),
    )
}

fn elementary_p(n: usize) -> SymFunc {
    SymFunc::from_power_sums(gen_partitions(n).into_iter().map(|mu| {
        let z = BigRational::new(BigInt::from(mu.sign()), mu.z());
        (mu, z)
    }))
}

/// Number of ways to distribute the parts `mu[i..]` over rows with
/// remaining capacities `rest`, each row filled exactly.
fn fill_count(
    mu: &[usize],
    i: usize,
    rest: &mut Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
) -> BigInt {
    if i == mu.len() {
        return if rest.iter().all(|&r| r == 0) { BigInt::one() } else { BigInt::zero() };
    }
    let mut key = rest.clone();
    key.sort_unstable();
    if let Some(v) = memo.get(&(i, key.clone())) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for row in 0..rest.len() {
        if rest[row] >= mu[i] {
            rest[row] -= mu[i];
            total += fill_count(mu, i + 1, rest, memo);
            rest[row] += mu[i];
        }
    }
    memo.insert((i, key), total.clone());
    total
}

fn products(n: usize, single: impl Fn(usize) -> SymFunc) -> HashMap<Partition, SymFunc> {
    let factors: Vec<SymFunc> = (0..=n).map(&single).collect();
    gen_partitions(n)
        .into_iter()
        .map(|lambda| {
            let f = lambda
                .parts()
                .iter()
                .fold(SymFunc::one(), |acc, &k| acc.multiply(&factors[k]));
            (lambda, f)
        })
        .collect()
}

fn invert_to_p(
    n: usize,
    to_p: &HashMap<Partition, SymFunc>,
) -> HashMap<Partition, BTreeMap<Partition, BigRational>> {
    let parts = gen_partitions(n);
    let matrix: Vec<Vec<BigRational>> = parts
        .iter()
        .map(|lambda| parts.iter().map(|mu| to_p[lambda].coeff(mu)).collect())
        .collect();
    let inv = invert(&matrix).expect("basis transition matrix is invertible");
    // rows of `matrix` are b_λ in p, so p = inv^T applied to b
    parts
        .iter()
        .enumerate()
        .map(|(j, mu)| {
            let mut row = BTreeMap::new();
            for (i, lambda) in parts.iter().enumerate() {
                add_into(&mut row, lambda.clone(), inv[j][i].clone());
            }
            (mu.clone(), row)
        })
        .collect()
}

fn build_transition(basis: Basis, n: usize) -> Transition {
    let parts = gen_partitions(n);
    match basis {
        Basis::P => Transition {
            to_p: parts
                .iter()
                .map(|l| (l.clone(), SymFunc::power_sum(l.clone())))
                .collect(),
            from_p: parts
                .iter()
                .map(|l| (l.clone(), BTreeMap::from([(l.clone(), BigRational::one())])))
                .collect(),
        },
        Basis::S => {
            let table = character_table(n);
            let to_p = parts
                .iter()
                .map(|lambda| {
                    let f = SymFunc::from_power_sums(parts.iter().map(|mu| {
                        (mu.clone(), BigRational::new(table.value(lambda, mu).into(), mu.z()))
                    }));
                    (lambda.clone(), f)
                })
                .collect();
            let from_p = parts
                .iter()
                .map(|mu| {
                    let mut row = BTreeMap::new();
                    for lambda in &parts {
                        add_into(&mut row, lambda.clone(), rat(table.value(lambda, mu)));
                    }
                    (mu.clone(), row)
                })
                .collect();
            Transition { to_p, from_p }
        }
        Basis::H | Basis::E => {
            let single = if basis == Basis::H { complete_p } else { elementary_p };
            let to_p = products(n, single);
            let from_p = invert_to_p(n, &to_p);
            Transition { to_p, from_p }
        }
        Basis::M => {
            let mut from_p = HashMap::new();
            for mu in &parts {
                let mut row = BTreeMap::new();
                for lambda in &parts {
                    let mut memo = HashMap::new();
                    let mut rest = lambda.parts().to_vec();
                    let c = fill_count(mu.parts(), 0, &mut rest, &mut memo);
                    add_into(&mut row, lambda.clone(), BigRational::from_integer(c));
                }
                from_p.insert(mu.clone(), row);
            }
            let matrix: Vec<Vec<BigRational>> = parts
                .iter()
                .map(|mu| {
                    parts
                        .iter()
                        .map(|l| from_p[mu].get(l).cloned().unwrap_or_else(BigRational::zero))
                        .collect()
                })
                .collect();
            let inv = invert(&matrix).expect("monomial transition matrix is invertible");
            let to_p = parts
                .iter()
                .enumerate()
                .map(|(i, lambda)| {
                    let f = SymFunc::from_power_sums(
                        parts.iter().enumerate().map(|(j, mu)| (mu.clone(), inv[i][j].clone())),
                    );
                    (lambda.clone(), f)
                })
                .collect();
            Transition { to_p, from_p }
        }
    }
}

/// A symmetric function written in one of the five classical bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion {
    pub basis: Basis,
    pub terms: BTreeMap<Partition, BigRational>,
}

impl Expansion {
    pub fn new(basis: Basis) -> Self {
        Expansion { basis, terms: BTreeMap::new() }
    }

    pub fn single(basis: Basis, lambda: Partition) -> Self {
        Expansion { basis, terms: BTreeMap::from([(lambda, BigRational::one())]) }
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        add_into(&mut self.terms, lambda, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn to_symfunc(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lambda, c) in &self.terms {
            let t = transition(self.basis, lambda.size());
            for (mu, d) in t.to_p[lambda].terms() {
                out.add_term(mu.clone(), c * d);
            }
        }
        out
    }

    /// Coefficients as integers, or an integrality error naming the first
    /// offending term.
    pub fn integral_coefficients(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.terms
            .iter()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok((k.clone(), c.to_integer()))
                } else {
                    Err(Error::Integrality {
                        basis: self.basis.to_string(),
                        key: k.to_string(),
                        coefficient: c.to_string(),
                    })
                }
            })
            .collect()
    }
}

/// Rewrites `f` in the basis `to`; exact and invertible.
pub fn convert(f: &Expansion, to: Basis) -> Expansion {
    if f.basis == to {
        return f.clone();
    }
    f.to_symfunc().expand(to)
}

impl SymFunc {
    /// This element written in the given basis.
    pub fn expand(&self, basis: Basis) -> Expansion {
        let mut out = Expansion::new(basis);
        for (mu, c) in self.terms() {
            let t = transition(basis, mu.size());
            for (lambda, d) in &t.from_p[mu] {
                out.add_term(lambda.clone(), c * d);
            }
        }
        out
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> SymFunc {
        transition(basis, lambda.size()).to_p[&lambda].clone()
    }

    pub fn schur(lambda: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::S, lambda)
    }

    /// `h_λ`.
    pub fn complete(lambda: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::H, lambda)
    }

    /// `e_λ`.
    pub fn elementary(lambda: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::E, lambda)
    }

    pub fn monomial(lambda: Partition) -> SymFunc {
        SymFunc::basis_element(Basis::M, lambda)
    }

    /// Integral Schur coefficients, as required of any virtual character.
    pub fn schur_integral(&self) -> Result<BTreeMap<Partition, BigInt>> {
        self.expand(Basis::S).integral_coefficients()
    }
}
