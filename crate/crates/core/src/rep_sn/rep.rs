use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::character::character_table;
use crate::error::{Error, Result};
use crate::symcore::{add_into, format_terms, Basis, Partition, SymFunc, SymTensor};

/// A virtual representation of `Σₙ`: integer multiplicities of irreducibles.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RepSn {
    n: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl RepSn {
    pub fn zero(n: usize) -> Self {
        RepSn { n, coeffs: BTreeMap::new() }
    }

    pub fn irreducible(lambda: Partition) -> Self {
        let mut r = RepSn::zero(lambda.size());
        r.coeffs.insert(lambda, BigInt::one());
        r
    }

    pub fn trivial(n: usize) -> Self {
        RepSn::irreducible(Partition::row(n))
    }

    pub fn sign(n: usize) -> Self {
        RepSn::irreducible(Partition::column(n))
    }

    /// The regular representation: each irreducible with multiplicity equal
    /// to its dimension.
    pub fn regular(n: usize) -> Self {
        let t = character_table(n);
        let id = Partition::column(n);
        let mut r = RepSn::zero(n);
        for lambda in t.partitions() {
            r.coeffs.insert(lambda.clone(), BigInt::from(t.value(lambda, &id)));
        }
        r
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut r = RepSn::zero(n);
        for (k, c) in terms {
            if k.size() != n {
                return Err(Error::SizeMismatch { expected: n, found: k.size() });
            }
            add_into(&mut r.coeffs, k, c);
        }
        Ok(r)
    }

    /// Adds `c·[λ]`; panics if `λ` is not a partition of `n`.
    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        assert_eq!(lambda.size(), self.n, "partition of the wrong size");
        add_into(&mut self.coeffs, lambda, c);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// No negative multiplicities.
    pub fn is_genuine(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> RepSn {
        let mut out = RepSn::zero(self.n);
        for (k, v) in &self.coeffs {
            add_into(&mut out.coeffs, k.clone(), v * c);
        }
        out
    }

    pub fn dimension(&self) -> BigInt {
        let t = character_table(self.n);
        let id = Partition::column(self.n);
        self.coeffs
            .iter()
            .map(|(k, c)| c * t.value(k, &id))
            .sum()
    }

    /// Character values on the classes of `Σₙ`, in descending lex order.
    pub fn class_function(&self) -> Vec<BigInt> {
        let t = character_table(self.n);
        (0..t.partitions().len())
            .map(|col| {
                self.coeffs
                    .iter()
                    .map(|(k, c)| c * t.value_at(t.index_of(k).unwrap(), col))
                    .sum()
            })
            .collect()
    }

    /// Decomposes a class function given on classes in descending lex order.
    pub fn from_class_function(n: usize, values: &[BigRational]) -> Result<RepSn> {
        let t = character_table(n);
        let parts = t.partitions();
        assert_eq!(values.len(), parts.len());
        let mut out = RepSn::zero(n);
        for (row, lambda) in parts.iter().enumerate() {
            let mut m = BigRational::zero();
            for (col, mu) in parts.iter().enumerate() {
                m += &values[col] * BigInt::from(t.value_at(row, col)) / BigRational::from(mu.z());
            }
            if !m.is_integer() {
                return Err(Error::NonIntegralMultiplicity {
                    label: lambda.to_string(),
                    value: m.to_string(),
                });
            }
            add_into(&mut out.coeffs, lambda.clone(), m.to_integer());
        }
        Ok(out)
    }

    /// `sgnₙ ⊗ self`, which conjugates every label.
    pub fn sign_twist(&self) -> RepSn {
        let mut out = RepSn::zero(self.n);
        for (k, c) in &self.coeffs {
            out.coeffs.insert(k.conjugate(), c.clone());
        }
        out
    }
}

fn assert_same_n(a: &RepSn, b: &RepSn) {
    assert_eq!(a.n, b.n, "representations of different symmetric groups");
}

impl Add for &RepSn {
    type Output = RepSn;
    fn add(self, rhs: &RepSn) -> RepSn {
        assert_same_n(self, rhs);
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            add_into(&mut out.coeffs, k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &RepSn {
    type Output = RepSn;
    fn sub(self, rhs: &RepSn) -> RepSn {
        self + &(-rhs)
    }
}

impl Neg for &RepSn {
    type Output = RepSn;
    fn neg(self) -> RepSn {
        self.scale(&-BigInt::one())
    }
}

/// The characteristic map: `[λ] ↦ s_λ`.
pub fn ch(a: &RepSn) -> SymFunc {
    let mut out = SymFunc::zero();
    for (lambda, c) in &a.coeffs {
        let s = SymFunc::schur(lambda.clone());
        out = &out + &s.scale(&BigRational::from(c.clone()));
    }
    out
}

/// Inverse of [`ch`] on a homogeneous element of degree `n` with integral
/// Schur coefficients.
pub fn ch_inverse(f: &SymFunc, n: usize) -> Result<RepSn> {
    if !f.is_homogeneous_of(n) {
        return Err(Error::NotHomogeneous(n));
    }
    let coeffs = f.schur_integral()?;
    Ok(RepSn { n, coeffs })
}

type LrCache = Mutex<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, BigInt>>>>;

/// `s_λ s_μ` in the Schur basis: the Littlewood–Richardson coefficients
/// `c^ν_{λμ}` for all `ν`. Cached.
pub fn lr_product(lambda: &Partition, mu: &Partition) -> Arc<BTreeMap<Partition, BigInt>> {
    static CACHE: OnceLock<LrCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = if lambda <= mu { (lambda.clone(), mu.clone()) } else { (mu.clone(), lambda.clone()) };
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return v.clone();
    }
    let prod = SymFunc::schur(key.0.clone()).multiply(&SymFunc::schur(key.1.clone()));
    let value = Arc::new(
        prod.schur_integral()
            .expect("Littlewood-Richardson coefficients are integers"),
    );
    cache.lock().unwrap().insert(key, value.clone());
    value
}

pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if lambda.size() + mu.size() != nu.size() {
        return BigInt::zero();
    }
    lr_product(lambda, mu).get(nu).cloned().unwrap_or_else(BigInt::zero)
}

type KronCache = Mutex<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, BigInt>>>>;

/// `[λ] ⊗ [μ]` decomposed: the Kronecker coefficients `g_{λμν}`. Cached.
pub fn kronecker_coefficients(
    lambda: &Partition,
    mu: &Partition,
) -> Result<Arc<BTreeMap<Partition, BigInt>>> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch { expected: lambda.size(), found: mu.size() });
    }
    static CACHE: OnceLock<KronCache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let key = if lambda <= mu { (lambda.clone(), mu.clone()) } else { (mu.clone(), lambda.clone()) };
    if let Some(v) = cache.lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let n = lambda.size();
    let t = character_table(n);
    let a = t.row(&key.0);
    let b = t.row(&key.1);
    let values: Vec<BigRational> = a
        .iter()
        .zip(b)
        .map(|(x, y)| BigRational::from(BigInt::from(x * y)))
        .collect();
    let rep = RepSn::from_class_function(n, &values)?;
    let value = Arc::new(rep.coeffs);
    cache.lock().unwrap().insert(key, value.clone());
    Ok(value)
}

/// Induction product across `Σ_i × Σ_j ≤ Σ_{i+j}`.
pub fn induction_product(a: &RepSn, b: &RepSn) -> RepSn {
    let mut out = RepSn::zero(a.n + b.n);
    for (la, ca) in &a.coeffs {
        for (lb, cb) in &b.coeffs {
            let c = ca * cb;
            for (nu, m) in lr_product(la, lb).iter() {
                add_into(&mut out.coeffs, nu.clone(), &c * m);
            }
        }
    }
    out
}

/// Internal tensor product over the same `Σₙ`.
pub fn internal_product(a: &RepSn, b: &RepSn) -> Result<RepSn> {
    if a.n != b.n {
        return Err(Error::SizeMismatch { expected: a.n, found: b.n });
    }
    let mut out = RepSn::zero(a.n);
    for (la, ca) in &a.coeffs {
        for (lb, cb) in &b.coeffs {
            let c = ca * cb;
            for (nu, m) in kronecker_coefficients(la, lb)?.iter() {
                add_into(&mut out.coeffs, nu.clone(), &c * m);
            }
        }
    }
    Ok(out)
}

/// The multiplicity of `sgnₙ`.
pub fn sign_projection_g(a: &RepSn) -> BigInt {
    a.coeff(&Partition::column(a.n))
}

/// An element of `⊕_{i+j=n} R(Σ_i) ⊗ R(Σ_j)`, keyed by pairs of labels.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepTensor {
    pub terms: BTreeMap<(Partition, Partition), BigInt>,
}

impl RepTensor {
    pub fn add_term(&mut self, left: Partition, right: Partition, c: BigInt) {
        add_into(&mut self.terms, (left, right), c);
    }

    /// The `(i, j)` component.
    pub fn component(&self, i: usize, j: usize) -> RepTensor {
        RepTensor {
            terms: self
                .terms
                .iter()
                .filter(|((a, b), _)| a.size() == i && b.size() == j)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Pairs with `x ⊗ y` using the multiplicity (Hall) pairing.
    pub fn pair(&self, x: &RepSn, y: &RepSn) -> BigInt {
        self.terms
            .iter()
            .map(|((a, b), c)| c * x.coeff(a) * y.coeff(b))
            .sum()
    }

    /// Expands a tensor of symmetric functions in the basis `s ⊗ s`.
    pub fn from_sym_tensor(t: &SymTensor) -> Result<RepTensor> {
        let mut rational: BTreeMap<(Partition, Partition), BigRational> = BTreeMap::new();
        // group by left factor so each right factor is converted once
        let mut by_left: BTreeMap<Partition, SymFunc> = BTreeMap::new();
        for ((a, b), c) in t.terms() {
            let entry = by_left.entry(a.clone()).or_default();
            entry.add_term(b.clone(), c.clone());
        }
        for (a, right) in by_left {
            let left = SymFunc::power_sum(a).expand(Basis::S);
            let right = right.expand(Basis::S);
            for (la, ca) in &left.terms {
                for (lb, cb) in &right.terms {
                    add_into(&mut rational, (la.clone(), lb.clone()), ca * cb);
                }
            }
        }
        let mut out = RepTensor::default();
        for ((a, b), c) in rational {
            if !c.is_integer() {
                return Err(Error::Integrality {
                    basis: "s⊗s".into(),
                    key: format!("{a}⊗{b}"),
                    coefficient: c.to_string(),
                });
            }
            out.add_term(a, b, c.to_integer());
        }
        Ok(out)
    }
}

impl fmt::Display for RepTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational: Vec<((Partition, Partition), BigRational)> = self
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), BigRational::from(c.clone())))
            .collect();
        format_terms(f, rational.iter().map(|(k, c)| (k, c)), |(a, b)| format!("{a}⊗{b}"))
    }
}

/// Restriction to every `Σ_i × Σ_j ≤ Σₙ`, all splits at once.
pub fn restriction_coproduct(a: &RepSn) -> RepTensor {
    RepTensor::from_sym_tensor(&ch(a).coproduct())
        .expect("restriction of a virtual character is integral")
}

impl fmt::Display for RepSn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R(S_{}){{ ", self.n)?;
        let rational: Vec<(Partition, BigRational)> = self
            .coeffs
            .iter()
            .map(|(k, c)| (k.clone(), BigRational::from(c.clone())))
            .collect();
        format_terms(f, rational.iter().map(|(k, c)| (k, c)), |k| k.to_string())?;
        write!(f, " }}")
    }
}

impl fmt::Debug for RepSn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RepSn {
    type Err = Error;

    /// Parses `R(S_n){ c1*[λ1] + c2*[λ2] }`.
    fn from_str(s: &str) -> Result<RepSn> {
        let bad = || Error::Parse(format!("malformed representation `{s}`"));
        let s = s.trim();
        let rest = s.strip_prefix("R(S_").ok_or_else(bad)?;
        let close = rest.find(')').ok_or_else(bad)?;
        let n: usize = rest[..close].trim().parse().map_err(|_| bad())?;
        let body = rest[close + 1..].trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(bad)?
            .trim();
        let mut out = RepSn::zero(n);
        if body == "0" {
            return Ok(out);
        }
        let mut sign = BigInt::one();
        let mut rest = body;
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r;
        }
        loop {
            rest = rest.trim_start();
            let end = rest.find(']').ok_or_else(bad)? + 1;
            let term = rest[..end].trim();
            let (coef, label) = match term.split_once('*') {
                Some((c, l)) => (c.trim().parse::<BigInt>().map_err(|_| bad())?, l.trim()),
                None => (BigInt::one(), term),
            };
            let lambda: Partition = label.parse()?;
            if lambda.size() != n {
                return Err(Error::SizeMismatch { expected: n, found: lambda.size() });
            }
            add_into(&mut out.coeffs, lambda, &sign * coef);
            rest = rest[end..].trim_start();
            if rest.is_empty() {
                return Ok(out);
            }
            sign = match rest.as_bytes()[0] {
                b'+' => BigInt::one(),
                b'-' => -BigInt::one(),
                _ => return Err(bad()),
            };
            rest = &rest[1..];
        }
    }
}

/// Structured form: `{ n, terms: [{partition, numerator, denominator}] }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepRecord {
    pub n: usize,
    pub terms: Vec<crate::symcore::TermRecord>,
}

impl From<&RepSn> for RepRecord {
    fn from(r: &RepSn) -> Self {
        let rational: BTreeMap<Partition, BigRational> = r
            .coeffs
            .iter()
            .map(|(k, c)| (k.clone(), BigRational::from(c.clone())))
            .collect();
        RepRecord { n: r.n, terms: crate::symcore::term_records(&rational) }
    }
}

impl TryFrom<&RepRecord> for RepSn {
    type Error = Error;
    fn try_from(r: &RepRecord) -> Result<RepSn> {
        let terms = crate::symcore::terms_from_records(&r.terms)?;
        let mut out = RepSn::zero(r.n);
        for (k, c) in terms {
            if !c.is_integer() {
                return Err(Error::Integrality {
                    basis: "R(S_n)".into(),
                    key: k.to_string(),
                    coefficient: c.to_string(),
                });
            }
            if k.size() != r.n {
                return Err(Error::SizeMismatch { expected: r.n, found: k.size() });
            }
            out.coeffs.insert(k, c.to_integer());
        }
        Ok(out)
    }
}
