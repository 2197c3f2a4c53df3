use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rep_sn::character_table;
use crate::symcore::{add_into, format_terms, gen_partitions, Partition};

/// A map from partitions of `l` to partitions with total size `k`.
///
/// As a label of irreducibles of `Σ_l ≀ Σ_k` the keys index irreducibles of
/// `Σ_l`; as a class label the keys are cycle types of `Σ_l` and each value
/// lists the lengths of the cycles of the top permutation whose cycle
/// product has that type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    l: usize,
    k: usize,
    assignment: BTreeMap<Partition, Partition>,
}

/// Conjugacy classes of `Σ_l ≀ Σ_k` share the shape of multipartitions.
pub type ClassLabel = MultiPartition;

impl MultiPartition {
    /// Validating constructor; empty values are dropped.
    pub fn new(l: usize, entries: impl IntoIterator<Item = (Partition, Partition)>) -> Result<Self> {
        let mut assignment = BTreeMap::new();
        let mut k = 0;
        for (key, value) in entries {
            if key.size() != l {
                return Err(Error::SizeMismatch { expected: l, found: key.size() });
            }
            if value.is_empty() {
                continue;
            }
            k += value.size();
            if assignment.insert(key.clone(), value).is_some() {
                return Err(Error::Parse(format!("key {key} assigned twice")));
            }
        }
        Ok(MultiPartition { l, k, assignment })
    }

    /// `{(l) ↦ π}`: the trivial `Σ_l` content.
    pub fn trivial_content(l: usize, pi: Partition) -> Self {
        MultiPartition::new(l, [(Partition::row(l), pi)]).expect("row partition has size l")
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn assignment(&self) -> &BTreeMap<Partition, Partition> {
        &self.assignment
    }

    pub fn get(&self, key: &Partition) -> Option<&Partition> {
        self.assignment.get(key)
    }

    /// Centralizer order when read as a class label:
    /// `∏_ρ z_{Ψ(ρ)} · z_ρ^{ℓ(Ψ(ρ))}`.
    pub fn centralizer(&self) -> BigInt {
        self.assignment
            .iter()
            .map(|(rho, pi)| pi.z() * num_traits::pow(rho.z(), pi.len()))
            .product()
    }

    /// Cycle type of the top permutation in `Σ_k`.
    pub fn top_type(&self) -> Partition {
        self.assignment
            .values()
            .fold(Partition::empty(), |acc, pi| acc.union(pi))
    }

    /// Cycle type in `Σ_{lk}` under the block embedding: an `r`-cycle of
    /// the top permutation with cycle product of type `ρ` contributes the
    /// parts `r·ρ_i`.
    pub fn embedded_type(&self) -> Partition {
        let mut parts = Vec::new();
        for (rho, pi) in &self.assignment {
            for &r in pi.parts() {
                parts.extend(rho.parts().iter().map(|&q| q * r));
            }
        }
        Partition::from_unsorted(parts)
    }

    /// Dimension when read as an irreducible label.
    pub fn dimension(&self) -> BigInt {
        let mut dim = factorial(self.k);
        for (mu, pi) in &self.assignment {
            let dmu = BigInt::from(character_table(self.l).value(mu, &Partition::column(self.l)));
            let dpi = BigInt::from(character_table(pi.size()).value(pi, &Partition::column(pi.size())));
            dim = dim / factorial(pi.size()) * num_traits::pow(dmu, pi.size()) * dpi;
        }
        dim
    }

    /// Parses `{[2]->[1],[1,1]->[1]}`; `l` is needed for the empty map.
    pub fn parse(l: usize, s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed multipartition `{s}`"));
        let body = s
            .trim()
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(bad)?
            .trim();
        let mut entries = Vec::new();
        let mut rest = body;
        while !rest.is_empty() {
            let arrow = rest.find("->").ok_or_else(bad)?;
            let key: Partition = rest[..arrow].trim().parse()?;
            let after = &rest[arrow + 2..];
            let close = after.find(']').ok_or_else(bad)?;
            let value: Partition = after[..=close].trim().parse()?;
            entries.push((key, value));
            rest = after[close + 1..].trim_start();
            if let Some(r) = rest.strip_prefix(',') {
                rest = r.trim_start();
            } else if !rest.is_empty() {
                return Err(bad());
            }
        }
        MultiPartition::new(l, entries)
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (key, value)) in self.assignment.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{key}->{value}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Every map from partitions of `l` to partitions with total size `k`, in
/// the derived order.
pub fn multipartitions(l: usize, k: usize) -> Vec<MultiPartition> {
    let keys = gen_partitions(l);
    let mut out = Vec::new();
    let mut current: Vec<(Partition, Partition)> = Vec::new();
    fill(&keys, 0, k, &mut current, &mut out, l);
    out.sort();
    out
}

fn fill(
    keys: &[Partition],
    i: usize,
    remaining: usize,
    current: &mut Vec<(Partition, Partition)>,
    out: &mut Vec<MultiPartition>,
    l: usize,
) {
    if i == keys.len() {
        if remaining == 0 {
            out.push(MultiPartition::new(l, current.iter().cloned()).unwrap());
        }
        return;
    }
    if i + 1 == keys.len() {
        for pi in gen_partitions(remaining) {
            current.push((keys[i].clone(), pi));
            fill(keys, i + 1, 0, current, out, l);
            current.pop();
        }
        return;
    }
    for size in 0..=remaining {
        for pi in gen_partitions(size) {
            current.push((keys[i].clone(), pi));
            fill(keys, i + 1, remaining - size, current, out, l);
            current.pop();
        }
    }
}

/// A virtual representation of `Σ_l ≀ Σ_k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WreathRep {
    l: usize,
    k: usize,
    coeffs: BTreeMap<MultiPartition, BigInt>,
}

impl WreathRep {
    pub fn zero(l: usize, k: usize) -> Self {
        WreathRep { l, k, coeffs: BTreeMap::new() }
    }

    pub fn irreducible(phi: MultiPartition) -> Self {
        let mut w = WreathRep::zero(phi.l, phi.k);
        w.coeffs.insert(phi, BigInt::one());
        w
    }

    /// The trivial representation `{(l) ↦ (k)}`.
    pub fn trivial(l: usize, k: usize) -> Self {
        WreathRep::irreducible(MultiPartition::trivial_content(l, Partition::row(k)))
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Adds `c·Φ`; panics when `Φ` has the wrong shape.
    pub fn add_term(&mut self, phi: MultiPartition, c: BigInt) {
        assert!(phi.l == self.l && phi.k == self.k, "multipartition of the wrong shape");
        add_into(&mut self.coeffs, phi, c);
    }

    pub fn coeff(&self, phi: &MultiPartition) -> BigInt {
        self.coeffs.get(phi).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_genuine(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &BigInt) -> WreathRep {
        let mut out = WreathRep::zero(self.l, self.k);
        for (phi, v) in &self.coeffs {
            add_into(&mut out.coeffs, phi.clone(), v * c);
        }
        out
    }

    pub fn dimension(&self) -> BigInt {
        self.coeffs.iter().map(|(phi, c)| c * phi.dimension()).sum()
    }
}

impl Add for &WreathRep {
    type Output = WreathRep;
    fn add(self, rhs: &WreathRep) -> WreathRep {
        assert!(self.l == rhs.l && self.k == rhs.k, "wreath shapes differ");
        let mut out = self.clone();
        for (phi, c) in &rhs.coeffs {
            add_into(&mut out.coeffs, phi.clone(), c.clone());
        }
        out
    }
}

impl Neg for &WreathRep {
    type Output = WreathRep;
    fn neg(self) -> WreathRep {
        self.scale(&-BigInt::one())
    }
}

impl Sub for &WreathRep {
    type Output = WreathRep;
    fn sub(self, rhs: &WreathRep) -> WreathRep {
        self + &(-rhs)
    }
}

impl WreathRep {
    /// Parses the display form, e.g. `{[2]->[1,1]} + 2*{[2]->[1],[1,1]->[1]}` or `0`.
    pub fn parse(l: usize, k: usize, s: &str) -> Result<WreathRep> {
        let bad = || Error::Parse(format!("malformed wreath representation `{s}`"));
        let mut out = WreathRep::zero(l, k);
        let body = s.trim();
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
            let end = rest.find('}').ok_or_else(bad)? + 1;
            let term = rest[..end].trim();
            let (coef, label) = match term.split_once('*') {
                Some((c, l)) => (c.trim().parse::<BigInt>().map_err(|_| bad())?, l.trim()),
                None => (BigInt::one(), term),
            };
            let phi = MultiPartition::parse(l, label)?;
            if phi.k() != k {
                return Err(Error::SizeMismatch { expected: k, found: phi.k() });
            }
            out.add_term(phi, &sign * coef);
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

impl fmt::Display for WreathRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational: Vec<(&MultiPartition, BigRational)> = self
            .coeffs
            .iter()
            .map(|(k, c)| (k, BigRational::from(c.clone())))
            .collect();
        format_terms(f, rational.iter().map(|(k, c)| (*k, c)), |k| k.to_string())
    }
}

impl fmt::Debug for WreathRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R(S_{}~S_{}){{ {} }}", self.l, self.k, self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathTermRecord {
    pub assignment: Vec<(Partition, Partition)>,
    pub coefficient: String,
}

/// Structured form of a wreath representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WreathRecord {
    pub l: usize,
    pub k: usize,
    pub terms: Vec<WreathTermRecord>,
}

impl From<&WreathRep> for WreathRecord {
    fn from(w: &WreathRep) -> Self {
        WreathRecord {
            l: w.l,
            k: w.k,
            terms: w
                .coeffs
                .iter()
                .map(|(phi, c)| WreathTermRecord {
                    assignment: phi.assignment.iter().map(|(a, b)| (a.clone(), b.clone())).collect(),
                    coefficient: c.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&WreathRecord> for WreathRep {
    type Error = Error;
    fn try_from(r: &WreathRecord) -> Result<WreathRep> {
        let mut out = WreathRep::zero(r.l, r.k);
        for t in &r.terms {
            let phi = MultiPartition::new(r.l, t.assignment.iter().cloned())?;
            if phi.k != r.k {
                return Err(Error::SizeMismatch { expected: r.k, found: phi.k });
            }
            let c: BigInt = t
                .coefficient
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coefficient)))?;
            out.add_term(phi, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn counts_and_text() {
        assert_eq!(multipartitions(2, 2).len(), 5);
        assert_eq!(multipartitions(1, 3).len(), 3);
        assert_eq!(multipartitions(3, 2).len(), 9);
        let phi = MultiPartition::new(2, [(p(&[1, 1]), p(&[1])), (p(&[2]), p(&[1]))]).unwrap();
        assert_eq!(phi.to_string(), "{[2]->[1],[1,1]->[1]}");
        assert_eq!(MultiPartition::parse(2, "{[2]->[1], [1,1]->[1]}").unwrap(), phi);
        assert_eq!(MultiPartition::parse(2, "{}").unwrap().k(), 0);
        assert!(MultiPartition::parse(2, "{[3]->[1]}").is_err());
    }

    #[test]
    fn wreath_rep_text_round_trip() {
        let phi = MultiPartition::parse(2, "{[2]->[1],[1,1]->[1]}").unwrap();
        let psi = MultiPartition::parse(2, "{[1,1]->[2]}").unwrap();
        let mut w = WreathRep::irreducible(phi);
        w.add_term(psi, BigInt::from(-3));
        let text = w.to_string();
        assert_eq!(text, "{[2]->[1],[1,1]->[1]} - 3*{[1,1]->[2]}");
        assert_eq!(WreathRep::parse(2, 2, &text).unwrap(), w);
        assert_eq!(WreathRep::parse(2, 2, "0").unwrap(), WreathRep::zero(2, 2));
        assert!(WreathRep::parse(2, 3, &text).is_err());
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for (l, k) in [(1, 3), (2, 2), (2, 3), (3, 2), (3, 3)] {
            let order = num_traits::pow(factorial(l), k) * factorial(k);
            let total: BigRational = multipartitions(l, k)
                .iter()
                .map(|c| BigRational::new(order.clone(), c.centralizer()))
                .sum();
            assert_eq!(total, BigRational::from(order));
        }
    }

    #[test]
    fn dimensions_square_sum_to_order() {
        for (l, k) in [(2, 2), (2, 3), (3, 2)] {
            let order = num_traits::pow(factorial(l), k) * factorial(k);
            let total: BigInt = multipartitions(l, k).iter().map(|phi| phi.dimension().pow(2)).sum();
            assert_eq!(total, order);
        }
    }

    #[test]
    fn embedded_cycle_types() {
        // (g, 1; swap) with g a transposition: cycle product is a transposition,
        // one 2-cycle on blocks, so a 4-cycle in Σ_4
        let c = MultiPartition::new(2, [(p(&[2]), p(&[2]))]).unwrap();
        assert_eq!(c.embedded_type(), p(&[4]));
        assert_eq!(c.top_type(), p(&[2]));
        assert_eq!(c.centralizer(), BigInt::from(4));
    }
}
