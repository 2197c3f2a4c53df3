use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lambda_tau::{tau_closed_form, TauModel, TauSeries};
use crate::symcore::{add_into, format_terms, Basis, Partition, PlethysticAlgebra, SymFunc};

/// An element of the free λ-ring on generators `x_0, x_1, …`, realized as
/// a tensor power of the symmetric-function ring with `x_c = p_1` in
/// factor `c`. Keys list one power-sum partition per factor with trailing
/// empty partitions trimmed, so elements need not know the generator count.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct KElement {
    terms: BTreeMap<Vec<Partition>, BigRational>,
}

fn trim(mut key: Vec<Partition>) -> Vec<Partition> {
    while key.last().is_some_and(Partition::is_empty) {
        key.pop();
    }
    key
}

impl KElement {
    pub fn zero() -> Self {
        KElement::default()
    }

    pub fn one() -> Self {
        KElement::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut k = KElement::zero();
        add_into(&mut k.terms, Vec::new(), c);
        k
    }

    /// The generator `x_c`.
    pub fn generator(c: usize) -> Self {
        KElement::embed(c, &SymFunc::power_sum(Partition::row(1)))
    }

    /// `f` placed in tensor factor `c`.
    pub fn embed(c: usize, f: &SymFunc) -> Self {
        let mut out = KElement::zero();
        for (lambda, coeff) in f.terms() {
            let mut key = vec![Partition::empty(); c + 1];
            key[c] = lambda.clone();
            add_into(&mut out.terms, trim(key), coeff.clone());
        }
        out
    }

    /// `b_{α_0} ⊗ b_{α_1} ⊗ …` for a basis `b`.
    pub fn basis_tensor(basis: Basis, alphas: &[Partition]) -> Self {
        alphas.iter().enumerate().fold(KElement::one(), |acc, (c, a)| {
            acc.multiply(&KElement::embed(c, &SymFunc::basis_element(basis, a.clone())))
        })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Partition>, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree of every term present, ascending and deduplicated.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .terms
            .keys()
            .map(|k| k.iter().map(Partition::size).sum())
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = KElement::zero();
        for (k, v) in &self.terms {
            add_into(&mut out.terms, k.clone(), v * c);
        }
        out
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = KElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let len = a.len().max(b.len());
                let key = (0..len)
                    .map(|i| match (a.get(i), b.get(i)) {
                        (Some(x), Some(y)) => x.union(y),
                        (Some(x), None) | (None, Some(x)) => x.clone(),
                        (None, None) => Partition::empty(),
                    })
                    .collect();
                add_into(&mut out.terms, key, ca * cb);
            }
        }
        out
    }

    /// Coefficients in the tensor basis `b ⊗ b ⊗ …`.
    pub fn expand_tensor(&self, basis: Basis) -> BTreeMap<Vec<Partition>, BigRational> {
        let mut out = BTreeMap::new();
        for (key, c) in &self.terms {
            let mut partial: Vec<(Vec<Partition>, BigRational)> = vec![(Vec::new(), c.clone())];
            for lambda in key {
                let e = SymFunc::power_sum(lambda.clone()).expand(basis);
                let mut next = Vec::new();
                for (prefix, v) in &partial {
                    for (mu, d) in &e.terms {
                        let mut k = prefix.clone();
                        k.push(mu.clone());
                        next.push((k, v * d));
                    }
                }
                partial = next;
            }
            for (k, v) in partial {
                add_into(&mut out, trim(k), v);
            }
        }
        out
    }

    /// Integer coefficients in the tensor Schur basis.
    pub fn schur_integral(&self) -> Result<BTreeMap<Vec<Partition>, BigInt>> {
        self.expand_tensor(Basis::S)
            .into_iter()
            .map(|(k, c)| {
                if c.is_integer() {
                    Ok((k, c.to_integer()))
                } else {
                    Err(Error::Integrality {
                        basis: "s⊗s".into(),
                        key: format!("{k:?}"),
                        coefficient: c.to_string(),
                    })
                }
            })
            .collect()
    }
}

pub(crate) fn tensor_label(basis: Basis, key: &[Partition]) -> String {
    if key.is_empty() {
        return "1".into();
    }
    key.iter()
        .map(|p| format!("{}{}", basis.letter(), p))
        .collect::<Vec<_>>()
        .join("⊗")
}

impl fmt::Display for KElement {
    /// Tensor Schur basis, e.g. `s[2]⊗s[1] - s[]⊗s[1,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.expand_tensor(Basis::S);
        format_terms(f, &e, |k| tensor_label(Basis::S, k))
    }
}

impl fmt::Debug for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_terms(f, &self.terms, |k| tensor_label(Basis::P, k))
    }
}

impl Add for &KElement {
    type Output = KElement;
    fn add(self, rhs: &KElement) -> KElement {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            add_into(&mut out.terms, k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &KElement {
    type Output = KElement;
    fn sub(self, rhs: &KElement) -> KElement {
        self + &(-rhs)
    }
}

impl Neg for &KElement {
    type Output = KElement;
    fn neg(self) -> KElement {
        self.scale(&-BigRational::one())
    }
}

impl Mul for &KElement {
    type Output = KElement;
    fn mul(self, rhs: &KElement) -> KElement {
        self.multiply(rhs)
    }
}

impl PlethysticAlgebra for KElement {
    fn zero() -> Self {
        KElement::zero()
    }
    fn one() -> Self {
        KElement::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self.multiply(other)
    }
    fn scale(&self, c: &BigRational) -> Self {
        KElement::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    /// Acts factorwise: `p_r` in any factor becomes `p_{nr}`.
    fn power_sum_substitute(&self, n: usize) -> Self {
        let mut out = KElement::zero();
        for (k, c) in &self.terms {
            add_into(&mut out.terms, k.iter().map(|p| p.scaled(n)).collect(), c.clone());
        }
        out
    }
}

impl TauModel for KElement {
    /// Each tensor-Schur basis element is genuine and gets the closed-form τ;
    /// the integer combination is then assembled with × and ×-inverses.
    fn tau(&self, cap: usize) -> Result<TauSeries<KElement>> {
        let mut acc = TauSeries::unit(cap);
        for (key, c) in self.schur_integral()? {
            let b = KElement::basis_tensor(Basis::S, &key);
            let t = tau_closed_form(&b, cap);
            acc = acc.cross(&t.cross_power(&c)?)?;
        }
        Ok(acc)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}
