use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::partition::Partition;

/// A symmetric function with exact rational coefficients, stored in the
/// power-sum basis `p_λ`. Zero coefficients are never stored.
///
/// Every operation here is exact and untruncated; truncation happens in the
/// series types that sit on top.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct SymFunc {
    coeffs: BTreeMap<Partition, BigRational>,
}

pub(crate) fn add_into<K: Ord, T: Zero + AddAssign>(map: &mut BTreeMap<K, T>, key: K, c: T) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn rat(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl SymFunc {
    pub fn zero() -> Self {
        SymFunc::default()
    }

    pub fn one() -> Self {
        SymFunc::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut f = SymFunc::zero();
        f.add_term(Partition::empty(), c);
        f
    }

    /// The power sum `p_λ`.
    pub fn power_sum(lambda: Partition) -> Self {
        let mut f = SymFunc::zero();
        f.coeffs.insert(lambda, BigRational::one());
        f
    }

    /// Builds from power-sum coefficients, dropping zeros.
    pub fn from_power_sums(terms: impl IntoIterator<Item = (Partition, BigRational)>) -> Self {
        let mut f = SymFunc::zero();
        for (k, c) in terms {
            f.add_term(k, c);
        }
        f
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) {
        add_into(&mut self.coeffs, lambda, c);
    }

    /// Power-sum coefficients in graded order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest degree present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().map(Partition::size).max()
    }

    /// Degrees present, ascending.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.coeffs.keys().map(Partition::size).collect();
        d.dedup();
        d
    }

    pub fn is_homogeneous_of(&self, n: usize) -> bool {
        self.coeffs.keys().all(|k| k.size() == n)
    }

    pub fn homogeneous_part(&self, n: usize) -> SymFunc {
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() == n)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops every term of degree above `max`.
    pub fn truncate(&self, max: usize) -> SymFunc {
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| k.size() <= max)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        SymFunc {
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn multiply(&self, other: &SymFunc) -> SymFunc {
        let mut out = BTreeMap::new();
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                add_into(&mut out, a.union(b), ca * cb);
            }
        }
        SymFunc { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> SymFunc {
        let mut acc = SymFunc::one();
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// `p_n ∘ self`: every `p_r` becomes `p_{nr}`; coefficients are scalars.
    pub fn power_sum_substitute(&self, n: usize) -> SymFunc {
        SymFunc {
            coeffs: self.coeffs.iter().map(|(k, c)| (k.scaled(n), c.clone())).collect(),
        }
    }

    /// Plethysm `self ∘ g`.
    ///
    /// The power-sum rule is the definition for every right argument,
    /// including inhomogeneous and virtual ones.
    pub fn plethysm(&self, g: &SymFunc) -> SymFunc {
        plethysm_into(self, g)
    }

    /// Internal (Kronecker) product: `p_λ * p_μ = δ_{λμ} z_λ p_λ`.
    pub fn kronecker(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero();
        for (k, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(k) {
                out.add_term(k.clone(), c * d * rat(k.z()));
            }
        }
        out
    }

    /// The involution `ω` with `ω(p_λ) = (-1)^{|λ|-ℓ(λ)} p_λ`.
    pub fn omega(&self) -> SymFunc {
        SymFunc {
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k.clone(), if k.sign() < 0 { -c } else { c.clone() }))
                .collect(),
        }
    }

    /// Hall inner product, `⟨p_λ, p_μ⟩ = δ_{λμ} z_λ`.
    pub fn hall_inner(&self, other: &SymFunc) -> BigRational {
        let mut acc = BigRational::zero();
        for (k, c) in &self.coeffs {
            if let Some(d) = other.coeffs.get(k) {
                acc += c * d * rat(k.z());
            }
        }
        acc
    }

    /// Comultiplication with primitive power sums.
    pub fn coproduct(&self) -> SymTensor {
        let mut out = SymTensor::zero();
        for (lambda, c) in &self.coeffs {
            // choose how many copies of each part value go left
            let mult: Vec<(usize, usize)> = lambda.multiplicities().into_iter().collect();
            let mut split = vec![0usize; mult.len()];
            loop {
                let mut left = Vec::new();
                let mut right = Vec::new();
                let mut weight = BigInt::one();
                for (&(part, m), &k) in mult.iter().zip(&split) {
                    left.extend(std::iter::repeat_n(part, k));
                    right.extend(std::iter::repeat_n(part, m - k));
                    weight *= binomial(m, k);
                }
                out.add_term(
                    Partition::from_unsorted(left),
                    Partition::from_unsorted(right),
                    c * rat(weight),
                );
                let mut i = 0;
                while i < split.len() {
                    if split[i] < mult[i].1 {
                        split[i] += 1;
                        break;
                    }
                    split[i] = 0;
                    i += 1;
                }
                if i == split.len() {
                    break;
                }
            }
        }
        out
    }

    /// Terms carry integral coefficients.
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Elements on which `p_n` acts by plethystic substitution. This is all the
/// structure needed to evaluate `f ∘ x` for any symmetric function `f`.
pub trait PlethysticAlgebra: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
    /// `p_n ∘ self`.
    fn power_sum_substitute(&self, n: usize) -> Self;

    fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }
}

impl PlethysticAlgebra for SymFunc {
    fn zero() -> Self {
        SymFunc::zero()
    }
    fn one() -> Self {
        SymFunc::one()
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
        SymFunc::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        SymFunc::is_zero(self)
    }
    fn power_sum_substitute(&self, n: usize) -> Self {
        SymFunc::power_sum_substitute(self, n)
    }
}

/// `f ∘ x` for `x` in any plethystic algebra, expanding `f` in power sums.
pub fn plethysm_into<A: PlethysticAlgebra>(f: &SymFunc, x: &A) -> A {
    let mut substituted: HashMap<usize, A> = HashMap::new();
    let mut products: HashMap<Partition, A> = HashMap::new();
    products.insert(Partition::empty(), A::one());
    let mut result = A::zero();
    for (lambda, c) in f.terms() {
        let term = power_product(lambda, x, &mut substituted, &mut products);
        result = result.add(&term.scale(c));
    }
    result
}

fn power_product<A: PlethysticAlgebra>(
    lambda: &Partition,
    x: &A,
    substituted: &mut HashMap<usize, A>,
    products: &mut HashMap<Partition, A>,
) -> A {
    if let Some(v) = products.get(lambda) {
        return v.clone();
    }
    let first = lambda.parts()[0];
    let rest = power_product(&lambda.tail(), x, substituted, products);
    let pn = substituted
        .entry(first)
        .or_insert_with(|| x.power_sum_substitute(first))
        .clone();
    let value = rest.mul(&pn);
    products.insert(lambda.clone(), value.clone());
    value
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*p{k}")?;
        }
        Ok(())
    }
}

impl Add for &SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Add for SymFunc {
    type Output = SymFunc;
    fn add(self, rhs: SymFunc) -> SymFunc {
        &self + &rhs
    }
}

impl Sub for &SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Sub for SymFunc {
    type Output = SymFunc;
    fn sub(self, rhs: SymFunc) -> SymFunc {
        &self - &rhs
    }
}

impl Neg for &SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        SymFunc {
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl Neg for SymFunc {
    type Output = SymFunc;
    fn neg(self) -> SymFunc {
        -&self
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        self.multiply(rhs)
    }
}

impl Mul for SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: SymFunc) -> SymFunc {
        self.multiply(&rhs)
    }
}

/// An element of `Λ ⊗ Λ`, stored in the basis `p_λ ⊗ p_μ`.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SymTensor {
    coeffs: BTreeMap<(Partition, Partition), BigRational>,
}

impl SymTensor {
    pub fn zero() -> Self {
        SymTensor::default()
    }

    pub fn add_term(&mut self, left: Partition, right: Partition, c: BigRational) {
        add_into(&mut self.coeffs, (left, right), c);
    }

    /// `f ⊗ g`.
    pub fn outer(f: &SymFunc, g: &SymFunc) -> SymTensor {
        let mut out = SymTensor::zero();
        for (a, ca) in f.terms() {
            for (b, cb) in g.terms() {
                out.add_term(a.clone(), b.clone(), ca * cb);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Componentwise product in `Λ ⊗ Λ`.
    pub fn multiply(&self, other: &SymTensor) -> SymTensor {
        let mut out = SymTensor::zero();
        for ((a1, b1), c1) in &self.coeffs {
            for ((a2, b2), c2) in &other.coeffs {
                out.add_term(a1.union(a2), b1.union(b2), c1 * c2);
            }
        }
        out
    }

    /// The pairing `⟨f ⊗ g, self⟩` using the Hall product on each factor.
    pub fn pair(&self, f: &SymFunc, g: &SymFunc) -> BigRational {
        let mut acc = BigRational::zero();
        for ((a, b), c) in &self.coeffs {
            let fa = f.coeff(a);
            if fa.is_zero() {
                continue;
            }
            let gb = g.coeff(b);
            if gb.is_zero() {
                continue;
            }
            acc += c * fa * gb * rat(a.z()) * rat(b.z());
        }
        acc
    }

    /// Restricts to the bidegree `(i, j)` component.
    pub fn bidegree(&self, i: usize, j: usize) -> SymTensor {
        SymTensor {
            coeffs: self
                .coeffs
                .iter()
                .filter(|((a, b), _)| a.size() == i && b.size() == j)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &SymTensor {
    type Output = SymTensor;
    fn add(self, rhs: &SymTensor) -> SymTensor {
        let mut out = self.clone();
        for ((a, b), c) in &rhs.coeffs {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn ps(parts: &[usize]) -> SymFunc {
        SymFunc::power_sum(p(parts))
    }

    #[test]
    fn multiplication_concatenates_power_sums() {
        assert_eq!(&ps(&[2]) * &ps(&[3, 1]), ps(&[3, 2, 1]));
        let f = &ps(&[1]) + &ps(&[2]);
        assert_eq!(&f * &SymFunc::one(), f);
    }

    #[test]
    fn power_sum_plethysm_multiplies_indices() {
        assert_eq!(ps(&[3]).plethysm(&ps(&[2])), ps(&[6]));
        assert_eq!(ps(&[2, 1]).plethysm(&ps(&[2])), ps(&[4, 2]));
        // constants are fixed by p_n
        let c = SymFunc::constant(rat(5));
        assert_eq!(ps(&[4]).plethysm(&c), c);
    }

    #[test]
    fn kronecker_diagonal() {
        assert_eq!(ps(&[2, 1]).kronecker(&ps(&[2, 1])), ps(&[2, 1]).scale(&rat(2)));
        assert!(ps(&[2, 1]).kronecker(&ps(&[3])).is_zero());
    }

    #[test]
    fn hall_on_power_sums() {
        assert_eq!(ps(&[3]).hall_inner(&ps(&[3])), rat(3));
        assert_eq!(ps(&[3]).hall_inner(&ps(&[2])), rat(0));
    }

    #[test]
    fn coproduct_of_power_sums() {
        let d = ps(&[1]).coproduct();
        let mut expected = SymTensor::zero();
        expected.add_term(p(&[1]), p(&[]), rat(1));
        expected.add_term(p(&[]), p(&[1]), rat(1));
        assert_eq!(d, expected);
        let one = SymFunc::one().coproduct();
        let mut e1 = SymTensor::zero();
        e1.add_term(p(&[]), p(&[]), rat(1));
        assert_eq!(one, e1);
        // Δ(p_1^2) = (p_1⊗1 + 1⊗p_1)^2
        assert_eq!(ps(&[1, 1]).coproduct(), d.multiply(&d));
    }

    #[test]
    fn omega_signs() {
        assert_eq!(ps(&[2]).omega(), -ps(&[2]));
        assert_eq!(ps(&[3]).omega(), ps(&[3]));
        assert_eq!(ps(&[2, 1]).omega().omega(), ps(&[2, 1]));
    }
}
