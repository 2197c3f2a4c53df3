//! Truncated elements of `AP = ∏ₙ A ⊗ R(Σₙ)` and its companions
//! `AP⁽²⁾` and `AQ`, with the structure maps ×, ·, Δ, μ and □.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::rep_sn::{kronecker_coefficients, lr_product, RepSn};
use crate::symcore::{Partition, PlethysticAlgebra};
use crate::wreath::{wreath_restrict, MultiPartition};

pub(crate) fn accumulate<K: Ord, A: PlethysticAlgebra>(map: &mut BTreeMap<K, A>, key: K, value: A) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(value);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().add(&value);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

pub(crate) fn int_scale<A: PlethysticAlgebra>(a: &A, c: &BigInt) -> A {
    a.scale(&BigRational::from(c.clone()))
}

fn check_caps(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::CapMismatch { left, right })
    }
}

/// An element of `AP` truncated at degree `cap`: component `m` maps each
/// partition `μ ⊢ m` to the coefficient of `[μ]`.
#[derive(Clone, PartialEq, Eq)]
pub struct TauSeries<A> {
    cap: usize,
    components: Vec<BTreeMap<Partition, A>>,
}

impl<A: PlethysticAlgebra> TauSeries<A> {
    pub fn zero(cap: usize) -> Self {
        TauSeries { cap, components: vec![BTreeMap::new(); cap + 1] }
    }

    /// The ×-unit `1 ⊗ e_0`.
    pub fn unit(cap: usize) -> Self {
        let mut s = TauSeries::zero(cap);
        s.components[0].insert(Partition::empty(), A::one());
        s
    }

    /// Builds from `(μ, coefficient)` pairs; every `|μ|` must be within the cap.
    pub fn from_terms(cap: usize, terms: impl IntoIterator<Item = (Partition, A)>) -> Result<Self> {
        let mut s = TauSeries::zero(cap);
        for (mu, a) in terms {
            s.add_term(mu, a)?;
        }
        Ok(s)
    }

    pub fn add_term(&mut self, mu: Partition, a: A) -> Result<()> {
        let m = mu.size();
        if m > self.cap {
            return Err(Error::CapExceeded { requested: m, cap: self.cap });
        }
        accumulate(&mut self.components[m], mu, a);
        Ok(())
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn component(&self, m: usize) -> &BTreeMap<Partition, A> {
        &self.components[m]
    }

    pub fn coeff(&self, mu: &Partition) -> A {
        self.components
            .get(mu.size())
            .and_then(|c| c.get(mu))
            .cloned()
            .unwrap_or_else(A::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(BTreeMap::is_empty)
    }

    /// Drops components above `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        let cap = cap.min(self.cap);
        TauSeries { cap, components: self.components[..=cap].to_vec() }
    }

    /// The map `g_n`: the coefficient of `sgn_n` in component `n`.
    pub fn sign_projection(&self, n: usize) -> Result<A> {
        if n > self.cap {
            return Err(Error::CapExceeded { requested: n, cap: self.cap });
        }
        Ok(self.coeff(&Partition::column(n)))
    }

    fn cross_component(&self, other: &Self, n: usize, skip_left_zero: bool) -> BTreeMap<Partition, A> {
        let mut out = BTreeMap::new();
        let start = usize::from(skip_left_zero);
        for i in start..=n {
            for (mu, a) in &self.components[i] {
                for (nu, b) in &other.components[n - i] {
                    let ab = a.mul(b);
                    for (lambda, c) in lr_product(mu, nu).iter() {
                        accumulate(&mut out, lambda.clone(), int_scale(&ab, c));
                    }
                }
            }
        }
        out
    }

    /// The product × through induction `R(Σ_i) ⊗ R(Σ_j) → R(Σ_{i+j})`.
    pub fn cross(&self, other: &Self) -> Result<Self> {
        check_caps(self.cap, other.cap)?;
        let components = (0..=self.cap).map(|n| self.cross_component(other, n, false)).collect();
        Ok(TauSeries { cap: self.cap, components })
    }

    /// The ×-inverse of a series whose component 0 is `1`, solved degree by
    /// degree.
    pub fn cross_inverse(&self) -> Result<Self> {
        if self.components[0].len() != 1 || self.coeff(&Partition::empty()) != A::one() {
            return Err(Error::Parse("×-inverse needs constant component 1".into()));
        }
        let mut inv = TauSeries::unit(self.cap);
        for n in 1..=self.cap {
            // Σ_{i≥1} a_i × b_{n-i} + b_n = 0
            let partial = self.cross_component(&inv, n, true);
            inv.components[n] = partial.into_iter().map(|(k, v)| (k, v.neg())).collect();
        }
        Ok(inv)
    }

    /// `self^{×c}` for any integer `c`.
    pub fn cross_power(&self, c: &BigInt) -> Result<Self> {
        use num_traits::Signed;
        let base = if c.is_negative() { self.cross_inverse()? } else { self.clone() };
        let mut e: u64 = c.abs().try_into().map_err(|_| Error::Parse("exponent too large".into()))?;
        let mut acc = TauSeries::unit(self.cap);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.cross(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.cross(&sq)?;
            }
        }
        Ok(acc)
    }

    /// The product · through internal tensor products in each `R(Σₙ)`.
    pub fn dot(&self, other: &Self) -> Result<Self> {
        check_caps(self.cap, other.cap)?;
        let mut components = vec![BTreeMap::new(); self.cap + 1];
        for (m, out) in components.iter_mut().enumerate() {
            for (mu, a) in &self.components[m] {
                for (nu, b) in &other.components[m] {
                    let ab = a.mul(b);
                    let g = kronecker_coefficients(mu, nu).expect("same size by construction");
                    for (lambda, c) in g.iter() {
                        accumulate(out, lambda.clone(), int_scale(&ab, c));
                    }
                }
            }
        }
        Ok(TauSeries { cap: self.cap, components })
    }

    /// Δ: restriction `R(Σ_{i+j}) → R(Σ_i) ⊗ R(Σ_j)` on every component.
    pub fn coproduct_delta(&self) -> TauSquare<A> {
        let mut terms = BTreeMap::new();
        for comp in &self.components {
            for (lambda, a) in comp {
                let res = crate::rep_sn::restriction_coproduct(&RepSn::irreducible(lambda.clone()));
                for ((mu, nu), c) in &res.terms {
                    accumulate(&mut terms, (mu.clone(), nu.clone()), int_scale(a, c));
                }
            }
        }
        TauSquare { cap: self.cap, terms }
    }

    /// μ: the outer product, multiplying coefficients in `A`; kept for
    /// `i + j ≤ cap` so that it is comparable with Δ.
    pub fn mu(&self, other: &Self) -> Result<TauSquare<A>> {
        check_caps(self.cap, other.cap)?;
        let mut terms = BTreeMap::new();
        for i in 0..=self.cap {
            for j in 0..=self.cap - i {
                for (mu, a) in &self.components[i] {
                    for (nu, b) in &other.components[j] {
                        accumulate(&mut terms, (mu.clone(), nu.clone()), a.mul(b));
                    }
                }
            }
        }
        Ok(TauSquare { cap: self.cap, terms })
    }

    /// □: restriction `R(Σ_{lk}) → R(Σ_l ≀ Σ_k)` at each requested `(l, k)`.
    pub fn box_map(&self, pairs: &[(usize, usize)]) -> Result<TauQ<A>> {
        let mut components = BTreeMap::new();
        for &(l, k) in pairs {
            if l * k > self.cap {
                return Err(Error::CapExceeded { requested: l * k, cap: self.cap });
            }
            let mut out = BTreeMap::new();
            for (lambda, a) in &self.components[l * k] {
                let w = wreath_restrict(&RepSn::irreducible(lambda.clone()), l, k)?;
                for (phi, c) in w.terms() {
                    accumulate(&mut out, phi.clone(), int_scale(a, c));
                }
            }
            components.insert((l, k), out);
        }
        Ok(TauQ { components })
    }
}

/// An element of `AP⁽²⁾ = ∏ A ⊗ R(Σ_i) ⊗ R(Σ_j)` with `i + j ≤ cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauSquare<A> {
    pub cap: usize,
    pub terms: BTreeMap<(Partition, Partition), A>,
}

/// An element of `AQ = ∏ A ⊗ R(Σ_l ≀ Σ_k)` at selected `(l, k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauQ<A> {
    pub components: BTreeMap<(usize, usize), BTreeMap<MultiPartition, A>>,
}

impl<A: fmt::Debug> fmt::Debug for TauSeries<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TauSeries")
            .field("cap", &self.cap)
            .field("components", &self.components)
            .finish()
    }
}

impl<A> TauSeries<A> {
    /// Renders component by component as `m=k: (coefficient)⊗[μ] + …`.
    pub fn render(&self, coeff: impl Fn(&A) -> String) -> String {
        let mut out = String::new();
        for (m, comp) in self.components.iter().enumerate() {
            let body = if comp.is_empty() {
                "0".to_string()
            } else {
                comp.iter()
                    .map(|(mu, a)| format!("({})⊗{}", coeff(a), mu))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            out.push_str(&format!("m={m}: {body}\n"));
        }
        out
    }
}

impl<A> TauQ<A> {
    pub fn render(&self, coeff: impl Fn(&A) -> String) -> String {
        let mut out = String::new();
        for ((l, k), comp) in &self.components {
            let body = if comp.is_empty() {
                "0".to_string()
            } else {
                comp.iter()
                    .map(|(phi, a)| format!("({})⊗{}", coeff(a), phi))
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            out.push_str(&format!("(l={l},k={k}): {body}\n"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symcore::SymFunc;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn linear(x: SymFunc, cap: usize) -> TauSeries<SymFunc> {
        let mut s = TauSeries::unit(cap);
        s.add_term(p(&[1]), x).unwrap();
        s
    }

    #[test]
    fn cross_of_linear_series() {
        let x = SymFunc::schur(p(&[1]));
        let y = SymFunc::schur(p(&[2]));
        let c = linear(x.clone(), 2).cross(&linear(y.clone(), 2)).unwrap();
        let xy = x.multiply(&y);
        assert_eq!(c.coeff(&p(&[2])), xy);
        assert_eq!(c.coeff(&p(&[1, 1])), xy);
        assert_eq!(c.coeff(&p(&[1])), &x + &y);
        let unit = TauSeries::<SymFunc>::unit(2);
        assert_eq!(unit.cross(&c).unwrap(), c);
    }

    #[test]
    fn inverse_and_caps() {
        let s = linear(SymFunc::schur(p(&[1])), 3);
        let inv = s.cross_inverse().unwrap();
        assert_eq!(s.cross(&inv).unwrap(), TauSeries::unit(3));
        assert_eq!(s.cross_power(&BigInt::from(-2)).unwrap(), inv.cross(&inv).unwrap());
        let other = TauSeries::<SymFunc>::unit(2);
        assert!(matches!(s.cross(&other), Err(Error::CapMismatch { .. })));
        assert!(TauSeries::<SymFunc>::zero(1).sign_projection(2).is_err());
    }

    #[test]
    fn delta_of_trivial_component() {
        let x = SymFunc::schur(p(&[3]));
        let s = TauSeries::from_terms(2, [(p(&[2]), x.clone())]).unwrap();
        let d = s.coproduct_delta();
        assert_eq!(d.terms[&(p(&[1]), p(&[1]))], x);
        assert_eq!(d.terms.len(), 3);
    }
}
