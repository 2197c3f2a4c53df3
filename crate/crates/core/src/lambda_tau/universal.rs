//! The universal polynomials `p_k` and `q_{k,l}` of the λ-ring axioms,
//! expressed through elementary symmetric functions.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::symcore::{add_into, format_terms, gen_partitions, Basis, Partition, SymFunc};

/// `p_k`: the coefficient of `t^k` in `∏(1 + a_i b_j t)`, as a polynomial in
/// `σ_i(a)` and `σ_j(b)`. A key `(α, β)` stands for `σ_α(a) σ_β(b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalP {
    pub k: usize,
    pub terms: BTreeMap<(Partition, Partition), BigInt>,
}

/// `q_{k,l}`: the coefficient of `t^k` in `∏_{i_1<…<i_l}(1 + x_{i_1}⋯x_{i_l} t)`
/// as a polynomial in the `σ_i(x)`. A key `α` stands for `σ_α(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalQ {
    pub k: usize,
    pub l: usize,
    pub terms: BTreeMap<Partition, BigInt>,
}

fn integral(e: &BTreeMap<Partition, BigRational>) -> BTreeMap<Partition, BigInt> {
    e.iter()
        .map(|(k, c)| {
            assert!(c.is_integer(), "universal polynomial coefficient {c} is not integral");
            (k.clone(), c.to_integer())
        })
        .collect()
}

/// Uses the Cauchy expansion `∏(1 + a_i b_j t) = Σ_λ s_λ(a) s_{λ'}(b) t^{|λ|}`
/// and rewrites both Schur factors in the elementary basis.
pub fn universal_p(k: usize) -> UniversalP {
    let mut terms = BTreeMap::new();
    for lambda in gen_partitions(k) {
        let left = integral(&SymFunc::schur(lambda.clone()).expand(Basis::E).terms);
        let right = integral(&SymFunc::schur(lambda.conjugate()).expand(Basis::E).terms);
        for (a, ca) in &left {
            for (b, cb) in &right {
                add_into(&mut terms, (a.clone(), b.clone()), ca * cb);
            }
        }
    }
    UniversalP { k, terms }
}

/// `e_k ∘ e_l` in the elementary basis.
pub fn universal_q(k: usize, l: usize) -> UniversalQ {
    let e = |n| SymFunc::elementary(Partition::row(n));
    let pl = e(k).plethysm(&e(l));
    UniversalQ { k, l, terms: integral(&pl.expand(Basis::E).terms) }
}

/// Monomial `σ_α` in the variables `L{i}{suffix}`, indices ascending.
fn monomial(alpha: &Partition, suffix: &str) -> Vec<String> {
    let mut out = Vec::new();
    for (i, m) in alpha.multiplicities() {
        if m == 1 {
            out.push(format!("L{i}{suffix}"));
        } else {
            out.push(format!("L{i}{suffix}^{m}"));
        }
    }
    out
}

impl fmt::Display for UniversalP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational: Vec<(&(Partition, Partition), BigRational)> =
            self.terms.iter().map(|(k, c)| (k, BigRational::from(c.clone()))).collect();
        format_terms(f, rational.iter().map(|(k, c)| (*k, c)), |(a, b)| {
            let mut m = monomial(a, "x");
            m.extend(monomial(b, "y"));
            if m.is_empty() {
                "1".into()
            } else {
                m.join("*")
            }
        })
    }
}

impl fmt::Display for UniversalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rational: Vec<(&Partition, BigRational)> =
            self.terms.iter().map(|(k, c)| (k, BigRational::from(c.clone()))).collect();
        format_terms(f, rational.iter().map(|(k, c)| (*k, c)), |a| {
            let m = monomial(a, "x");
            if m.is_empty() {
                "1".into()
            } else {
                m.join("*")
            }
        })
    }
}

/// Evaluates `σ_α` given `values[i] = λ^i`.
fn eval_monomial<E: Clone>(alpha: &Partition, values: &[E], one: &E, mul: &impl Fn(&E, &E) -> E) -> E {
    alpha.parts().iter().fold(one.clone(), |acc, &i| mul(&acc, &values[i]))
}

impl UniversalP {
    /// Evaluates at `σ_i(a) = lx[i]`, `σ_j(b) = ly[j]` (index 0 unused).
    pub fn evaluate<E: Clone>(
        &self,
        lx: &[E],
        ly: &[E],
        zero: E,
        one: &E,
        add: impl Fn(&E, &E) -> E,
        mul: impl Fn(&E, &E) -> E,
        scale: impl Fn(&E, &BigInt) -> E,
    ) -> E {
        let mut acc = zero;
        for ((a, b), c) in &self.terms {
            let m = mul(&eval_monomial(a, lx, one, &mul), &eval_monomial(b, ly, one, &mul));
            acc = add(&acc, &scale(&m, c));
        }
        acc
    }
}

impl UniversalQ {
    /// Evaluates at `σ_i(x) = lx[i]` (index 0 unused).
    pub fn evaluate<E: Clone>(
        &self,
        lx: &[E],
        zero: E,
        one: &E,
        add: impl Fn(&E, &E) -> E,
        mul: impl Fn(&E, &E) -> E,
        scale: impl Fn(&E, &BigInt) -> E,
    ) -> E {
        let mut acc = zero;
        for (a, c) in &self.terms {
            acc = add(&acc, &scale(&eval_monomial(a, lx, one, &mul), c));
        }
        acc
    }
}
