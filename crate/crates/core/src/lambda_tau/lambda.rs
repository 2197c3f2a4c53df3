//! λ-rings as a pluggable interface, with an exact checker for the axioms.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::report::{AxiomRecord, AxiomReport};
use super::universal::{universal_p, universal_q};
use crate::symcore::{gen_partitions, Basis, Partition, PlethysticAlgebra, SymFunc};

/// A commutative ring with operations `λ^n`, together with sample elements
/// on which to test the axioms.
pub trait LambdaRing: Sync {
    type Elem: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn mul(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;
    fn scale(&self, x: &Self::Elem, c: &BigInt) -> Self::Elem;
    fn lambda(&self, n: usize, x: &Self::Elem) -> Self::Elem;
    fn samples(&self) -> Vec<Self::Elem>;
    fn render(&self, x: &Self::Elem) -> String;

    /// Pairs on which the binary axioms are checked; all pairs by default.
    fn sample_pairs(&self) -> Vec<(Self::Elem, Self::Elem)> {
        let s = self.samples();
        let mut out = Vec::new();
        for x in &s {
            for y in &s {
                out.push((x.clone(), y.clone()));
            }
        }
        out
    }
}

/// How far the λ-ring checker goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LambdaBudget {
    /// Largest `k` in axioms (ii) and (iii).
    pub max_k: usize,
    /// Largest `k` and `l` in axiom (iv).
    pub max_kl: usize,
}

fn lambdas<R: LambdaRing>(inst: &R, x: &R::Elem, upto: usize) -> Vec<R::Elem> {
    (0..=upto).map(|i| inst.lambda(i, x)).collect()
}

/// Checks axioms (i)–(iv) on every sample within the budget. Violations
/// are report content; nothing here panics on a failed identity.
pub fn check_lambda_axioms<R: LambdaRing>(inst: &R, budget: LambdaBudget) -> AxiomReport {
    let samples = inst.samples();
    let pairs = inst.sample_pairs();
    let ps: Vec<_> = (1..=budget.max_k).map(universal_p).collect();
    let mut qs = Vec::new();
    for k in 1..=budget.max_kl {
        for l in 1..=budget.max_kl {
            qs.push(universal_q(k, l));
        }
    }

    let unary: Vec<AxiomRecord> = samples
        .par_iter()
        .flat_map_iter(|x| {
            let mut recs = Vec::new();
            let w = inst.render(x);
            let l0 = inst.lambda(0, x);
            recs.push(AxiomRecord::check("(i) lambda^0 = 1", w.clone(), l0 == inst.one(), || {
                (inst.render(&l0), "1".into())
            }));
            let l1 = inst.lambda(1, x);
            recs.push(AxiomRecord::check("(i) lambda^1 = id", w.clone(), &l1 == x, || {
                (inst.render(&l1), w.clone())
            }));
            let lx = lambdas(inst, x, budget.max_kl * budget.max_kl);
            for q in &qs {
                let lhs = inst.lambda(q.k, &lx[q.l]);
                let rhs = q.evaluate(
                    &lx,
                    inst.zero(),
                    &inst.one(),
                    |a, b| inst.add(a, b),
                    |a, b| inst.mul(a, b),
                    |a, c| inst.scale(a, c),
                );
                recs.push(AxiomRecord::check(
                    "(iv) lambda^k(lambda^l x) = q_kl",
                    format!("x={w}, k={}, l={}", q.k, q.l),
                    lhs == rhs,
                    || (inst.render(&lhs), inst.render(&rhs)),
                ));
            }
            recs
        })
        .collect();

    let binary: Vec<AxiomRecord> = pairs
        .par_iter()
        .flat_map_iter(|(x, y)| {
            let mut recs = Vec::new();
            let w = format!("x={}, y={}", inst.render(x), inst.render(y));
            let lx = lambdas(inst, x, budget.max_k);
            let ly = lambdas(inst, y, budget.max_k);
            let sum = inst.add(x, y);
            let prod = inst.mul(x, y);
            for k in 1..=budget.max_k {
                let lhs = inst.lambda(k, &sum);
                let mut rhs = inst.zero();
                for i in 0..=k {
                    rhs = inst.add(&rhs, &inst.mul(&lx[i], &ly[k - i]));
                }
                recs.push(AxiomRecord::check(
                    "(ii) lambda^k(x+y)",
                    format!("{w}, k={k}"),
                    lhs == rhs,
                    || (inst.render(&lhs), inst.render(&rhs)),
                ));
                let lhs = inst.lambda(k, &prod);
                let rhs = ps[k - 1].evaluate(
                    &lx,
                    &ly,
                    inst.zero(),
                    &inst.one(),
                    |a, b| inst.add(a, b),
                    |a, b| inst.mul(a, b),
                    |a, c| inst.scale(a, c),
                );
                recs.push(AxiomRecord::check(
                    "(iii) lambda^k(xy) = p_k",
                    format!("{w}, k={k}"),
                    lhs == rhs,
                    || (inst.render(&lhs), inst.render(&rhs)),
                ));
            }
            recs
        })
        .collect();

    AxiomReport::from_records(unary.into_iter().chain(binary).collect())
}

/// `ℤ` with `λ^n(m) = C(m, n)`, extended to negative `m` by the same
/// falling-factorial formula.
#[derive(Clone, Debug)]
pub struct IntegerLambdaRing {
    pub max_abs: i64,
}

pub fn binomial_signed(m: &BigInt, n: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= m - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

impl LambdaRing for IntegerLambdaRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn add(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x + y
    }
    fn mul(&self, x: &BigInt, y: &BigInt) -> BigInt {
        x * y
    }
    fn scale(&self, x: &BigInt, c: &BigInt) -> BigInt {
        x * c
    }
    fn lambda(&self, n: usize, x: &BigInt) -> BigInt {
        binomial_signed(x, n)
    }
    fn samples(&self) -> Vec<BigInt> {
        (-self.max_abs..=self.max_abs).map(BigInt::from).collect()
    }
    fn render(&self, x: &BigInt) -> String {
        x.to_string()
    }
}

/// The ring of symmetric functions with `λ^n = e_n ∘ −`.
#[derive(Clone, Debug)]
pub struct SymFuncLambdaRing {
    /// Schur functions up to this degree are the samples.
    pub max_degree: usize,
}

impl LambdaRing for SymFuncLambdaRing {
    type Elem = SymFunc;

    fn zero(&self) -> SymFunc {
        SymFunc::zero()
    }
    fn one(&self) -> SymFunc {
        SymFunc::one()
    }
    fn add(&self, x: &SymFunc, y: &SymFunc) -> SymFunc {
        x + y
    }
    fn mul(&self, x: &SymFunc, y: &SymFunc) -> SymFunc {
        x.multiply(y)
    }
    fn scale(&self, x: &SymFunc, c: &BigInt) -> SymFunc {
        x.scale(&BigRational::from(c.clone()))
    }
    fn lambda(&self, n: usize, x: &SymFunc) -> SymFunc {
        SymFunc::elementary(Partition::row(n)).plethysm(x)
    }
    fn samples(&self) -> Vec<SymFunc> {
        (0..=self.max_degree)
            .flat_map(gen_partitions)
            .map(SymFunc::schur)
            .collect()
    }
    fn render(&self, x: &SymFunc) -> String {
        x.expand(Basis::S).to_string()
    }
}

/// `λ^n = e_n ∘ x` in any plethystic algebra.
pub fn lambda_plethysm<A: PlethysticAlgebra>(n: usize, x: &A) -> A {
    crate::symcore::plethysm_into(&SymFunc::elementary(Partition::row(n)), x)
}
