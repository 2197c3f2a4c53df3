use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use super::cells::{Cell, CellComplex};
use super::element::{tensor_label, KElement};
use crate::error::{Error, Result};
use crate::lambda_tau::{lambda_from_tau, lambda_plethysm, LambdaRing};
use crate::rep_sn::{ch_inverse, induction_product, RepSn};
use crate::symcore::linalg::det_bareiss;
use crate::symcore::{gen_partitions, Basis, Partition, SymFunc};

/// The free λ-ring on one generator per cell, truncated at a degree cap.
/// Degree `n` is spanned by the λ-monomials `∏_c ∏_i λ^{α_{c,i}}(x_c)`
/// with `Σ |α_c| = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModel {
    names: Vec<String>,
    cap: usize,
    /// Monomials up to this degree are the λ-ring samples.
    pub sample_degree: usize,
}

impl FreeModel {
    /// The model for the pair `(X, A)`: one generator per cell of `X` not in `A`.
    pub fn new(cx: &CellComplex, cap: usize) -> Result<Self> {
        cx.validate()?;
        Ok(FreeModel::on_cells(&cx.relative_cells(), cap))
    }

    pub fn on_cells(cells: &[&Cell], cap: usize) -> Self {
        FreeModel {
            names: cells.iter().map(|c| c.name.clone()).collect(),
            cap,
            sample_degree: 2,
        }
    }

    pub fn on_generators(g: usize, cap: usize) -> Self {
        FreeModel { names: (0..g).map(|i| format!("x{i}")).collect(), cap, sample_degree: 2 }
    }

    pub fn generators(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn generator(&self, i: usize) -> KElement {
        KElement::generator(i)
    }

    /// `λ^n(x)`, refused beyond the cap.
    pub fn lambda(&self, x: &KElement, n: usize) -> Result<KElement> {
        if n > self.cap {
            return Err(Error::CapExceeded { requested: n, cap: self.cap });
        }
        Ok(lambda_plethysm(n, x))
    }

    /// Exponent patterns `(α_c)` of the degree-`n` λ-monomials.
    pub fn basis(&self, n: usize) -> Vec<Vec<Partition>> {
        tuples(self.generators(), n)
    }

    /// `∏_c ∏_i λ^{α_{c,i}}(x_c)`.
    pub fn monomial(&self, alphas: &[Partition]) -> KElement {
        let mut acc = KElement::one();
        for (c, alpha) in alphas.iter().enumerate() {
            let x = self.generator(c);
            for &part in alpha.parts() {
                acc = acc.multiply(&lambda_plethysm(part, &x));
            }
        }
        acc
    }

    pub fn rank(&self, n: usize) -> usize {
        self.basis(n).len()
    }

    pub fn ranks(&self, upto: usize) -> Vec<usize> {
        (0..=upto).map(|n| self.rank(n)).collect()
    }

    /// Coefficients of the degree-`n` λ-monomials in the tensor Schur
    /// basis; one row per monomial, columns in the same order.
    pub fn monomial_schur_matrix(&self, n: usize) -> Result<Vec<Vec<BigInt>>> {
        let keys = self.basis(n);
        keys.iter()
            .map(|alphas| {
                let coeffs = self.monomial(alphas).schur_integral()?;
                Ok(keys
                    .iter()
                    .map(|k| coeffs.get(&trimmed(k)).cloned().unwrap_or_default())
                    .collect())
            })
            .collect()
    }

    pub fn monomial_schur_det(&self, n: usize) -> Result<BigInt> {
        Ok(det_bareiss(self.monomial_schur_matrix(n)?))
    }
}

fn trimmed(k: &[Partition]) -> Vec<Partition> {
    let mut v = k.to_vec();
    while v.last().is_some_and(Partition::is_empty) {
        v.pop();
    }
    v
}

/// All `g`-tuples of partitions with total size `n`.
fn tuples(g: usize, n: usize) -> Vec<Vec<Partition>> {
    if g == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for rest in tuples(g - 1, n - first) {
            for p in gen_partitions(first) {
                let mut t = vec![p];
                t.extend(rest.iter().cloned());
                out.push(t);
            }
        }
    }
    out
}

impl LambdaRing for FreeModel {
    type Elem = KElement;

    fn zero(&self) -> KElement {
        KElement::zero()
    }
    fn one(&self) -> KElement {
        KElement::one()
    }
    fn add(&self, x: &KElement, y: &KElement) -> KElement {
        x + y
    }
    fn mul(&self, x: &KElement, y: &KElement) -> KElement {
        x.multiply(y)
    }
    fn scale(&self, x: &KElement, c: &BigInt) -> KElement {
        x.scale(&BigRational::from(c.clone()))
    }
    fn lambda(&self, n: usize, x: &KElement) -> KElement {
        lambda_plethysm(n, x)
    }
    fn samples(&self) -> Vec<KElement> {
        (0..=self.sample_degree)
            .flat_map(|n| self.basis(n))
            .map(|a| self.monomial(&a))
            .collect()
    }
    /// Basis pairs whose degrees add up to at most `sample_degree`.
    fn sample_pairs(&self) -> Vec<(KElement, KElement)> {
        let mut out = Vec::new();
        for a in 0..=self.sample_degree {
            for b in 0..=self.sample_degree - a {
                for x in self.basis(a) {
                    for y in self.basis(b) {
                        out.push((self.monomial(&x), self.monomial(&y)));
                    }
                }
            }
        }
        out
    }
    fn render(&self, x: &KElement) -> String {
        x.to_string()
    }
}

/// Matrix of the λ-monomials `∏ λ^{α_i}(triv₁)` of degree `n` in the
/// irreducible basis of `R(Σ_n)`, with `λ^i(triv₁)` read off from τ.
pub fn point_monomial_matrix(n: usize) -> Result<Vec<Vec<BigInt>>> {
    let x = SymFunc::schur(Partition::row(1));
    let mut lambdas = vec![RepSn::trivial(0)];
    for i in 1..=n {
        lambdas.push(ch_inverse(&lambda_from_tau(&x, i, i)?, i)?);
    }
    let parts = gen_partitions(n);
    Ok(parts
        .iter()
        .map(|alpha| {
            let rep = alpha
                .parts()
                .iter()
                .fold(RepSn::trivial(0), |acc, &i| induction_product(&acc, &lambdas[i]));
            parts.iter().map(|mu| rep.coeff(mu)).collect()
        })
        .collect())
}

pub fn point_monomial_det(n: usize) -> Result<BigInt> {
    Ok(det_bareiss(point_monomial_matrix(n)?))
}

/// One row of a filtration rank table: entry `k` is
/// `rank K_k(Y, X) · rank K_{N−k}(X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankRow {
    pub n: usize,
    pub entries: Vec<u64>,
    pub sum: u64,
    /// Rank of the free model on all cells of `Y` in degree `N`.
    pub total: u64,
}

impl RankRow {
    pub fn consistent(&self) -> bool {
        self.sum == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankTable {
    pub rows: Vec<RankRow>,
}

impl RankTable {
    pub fn consistent(&self) -> bool {
        self.rows.iter().all(RankRow::consistent)
    }
}

impl std::fmt::Display for RankTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.entries.iter().map(u64::to_string).collect();
            write!(f, "N={}: total {} split {}", r.n, r.total, cells.join(","))?;
            if !r.consistent() {
                write!(f, " (split sums to {})", r.sum)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Ranks of the filtration quotients for `Y` relative to its subcomplex
/// `X` (the cells flagged `in_A`), for `N = 0..=max_n`.
pub fn rank_table(cx: &CellComplex, max_n: usize) -> Result<RankTable> {
    cx.validate()?;
    let rel = FreeModel::on_cells(&cx.relative_cells(), max_n).ranks(max_n);
    let sub = FreeModel::on_cells(&cx.subcomplex_cells(), max_n).ranks(max_n);
    let all: Vec<&Cell> = cx.cells.iter().collect();
    let full = FreeModel::on_cells(&all, max_n);
    let rows = (0..=max_n)
        .map(|n| {
            let entries: Vec<u64> = (0..=n).map(|k| (rel[k] * sub[n - k]) as u64).collect();
            RankRow { n, sum: entries.iter().sum(), entries, total: full.rank(n) as u64 }
        })
        .collect();
    Ok(RankTable { rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcisionReport {
    /// Generators of `K(X, A)`, one per cell of `X` outside `A`.
    pub left: Vec<String>,
    /// Generators of `K(B, A ∩ B)`.
    pub right: Vec<String>,
    pub left_ranks: Vec<usize>,
    pub right_ranks: Vec<usize>,
    pub holds: bool,
}

/// Compares the free models of `(X, A)` and `(B, A ∩ B)` for `X = A ∪ B`,
/// with `A` and `B` given by the `in_A` and `in_B` flags.
pub fn excision_check(cx: &CellComplex, cap: usize) -> Result<ExcisionReport> {
    cx.validate()?;
    if let Some(c) = cx.cells.iter().find(|c| !c.in_a && !c.in_b) {
        return Err(Error::InconsistentPartition(format!("cell {} lies in neither A nor B", c.name)));
    }
    let left: Vec<&Cell> = cx.cells.iter().filter(|c| !c.in_a).collect();
    let right: Vec<&Cell> = cx.cells.iter().filter(|c| c.in_b && !c.in_a).collect();
    let lm = FreeModel::on_cells(&left, cap);
    let rm = FreeModel::on_cells(&right, cap);
    let mut ln = lm.names().to_vec();
    let mut rn = rm.names().to_vec();
    ln.sort();
    rn.sort();
    let left_ranks = lm.ranks(cap);
    let right_ranks = rm.ranks(cap);
    let holds = ln == rn && left_ranks == right_ranks;
    Ok(ExcisionReport { left: ln, right: rn, left_ranks, right_ranks, holds })
}

/// Renders a λ-monomial exponent pattern, e.g. `λ^2(x0)λ^1(x1)`.
pub fn monomial_label(names: &[String], alphas: &[Partition]) -> String {
    let mut s = String::new();
    for (c, alpha) in alphas.iter().enumerate() {
        for part in alpha.parts() {
            s.push_str(&format!("λ^{part}({})", names[c]));
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

/// Tensor-Schur expansion keyed by its text label.
pub fn schur_terms(x: &KElement) -> BTreeMap<String, BigRational> {
    x.expand_tensor(Basis::S)
        .into_iter()
        .map(|(k, v)| (tensor_label(Basis::S, &k), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_tau::{check_lambda_axioms, LambdaBudget};

    #[test]
    fn one_generator_ranks_are_partition_counts() {
        let m = FreeModel::on_generators(1, 10);
        assert_eq!(m.ranks(10), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        let two = FreeModel::on_generators(2, 4);
        assert_eq!(two.ranks(4), vec![1, 2, 5, 10, 20]);
    }

    #[test]
    fn monomial_matrices_are_unimodular() {
        for n in 0..=5 {
            let d = point_monomial_det(n).unwrap();
            assert!(d == BigInt::from(1) || d == BigInt::from(-1), "n={n}: {d}");
        }
        let two = FreeModel::on_generators(2, 3);
        for n in 0..=3 {
            let d = two.monomial_schur_det(n).unwrap();
            assert!(d == BigInt::from(1) || d == BigInt::from(-1), "n={n}: {d}");
        }
    }

    #[test]
    fn lambda_respects_cap() {
        let m = FreeModel::on_generators(1, 2);
        assert!(matches!(m.lambda(&m.generator(0), 3), Err(Error::CapExceeded { .. })));
        assert_eq!(m.lambda(&m.generator(0), 2).unwrap().to_string(), "s[1,1]");
    }

    #[test]
    fn small_model_satisfies_axioms() {
        let mut m = FreeModel::on_generators(2, 4);
        m.sample_degree = 2;
        let r = check_lambda_axioms(&m, LambdaBudget { max_k: 2, max_kl: 2 });
        assert!(r.is_clean(), "{r}");
    }

    #[test]
    fn rank_tables() {
        let t = rank_table(&CellComplex::projective(1, 1), 2).unwrap();
        assert_eq!(t.rows[2].entries, vec![2, 1, 2]);
        assert_eq!(t.rows[2].sum, 5);
        assert!(t.consistent());
        let t = rank_table(&CellComplex::projective(2, 2), 1).unwrap();
        assert_eq!(t.rows[1].entries, vec![2, 1]);
        assert_eq!(t.rows[1].sum, 3);
    }

    #[test]
    fn excision_on_projective_plane() {
        let mut cx = CellComplex::projective(2, 2);
        cx.cells[0].in_b = true;
        cx.cells[2].in_b = true;
        let r = excision_check(&cx, 4).unwrap();
        assert!(r.holds);
        assert_eq!(r.left, vec!["e4".to_string()]);
        let bad = CellComplex::projective(2, 1);
        assert!(matches!(excision_check(&bad, 2), Err(Error::InconsistentPartition(_))));
    }

    #[test]
    fn lambda_agrees_with_tau_projection() {
        use crate::lambda_tau::lambda_from_tau;
        let m = FreeModel::on_generators(2, 4);
        let x = &m.generator(0) - &m.monomial(&[Partition::empty(), Partition::row(2)]);
        for n in 0..=3 {
            assert_eq!(lambda_from_tau(&x, n, n).unwrap(), m.lambda(&x, n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn lambda_three_of_two_at_rank_one() {
        // specialize x ↦ 1, where λ^i(1) = C(1, i)
        use crate::lambda_tau::binomial_signed;
        let c = |m: i64, i: usize| binomial_signed(&BigInt::from(m), i);
        let lhs = c(2, 3);
        let rhs = c(1, 3) * 2 + c(1, 2) * c(1, 1) * 2;
        assert_eq!(lhs, BigInt::from(0));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_labels() {
        let m = FreeModel::on_generators(2, 4);
        let a = vec![Partition::new(vec![2, 1]).unwrap(), Partition::row(1)];
        assert_eq!(monomial_label(m.names(), &a), "λ^2(x0)λ^1(x0)λ^1(x1)");
    }
}
