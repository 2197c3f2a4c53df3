//! The τ map, its derived map τ̇, and the τ-ring axiom checker.

use std::collections::BTreeMap;

use num_traits::Signed;
use rayon::prelude::*;

use super::report::{AxiomRecord, AxiomReport};
use super::series::{accumulate, int_scale, TauQ, TauSeries};
use crate::error::{Error, Result};
use crate::rep_sn::{ch_inverse, RepSn};
use crate::symcore::{gen_partitions, Basis, Partition, PlethysticAlgebra, SymFunc};
use crate::wreath::{delta_map, power_map, pullback, wreath_cross, wreath_internal, MultiPartition, WreathRep};

/// A model ring carrying its own τ.
pub trait TauModel: PlethysticAlgebra {
    fn tau(&self, cap: usize) -> Result<TauSeries<Self>>;
    fn render(&self) -> String;
}

/// `Σ_m Σ_{μ⊢m} (s_μ ∘ x) ⊗ [μ]`, valid for every `x` in a λ-ring.
pub fn tau_closed_form<A: PlethysticAlgebra>(x: &A, cap: usize) -> TauSeries<A> {
    let mut s = TauSeries::unit(cap);
    for m in 1..=cap {
        for mu in gen_partitions(m) {
            let v = crate::symcore::plethysm_into(&SymFunc::schur(mu.clone()), x);
            s.add_term(mu, v).expect("within cap");
        }
    }
    s
}

/// `τ` of a genuine representation: component `m` is `δ^m(𝒫^m V)`.
pub fn tau_genuine(v: &RepSn, cap: usize) -> Result<TauSeries<SymFunc>> {
    let mut s = TauSeries::unit(cap);
    for m in 1..=cap {
        for (f, mu) in delta_map(v, m)? {
            s.add_term(mu, f)?;
        }
    }
    Ok(s)
}

/// `τ` on the `𝒦(pt)` model. Each homogeneous part is written as `V⁺ − V⁻`
/// with genuine `V^±`; then `τ = τ(V⁺) × τ(V⁻)^{×-1}` and parts of different
/// degrees are combined with ×.
pub fn tau_symfunc(x: &SymFunc, cap: usize) -> Result<TauSeries<SymFunc>> {
    let mut acc = TauSeries::unit(cap);
    for n in x.degrees() {
        let v = ch_inverse(&x.homogeneous_part(n), n)?;
        let mut plus = RepSn::zero(n);
        let mut minus = RepSn::zero(n);
        for (lambda, c) in v.terms() {
            if c.is_negative() {
                minus.add_term(lambda.clone(), -c);
            } else {
                plus.add_term(lambda.clone(), c.clone());
            }
        }
        acc = acc.cross(&tau_genuine(&plus, cap)?)?;
        if !minus.is_zero() {
            acc = acc.cross(&tau_genuine(&minus, cap)?.cross_inverse()?)?;
        }
    }
    Ok(acc)
}

impl TauModel for SymFunc {
    fn tau(&self, cap: usize) -> Result<TauSeries<SymFunc>> {
        tau_symfunc(self, cap)
    }

    fn render(&self) -> String {
        self.expand(Basis::S).to_string()
    }
}

/// `λⁿ(x) = gₙ(τ(x))`.
pub fn lambda_from_tau<A: TauModel>(x: &A, n: usize, cap: usize) -> Result<A> {
    if n > cap {
        return Err(Error::CapExceeded { requested: n, cap });
    }
    x.tau(n)?.sign_projection(n)
}

/// Coefficient-valued series over `k` for a fixed `l`, used inside τ̇.
type QSeries<A> = Vec<BTreeMap<MultiPartition, A>>;

fn q_cross<A: PlethysticAlgebra>(a: &QSeries<A>, b: &QSeries<A>) -> QSeries<A> {
    let cap = a.len() - 1;
    let mut out: QSeries<A> = vec![BTreeMap::new(); cap + 1];
    for (n, slot) in out.iter_mut().enumerate() {
        for i in 0..=n {
            for (phi, x) in &a[i] {
                for (psi, y) in &b[n - i] {
                    let xy = x.mul(y);
                    let w = wreath_cross(&WreathRep::irreducible(phi.clone()), &WreathRep::irreducible(psi.clone()));
                    for (theta, c) in w.terms() {
                        accumulate(slot, theta.clone(), int_scale(&xy, c));
                    }
                }
            }
        }
    }
    out
}

/// `τ̇_l(a ⊗ [ν])` up to `k = cap`: the `k`-th component is
/// `Σ_{π⊢k} τ^k(a)_π ⊗ γ(p^*[π], 𝒫^k[ν])`.
fn tau_dot_term<A: TauModel>(a: &A, nu: &Partition, cap: usize) -> Result<QSeries<A>> {
    let l = nu.size();
    let t = a.tau(cap)?;
    let v = RepSn::irreducible(nu.clone());
    let mut out: QSeries<A> = vec![BTreeMap::new(); cap + 1];
    out[0].insert(MultiPartition::new(l, []).unwrap(), A::one());
    for (k, slot) in out.iter_mut().enumerate().skip(1) {
        let power = power_map(&v, k)?;
        for (pi, coeff) in t.component(k) {
            let pulled = pullback(&RepSn::irreducible(pi.clone()), l);
            let prod = wreath_internal(&pulled, &power)?;
            for (phi, c) in prod.terms() {
                accumulate(slot, phi.clone(), int_scale(coeff, c));
            }
        }
    }
    Ok(out)
}

/// τ̇ at the requested `(l, k)`: for each `l`, the ×-product over `ν ⊢ l` of
/// `τ̇_l(a_ν ⊗ [ν])`, where `a_ν` is the coefficient of `[ν]` in the input.
pub fn tau_dot<A: TauModel>(a: &TauSeries<A>, pairs: &[(usize, usize)]) -> Result<TauQ<A>> {
    let mut by_l: BTreeMap<usize, usize> = BTreeMap::new();
    for &(l, k) in pairs {
        if l > a.cap() {
            return Err(Error::CapExceeded { requested: l, cap: a.cap() });
        }
        let e = by_l.entry(l).or_insert(0);
        *e = (*e).max(k);
    }
    let mut series: BTreeMap<usize, QSeries<A>> = BTreeMap::new();
    for (&l, &kmax) in &by_l {
        let mut acc: QSeries<A> = vec![BTreeMap::new(); kmax + 1];
        acc[0].insert(MultiPartition::new(l, []).unwrap(), A::one());
        for (nu, coeff) in a.component(l) {
            acc = q_cross(&acc, &tau_dot_term(coeff, nu, kmax)?);
        }
        series.insert(l, acc);
    }
    let components = pairs
        .iter()
        .map(|&(l, k)| ((l, k), series[&l][k].clone()))
        .collect();
    Ok(TauQ { components })
}

/// What the τ-ring checker covers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauBudget {
    /// Schur inputs of degree up to this for axioms 1–4.
    pub max_degree: usize,
    /// Series cap for axioms 1–4.
    pub cap: usize,
    /// `(l, k)` pairs for axiom 5.
    pub axiom5_pairs: Vec<(usize, usize)>,
    /// Schur inputs of degree up to this for axiom 5.
    pub axiom5_max_degree: usize,
}

impl Default for TauBudget {
    fn default() -> Self {
        TauBudget {
            max_degree: 3,
            cap: 4,
            axiom5_pairs: vec![(1, 2), (1, 3), (2, 2), (3, 2), (2, 3)],
            axiom5_max_degree: 2,
        }
    }
}

fn schur_inputs(max_degree: usize) -> Vec<SymFunc> {
    (0..=max_degree).flat_map(gen_partitions).map(SymFunc::schur).collect()
}

fn render_series(s: &TauSeries<SymFunc>) -> String {
    s.render(|a| a.render())
}

fn record(axiom: &str, witness: String, res: Result<(bool, String, String)>) -> AxiomRecord {
    match res {
        Ok((ok, lhs, rhs)) => AxiomRecord::check(axiom, witness, ok, || (lhs, rhs)),
        Err(e) => AxiomRecord::check(axiom, witness, false, || (format!("error: {e}"), String::new())),
    }
}

/// Checks τ-ring axioms 1–5 on Schur inputs of the `𝒦(pt)` model.
pub fn check_tau_axioms(budget: &TauBudget) -> AxiomReport {
    let inputs = schur_inputs(budget.max_degree);
    let cap = budget.cap;
    let taus: Vec<TauSeries<SymFunc>> = inputs
        .par_iter()
        .map(|x| tau_symfunc(x, cap).expect("Schur functions are genuine"))
        .collect();

    let mut records: Vec<AxiomRecord> = inputs
        .par_iter()
        .zip(&taus)
        .flat_map_iter(|(x, t)| {
            let w = x.render();
            let mut recs = Vec::new();
            let mut expected = TauSeries::unit(cap);
            if !x.is_zero() {
                expected.add_term(Partition::row(1), x.clone()).unwrap();
            }
            let low = t.truncate(1);
            recs.push(AxiomRecord::check("1 leading terms", format!("x={w}"), low == expected.truncate(1), || {
                (render_series(&low), render_series(&expected))
            }));
            let lhs = t.coproduct_delta();
            let rhs = t.mu(t).unwrap();
            recs.push(AxiomRecord::check("3 delta tau = mu(tau,tau)", format!("x={w}"), lhs == rhs, || {
                (format!("{:?}", lhs.terms), format!("{:?}", rhs.terms))
            }));
            recs
        })
        .collect();

    let n = inputs.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    records.par_extend(pairs.par_iter().flat_map_iter(|&(i, j)| {
        let (x, y) = (&inputs[i], &inputs[j]);
        let w = format!("x={}, y={}", x.render(), y.render());
        let sum = record(
            "2 tau(x+y) = tau(x) x tau(y)",
            w.clone(),
            (|| {
                let lhs = tau_symfunc(&(x + y), cap)?;
                let rhs = taus[i].cross(&taus[j])?;
                Ok((lhs == rhs, render_series(&lhs), render_series(&rhs)))
            })(),
        );
        let prod = record(
            "4 tau(xy) = tau(x) . tau(y)",
            w,
            (|| {
                let lhs = tau_symfunc(&x.multiply(y), cap)?;
                let rhs = taus[i].dot(&taus[j])?;
                Ok((lhs == rhs, render_series(&lhs), render_series(&rhs)))
            })(),
        );
        [sum, prod]
    }));

    let max_lk = budget.axiom5_pairs.iter().map(|&(l, k)| l * k).max().unwrap_or(0);
    let axiom5_inputs = schur_inputs(budget.axiom5_max_degree);
    records.par_extend(axiom5_inputs.par_iter().flat_map_iter(|x| {
        let w = x.render();
        budget
            .axiom5_pairs
            .iter()
            .map(|&(l, k)| {
                record(
                    "5 tau_dot tau = box tau",
                    format!("x={w}, l={l}, k={k}"),
                    (|| {
                        let t = tau_symfunc(x, max_lk)?;
                        let lhs = tau_dot(&t, &[(l, k)])?;
                        let rhs = t.box_map(&[(l, k)])?;
                        Ok((lhs == rhs, lhs.render(|a| a.render()), rhs.render(|a| a.render())))
                    })(),
                )
            })
            .collect::<Vec<_>>()
    }));

    AxiomReport::from_records(records)
}

/// Compares `gₙ∘τ` with `eₙ` plethysm for `n ≤ max_n` on Schur inputs.
pub fn check_lambda_closed_form(max_n: usize, max_degree: usize) -> AxiomReport {
    let inputs = schur_inputs(max_degree);
    let records = inputs
        .par_iter()
        .flat_map_iter(|x| {
            let t = tau_symfunc(x, max_n).expect("Schur functions are genuine");
            (0..=max_n)
                .map(|n| {
                    let lhs = t.sign_projection(n).unwrap();
                    let rhs = super::lambda::lambda_plethysm(n, x);
                    AxiomRecord::check(
                        "g_n tau = e_n plethysm",
                        format!("x={}, n={n}", x.render()),
                        lhs == rhs,
                        || (lhs.render(), rhs.render()),
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect();
    AxiomReport::from_records(records)
}

/// `Σ_{i} λ^i(x) λ^{n-i}(y)` read off `gₙ(τ(x) × τ(y))`.
pub fn sign_projection_of_cross(x: &SymFunc, y: &SymFunc, n: usize) -> Result<SymFunc> {
    tau_symfunc(x, n)?.cross(&tau_symfunc(y, n)?)?.sign_projection(n)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> SymFunc {
        SymFunc::schur(p(parts))
    }

    #[test]
    fn tau_of_s1() {
        let t = tau_symfunc(&s(&[1]), 2).unwrap();
        assert_eq!(t.coeff(&p(&[])), SymFunc::one());
        assert_eq!(t.coeff(&p(&[1])), s(&[1]));
        assert_eq!(t.coeff(&p(&[2])), s(&[2]));
        assert_eq!(t.coeff(&p(&[1, 1])), s(&[1, 1]));
    }

    #[test]
    fn tau_of_zero_is_unit() {
        assert_eq!(tau_symfunc(&SymFunc::zero(), 3).unwrap(), TauSeries::unit(3));
    }

    #[test]
    fn virtual_tau_matches_closed_form() {
        let x = &s(&[2]) - &s(&[1]).scale(&num_rational::BigRational::from(num_bigint::BigInt::from(2)));
        assert_eq!(tau_symfunc(&x, 3).unwrap(), tau_closed_form(&x, 3));
    }

    #[test]
    fn lambda_spot_values() {
        assert_eq!(lambda_from_tau(&s(&[2]), 2, 4).unwrap(), s(&[3, 1]));
        assert_eq!(lambda_from_tau(&s(&[1, 1]), 2, 4).unwrap(), s(&[2, 1, 1]));
        assert_eq!(lambda_from_tau(&s(&[5]), 1, 4).unwrap(), s(&[5]));
        assert!(lambda_from_tau(&s(&[1]), 5, 4).is_err());
    }

    #[test]
    fn axiom5_small() {
        let t = tau_symfunc(&s(&[1]), 4).unwrap();
        let pairs = [(1, 2), (2, 2)];
        assert_eq!(tau_dot(&t, &pairs).unwrap(), t.box_map(&pairs).unwrap());
    }
}
