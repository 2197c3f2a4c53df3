//! Comparisons between the combinatorial engine and the permutation-group
//! oracle. Oracle classes are mapped to engine class labels here; the two
//! sides only ever meet at final values.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use klambda_core::rep_sn::{character_table, RepSn};
use klambda_core::symcore::{Basis, Partition};
use klambda_core::wreath::{
    delta_map, power_map, pullback, wreath_cross, wreath_induce, wreath_internal, wreath_restrict,
    wreath_table, MultiPartition, WreathRep,
};
use klambda_oracle::{
    build_symmetric, build_wreath, build_wreath_diagonal, cyclic_seeds, induced_character, inner,
    irreducible_table, monomial_character, restrict, symmetric_table, wreath_of, ClassFunction,
    CosetRep, MonomialRep, Perm, PermGroup, PowerRep,
};

/// Outcome of one comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }

    fn from_result(name: impl Into<String>, r: Result<(bool, String), String>) -> Self {
        match r {
            Ok((ok, detail)) => Check::new(name, ok, detail),
            Err(e) => Check::new(name, false, format!("error: {e}")),
        }
    }
}

fn part(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).expect("oracle cycle types are partitions")
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from(n.into())
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Label of a wreath element on `k` blocks of size `l`: each `r`-cycle of
/// the block permutation contributes a part `r` at the cycle type of `w^r`
/// restricted to one of its blocks.
pub fn wreath_class_label(w: &Perm, l: usize, k: usize) -> MultiPartition {
    let (sigma, _) = w.block_decompose(l).expect("element preserves blocks");
    let mut seen = vec![false; k];
    let mut parts: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for start in 0..k {
        if seen[start] {
            continue;
        }
        let mut r = 0;
        let mut b = start;
        while !seen[b] {
            seen[b] = true;
            b = sigma.apply(b);
            r += 1;
        }
        let wr = w.pow(r);
        let block: Vec<usize> = (0..l).map(|a| wr.apply(start * l + a) - start * l).collect();
        parts.entry(Perm::from_images(block).cycle_type()).or_default().push(r);
    }
    let entries = parts.into_iter().map(|(rho, mut rs)| {
        rs.sort_unstable_by(|a, b| b.cmp(a));
        (part(&rho), part(&rs))
    });
    MultiPartition::new(l, entries).expect("well-formed class label")
}

/// Oracle `Σ_n` rows keyed by partition, with values looked up by cycle type.
pub struct OracleSymmetric {
    pub group: PermGroup,
    pub rows: Vec<(Partition, ClassFunction)>,
}

impl OracleSymmetric {
    pub fn new(n: usize) -> Result<Self, String> {
        let (group, rows) = symmetric_table(n).map_err(err)?;
        let rows = rows.into_iter().map(|(lam, c)| (part(&lam), c)).collect();
        Ok(OracleSymmetric { group, rows })
    }

    /// `χ^λ` at any permutation of the right degree.
    pub fn value(&self, lambda: &Partition, x: &Perm) -> BigRational {
        let ct = x.cycle_type();
        let c = self
            .group
            .classes()
            .iter()
            .position(|c| c.rep.cycle_type() == ct)
            .expect("cycle types index classes");
        let row = &self.rows.iter().find(|(l, _)| l == lambda).expect("label").1;
        row.values[c].clone()
    }

    /// Multiplicities of the oracle irreducibles in a class function.
    pub fn decompose(&self, f: &ClassFunction) -> Result<RepSn, String> {
        let mut out = RepSn::zero(self.group.degree());
        for (lam, chi) in &self.rows {
            let m = inner(&self.group, f, chi);
            if !m.is_integer() {
                return Err(format!("non-integral multiplicity {m} at {lam}"));
            }
            out.add_term(lam.clone(), m.to_integer());
        }
        Ok(out)
    }
}

/// Oracle table of `Σ_l ≀ Σ_k` with rows matched to engine multipartitions
/// by comparing character values class by class.
pub struct OracleWreath {
    pub l: usize,
    pub k: usize,
    pub group: PermGroup,
    pub labels: Vec<MultiPartition>,
    pub rows: Vec<(MultiPartition, ClassFunction)>,
}

impl OracleWreath {
    pub fn new(l: usize, k: usize) -> Result<Self, String> {
        let group = build_wreath(l, k).map_err(err)?;
        let table = irreducible_table(&group, &cyclic_seeds(&group).map_err(err)?).map_err(err)?;
        let labels: Vec<MultiPartition> =
            group.classes().iter().map(|c| wreath_class_label(&c.rep, l, k)).collect();
        let core = wreath_table(l, k);
        let mut rows = Vec::new();
        let mut used = vec![false; table.len()];
        for phi in core.irreducibles() {
            let values: Vec<BigRational> =
                labels.iter().map(|c| int(core.value(phi, c).clone())).collect();
            let hit = (0..table.len()).find(|&i| !used[i] && table[i].values == values);
            match hit {
                Some(i) => {
                    used[i] = true;
                    rows.push((phi.clone(), table[i].clone()));
                }
                None => return Err(format!("no oracle row matches {phi}")),
            }
        }
        Ok(OracleWreath { l, k, group, labels, rows })
    }

    pub fn decompose(&self, f: &ClassFunction) -> Result<WreathRep, String> {
        let mut out = WreathRep::zero(self.l, self.k);
        for (phi, chi) in &self.rows {
            let m = inner(&self.group, f, chi);
            if !m.is_integer() {
                return Err(format!("non-integral multiplicity {m} at {phi}"));
            }
            out.add_term(phi.clone(), m.to_integer());
        }
        Ok(out)
    }

    pub fn row(&self, phi: &MultiPartition) -> &ClassFunction {
        &self.rows.iter().find(|(p, _)| p == phi).expect("label").1
    }
}

/// `Σ_n` tables: oracle rows (peeled from Young characters) equal the
/// Murnaghan–Nakayama rows, as an unordered set and label by label.
pub fn symmetric_tables_agree(n: usize) -> Check {
    Check::from_result(format!("S_{n} character table"), (|| {
        let o = OracleSymmetric::new(n)?;
        let core = character_table(n);
        let mut core_rows = Vec::new();
        let mut labelled = true;
        for (lam, chi) in &o.rows {
            let vals: Vec<BigRational> = o
                .group
                .classes()
                .iter()
                .map(|c| int(core.value(lam, &part(&c.rep.cycle_type()))))
                .collect();
            labelled &= vals == chi.values;
            core_rows.push(vals);
        }
        let mut a: Vec<_> = o.rows.iter().map(|(_, c)| c.values.clone()).collect();
        a.sort();
        core_rows.sort();
        Ok((a == core_rows && labelled, format!("{} rows", a.len())))
    })())
}

/// Wreath tables: the class labelling is a bijection and every engine row
/// appears among the oracle rows.
pub fn wreath_tables_agree(l: usize, k: usize) -> Check {
    Check::from_result(format!("S_{l}~S_{k} character table"), (|| {
        let o = OracleWreath::new(l, k)?;
        let mut labels = o.labels.clone();
        labels.sort();
        labels.dedup();
        let core = wreath_table(l, k);
        let bijective = labels.len() == o.labels.len() && labels.len() == core.classes().len();
        Ok((bijective && o.rows.len() == core.irreducibles().len(), format!("{} rows", o.rows.len())))
    })())
}

/// Induction to `Σ_{lk}` and restriction back, for every irreducible.
pub fn wreath_induction_agrees(l: usize, k: usize) -> Check {
    Check::from_result(format!("S_{l}~S_{k} induce/restrict"), (|| {
        let o = OracleWreath::new(l, k)?;
        let s = OracleSymmetric::new(l * k)?;
        let g = build_symmetric(l * k).map_err(err)?;
        for (phi, chi) in &o.rows {
            let up = induced_character(&o.group, &g, chi).map_err(err)?;
            let oracle = s.decompose(&up)?;
            let engine = wreath_induce(&WreathRep::irreducible(phi.clone())).map_err(err)?;
            if oracle != engine {
                return Ok((false, format!("Ind {phi}: oracle {oracle} engine {engine}")));
            }
        }
        for (nu, chi) in &s.rows {
            let down = restrict(&g, &o.group, chi).map_err(err)?;
            let oracle = o.decompose(&down)?;
            let engine = wreath_restrict(&RepSn::irreducible(nu.clone()), l, k).map_err(err)?;
            if oracle != engine {
                return Ok((false, format!("Res {nu}: oracle {oracle} engine {engine}")));
            }
        }
        Ok((true, format!("{} + {} irreducibles", o.rows.len(), s.rows.len())))
    })())
}

/// Monomial models of the Schur classes of degree ≤ 3 that are one-dimensional
/// or permutation modules: `[n]`, `[1^n]` and `[n] + [n−1,1]`.
pub fn monomial_inputs(n: usize) -> Result<Vec<(RepSn, Box<dyn MonomialRep>)>, String> {
    let g = build_symmetric(n).map_err(err)?;
    let mut out: Vec<(RepSn, Box<dyn MonomialRep>)> = vec![(
        RepSn::trivial(n),
        Box::new(CosetRep::linear(&g, |_| 1).map_err(err)?),
    )];
    if n >= 2 {
        out.push((RepSn::sign(n), Box::new(CosetRep::linear(&g, Perm::sign).map_err(err)?)));
        let stab = klambda_oracle::build_young(&[n - 1, 1]).map_err(err)?;
        let natural = &RepSn::trivial(n) + &RepSn::irreducible(part(&[n - 1, 1]));
        out.push((natural, Box::new(CosetRep::new(&g, &stab, |_| 1).map_err(err)?)));
    }
    Ok(out)
}

/// `𝒫^m(V)` for monomial `V`: traces of `V^{⊗m}` decomposed on the oracle.
pub fn power_maps_agree(n: usize, m: usize) -> Check {
    Check::from_result(format!("power map n={n} m={m}"), (|| {
        let o = OracleWreath::new(n, m)?;
        let mut count = 0;
        for (v, model) in monomial_inputs(n)? {
            let chi = monomial_character(
                &o.group,
                &PowerRep { base: model.as_ref(), base_degree: n, k: m, offset: 0 },
            );
            let oracle = o.decompose(&chi)?;
            let engine = power_map(&v, m).map_err(err)?;
            if oracle != engine {
                return Ok((false, format!("V={v}: oracle {oracle} engine {engine}")));
            }
            count += 1;
        }
        Ok((true, format!("{count} inputs")))
    })())
}

/// `p^*` along `Σ_l ≀ Σ_k → Σ_k` and the internal product `γ` on all pairs.
pub fn pullback_and_internal_agree(l: usize, k: usize) -> Check {
    Check::from_result(format!("S_{l}~S_{k} pullback/internal"), (|| {
        let o = OracleWreath::new(l, k)?;
        let top = OracleSymmetric::new(k)?;
        for (mu, _) in &top.rows {
            let chi = ClassFunction::from_fn(&o.group, |w| {
                let (sigma, _) = w.block_decompose(l).unwrap();
                top.value(mu, &sigma)
            });
            let oracle = o.decompose(&chi)?;
            let engine = pullback(&RepSn::irreducible(mu.clone()), l);
            if oracle != engine {
                return Ok((false, format!("p*{mu}: oracle {oracle} engine {engine}")));
            }
        }
        for (a, chi_a) in &o.rows {
            for (b, chi_b) in &o.rows {
                let oracle = o.decompose(&chi_a.mul(chi_b))?;
                let engine = wreath_internal(
                    &WreathRep::irreducible(a.clone()),
                    &WreathRep::irreducible(b.clone()),
                )
                .map_err(err)?;
                if oracle != engine {
                    return Ok((false, format!("{a} * {b}: oracle {oracle} engine {engine}")));
                }
            }
        }
        Ok((true, format!("{} pairs", o.rows.len() * o.rows.len())))
    })())
}

/// The cross product `R(Σ_l≀Σ_i) ⊗ R(Σ_l≀Σ_j) → R(Σ_l≀Σ_{i+j})` as induction
/// from the block-diagonal subgroup.
pub fn cross_agrees(l: usize, i: usize, j: usize) -> Check {
    Check::from_result(format!("cross S_{l}~S_{i} x S_{l}~S_{j}"), (|| {
        let big = OracleWreath::new(l, i + j)?;
        let left = OracleWreath::new(l, i)?;
        let right = OracleWreath::new(l, j)?;
        let degree = l * (i + j);
        let embed = |p: &Perm, offset: usize| {
            let mut img: Vec<usize> = (0..degree).collect();
            for x in 0..p.degree() {
                img[offset + x] = offset + p.apply(x);
            }
            Perm::from_images(img)
        };
        let gens: Vec<Perm> = left
            .group
            .generators()
            .iter()
            .map(|g| embed(g, 0))
            .chain(right.group.generators().iter().map(|g| embed(g, l * i)))
            .collect();
        let sub = PermGroup::generate(degree, gens).map_err(err)?;
        for (a, chi_a) in &left.rows {
            for (b, chi_b) in &right.rows {
                let f = ClassFunction::from_fn(&sub, |x| {
                    let head = Perm::from_images((0..l * i).map(|p| x.apply(p)).collect());
                    let tail = x.tail(l * i);
                    chi_a.value(&left.group, &head).unwrap() * chi_b.value(&right.group, &tail).unwrap()
                });
                let up = induced_character(&sub, &big.group, &f).map_err(err)?;
                let oracle = big.decompose(&up)?;
                let engine = wreath_cross(
                    &WreathRep::irreducible(a.clone()),
                    &WreathRep::irreducible(b.clone()),
                );
                if oracle != engine {
                    return Ok((false, format!("{a} x {b}: oracle {oracle} engine {engine}")));
                }
            }
        }
        Ok((true, format!("{} pairs", left.rows.len() * right.rows.len())))
    })())
}

/// `δ∘𝒫`: the power-map character on `Σ_n ≀ Σ_m`, placed diagonally in
/// `Σ_m × Σ_{nm}`, paired with every `χ^α ⊠ χ^β` by Frobenius reciprocity.
pub fn delta_agrees(n: usize, m: usize) -> Check {
    Check::from_result(format!("delta n={n} m={m}"), (|| {
        let h = build_wreath_diagonal(n, m).map_err(err)?;
        let top = OracleSymmetric::new(m)?;
        let bottom = OracleSymmetric::new(n * m)?;
        let mut count = 0;
        for (v, model) in monomial_inputs(n)? {
            let f = monomial_character(&h, &PowerRep { base: model.as_ref(), base_degree: n, k: m, offset: m });
            let mut oracle: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
            for (alpha, _) in &top.rows {
                for (beta, _) in &bottom.rows {
                    let g = ClassFunction::from_fn(&h, |x| {
                        let head = Perm::from_images((0..m).map(|p| x.apply(p)).collect());
                        top.value(alpha, &head) * bottom.value(beta, &x.tail(m))
                    });
                    let c = inner(&h, &f, &g);
                    if !c.is_integer() {
                        return Err(format!("non-integral multiplicity {c}"));
                    }
                    if !c.is_zero() {
                        oracle.insert((alpha.clone(), beta.clone()), c.to_integer());
                    }
                }
            }
            let mut engine: BTreeMap<(Partition, Partition), BigInt> = BTreeMap::new();
            for (coeff, alpha) in delta_map(&v, m).map_err(err)? {
                for (beta, c) in coeff.expand(Basis::S).terms {
                    if !c.is_zero() {
                        engine.insert((alpha.clone(), beta), c.to_integer());
                    }
                }
            }
            if oracle != engine {
                return Ok((false, format!("V={v}: oracle {oracle:?} engine {engine:?}")));
            }
            count += 1;
        }
        Ok((true, format!("{count} inputs")))
    })())
}

/// Every wreath quantity the axiom-5 budget touches, at the given pairs.
pub fn axiom5_wreath_checks(pairs: &[(usize, usize)]) -> Vec<Check> {
    let mut out = Vec::new();
    for &(l, k) in pairs {
        out.push(wreath_tables_agree(l, k));
        out.push(wreath_induction_agrees(l, k));
        out.push(pullback_and_internal_agree(l, k));
        out.push(power_maps_agree(l, k));
        for i in 1..k {
            out.push(cross_agrees(l, i, k - i));
        }
    }
    for n in 1..=2 {
        for m in 1..=6 {
            if n * m <= 6 {
                out.push(delta_agrees(n, m));
            }
        }
    }
    out
}

/// `Σ_1 ≀ Σ_k` is `Σ_k`; kept as a sanity anchor for the labelling.
pub fn trivial_base_agrees(k: usize) -> Check {
    Check::from_result(format!("S_1~S_{k} = S_{k}"), (|| {
        let g = wreath_of(&build_symmetric(1).map_err(err)?, k).map_err(err)?;
        Ok((g.order() == build_symmetric(k).map_err(err)?.order(), String::new()))
    })())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_of_dihedral_classes() {
        let g = build_wreath(2, 2).unwrap();
        let mut labels: Vec<String> =
            g.classes().iter().map(|c| wreath_class_label(&c.rep, 2, 2).to_string()).collect();
        labels.sort();
        assert_eq!(
            labels,
            vec!["{[1,1]->[1,1]}", "{[1,1]->[2]}", "{[2]->[1,1]}", "{[2]->[1],[1,1]->[1]}", "{[2]->[2]}"]
        );
    }

    #[test]
    fn small_cases() {
        for c in [
            symmetric_tables_agree(4),
            wreath_tables_agree(2, 2),
            wreath_induction_agrees(2, 2),
            power_maps_agree(2, 2),
            pullback_and_internal_agree(2, 2),
            cross_agrees(2, 1, 1),
            delta_agrees(2, 2),
            delta_agrees(1, 3),
            trivial_base_agrees(3),
        ] {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
