//! Irreducible characters of `Σ_l ≀ Σ_k` by the induction construction.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::multipartition::{multipartitions, ClassLabel, MultiPartition, WreathRep};
use crate::error::{Error, Result};
use crate::rep_sn::character_table;
use crate::symcore::Partition;

/// Character table of `Σ_l ≀ Σ_k`: rows are multipartitions, columns class
/// labels, both in the derived order.
#[derive(Debug)]
pub struct WreathTable {
    l: usize,
    k: usize,
    classes: Vec<ClassLabel>,
    class_index: HashMap<ClassLabel, usize>,
    centralizers: Vec<BigInt>,
    irreducibles: Vec<MultiPartition>,
    irr_index: HashMap<MultiPartition, usize>,
    values: Vec<Vec<BigInt>>,
}

impl WreathTable {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn classes(&self) -> &[ClassLabel] {
        &self.classes
    }

    pub fn class_index(&self, c: &ClassLabel) -> Option<usize> {
        self.class_index.get(c).copied()
    }

    pub fn centralizers(&self) -> &[BigInt] {
        &self.centralizers
    }

    pub fn irreducibles(&self) -> &[MultiPartition] {
        &self.irreducibles
    }

    pub fn row(&self, phi: &MultiPartition) -> &[BigInt] {
        &self.values[self.irr_index[phi]]
    }

    pub fn value(&self, phi: &MultiPartition, class: &ClassLabel) -> &BigInt {
        &self.values[self.irr_index[phi]][self.class_index[class]]
    }
}

type Cache = Mutex<HashMap<(usize, usize), Arc<WreathTable>>>;

pub fn wreath_table(l: usize, k: usize) -> Arc<WreathTable> {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(l, k)) {
        return t.clone();
    }
    let t = Arc::new(build(l, k));
    cache.lock().unwrap().entry((l, k)).or_insert(t).clone()
}

/// Every way to split the cycles of `class` into consecutive blocks of the
/// given sizes, as tuples of class labels of the block subgroups.
pub(crate) fn splits(class: &ClassLabel, sizes: &[usize]) -> Vec<Vec<ClassLabel>> {
    // items: (ρ, cycle length r, multiplicity)
    let mut items: Vec<(Partition, usize, usize)> = Vec::new();
    for (rho, pi) in class.assignment() {
        for (r, m) in pi.multiplicities() {
            items.push((rho.clone(), r, m));
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<Vec<usize>> = Vec::new();
    let mut remaining: Vec<usize> = items.iter().map(|it| it.2).collect();
    split_rec(&items, sizes, 0, &mut remaining, &mut chosen, &mut out, class.l());
    out
}

fn split_rec(
    items: &[(Partition, usize, usize)],
    sizes: &[usize],
    block: usize,
    remaining: &mut Vec<usize>,
    chosen: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<ClassLabel>>,
    l: usize,
) {
    if block == sizes.len() {
        if remaining.iter().all(|&r| r == 0) {
            let labels = chosen
                .iter()
                .map(|counts| {
                    let mut per_rho: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
                    for (item, &c) in items.iter().zip(counts) {
                        per_rho
                            .entry(item.0.clone())
                            .or_default()
                            .extend(std::iter::repeat_n(item.1, c));
                    }
                    MultiPartition::new(
                        l,
                        per_rho.into_iter().map(|(rho, v)| (rho, Partition::from_unsorted(v))),
                    )
                    .unwrap()
                })
                .collect();
            out.push(labels);
        }
        return;
    }
    let mut counts = vec![0usize; items.len()];
    choose(items, sizes, block, 0, sizes[block], &mut counts, remaining, chosen, out, l);
}

#[allow(clippy::too_many_arguments)]
fn choose(
    items: &[(Partition, usize, usize)],
    sizes: &[usize],
    block: usize,
    i: usize,
    need: usize,
    counts: &mut Vec<usize>,
    remaining: &mut Vec<usize>,
    chosen: &mut Vec<Vec<usize>>,
    out: &mut Vec<Vec<ClassLabel>>,
    l: usize,
) {
    if i == items.len() {
        if need == 0 {
            chosen.push(counts.clone());
            split_rec(items, sizes, block + 1, remaining, chosen, out, l);
            chosen.pop();
        }
        return;
    }
    let r = items[i].1;
    let max = remaining[i].min(need / r);
    for c in 0..=max {
        counts[i] = c;
        remaining[i] -= c;
        choose(items, sizes, block, i + 1, need - c * r, counts, remaining, chosen, out, l);
        remaining[i] += c;
    }
    counts[i] = 0;
}

/// Character of `V_μ^{⊗k} ⊗ p^*χ^π` on `Σ_l ≀ Σ_k` at a class.
fn block_character(mu: &Partition, pi: &Partition, class: &ClassLabel) -> BigInt {
    let l = mu.size();
    let t = character_table(l);
    let mut v = BigInt::from(character_table(pi.size()).value(pi, &class.top_type()));
    for (rho, cycles) in class.assignment() {
        v *= num_traits::pow(BigInt::from(t.value(mu, rho)), cycles.len());
    }
    v
}

/// Character of the irreducible `Φ` at a class, induced from the block
/// subgroup `∏_μ Σ_l ≀ Σ_{|Φ(μ)|}`.
pub(crate) fn irreducible_value(phi: &MultiPartition, class: &ClassLabel) -> BigRational {
    let blocks: Vec<(&Partition, &Partition)> = phi.assignment().iter().collect();
    let sizes: Vec<usize> = blocks.iter().map(|(_, pi)| pi.size()).collect();
    let mut sum = BigRational::zero();
    for split in splits(class, &sizes) {
        let mut term = BigRational::from(BigInt::from(1));
        for ((mu, pi), part) in blocks.iter().zip(&split) {
            term *= BigRational::new(block_character(mu, pi, part), part.centralizer());
        }
        sum += term;
    }
    sum * BigRational::from(class.centralizer())
}

fn build(l: usize, k: usize) -> WreathTable {
    let classes = multipartitions(l, k);
    let irreducibles = multipartitions(l, k);
    let values = irreducibles
        .iter()
        .map(|phi| {
            classes
                .iter()
                .map(|c| {
                    let v = irreducible_value(phi, c);
                    assert!(v.is_integer(), "wreath character value {v} is not an integer");
                    v.to_integer()
                })
                .collect()
        })
        .collect();
    WreathTable {
        l,
        k,
        class_index: classes.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect(),
        centralizers: classes.iter().map(ClassLabel::centralizer).collect(),
        irr_index: irreducibles.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect(),
        classes,
        irreducibles,
        values,
    }
}

/// A rational class function on `Σ_l ≀ Σ_k`, one value per class label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WreathClassFunction {
    l: usize,
    k: usize,
    values: BTreeMap<ClassLabel, BigRational>,
}

impl WreathClassFunction {
    /// Evaluates `f` on every class label of `Σ_l ≀ Σ_k`.
    pub fn from_fn(l: usize, k: usize, mut f: impl FnMut(&ClassLabel) -> BigRational) -> Self {
        let values = multipartitions(l, k).into_iter().map(|c| {
            let v = f(&c);
            (c, v)
        });
        WreathClassFunction { l, k, values: values.collect() }
    }

    pub fn of(rep: &WreathRep) -> Self {
        let t = wreath_table(rep.l(), rep.k());
        WreathClassFunction::from_fn(rep.l(), rep.k(), |c| {
            rep.terms()
                .map(|(phi, m)| BigRational::from(m * t.value(phi, c)))
                .sum()
        })
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn value(&self, class: &ClassLabel) -> BigRational {
        self.values.get(class).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn values(&self) -> &BTreeMap<ClassLabel, BigRational> {
        &self.values
    }

    pub fn pointwise(&self, other: &WreathClassFunction) -> WreathClassFunction {
        assert!(self.l == other.l && self.k == other.k, "wreath shapes differ");
        WreathClassFunction {
            l: self.l,
            k: self.k,
            values: self
                .values
                .iter()
                .map(|(c, v)| (c.clone(), v * other.value(c)))
                .collect(),
        }
    }

    /// `⟨self, other⟩ = Σ_c f(c) g(c) / |C(c)|`; characters here are real.
    pub fn inner(&self, other: &WreathClassFunction) -> BigRational {
        self.values
            .iter()
            .map(|(c, v)| v * other.value(c) / BigRational::from(c.centralizer()))
            .sum()
    }

    /// Multiplicities of irreducibles; errors if any is not an integer.
    pub fn decompose(&self) -> Result<WreathRep> {
        let t = wreath_table(self.l, self.k);
        let mut out = WreathRep::zero(self.l, self.k);
        for phi in t.irreducibles() {
            let mut m = BigRational::zero();
            for (i, c) in t.classes().iter().enumerate() {
                m += self.value(c) * BigRational::new(t.row(phi)[i].clone(), t.centralizers()[i].clone());
            }
            if !m.is_integer() {
                return Err(Error::NonIntegralMultiplicity {
                    label: phi.to_string(),
                    value: m.to_string(),
                });
            }
            out.add_term(phi.clone(), m.to_integer());
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthonormality() {
        for (l, k) in [(1, 3), (2, 2), (2, 3), (3, 2)] {
            let t = wreath_table(l, k);
            let irr = t.irreducibles();
            for a in irr {
                let fa = WreathClassFunction::of(&WreathRep::irreducible(a.clone()));
                for b in irr {
                    let fb = WreathClassFunction::of(&WreathRep::irreducible(b.clone()));
                    let expected = if a == b { 1 } else { 0 };
                    assert_eq!(fa.inner(&fb), BigRational::from(BigInt::from(expected)), "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn dihedral_table_has_one_two_dimensional_character() {
        let t = wreath_table(2, 2);
        let id = MultiPartition::new(2, [(Partition::column(2), Partition::column(2))]).unwrap();
        let dims: Vec<BigInt> = t.irreducibles().iter().map(|phi| t.value(phi, &id).clone()).collect();
        assert_eq!(dims.iter().filter(|d| **d == BigInt::from(2)).count(), 1);
        for phi in t.irreducibles() {
            assert_eq!(t.value(phi, &id), &phi.dimension());
        }
    }
}
