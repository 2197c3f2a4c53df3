use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::multipartition::{multipartitions, MultiPartition, WreathRep};
use super::table::WreathClassFunction;
use crate::error::{Error, Result};
use crate::rep_sn::{ch, ch_inverse, character_table, lr_product, RepSn};
use crate::symcore::{gen_partitions, Partition, SymFunc};

fn require_genuine(v: &RepSn) -> Result<()> {
    if v.is_genuine() {
        Ok(())
    } else {
        Err(Error::VirtualInput)
    }
}

/// Character of `V^{⊗m}` on `Σ_n ≀ Σ_m`: at a class, the product over the
/// cycles of the top permutation of `χ_V` at the cycle product.
pub fn power_map_class_function(v: &RepSn, m: usize) -> Result<WreathClassFunction> {
    require_genuine(v)?;
    let n = v.n();
    let chi = v.class_function();
    let t = character_table(n);
    Ok(WreathClassFunction::from_fn(n, m, |class| {
        let mut value = BigInt::one();
        for (rho, cycles) in class.assignment() {
            value *= num_traits::pow(chi[t.index_of(rho).unwrap()].clone(), cycles.len());
        }
        BigRational::from(value)
    }))
}

/// The power map `V ↦ V^{⊗m}` into `R(Σ_n ≀ Σ_m)`. Only genuine `V`.
pub fn power_map(v: &RepSn, m: usize) -> Result<WreathRep> {
    power_map_class_function(v, m)?.decompose()
}

/// `ch Ind_{Σ_l≀Σ_k}^{Σ_{lk}} Φ = ∏_μ s_{Φ(μ)} ∘ s_μ`.
pub fn wreath_induce_ch(phi: &MultiPartition) -> SymFunc {
    type Cache = Mutex<HashMap<MultiPartition, SymFunc>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = cache.lock().unwrap().get(phi) {
        return f.clone();
    }
    let f = phi.assignment().iter().fold(SymFunc::one(), |acc, (mu, pi)| {
        let piece = SymFunc::schur(pi.clone()).plethysm(&SymFunc::schur(mu.clone()));
        acc.multiply(&piece)
    });
    cache.lock().unwrap().insert(phi.clone(), f.clone());
    f
}

/// Induction along the block embedding `Σ_l ≀ Σ_k ≤ Σ_{lk}`.
pub fn wreath_induce(w: &WreathRep) -> Result<RepSn> {
    let mut f = SymFunc::zero();
    for (phi, c) in w.terms() {
        f = &f + &wreath_induce_ch(phi).scale(&BigRational::from(c.clone()));
    }
    ch_inverse(&f, w.l() * w.k())
}

/// Restriction from `Σ_{lk}`, defined by adjointness:
/// the multiplicity of `Φ` is `⟨ch a, ch Ind Φ⟩`.
pub fn wreath_restrict(a: &RepSn, l: usize, k: usize) -> Result<WreathRep> {
    if a.n() != l * k {
        return Err(Error::SizeMismatch { expected: l * k, found: a.n() });
    }
    let f = ch(a);
    let mut out = WreathRep::zero(l, k);
    for phi in multipartitions(l, k) {
        let m = f.hall_inner(&wreath_induce_ch(&phi));
        if !m.is_integer() {
            return Err(Error::NonIntegralMultiplicity { label: phi.to_string(), value: m.to_string() });
        }
        out.add_term(phi, m.to_integer());
    }
    Ok(out)
}

/// Restriction as a class function: `χ_a` at the embedded cycle type.
pub fn restrict_class_function(a: &RepSn, l: usize, k: usize) -> Result<WreathClassFunction> {
    if a.n() != l * k {
        return Err(Error::SizeMismatch { expected: l * k, found: a.n() });
    }
    let chi = a.class_function();
    let t = character_table(l * k);
    Ok(WreathClassFunction::from_fn(l, k, |c| {
        BigRational::from(chi[t.index_of(&c.embedded_type()).unwrap()].clone())
    }))
}

/// Pullback along the quotient `Σ_l ≀ Σ_k → Σ_k`: `[π] ↦ {(l) ↦ π}`.
pub fn pullback(w: &RepSn, l: usize) -> WreathRep {
    let mut out = WreathRep::zero(l, w.n());
    for (pi, c) in w.terms() {
        out.add_term(MultiPartition::trivial_content(l, pi.clone()), c.clone());
    }
    out
}

/// Internal tensor product `γ` on `R(Σ_l ≀ Σ_k)`.
pub fn wreath_internal(a: &WreathRep, b: &WreathRep) -> Result<WreathRep> {
    if a.l() != b.l() || a.k() != b.k() {
        return Err(Error::SizeMismatch { expected: a.l() * a.k(), found: b.l() * b.k() });
    }
    WreathClassFunction::of(a)
        .pointwise(&WreathClassFunction::of(b))
        .decompose()
}

/// Induction product `R(Σ_l≀Σ_i) ⊗ R(Σ_l≀Σ_j) → R(Σ_l≀Σ_{i+j})`, which is
/// the Littlewood–Richardson rule applied separately to each key.
pub fn wreath_cross(a: &WreathRep, b: &WreathRep) -> WreathRep {
    assert_eq!(a.l(), b.l(), "wreath products over different base groups");
    let l = a.l();
    let mut out = WreathRep::zero(l, a.k() + b.k());
    for (phi, ca) in a.terms() {
        for (psi, cb) in b.terms() {
            let keys: Vec<Partition> = phi
                .assignment()
                .keys()
                .chain(psi.assignment().keys())
                .cloned()
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            // expand key by key
            let mut partial: Vec<(Vec<(Partition, Partition)>, BigInt)> = vec![(Vec::new(), ca * cb)];
            for key in keys {
                let x = phi.get(&key).cloned().unwrap_or_default();
                let y = psi.get(&key).cloned().unwrap_or_default();
                let prod = lr_product(&x, &y);
                let mut next = Vec::new();
                for (entries, c) in &partial {
                    for (nu, m) in prod.iter() {
                        let mut e = entries.clone();
                        e.push((key.clone(), nu.clone()));
                        next.push((e, c * m));
                    }
                }
                partial = next;
            }
            for (entries, c) in partial {
                out.add_term(MultiPartition::new(l, entries).unwrap(), c);
            }
        }
    }
    out
}

/// `δ^m_n ∘ 𝒫^m_n` on a genuine `V`: induce `V^{⊗m}` from `Σ_n ≀ Σ_m` to
/// `Σ_m × Σ_{nm}`. Each entry is `(left factor, μ)` where the left factor is
/// the `Σ_{nm}` part paired with `[μ]`; zero factors are omitted.
///
/// Computed by summing the induced character over wreath classes, without
/// wreath character tables.
pub fn delta_map(v: &RepSn, m: usize) -> Result<Vec<(SymFunc, Partition)>> {
    let f = power_map_class_function(v, m)?;
    let tm = character_table(m);
    let mus = gen_partitions(m);
    let mut left: Vec<BTreeMap<Partition, BigRational>> = vec![BTreeMap::new(); mus.len()];
    for (class, value) in f.values() {
        if value.is_zero() {
            continue;
        }
        let weight = value / BigRational::from(class.centralizer());
        let top = class.top_type();
        let col = tm.index_of(&top).unwrap();
        let embedded = class.embedded_type();
        for (i, acc) in left.iter_mut().enumerate() {
            let chi = tm.value_at(i, col);
            if chi != 0 {
                crate::symcore::add_into(acc, embedded.clone(), &weight * BigInt::from(chi));
            }
        }
    }
    Ok(mus
        .into_iter()
        .zip(left)
        .map(|(mu, terms)| (SymFunc::from_power_sums(terms), mu))
        .filter(|(f, _)| !f.is_zero())
        .collect())
}

/// The closed form `Σ_{μ⊢m} (s_μ ∘ f) ⊗ [μ]`, the value `δ∘𝒫` must take.
pub fn delta_closed_form(f: &SymFunc, m: usize) -> Vec<(SymFunc, Partition)> {
    gen_partitions(m)
        .into_iter()
        .map(|mu| (SymFunc::schur(mu.clone()).plethysm(f), mu))
        .filter(|(g, _)| !g.is_zero())
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn mp(l: usize, s: &str) -> MultiPartition {
        MultiPartition::parse(l, s).unwrap()
    }

    #[test]
    fn power_map_examples() {
        let w = power_map(&RepSn::trivial(1), 2).unwrap();
        assert_eq!(w, WreathRep::irreducible(mp(1, "{[1]->[2]}")));
        let w = power_map(&RepSn::sign(2), 2).unwrap();
        assert_eq!(w, WreathRep::irreducible(mp(2, "{[1,1]->[2]}")));
        assert_eq!(power_map(&(-&RepSn::sign(2)), 2), Err(Error::VirtualInput));
    }

    #[test]
    fn induce_examples() {
        let s = |parts: &[usize]| SymFunc::schur(p(parts));
        assert_eq!(wreath_induce_ch(&mp(2, "{[2]->[2]}")), &s(&[4]) + &s(&[2, 2]));
        assert_eq!(wreath_induce_ch(&mp(2, "{[2]->[1,1]}")), s(&[3, 1]));
        assert_eq!(wreath_induce_ch(&mp(2, "{[1,1]->[2]}")), &s(&[2, 2]) + &s(&[1, 1, 1, 1]));
    }

    #[test]
    fn restrict_matches_class_function_route() {
        for (l, k) in [(1, 2), (2, 2), (1, 3), (3, 2), (2, 3)] {
            for lambda in gen_partitions(l * k) {
                let a = RepSn::irreducible(lambda);
                let adj = wreath_restrict(&a, l, k).unwrap();
                let direct = restrict_class_function(&a, l, k).unwrap().decompose().unwrap();
                assert_eq!(adj, direct);
            }
        }
    }

    #[test]
    fn restrict_s31() {
        let w = wreath_restrict(&RepSn::irreducible(p(&[3, 1])), 2, 2).unwrap();
        let mut expected = WreathRep::irreducible(mp(2, "{[2]->[1,1]}"));
        expected.add_term(mp(2, "{[2]->[1],[1,1]->[1]}"), BigInt::one());
        assert_eq!(w, expected);
    }

    #[test]
    fn internal_examples() {
        let a = WreathRep::irreducible(mp(2, "{[1,1]->[2]}"));
        assert_eq!(wreath_internal(&a, &a).unwrap(), WreathRep::trivial(2, 2));
        let b = WreathRep::irreducible(mp(2, "{[2]->[1],[1,1]->[1]}"));
        assert_eq!(wreath_internal(&b, &a).unwrap(), b);
    }

    #[test]
    fn delta_matches_closed_form() {
        for lambda in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let v = RepSn::irreducible(lambda.clone());
            for m in 0..=3 {
                assert_eq!(delta_map(&v, m).unwrap(), delta_closed_form(&ch(&v), m), "{lambda} {m}");
            }
        }
    }

    #[test]
    fn cross_matches_block_induction() {
        // Ind from Σ_2≀Σ_1 × Σ_2≀Σ_1 of {[2]->[1]} ⊠ {[1,1]->[1]} is the
        // irreducible with those blocks
        let a = WreathRep::irreducible(mp(2, "{[2]->[1]}"));
        let b = WreathRep::irreducible(mp(2, "{[1,1]->[1]}"));
        assert_eq!(wreath_cross(&a, &b), WreathRep::irreducible(mp(2, "{[2]->[1],[1,1]->[1]}")));
        let c = wreath_cross(&a, &a);
        assert_eq!(c.dimension(), BigInt::from(2));
    }
}
