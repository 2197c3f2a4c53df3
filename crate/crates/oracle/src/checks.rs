use crate::classfn::{induced_character, induced_characters, inner, restrict, ClassFunction};
use crate::group::{
    build_iterated_wreath, build_symmetric, build_wreath, build_wreath_diagonal,
    build_wreath_diagonal_pair, build_young, wreath_of, PermGroup,
};
use crate::monomial::{monomial_character, CosetRep, MonomialRep, PowerRep};
use crate::perm::Perm;
use crate::Result;

/// `⟨Ind f, g⟩_G = ⟨f, Res g⟩_H` for every pair of class indicators.
pub fn frobenius_holds(h: &PermGroup, g: &PermGroup) -> Result<bool> {
    let g_ind: Vec<ClassFunction> =
        (0..g.classes().len()).map(|c| ClassFunction::indicator(g, c)).collect();
    for c in 0..h.classes().len() {
        let f = ClassFunction::indicator(h, c);
        let up = induced_character(h, g, &f)?;
        for d in &g_ind {
            if inner(g, &up, d) != inner(h, &f, &restrict(g, h, d)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Representatives of the double cosets `K s H` in `G`. Each double coset
/// is swept as an orbit under the generators of `K` on the left and `H` on
/// the right.
pub fn double_coset_reps(g: &PermGroup, k: &PermGroup, h: &PermGroup) -> Vec<Perm> {
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    for (start, s) in g.elements().iter().enumerate() {
        if covered[start] {
            continue;
        }
        covered[start] = true;
        let mut stack = vec![s.clone()];
        while let Some(x) = stack.pop() {
            let left = k.generators().iter().map(|a| a.compose(&x));
            let right = h.generators().iter().map(|b| x.compose(b));
            for y in left.chain(right).collect::<Vec<_>>() {
                let i = g.index_of(&y).expect("K and H lie in G");
                if !covered[i] {
                    covered[i] = true;
                    stack.push(y);
                }
            }
        }
        reps.push(s.clone());
    }
    reps
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MackeyReport {
    pub double_cosets: usize,
    /// `K ∩ H` has the same elements as `(Σ_n≀Σ_i) × (Σ_n≀Σ_j)`.
    pub intersection_matches: bool,
    /// Mackey's formula held for every class indicator of `H`.
    pub formula_holds: bool,
}

impl MackeyReport {
    pub fn holds(&self) -> bool {
        self.intersection_matches && self.formula_holds
    }
}

/// `H = Σ_n ≀ Σ_l` placed diagonally in `G = Σ_l × Σ_{nl}` and
/// `K = Σ_i × Σ_j × Σ_{nl}` with `l = i + j`: checks
/// `Res_K Ind_H^G f = Σ_s Ind_{K ∩ sHs⁻¹}^K (f ∘ conj_s)` over double cosets.
pub fn mackey_instance(n: usize, i: usize, j: usize) -> Result<MackeyReport> {
    let l = i + j;
    let g = build_young(&[l, n * l])?;
    let h = build_wreath_diagonal(n, l)?;
    let k = build_young(&[i, j, n * l])?;
    let reps = double_coset_reps(&g, &k, &h);
    let pair = build_wreath_diagonal_pair(n, i, j)?;
    let kh = k.intersection(&h)?;
    let intersection_matches =
        kh.order() == pair.order() && pair.elements().iter().all(|x| kh.contains(x));

    let mut pieces = Vec::new();
    for s in &reps {
        let sh = h.conjugate_by(s)?;
        let inter = k.intersection(&sh)?;
        pieces.push((s.clone(), inter));
    }
    let indicators: Vec<ClassFunction> =
        (0..h.classes().len()).map(|c| ClassFunction::indicator(&h, c)).collect();
    let induced = induced_characters(&h, &g, &indicators)?;
    let mut formula_holds = true;
    for (f, up) in indicators.iter().zip(&induced) {
        let lhs = restrict(&g, &k, up)?;
        let mut rhs = ClassFunction { values: vec![Default::default(); k.classes().len()] };
        for (s, inter) in &pieces {
            let si = s.inverse();
            let fs = ClassFunction::from_fn(inter, |x| {
                f.value(&h, &si.compose(x).compose(s)).unwrap().clone()
            });
            rhs = rhs.add(&induced_character(inter, &k, &fs)?);
        }
        formula_holds &= lhs == rhs;
    }
    Ok(MackeyReport { double_cosets: reps.len(), intersection_matches, formula_holds })
}

/// Linear characters used to twist coset representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    Trivial,
    Sign,
}

impl Twist {
    fn eval(self, p: &Perm) -> i64 {
        match self {
            Twist::Trivial => 1,
            Twist::Sign => p.sign(),
        }
    }
}

/// For `H` the Young subgroup on `sizes` inside `G = Σ_{Σ sizes}` and `E`
/// the twist of `H`: the `k`-th power of `Ind_H^G E` equals the induction of
/// the `k`-th power of `E` from `H ≀ Σ_k` to `G ≀ Σ_k`.
pub fn power_commutes_with_induction(sizes: &[usize], k: usize, twist: Twist) -> Result<bool> {
    let d: usize = sizes.iter().sum();
    let g = build_symmetric(d)?;
    let h = build_young(sizes)?;
    let gw = build_wreath(d, k)?;
    let hw = wreath_of(&h, k)?;

    let ind = CosetRep::new(&g, &h, move |p| twist.eval(p))?;
    let lhs = monomial_character(&gw, &PowerRep { base: &ind, base_degree: d, k, offset: 0 });

    let e = CosetRep::linear(&h, move |p| twist.eval(p))?;
    let pe = monomial_character(&hw, &PowerRep { base: &e, base_degree: d, k, offset: 0 });
    let rhs = induced_character(&hw, &gw, &pe)?;
    Ok(lhs == rhs)
}

/// `𝒫^k ∘ 𝒫^l (V)` agrees with `𝒫^{kl}(V)` restricted to
/// `(Σ_n ≀ Σ_l) ≀ Σ_k ≤ Σ_n ≀ Σ_{kl}`.
pub fn iterated_power_restricts(n: usize, l: usize, k: usize, v: &dyn MonomialRep) -> Result<bool> {
    let big = build_wreath(n, l * k)?;
    let sub = build_iterated_wreath(n, l, k)?;
    let full = monomial_character(&big, &PowerRep { base: v, base_degree: n, k: l * k, offset: 0 });
    let lhs = restrict(&big, &sub, &full)?;
    let inner_power = PowerRep { base: v, base_degree: n, k: l, offset: 0 };
    let rhs = monomial_character(
        &sub,
        &PowerRep { base: &inner_power, base_degree: n * l, k, offset: 0 },
    );
    Ok(lhs == rhs)
}
