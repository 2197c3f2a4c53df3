use num_bigint::BigInt;
use num_rational::BigRational;

use crate::classfn::ClassFunction;
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::Result;

/// A representation in which every group element sends each basis vector
/// to a signed basis vector.
pub trait MonomialRep {
    fn dim(&self) -> usize;
    /// `g · e_x = sign · e_y`, returned as `(y, sign)`.
    fn act(&self, g: &Perm, x: usize) -> (usize, i64);
}

/// The character, as a trace on the monomial basis.
pub fn monomial_character(g: &PermGroup, v: &dyn MonomialRep) -> ClassFunction {
    ClassFunction::from_fn(g, |x| {
        let t: i64 = (0..v.dim())
            .map(|b| match v.act(x, b) {
                (y, s) if y == b => s,
                _ => 0,
            })
            .sum();
        BigRational::from(BigInt::from(t))
    })
}

/// `C[G/H] ⊗ ε`: `G` permutes the cosets of `H` and the linear character
/// `ε` of `H` supplies the signs. `Ind_H^G ε` in its coset model.
pub struct CosetRep {
    reps: Vec<Perm>,
    inv: Vec<Perm>,
    sub: PermGroup,
    eps: Box<dyn Fn(&Perm) -> i64 + Send + Sync>,
}

impl CosetRep {
    pub fn new(
        g: &PermGroup,
        h: &PermGroup,
        eps: impl Fn(&Perm) -> i64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let reps = g.coset_reps(h)?;
        let inv = reps.iter().map(Perm::inverse).collect();
        Ok(CosetRep { reps, inv, sub: h.clone(), eps: Box::new(eps) })
    }

    /// A one-dimensional representation of `G` from a linear character.
    pub fn linear(g: &PermGroup, eps: impl Fn(&Perm) -> i64 + Send + Sync + 'static) -> Result<Self> {
        CosetRep::new(g, g, eps)
    }
}

impl MonomialRep for CosetRep {
    fn dim(&self) -> usize {
        self.reps.len()
    }

    fn act(&self, g: &Perm, x: usize) -> (usize, i64) {
        // g s_x = s_y h with h ∈ H
        let y = g.compose(&self.reps[x]);
        for (j, si) in self.inv.iter().enumerate() {
            let h = si.compose(&y);
            if self.sub.contains(&h) {
                return (j, (self.eps)(&h));
            }
        }
        unreachable!("cosets cover the group")
    }
}

/// `V^{⊗k}` as a representation of `G ≀ Σ_k`, realized on `k` blocks of
/// the base degree: `(g_1, …, g_k; σ)` sends `v_1 ⊗ … ⊗ v_k` to the tensor
/// with `g_i v_i` in slot `σ(i)`. The first `offset` points of an element
/// are ignored, which covers the diagonal embedding in `Σ_k × Σ_{dk}`.
pub struct PowerRep<'a> {
    pub base: &'a dyn MonomialRep,
    pub base_degree: usize,
    pub k: usize,
    pub offset: usize,
}

impl MonomialRep for PowerRep<'_> {
    fn dim(&self) -> usize {
        self.base.dim().pow(self.k as u32)
    }

    fn act(&self, w: &Perm, x: usize) -> (usize, i64) {
        let d = self.base.dim();
        let w = w.tail(self.offset);
        let (sigma, comps) = w.block_decompose(self.base_degree).expect("element preserves blocks");
        let mut digits = vec![0; self.k];
        let mut rest = x;
        for slot in digits.iter_mut() {
            *slot = rest % d;
            rest /= d;
        }
        let mut out = vec![0; self.k];
        let mut sign = 1;
        for i in 0..self.k {
            let (y, s) = self.base.act(&comps[i], digits[i]);
            out[sigma.apply(i)] = y;
            sign *= s;
        }
        let y = out.iter().rev().fold(0, |acc, &v| acc * d + v);
        (y, sign)
    }
}
