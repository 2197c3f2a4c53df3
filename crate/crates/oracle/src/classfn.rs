use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::group::PermGroup;
use crate::perm::Perm;
use crate::Result;

/// One rational value per conjugacy class, in the group's class order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

impl ClassFunction {
    pub fn from_fn(g: &PermGroup, f: impl Fn(&Perm) -> BigRational) -> Self {
        ClassFunction { values: g.classes().iter().map(|c| f(&c.rep)).collect() }
    }

    pub fn from_ints(values: &[i64]) -> Self {
        ClassFunction { values: values.iter().map(|&v| int(v)).collect() }
    }

    pub fn trivial(g: &PermGroup) -> Self {
        ClassFunction { values: vec![BigRational::one(); g.classes().len()] }
    }

    /// Indicator of class `c`.
    pub fn indicator(g: &PermGroup, c: usize) -> Self {
        let mut values = vec![BigRational::zero(); g.classes().len()];
        values[c] = BigRational::one();
        ClassFunction { values }
    }

    /// The value at the identity, which is class 0.
    pub fn degree(&self) -> &BigRational {
        &self.values[0]
    }

    pub fn value(&self, g: &PermGroup, x: &Perm) -> Option<&BigRational> {
        g.class_index(x).map(|c| &self.values[c])
    }

    pub fn add(&self, o: &Self) -> Self {
        ClassFunction { values: self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        ClassFunction { values: self.values.iter().zip(&o.values).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        ClassFunction { values: self.values.iter().zip(&o.values).map(|(a, b)| a * b).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        ClassFunction { values: self.values.iter().map(|a| a * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(BigRational::is_integer)
    }

    /// `g ↦ f(g²)`.
    pub fn square_map(&self, g: &PermGroup) -> Self {
        ClassFunction::from_fn(g, |x| self.value(g, &x.compose(x)).unwrap().clone())
    }
}

/// `⟨a, b⟩ = |G|⁻¹ Σ_g a(g) b(g)`; all characters here are real.
pub fn inner(g: &PermGroup, a: &ClassFunction, b: &ClassFunction) -> BigRational {
    let mut s = BigRational::zero();
    for (c, (x, y)) in g.classes().iter().zip(a.values.iter().zip(&b.values)) {
        s += x * y * int(c.size() as i64);
    }
    s / int(g.order() as i64)
}

pub fn restrict(g: &PermGroup, h: &PermGroup, f: &ClassFunction) -> Result<ClassFunction> {
    if !h.is_subgroup_of(g) {
        return Err(crate::OracleError::NotSubgroup);
    }
    Ok(ClassFunction::from_fn(h, |x| f.value(g, x).unwrap().clone()))
}

/// `Ind_H^G f (g) = Σ_{sH ∈ G/H} f°(s⁻¹ g s)`, summing over left coset
/// representatives, where `f°` vanishes off `H`.
pub fn induced_character(h: &PermGroup, g: &PermGroup, f: &ClassFunction) -> Result<ClassFunction> {
    Ok(induced_characters(h, g, std::slice::from_ref(f))?.pop().unwrap())
}

/// [`induced_character`] for several functions, sharing the coset walk.
pub fn induced_characters(
    h: &PermGroup,
    g: &PermGroup,
    fs: &[ClassFunction],
) -> Result<Vec<ClassFunction>> {
    let reps = g.coset_reps(h)?;
    let inv: Vec<Perm> = reps.iter().map(Perm::inverse).collect();
    let mut out = vec![ClassFunction { values: Vec::new() }; fs.len()];
    for c in g.classes() {
        let mut sums = vec![BigRational::zero(); fs.len()];
        for (r, ri) in reps.iter().zip(&inv) {
            if let Some(k) = h.class_index(&ri.compose(&c.rep).compose(r)) {
                for (s, f) in sums.iter_mut().zip(fs) {
                    *s += &f.values[k];
                }
            }
        }
        for (o, s) in out.iter_mut().zip(sums) {
            o.values.push(s);
        }
    }
    Ok(out)
}

/// Number of fixed points of each class representative under an action
/// on `{0, …, points−1}`.
pub fn permutation_character(
    g: &PermGroup,
    points: usize,
    action: impl Fn(&Perm, usize) -> usize,
) -> ClassFunction {
    ClassFunction::from_fn(g, |x| int((0..points).filter(|&p| action(x, p) == p).count() as i64))
}

/// The natural action on `{0, …, N−1}`.
pub fn point_character(g: &PermGroup) -> ClassFunction {
    permutation_character(g, g.degree(), |x, p| x.apply(p))
}

/// The action on left cosets of `h`.
pub fn coset_character(g: &PermGroup, h: &PermGroup) -> Result<ClassFunction> {
    let reps = g.coset_reps(h)?;
    let inv: Vec<Perm> = reps.iter().map(Perm::inverse).collect();
    let n = reps.len();
    Ok(permutation_character(g, n, |x, p| {
        let y = x.compose(&reps[p]);
        (0..n).find(|&q| h.contains(&inv[q].compose(&y))).unwrap()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_symmetric, build_wreath, build_young, PermGroup};

    #[test]
    fn induced_and_permutation_characters() {
        let s2 = build_symmetric(2).unwrap();
        let one = PermGroup::generate(2, vec![]).unwrap();
        let reg = induced_character(&one, &s2, &ClassFunction::trivial(&one)).unwrap();
        assert_eq!(reg, ClassFunction::from_ints(&[2, 0]));

        let s3 = build_symmetric(3).unwrap();
        let y = build_young(&[2, 1]).unwrap();
        let ind = induced_character(&y, &s3, &ClassFunction::trivial(&y)).unwrap();
        assert_eq!(ind, point_character(&s3));
        assert_eq!(coset_character(&s3, &y).unwrap(), ind);
        let mut v: Vec<i64> = ind.values.iter().map(|x| x.to_integer().try_into().unwrap()).collect();
        v.sort_unstable();
        assert_eq!(v, vec![0, 1, 3]);
        assert_eq!(inner(&s3, &ind, &ind), int(2));

        let w = build_wreath(2, 2).unwrap();
        let mut pts: Vec<BigRational> = point_character(&w).values;
        pts.sort();
        assert_eq!(pts, ClassFunction::from_ints(&[0, 0, 0, 2, 4]).values);
        let constant = permutation_character(&w, 3, |_, p| p);
        assert_eq!(constant, ClassFunction::from_ints(&[3; 5]));
    }

    #[test]
    fn not_a_subgroup() {
        let s3 = build_symmetric(3).unwrap();
        let w = build_wreath(2, 2).unwrap();
        assert!(induced_character(&w, &s3, &ClassFunction::trivial(&w)).is_err());
    }
}
