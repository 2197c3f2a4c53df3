use std::collections::{HashMap, VecDeque};

use crate::perm::Perm;
use crate::{OracleError, Result};

/// Largest group the oracle will enumerate.
pub const ORDER_LIMIT: usize = 1_000_000;

/// A conjugacy class: its first-found representative and member indices.
#[derive(Clone, Debug)]
pub struct Class {
    pub rep: Perm,
    pub members: Vec<usize>,
}

impl Class {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A concrete permutation group with every element enumerated.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    classes: Vec<Class>,
    class_of: Vec<usize>,
}

impl PermGroup {
    /// Closure of the generators under composition.
    pub fn generate(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(OracleError::Degree { expected: degree, found: g.degree() });
            }
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for s in &generators {
                let p = elements[i].compose(s);
                if !index.contains_key(&p) {
                    if elements.len() == ORDER_LIMIT {
                        return Err(OracleError::OrderLimit(ORDER_LIMIT));
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        // closure: right multiplication by every generator stays inside
        debug_assert!(elements
            .iter()
            .all(|e| generators.iter().all(|s| index.contains_key(&e.compose(s)))));

        let mut class_of = vec![usize::MAX; elements.len()];
        let mut classes = Vec::new();
        for start in 0..elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for s in &generators {
                    let conj = s.compose(&elements[i]).compose(&s.inverse());
                    let j = index[&conj];
                    if class_of[j] == usize::MAX {
                        class_of[j] = c;
                        members.push(j);
                        queue.push_back(j);
                    }
                }
            }
            members.sort_unstable();
            classes.push(Class { rep: elements[start].clone(), members });
        }
        Ok(PermGroup { degree, generators, elements, index, classes, class_of })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn classes(&self) -> &[Class] {
        &self.classes
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    /// Position of an element in [`elements`](Self::elements).
    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Class index of an element; `None` if `g` is not in the group.
    pub fn class_index(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).map(|&i| self.class_of[i])
    }

    pub fn is_subgroup_of(&self, g: &PermGroup) -> bool {
        self.degree == g.degree && self.generators.iter().all(|s| g.contains(s))
    }

    /// Left coset representatives of `h` in `self`.
    pub fn coset_reps(&self, h: &PermGroup) -> Result<Vec<Perm>> {
        if !h.is_subgroup_of(self) {
            return Err(OracleError::NotSubgroup);
        }
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for (i, s) in self.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            for x in h.elements() {
                covered[self.index[&s.compose(x)]] = true;
            }
            reps.push(s.clone());
        }
        Ok(reps)
    }

    /// The subgroup of elements lying in both groups.
    pub fn intersection(&self, other: &PermGroup) -> Result<PermGroup> {
        let gens: Vec<Perm> =
            self.elements.iter().filter(|e| other.contains(e)).cloned().collect();
        PermGroup::generate(self.degree, gens)
    }

    /// `s H s⁻¹`.
    pub fn conjugate_by(&self, s: &Perm) -> Result<PermGroup> {
        let si = s.inverse();
        let gens = self.generators.iter().map(|g| s.compose(g).compose(&si)).collect();
        PermGroup::generate(self.degree, gens)
    }
}

fn shifted(p: &Perm, offset: usize, degree: usize) -> Perm {
    let mut img: Vec<usize> = (0..degree).collect();
    for x in 0..p.degree() {
        img[offset + x] = offset + p.apply(x);
    }
    Perm::from_images(img)
}

/// Generators of the full symmetric group on `{offset, …, offset+n−1}`
/// inside degree `degree`.
fn symmetric_gens(n: usize, offset: usize, degree: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    if n >= 2 {
        out.push(shifted(&Perm::cycle(n, &[0, 1]), offset, degree));
    }
    if n >= 3 {
        let all: Vec<usize> = (0..n).collect();
        out.push(shifted(&Perm::cycle(n, &all), offset, degree));
    }
    out
}

pub fn build_symmetric(n: usize) -> Result<PermGroup> {
    PermGroup::generate(n, symmetric_gens(n, 0, n))
}

/// `Σ_{a_1} × Σ_{a_2} × …` on consecutive blocks of `{0, …, Σa_i − 1}`.
pub fn build_young(sizes: &[usize]) -> Result<PermGroup> {
    let degree = sizes.iter().sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for &a in sizes {
        gens.extend(symmetric_gens(a, offset, degree));
        offset += a;
    }
    PermGroup::generate(degree, gens)
}

/// Generators of `Σ_l ≀ Σ_k` acting on `k` blocks `[0..l), [l..2l), …`
/// placed at `offset` in degree `degree`.
fn wreath_gens(l: usize, k: usize, offset: usize, degree: usize) -> Vec<Perm> {
    let mut gens = symmetric_gens(l, offset, degree);
    for top in symmetric_gens(k, 0, k) {
        gens.push(shifted(&block_lift(&top, l), offset, degree));
    }
    gens
}

/// The permutation of `k·l` points moving whole blocks of size `l` by `σ`.
pub fn block_lift(sigma: &Perm, l: usize) -> Perm {
    let k = sigma.degree();
    Perm::from_images((0..k * l).map(|x| sigma.apply(x / l) * l + x % l).collect())
}

/// `Σ_l ≀ Σ_k ≤ Σ_{lk}`, blocks of size `l`.
pub fn build_wreath(l: usize, k: usize) -> Result<PermGroup> {
    PermGroup::generate(l * k, wreath_gens(l, k, 0, l * k))
}

/// `B ≀ Σ_k` for any base group `B`, on `k` blocks of `B`'s degree.
pub fn wreath_of(base: &PermGroup, k: usize) -> Result<PermGroup> {
    let d = base.degree();
    let degree = d * k;
    let mut gens: Vec<Perm> = base.generators().iter().map(|g| shifted(g, 0, degree)).collect();
    for top in symmetric_gens(k, 0, k) {
        gens.push(block_lift(&top, d));
    }
    PermGroup::generate(degree, gens)
}

/// `Σ_n ≀ Σ_m` embedded in `Σ_m × Σ_{nm}` on `m + nm` points: the top
/// permutation acts on the first `m` points and the element itself on the
/// remaining `m` blocks of size `n`.
pub fn build_wreath_diagonal(n: usize, m: usize) -> Result<PermGroup> {
    let degree = m + n * m;
    let mut gens = symmetric_gens(n, m, degree);
    for top in symmetric_gens(m, 0, m) {
        gens.push(top.direct_sum(&block_lift(&top, n)));
    }
    PermGroup::generate(degree, gens)
}

/// `(Σ_n ≀ Σ_l) ≀ Σ_k` on `k` super-blocks of `l` blocks of size `n`.
pub fn build_iterated_wreath(n: usize, l: usize, k: usize) -> Result<PermGroup> {
    let degree = n * l * k;
    let mut gens = wreath_gens(n, l, 0, degree);
    for top in symmetric_gens(k, 0, k) {
        gens.push(block_lift(&top, n * l));
    }
    PermGroup::generate(degree, gens)
}

/// `(Σ_n ≀ Σ_i) × (Σ_n ≀ Σ_j)` inside `Σ_n ≀ Σ_{i+j}` placed diagonally in
/// `Σ_{i+j} × Σ_{n(i+j)}` as in [`build_wreath_diagonal`].
pub fn build_wreath_diagonal_pair(n: usize, i: usize, j: usize) -> Result<PermGroup> {
    let l = i + j;
    let degree = l + n * l;
    let mut gens = symmetric_gens(n, l, degree);
    if j > 0 {
        gens.extend(symmetric_gens(n, l + n * i, degree));
    }
    for (size, start) in [(i, 0), (j, i)] {
        for top in symmetric_gens(size, 0, size) {
            let mut t: Vec<usize> = (0..l).collect();
            for x in 0..size {
                t[start + x] = start + top.apply(x);
            }
            let t = Perm::from_images(t);
            gens.push(t.direct_sum(&block_lift(&t, n)));
        }
    }
    PermGroup::generate(degree, gens)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class_sizes(g: &PermGroup) -> Vec<usize> {
        let mut v: Vec<usize> = g.classes().iter().map(Class::size).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn small_groups() {
        let s3 = build_symmetric(3).unwrap();
        assert_eq!((s3.order(), s3.classes().len()), (6, 3));
        let w = build_wreath(2, 2).unwrap();
        assert_eq!((w.order(), w.classes().len()), (8, 5));
        assert_eq!(class_sizes(&w), vec![1, 1, 2, 2, 2]);
        let y = build_young(&[2, 1]).unwrap();
        assert_eq!(y.order(), 2);
        assert!(y.is_subgroup_of(&s3));
        assert_eq!(s3.coset_reps(&y).unwrap().len(), 3);
        for g in [&s3, &w, &y] {
            assert_eq!(class_sizes(g).iter().sum::<usize>(), g.order());
        }
    }

    #[test]
    fn wreath_orders() {
        assert_eq!(build_wreath(2, 3).unwrap().order(), 48);
        assert_eq!(build_wreath(3, 2).unwrap().order(), 72);
        assert_eq!(build_wreath_diagonal(2, 2).unwrap().order(), 8);
        assert_eq!(build_iterated_wreath(1, 2, 2).unwrap().order(), 8);
        assert_eq!(build_iterated_wreath(2, 2, 2).unwrap().order(), 128);
        let pair = build_wreath_diagonal_pair(2, 2, 1).unwrap();
        assert_eq!(pair.order(), 8 * 2);
        assert!(pair.is_subgroup_of(&build_wreath_diagonal(2, 3).unwrap()));
        let yw = wreath_of(&build_young(&[1, 1]).unwrap(), 2).unwrap();
        assert_eq!(yw.order(), 2);
        assert!(yw.is_subgroup_of(&build_wreath(2, 2).unwrap()));
    }

    #[test]
    fn order_guard() {
        assert!(matches!(build_symmetric(10), Err(OracleError::OrderLimit(_))));
    }
}
