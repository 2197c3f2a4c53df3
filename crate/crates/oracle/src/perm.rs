use std::fmt;

/// A permutation of `{0, …, N−1}` stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    /// From an image list; panics unless it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "not a permutation: {images:?}");
            seen[i] = true;
        }
        Perm(images.into_iter().map(|i| i as u8).collect())
    }

    /// A single cycle on degree `n`, given as a list of points.
    pub fn cycle(n: usize, points: &[usize]) -> Self {
        let mut img: Vec<usize> = (0..n).collect();
        for (i, &p) in points.iter().enumerate() {
            img[p] = points[(i + 1) % points.len()];
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn pow(&self, e: usize) -> Perm {
        (0..e).fold(Perm::identity(self.degree()), |acc, _| acc.compose(self))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// Cycle lengths, largest first, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    pub fn fixed_points(&self) -> usize {
        self.0.iter().enumerate().filter(|&(i, &x)| i == x as usize).count()
    }

    /// `+1` or `−1`.
    pub fn sign(&self) -> i64 {
        let even = self.cycle_type().iter().filter(|&&c| c % 2 == 0).count();
        if even % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Acts on a disjoint union: `self` on `{0..n}`, `other` shifted up by `n`.
    pub fn direct_sum(&self, other: &Perm) -> Perm {
        let n = self.degree();
        let mut img: Vec<usize> = self.0.iter().map(|&x| x as usize).collect();
        img.extend(other.0.iter().map(|&x| x as usize + n));
        Perm::from_images(img)
    }

    /// The action on points `offset..`, renumbered from 0; those points
    /// must be stable.
    pub fn tail(&self, offset: usize) -> Perm {
        Perm::from_images(self.0[offset..].iter().map(|&x| x as usize - offset).collect())
    }

    /// Splits a permutation of `k` blocks of size `d` that maps blocks to
    /// blocks into the block permutation `σ` and the components `g_i`, where
    /// point `a` of block `i` goes to point `g_i(a)` of block `σ(i)`.
    /// Returns `None` if blocks are not preserved.
    pub fn block_decompose(&self, d: usize) -> Option<(Perm, Vec<Perm>)> {
        let k = self.degree() / d;
        let mut sigma = Vec::with_capacity(k);
        let mut comps = Vec::with_capacity(k);
        for i in 0..k {
            let target = self.apply(i * d) / d;
            let mut img = Vec::with_capacity(d);
            for a in 0..d {
                let y = self.apply(i * d + a);
                if y / d != target {
                    return None;
                }
                img.push(y - target * d);
            }
            sigma.push(target);
            comps.push(Perm::from_images(img));
        }
        Some((Perm::from_images(sigma), comps))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.apply(x);
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_cycles() {
        let a = Perm::cycle(4, &[0, 1]);
        let b = Perm::cycle(4, &[1, 2, 3]);
        let ab = a.compose(&b);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(3), 0);
        assert_eq!(ab.cycle_type(), vec![4]);
        assert_eq!(ab.sign(), -1);
        assert!(ab.compose(&ab.inverse()).is_identity());
        assert_eq!(format!("{ab:?}"), "(0 1 2 3)");
    }

    #[test]
    fn block_decomposition() {
        let swap = Perm::from_images(vec![2, 3, 0, 1]);
        let (s, g) = swap.block_decompose(2).unwrap();
        assert_eq!(s, Perm::cycle(2, &[0, 1]));
        assert!(g.iter().all(Perm::is_identity));
        assert!(Perm::cycle(4, &[1, 2]).block_decompose(2).is_none());
    }
}
