use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition: a weakly decreasing list of positive parts.
///
/// Ordering is graded: smaller sizes come first, and partitions of the same
/// size compare in descending lexicographic order, so `[3] < [2,1] < [1,1,1]`.
/// Every serialized collection keyed by partitions relies on this.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Validating constructor; rejects zero parts and increasing sequences.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let size = parts.iter().sum();
        Ok(Partition { parts, size })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n], size: n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts, size: self.size }
    }

    /// `m_i` for each part value `i` that occurs.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for &p in &self.parts {
            *out.entry(p).or_insert(0) += 1;
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the centralizer order of a permutation of cycle type λ.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, m) in self.multiplicities() {
            for j in 1..=m {
                z *= BigInt::from(i) * BigInt::from(j);
            }
        }
        z
    }

    /// Sign of a permutation of this cycle type: `(-1)^{|λ| - ℓ(λ)}`.
    pub fn sign(&self) -> i32 {
        if (self.size - self.parts.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts, size: self.size + other.size }
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * k).collect(),
            size: self.size * k,
        }
    }

    /// The partition with the first (largest) part removed.
    pub fn tail(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        Partition {
            parts: self.parts[1..].to_vec(),
            size: self.size - self.parts[0],
        }
    }

    /// Number of semistandard tableaux of this shape with entries at most `c`,
    /// i.e. `s_λ(1^c)`, by the hook-content formula.
    pub fn schur_at_ones(&self, c: usize) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        let conj = self.conjugate();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let content = c as i64 + j as i64 - i as i64;
                if content <= 0 {
                    return BigInt::from(0);
                }
                let hook = (row - j) + (conj.parts[j] - i) - 1;
                num *= BigInt::from(content);
                den *= BigInt::from(hook);
            }
        }
        num / den
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[3,1]`, `3,1`, `[]` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn gen_partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
                size: prefix.iter().sum(),
            });
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Free function form of [`Partition::conjugate`].
pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Independent count: every weakly decreasing sequence summing to n,
    // found by scanning all compositions.
    fn brute_force_count(n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        let mut count = 0;
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = vec![];
            let mut run = 1;
            for bit in 0..n - 1 {
                if mask & (1 << bit) != 0 {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
            if parts.windows(2).all(|w| w[0] >= w[1]) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn generation_counts_match_brute_force() {
        assert_eq!(gen_partitions(0), vec![Partition::empty()]);
        for n in 0..=10 {
            assert_eq!(gen_partitions(n).len(), brute_force_count(n), "n = {n}");
        }
        assert_eq!(gen_partitions(4).len(), 5);
        assert_eq!(gen_partitions(6).len(), 11);
        assert_eq!(gen_partitions(8).len(), 22);
    }

    #[test]
    fn generation_is_descending_lex_without_duplicates() {
        let ps = gen_partitions(7);
        for w in ps.windows(2) {
            assert!(w[0].parts() > w[1].parts());
            assert!(w[0] < w[1], "graded order agrees within a degree");
        }
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(Partition::row(5).conjugate(), Partition::column(5));
        for n in 0..=8 {
            for q in gen_partitions(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn validation_rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("[3,x]".parse::<Partition>().is_err());
        assert_eq!("[2,1,1]".parse::<Partition>().unwrap(), p(&[2, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
    }

    #[test]
    fn z_values() {
        assert_eq!(p(&[3]).z(), BigInt::from(3));
        assert_eq!(p(&[1, 1, 1]).z(), BigInt::from(6));
        assert_eq!(p(&[2, 1]).z(), BigInt::from(2));
        assert_eq!(p(&[2, 2, 1]).z(), BigInt::from(8));
        assert_eq!(Partition::empty().z(), BigInt::from(1));
    }

    #[test]
    fn hook_content() {
        assert_eq!(p(&[2]).schur_at_ones(2), BigInt::from(3));
        assert_eq!(p(&[1, 1]).schur_at_ones(2), BigInt::from(1));
        assert_eq!(p(&[1, 1, 1]).schur_at_ones(2), BigInt::from(0));
        assert_eq!(p(&[2, 1]).schur_at_ones(3), BigInt::from(8));
    }

    #[test]
    fn union_and_scaling() {
        assert_eq!(p(&[3, 1]).union(&p(&[2, 2])), p(&[3, 2, 2, 1]));
        assert_eq!(p(&[2, 1]).scaled(3), p(&[6, 3]));
    }
}
