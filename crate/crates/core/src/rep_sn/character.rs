//! Irreducible characters of symmetric groups by border-strip removal.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::symcore::{gen_partitions, Partition};

/// Full character table of `Σ_n`: rows are irreducibles `χ^λ`, columns
/// classes `μ`, both in descending lexicographic order.
#[derive(Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `χ^λ(μ)`; panics if either argument is not a partition of `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn value_at(&self, row: usize, col: usize) -> i64 {
        self.values[row][col]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }
}

type Memo = HashMap<(Partition, Partition), i64>;

fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len)
        .map(|i| lambda.parts().get(i).copied().unwrap_or(0) + (len - 1 - i))
        .collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(
        beta.iter()
            .enumerate()
            .map(|(i, b)| b - (len - 1 - i))
            .collect(),
    )
}

/// Every partition obtained from `lambda` by stripping a border strip of
/// length `r`, paired with the strip's sign `(-1)^{height}`.
pub(crate) fn remove_border_strips(lambda: &Partition, r: usize) -> Vec<(Partition, i64)> {
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let mut out = Vec::new();
    for (pos, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[pos] = target;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((from_beta(next), sign));
    }
    out
}

fn chi(lambda: &Partition, mu: &Partition, memo: &mut Memo) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu.parts()[0];
    let rest = mu.tail();
    let value = remove_border_strips(lambda, r)
        .into_iter()
        .map(|(smaller, sign)| sign * chi(&smaller, &rest, memo))
        .sum();
    memo.insert(key, value);
    value
}

fn build(n: usize) -> CharacterTable {
    let partitions = gen_partitions(n);
    let index = partitions
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut memo = Memo::new();
    let values = partitions
        .iter()
        .map(|lambda| partitions.iter().map(|mu| chi(lambda, mu, &mut memo)).collect())
        .collect();
    CharacterTable { n, partitions, index, values }
}

/// Cached character table of `Σ_n`; safe to call from many threads.
pub fn character_table(n: usize) -> Arc<CharacterTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("character cache poisoned");
    guard.entry(n).or_insert_with(|| Arc::new(build(n))).clone()
}

/// The irreducible character value `χ^λ(μ)`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            found: mu.size(),
        });
    }
    Ok(character_table(lambda.size()).value(lambda, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[3])).unwrap(), 1);
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        for mu in gen_partitions(6) {
            assert_eq!(mn_character(&Partition::row(6), &mu).unwrap(), 1);
            assert_eq!(
                mn_character(&Partition::column(6), &mu).unwrap(),
                mu.sign() as i64
            );
        }
    }

    #[test]
    fn size_mismatch_is_an_error() {
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 0..=7 {
            let t = character_table(n);
            for mu in t.partitions() {
                for nu in t.partitions() {
                    let s: i64 = t
                        .partitions()
                        .iter()
                        .map(|l| t.value(l, mu) * t.value(l, nu))
                        .sum();
                    let expected = if mu == nu { mu.z() } else { BigInt::from(0) };
                    assert_eq!(BigInt::from(s), expected, "n={n} {mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn dimensions_square_sum_to_factorial() {
        let t = character_table(7);
        let id = Partition::column(7);
        let total: i64 = t.partitions().iter().map(|l| t.value(l, &id).pow(2)).sum();
        assert_eq!(total, 5040);
    }
}
