use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::classfn::{coset_character, inner, point_character, ClassFunction};
use crate::group::{build_symmetric, build_young, PermGroup};
use crate::{OracleError, Result};

/// All partitions of `n` in descending lexicographic order, by brute force.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn reduce(g: &PermGroup, c: &ClassFunction, irr: &[ClassFunction]) -> ClassFunction {
    let mut r = c.clone();
    for x in irr {
        let m = inner(g, c, x);
        if !m.is_zero() {
            r = r.sub(&x.scale(&m));
        }
    }
    r
}

/// The irreducible characters of `g`, sorted by degree then values.
///
/// The table comes from the class algebra: the central characters
/// `ω_χ(K_j) = |C_j| χ(g_j) / χ(1)` are the common eigenvectors of the
/// class-multiplication matrices, and for the groups here their
/// eigenvalues are integers. The seeds, genuine characters such as
/// permutation characters, must span the class functions and must each
/// decompose over the table with non-negative integer multiplicities.
pub fn irreducible_table(g: &PermGroup, seeds: &[ClassFunction]) -> Result<Vec<ClassFunction>> {
    let h = g.classes().len();
    let rank = seeds.len() - kernel(&seeds.iter().map(|s| s.values.clone()).collect::<Vec<_>>(), h).len();
    if rank < h {
        return Err(OracleError::SeedsDoNotSpan { found: rank, classes: h });
    }
    let mut irr = class_algebra_table(g)?;
    for s in seeds {
        for x in &irr {
            let m = inner(g, s, x);
            if !m.is_integer() || m < BigRational::zero() {
                return Err(OracleError::Inconsistent(format!("seed multiplicity {m}")));
            }
        }
    }
    irr.sort_by(|a, b| (a.degree(), &a.values).cmp(&(b.degree(), &b.values)));
    Ok(irr)
}

/// `a_{ijk} = #{x ∈ C_i : x⁻¹ g_k ∈ C_j}`, the class-sum structure constants.
fn class_constants(g: &PermGroup) -> Vec<Vec<Vec<i64>>> {
    let h = g.classes().len();
    let mut a = vec![vec![vec![0i64; h]; h]; h];
    for (k, ck) in g.classes().iter().enumerate() {
        for (i, ci) in g.classes().iter().enumerate() {
            for &x in &ci.members {
                let y = g.elements()[x].inverse().compose(&ck.rep);
                a[i][g.class_index(&y).unwrap()][k] += 1;
            }
        }
    }
    a
}

/// Basis of `{c : Σ_i c_i rows_i = 0}`, i.e. the left kernel of `rows`
/// whose rows have length `width`.
fn kernel(rows: &[Vec<BigRational>], width: usize) -> Vec<Vec<BigRational>> {
    // transpose so the unknowns are columns
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> =
        (0..width).map(|j| (0..n).map(|i| rows[i][j].clone()).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..n {
                    let t = &m[r][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); n];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[row][f].clone();
            }
            v
        })
        .collect()
}

fn class_algebra_table(g: &PermGroup) -> Result<Vec<ClassFunction>> {
    let h = g.classes().len();
    let a = class_constants(g);
    let sizes: Vec<i64> = g.classes().iter().map(|c| c.size() as i64).collect();
    // subspaces as lists of basis vectors in Q^h (the ω coordinates)
    let identity: Vec<Vec<BigRational>> = (0..h)
        .map(|j| (0..h).map(|k| BigRational::from(BigInt::from((j == k) as i64))).collect())
        .collect();
    let mut spaces = vec![identity];
    for i in 1..h {
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let mut total = 0;
            for lam in -sizes[i]..=sizes[i] {
                // vectors v = Σ c_t b_t with (M_i − λ) v = 0, M_i[j][k] = a[i][j][k]
                let images: Vec<Vec<BigRational>> = space
                    .iter()
                    .map(|b| {
                        (0..h)
                            .map(|j| {
                                let mut s = BigRational::zero();
                                for k in 0..h {
                                    if a[i][j][k] != 0 {
                                        s += &b[k] * BigRational::from(BigInt::from(a[i][j][k]));
                                    }
                                }
                                s - &b[j] * BigRational::from(BigInt::from(lam))
                            })
                            .collect()
                    })
                    .collect();
                let ker = kernel(&images, h);
                if ker.is_empty() {
                    continue;
                }
                total += ker.len();
                next.push(
                    ker.iter()
                        .map(|c| {
                            (0..h)
                                .map(|k| {
                                    c.iter().zip(&space).fold(BigRational::zero(), |acc, (ct, b)| acc + ct * &b[k])
                                })
                                .collect()
                        })
                        .collect(),
                );
                if total == space.len() {
                    break;
                }
            }
            if total != space.len() {
                return Err(OracleError::Inconsistent("non-integral central character".into()));
            }
        }
        spaces = next;
    }
    let order = BigRational::from(BigInt::from(g.order()));
    spaces
        .into_iter()
        .map(|space| {
            if space.len() != 1 {
                return Err(OracleError::Inconsistent("class algebra does not split".into()));
            }
            let v = &space[0];
            let omega: Vec<BigRational> = v.iter().map(|x| x / &v[0]).collect();
            let mut s = BigRational::zero();
            for (w, &c) in omega.iter().zip(&sizes) {
                s += w * w / BigRational::from(BigInt::from(c));
            }
            let deg_sq = &order / s;
            let deg = deg_sq.to_integer().sqrt();
            if BigRational::from(&deg * &deg) != deg_sq {
                return Err(OracleError::Inconsistent(format!("degree squared {deg_sq}")));
            }
            let deg = BigRational::from(deg);
            Ok(ClassFunction {
                values: omega
                    .iter()
                    .zip(&sizes)
                    .map(|(w, &c)| w * &deg / BigRational::from(BigInt::from(c)))
                    .collect(),
            })
        })
        .collect()
}

/// Default seeds: the natural permutation character and the permutation
/// characters on cosets of every cyclic subgroup `⟨rep⟩`.
pub fn cyclic_seeds(g: &PermGroup) -> Result<Vec<ClassFunction>> {
    let mut out = vec![point_character(g)];
    for c in g.classes() {
        let cyc = PermGroup::generate(g.degree(), vec![c.rep.clone()])?;
        out.push(coset_character(g, &cyc)?);
    }
    Ok(out)
}

/// The character table of `Σ_n`, each row labelled by the partition whose
/// Young permutation character it was peeled from. Young characters are
/// processed in descending lexicographic order, which refines dominance,
/// so each leaves exactly one new irreducible.
pub fn symmetric_table(n: usize) -> Result<(PermGroup, Vec<(Vec<usize>, ClassFunction)>)> {
    let g = build_symmetric(n)?;
    let mut rows: Vec<(Vec<usize>, ClassFunction)> = Vec::new();
    for lambda in partitions(n) {
        let y = build_young(&lambda)?;
        let pi = coset_character(&g, &y)?;
        let known: Vec<ClassFunction> = rows.iter().map(|(_, c)| c.clone()).collect();
        let r = reduce(&g, &pi, &known);
        if !inner(&g, &r, &r).is_one() || r.degree() <= &BigRational::zero() {
            return Err(OracleError::SeedsDoNotSpan { found: rows.len(), classes: g.classes().len() });
        }
        rows.push((lambda, r));
    }
    Ok((g, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::build_wreath;

    fn degrees(t: &[ClassFunction]) -> Vec<BigInt> {
        t.iter().map(|c| c.degree().to_integer()).collect()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }

    #[test]
    fn symmetric_tables() {
        let (g, rows) = symmetric_table(3).unwrap();
        let dims: Vec<BigInt> = rows.iter().map(|(_, c)| c.degree().to_integer()).collect();
        assert_eq!(dims, vec![1.into(), 2.into(), 1.into()]);
        let generic = irreducible_table(&g, &cyclic_seeds(&g).unwrap()).unwrap();
        assert_eq!(degrees(&generic), vec![1.into(), 1.into(), 2.into()]);
        let (_, rows2) = symmetric_table(2).unwrap();
        assert_eq!(rows2[1].1, ClassFunction::from_ints(&[1, -1]));
    }

    #[test]
    fn dihedral_table() {
        let g = build_wreath(2, 2).unwrap();
        let t = irreducible_table(&g, &cyclic_seeds(&g).unwrap()).unwrap();
        assert_eq!(degrees(&t), vec![1.into(), 1.into(), 1.into(), 1.into(), 2.into()]);
        for (i, a) in t.iter().enumerate() {
            for (j, b) in t.iter().enumerate() {
                assert_eq!(inner(&g, a, b), BigRational::from(BigInt::from((i == j) as i64)));
            }
        }
    }
}
