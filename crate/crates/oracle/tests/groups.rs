use klambda_oracle::checks::{frobenius_holds, power_commutes_with_induction, iterated_power_restricts, mackey_instance, Twist};
use klambda_oracle::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

fn assert_orthonormal(g: &PermGroup, t: &[ClassFunction]) {
    assert_eq!(t.len(), g.classes().len());
    for (i, a) in t.iter().enumerate() {
        assert!(a.is_integral());
        assert!(a.degree() > &BigRational::zero());
        for (j, b) in t.iter().enumerate() {
            let expected = if i == j { BigRational::one() } else { BigRational::zero() };
            assert_eq!(inner(g, a, b), expected);
        }
    }
}

#[test]
fn symmetric_tables_are_orthonormal() {
    for n in 1..=6 {
        let (g, rows) = symmetric_table(n).unwrap();
        let chars: Vec<ClassFunction> = rows.iter().map(|(_, c)| c.clone()).collect();
        assert_orthonormal(&g, &chars);
        let dim_sq: BigInt = chars.iter().map(|c| c.degree().to_integer().pow(2)).sum();
        assert_eq!(dim_sq, BigInt::from(g.order()));
    }
}

#[test]
fn wreath_tables_from_cyclic_seeds() {
    for (l, k, classes) in [(2, 2, 5), (2, 3, 10), (3, 2, 9), (1, 3, 3)] {
        let g = build_wreath(l, k).unwrap();
        let t = irreducible_table(&g, &cyclic_seeds(&g).unwrap()).unwrap();
        assert_eq!(t.len(), classes, "({l},{k})");
        assert_orthonormal(&g, &t);
    }
    let g = build_wreath(2, 2).unwrap();
    let t = irreducible_table(&g, &cyclic_seeds(&g).unwrap()).unwrap();
    let twos = t.iter().filter(|c| c.degree() == &BigRational::from(BigInt::from(2))).count();
    assert_eq!(twos, 1);
}

#[test]
fn induction_from_wreath_into_s4() {
    let s4 = build_symmetric(4).unwrap();
    let w = build_wreath(2, 2).unwrap();
    let ind = induced_character(&w, &s4, &ClassFunction::trivial(&w)).unwrap();
    let (_, rows) = symmetric_table(4).unwrap();
    let mults: Vec<(Vec<usize>, BigRational)> = rows
        .iter()
        .map(|(lam, chi)| (lam.clone(), inner(&s4, &ind, chi)))
        .filter(|(_, m)| !m.is_zero())
        .collect();
    assert_eq!(
        mults,
        vec![(vec![4], BigRational::one()), (vec![2, 2], BigRational::one())]
    );
}

#[test]
fn frobenius_reciprocity_on_suite_pairs() {
    for sizes in [vec![2, 1], vec![2, 2], vec![3, 2], vec![3, 3], vec![4, 2]] {
        let n: usize = sizes.iter().sum();
        let g = build_symmetric(n).unwrap();
        assert!(frobenius_holds(&build_young(&sizes).unwrap(), &g).unwrap(), "{sizes:?}");
    }
    for (l, k) in [(2, 2), (2, 3), (3, 2)] {
        let g = build_symmetric(l * k).unwrap();
        assert!(frobenius_holds(&build_wreath(l, k).unwrap(), &g).unwrap());
    }
    for (n, m) in [(1, 2), (2, 2), (1, 3), (2, 3), (3, 2)] {
        let g = build_young(&[m, n * m]).unwrap();
        assert!(frobenius_holds(&build_wreath_diagonal(n, m).unwrap(), &g).unwrap());
    }
}

#[test]
fn mackey_instances_up_to_six_points() {
    for n in 1..=2 {
        for l in 2..=4 {
            if n * l > 6 {
                continue;
            }
            for i in 1..l {
                let r = mackey_instance(n, i, l - i).unwrap();
                assert_eq!(r.double_cosets, 1);
                assert!(r.holds(), "n={n} i={i} j={}", l - i);
            }
        }
    }
}

#[test]
fn power_and_induction_commute() {
    for twist in [Twist::Trivial, Twist::Sign] {
        assert!(power_commutes_with_induction(&[1, 1], 2, twist).unwrap());
        assert!(power_commutes_with_induction(&[2, 1], 2, twist).unwrap());
        assert!(power_commutes_with_induction(&[1, 1], 3, twist).unwrap());
    }
}

#[test]
fn iterated_powers() {
    let s1 = build_symmetric(1).unwrap();
    let triv1 = CosetRep::linear(&s1, |_| 1).unwrap();
    assert!(iterated_power_restricts(1, 2, 2, &triv1).unwrap());
    let s2 = build_symmetric(2).unwrap();
    let natural = CosetRep::new(&s2, &build_young(&[1, 1]).unwrap(), |_| 1).unwrap();
    assert!(iterated_power_restricts(2, 2, 2, &natural).unwrap());
}
