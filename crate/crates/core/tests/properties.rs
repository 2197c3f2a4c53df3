use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::sample::Index;

use klambda_core::lambda_tau::{universal_p, universal_q};
use klambda_core::rep_sn::{ch, induction_product, internal_product, lr_coefficient, RepSn};
use klambda_core::symcore::{gen_partitions, Basis, Partition, SymFunc};

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn partition(max: usize) -> impl Strategy<Value = Partition> {
    (0..=max, any::<Index>()).prop_map(|(n, i)| {
        let ps = gen_partitions(n);
        ps[i.index(ps.len())].clone()
    })
}

fn schur(max: usize) -> impl Strategy<Value = SymFunc> {
    partition(max).prop_map(SymFunc::schur)
}

/// Small integral combinations of Schur functions, possibly inhomogeneous.
fn symfunc(max: usize) -> impl Strategy<Value = SymFunc> {
    prop::collection::vec((partition(max), -3i64..=3), 0..=3).prop_map(|terms| {
        terms.into_iter().fold(SymFunc::zero(), |acc, (p, c)| &acc + &SymFunc::schur(p).scale(&rat(c)))
    })
}

fn homogeneous(n: usize) -> impl Strategy<Value = SymFunc> {
    let ps = gen_partitions(n);
    prop::collection::vec(-3i64..=3, ps.len()).prop_map(move |cs| {
        ps.iter().zip(cs).fold(SymFunc::zero(), |acc, (p, c)| &acc + &SymFunc::schur(p.clone()).scale(&rat(c)))
    })
}

fn schur_nonnegative(f: &SymFunc) -> bool {
    f.expand(Basis::S).terms.values().all(|c| c.is_integer() && !c.is_negative())
}

/// `e_1, …, e_k` of an integer vector, with `e_0 = 1` in slot 0.
fn elementary(xs: &[i64], k: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); k + 1];
    e[0] = BigInt::from(1);
    for &x in xs {
        for i in (1..=k).rev() {
            let prev = e[i - 1].clone();
            e[i] += prev * x;
        }
    }
    e
}

fn subsets_products(xs: &[i64], l: usize) -> Vec<i64> {
    fn go(xs: &[i64], l: usize, start: usize, acc: i64, out: &mut Vec<i64>) {
        if l == 0 {
            out.push(acc);
            return;
        }
        for i in start..xs.len() {
            go(xs, l - 1, i + 1, acc * xs[i], out);
        }
    }
    let mut out = Vec::new();
    go(xs, l, 0, 1, &mut out);
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_round_trips(f in symfunc(5)) {
        for b in Basis::ALL {
            let e = f.expand(b);
            prop_assert_eq!(e.to_symfunc(), f.clone());
        }
    }

    #[test]
    fn coproduct_is_multiplicative(f in symfunc(3), g in symfunc(3)) {
        prop_assert_eq!(f.multiply(&g).coproduct(), f.coproduct().multiply(&g.coproduct()));
    }

    #[test]
    fn coproduct_is_adjoint_to_product(a in schur(3), b in schur(3), c in schur(6)) {
        prop_assert_eq!(c.coproduct().pair(&a, &b), a.multiply(&b).hall_inner(&c));
    }

    #[test]
    fn plethysm_is_a_ring_map_in_the_left_argument(f in symfunc(2), g in symfunc(2), h in homogeneous(2)) {
        prop_assert_eq!((&f + &g).plethysm(&h), &f.plethysm(&h) + &g.plethysm(&h));
        prop_assert_eq!(f.multiply(&g).plethysm(&h), f.plethysm(&h).multiply(&g.plethysm(&h)));
        let p1 = SymFunc::power_sum(Partition::row(1));
        prop_assert_eq!(f.plethysm(&p1), f.clone());
        prop_assert_eq!(p1.plethysm(&f), f.clone());
    }

    #[test]
    fn plethysm_is_associative(f in schur(2), g in schur(2), h in schur(2)) {
        prop_assert_eq!(f.plethysm(&g).plethysm(&h), f.plethysm(&g.plethysm(&h)));
    }

    #[test]
    fn schur_positivity(a in schur(4), b in schur(3)) {
        prop_assert!(schur_nonnegative(&a.multiply(&b)));
        if b.degree().unwrap_or(0) > 0 {
            prop_assert!(schur_nonnegative(&a.plethysm(&b)));
        }
        if a.degree() == b.degree() {
            prop_assert!(schur_nonnegative(&a.kronecker(&b)));
        }
    }

    #[test]
    fn kronecker_properties(f in homogeneous(4), g in homogeneous(4), h in homogeneous(4)) {
        prop_assert_eq!(f.kronecker(&g), g.kronecker(&f));
        prop_assert_eq!(f.kronecker(&g).kronecker(&h), f.kronecker(&g.kronecker(&h)));
        prop_assert_eq!(SymFunc::complete(Partition::row(4)).kronecker(&f), f.clone());
        prop_assert_eq!(SymFunc::elementary(Partition::row(4)).kronecker(&f), f.omega());
    }

    #[test]
    fn littlewood_richardson_symmetries(l in partition(3), m in partition(3), i in any::<Index>()) {
        let ns = gen_partitions(l.size() + m.size());
        let n = &ns[i.index(ns.len())];
        let c = lr_coefficient(&l, &m, n);
        prop_assert_eq!(&c, &lr_coefficient(&m, &l, n));
        prop_assert_eq!(&c, &lr_coefficient(&l.conjugate(), &m.conjugate(), &n.conjugate()));
    }

    #[test]
    fn characteristic_map_is_a_ring_map(a in partition(3), b in partition(3)) {
        let (ra, rb) = (RepSn::irreducible(a), RepSn::irreducible(b));
        prop_assert_eq!(ch(&induction_product(&ra, &rb)), ch(&ra).multiply(&ch(&rb)));
        if ra.n() == rb.n() {
            prop_assert_eq!(ch(&internal_product(&ra, &rb).unwrap()), ch(&ra).kronecker(&ch(&rb)));
        }
    }

    /// `p_k(σ(a), σ(b)) = e_k(a_i b_j)` for literal variables, whatever
    /// their number.
    #[test]
    fn universal_p_matches_literal_expansion(
        k in 1usize..=4,
        a in prop::collection::vec(-3i64..=3, 0..=3),
        b in prop::collection::vec(-3i64..=3, 0..=3),
    ) {
        let lhs = universal_p(k).evaluate(
            &elementary(&a, k), &elementary(&b, k), BigInt::zero(), &BigInt::from(1),
            |x, y| x + y, |x, y| x * y, |x, c| x * c,
        );
        let products: Vec<i64> = a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect();
        prop_assert_eq!(lhs, elementary(&products, k)[k].clone());
    }

    /// `q_{k,l}(σ(x)) = e_k` of the `l`-fold products of distinct variables.
    #[test]
    fn universal_q_matches_literal_expansion(
        k in 1usize..=3,
        l in 1usize..=3,
        x in prop::collection::vec(-2i64..=2, 0..=4),
    ) {
        let lhs = universal_q(k, l).evaluate(
            &elementary(&x, k * l), BigInt::zero(), &BigInt::from(1),
            |a, b| a + b, |a, b| a * b, |a, c| a * c,
        );
        prop_assert_eq!(lhs, elementary(&subsets_products(&x, l), k)[k].clone());
    }
}
