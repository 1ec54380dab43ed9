use std::collections::BTreeSet;

use proptest::prelude::*;
use walkavoid::p1::P1Bijection;
use walkavoid::p2::P2Bijection;
use walkavoid::word::w;
use walkavoid::{FamilyId, Word};

fn assert_bijective(
    n: usize,
    domain: Vec<Word>,
    codomain: Vec<Word>,
    fwd: impl Fn(&Word) -> Word,
    inv: impl Fn(&Word) -> Word,
) {
    let images: Vec<Word> = domain.iter().map(&fwd).collect();
    let set: BTreeSet<&Word> = images.iter().collect();
    assert_eq!(set.len(), domain.len(), "not injective at n={n}");
    assert_eq!(set, codomain.iter().collect(), "image differs from codomain at n={n}");
    for (x, u) in domain.iter().zip(&images) {
        assert_eq!(&inv(u), x, "n={n}");
    }
    for u in &codomain {
        assert_eq!(&fwd(&inv(u)), u, "n={n}");
    }
}

#[test]
fn p1_f_and_g_are_bijections_up_to_8() {
    let b = P1Bijection::default();
    for n in 1..=8 {
        assert_bijective(
            n,
            FamilyId::P1B.enumerate(n).unwrap(),
            FamilyId::P1A.enumerate(n).unwrap(),
            |x| b.f(n, x).unwrap(),
            |u| b.f_inv(u).unwrap(),
        );
        assert_bijective(
            n,
            FamilyId::P1C.enumerate(n).unwrap(),
            FamilyId::P1D.enumerate(n).unwrap(),
            |x| b.g(n, x).unwrap(),
            |u| b.g_inv(u).unwrap(),
        );
    }
}

#[test]
fn p2_f_and_g_are_bijections_up_to_12() {
    let b = P2Bijection::default();
    for n in 0..=12 {
        assert_bijective(
            n,
            FamilyId::P2B.enumerate(n).unwrap(),
            FamilyId::P2A.enumerate(n).unwrap(),
            |x| b.f(n, x).unwrap(),
            |u| b.f_inv(u).unwrap(),
        );
    }
    for n in 1..=12 {
        let ending3 = FamilyId::P2A.enumerate(n).unwrap().into_iter().filter(|u| u.last() == Some(3)).collect();
        assert_bijective(
            n,
            FamilyId::P2GDom.enumerate(n).unwrap(),
            ending3,
            |x| b.g(n, x).unwrap(),
            |u| b.g_inv(u).unwrap(),
        );
    }
}

#[test]
fn p1_rules_at_n3_by_hand() {
    let b = P1Bijection::default();
    // f(w'34) = f(w')1 with w' = 12345434 in B2, f(w') = 41
    assert_eq!(b.f(3, &w("1234543434")).unwrap(), w("411"));
    // f(w''5654) = f(w'')14 with w'' = 121234
    assert_eq!(b.f(3, &w("1212345654")).unwrap(), w("114"));
    // f(x7654) = g(x)4 with x = 123456
    assert_eq!(b.f(3, &w("1234567654")).unwrap(), w("344"));
    // g(x56) = f(x)14 with x = 123434
    assert_eq!(b.g(3, &w("12343456")).unwrap(), w("414"));
    // g(x76) = g(x)4 with x = 123456
    assert_eq!(b.g(3, &w("12345676")).unwrap(), w("344"));
}

#[test]
fn p2_rules_by_hand() {
    let b = P2Bijection::default();
    // f(y23) = f(y3)2 with y = 112
    assert_eq!(b.f(2, &w("11223")).unwrap(), w("12"));
    // g(y1) = g(y)3 with y = 121
    assert_eq!(b.g(3, &w("1211")).unwrap(), w("233"));
    // g(z21) = f(z3)223 with z = 1233, f(12333) = f(1233)1 = 31
    assert_eq!(b.g(5, &w("123321")).unwrap(), w("31223"));
}

/// Random words over {1..k} of length n avoiding the given two-letter factors.
fn avoiding(k: u8, n: usize, bad: &'static [[u8; 2]]) -> impl Strategy<Value = Word> {
    prop::collection::vec(1..=k, n).prop_map(move |mut v| {
        for i in 1..v.len() {
            while bad.contains(&[v[i - 1], v[i]]) {
                v[i] = v[i] % k + 1;
            }
        }
        Word::from_letters(v).unwrap()
    })
}

proptest! {
    #[test]
    fn p1_round_trips_beyond_exhaustive_range(u in (9usize..40).prop_flat_map(|n| avoiding(4, n, &[[1, 3], [2, 4]]))) {
        let b = P1Bijection::default();
        let n = u.len();
        let x = b.f_inv(&u).unwrap();
        prop_assert!(FamilyId::P1B.membership(n, &x).unwrap());
        prop_assert_eq!(b.f(n, &x).unwrap(), u);
    }

    #[test]
    fn p2_round_trips_beyond_exhaustive_range(u in (13usize..60).prop_flat_map(|n| avoiding(3, n, &[[1, 3]]))) {
        // drop words containing 1*3 by rewriting the offending third letter
        let mut v = u.letters().to_vec();
        for i in 2..v.len() {
            if v[i - 2] == 1 && v[i] == 3 {
                v[i] = 2;
            }
        }
        let u = Word::from_letters(v).unwrap();
        prop_assume!(FamilyId::P2A.membership(u.len(), &u).unwrap());
        let b = P2Bijection::default();
        let x = b.f_inv(&u).unwrap();
        prop_assert!(FamilyId::P2B.membership(u.len(), &x).unwrap());
        prop_assert_eq!(b.f(u.len(), &x).unwrap(), u);
    }
}
