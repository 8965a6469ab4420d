mod common;

use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;
use weylpat::roots::build_root_system;
use weylpat::weyl::notation::{
    from_permutation, one_line, parse_element, permutation, word_string,
};
use weylpat::weyl::{
    bruhat_leq, bruhat_leq_by_reflections, covers, enumerate, interval, interval_isomorphic,
    InversionSet, WeylElement, WeylGroup, DEFAULT_CAP,
};
use weylpat::Error;

use common::group;

fn rs(t: &str) -> Arc<weylpat::roots::RootSystem> {
    Arc::new(build_root_system(t).unwrap())
}

#[test]
fn orders() {
    for (t, n) in [
        ("A1", 2),
        ("A2", 6),
        ("A3", 24),
        ("B2", 8),
        ("B3", 48),
        ("G2", 12),
        ("A1xA1", 4),
        ("A1xA2", 12),
    ] {
        assert_eq!(enumerate(&rs(t), DEFAULT_CAP).unwrap().len(), n, "{t}");
    }
    assert!(matches!(
        enumerate(&rs("A3"), 10),
        Err(Error::CapExceeded { .. })
    ));
}

#[test]
fn lengths_inversions_and_words_agree() {
    for t in ["A3", "B3", "G2", "C3", "A1xB2"] {
        let g = group(t);
        let r = g.root_system();
        let mut seen = HashSet::new();
        for w in g.elements() {
            assert_eq!(w.length(), w.inversions().count());
            assert_eq!(w.length(), w.reduced_word().len());
            assert!(
                seen.insert(w.inversions().clone()),
                "{t}: inversion sets collide"
            );
            assert_eq!(&WeylElement::from_word(r, &w.reduced_word()).unwrap(), w);
            assert_eq!(
                &WeylElement::from_inversion_set(r, w.inversions()).unwrap(),
                w
            );
            let inv = w.inverse();
            assert_eq!(inv.length(), w.length());
            assert!(w.multiply(&inv).unwrap().is_identity());
            for i in 0..r.rank() {
                let s = WeylElement::simple_reflection(r, i).unwrap();
                let sw = s.multiply(w).unwrap();
                assert_eq!(sw, w.left_multiply_simple(i));
                assert_eq!(sw.length() < w.length(), w.has_left_descent(i));
                let ws = w.multiply(&s).unwrap();
                assert_eq!(ws.length() < w.length(), w.has_right_descent(i));
            }
        }
    }
}

#[test]
fn reflections_are_involutions() {
    let r = rs("B3");
    let e = WeylElement::identity(&r);
    for alpha in 0..r.num_roots() {
        let s = WeylElement::reflection(&r, alpha).unwrap();
        assert_eq!(s.length() % 2, 1);
        assert_eq!(s.multiply(&s).unwrap(), e);
        assert_eq!(s, WeylElement::reflection(&r, r.negate(alpha)).unwrap());
        assert_eq!(r.negate(s.apply(alpha)), alpha);
    }
}

#[test]
fn one_line_examples() {
    let a3 = rs("A3");
    let w = WeylElement::from_word(&a3, &[1, 0, 2, 1]).unwrap();
    assert_eq!(one_line(&w).unwrap(), "3412");
    assert_eq!(word_string(&w), "2 1 3 2");
    let a2 = rs("A2");
    assert_eq!(
        one_line(&WeylElement::from_word(&a2, &[0, 1]).unwrap()).unwrap(),
        "231"
    );
    assert_eq!(parse_element(&a3, "3412").unwrap(), w);
    assert_eq!(parse_element(&a3, "2 1 3 2").unwrap(), w);
    assert!(parse_element(&a3, "e").unwrap().is_identity());
    assert!(parse_element(&a3, "3411").is_err());
    assert!(parse_element(&a3, "5").is_err());
    for v in group("A3").elements() {
        let p = permutation(v).unwrap();
        assert_eq!(&from_permutation(&a3, &p).unwrap(), v);
        // the length is the number of permutation inversions
        let inversions = (0..4)
            .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        assert_eq!(inversions, v.length());
    }
}

#[test]
fn inversion_set_examples() {
    let a2 = rs("A2");
    let s1s2 = WeylElement::from_word(&a2, &[0, 1]).unwrap();
    let a1 = a2.index_of_coefficients(&[1, 0]).unwrap();
    let a12 = a2.index_of_coefficients(&[1, 1]).unwrap();
    let a2i = a2.index_of_coefficients(&[0, 1]).unwrap();
    let expected = InversionSet::from_indices(a2.num_positive(), [a1, a12]);
    assert_eq!(s1s2.inversions(), &expected);
    let bad = InversionSet::from_indices(a2.num_positive(), [a1, a2i]);
    assert!(matches!(
        WeylElement::from_inversion_set(&a2, &bad),
        Err(Error::NotInversionSet(_))
    ));
    let bad = InversionSet::from_indices(a2.num_positive(), [a12]);
    assert!(WeylElement::from_inversion_set(&a2, &bad).is_err());
}

#[test]
fn group_mismatch_is_reported() {
    let a = WeylElement::identity(&rs("A2"));
    let b = WeylElement::identity(&rs("B2"));
    assert!(matches!(a.multiply(&b), Err(Error::GroupMismatch { .. })));
    assert!(bruhat_leq(&a, &b).is_err());
}

#[test]
fn bruhat_differential() {
    for t in ["A3", "B3", "G2"] {
        let g = group(t);
        for (ui, u) in g.elements().iter().enumerate() {
            for (vi, v) in g.elements().iter().enumerate() {
                let fast = bruhat_leq(u, v).unwrap();
                assert_eq!(
                    fast,
                    bruhat_leq_by_reflections(u, v).unwrap(),
                    "{t}: {u:?} {v:?}"
                );
                assert_eq!(fast, g.leq(ui, vi), "{t}: {u:?} {v:?}");
            }
        }
    }
}

#[test]
fn covers_drop_length_by_one() {
    let g = group("B3");
    for v in g.elements() {
        for c in covers(v) {
            assert_eq!(c.length() + 1, v.length());
            assert!(bruhat_leq(&c, v).unwrap());
        }
    }
}

#[test]
fn rank_two_intervals_are_diamonds() {
    for t in ["A3", "B3", "G2"] {
        let g = group(t);
        for u in 0..g.order() {
            for v in 0..g.order() {
                if g.leq(u, v) && g.length(v) == g.length(u) + 2 {
                    assert_eq!(g.interval_indices(u, v).len(), 4, "{t}");
                }
            }
        }
    }
}

#[test]
fn interval_examples() {
    let a2 = rs("A2");
    let b2 = rs("B2");
    let w0 = WeylElement::from_word(&a2, &[0, 1, 0]).unwrap();
    let e = WeylElement::identity(&a2);
    let full = interval(&e, &w0).unwrap();
    assert_eq!(full.len(), 6);
    assert_eq!(full.rank(), 3);
    let s = WeylElement::from_word(&b2, &[0, 1, 0]).unwrap();
    let b = interval(&WeylElement::identity(&b2), &s).unwrap();
    assert!(interval_isomorphic(&full, &b));
    let chain = interval(&e, &WeylElement::from_word(&a2, &[0]).unwrap()).unwrap();
    assert!(!interval_isomorphic(&full, &chain));
    let s1 = WeylElement::from_word(&a2, &[0]).unwrap();
    let s2 = WeylElement::from_word(&a2, &[1]).unwrap();
    assert!(matches!(interval(&s1, &s2), Err(Error::NotComparable(_))));
    let g = group("A3");
    let iv = g.interval(0, g.order() - 1).unwrap();
    assert_eq!(iv.len(), 24);
    assert_eq!(iv.bottom(), g.element(0));
    assert_eq!(iv.top().length(), 6);
}

#[test]
fn group_indices_round_trip() {
    let g = WeylGroup::build("B3", DEFAULT_CAP).unwrap();
    assert!(g.element(0).is_identity());
    for k in 0..g.order() {
        assert_eq!(g.index_of(g.element(k)), Some(k));
        assert_eq!(g.index_of_inversions(g.element(k).inversions()), Some(k));
        assert_eq!(g.multiply(k, g.inverse(k)), 0);
        if k > 0 {
            assert!(g.length(k - 1) <= g.length(k));
        }
    }
}

fn word(rank: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..rank, 0..20)
}

proptest! {
    #[test]
    fn products_in_f4(a in word(4), b in word(4), c in word(4)) {
        let r = rs("F4");
        let (x, y, z) = (
            WeylElement::from_word(&r, &a).unwrap(),
            WeylElement::from_word(&r, &b).unwrap(),
            WeylElement::from_word(&r, &c).unwrap(),
        );
        prop_assert_eq!(x.multiply(&y).unwrap().multiply(&z).unwrap(), x.multiply(&y.multiply(&z).unwrap()).unwrap());
        let xy = x.multiply(&y).unwrap();
        prop_assert_eq!(xy.length() % 2, (x.length() + y.length()) % 2);
        prop_assert!(xy.length() <= x.length() + y.length());
        prop_assert_eq!(xy.inverse(), y.inverse().multiply(&x.inverse()).unwrap());
        prop_assert_eq!(x.inverse().length(), x.length());
        prop_assert_eq!(WeylElement::from_inversion_set(&r, x.inversions()).unwrap(), x);
    }

    #[test]
    fn bruhat_agrees_in_d4(a in word(4), b in word(4)) {
        let r = rs("D4");
        let u = WeylElement::from_word(&r, &a).unwrap();
        let v = WeylElement::from_word(&r, &b).unwrap();
        prop_assert_eq!(bruhat_leq(&u, &v).unwrap(), bruhat_leq_by_reflections(&u, &v).unwrap());
        prop_assert!(bruhat_leq(&WeylElement::identity(&r), &v).unwrap());
        // every prefix of a reduced word lies below the element
        let rw = v.reduced_word();
        let prefix = WeylElement::from_word(&r, &rw[..rw.len() / 2]).unwrap();
        prop_assert!(bruhat_leq(&prefix, &v).unwrap());
    }
}
