use num_traits::Zero;
use proptest::prelude::*;
use weylpat::roots::{build_root_system, inner_product, reflect, RootSystem, RootVector};
use weylpat::Error;

const TYPES: &[(&str, usize)] = &[
    ("A1", 2),
    ("A2", 6),
    ("A3", 12),
    ("A4", 20),
    ("B2", 8),
    ("B3", 18),
    ("B4", 32),
    ("C2", 8),
    ("C3", 18),
    ("C4", 32),
    ("D4", 24),
    ("G2", 12),
    ("F4", 48),
    ("E6", 72),
    ("A1xA1", 4),
    ("A2xB2", 14),
];

fn coefficient_vector(rs: &RootSystem, k: usize) -> RootVector {
    // rebuild a root from its simple coordinates
    let mut acc = RootVector::zero(rs.ambient_dim());
    for (j, &c) in rs.coefficients(k).iter().enumerate() {
        let simple = rs.root(rs.simple_roots()[j]);
        let coords = acc
            .coords()
            .iter()
            .zip(simple.coords())
            .map(|(a, b)| a + b * weylpat::roots::Rational::from_integer(c as i64))
            .collect();
        acc = RootVector::new(coords);
    }
    acc
}

#[test]
fn counts_match_closed_forms() {
    for &(t, n) in TYPES {
        let rs = build_root_system(t).unwrap();
        assert_eq!(rs.num_roots(), n, "{t}");
        assert_eq!(rs.num_positive() * 2, n, "{t}");
        assert_eq!(rs.cartan_type().root_count(), n, "{t}");
    }
}

#[test]
fn positive_roots_are_nonnegative_combinations() {
    for &(t, _) in TYPES {
        let rs = build_root_system(t).unwrap();
        for k in 0..rs.num_roots() {
            let c = rs.coefficients(k);
            if rs.is_positive(k) {
                assert!(c.iter().all(|&x| x >= 0), "{t} root {k}");
            } else {
                assert!(c.iter().all(|&x| x <= 0), "{t} root {k}");
            }
            assert_eq!(&coefficient_vector(&rs, k), rs.root(k), "{t} root {k}");
            assert_eq!(rs.root(rs.negate(k)), &rs.root(k).neg());
            assert_eq!(
                rs.height(k) == 1,
                rs.simple_roots().contains(&k),
                "{t} root {k}"
            );
        }
    }
}

#[test]
fn reflections_permute_roots_and_match_the_table() {
    for &(t, _) in TYPES {
        let rs = build_root_system(t).unwrap();
        let n = rs.num_roots();
        for a in 0..n {
            let mut seen = vec![false; n];
            for b in 0..n {
                let image = reflect(&rs, a, rs.root(b)).unwrap();
                let k = rs.index_of_vector(&image).expect("closed under reflection");
                assert_eq!(k, rs.reflect_index(a, b), "{t}");
                assert_eq!(rs.reflect_index(a, k), b, "{t}: not an involution");
                seen[k] = true;
            }
            assert!(seen.iter().all(|&s| s), "{t}: not a permutation");
        }
    }
}

#[test]
fn cartan_matrix_is_standard() {
    for &(t, _) in TYPES {
        let rs = build_root_system(t).unwrap();
        let a = rs.cartan_matrix();
        let simple = rs.simple_roots();
        for i in 0..rs.rank() {
            assert_eq!(a[i][i], 2);
            for j in 0..rs.rank() {
                let (x, y) = (rs.root(simple[i]), rs.root(simple[j]));
                let value =
                    inner_product(&rs, x, y).unwrap() * 2 / inner_product(&rs, x, x).unwrap();
                assert!(value.is_integer());
                assert_eq!(*value.numer() as i32, a[i][j], "{t}");
                if i != j {
                    assert!(a[i][j] <= 0);
                    assert_eq!(a[i][j] == 0, a[j][i] == 0);
                }
            }
        }
    }
    let g2 = build_root_system("G2").unwrap();
    let mut product = g2.cartan_matrix()[0][1] * g2.cartan_matrix()[1][0];
    assert_eq!(product, 3);
    let b2 = build_root_system("B2").unwrap();
    product = b2.cartan_matrix()[0][1] * b2.cartan_matrix()[1][0];
    assert_eq!(product, 2);
}

#[test]
fn product_components_are_orthogonal() {
    let rs = build_root_system("A2xB2").unwrap();
    assert_eq!(rs.ambient_dim(), 5);
    for a in 0..rs.num_roots() {
        for b in 0..rs.num_roots() {
            let support = |k: usize| rs.coefficients(k)[..2].iter().any(|&c| c != 0);
            if support(a) != support(b) {
                assert!(inner_product(&rs, rs.root(a), rs.root(b))
                    .unwrap()
                    .is_zero());
            }
        }
    }
    let a1a1 = build_root_system("A1xA1").unwrap();
    assert_eq!(a1a1.ambient_dim(), 2);
    assert_eq!(a1a1.cartan_matrix()[0][1], 0);
}

#[test]
fn g2_has_two_root_lengths() {
    let rs = build_root_system("G2").unwrap();
    let mut lengths: Vec<_> = (0..rs.num_roots())
        .map(|k| rs.root_inner_product(k, k))
        .collect();
    lengths.sort();
    lengths.dedup();
    assert_eq!(lengths.len(), 2);
    assert_eq!(lengths[1] / lengths[0], 3.into());
}

#[test]
fn a2_reflection_examples() {
    let rs = build_root_system("A2").unwrap();
    let (a1, a2) = (rs.simple_roots()[0], rs.simple_roots()[1]);
    assert_eq!(reflect(&rs, a1, rs.root(a1)).unwrap(), rs.root(a1).neg());
    let sum = rs.index_of_coefficients(&[1, 1]).unwrap();
    assert_eq!(&reflect(&rs, a1, rs.root(a2)).unwrap(), rs.root(sum));
    // (1, 1, 1) is orthogonal to every root of A2
    let fixed = RootVector::from_integers(&[1, 1, 1]);
    assert_eq!(reflect(&rs, a1, &fixed).unwrap(), fixed);
    assert_eq!(
        inner_product(&rs, rs.root(a1), rs.root(a1)).unwrap(),
        2.into()
    );
    assert_eq!(
        inner_product(&rs, rs.root(a1), rs.root(a2)).unwrap(),
        (-1).into()
    );
    assert!(inner_product(&rs, rs.root(a1), &RootVector::zero(3))
        .unwrap()
        .is_zero());
    assert!(matches!(
        inner_product(&rs, rs.root(a1), &RootVector::zero(2)),
        Err(Error::DimensionMismatch { .. })
    ));
}

#[test]
fn rejected_types() {
    for t in [
        "", "A0", "D2", "D1", "E5", "E9", "F3", "G3", "X2", "A2x", "a2", "A2xxB2",
    ] {
        assert!(build_root_system(t).is_err(), "{t}");
    }
    assert!(build_root_system("C2").is_ok());
    assert_eq!(build_root_system("B1").unwrap().num_roots(), 2);
    assert_eq!(build_root_system("C1").unwrap().num_roots(), 2);
}

#[test]
fn ordering_is_reproducible() {
    let a = build_root_system("F4").unwrap();
    let b = build_root_system("F4").unwrap();
    assert_eq!(a.roots(), b.roots());
    for k in 1..a.num_positive() {
        assert!(a.height(k - 1) <= a.height(k));
    }
}

proptest! {
    #[test]
    fn reflect_is_an_isometry(t in prop::sample::select(vec!["B3", "C3", "G2", "F4", "D4"]), seed in any::<u64>(), coords in prop::collection::vec(-5i64..=5, 8)) {
        let rs = build_root_system(t).unwrap();
        let alpha = (seed as usize) % rs.num_roots();
        let v = RootVector::from_integers(&coords[..rs.ambient_dim()]);
        let image = reflect(&rs, alpha, &v).unwrap();
        prop_assert_eq!(inner_product(&rs, &image, &image).unwrap(), inner_product(&rs, &v, &v).unwrap());
        prop_assert_eq!(reflect(&rs, alpha, &image).unwrap(), v);
    }
}
