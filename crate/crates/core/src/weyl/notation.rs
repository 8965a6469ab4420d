//! Element notation.
//!
//! Elements are written as reduced words of 1-based simple indices separated
//! by spaces (`"1 2 1"`), with `"e"` (or `"id"`, or the empty string) for the
//! identity. Simple indices follow Bourbaki numbering within each component
//! and run on consecutively across the components of a reducible type. For a
//! single `An` with `n < 9`, one-line permutation notation such as
//! `"3412"` is accepted as well.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::roots::RootSystem;

use super::element::WeylElement;
use super::inversion::InversionSet;

pub fn word_string(w: &WeylElement) -> String {
    let word = w.reduced_word();
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// One-line notation `w(1) w(2) ... w(n+1)` for elements of `An`.
pub fn permutation(w: &WeylElement) -> Option<Vec<usize>> {
    let n = w.root_system().cartan_type().type_a_rank()?;
    let word = w.reduced_word();
    Some(
        (1..=n + 1)
            .map(|j| {
                word.iter().rev().fold(j, |p, &i| match p {
                    p if p == i + 1 => i + 2,
                    p if p == i + 2 => i + 1,
                    p => p,
                })
            })
            .collect(),
    )
}

pub fn one_line(w: &WeylElement) -> Option<String> {
    let perm = permutation(w)?;
    if perm.len() > 9 {
        return None;
    }
    Some(perm.iter().map(|d| d.to_string()).collect())
}

/// The `An` element with one-line notation `perm` (values `1..=n+1`).
pub fn from_permutation(rs: &Arc<RootSystem>, perm: &[usize]) -> Result<WeylElement> {
    let n = rs
        .cartan_type()
        .type_a_rank()
        .ok_or_else(|| Error::parse("one-line permutation outside type A", format!("{perm:?}")))?;
    let mut sorted = perm.to_vec();
    sorted.sort_unstable();
    if sorted != (1..=n + 1).collect::<Vec<_>>() {
        return Err(Error::parse("permutation", format!("{perm:?}")));
    }
    let mut position = vec![0; n + 2];
    for (j, &v) in perm.iter().enumerate() {
        position[v] = j;
    }
    // e_a - e_b (a < b) is an inversion iff w^{-1}(a) > w^{-1}(b)
    let mut set = InversionSet::empty(rs.num_positive());
    for a in 1..=n + 1 {
        for b in a + 1..=n + 1 {
            if position[a] > position[b] {
                let coeffs: Vec<i32> = (1..=n).map(|k| i32::from(k >= a && k < b)).collect();
                let idx = rs
                    .index_of_coefficients(&coeffs)
                    .ok_or_else(|| Error::InvariantViolation("missing type A root".into()))?;
                set.insert(idx);
            }
        }
    }
    WeylElement::from_inversion_set(rs, &set)
}

pub fn parse_element(rs: &Arc<RootSystem>, input: &str) -> Result<WeylElement> {
    let text = input.trim();
    if text.is_empty() || text == "e" || text == "id" {
        return Ok(WeylElement::identity(rs));
    }
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if let (Some(n), [token]) = (rs.cartan_type().type_a_rank(), tokens.as_slice()) {
        if token.len() == n + 1 && n < 9 && token.len() > 1 {
            let perm: Option<Vec<usize>> = token
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect();
            let perm = perm.ok_or_else(|| Error::parse("element", input))?;
            return from_permutation(rs, &perm);
        }
    }
    let word = tokens
        .iter()
        .map(|t| match t.parse::<usize>() {
            Ok(i) if i >= 1 && i <= rs.rank() => Ok(i - 1),
            _ => Err(Error::parse("element", input)),
        })
        .collect::<Result<Vec<_>>>()?;
    WeylElement::from_word(rs, &word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;
    use proptest::prelude::*;

    fn rs(t: &str) -> Arc<RootSystem> {
        Arc::new(build_root_system(t).unwrap())
    }

    #[test]
    fn one_line_matches_word() {
        let a3 = rs("A3");
        let w = WeylElement::from_word(&a3, &[1, 0, 2, 1]).unwrap();
        assert_eq!(one_line(&w).unwrap(), "3412");
        assert_eq!(parse_element(&a3, "3412").unwrap(), w);
        assert_eq!(parse_element(&a3, "2 1 3 2").unwrap(), w);
        assert_eq!(word_string(&w), "2 1 3 2");
        let s1s2 = WeylElement::from_word(&rs("A2"), &[0, 1]).unwrap();
        assert_eq!(one_line(&s1s2).unwrap(), "231");
    }

    #[test]
    fn identity_spellings() {
        let b2 = rs("B2");
        for s in ["", "e", "id", "  "] {
            assert!(parse_element(&b2, s).unwrap().is_identity());
        }
        assert_eq!(word_string(&WeylElement::identity(&b2)), "e");
        assert!(one_line(&WeylElement::identity(&b2)).is_none());
    }

    #[test]
    fn rejects_garbage() {
        let a3 = rs("A3");
        for s in ["5", "0", "1 x", "3312", "12345"] {
            assert!(parse_element(&a3, s).is_err(), "{s}");
        }
        assert!(from_permutation(&rs("B2"), &[2, 1]).is_err());
    }

    proptest! {
        #[test]
        fn permutation_round_trip(perm in Just((1..=5usize).collect::<Vec<_>>()).prop_shuffle()) {
            let a4 = rs("A4");
            let w = from_permutation(&a4, &perm).unwrap();
            prop_assert_eq!(permutation(&w).unwrap(), perm.clone());
            let inversions = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j)))
                .filter(|&(i, j)| perm[i] > perm[j]).count();
            prop_assert_eq!(w.length(), inversions);
        }
    }
}
