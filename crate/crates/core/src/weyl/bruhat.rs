use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};

use super::element::WeylElement;
use super::interval::BruhatInterval;
use super::notation::word_string;

/// Bruhat order by the subword property, in its recursive form: for a left
/// descent `s` of `v`, `u <= v` iff `su <= sv` when `s` is also a left
/// descent of `u`, and iff `u <= sv` otherwise.
pub fn bruhat_leq(u: &WeylElement, v: &WeylElement) -> Result<bool> {
    u.same_group(v)?;
    let mut u = u.clone();
    let mut v = v.clone();
    loop {
        if u.length() > v.length() {
            return Ok(false);
        }
        if u.length() == 0 {
            return Ok(true);
        }
        if u.length() == v.length() {
            return Ok(u == v);
        }
        let s = v.left_descents()[0];
        if u.has_left_descent(s) {
            u = u.left_multiply_simple(s);
        }
        v = v.left_multiply_simple(s);
    }
}

/// Bruhat order straight from its definition: the reflexive transitive
/// closure of `u < v` whenever `u = s_a v` with `l(u) < l(v)`.
///
/// Exponentially slower than [`bruhat_leq`]; kept as a reference to test it.
pub fn bruhat_leq_by_reflections(u: &WeylElement, v: &WeylElement) -> Result<bool> {
    u.same_group(v)?;
    let rs = v.root_system();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(v.clone());
    queue.push_back(v.clone());
    while let Some(z) = queue.pop_front() {
        if &z == u {
            return Ok(true);
        }
        if z.length() <= u.length() {
            continue;
        }
        for alpha in 0..rs.num_positive() {
            let y = z.left_multiply_reflection(alpha);
            if y.length() < z.length() && y.length() >= u.length() && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(false)
}

/// Elements `s_a v` of length `l(v) - 1`, ordered by reduced word.
pub fn covers(v: &WeylElement) -> Vec<WeylElement> {
    let rs = v.root_system();
    let mut out: Vec<WeylElement> = (0..rs.num_positive())
        .map(|alpha| v.left_multiply_reflection(alpha))
        .filter(|z| z.length() + 1 == v.length())
        .collect();
    out.sort_by_cached_key(|z| z.reduced_word());
    out.dedup();
    out
}

/// The Bruhat interval `[u, v]`.
pub fn interval(u: &WeylElement, v: &WeylElement) -> Result<BruhatInterval> {
    if !bruhat_leq(u, v)? {
        return Err(Error::NotComparable(format!(
            "{} is not below {}",
            word_string(u),
            word_string(v)
        )));
    }
    let mut members = vec![v.clone()];
    let mut seen: HashSet<WeylElement> = members.iter().cloned().collect();
    let mut k = 0;
    while k < members.len() {
        let z = members[k].clone();
        k += 1;
        if z.length() == u.length() {
            continue;
        }
        for y in covers(&z) {
            if !seen.contains(&y) && bruhat_leq(u, &y)? {
                seen.insert(y.clone());
                members.push(y);
            }
        }
    }
    Ok(BruhatInterval::from_members(u.clone(), v.clone(), members))
}
