use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::roots::RootSystem;

use super::element::WeylElement;
use super::interval::{BruhatInterval, GradedPoset};
use super::inversion::InversionSet;

pub const DEFAULT_CAP: usize = 10_000;

/// All elements exactly once, ordered by length and then by least reduced
/// word. Fails once more than `cap` elements have been produced.
pub fn enumerate(rs: &Arc<RootSystem>, cap: usize) -> Result<Vec<WeylElement>> {
    let mut seen: HashMap<InversionSet, ()> = HashMap::new();
    let id = WeylElement::identity(rs);
    seen.insert(id.inversions().clone(), ());
    let mut out = vec![id];
    let mut layer_start = 0;
    while layer_start < out.len() {
        let layer_end = out.len();
        let mut next = Vec::new();
        for k in layer_start..layer_end {
            for i in 0..rs.rank() {
                if out[k].has_left_descent(i) {
                    continue;
                }
                let z = out[k].left_multiply_simple(i);
                if seen.insert(z.inversions().clone(), ()).is_none() {
                    next.push(z);
                }
            }
            if out.len() + next.len() > cap {
                return Err(Error::CapExceeded {
                    what: format!("W({})", rs.cartan_type()),
                    cap,
                });
            }
        }
        let mut keyed: Vec<_> = next.into_iter().map(|z| (z.reduced_word(), z)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        out.extend(keyed.into_iter().map(|(_, z)| z));
        layer_start = layer_end;
    }
    Ok(out)
}

/// A fully enumerated Weyl group with index-based tables.
///
/// Index `k` refers to the `k`-th element of [`enumerate`]; index 0 is the
/// identity and the last index is the longest element.
pub struct WeylGroup {
    rs: Arc<RootSystem>,
    elements: Vec<WeylElement>,
    index: HashMap<InversionSet, usize>,
    left_simple: Vec<Vec<u32>>,
    lower_covers: OnceLock<Vec<Vec<u32>>>,
    below: OnceLock<Vec<InversionSet>>,
}

impl WeylGroup {
    pub fn new(rs: Arc<RootSystem>, cap: usize) -> Result<WeylGroup> {
        let elements = enumerate(&rs, cap)?;
        let index: HashMap<InversionSet, usize> = elements
            .iter()
            .enumerate()
            .map(|(k, w)| (w.inversions().clone(), k))
            .collect();
        let left_simple = (0..rs.rank())
            .map(|i| {
                elements
                    .iter()
                    .map(|w| index[w.left_multiply_simple(i).inversions()] as u32)
                    .collect()
            })
            .collect();
        Ok(WeylGroup {
            rs,
            elements,
            index,
            left_simple,
            lower_covers: OnceLock::new(),
            below: OnceLock::new(),
        })
    }

    pub fn build(cartan_type: &str, cap: usize) -> Result<WeylGroup> {
        WeylGroup::new(Arc::new(crate::roots::build_root_system(cartan_type)?), cap)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn length(&self, k: usize) -> usize {
        self.elements[k].length()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        if w.same_group(&self.elements[0]).is_err() {
            return None;
        }
        self.index.get(w.inversions()).copied()
    }

    pub fn index_of_inversions(&self, set: &InversionSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub(crate) fn require_index(&self, w: &WeylElement) -> Result<usize> {
        w.same_group(&self.elements[0])?;
        self.index_of(w)
            .ok_or_else(|| Error::InvariantViolation("element missing from enumeration".into()))
    }

    /// Index of `s_i * w`.
    pub fn left_simple(&self, i: usize, w: usize) -> usize {
        self.left_simple[i][w] as usize
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a]
            .multiply(&self.elements[b])
            .expect("same group");
        self.index[prod.inversions()]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[self.elements[a].inverse().inversions()]
    }

    /// Smallest left descent, or `None` for the identity.
    pub fn first_left_descent(&self, w: usize) -> Option<usize> {
        (0..self.rs.rank()).find(|&i| self.elements[w].has_left_descent(i))
    }

    pub fn lower_covers(&self, v: usize) -> &[u32] {
        &self
            .lower_covers
            .get_or_init(|| self.compute_lower_covers())[v]
    }

    fn compute_lower_covers(&self) -> Vec<Vec<u32>> {
        self.elements
            .iter()
            .map(|v| {
                let mut lower: Vec<u32> = (0..self.rs.num_positive())
                    .map(|alpha| v.left_multiply_reflection(alpha))
                    .filter(|z| z.length() + 1 == v.length())
                    .map(|z| self.index[z.inversions()] as u32)
                    .collect();
                lower.sort_unstable();
                lower.dedup();
                lower
            })
            .collect()
    }

    fn below_sets(&self) -> &[InversionSet] {
        self.below.get_or_init(|| {
            let n = self.order();
            let mut below: Vec<InversionSet> = Vec::with_capacity(n);
            // elements are sorted by length, so covers come first
            for v in 0..n {
                let mut set = InversionSet::empty(n);
                set.insert(v);
                for &c in self.lower_covers(v) {
                    set.union_with(&below[c as usize]);
                }
                below.push(set);
            }
            below
        })
    }

    /// Bruhat order on indices, from the precomputed down-sets.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.below_sets()[v].contains(u)
    }

    /// Indices of `[u, v]` in enumeration order (empty if `u` is not below `v`).
    pub fn interval_indices(&self, u: usize, v: usize) -> Vec<usize> {
        if !self.leq(u, v) {
            return Vec::new();
        }
        self.below_sets()[v]
            .iter()
            .filter(|&z| self.leq(u, z))
            .collect()
    }

    pub fn interval_poset(&self, u: usize, v: usize) -> GradedPoset {
        let members = self.interval_indices(u, v);
        let position: HashMap<usize, usize> =
            members.iter().enumerate().map(|(k, &z)| (z, k)).collect();
        let base = self.length(u);
        let ranks = members.iter().map(|&z| self.length(z) - base).collect();
        let lower = members
            .iter()
            .map(|&z| {
                self.lower_covers(z)
                    .iter()
                    .filter_map(|&y| position.get(&(y as usize)).copied())
                    .collect()
            })
            .collect();
        GradedPoset::new(ranks, lower)
    }

    pub fn interval(&self, u: usize, v: usize) -> Result<BruhatInterval> {
        if !self.leq(u, v) {
            return Err(Error::NotComparable(format!("indices {u} and {v}")));
        }
        let members = self
            .interval_indices(u, v)
            .into_iter()
            .map(|z| self.elements[z].clone())
            .collect();
        Ok(BruhatInterval::from_members(
            self.elements[u].clone(),
            self.elements[v].clone(),
            members,
        ))
    }
}

impl std::fmt::Debug for WeylGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "W({}) of order {}", self.rs.cartan_type(), self.order())
    }
}
