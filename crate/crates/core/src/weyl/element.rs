use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::roots::RootSystem;

use super::inversion::InversionSet;

/// An element of the Weyl group of a root system.
///
/// Stored as its permutation of the root indices, together with the
/// inversion set `{a > 0 : w^{-1}(a) < 0}` and its size.
#[derive(Clone)]
pub struct WeylElement {
    rs: Arc<RootSystem>,
    image: Arc<[u32]>,
    inversions: InversionSet,
    length: usize,
}

impl WeylElement {
    fn from_image(rs: &Arc<RootSystem>, image: Vec<u32>) -> WeylElement {
        let n = rs.num_positive();
        let mut inversions = InversionSet::empty(n);
        for &img in &image[n..] {
            let img = img as usize;
            if img < n {
                inversions.insert(img);
            }
        }
        let length = inversions.count();
        WeylElement {
            rs: Arc::clone(rs),
            image: image.into(),
            inversions,
            length,
        }
    }

    pub fn identity(rs: &Arc<RootSystem>) -> WeylElement {
        WeylElement::from_image(rs, (0..rs.num_roots() as u32).collect())
    }

    /// The reflection `s_alpha` for any root index (positive or negative).
    pub fn reflection(rs: &Arc<RootSystem>, alpha: usize) -> Result<WeylElement> {
        if alpha >= rs.num_roots() {
            return Err(Error::IndexOutOfRange {
                index: alpha,
                limit: rs.num_roots(),
            });
        }
        Ok(WeylElement::from_image(
            rs,
            rs.reflection_table()[alpha].clone(),
        ))
    }

    /// Simple reflection `s_i`, with `i` a 0-based simple index.
    pub fn simple_reflection(rs: &Arc<RootSystem>, i: usize) -> Result<WeylElement> {
        if i >= rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                limit: rs.rank(),
            });
        }
        WeylElement::reflection(rs, rs.simple_roots()[i])
    }

    /// Evaluates `s_{word[0]} s_{word[1]} ...` (0-based simple indices).
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<WeylElement> {
        let mut image: Vec<u32> = (0..rs.num_roots() as u32).collect();
        for &i in word.iter().rev() {
            if i >= rs.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    limit: rs.rank(),
                });
            }
            let table = &rs.reflection_table()[rs.simple_roots()[i]];
            for x in image.iter_mut() {
                *x = table[*x as usize];
            }
        }
        Ok(WeylElement::from_image(rs, image))
    }

    /// The unique element whose inversion set is `set`.
    pub fn from_inversion_set(rs: &Arc<RootSystem>, set: &InversionSet) -> Result<WeylElement> {
        if set.universe() != rs.num_positive() {
            return Err(Error::DimensionMismatch {
                left: set.universe(),
                right: rs.num_positive(),
            });
        }
        check_biconvex(rs, set)?;
        let word = peel_word(rs, set)
            .ok_or_else(|| Error::NotInversionSet(format!("{set:?} contains no simple root")))?;
        let w = WeylElement::from_word(rs, &word)?;
        if &w.inversions != set {
            return Err(Error::NotInversionSet(format!("{set:?}")));
        }
        Ok(w)
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn inversions(&self) -> &InversionSet {
        &self.inversions
    }

    /// The permutation of root indices.
    pub fn root_image(&self) -> &[u32] {
        &self.image
    }

    /// Index of `w(alpha)`.
    pub fn apply(&self, alpha: usize) -> usize {
        self.image[alpha] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn same_group(&self, other: &WeylElement) -> Result<()> {
        if Arc::ptr_eq(&self.rs, &other.rs) || self.rs == other.rs {
            Ok(())
        } else {
            Err(Error::GroupMismatch {
                left: self.rs.cartan_type().to_string(),
                right: other.rs.cartan_type().to_string(),
            })
        }
    }

    /// `self * other`, acting as `self(other(beta))`.
    pub fn multiply(&self, other: &WeylElement) -> Result<WeylElement> {
        self.same_group(other)?;
        let image = other
            .image
            .iter()
            .map(|&b| self.image[b as usize])
            .collect();
        Ok(WeylElement::from_image(&self.rs, image))
    }

    pub fn inverse(&self) -> WeylElement {
        let mut inv = vec![0u32; self.image.len()];
        for (k, &img) in self.image.iter().enumerate() {
            inv[img as usize] = k as u32;
        }
        WeylElement::from_image(&self.rs, inv)
    }

    /// `s_i * self`.
    pub fn left_multiply_simple(&self, i: usize) -> WeylElement {
        let table = &self.rs.reflection_table()[self.rs.simple_roots()[i]];
        let image = self.image.iter().map(|&b| table[b as usize]).collect();
        WeylElement::from_image(&self.rs, image)
    }

    /// `s_alpha * self`.
    pub fn left_multiply_reflection(&self, alpha: usize) -> WeylElement {
        let table = &self.rs.reflection_table()[alpha];
        let image = self.image.iter().map(|&b| table[b as usize]).collect();
        WeylElement::from_image(&self.rs, image)
    }

    /// Whether `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inversions.contains(self.rs.simple_roots()[i])
    }

    /// Whether `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        !self.rs.is_positive(self.apply(self.rs.simple_roots()[i]))
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.rs.rank())
            .filter(|&i| self.has_left_descent(i))
            .collect()
    }

    /// Lexicographically least reduced word, 0-based.
    pub fn reduced_word(&self) -> Vec<usize> {
        peel_word(&self.rs, &self.inversions).expect("inversion set of a group element")
    }
}

/// Repeatedly strips the smallest simple root: if `a_i` lies in `I(w)` then
/// `I(s_i w) = s_i(I(w) - {a_i})`. Returns `None` if the process gets stuck.
pub(crate) fn peel_word(rs: &RootSystem, set: &InversionSet) -> Option<Vec<usize>> {
    let mut current = set.clone();
    let mut word = Vec::with_capacity(current.count());
    while !current.is_empty() {
        let i = (0..rs.rank()).find(|&i| current.contains(rs.simple_roots()[i]))?;
        let alpha = rs.simple_roots()[i];
        let mut next = InversionSet::empty(rs.num_positive());
        for beta in current.iter().filter(|&b| b != alpha) {
            let img = rs.reflect_index(alpha, beta);
            if !rs.is_positive(img) {
                return None;
            }
            next.insert(img);
        }
        word.push(i);
        current = next;
    }
    Some(word)
}

/// Closure and co-closure under addition of positive roots.
pub(crate) fn check_biconvex(rs: &RootSystem, set: &InversionSet) -> Result<()> {
    let n = rs.num_positive();
    for a in 0..n {
        for b in a + 1..n {
            let Some(sum) = rs.positive_sum(a, b) else {
                continue;
            };
            let (ia, ib, isum) = (set.contains(a), set.contains(b), set.contains(sum));
            if ia && ib && !isum {
                return Err(Error::NotInversionSet(format!(
                    "roots {a} and {b} are in the set but their sum {sum} is not"
                )));
            }
            if !ia && !ib && isum {
                return Err(Error::NotInversionSet(format!(
                    "root {sum} is in the set but neither summand {a}, {b} is"
                )));
            }
        }
    }
    Ok(())
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.image == other.image && self.same_group(other).is_ok()
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.image.hash(state);
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}[{}]",
            self.rs.cartan_type(),
            super::notation::word_string(self)
        )
    }
}
