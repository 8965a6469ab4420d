//! Subsystem embeddings, flattening, and (interval) pattern avoidance.
//!
//! An embedding `i` of a root system `P` into `R` is fixed by the images of
//! the simple roots of `P`. Images are positive roots of `R` forming the
//! simple system of `R+ ∩ span`, the roots of `R` in their span are exactly
//! the image of `P`, and Cartan integers are preserved. Root lengths are not
//! compared, so `A1` embeds on both long and short roots.

mod poset;
mod tables;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::roots::{is_nonnegative, RootSystem, SpanSolver};
use crate::weyl::{
    bruhat_leq, interval, interval_isomorphic, notation::word_string, InversionSet, WeylElement,
    WeylGroup, DEFAULT_CAP,
};

pub use poset::{interval_poset_reachable, IntervalWindow, WindowInterval};
pub use tables::EmbeddingTables;

#[derive(Clone, Debug)]
pub struct SubsystemEmbedding {
    source: Arc<RootSystem>,
    target: Arc<RootSystem>,
    simple_images: Vec<usize>,
    full_map: Vec<usize>,
    subgroup: OnceLock<std::result::Result<Arc<HashSet<InversionSet>>, Error>>,
}

impl SubsystemEmbedding {
    pub fn source(&self) -> &Arc<RootSystem> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RootSystem> {
        &self.target
    }

    /// Target root index of each simple root of the source.
    pub fn simple_images(&self) -> &[usize] {
        &self.simple_images
    }

    /// Target root index of every source root.
    pub fn full_map(&self) -> &[usize] {
        &self.full_map
    }

    pub fn map_root(&self, source_root: usize) -> usize {
        self.full_map[source_root]
    }

    /// The target element `i(w')` induced by a source element.
    pub fn embed_element(&self, w: &WeylElement) -> Result<WeylElement> {
        self.check_source(w)?;
        let mut image = WeylElement::identity(&self.target);
        for a in w.reduced_word() {
            let r = WeylElement::reflection(&self.target, self.simple_images[a])?;
            image = image.multiply(&r)?;
        }
        Ok(image)
    }

    /// Inversion sets of the subgroup `i(W')`, enumerated once.
    fn image_subgroup(&self) -> Result<Arc<HashSet<InversionSet>>> {
        self.subgroup
            .get_or_init(|| {
                let source_group = WeylGroup::new(Arc::clone(&self.source), DEFAULT_CAP)?;
                let set = source_group
                    .elements()
                    .iter()
                    .map(|w| self.embed_element(w).map(|e| e.inversions().clone()))
                    .collect::<Result<HashSet<_>>>()?;
                Ok(Arc::new(set))
            })
            .clone()
    }

    pub fn in_image_subgroup(&self, g: &WeylElement) -> Result<bool> {
        self.check_target(g)?;
        Ok(self.image_subgroup()?.contains(g.inversions()))
    }

    /// Whether `x` and `w` lie in the same right coset `i(W') x = i(W') w`.
    pub fn same_right_coset(&self, x: &WeylElement, w: &WeylElement) -> Result<bool> {
        self.in_image_subgroup(&x.multiply(&w.inverse())?)
    }

    fn check_source(&self, w: &WeylElement) -> Result<()> {
        w.same_group(&WeylElement::identity(&self.source))
    }

    fn check_target(&self, w: &WeylElement) -> Result<()> {
        w.same_group(&WeylElement::identity(&self.target))
    }
}

impl PartialEq for SubsystemEmbedding {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source
            && self.target == other.target
            && self.simple_images == other.simple_images
    }
}

impl Eq for SubsystemEmbedding {}

/// All embeddings of `source` into `target`, ordered by the sorted tuple of
/// image roots and then by the assignment of simple roots.
///
/// `cap` bounds the number of candidate simple systems examined.
pub fn enumerate_embeddings(
    source: &Arc<RootSystem>,
    target: &Arc<RootSystem>,
    cap: usize,
) -> Result<Vec<SubsystemEmbedding>> {
    let rank = source.rank();
    let mut out = Vec::new();
    if rank > target.rank() {
        return Ok(out);
    }
    let mut candidates = Vec::new();
    let mut chosen = Vec::with_capacity(rank);
    collect_obtuse_sets(target, rank, 0, &mut chosen, &mut candidates, cap)?;

    for set in candidates {
        let Some(subsystem) = closed_subsystem(target, &set) else {
            continue;
        };
        if subsystem.len() != source.num_roots() {
            continue;
        }
        let mut perm: Vec<usize> = (0..rank).collect();
        loop {
            let compatible = (0..rank).all(|a| {
                (0..rank).all(|b| {
                    source.cartan_matrix()[a][b]
                        == target.cartan_integer(set[perm[a]], set[perm[b]])
                })
            });
            if compatible {
                let simple_images: Vec<usize> = perm.iter().map(|&k| set[k]).collect();
                out.push(build_embedding(source, target, simple_images, &subsystem)?);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    Ok(out)
}

/// Increasing tuples of positive roots with pairwise non-positive inner
/// products, linearly independent.
fn collect_obtuse_sets(
    target: &RootSystem,
    size: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if chosen.len() == size {
        let coeffs: Vec<&[i32]> = chosen.iter().map(|&k| target.coefficients(k)).collect();
        if SpanSolver::new(&coeffs).is_some() {
            if out.len() >= cap {
                return Err(Error::CapExceeded {
                    what: format!("candidate subsystems of {}", target.cartan_type()),
                    cap,
                });
            }
            out.push(chosen.clone());
        }
        return Ok(());
    }
    for k in start..target.num_positive() {
        if chosen
            .iter()
            .all(|&j| target.root_inner_product(j, k) <= num_traits::Zero::zero())
        {
            chosen.push(k);
            collect_obtuse_sets(target, size, k + 1, chosen, out, cap)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Roots of `target` in the span of `set`, provided `set` is the simple
/// system of the positive roots among them.
fn closed_subsystem(target: &RootSystem, set: &[usize]) -> Option<HashSet<usize>> {
    let coeffs: Vec<&[i32]> = set.iter().map(|&k| target.coefficients(k)).collect();
    let solver = SpanSolver::new(&coeffs)?;
    let mut members = HashSet::new();
    for beta in 0..target.num_positive() {
        if let Some(c) = solver.coordinates(target.coefficients(beta)) {
            if !is_nonnegative(&c) || c.iter().any(|x| !x.is_integer()) {
                return None;
            }
            members.insert(beta);
            members.insert(target.negate(beta));
        }
    }
    Some(members)
}

fn build_embedding(
    source: &Arc<RootSystem>,
    target: &Arc<RootSystem>,
    simple_images: Vec<usize>,
    subsystem: &HashSet<usize>,
) -> Result<SubsystemEmbedding> {
    let dim = target.rank();
    let mut full_map = Vec::with_capacity(source.num_roots());
    for beta in 0..source.num_roots() {
        let mut c = vec![0i32; dim];
        for (a, &img) in simple_images.iter().enumerate() {
            let k = source.coefficients(beta)[a];
            for (slot, t) in c.iter_mut().zip(target.coefficients(img)) {
                *slot += k * t;
            }
        }
        let idx = target
            .index_of_coefficients(&c)
            .filter(|idx| subsystem.contains(idx))
            .ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "image of root {beta} of {} is not a root of the subsystem",
                    source.cartan_type()
                ))
            })?;
        if source.is_positive(beta) != target.is_positive(idx) {
            return Err(Error::InvariantViolation(
                "embedding does not preserve positivity".into(),
            ));
        }
        full_map.push(idx);
    }
    Ok(SubsystemEmbedding {
        source: Arc::clone(source),
        target: Arc::clone(target),
        simple_images,
        full_map,
        subgroup: OnceLock::new(),
    })
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The source element whose inversion set is the pullback of `I(w)`.
pub fn flatten(i: &SubsystemEmbedding, w: &WeylElement) -> Result<WeylElement> {
    i.check_target(w)?;
    let n = i.source.num_positive();
    let pulled = InversionSet::from_indices(
        n,
        (0..n).filter(|&p| w.inversions().contains(i.full_map[p])),
    );
    WeylElement::from_inversion_set(&i.source, &pulled).map_err(|e| {
        Error::InvariantViolation(format!(
            "flattening {} through {:?} failed: {e}",
            word_string(w),
            i.simple_images
        ))
    })
}

pub fn pattern_embeds(i: &SubsystemEmbedding, v: &WeylElement, w: &WeylElement) -> Result<bool> {
    i.check_source(v)?;
    Ok(&flatten(i, w)? == v)
}

/// `w` avoids `v` if no embedding of `v`'s root system flattens `w` to `v`.
pub fn pattern_avoids(v: &WeylElement, w: &WeylElement) -> Result<bool> {
    let embeddings = enumerate_embeddings(v.root_system(), w.root_system(), DEFAULT_CAP)?;
    pattern_avoids_with(&embeddings, v, w)
}

pub fn pattern_avoids_with(
    embeddings: &[SubsystemEmbedding],
    v: &WeylElement,
    w: &WeylElement,
) -> Result<bool> {
    for i in embeddings {
        if pattern_embeds(i, v, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All three interval embedding conditions: matching flattenings at both
/// ends, a common right coset of `i(W')`, and isomorphic Bruhat intervals.
pub fn interval_embeds(
    i: &SubsystemEmbedding,
    u: &WeylElement,
    v: &WeylElement,
    x: &WeylElement,
    w: &WeylElement,
) -> Result<bool> {
    i.check_source(u)?;
    i.check_target(x)?;
    for (lo, hi) in [(u, v), (x, w)] {
        if !bruhat_leq(lo, hi)? {
            return Err(Error::NotComparable(format!(
                "{} is not below {}",
                word_string(lo),
                word_string(hi)
            )));
        }
    }
    if &flatten(i, w)? != v || &flatten(i, x)? != u {
        return Ok(false);
    }
    if !i.same_right_coset(x, w)? {
        return Ok(false);
    }
    if v.length() - u.length() != w.length() - x.length() {
        return Ok(false);
    }
    Ok(interval_isomorphic(&interval(u, v)?, &interval(x, w)?))
}

/// The forced bottom `i(u v^{-1}) w`.
pub fn forced_bottom(
    i: &SubsystemEmbedding,
    u: &WeylElement,
    v: &WeylElement,
    w: &WeylElement,
) -> Result<WeylElement> {
    i.embed_element(&u.multiply(&v.inverse())?)?.multiply(w)
}

/// `w` avoids `[u, v]` if for no embedding `i` does `[u, v]` embed in
/// `[i(u v^{-1}) w, w]`.
pub fn interval_pattern_avoids(w: &WeylElement, u: &WeylElement, v: &WeylElement) -> Result<bool> {
    let embeddings = enumerate_embeddings(u.root_system(), w.root_system(), DEFAULT_CAP)?;
    interval_pattern_avoids_with(&embeddings, w, u, v)
}

pub fn interval_pattern_avoids_with(
    embeddings: &[SubsystemEmbedding],
    w: &WeylElement,
    u: &WeylElement,
    v: &WeylElement,
) -> Result<bool> {
    if !bruhat_leq(u, v)? {
        return Err(Error::NotComparable(format!(
            "{} is not below {}",
            word_string(u),
            word_string(v)
        )));
    }
    for i in embeddings {
        let x = forced_bottom(i, u, v, w)?;
        if bruhat_leq(&x, w)? && interval_embeds(i, u, v, &x, w)? {
            return Ok(false);
        }
    }
    Ok(true)
}

type EmbeddingList = Arc<Vec<SubsystemEmbedding>>;

/// Embedding lists cached per (source, target) type pair.
#[derive(Default)]
pub struct EmbeddingCache {
    cap: usize,
    entries: Mutex<HashMap<(String, String), EmbeddingList>>,
}

impl EmbeddingCache {
    pub fn new(cap: usize) -> Self {
        EmbeddingCache {
            cap,
            entries: Mutex::default(),
        }
    }

    pub fn get(
        &self,
        source: &Arc<RootSystem>,
        target: &Arc<RootSystem>,
    ) -> Result<Arc<Vec<SubsystemEmbedding>>> {
        let key = (
            source.cartan_type().to_string(),
            target.cartan_type().to_string(),
        );
        if let Some(hit) = self.entries.lock().unwrap().get(&key) {
            return Ok(Arc::clone(hit));
        }
        let list = Arc::new(enumerate_embeddings(source, target, self.cap)?);
        let mut entries = self.entries.lock().unwrap();
        Ok(Arc::clone(entries.entry(key).or_insert(list)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_root_system;
    use crate::weyl::notation::parse_element;

    fn rs(t: &str) -> Arc<RootSystem> {
        Arc::new(build_root_system(t).unwrap())
    }

    fn count(src: &str, dst: &str) -> usize {
        enumerate_embeddings(&rs(src), &rs(dst), DEFAULT_CAP)
            .unwrap()
            .len()
    }

    #[test]
    fn embedding_counts() {
        assert_eq!(count("A1", "A2"), 3);
        assert_eq!(count("A1xA1", "A2"), 0);
        assert_eq!(count("A1xA1", "B2"), 0);
        assert_eq!(count("A1xA1", "A3"), 6);
        assert_eq!(count("A2", "A2"), 2);
        assert_eq!(count("A1", "B2"), 4);
        assert_eq!(count("B2", "B2"), 1);
        assert_eq!(count("G2", "G2"), 1);
        assert_eq!(count("A3", "A2"), 0);
    }

    #[test]
    fn flatten_through_a1_in_a2() {
        let a1 = rs("A1");
        let a2 = rs("A2");
        let embeddings = enumerate_embeddings(&a1, &a2, DEFAULT_CAP).unwrap();
        let top_root = embeddings
            .iter()
            .find(|i| a2.coefficients(i.simple_images()[0]) == [1, 1])
            .unwrap();
        let w = WeylElement::from_word(&a2, &[0, 1]).unwrap();
        assert_eq!(flatten(top_root, &w).unwrap().length(), 1);
        for i in &embeddings {
            assert!(flatten(i, &WeylElement::identity(&a2))
                .unwrap()
                .is_identity());
        }
    }

    #[test]
    fn identity_embedding_flattens_to_self() {
        let a2 = rs("A2");
        let embeddings = enumerate_embeddings(&a2, &a2, DEFAULT_CAP).unwrap();
        let id = &embeddings[0];
        assert_eq!(id.simple_images(), &[0, 1]);
        for word in [vec![], vec![0], vec![1, 0], vec![0, 1, 0]] {
            let w = WeylElement::from_word(&a2, &word).unwrap();
            assert_eq!(flatten(id, &w).unwrap(), w);
        }
    }

    #[test]
    fn avoidance_basics() {
        let a3 = rs("A3");
        let p = parse_element(&a3, "3412").unwrap();
        assert!(!pattern_avoids(&p, &p).unwrap());
        let e = WeylElement::identity(&a3);
        assert!(pattern_avoids(&p, &e).unwrap());
        assert!(interval_pattern_avoids(&e, &e, &p).unwrap());
        // [v, v] collapses to ordinary avoidance
        assert!(!interval_pattern_avoids(&p, &p, &p).unwrap());
    }

    #[test]
    fn interval_embeds_self() {
        let a2 = rs("A2");
        let embeddings = enumerate_embeddings(&a2, &a2, DEFAULT_CAP).unwrap();
        let u = WeylElement::from_word(&a2, &[0]).unwrap();
        let v = WeylElement::from_word(&a2, &[0, 1, 0]).unwrap();
        assert!(interval_embeds(&embeddings[0], &u, &v, &u, &v).unwrap());
        let s2 = WeylElement::from_word(&a2, &[1]).unwrap();
        assert!(matches!(
            interval_embeds(&embeddings[0], &u, &s2, &u, &v),
            Err(Error::NotComparable(_))
        ));
    }

    #[test]
    fn permutations_in_lex_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn cache_returns_shared_lists() {
        let cache = EmbeddingCache::new(DEFAULT_CAP);
        let first = cache.get(&rs("A1"), &rs("A3")).unwrap();
        let second = cache.get(&rs("A1"), &rs("A3")).unwrap();
        assert!(Arc::ptr_eq(&first, &second));
        assert_eq!(first.len(), 6);
    }
}
