use std::collections::HashMap;

use super::element::WeylElement;

/// A finite graded poset with a unique minimum, stored as rank labels plus
/// the lower-cover lists of each element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPoset {
    ranks: Vec<usize>,
    lower_covers: Vec<Vec<usize>>,
}

impl GradedPoset {
    pub fn new(ranks: Vec<usize>, lower_covers: Vec<Vec<usize>>) -> Self {
        assert_eq!(ranks.len(), lower_covers.len());
        GradedPoset {
            ranks,
            lower_covers,
        }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn lower_covers(&self) -> &[Vec<usize>] {
        &self.lower_covers
    }

    fn upper_covers(&self) -> Vec<Vec<usize>> {
        let mut up = vec![Vec::new(); self.len()];
        for (z, lower) in self.lower_covers.iter().enumerate() {
            for &y in lower {
                up[y].push(z);
            }
        }
        up
    }

    fn closure_sizes(&self, adjacency: &[Vec<usize>], order: &[usize]) -> Vec<usize> {
        let words = self.len().div_ceil(64);
        let mut sets = vec![vec![0u64; words]; self.len()];
        for &z in order {
            let mut acc = vec![0u64; words];
            acc[z / 64] |= 1 << (z % 64);
            for &y in &adjacency[z] {
                for (a, b) in acc.iter_mut().zip(&sets[y]) {
                    *a |= b;
                }
            }
            sets[z] = acc;
        }
        sets.iter()
            .map(|s| s.iter().map(|w| w.count_ones() as usize).sum())
            .collect()
    }

    /// Per-element invariants preserved by any isomorphism.
    fn signatures(&self) -> Vec<(usize, usize, usize, usize, usize)> {
        let up = self.upper_covers();
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&z| self.ranks[z]);
        let below = self.closure_sizes(&self.lower_covers, &order);
        order.reverse();
        let above = self.closure_sizes(&up, &order);
        (0..self.len())
            .map(|z| {
                (
                    self.ranks[z],
                    self.lower_covers[z].len(),
                    up[z].len(),
                    below[z],
                    above[z],
                )
            })
            .collect()
    }
}

/// Decides whether two graded posets are isomorphic.
///
/// Elements are matched rank by rank; a candidate image must carry the same
/// signature and its lower covers must be exactly the images of the lower
/// covers already placed.
pub fn posets_isomorphic(a: &GradedPoset, b: &GradedPoset) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let sig_a = a.signatures();
    let sig_b = b.signatures();
    let mut sorted_a = sig_a.clone();
    let mut sorted_b = sig_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return false;
    }

    let mut order: Vec<usize> = (0..a.len()).collect();
    order.sort_by_key(|&z| (a.ranks[z], z));
    let mut by_sig: HashMap<_, Vec<usize>> = HashMap::new();
    for (z, s) in sig_b.iter().enumerate() {
        by_sig.entry(*s).or_default().push(z);
    }
    let candidates: Vec<&[usize]> = order
        .iter()
        .map(|&z| by_sig.get(&sig_a[z]).map_or(&[][..], Vec::as_slice))
        .collect();

    let mut forward = vec![usize::MAX; a.len()];
    let mut used = vec![false; b.len()];
    backtrack(a, b, &order, &candidates, 0, &mut forward, &mut used)
}

fn backtrack(
    a: &GradedPoset,
    b: &GradedPoset,
    order: &[usize],
    candidates: &[&[usize]],
    depth: usize,
    forward: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let z = order[depth];
    let mut image: Vec<usize> = a.lower_covers[z].iter().map(|&y| forward[y]).collect();
    image.sort_unstable();
    for &c in candidates[depth] {
        if used[c] {
            continue;
        }
        let mut target = b.lower_covers[c].clone();
        target.sort_unstable();
        if target != image {
            continue;
        }
        forward[z] = c;
        used[c] = true;
        if backtrack(a, b, order, candidates, depth + 1, forward, used) {
            return true;
        }
        used[c] = false;
        forward[z] = usize::MAX;
    }
    false
}

/// The Bruhat interval `[bottom, top]` with its cover relation.
#[derive(Clone, Debug)]
pub struct BruhatInterval {
    bottom: WeylElement,
    top: WeylElement,
    elements: Vec<WeylElement>,
    poset: GradedPoset,
}

impl BruhatInterval {
    /// Builds the interval from its full member list; orders members by
    /// length and then by reduced word.
    pub(crate) fn from_members(
        bottom: WeylElement,
        top: WeylElement,
        members: Vec<WeylElement>,
    ) -> Self {
        let mut keyed: Vec<(usize, Vec<usize>, WeylElement)> = members
            .into_iter()
            .map(|z| (z.length(), z.reduced_word(), z))
            .collect();
        keyed.sort_by(|x, y| (x.0, &x.1).cmp(&(y.0, &y.1)));
        let elements: Vec<WeylElement> = keyed.into_iter().map(|(_, _, z)| z).collect();
        let position: HashMap<&WeylElement, usize> =
            elements.iter().enumerate().map(|(k, z)| (z, k)).collect();
        let rs = top.root_system();
        let lower_covers = elements
            .iter()
            .map(|z| {
                let mut lower: Vec<usize> = (0..rs.num_positive())
                    .map(|alpha| z.left_multiply_reflection(alpha))
                    .filter(|y| y.length() + 1 == z.length())
                    .filter_map(|y| position.get(&y).copied())
                    .collect();
                lower.sort_unstable();
                lower.dedup();
                lower
            })
            .collect();
        let ranks = elements
            .iter()
            .map(|z| z.length() - bottom.length())
            .collect();
        BruhatInterval {
            bottom,
            top,
            elements,
            poset: GradedPoset::new(ranks, lower_covers),
        }
    }

    pub fn bottom(&self) -> &WeylElement {
        &self.bottom
    }

    pub fn top(&self) -> &WeylElement {
        &self.top
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `l(z) - l(bottom)` for the element at position `k`.
    pub fn rank_of(&self, k: usize) -> usize {
        self.poset.ranks[k]
    }

    pub fn rank(&self) -> usize {
        self.top.length() - self.bottom.length()
    }

    /// Positions of the elements covered by the element at position `k`.
    pub fn lower_covers(&self, k: usize) -> &[usize] {
        &self.poset.lower_covers[k]
    }

    pub fn poset(&self) -> &GradedPoset {
        &self.poset
    }
}

pub fn interval_isomorphic(first: &BruhatInterval, second: &BruhatInterval) -> bool {
    posets_isomorphic(first.poset(), second.poset())
}
