use std::sync::Arc;

use crate::error::{Error, Result};
use crate::weyl::{posets_isomorphic, WeylGroup};

use super::{flatten, SubsystemEmbedding};

/// Index-level data for one embedding between two enumerated groups:
/// flattening of every target element, the image of every source element,
/// and right-coset labels of `i(W')` in `W`.
pub struct EmbeddingTables {
    embedding: SubsystemEmbedding,
    source: Arc<WeylGroup>,
    target: Arc<WeylGroup>,
    flatten: Vec<u32>,
    embed: Vec<u32>,
    coset: Vec<u32>,
}

impl EmbeddingTables {
    pub fn new(
        embedding: SubsystemEmbedding,
        source: Arc<WeylGroup>,
        target: Arc<WeylGroup>,
    ) -> Result<Self> {
        if source.root_system() != embedding.source() || target.root_system() != embedding.target()
        {
            return Err(Error::GroupMismatch {
                left: embedding.source().cartan_type().to_string(),
                right: source.root_system().cartan_type().to_string(),
            });
        }
        let flatten_table = target
            .elements()
            .iter()
            .map(|w| {
                let f = flatten(&embedding, w)?;
                source.index_of(&f).map(|k| k as u32).ok_or_else(|| {
                    Error::InvariantViolation("flattening left the source group".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let embed = source
            .elements()
            .iter()
            .map(|w| {
                let e = embedding.embed_element(w)?;
                target
                    .index_of(&e)
                    .map(|k| k as u32)
                    .ok_or_else(|| Error::InvariantViolation("embedded element missing".into()))
            })
            .collect::<Result<Vec<_>>>()?;

        let mut coset = vec![u32::MAX; target.order()];
        let mut next_id = 0;
        for w in 0..target.order() {
            if coset[w] != u32::MAX {
                continue;
            }
            for &h in &embed {
                coset[target.multiply(h as usize, w)] = next_id;
            }
            next_id += 1;
        }
        Ok(EmbeddingTables {
            embedding,
            source,
            target,
            flatten: flatten_table,
            embed,
            coset,
        })
    }

    pub fn embedding(&self) -> &SubsystemEmbedding {
        &self.embedding
    }

    pub fn source(&self) -> &Arc<WeylGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<WeylGroup> {
        &self.target
    }

    pub fn flatten(&self, w: usize) -> usize {
        self.flatten[w] as usize
    }

    pub fn embed(&self, w: usize) -> usize {
        self.embed[w] as usize
    }

    pub fn same_right_coset(&self, x: usize, w: usize) -> bool {
        self.coset[x] == self.coset[w]
    }

    /// Target elements `h w` for `h` in `i(W')`.
    pub fn coset_of(&self, w: usize) -> impl Iterator<Item = usize> + '_ {
        self.embed
            .iter()
            .map(move |&h| self.target.multiply(h as usize, w))
    }

    /// `i(u v^{-1}) w`.
    pub fn forced_bottom(&self, u: usize, v: usize, w: usize) -> usize {
        let uv = self.source.multiply(u, self.source.inverse(v));
        self.target.multiply(self.embed(uv), w)
    }

    /// Conditions (1) and (2) of an interval embedding.
    pub fn endpoints_match(&self, u: usize, v: usize, x: usize, w: usize) -> bool {
        self.flatten(w) == v && self.flatten(x) == u && self.same_right_coset(x, w)
    }

    /// Whether `[u, v]` and `[x, w]` are isomorphic as posets (both must be
    /// intervals).
    pub fn intervals_isomorphic(&self, u: usize, v: usize, x: usize, w: usize) -> bool {
        posets_isomorphic(
            &self.source.interval_poset(u, v),
            &self.target.interval_poset(x, w),
        )
    }

    /// All three interval embedding conditions; `false` if either pair is
    /// not comparable.
    pub fn interval_embeds(&self, u: usize, v: usize, x: usize, w: usize) -> bool {
        self.source.leq(u, v)
            && self.target.leq(x, w)
            && self.endpoints_match(u, v, x, w)
            && self.source.length(v) - self.source.length(u)
                == self.target.length(w) - self.target.length(x)
            && self.intervals_isomorphic(u, v, x, w)
    }
}
