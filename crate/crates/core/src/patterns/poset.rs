//! The poset on Bruhat intervals across a finite window of Weyl groups.
//!
//! Two kinds of steps generate the order:
//!
//! 1. `[u, v] -> [x, w]` whenever some embedding embeds `[u, v]` in `[x, w]`;
//! 2. `[u, v] -> [u', v]` whenever `u' <= u` (moving the base point to a
//!    smaller fixed point of the same Schubert variety).
//!
//! The window fixes which groups are considered; embeddings between every
//! ordered pair of window groups are used for steps of the first kind.

use std::collections::{HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::roots::build_root_system;
use crate::weyl::{WeylElement, WeylGroup};

use super::{enumerate_embeddings, EmbeddingTables};

/// An interval `[bottom, top]` of the window group with index `group`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WindowInterval {
    pub group: usize,
    pub bottom: usize,
    pub top: usize,
}

struct Link {
    from: usize,
    to: usize,
    tables: Arc<EmbeddingTables>,
    // target elements grouped by their flattening
    fibers: Vec<Vec<u32>>,
}

pub struct IntervalWindow {
    groups: Vec<Arc<WeylGroup>>,
    links: Vec<Link>,
    state_cap: usize,
}

impl IntervalWindow {
    pub fn new(types: &[&str], cap: usize) -> Result<Self> {
        let groups = types
            .iter()
            .map(|t| {
                Ok(Arc::new(WeylGroup::new(
                    Arc::new(build_root_system(t)?),
                    cap,
                )?))
            })
            .collect::<Result<Vec<_>>>()?;
        IntervalWindow::from_groups(groups, cap)
    }

    pub fn from_groups(groups: Vec<Arc<WeylGroup>>, cap: usize) -> Result<Self> {
        let mut links = Vec::new();
        for (a, src) in groups.iter().enumerate() {
            for (b, dst) in groups.iter().enumerate() {
                for i in enumerate_embeddings(src.root_system(), dst.root_system(), cap)? {
                    let tables = EmbeddingTables::new(i, Arc::clone(src), Arc::clone(dst))?;
                    let mut fibers = vec![Vec::new(); src.order()];
                    for w in 0..dst.order() {
                        fibers[tables.flatten(w)].push(w as u32);
                    }
                    links.push(Link {
                        from: a,
                        to: b,
                        tables: Arc::new(tables),
                        fibers,
                    });
                }
            }
        }
        let state_cap = groups.iter().map(|g| g.order() * g.order()).sum();
        Ok(IntervalWindow {
            groups,
            links,
            state_cap,
        })
    }

    pub fn groups(&self) -> &[Arc<WeylGroup>] {
        &self.groups
    }

    pub fn locate(&self, bottom: &WeylElement, top: &WeylElement) -> Result<WindowInterval> {
        bottom.same_group(top)?;
        let group = self
            .groups
            .iter()
            .position(|g| g.root_system() == top.root_system())
            .ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "W({}) is not part of the window",
                    top.root_system().cartan_type()
                ))
            })?;
        let g = &self.groups[group];
        let (u, v) = (g.require_index(bottom)?, g.require_index(top)?);
        if !g.leq(u, v) {
            return Err(Error::NotComparable(format!("{bottom:?} and {top:?}")));
        }
        Ok(WindowInterval {
            group,
            bottom: u,
            top: v,
        })
    }

    /// Intervals reached from `iv` by one generating step.
    pub fn successors(&self, iv: WindowInterval) -> Vec<WindowInterval> {
        let g = &self.groups[iv.group];
        let mut out: Vec<WindowInterval> = g
            .lower_covers(iv.bottom)
            .iter()
            .map(|&b| WindowInterval {
                bottom: b as usize,
                ..iv
            })
            .collect();
        for link in self.links.iter().filter(|l| l.from == iv.group) {
            for &w in &link.fibers[iv.top] {
                let w = w as usize;
                let x = link.tables.forced_bottom(iv.bottom, iv.top, w);
                if link.tables.interval_embeds(iv.bottom, iv.top, x, w) {
                    out.push(WindowInterval {
                        group: link.to,
                        bottom: x,
                        top: w,
                    });
                }
            }
        }
        out
    }

    /// Breadth-first search upward from the generators.
    pub fn reachable(&self, generators: &[WindowInterval], goal: WindowInterval) -> Result<bool> {
        let mut seen: HashSet<WindowInterval> = generators.iter().copied().collect();
        let mut queue: VecDeque<WindowInterval> = generators.iter().copied().collect();
        while let Some(iv) = queue.pop_front() {
            if iv == goal {
                return Ok(true);
            }
            for next in self.successors(iv) {
                if seen.insert(next) {
                    if seen.len() > self.state_cap {
                        return Err(Error::CapExceeded {
                            what: "interval poset search".into(),
                            cap: self.state_cap,
                        });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(false)
    }
}

/// Whether `[x, w]` lies above one of `generators` in the interval poset
/// restricted to `window`.
pub fn interval_poset_reachable(
    window: &IntervalWindow,
    generators: &[(WeylElement, WeylElement)],
    x: &WeylElement,
    w: &WeylElement,
) -> Result<bool> {
    let starts = generators
        .iter()
        .map(|(u, v)| window.locate(u, v))
        .collect::<Result<Vec<_>>>()?;
    window.reachable(&starts, window.locate(x, w)?)
}
