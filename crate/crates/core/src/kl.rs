//! Kazhdan–Lusztig polynomials.
//!
//! Polynomials are computed a whole column `x -> P_{x,v}` at a time with the
//! classical recursion on a left descent `s` of `v` (write `v' = sv`):
//!
//! ```text
//! P_{x,v} = q^{1-c} P_{sx,v'} + q^c P_{x,v'}
//!           - sum_{z < v', sz < z} mu(z, v') q^{(l(v) - l(z))/2} P_{x,z}
//! ```
//!
//! where `c = 1` if `sx < x` and `c = 0` otherwise, and `P_{a,b} = 0` when
//! `a` is not below `b`. The descent used is always the smallest one.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{notation::word_string, WeylElement, WeylGroup};

/// A polynomial in `q` with nonnegative integer coefficients; position `k`
/// holds the coefficient of `q^k`. Trailing zeros are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KlPolynomial(Vec<u64>);

impl KlPolynomial {
    pub fn one() -> Self {
        KlPolynomial(vec![1])
    }

    pub fn zero() -> Self {
        KlPolynomial(Vec::new())
    }

    pub fn from_coefficients(mut coefficients: Vec<u64>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        KlPolynomial(coefficients)
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.0
    }

    pub fn coefficient(&self, k: usize) -> u64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn is_one(&self) -> bool {
        self.0 == [1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self, q: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * q + c as i64)
    }
}

impl fmt::Display for KlPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match (k, c) {
                (0, c) => c.to_string(),
                (1, 1) => "q".to_string(),
                (1, c) => format!("{c}q"),
                (k, 1) => format!("q^{k}"),
                (k, c) => format!("{c}q^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

/// Signed working polynomial used inside the recursion.
#[derive(Clone, Default)]
struct Work(Vec<i64>);

impl Work {
    fn add_shifted(&mut self, p: &KlPolynomial, shift: usize, scale: i64) {
        if p.0.is_empty() {
            return;
        }
        if self.0.len() < p.0.len() + shift {
            self.0.resize(p.0.len() + shift, 0);
        }
        for (k, &c) in p.0.iter().enumerate() {
            self.0[k + shift] += scale * c as i64;
        }
    }

    fn finish(mut self) -> std::result::Result<KlPolynomial, Vec<i64>> {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        if self.0.iter().any(|&c| c < 0) {
            return Err(self.0);
        }
        Ok(KlPolynomial(self.0.into_iter().map(|c| c as u64).collect()))
    }
}

struct Column {
    // P_{x,v} for every x, zero when x is not below v
    polys: Vec<KlPolynomial>,
    // (z, mu(z, v)) for z < v with nonzero mu
    mu: Vec<(usize, u64)>,
}

/// Memoized Kazhdan–Lusztig polynomials for one enumerated group.
///
/// Columns are computed on first use and cached; the cache is safe to share
/// between threads.
pub struct KlEngine {
    group: Arc<WeylGroup>,
    columns: Vec<OnceLock<std::result::Result<Arc<Column>, Error>>>,
}

impl KlEngine {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let columns = (0..group.order()).map(|_| OnceLock::new()).collect();
        KlEngine { group, columns }
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    fn column(&self, v: usize) -> Result<Arc<Column>> {
        self.columns[v]
            .get_or_init(|| self.compute_column(v).map(Arc::new))
            .clone()
    }

    /// One step of the recursion at `x` using the left descent `s` of `v`.
    fn recurse(&self, x: usize, v: usize, s: usize, prev: &Column) -> Result<Work> {
        let g = &*self.group;
        let sx = g.left_simple(s, x);
        let c = usize::from(g.length(sx) < g.length(x));
        let mut p = Work::default();
        p.add_shifted(&prev.polys[sx], 1 - c, 1);
        p.add_shifted(&prev.polys[x], c, 1);
        for &(z, mu) in &prev.mu {
            if g.length(g.left_simple(s, z)) < g.length(z) && g.leq(x, z) {
                let shift = (g.length(v) - g.length(z)) / 2;
                p.add_shifted(&self.column(z)?.polys[x], shift, -(mu as i64));
            }
        }
        Ok(p)
    }

    fn compute_column(&self, v: usize) -> Result<Column> {
        let g = &*self.group;
        let n = g.order();
        let mut polys = vec![KlPolynomial::zero(); n];
        let Some(s) = g.first_left_descent(v) else {
            polys[v] = KlPolynomial::one();
            return Ok(Column {
                polys,
                mu: Vec::new(),
            });
        };
        let prev = self.column(g.left_simple(s, v))?;
        for (x, slot) in polys.iter_mut().enumerate() {
            if g.leq(x, v) {
                *slot = self.validate(x, v, self.recurse(x, v, s, &prev)?)?;
            }
        }
        let lv = g.length(v);
        let mu = (0..n)
            .filter(|&z| z != v && g.leq(z, v) && (lv - g.length(z)) % 2 == 1)
            .filter_map(|z| {
                let m = polys[z].coefficient((lv - g.length(z) - 1) / 2);
                (m != 0).then_some((z, m))
            })
            .collect();
        Ok(Column { polys, mu })
    }

    fn validate(&self, x: usize, v: usize, p: Work) -> Result<KlPolynomial> {
        let g = &*self.group;
        let describe = || {
            format!(
                "P({}, {})",
                word_string(g.element(x)),
                word_string(g.element(v))
            )
        };
        let p = p.finish().map_err(|raw| {
            Error::InvariantViolation(format!("{} has negative coefficients {raw:?}", describe()))
        })?;
        let gap = g.length(v) - g.length(x);
        let degree_ok = match p.degree() {
            None => false,
            Some(d) => gap == 0 || 2 * d < gap,
        };
        if p.coefficient(0) != 1 || !degree_ok || (gap == 0 && !p.is_one()) {
            return Err(Error::InvariantViolation(format!(
                "{} = {p} violates P(0) = 1 or the degree bound",
                describe()
            )));
        }
        Ok(p)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        if self.group.leq(u, v) {
            Ok(())
        } else {
            Err(Error::NotComparable(format!(
                "{} is not below {}",
                word_string(self.group.element(u)),
                word_string(self.group.element(v))
            )))
        }
    }

    /// `P_{u,v}` for element indices of the group.
    pub fn polynomial(&self, u: usize, v: usize) -> Result<KlPolynomial> {
        self.check_pair(u, v)?;
        Ok(self.column(v)?.polys[u].clone())
    }

    /// `P_{u,v}` computed with the left descent `s` of `v` for the top step
    /// (lower levels use the cached columns).
    pub fn polynomial_with_descent(&self, u: usize, v: usize, s: usize) -> Result<KlPolynomial> {
        self.check_pair(u, v)?;
        let g = &*self.group;
        if !g.element(v).has_left_descent(s) {
            return Err(Error::InvariantViolation(format!(
                "s{} is not a left descent of {}",
                s + 1,
                word_string(g.element(v))
            )));
        }
        let prev = self.column(g.left_simple(s, v))?;
        let p = self.recurse(u, v, s, &prev)?;
        self.validate(u, v, p)
    }

    pub fn mu_by_index(&self, u: usize, v: usize) -> Result<u64> {
        self.check_pair(u, v)?;
        let gap = self.group.length(v) - self.group.length(u);
        if gap.is_multiple_of(2) {
            return Ok(0);
        }
        Ok(self.column(v)?.polys[u].coefficient((gap - 1) / 2))
    }

    /// `P_{x,v} = 1` for every `x <= v`.
    pub fn smooth_by_index(&self, v: usize) -> Result<bool> {
        let column = self.column(v)?;
        Ok((0..self.group.order())
            .filter(|&x| self.group.leq(x, v))
            .all(|x| column.polys[x].is_one()))
    }

    fn indices(&self, u: &WeylElement, v: &WeylElement) -> Result<(usize, usize)> {
        u.same_group(v)?;
        Ok((self.group.require_index(u)?, self.group.require_index(v)?))
    }

    pub fn kl_polynomial(&self, u: &WeylElement, v: &WeylElement) -> Result<KlPolynomial> {
        let (u, v) = self.indices(u, v)?;
        self.polynomial(u, v)
    }

    /// Coefficient of `q^{(l(v) - l(u) - 1)/2}` in `P_{u,v}` (0 for even gaps).
    pub fn mu(&self, u: &WeylElement, v: &WeylElement) -> Result<u64> {
        let (u, v) = self.indices(u, v)?;
        self.mu_by_index(u, v)
    }

    pub fn is_rationally_smooth(&self, v: &WeylElement) -> Result<bool> {
        let v = self.group.require_index(v)?;
        self.smooth_by_index(v)
    }
}
