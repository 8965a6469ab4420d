#![allow(dead_code)]

use std::sync::Arc;

use weylpat::weyl::{WeylGroup, DEFAULT_CAP};

pub fn group(t: &str) -> Arc<WeylGroup> {
    Arc::new(WeylGroup::build(t, DEFAULT_CAP).unwrap())
}

type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add_into(acc: &mut Poly, p: &[i64], shift: usize, scale: i64) {
    if acc.len() < p.len() + shift {
        acc.resize(p.len() + shift, 0);
    }
    for (k, &c) in p.iter().enumerate() {
        acc[k + shift] += scale * c;
    }
}

fn mul(a: &[i64], b: &[i64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Kazhdan–Lusztig polynomials computed a second way: R-polynomials from
/// their descent recursion, then P from
/// `q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x < y <= w} R_{x,y} P_{y,w}`
/// and the degree bound.
pub struct KlOracle {
    pub group: Arc<WeylGroup>,
    p: Vec<Vec<Poly>>,
}

impl KlOracle {
    pub fn new(group: Arc<WeylGroup>) -> Self {
        let g = &*group;
        let n = g.order();
        let mut r: Vec<Vec<Poly>> = vec![vec![Vec::new(); n]; n];
        // elements are listed by length, so sw precedes w
        for w in 0..n {
            let Some(s) = g.first_left_descent(w) else {
                r[w][w] = vec![1];
                continue;
            };
            let sw = g.left_simple(s, w);
            for x in 0..n {
                if !g.leq(x, w) {
                    continue;
                }
                let sx = g.left_simple(s, x);
                r[x][w] = if g.length(sx) < g.length(x) {
                    r[sx][sw].clone()
                } else {
                    let mut acc = Vec::new();
                    add_into(&mut acc, &r[sx][sw], 1, 1);
                    add_into(&mut acc, &r[x][sw], 1, 1);
                    add_into(&mut acc, &r[x][sw], 0, -1);
                    trim(acc)
                };
            }
        }
        let mut p: Vec<Vec<Poly>> = vec![vec![Vec::new(); n]; n];
        for w in 0..n {
            let mut order: Vec<usize> = (0..n).filter(|&x| g.leq(x, w)).collect();
            order.sort_by_key(|&x| std::cmp::Reverse(g.length(x)));
            for x in order {
                if x == w {
                    p[x][w] = vec![1];
                    continue;
                }
                let mut q = Vec::new();
                for y in 0..n {
                    if y != x && g.leq(x, y) && g.leq(y, w) {
                        add_into(&mut q, &mul(&r[x][y], &p[y][w]), 0, 1);
                    }
                }
                let d = g.length(w) - g.length(x);
                let coeffs: Poly = (0..d)
                    .take_while(|k| 2 * k < d)
                    .map(|k| -q.get(k).copied().unwrap_or(0))
                    .collect();
                p[x][w] = trim(coeffs);
            }
        }
        KlOracle { group, p }
    }

    pub fn polynomial(&self, x: usize, w: usize) -> &[i64] {
        &self.p[x][w]
    }
}
