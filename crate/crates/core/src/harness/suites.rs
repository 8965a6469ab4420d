//! Exhaustive verification suites.
//!
//! Each suite walks every case in a finite window and reports the cases that
//! break the statement it checks. Suites parallelize over embeddings and
//! target elements; failure lists are sorted so reports do not depend on
//! scheduling.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kl::{KlEngine, KlPolynomial};
use crate::patterns::{flatten, EmbeddingTables};
use crate::weyl::notation::{one_line, parse_element, word_string};
use crate::weyl::WeylGroup;

use super::context::Context;
use super::report::{ReportBuilder, VerificationReport};

fn show(g: &WeylGroup, k: usize) -> String {
    let w = g.element(k);
    match one_line(w) {
        Some(p) => format!("[{}]={p}", word_string(w)),
        None => format!("[{}]", word_string(w)),
    }
}

fn describe(t: &EmbeddingTables) -> String {
    format!("i={:?}", t.embedding().simple_images())
}

/// Runs `check` on every (embedding, target element) pair in parallel and
/// gathers `(cases, failures)`.
fn sweep<F>(tables: &[EmbeddingTables], check: F) -> Result<(u64, Vec<String>)>
where
    F: Fn(&EmbeddingTables, usize) -> Result<(u64, Vec<String>)> + Sync,
{
    let jobs: Vec<(usize, usize)> = tables
        .iter()
        .enumerate()
        .flat_map(|(k, t)| (0..t.target().order()).map(move |w| (k, w)))
        .collect();
    let results = jobs
        .par_iter()
        .map(|&(k, w)| check(&tables[k], w))
        .collect::<Result<Vec<_>>>()?;
    Ok(results
        .into_iter()
        .fold((0, Vec::new()), |(c, mut f), (dc, df)| {
            f.extend(df);
            (c + dc, f)
        }))
}

/// Every target element flattens to a valid source element, and
/// flattening undoes the induced inclusion `W' -> W`.
pub fn verify_flatten(ctx: &Context, source: &str, target: &str) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("flatten-well-defined")
        .param("source", source)
        .param("target", target);
    let src = ctx.group(source)?;
    let dst = ctx.group(target)?;
    let embeddings = ctx.embeddings(source, target)?;
    report.count("embeddings", embeddings.len() as u64);
    for i in embeddings.iter() {
        let failures: Vec<String> = dst
            .elements()
            .par_iter()
            .filter_map(|w| match flatten(i, w) {
                Ok(f) if src.index_of(&f).is_some() => None,
                Ok(_) => Some(format!(
                    "i={:?} w={}: result missing",
                    i.simple_images(),
                    word_string(w)
                )),
                Err(e) => Some(format!(
                    "i={:?} w={}: {e}",
                    i.simple_images(),
                    word_string(w)
                )),
            })
            .collect();
        report.absorb(dst.order() as u64, failures);
        let mut failures = Vec::new();
        for v in src.elements() {
            let back = i.embed_element(v).and_then(|e| flatten(i, &e));
            if back.as_ref() != Ok(v) {
                failures.push(format!(
                    "i={:?} w'={}: flatten(i(w')) = {:?}",
                    i.simple_images(),
                    word_string(v),
                    back
                ));
            }
        }
        report.absorb(src.order() as u64, failures);
    }
    Ok(report.finish())
}

/// Whenever `flatten(w) = v`, `flatten(x) = u` and `x`, `w` share a right
/// coset of `i(W')`, then `x = i(u v^{-1}) w`.
pub fn verify_x_determination(
    ctx: &Context,
    source: &str,
    target: &str,
) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("x-determination")
        .param("source", source)
        .param("target", target);
    let tables = ctx.tables(source, target)?;
    report.count("embeddings", tables.len() as u64);
    let (cases, failures) = sweep(&tables, |t, w| {
        let g = t.target();
        let v = t.flatten(w);
        let mut cases = 0;
        let mut failures = Vec::new();
        for x in 0..g.order() {
            if !t.same_right_coset(x, w) {
                continue;
            }
            let u = t.flatten(x);
            cases += 1;
            let forced = t.forced_bottom(u, v, w);
            if forced != x {
                failures.push(format!(
                    "{} w={} x={}: i(uv^-1)w = {}",
                    describe(t),
                    show(g, w),
                    show(g, x),
                    show(g, forced)
                ));
            }
        }
        Ok((cases, failures))
    })?;
    report.absorb(cases, failures);
    Ok(report.finish())
}

/// Given matching flattenings and a common coset, the intervals `[u, v]` and
/// `[x, w]` are isomorphic exactly when their lengths agree.
pub fn verify_length_sufficiency(
    ctx: &Context,
    source: &str,
    target: &str,
) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("length-sufficiency")
        .param("source", source)
        .param("target", target);
    let tables = ctx.tables(source, target)?;
    report.count("embeddings", tables.len() as u64);
    let isomorphic = AtomicU64::new(0);
    let (cases, failures) = sweep(&tables, |t, w| {
        let (src, dst) = (t.source(), t.target());
        let v = t.flatten(w);
        let mut cases = 0;
        let mut failures = Vec::new();
        for x in t.coset_of(w) {
            let u = t.flatten(x);
            if !src.leq(u, v) || !dst.leq(x, w) {
                continue;
            }
            cases += 1;
            let iso = t.intervals_isomorphic(u, v, x, w);
            if iso {
                isomorphic.fetch_add(1, Ordering::Relaxed);
            }
            let same_length = src.length(v) - src.length(u) == dst.length(w) - dst.length(x);
            if iso != same_length {
                failures.push(format!(
                    "{} [u,v]=[{},{}] [x,w]=[{},{}]: isomorphic={iso} equal-length={same_length}",
                    describe(t),
                    show(src, u),
                    show(src, v),
                    show(dst, x),
                    show(dst, w)
                ));
            }
        }
        Ok((cases, failures))
    })?;
    report.count("isomorphic", isomorphic.into_inner());
    report.absorb(cases, failures);
    Ok(report.finish())
}

/// Whenever `[u, v]` embeds in `[x, w]`, `P_{u,v} = P_{x,w}`.
pub fn verify_kl_transfer(ctx: &Context, source: &str, target: &str) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("kl-transfer")
        .param("source", source)
        .param("target", target);
    let tables = ctx.tables(source, target)?;
    let (kl_src, kl_dst) = (ctx.kl(source)?, ctx.kl(target)?);
    report.count("embeddings", tables.len() as u64);
    let (cases, failures) = sweep(&tables, |t, w| {
        let (src, dst) = (t.source(), t.target());
        let v = t.flatten(w);
        let mut cases = 0;
        let mut failures = Vec::new();
        for u in 0..src.order() {
            if !src.leq(u, v) {
                continue;
            }
            let x = t.forced_bottom(u, v, w);
            if !t.interval_embeds(u, v, x, w) {
                continue;
            }
            cases += 1;
            let p = kl_src.polynomial(u, v)?;
            let q = kl_dst.polynomial(x, w)?;
            if p != q {
                failures.push(format!(
                    "{} [u,v]=[{},{}] [x,w]=[{},{}]: {p} != {q}",
                    describe(t),
                    show(src, u),
                    show(src, v),
                    show(dst, x),
                    show(dst, w)
                ));
            }
        }
        Ok((cases, failures))
    })?;
    report.absorb(cases, failures);
    Ok(report.finish())
}

/// Interval properties defined through Kazhdan–Lusztig coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalProperty {
    /// `P_{u,v} != 1`.
    KlNontrivial,
    /// The coefficient of `q^degree` in `P_{u,v}` exceeds `threshold`.
    KlCoefficient { degree: usize, threshold: u64 },
}

impl IntervalProperty {
    pub fn holds(&self, p: &KlPolynomial) -> bool {
        match *self {
            IntervalProperty::KlNontrivial => !p.is_one(),
            IntervalProperty::KlCoefficient { degree, threshold } => {
                p.coefficient(degree) > threshold
            }
        }
    }
}

impl FromStr for IntervalProperty {
    type Err = Error;

    /// `kl-nontrivial`, or `kl-coeff:K:C` (also written `kl-coeff(K,C)`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "kl-nontrivial" {
            return Ok(IntervalProperty::KlNontrivial);
        }
        let bad = || Error::parse("interval property", s);
        let rest = s.strip_prefix("kl-coeff").ok_or_else(bad)?;
        let rest = rest
            .strip_prefix(':')
            .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .ok_or_else(bad)?;
        let parts: Vec<&str> = rest.split([':', ',']).map(str::trim).collect();
        match parts.as_slice() {
            [k, c] => Ok(IntervalProperty::KlCoefficient {
                degree: k.parse().map_err(|_| bad())?,
                threshold: c.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for IntervalProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntervalProperty::KlNontrivial => write!(f, "kl-nontrivial"),
            IntervalProperty::KlCoefficient { degree, threshold } => {
                write!(f, "kl-coeff:{degree}:{threshold}")
            }
        }
    }
}

/// The set of intervals with `property` is closed upward: under moving the
/// base point down (`[u, v]` to `[u', v]` for `u' <= u`) within each group in
/// `types`, and under interval embeddings for every pair in `pairs`.
pub fn verify_upper_ideal(
    ctx: &Context,
    property: IntervalProperty,
    types: &[String],
    pairs: &[(String, String)],
) -> Result<VerificationReport> {
    let mut report = ReportBuilder::new("upper-ideal")
        .param("property", property)
        .param("types", types.join(","))
        .param("pairs", pairs.len());

    for t in types {
        let g = ctx.group(t)?;
        let kl = ctx.kl(t)?;
        let results = (0..g.order())
            .into_par_iter()
            .map(|v| base_point_closure(&g, &kl, property, v))
            .collect::<Result<Vec<_>>>()?;
        for (cases, holds, failures) in results {
            report.count("intervals-with-property", holds);
            report.absorb(cases, failures);
        }
    }

    for (source, target) in pairs {
        let tables = ctx.tables(source, target)?;
        let (kl_src, kl_dst) = (ctx.kl(source)?, ctx.kl(target)?);
        let (cases, failures) = sweep(&tables, |t, w| {
            let (src, dst) = (t.source(), t.target());
            let v = t.flatten(w);
            let mut cases = 0;
            let mut failures = Vec::new();
            for u in 0..src.order() {
                if !src.leq(u, v) || !property.holds(&kl_src.polynomial(u, v)?) {
                    continue;
                }
                let x = t.forced_bottom(u, v, w);
                if !t.interval_embeds(u, v, x, w) {
                    continue;
                }
                cases += 1;
                if !property.holds(&kl_dst.polynomial(x, w)?) {
                    failures.push(format!(
                        "{source}->{target} {} [u,v]=[{},{}] embeds in [x,w]=[{},{}] without the property",
                        describe(t),
                        show(src, u),
                        show(src, v),
                        show(dst, x),
                        show(dst, w)
                    ));
                }
            }
            Ok((cases, failures))
        })?;
        report.absorb(cases, failures);
    }
    Ok(report.finish())
}

fn base_point_closure(
    g: &WeylGroup,
    kl: &KlEngine,
    property: IntervalProperty,
    v: usize,
) -> Result<(u64, u64, Vec<String>)> {
    let below = g.interval_indices(0, v);
    let mut cases = 0;
    let mut holds = 0;
    let mut failures = Vec::new();
    for &u in &below {
        if !property.holds(&kl.polynomial(u, v)?) {
            continue;
        }
        holds += 1;
        for &lower in &below {
            if lower == u || !g.leq(lower, u) {
                continue;
            }
            cases += 1;
            if !property.holds(&kl.polynomial(lower, v)?) {
                failures.push(format!(
                    "{}: property at [{},{}] but not at [{},{}]",
                    g.root_system().cartan_type(),
                    show(g, u),
                    show(g, v),
                    show(g, lower),
                    show(g, v)
                ));
            }
        }
    }
    Ok((cases, holds, failures))
}

/// In `S_n`, rational smoothness (all `P_{x,w} = 1`) coincides with avoiding
/// the patterns `3412` and `4231`.
pub fn verify_type_a_smoothness(ctx: &Context, n: usize) -> Result<VerificationReport> {
    if !(2..=6).contains(&n) {
        return Err(Error::parse("permutation size (2..=6)", n.to_string()));
    }
    let mut report = ReportBuilder::new("type-a-smoothness").param("n", n);
    let target = format!("A{}", n - 1);
    let g = ctx.group(&target)?;
    let kl = ctx.kl(&target)?;
    let patterns = ctx.group("A3")?;
    let pattern_ids = ["3412", "4231"]
        .iter()
        .map(|p| {
            let e = parse_element(patterns.root_system(), p)?;
            patterns.require_index(&e)
        })
        .collect::<Result<Vec<_>>>()?;
    let tables = if n >= 4 {
        ctx.tables("A3", &target)?
    } else {
        std::sync::Arc::new(Vec::new())
    };

    let rows = (0..g.order())
        .into_par_iter()
        .map(|w| {
            let smooth = kl.smooth_by_index(w)?;
            let contains = tables.iter().any(|t| pattern_ids.contains(&t.flatten(w)));
            Ok((w, smooth, !contains))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for &(w, smooth, avoids) in &rows {
        report.count("smooth", u64::from(smooth));
        report.count("avoiders", u64::from(avoids));
        if smooth != avoids {
            failures.push(format!(
                "{}: rationally smooth={smooth} avoids 3412,4231={avoids}",
                show(&g, w)
            ));
        }
    }
    report.absorb(rows.len() as u64, failures);
    Ok(report.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn property_parsing() {
        assert_eq!(
            "kl-nontrivial".parse::<IntervalProperty>().unwrap(),
            IntervalProperty::KlNontrivial
        );
        let k = IntervalProperty::KlCoefficient {
            degree: 1,
            threshold: 0,
        };
        assert_eq!("kl-coeff:1:0".parse::<IntervalProperty>().unwrap(), k);
        assert_eq!("kl-coeff(1,0)".parse::<IntervalProperty>().unwrap(), k);
        assert_eq!(k.to_string().parse::<IntervalProperty>().unwrap(), k);
        for bad in [
            "kl",
            "kl-coeff",
            "kl-coeff:1",
            "kl-coeff:a:b",
            "kl-coeff(1,0",
        ] {
            assert!(bad.parse::<IntervalProperty>().is_err(), "{bad}");
        }
    }

    #[test]
    fn small_suites_pass() {
        let ctx = Context::new(crate::weyl::DEFAULT_CAP);
        for r in [
            verify_flatten(&ctx, "A1", "A2").unwrap(),
            verify_x_determination(&ctx, "A1", "A2").unwrap(),
            verify_length_sufficiency(&ctx, "A1", "A2").unwrap(),
            verify_kl_transfer(&ctx, "A1", "A2").unwrap(),
        ] {
            assert!(r.passed(), "{}: {:?}", r.summary(), r.failures);
            assert!(r.cases > 0);
        }
    }

    #[test]
    fn upper_ideal_vacuous_in_a2() {
        let ctx = Context::new(crate::weyl::DEFAULT_CAP);
        let r =
            verify_upper_ideal(&ctx, IntervalProperty::KlNontrivial, &["A2".into()], &[]).unwrap();
        assert!(r.passed());
        assert_eq!(r.counts["intervals-with-property"], 0);
    }

    #[test]
    fn smoothness_small_n() {
        let ctx = Context::new(crate::weyl::DEFAULT_CAP);
        let r = verify_type_a_smoothness(&ctx, 3).unwrap();
        assert!(r.passed());
        assert_eq!((r.counts["smooth"], r.counts["avoiders"]), (6, 6));
        assert!(verify_type_a_smoothness(&ctx, 7).is_err());
    }
}
