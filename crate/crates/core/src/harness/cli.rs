//! Command-line front end.
//!
//! Exit codes: 0 for success or a true answer, 1 for a false answer (an
//! element that does not avoid, a failed verification, incomparable
//! elements), 2 for usage and input errors, 3 for internal invariant
//! violations.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::patterns::{flatten, interval_pattern_avoids_with, pattern_avoids_with};
use crate::roots::RootSystem;
use crate::weyl::notation::{one_line, parse_element, word_string};
use crate::weyl::{bruhat_leq, interval, WeylElement, DEFAULT_CAP};

use super::config::MatrixConfig;
use super::context::Context;
use super::report::VerificationReport;
use super::suites::{self, IntervalProperty};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "weylpat",
    version,
    about = "Pattern and interval pattern avoidance in Weyl groups"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Largest group (and candidate-subsystem count) to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP, global = true)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the roots of a root system.
    Roots { cartan_type: String },
    /// List all elements of the Weyl group.
    Enumerate { cartan_type: String },
    /// Compare two elements in Bruhat order and print the interval.
    Bruhat {
        cartan_type: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Kazhdan–Lusztig polynomial P_{u,v}.
    Kl {
        cartan_type: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// List the subsystem embeddings of SRC into DST.
    Embeddings { source: String, target: String },
    /// Flatten W through the K-th embedding of SRC into DST.
    Flatten {
        source: String,
        target: String,
        #[arg(long)]
        embedding: usize,
        #[arg(long)]
        w: String,
    },
    /// Ordinary pattern avoidance; the pattern is written "SRC:V".
    Avoids {
        cartan_type: String,
        #[arg(long)]
        w: String,
        #[arg(long)]
        pattern: String,
    },
    /// Interval pattern avoidance; the interval is written "SRC:U..V".
    IntervalAvoids {
        cartan_type: String,
        #[arg(long)]
        w: String,
        #[arg(long, alias = "pattern")]
        interval: String,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand, Debug)]
enum Suite {
    Flatten {
        source: String,
        target: String,
    },
    XDetermination {
        source: String,
        target: String,
    },
    LengthSufficiency {
        source: String,
        target: String,
    },
    KlTransfer {
        source: String,
        target: String,
    },
    UpperIdeal {
        /// kl-nontrivial or kl-coeff:K:C
        #[arg(long)]
        property: String,
        /// Comma-separated groups checked under base-point moves.
        #[arg(long, value_delimiter = ',', required = true)]
        types: Vec<String>,
        /// Embedding pair "SRC:DST"; repeatable. Defaults to every ordered
        /// pair of the listed types.
        #[arg(long = "pair")]
        pairs: Vec<String>,
    },
    TypeASmoothness {
        n: usize,
    },
    /// Every suite over a verification matrix.
    Matrix {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Include the slow tier of the matrix.
        #[arg(long)]
        slow: bool,
    },
}

struct Outcome {
    command: &'static str,
    inputs: Value,
    result: Value,
    cases: u64,
    failures: Vec<String>,
    text: String,
    exit: i32,
}

impl Outcome {
    fn new(command: &'static str, inputs: Value, result: Value, text: String) -> Self {
        Outcome {
            command,
            inputs,
            result,
            cases: 1,
            failures: Vec::new(),
            text,
            exit: EXIT_OK,
        }
    }

    fn answer(mut self, truth: bool) -> Self {
        self.exit = if truth { EXIT_OK } else { EXIT_FALSE };
        self
    }
}

fn element_json(w: &WeylElement) -> Value {
    json!({ "word": word_string(w), "one_line": one_line(w) })
}

fn element_text(w: &WeylElement) -> String {
    match one_line(w) {
        Some(p) => format!("{} ({p})", word_string(w)),
        None => word_string(w),
    }
}

fn split_typed(input: &str) -> Result<(&str, &str)> {
    input
        .split_once(':')
        .ok_or_else(|| Error::parse("TYPE:element", input))
}

fn root_line(rs: &RootSystem, k: usize) -> String {
    format!(
        "{k:>4}  {:<24} coefficients {:?}  height {}",
        rs.root(k).to_string(),
        rs.coefficients(k),
        rs.height(k)
    )
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    let format = cli.format;
    match execute(cli) {
        Ok(outcome) => {
            let _ = match format {
                Format::Text => writeln!(out, "{}", outcome.text.trim_end()),
                Format::Json => {
                    let doc = json!({
                        "command": outcome.command,
                        "inputs": outcome.inputs,
                        "result": outcome.result,
                        "cases": outcome.cases,
                        "failures": outcome.failures,
                    });
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).unwrap())
                }
            };
            outcome.exit
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::InvariantViolation(_) => EXIT_INTERNAL,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn execute(cli: Cli) -> Result<Outcome> {
    let ctx = Context::new(cli.cap);
    match cli.command {
        Command::Roots { cartan_type } => {
            let rs = crate::roots::build_root_system(&cartan_type)?;
            let mut text = format!(
                "{}: rank {}, {} roots ({} positive), ambient dimension {}\ncartan matrix:\n",
                rs.cartan_type(),
                rs.rank(),
                rs.num_roots(),
                rs.num_positive(),
                rs.ambient_dim()
            );
            for row in rs.cartan_matrix() {
                text.push_str(&format!("  {row:?}\n"));
            }
            for k in 0..rs.num_roots() {
                text.push_str(&root_line(&rs, k));
                text.push('\n');
            }
            let roots: Vec<Value> = (0..rs.num_roots())
                .map(|k| {
                    json!({
                        "index": k,
                        "coords": rs.root(k).coords().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "coefficients": rs.coefficients(k),
                        "positive": rs.is_positive(k),
                    })
                })
                .collect();
            let mut o = Outcome::new(
                "roots",
                json!({ "type": rs.cartan_type().to_string() }),
                json!({ "rank": rs.rank(), "cartan_matrix": rs.cartan_matrix(), "roots": roots }),
                text,
            );
            o.cases = rs.num_roots() as u64;
            Ok(o)
        }
        Command::Enumerate { cartan_type } => {
            let g = ctx.group(&cartan_type)?;
            let mut text = format!(
                "W({}) has {} elements\n",
                g.root_system().cartan_type(),
                g.order()
            );
            for w in g.elements() {
                text.push_str(&format!("{:>3}  {}\n", w.length(), element_text(w)));
            }
            let elements: Vec<Value> = g.elements().iter().map(element_json).collect();
            let mut o = Outcome::new(
                "enumerate",
                json!({ "type": g.root_system().cartan_type().to_string() }),
                json!({ "order": g.order(), "elements": elements }),
                text,
            );
            o.cases = g.order() as u64;
            Ok(o)
        }
        Command::Bruhat { cartan_type, u, v } => {
            let rs = ctx.group(&cartan_type)?.root_system().clone();
            let (u, v) = (parse_element(&rs, &u)?, parse_element(&rs, &v)?);
            let inputs = json!({ "type": rs.cartan_type().to_string(), "u": element_json(&u), "v": element_json(&v) });
            if !bruhat_leq(&u, &v)? {
                let text = format!("{} is not below {}", element_text(&u), element_text(&v));
                return Ok(
                    Outcome::new("bruhat", inputs, json!({ "leq": false }), text).answer(false),
                );
            }
            let iv = interval(&u, &v)?;
            let mut text = format!(
                "[{}, {}]: {} elements, rank {}\n",
                element_text(&u),
                element_text(&v),
                iv.len(),
                iv.rank()
            );
            let mut members = Vec::new();
            for (k, z) in iv.elements().iter().enumerate() {
                let covers: Vec<usize> = iv.lower_covers(k).to_vec();
                text.push_str(&format!(
                    "{k:>4}  rank {}  {}  covers {covers:?}\n",
                    iv.rank_of(k),
                    element_text(z)
                ));
                members.push(json!({ "element": element_json(z), "rank": iv.rank_of(k), "lower_covers": covers }));
            }
            let mut o = Outcome::new(
                "bruhat",
                inputs,
                json!({ "leq": true, "size": iv.len(), "rank": iv.rank(), "elements": members }),
                text,
            );
            o.cases = iv.len() as u64;
            Ok(o)
        }
        Command::Kl { cartan_type, u, v } => {
            let kl = ctx.kl(&cartan_type)?;
            let rs = kl.group().root_system().clone();
            let (u, v) = (parse_element(&rs, &u)?, parse_element(&rs, &v)?);
            let p = kl.kl_polynomial(&u, &v)?;
            Ok(Outcome::new(
                "kl",
                json!({ "type": rs.cartan_type().to_string(), "u": element_json(&u), "v": element_json(&v) }),
                json!({ "polynomial": p.to_string(), "coefficients": p.coefficients() }),
                p.to_string(),
            ))
        }
        Command::Embeddings { source, target } => {
            let list = ctx.embeddings(&source, &target)?;
            let (s, t) = (ctx.group(&source)?, ctx.group(&target)?);
            let trs = t.root_system();
            let mut text = format!(
                "{} embeddings of {} into {}\n",
                list.len(),
                s.root_system().cartan_type(),
                trs.cartan_type()
            );
            let mut rows = Vec::new();
            for (k, i) in list.iter().enumerate() {
                let images: Vec<String> = i
                    .simple_images()
                    .iter()
                    .map(|&r| format!("{:?}", trs.coefficients(r)))
                    .collect();
                text.push_str(&format!("{k:>3}: {}\n", images.join(" ")));
                rows.push(json!({
                    "index": k,
                    "simple_images": i.simple_images(),
                    "simple_image_coefficients": i.simple_images().iter().map(|&r| trs.coefficients(r).to_vec()).collect::<Vec<_>>(),
                }));
            }
            let mut o = Outcome::new(
                "embeddings",
                json!({ "source": source, "target": target }),
                json!({ "count": list.len(), "embeddings": rows }),
                text,
            );
            o.cases = list.len() as u64;
            Ok(o)
        }
        Command::Flatten {
            source,
            target,
            embedding,
            w,
        } => {
            let list = ctx.embeddings(&source, &target)?;
            let i = list.get(embedding).ok_or(Error::IndexOutOfRange {
                index: embedding,
                limit: list.len(),
            })?;
            let w = parse_element(ctx.group(&target)?.root_system(), &w)?;
            let f = flatten(i, &w)?;
            Ok(Outcome::new(
                "flatten",
                json!({ "source": source, "target": target, "embedding": embedding, "w": element_json(&w) }),
                element_json(&f),
                element_text(&f),
            ))
        }
        Command::Avoids {
            cartan_type,
            w,
            pattern,
        } => {
            let (src, v) = split_typed(&pattern)?;
            let target = ctx.group(&cartan_type)?;
            let source = ctx.group(src)?;
            let w = parse_element(target.root_system(), &w)?;
            let v = parse_element(source.root_system(), v)?;
            let list = ctx.embeddings(src, &cartan_type)?;
            let avoids = pattern_avoids_with(&list, &v, &w)?;
            let text = format!(
                "{} {} {}:{}",
                element_text(&w),
                if avoids { "avoids" } else { "contains" },
                source.root_system().cartan_type(),
                element_text(&v)
            );
            let mut o = Outcome::new(
                "avoids",
                json!({ "type": cartan_type, "w": element_json(&w), "pattern": { "type": src, "v": element_json(&v) } }),
                json!({ "avoids": avoids }),
                text,
            );
            o.cases = list.len() as u64;
            Ok(o.answer(avoids))
        }
        Command::IntervalAvoids {
            cartan_type,
            w,
            interval,
        } => {
            let (src, range) = split_typed(&interval)?;
            let (u, v) = range
                .split_once("..")
                .ok_or_else(|| Error::parse("TYPE:U..V", interval.as_str()))?;
            let target = ctx.group(&cartan_type)?;
            let source = ctx.group(src)?;
            let srs: &Arc<RootSystem> = source.root_system();
            let w = parse_element(target.root_system(), &w)?;
            let (u, v) = (parse_element(srs, u)?, parse_element(srs, v)?);
            let list = ctx.embeddings(src, &cartan_type)?;
            let avoids = interval_pattern_avoids_with(&list, &w, &u, &v)?;
            let text = format!(
                "{} {} {}:[{}, {}]",
                element_text(&w),
                if avoids { "avoids" } else { "contains" },
                srs.cartan_type(),
                element_text(&u),
                element_text(&v)
            );
            let mut o = Outcome::new(
                "interval-avoids",
                json!({
                    "type": cartan_type,
                    "w": element_json(&w),
                    "interval": { "type": src, "u": element_json(&u), "v": element_json(&v) },
                }),
                json!({ "avoids": avoids }),
                text,
            );
            o.cases = list.len() as u64;
            Ok(o.answer(avoids))
        }
        Command::Verify { suite } => run_suite(&ctx, suite),
    }
}

fn run_suite(ctx: &Context, suite: Suite) -> Result<Outcome> {
    let reports: Vec<VerificationReport> = match suite {
        Suite::Flatten { source, target } => vec![suites::verify_flatten(ctx, &source, &target)?],
        Suite::XDetermination { source, target } => {
            vec![suites::verify_x_determination(ctx, &source, &target)?]
        }
        Suite::LengthSufficiency { source, target } => {
            vec![suites::verify_length_sufficiency(ctx, &source, &target)?]
        }
        Suite::KlTransfer { source, target } => {
            vec![suites::verify_kl_transfer(ctx, &source, &target)?]
        }
        Suite::UpperIdeal {
            property,
            types,
            pairs,
        } => {
            let property: IntervalProperty = property.parse()?;
            let pairs: Vec<(String, String)> = if pairs.is_empty() {
                types
                    .iter()
                    .flat_map(|s| types.iter().map(move |t| (s.clone(), t.clone())))
                    .collect()
            } else {
                pairs
                    .iter()
                    .map(|p| split_typed(p).map(|(a, b)| (a.to_string(), b.to_string())))
                    .collect::<Result<_>>()?
            };
            vec![suites::verify_upper_ideal(ctx, property, &types, &pairs)?]
        }
        Suite::TypeASmoothness { n } => vec![suites::verify_type_a_smoothness(ctx, n)?],
        Suite::Matrix { config, slow } => {
            let cfg = match config {
                Some(path) => MatrixConfig::load(&path)?,
                None => MatrixConfig::default_matrix(),
            };
            run_matrix(&cfg, slow)?
        }
    };
    let passed = reports.iter().all(VerificationReport::passed);
    let mut text = String::new();
    for r in &reports {
        text.push_str(&format!(
            "{} {}\n",
            if r.passed() { "PASS" } else { "FAIL" },
            r.summary()
        ));
        for f in &r.failures {
            text.push_str(&format!("    {f}\n"));
        }
    }
    let mut o = Outcome::new(
        "verify",
        json!({ "suites": reports.iter().map(|r| json!({ "suite": r.suite, "parameters": r.parameters })).collect::<Vec<_>>() }),
        json!({ "passed": passed, "reports": reports }),
        text,
    );
    o.cases = reports.iter().map(|r| r.cases).sum();
    o.failures = reports
        .iter()
        .flat_map(|r| r.failures.iter().cloned())
        .collect();
    Ok(o.answer(passed))
}

/// Runs every suite over the matrix described by `cfg`.
pub fn run_matrix(cfg: &MatrixConfig, slow: bool) -> Result<Vec<VerificationReport>> {
    let ctx = Context::new(cfg.cap);
    let mut tiers = vec![cfg.matrix.clone()];
    if slow {
        tiers.extend(cfg.slow.clone());
    }
    let mut reports = Vec::new();
    for tier in &tiers {
        for (s, t) in tier.pairs() {
            reports.push(suites::verify_flatten(&ctx, &s, &t)?);
            reports.push(suites::verify_x_determination(&ctx, &s, &t)?);
            reports.push(suites::verify_length_sufficiency(&ctx, &s, &t)?);
        }
    }
    for (s, t) in &cfg.kl_transfer.pairs {
        reports.push(suites::verify_kl_transfer(&ctx, s, t)?);
    }
    for p in &cfg.upper_ideal.properties {
        let property: IntervalProperty = p.parse()?;
        reports.push(suites::verify_upper_ideal(
            &ctx,
            property,
            &cfg.matrix.types(),
            &cfg.matrix.pairs(),
        )?);
    }
    for &n in &cfg.smoothness.n {
        reports.push(suites::verify_type_a_smoothness(&ctx, n)?);
    }
    Ok(reports)
}
