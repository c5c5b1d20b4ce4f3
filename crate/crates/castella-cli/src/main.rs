//! Batch front end: parse element expressions, run one query, print the
//! answer as plain text or as one stable JSON object.
//!
//! Exit codes: 0 on success, 1 on domain errors (parse failures, not
//! divisible, not castlable when a result is demanded), 2 when an
//! enumeration cap is exceeded. `CASTELLA_NODE_CAP` overrides the caps.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use castella::arith::DivisorCache;
use castella::castle::{castle_words_traced, free_castle, strong_castle, weak_castle, CastlePair};
use castella::complexity::{tau0_estimate, Tau0Estimate};
use castella::error::Error;
use castella::instances::{
    folner_ratio, parse_natural, AbelianElement, FreeAbelianMonoid, MonoidInstance,
    ThompsonMonoid, UvElement, UvMonoid,
};
use castella::word::{max_word, min_word, Element, Word, DEFAULT_NODE_CAP};
use castella::{
    big_omega, big_omega_co, divides, enumerate_words, gfc_decompose, is_fully_castlable, lambda,
    lambda_co, lcm, mu, omega, omega_co, parse_element, pdm, pdm_co, PrimeMultiset,
};

#[derive(Parser)]
#[command(
    name = "castella",
    version,
    about = "Non-commutative arithmetic on Thompson's monoid and sibling monoids"
)]
struct Cli {
    /// Emit one machine-readable JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Monoid instance: thompson (default), abelian[:<k>], or uv2
    #[arg(long, global = true)]
    monoid: Option<String>,

    /// Node cap for enumerations (also CASTELLA_NODE_CAP)
    #[arg(long, global = true)]
    cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CastleMode {
    Weak,
    Strong,
    Free,
}

#[derive(Subcommand)]
enum Command {
    /// Normal form of an element expression
    Normalize { expr: String },
    /// All words of an element
    Words { expr: String },
    /// Minimum word of an element
    Minword { expr: String },
    /// Maximum word (the normal form) of an element
    Maxword { expr: String },
    /// All divisors, sorted by (ind, lexicographic normal form)
    Divisors { expr: String },
    /// All co-divisors, same ordering
    Codivisors { expr: String },
    /// Does the first element divide the second?
    Divides { divisor: String, of: String },
    /// Greatest common divisor
    Gcd {
        #[arg(required = true, num_args = 1..)]
        exprs: Vec<String>,
    },
    /// Least common right multiple
    Lcm {
        #[arg(required = true, num_args = 1..)]
        exprs: Vec<String>,
    },
    /// Least common co-multiple of the given co-divisors, up to the bound
    Lcmco {
        bound: String,
        #[arg(required = true, num_args = 1..)]
        exprs: Vec<String>,
    },
    /// Greatest common co-divisor of the given co-divisors, up to the bound
    Gcdco {
        bound: String,
        #[arg(required = true, num_args = 1..)]
        exprs: Vec<String>,
    },
    /// Castle an ordered pair of elements
    Castle {
        #[arg(long, value_enum)]
        mode: CastleMode,
        left: String,
        right: String,
    },
    /// Prime divisors with multiplicity
    Pdm { expr: String },
    /// Prime co-divisors with multiplicity
    Pdmco { expr: String },
    /// Divisor count
    Tau { expr: String },
    /// Number of distinct prime divisors (--co for co-divisors)
    Omega {
        expr: String,
        #[arg(long)]
        co: bool,
    },
    /// Number of prime divisors with multiplicity (--co for co-divisors)
    Bigomega {
        expr: String,
        #[arg(long)]
        co: bool,
    },
    /// Moebius function
    Mu { expr: String },
    /// Liouville function (--co for the co-divisor variant)
    Lambda {
        expr: String,
        #[arg(long)]
        co: bool,
    },
    /// Is the element fully castlable?
    Fully { expr: String },
    /// Greatest-fully-castlable-divisor decomposition
    Gfc { expr: String },
    /// Finite-n estimate of the divisor growth rate tau_0
    Tau0 {
        expr: String,
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: u32,
    },
    /// Exact boundary ratio of the k-generator exponent grid at scale n
    Folner { k: u32, i: u32, n: u32 },
    /// Render, tau, and divisor pairs of an element in the selected monoid
    Instance { expr: String },
}

#[derive(Serialize)]
struct Output {
    command: String,
    input: Vec<String>,
    result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    trace: Option<Vec<[[u32; 2]; 2]>>,
}

enum Monoid {
    Thompson,
    Abelian(Option<u32>),
    Uv2,
}

fn parse_monoid(selector: Option<&str>) -> Result<Monoid, Error> {
    match selector {
        None | Some("thompson") => Ok(Monoid::Thompson),
        Some("uv2") => Ok(Monoid::Uv2),
        Some("abelian") => Ok(Monoid::Abelian(None)),
        Some(s) if s.starts_with("abelian:") => {
            let k = s["abelian:".len()..]
                .parse::<u32>()
                .map_err(|_| Error::InvalidArgument(format!("bad generator count in {s:?}")))?;
            Ok(Monoid::Abelian(Some(k)))
        }
        Some(other) => Err(Error::InvalidArgument(format!(
            "unknown monoid {other:?}; expected thompson, abelian[:<k>], or uv2"
        ))),
    }
}

fn node_cap(cli: &Cli) -> usize {
    cli.cap
        .or_else(|| {
            std::env::var("CASTELLA_NODE_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_NODE_CAP)
}

fn render_word(w: &Word) -> String {
    w.to_string()
}

fn multiset_value(m: &PrimeMultiset) -> Value {
    Value::Array(
        m.iter()
            .map(|(p, k)| json!([p, k]))
            .collect::<Vec<Value>>(),
    )
}

fn multiset_text(m: &PrimeMultiset) -> String {
    m.to_string()
}

fn parse_uv(input: &str) -> Result<UvElement, Error> {
    let s = input.trim();
    if s == "1" {
        return Ok(UvElement::one());
    }
    let bytes = s.as_bytes();
    let mut pos = 0usize;
    let mut u_pow: u64 = 0;
    let mut v_pow: u64 = 0;
    let mut seen_v = false;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*' {
            pos += 1;
            continue;
        }
        let letter = bytes[pos];
        if letter != b'U' && letter != b'V' {
            return Err(Error::Parse {
                offset: pos,
                message: "expected U or V".into(),
            });
        }
        if letter == b'U' && seen_v {
            return Err(Error::Parse {
                offset: pos,
                message: "elements of this monoid are written U^m V^n".into(),
            });
        }
        pos += 1;
        let mut exp: u64 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let start = pos;
            exp = 0;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                exp = exp
                    .checked_mul(10)
                    .and_then(|e| e.checked_add(u64::from(bytes[pos] - b'0')))
                    .ok_or(Error::Overflow)?;
                pos += 1;
            }
            if pos == start {
                return Err(Error::Parse {
                    offset: start,
                    message: "expected digits after ^".into(),
                });
            }
        }
        if letter == b'U' {
            u_pow += exp;
        } else {
            seen_v = true;
            v_pow = v_pow.checked_add(exp).ok_or(Error::Overflow)?;
        }
    }
    if u_pow > u64::from(u32::MAX) {
        return Err(Error::Overflow);
    }
    Ok(UvElement::new(u_pow as u32, v_pow))
}

fn run(cli: &Cli) -> Result<(String, Output), Error> {
    let cap = node_cap(cli);
    let divs = Arc::new(DivisorCache::with_cap(cap));
    let monoid = parse_monoid(cli.monoid.as_deref())?;

    let requires_thompson = |m: &Monoid| -> Result<(), Error> {
        match m {
            Monoid::Thompson => Ok(()),
            _ => Err(Error::InvalidArgument(
                "this query is only meaningful for --monoid thompson".into(),
            )),
        }
    };

    let out = |command: &str, input: Vec<String>, text: String, result: Value| {
        (
            text,
            Output {
                command: command.into(),
                input,
                result,
                trace: None,
            },
        )
    };

    match &cli.command {
        Command::Normalize { expr } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            Ok(out(
                "normalize",
                vec![expr.clone()],
                e.to_string(),
                Value::String(e.to_string()),
            ))
        }
        Command::Words { expr } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let words = enumerate_words(&e, cap)?;
            let rendered: Vec<String> = words.iter().map(render_word).collect();
            Ok(out(
                "words",
                vec![expr.clone()],
                rendered.join("\n"),
                Value::Array(rendered.iter().cloned().map(Value::String).collect()),
            ))
        }
        Command::Minword { expr } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let w = render_word(&min_word(&e));
            Ok(out("minword", vec![expr.clone()], w.clone(), Value::String(w)))
        }
        Command::Maxword { expr } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let w = render_word(&max_word(&e));
            Ok(out("maxword", vec![expr.clone()], w.clone(), Value::String(w)))
        }
        Command::Divisors { expr } => match &monoid {
            Monoid::Thompson => {
                let e = parse_element(expr)?;
                let ds = divs.divisors(&e)?;
                let rendered: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
                Ok(out(
                    "divisors",
                    vec![expr.clone()],
                    rendered.join("\n"),
                    Value::Array(rendered.iter().cloned().map(Value::String).collect()),
                ))
            }
            Monoid::Abelian(k) => {
                let n = parse_abelian_arg(expr, *k)?;
                let mut ds = n.divisors();
                match k {
                    // the natural-number model sorts by integer value
                    None => ds.sort_by_key(|d| {
                        d.exponents()
                            .iter()
                            .fold(1u128, |acc, (&p, &e)| acc * u128::from(p).pow(e))
                    }),
                    Some(_) => ds.sort_by_key(|d| (d.ind(), d.clone())),
                }
                let m = abelian_ctx(*k);
                let rendered: Vec<String> = ds.iter().map(|d| m.render(d)).collect();
                Ok(out(
                    "divisors",
                    vec![expr.clone()],
                    rendered.join("\n"),
                    Value::Array(rendered.iter().cloned().map(Value::String).collect()),
                ))
            }
            Monoid::Uv2 => Err(Error::InvalidArgument(
                "divisors for uv2 is exposed via the instance command".into(),
            )),
        },
        Command::Codivisors { expr } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let ds = divs.co_divisors(&e)?;
            let rendered: Vec<String> = ds.iter().map(|d| d.to_string()).collect();
            Ok(out(
                "codivisors",
                vec![expr.clone()],
                rendered.join("\n"),
                Value::Array(rendered.iter().cloned().map(Value::String).collect()),
            ))
        }
        Command::Divides { divisor, of } => {
            requires_thompson(&monoid)?;
            let d = parse_element(divisor)?;
            let u = parse_element(of)?;
            let answer = divides(&d, &u);
            Ok(out(
                "divides",
                vec![divisor.clone(), of.clone()],
                answer.to_string(),
                Value::Bool(answer),
            ))
        }
        Command::Gcd { exprs } => match &monoid {
            Monoid::Thompson => {
                let items = parse_all(exprs)?;
                let g = divs.gcd(&items)?;
                Ok(out(
                    "gcd",
                    exprs.clone(),
                    g.to_string(),
                    Value::String(g.to_string()),
                ))
            }
            Monoid::Abelian(k) => {
                let items: Vec<_> = exprs
                    .iter()
                    .map(|e| parse_abelian_arg(e, *k))
                    .collect::<Result<_, _>>()?;
                let g = items[1..]
                    .iter()
                    .fold(items[0].clone(), |acc, x| acc.gcd(x));
                let m = abelian_ctx(*k);
                Ok(out(
                    "gcd",
                    exprs.clone(),
                    m.render(&g),
                    Value::String(m.render(&g)),
                ))
            }
            Monoid::Uv2 => Err(Error::InvalidArgument(
                "gcd is not exposed for uv2".into(),
            )),
        },
        Command::Lcm { exprs } => match &monoid {
            Monoid::Thompson => {
                let items = parse_all(exprs)?;
                let l = lcm(&items);
                Ok(out(
                    "lcm",
                    exprs.clone(),
                    l.to_string(),
                    Value::String(l.to_string()),
                ))
            }
            Monoid::Abelian(k) => {
                let items: Vec<_> = exprs
                    .iter()
                    .map(|e| parse_abelian_arg(e, *k))
                    .collect::<Result<_, _>>()?;
                let l = items[1..]
                    .iter()
                    .fold(items[0].clone(), |acc, x| acc.lcm(x));
                let m = abelian_ctx(*k);
                Ok(out(
                    "lcm",
                    exprs.clone(),
                    m.render(&l),
                    Value::String(m.render(&l)),
                ))
            }
            Monoid::Uv2 => Err(Error::InvalidArgument(
                "lcm is not exposed for uv2".into(),
            )),
        },
        Command::Lcmco { bound, exprs } => {
            requires_thompson(&monoid)?;
            let w = parse_element(bound)?;
            let items = parse_all(exprs)?;
            let l = divs.lcm_co(&w, &items)?;
            let mut input = vec![bound.clone()];
            input.extend(exprs.clone());
            Ok(out("lcmco", input, l.to_string(), Value::String(l.to_string())))
        }
        Command::Gcdco { bound, exprs } => {
            requires_thompson(&monoid)?;
            let w = parse_element(bound)?;
            let items = parse_all(exprs)?;
            let g = divs.gcd_co(&w, &items)?;
            let mut input = vec![bound.clone()];
            input.extend(exprs.clone());
            Ok(out("gcdco", input, g.to_string(), Value::String(g.to_string())))
        }
        Command::Castle { mode, left, right } => {
            requires_thompson(&monoid)?;
            let u = parse_element(left)?;
            let v = parse_element(right)?;
            let pair: Option<CastlePair> = match mode {
                CastleMode::Weak => weak_castle(&u, &v),
                CastleMode::Strong => strong_castle(&u, &v),
                CastleMode::Free => free_castle(&u, &v),
            };
            let pair = pair.ok_or_else(|| {
                Error::InvalidArgument(format!(
                    "({u}, {v}) is not {} castlable",
                    match mode {
                        CastleMode::Weak => "weakly",
                        CastleMode::Strong => "strongly",
                        CastleMode::Free => "freely",
                    }
                ))
            })?;
            // trace the letter steps of the defining word castling
            let (uw, vw) = match mode {
                CastleMode::Strong => (max_word(&u), min_word(&v)),
                _ => (max_word(&u), max_word(&v)),
            };
            let trace = castle_words_traced(&uw, &vw).map(|(_, _, steps)| {
                steps
                    .iter()
                    .map(|s| {
                        [
                            [s.before.0, s.before.1],
                            [s.after.0, s.after.1],
                        ]
                    })
                    .collect::<Vec<_>>()
            });
            let text = format!("\u{1e7d} = {}\n\u{169} = {}", pair.left, pair.right);
            Ok((
                text,
                Output {
                    command: "castle".into(),
                    input: vec![left.clone(), right.clone()],
                    result: json!({
                        "left": pair.left.to_string(),
                        "right": pair.right.to_string(),
                    }),
                    trace,
                },
            ))
        }
        Command::Pdm { expr } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let m = pdm(&e);
            Ok(out(
                "pdm",
                vec![expr.clone()],
                multiset_text(&m),
                multiset_value(&m),
            ))
        }
        Command::Pdmco { expr } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let m = pdm_co(&e);
            Ok(out(
                "pdmco",
                vec![expr.clone()],
                multiset_text(&m),
                multiset_value(&m),
            ))
        }
        Command::Tau { expr } => {
            let t = match &monoid {
                Monoid::Thompson => divs.tau(&parse_element(expr)?)?,
                Monoid::Abelian(k) => parse_abelian_arg(expr, *k)?.tau(),
                Monoid::Uv2 => UvMonoid.tau(&parse_uv(expr)?)?,
            };
            Ok(out(
                "tau",
                vec![expr.clone()],
                t.to_string(),
                Value::from(t),
            ))
        }
        Command::Omega { expr, co } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let t = if *co { omega_co(&e) } else { omega(&e) };
            Ok(out(
                if *co { "omega_co" } else { "omega" },
                vec![expr.clone()],
                t.to_string(),
                Value::from(t),
            ))
        }
        Command::Bigomega { expr, co } => {
            requires_thompson(&monoid)?;
            let e = parse_element(expr)?;
            let t = if *co { big_omega_co(&e) } else { big_omega(&e) };
            Ok(out(
                if *co { "bigomega_co" } else { "bigomega" },
                vec![expr.clone()],
                t.to_string(),
                Value::from(t),
            ))
        }
        Command::Mu { expr } => {
            let t = match &monoid {
                Monoid::Thompson => mu(&parse_element(expr)?),
                Monoid::Abelian(k) => parse_abelian_arg(expr, *k)?.mu(),
                Monoid::Uv2 => {
                    return Err(Error::InvalidArgument("mu is not exposed for uv2".into()))
                }
            };
            Ok(out("mu", vec![expr.clone()], t.to_string(), Value::from(t)))
        }
        Command::Lambda { expr, co } => {
            let t = match &monoid {
                Monoid::Thompson => {
                    let e = parse_element(expr)?;
                    if *co {
                        lambda_co(&e)
                    } else {
                        lambda(&e)
                    }
                }
                Monoid::Abelian(k) => parse_abelian_arg(expr, *k)?.lambda(),
                Monoid::Uv2 => {
                    return Err(Error::InvalidArgument(
                        "lambda is not exposed for uv2".into(),
                    ))
                }
            };
            let name = if *co { "lambda_co" } else { "lambda" };
            Ok(out(name, vec![expr.clone()], t.to_string(), Value::from(t)))
        }
        Command::Fully { expr } => {
            requires_thompson(&monoid)?;
            let answer = is_fully_castlable(&parse_element(expr)?);
            Ok(out(
                "fully",
                vec![expr.clone()],
                answer.to_string(),
                Value::Bool(answer),
            ))
        }
        Command::Gfc { expr } => {
            requires_thompson(&monoid)?;
            let parts = gfc_decompose(&parse_element(expr)?);
            let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
            Ok(out(
                "gfc",
                vec![expr.clone()],
                rendered.join("\n"),
                Value::Array(rendered.iter().cloned().map(Value::String).collect()),
            ))
        }
        Command::Tau0 { expr, max_n } => {
            requires_thompson(&monoid)?;
            if *max_n < 1 {
                return Err(Error::InvalidArgument("--max-n must be at least 1".into()));
            }
            let e = parse_element(expr)?;
            let estimate: Tau0Estimate = tau0_estimate(&divs, &e, *max_n)?;
            let c = estimate.final_estimate / divs.tau(&e)? as f64;
            let mut lines = vec![format!("{:>3} {:>12} {:>16}", "n", "tau(u^n)", "root")];
            for s in &estimate.samples {
                lines.push(format!(
                    "{:>3} {:>12} {:>16}",
                    s.n,
                    s.tau,
                    sig12(s.nth_root)
                ));
            }
            lines.push(format!("tau_0 estimate: {}", sig12(estimate.final_estimate)));
            lines.push(format!("C estimate: {}", sig12(c)));
            let samples: Vec<Value> = estimate
                .samples
                .iter()
                .map(|s| {
                    json!({
                        "n": s.n,
                        "tau": s.tau,
                        "nth_root": s.nth_root,
                        "lower_bound": s.lower_bound,
                        "upper_bound": s.upper_bound,
                    })
                })
                .collect();
            Ok(out(
                "tau0",
                vec![expr.clone(), max_n.to_string()],
                lines.join("\n"),
                json!({
                    "samples": samples,
                    "final_estimate": estimate.final_estimate,
                    "c_estimate": c,
                }),
            ))
        }
        Command::Folner { k, i, n } => {
            let ratio = folner_ratio(*k, *i, *n, cap)?;
            let text = ratio.to_string();
            Ok(out(
                "folner",
                vec![k.to_string(), i.to_string(), n.to_string()],
                text.clone(),
                Value::String(text),
            ))
        }
        Command::Instance { expr } => {
            let (rendered, tau, pairs): (String, u64, Vec<(String, String)>) = match &monoid {
                Monoid::Thompson => {
                    let m = ThompsonMonoid::new(divs.clone());
                    let e = parse_element(expr)?;
                    let pairs = m
                        .divisor_pairs(&e)?
                        .into_iter()
                        .map(|(a, b)| (m.render(&a), m.render(&b)))
                        .collect::<Vec<_>>();
                    (m.render(&e), pairs.len() as u64, pairs)
                }
                Monoid::Abelian(k) => {
                    let m = abelian_ctx(*k);
                    let e = parse_abelian_arg(expr, *k)?;
                    let pairs = m
                        .divisor_pairs(&e)?
                        .into_iter()
                        .map(|(a, b)| (m.render(&a), m.render(&b)))
                        .collect::<Vec<_>>();
                    (m.render(&e), pairs.len() as u64, pairs)
                }
                Monoid::Uv2 => {
                    let m = UvMonoid;
                    let e = parse_uv(expr)?;
                    let pairs = m
                        .divisor_pairs(&e)?
                        .into_iter()
                        .map(|(a, b)| (m.render(&a), m.render(&b)))
                        .collect::<Vec<_>>();
                    (m.render(&e), pairs.len() as u64, pairs)
                }
            };
            let mut lines = vec![format!("element: {rendered}"), format!("tau: {tau}")];
            for (a, b) in &pairs {
                lines.push(format!("({a}, {b})"));
            }
            Ok(out(
                "instance",
                vec![expr.clone()],
                lines.join("\n"),
                json!({
                    "element": rendered,
                    "tau": tau,
                    "divisor_pairs": pairs
                        .iter()
                        .map(|(a, b)| json!([a, b]))
                        .collect::<Vec<Value>>(),
                }),
            ))
        }
    }
}

fn parse_all(exprs: &[String]) -> Result<Vec<Element>, Error> {
    exprs.iter().map(|e| parse_element(e)).collect()
}

fn abelian_ctx(k: Option<u32>) -> FreeAbelianMonoid {
    match k {
        Some(k) => FreeAbelianMonoid::with_generators(k),
        None => FreeAbelianMonoid::naturals(),
    }
}

/// `abelian` reads positive integers; `abelian:<k>` reads generator words
/// `x0^2 x1` over generators `x0 .. x{k-1}`.
fn parse_abelian_arg(expr: &str, k: Option<u32>) -> Result<AbelianElement, Error> {
    match k {
        Some(k) => parse_abelian_vector(expr, k),
        None => parse_natural_arg(expr),
    }
}

fn parse_natural_arg(expr: &str) -> Result<AbelianElement, Error> {
    let n: u64 = expr.trim().parse().map_err(|_| Error::Parse {
        offset: 0,
        message: format!("expected a positive integer, got {expr:?}"),
    })?;
    parse_natural(n)
}

fn parse_abelian_vector(input: &str, k: u32) -> Result<AbelianElement, Error> {
    let s = input.trim();
    if s == "1" {
        return Ok(AbelianElement::one());
    }
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let mut pairs: Vec<(u64, u32)> = Vec::new();
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() || bytes[pos] == b'*' {
            pos += 1;
            continue;
        }
        if bytes[pos] != b'x' {
            return Err(Error::Parse {
                offset: pos,
                message: "expected a term of the form x<digits>".into(),
            });
        }
        pos += 1;
        let start = pos;
        let mut id: u64 = 0;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            id = id * 10 + u64::from(bytes[pos] - b'0');
            pos += 1;
        }
        if pos == start {
            return Err(Error::Parse {
                offset: start,
                message: "expected digits for the generator index".into(),
            });
        }
        if id >= u64::from(k) {
            return Err(Error::InvalidArgument(format!(
                "generator x{id} out of range for {k} generators"
            )));
        }
        let mut exp: u32 = 1;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let at = pos;
            let mut value: u64 = 0;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                value = value * 10 + u64::from(bytes[pos] - b'0');
                if value > u64::from(u32::MAX) {
                    return Err(Error::Parse {
                        offset: at,
                        message: "exponent is out of range".into(),
                    });
                }
                pos += 1;
            }
            if pos == at {
                return Err(Error::Parse {
                    offset: at,
                    message: "expected digits after ^".into(),
                });
            }
            if value == 0 {
                return Err(Error::ExponentZero { offset: at });
            }
            exp = value as u32;
        }
        pairs.push((id, exp));
    }
    if pairs.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "expected an element".into(),
        });
    }
    Ok(AbelianElement::from_exponents(&pairs))
}

/// 12 significant digits.
fn sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::CapExceeded { .. } | Error::Overflow => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's default exit code is reserved for resource errors here
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok((text, output)) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string(&output).expect("output serializes")
                );
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
