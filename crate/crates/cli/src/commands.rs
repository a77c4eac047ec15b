//! Subcommand implementations.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use ola_core::{
    annihilator_of_integrable, block_label, degree, fin_up_set, is_b_dominant, leq_fin, order::leq_fin_cert,
    weight_from_label, Coefficient, Composition, Config, Engine, Error, KlPolynomial, LieFlavor, Partition,
    Permutation, Rational, RationalWeight, Result,
};
use ola_oracle::acceptance::{self, Status};
use serde::Serialize;
use serde_json::{json, Value};

use crate::{Cli, Command};

pub struct Output {
    pub document: Value,
    pub code: u8,
}

fn weight(flavor: LieFlavor, text: &str) -> Result<RationalWeight> {
    RationalWeight::parse(flavor, text)
}

fn count(n: &BigUint) -> Value {
    n.to_u64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

fn rational(q: &Rational) -> Value {
    q.as_i64().filter(|_| q.is_integral()).map_or_else(|| Value::String(q.to_string()), Value::from)
}

fn poly(p: &KlPolynomial) -> Value {
    Value::Array(
        p.coeffs().iter().map(|c| c.to_i64().map_or_else(|| Value::String(c.to_string()), Value::from)).collect(),
    )
}

fn to_json<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn weights(ws: &[RationalWeight]) -> Value {
    Value::Array(ws.iter().map(|w| Value::String(w.to_string())).collect())
}

fn parse_usizes(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad window list `{text}`"))))
        .collect()
}

/// `"a,b,c;d,e"` into integer factors.
fn parse_factors(text: &str) -> Result<Vec<Vec<i64>>> {
    text.split(';')
        .map(|f| {
            let f = f.trim();
            if f.is_empty() {
                return Ok(Vec::new());
            }
            f.split(',')
                .map(|s| s.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad integer `{s}` in `{text}`"))))
                .collect()
        })
        .collect()
}

fn parse_rationals(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| Rational::parse_coefficient(s.trim()).ok_or_else(|| Error::Parse(format!("bad number `{s}`"))))
        .collect()
}

pub fn run(cli: &Cli) -> Result<Output> {
    let engine = Engine::new(Config {
        max_window: cli.max_window,
        cache_limit: cli.cache_limit,
        max_search_states: cli.max_states,
    });
    let e = &engine;
    let mut extra = serde_json::Map::new();
    let mut code = 0;
    let (name, flavor, value) = match &cli.command {
        Command::Kostka { mu, content, oracle } => {
            let shape: Partition = mu.parse()?;
            let content: Composition = content.parse()?;
            let k = e.kostka(&shape, &content);
            if *oracle {
                extra.insert("oracle".into(), json!(ola_oracle::kostka_oracle(&shape, &content)?));
            }
            ("kostka", None, count(&k))
        }
        Command::CCoeff { flavor, k, gamma } => {
            let g = weight(flavor.flavor, gamma)?;
            ("c-coeff", Some(flavor.flavor), count(&e.c_coeff(*k, &g)?))
        }
        Command::Kl { x, w, oracle } => {
            let x: Permutation = x.parse()?;
            let w: Permutation = w.parse()?;
            let p = e.kl_poly(&x, &w)?;
            extra.insert("text".into(), json!(p.to_string()));
            if *oracle {
                extra.insert("oracle".into(), poly(&ola_oracle::kl_oracle(&x, &w)?));
            }
            ("kl", None, poly(&p))
        }
        Command::Verma { lam, mu } => {
            let v = e.finite_verma_mult(&parse_factors(lam)?, &parse_factors(mu)?)?;
            ("verma", None, count(&v))
        }
        Command::StableMult { flavor, lam, mu, extra: more } => {
            let f = flavor.flavor;
            let v = e.stable_mult_in_window(&weight(f, lam)?, &weight(f, mu)?, *more)?;
            ("stable-mult", Some(f), count(&v))
        }
        Command::StandardMult { flavor, lam, nu } => {
            let f = flavor.flavor;
            let (lam, nu) = (weight(f, lam)?, weight(f, nu)?);
            let terms = e.standard_mult_terms(&lam, &nu)?;
            let total: BigUint = terms.iter().map(|t| &t.c * &t.m).sum();
            extra.insert(
                "terms".into(),
                Value::Array(
                    terms
                        .iter()
                        .map(|t| json!({"gamma": t.gamma.to_string(), "c": count(&t.c), "m": count(&t.m)}))
                        .collect(),
                ),
            );
            ("standard-mult", Some(f), count(&total))
        }
        Command::InjFiltration { flavor, mu } => {
            let f = flavor.flavor;
            ("inj-filtration", Some(f), to_json(&e.injective_filtration(&weight(f, mu)?)?))
        }
        Command::Layer { flavor, lam, k, windows } => {
            let f = flavor.flavor;
            let lam = weight(f, lam)?;
            let windows = match windows {
                Some(w) => parse_usizes(w)?,
                None => lam.support_bounds().into_iter().map(|n| n.max(1)).collect(),
            };
            extra.insert("windows".into(), json!(windows));
            ("layer", Some(f), to_json(&e.layer_mults(&lam, *k, &windows)?))
        }
        Command::LeqFin { flavor, mu, lam } => {
            let f = flavor.flavor;
            let (mu, lam) = (weight(f, mu)?, weight(f, lam)?);
            let holds = leq_fin(&mu, &lam)?;
            extra.insert("certificate".into(), to_json(&leq_fin_cert(&mu, &lam)?));
            ("leq-fin", Some(f), json!(holds))
        }
        Command::FinUpSet { flavor, mu } => {
            let f = flavor.flavor;
            ("fin-up-set", Some(f), weights(&fin_up_set(&weight(f, mu)?)))
        }
        Command::LeqInf { flavor, mu, lam, max_depth } => {
            let f = flavor.flavor;
            let r = e.leq_inf(&weight(f, mu)?, &weight(f, lam)?, *max_depth)?;
            extra.insert("certificate".into(), to_json(&r.cert));
            extra.insert("windows".into(), json!(r.windows));
            extra.insert("visited".into(), json!(r.visited));
            ("leq-inf", Some(f), json!(r.holds))
        }
        Command::Interval { flavor, mu, lam, widen } => {
            let f = flavor.flavor;
            let iv = e.inf_interval_widened(&weight(f, mu)?, &weight(f, lam)?, *widen)?;
            ("interval", Some(f), weights(&iv))
        }
        Command::Block { flavor, weight: w } => {
            let f = flavor.flavor;
            ("block", Some(f), to_json(&block_label(&weight(f, w)?)))
        }
        Command::Degree { flavor, weight: w } => {
            let f = flavor.flavor;
            ("degree", Some(f), rational(&degree(&weight(f, w)?)))
        }
        Command::Dominant { flavor, weight: w } => {
            let f = flavor.flavor;
            ("dominant", Some(f), json!(is_b_dominant(&weight(f, w)?)))
        }
        Command::Annihilator { flavor, lam } => {
            let f = flavor.flavor;
            let label = annihilator_of_integrable(&weight(f, lam)?)?;
            extra.insert("text".into(), json!(label.to_string()));
            ("annihilator", Some(f), to_json(&label))
        }
        Command::WeightFromLabel { flavor, x, yl, yr, a } => {
            let f = flavor.flavor;
            if f != LieFlavor::Sl {
                return Err(Error::Precondition("annihilator labels are defined for sl only".into()));
            }
            let w = weight_from_label(*x, &yl.parse()?, &yr.parse()?, &parse_rationals(a)?)?;
            ("weight-from-label", Some(f), json!(w.to_string()))
        }
        Command::Selftest { criterion } => {
            let reports = match criterion {
                Some(id @ 1..=10) => vec![acceptance::run(*id)],
                Some(id) => return Err(Error::Precondition(format!("no criterion {id}; expected 1-10"))),
                None => acceptance::run_all(),
            };
            let tally = |s: Status| reports.iter().filter(|r| r.status == s).count();
            let failed = tally(Status::Fail);
            if failed > 0 {
                code = 4;
            }
            let rows: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "criterion": r.id,
                        "title": r.title,
                        "status": r.status.label(),
                        "checks": r.checked,
                        "detail": r.detail,
                        "elapsed_ms": r.elapsed.as_millis() as u64,
                    })
                })
                .collect();
            let value = json!({
                "passed": tally(Status::Pass),
                "known_defects": tally(Status::KnownDefect),
                "failed": failed,
                "criteria": rows,
            });
            ("selftest", None, value)
        }
    };
    let mut diagnostics = serde_json::Map::new();
    diagnostics.insert("command".into(), json!(name));
    if let Some(f) = flavor {
        diagnostics.insert("flavor".into(), json!(f.to_string()));
    }
    diagnostics.insert("config".into(), to_json(e.config()));
    diagnostics.insert("cache".into(), to_json(&e.stats()));
    let mut document = serde_json::Map::new();
    document.insert("value".into(), value);
    document.extend(extra);
    document.insert("diagnostics".into(), Value::Object(diagnostics));
    Ok(Output { document: Value::Object(document), code })
}
