//! Run reports for single algebras and summaries for property-suite runs
//! over corpora. Every map is ordered and timings are opt-in, so a report is
//! a pure function of input, seed, budgets and version.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};

use crate::aclass::{self, AMethod};
use crate::config::Config;
use crate::decomp;
use crate::error::{Error, Result};
use crate::field::{AnyField, FieldSpec};
use crate::generators;
use crate::lie::AnyAlgebra;
use crate::structure::{self, Strategy};
use crate::verify::{self, Outcome, PropertyReport};
use crate::with_algebra;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub timings: bool,
    pub properties: bool,
}

/// Which family of algorithms a command should use.
pub fn strategy_for(method: AMethod) -> Strategy {
    match method {
        AMethod::Auto => Strategy::Auto,
        AMethod::OraclePairs => Strategy::Oracle,
        AMethod::Structural => Strategy::Structural,
    }
}

fn config_json(cfg: &Config) -> Value {
    json!({
        "seed": cfg.seed,
        "budget": cfg.budget,
        "fault": cfg.fault,
    })
}

/// The full analysis of one algebra.
pub fn run_report(input: Value, alg: &AnyAlgebra, method: AMethod, cfg: &Config, opts: ReportOptions) -> Value {
    let mut timings = BTreeMap::new();
    let mut annotations = Vec::new();
    let mut timed = |name: &str, start: Instant| {
        timings.insert(name.to_string(), start.elapsed().as_secs_f64() * 1e3);
    };
    let body = with_algebra!(alg, |l| {
        let f = l.field();
        let t = Instant::now();
        let cert = aclass::is_a(l, method, cfg);
        timed("a_check", t);
        let known_a = cert.as_ref().ok().map(|c| c.verdict);
        let t = Instant::now();
        let structure = structure::structure_report(l, strategy_for(method), known_a, cfg);
        timed("structure", t);
        let t = Instant::now();
        let td = decomp::triangular_decomposition(l, cfg);
        timed("decomposition", t);
        let cert_json = match &cert {
            Ok(c) => c.to_json(f),
            Err(e) => {
                annotations.push(format!("a_check: {e}"));
                json!({ "verdict": Value::Null, "reason": e.to_string() })
            }
        };
        let td_json = match &td {
            Ok(td) => td.to_json(f),
            Err(e) => json!({ "absent": e.to_string() }),
        };
        let properties = opts.properties.then(|| {
            let t = Instant::now();
            let r = verify::verify_properties(l, cfg);
            timed("properties", t);
            r.to_json()
        });
        let structure_json = structure.to_json(f);
        collect_budget_notes(&structure_json, "structure", &mut annotations);
        json!({
            "structure": structure_json,
            "a_certificate": cert_json,
            "triangular_decomposition": td_json,
            "properties": properties,
        })
    });
    let mut report = json!({
        "tool": { "name": "solvlie", "version": VERSION },
        "input": input,
        "method": method,
        "config": config_json(cfg),
        "annotations": annotations,
    });
    let obj = report.as_object_mut().expect("object");
    for (k, v) in body.as_object().expect("object") {
        if !v.is_null() {
            obj.insert(k.clone(), v.clone());
        }
    }
    if opts.timings {
        obj.insert("timings_ms".into(), json!(timings));
    }
    report
}

/// Records every absent entry that was caused by an exhausted budget.
fn collect_budget_notes(v: &Value, path: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            if let Some(Value::String(r)) = m.get("absent") {
                if r.contains("budget") {
                    out.push(format!("{path}: {r}"));
                }
            }
            for (k, v) in m {
                collect_budget_notes(v, &format!("{path}.{k}"), out);
            }
        }
        Value::Array(a) => {
            for (i, v) in a.iter().enumerate() {
                collect_budget_notes(v, &format!("{path}[{i}]"), out);
            }
        }
        _ => {}
    }
}

/// The triangular decomposition together with the complements chosen
/// while splitting.
pub fn decompose(alg: &AnyAlgebra, cfg: &Config) -> Result<Value> {
    with_algebra!(alg, |l| {
        let f = l.field();
        let td = decomp::triangular_decomposition(l, cfg)?;
        let mut out = td.to_json(f);
        let obj = out.as_object_mut().expect("object");
        obj.insert(
            "complements".into(),
            json!(td.complements.iter().map(|s| s.encode(f)).collect::<Vec<_>>()),
        );
        Ok(out)
    })
}

// ---------------------------------------------------------------------------
// corpora

#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub name: String,
    pub algebra: AnyAlgebra,
}

/// The corpus families the command line can generate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorpusKind {
    /// Iterated extensions by random derivations.
    Random,
    /// Split metabelian algebras with invertible action on `L^2`.
    Invertible,
}

pub fn generate_corpus(kind: CorpusKind, field: &FieldSpec, dim_max: usize, count: usize, seed: u64) -> Result<Vec<CorpusItem>> {
    let any = field.build()?;
    (0..count)
        .map(|i| {
            let s = seed.wrapping_add(i as u64);
            let algebra: AnyAlgebra = match (kind, &any) {
                (CorpusKind::Random, AnyField::Rationals(q)) => {
                    generators::random_solvable(s, dim_max, q.clone())?.into()
                }
                (CorpusKind::Random, AnyField::Finite(g)) => {
                    generators::random_solvable(s, dim_max, g.clone())?.into()
                }
                (CorpusKind::Invertible, AnyField::Finite(g)) => {
                    generators::random_a_candidate(s, g.clone())?.into()
                }
                (CorpusKind::Invertible, _) => {
                    return Err(Error::GenerationFailed("invertible-action corpora need a finite field".into()))
                }
            };
            Ok(CorpusItem {
                name: format!("{}-{}-{s}", kind_name(kind), field.to_string().to_lowercase()),
                algebra,
            })
        })
        .collect()
}

fn kind_name(kind: CorpusKind) -> &'static str {
    match kind {
        CorpusKind::Random => "random",
        CorpusKind::Invertible => "invertible",
    }
}

/// A failing property on one corpus item, with everything needed to replay it.
#[derive(Clone, Debug, Serialize)]
pub struct FailureRecord {
    pub item: String,
    pub property: String,
    pub closed_field_proxy: bool,
    pub witness: Value,
    pub algebra: Value,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct PropertyCounts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusSummary {
    pub items: usize,
    pub counts: BTreeMap<String, PropertyCounts>,
    pub failures: Vec<FailureRecord>,
}

impl CorpusSummary {
    /// Failures of properties that hold over every field.
    pub fn blocking(&self) -> impl Iterator<Item = &FailureRecord> {
        self.failures.iter().filter(|r| !r.closed_field_proxy)
    }

    pub fn is_clean(&self) -> bool {
        self.blocking().next().is_none()
    }

    /// One row per property: `property pass fail n/a skipped`.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("property\tpass\tfail\tnot_applicable\tskipped\n");
        for id in verify::PROPERTIES {
            let c = self.counts.get(*id).cloned().unwrap_or_default();
            let tag = if verify::CLOSED_FIELD_PROPERTIES.contains(id) { " (closed-field proxy)" } else { "" };
            out.push_str(&format!("{id}{tag}\t{}\t{}\t{}\t{}\n", c.pass, c.fail, c.not_applicable, c.skipped));
        }
        out
    }
}

/// Runs the property suite on every item; items run in parallel, each
/// item's pipeline sequentially, results in input order.
pub fn verify_corpus(items: &[CorpusItem], cfg: &Config) -> CorpusSummary {
    let inner = cfg.clone().sequential();
    let reports: Vec<PropertyReport> = cfg
        .exec
        .map(items, |item| with_algebra!(&item.algebra, |l| verify::verify_properties(l, &inner)));
    let mut counts: BTreeMap<String, PropertyCounts> = BTreeMap::new();
    let mut failures = Vec::new();
    for (item, report) in items.iter().zip(&reports) {
        for (id, r) in &report.results {
            let c = counts.entry(id.clone()).or_default();
            match &r.outcome {
                Outcome::Pass => c.pass += 1,
                Outcome::NotApplicable { .. } => c.not_applicable += 1,
                Outcome::Skipped { .. } => c.skipped += 1,
                Outcome::Fail { witness } => {
                    c.fail += 1;
                    failures.push(FailureRecord {
                        item: item.name.clone(),
                        property: id.clone(),
                        closed_field_proxy: r.closed_field_proxy,
                        witness: witness.clone(),
                        algebra: item.algebra.to_json(),
                    });
                }
            }
        }
    }
    CorpusSummary {
        items: items.len(),
        counts,
        failures,
    }
}
