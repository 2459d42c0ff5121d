//! JSON and CSV rendering of command results. JSON objects use sorted keys.

use std::io::Write;

use rsumset::bounds::{BoundReport, ExtInt};
use rsumset::multiplicity::{nq_value, n_value, LemmaVerdict, MultProfile, SqfDecomp};
use rsumset::sumset::{SweepConfig, SweepMode, SweepRecord, SweepReport, Pairing, VerifyRecord};
use rsumset::{BPoly, FieldCtx, UPoly};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::print;

fn ext_int(v: ExtInt) -> Value {
    match v {
        ExtInt::Finite(n) => json!(n),
        ExtInt::PosInf => json!("inf"),
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("built from json!({{..}})"),
    }
}

pub fn bound(ctx: &FieldCtx, p: &BPoly, r: &BoundReport) -> Value {
    json!({
        "field": print::field(ctx),
        "poly": print::poly(p),
        "d": r.d,
        "nA": r.na,
        "nB": r.nb,
        "n_pstar": r.n_pstar,
        "m_neg1": r.m_neg1,
        "term_char": ext_int(r.term_char),
        "term_size": r.term_size,
        "bound": r.bound,
        "effective": r.effective,
        "hypothesis": { "row_witness": r.row_witness, "col_witness": r.col_witness },
    })
}

pub fn verify(ctx: &FieldCtx, p: &BPoly, a: &str, b: &str, c: &str, v: &VerifyRecord) -> Value {
    let mut m = object(bound(ctx, p, &v.report));
    m.insert("A".into(), json!(a));
    m.insert("B".into(), json!(b));
    m.insert("C".into(), json!(c));
    m.insert("cardC".into(), json!(v.card_c));
    m.insert("slack".into(), json!(v.slack));
    m.insert("ok".into(), json!(v.ok));
    Value::Object(m)
}

fn record(polys: &[String], r: &SweepRecord) -> Value {
    json!({
        "poly": polys[r.poly],
        "A": print::set(&r.a),
        "B": print::set(&r.b),
        "cardC": r.verify.card_c,
        "bound": r.verify.report.bound,
        "slack": r.verify.slack,
        "ok": r.verify.ok,
    })
}

fn range_text(r: &std::ops::RangeInclusive<usize>) -> String {
    format!("{}..{}", r.start(), r.end())
}

pub fn sweep(cfg: &SweepConfig, rep: &SweepReport) -> Value {
    let polys: Vec<String> = cfg.polys.iter().map(print::poly).collect();
    let mode = match cfg.mode {
        SweepMode::Exhaustive { budget } => json!({ "kind": "exhaustive", "budget": budget.to_string() }),
        SweepMode::Random { seed, samples } => json!({ "kind": "random", "seed": seed, "samples": samples }),
    };
    let histogram: Map<String, Value> = rep.slack_histogram.iter().map(|(s, n)| (s.to_string(), json!(n))).collect();
    json!({
        "field": print::field(&cfg.ctx),
        "polys": polys,
        "nA": range_text(&cfg.na),
        "nB": range_text(&cfg.nb),
        "pairing": match cfg.pairing { Pairing::Independent => "independent", Pairing::Diagonal => "diagonal" },
        "mode": mode,
        "instances": rep.instances,
        "checked": rep.checked(),
        "violations": rep.violations,
        "skipped": rep.skipped,
        "slack_histogram": histogram,
        "min_slack": rep.min_slack,
        "extremal": rep.extremal.iter().map(|r| record(&polys, r)).collect::<Vec<_>>(),
        "records": rep.records.iter().map(|r| record(&polys, r)).collect::<Vec<_>>(),
    })
}

pub const SWEEP_COLUMNS: [&str; 10] = ["field", "nA", "nB", "poly", "A", "B", "cardC", "bound", "slack", "ok"];

pub fn sweep_csv(out: &mut dyn Write, cfg: &SweepConfig, rep: &SweepReport) -> Result<(), CliError> {
    let field = print::field(&cfg.ctx);
    let polys: Vec<String> = cfg.polys.iter().map(print::poly).collect();
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SWEEP_COLUMNS)?;
    for r in &rep.records {
        w.write_record([
            field.clone(),
            r.a.len().to_string(),
            r.b.len().to_string(),
            polys[r.poly].clone(),
            print::set(&r.a),
            print::set(&r.b),
            r.verify.card_c.to_string(),
            r.verify.report.bound.to_string(),
            r.verify.slack.to_string(),
            r.verify.ok.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn profile(ctx: &FieldCtx, p: &UPoly, prof: &MultProfile, dec: &SqfDecomp) -> Value {
    let counts: Map<String, Value> = prof.counts.iter().map(|(m, c)| (m.to_string(), json!(c))).collect();
    let parts: Map<String, Value> = dec.parts.iter().map(|(m, s)| (m.to_string(), json!(print::upoly(s)))).collect();
    let ch = ctx.characteristic();
    let nq: Map<String, Value> = ch
        .powers_up_to(prof.degree.max(1) as u64)
        .into_iter()
        .map(|q| (q.to_string(), json!(nq_value(prof, q))))
        .collect();
    json!({
        "field": print::field(ctx),
        "upoly": print::upoly(p),
        "degree": prof.degree,
        "m_zero": prof.m_zero,
        "m_neg1": prof.m_neg1,
        "counts": counts,
        "distinct_nonzero_roots": prof.distinct_nonzero_roots(),
        "squarefree": { "unit": print::element(&dec.unit), "e0": dec.e0, "parts": parts },
        "nq": nq,
        "n_value": n_value(prof, ch),
    })
}

pub fn lemma1(ctx: &FieldCtx, p: &UPoly, k: usize, l: usize, v: LemmaVerdict) -> Value {
    let (name, q, value) = match v {
        LemmaVerdict::DivisibleByXl => ("DivisibleByXl", None, None),
        LemmaVerdict::DegAtMostK => ("DegAtMostK", None, None),
        LemmaVerdict::NqWitness { q, value } => ("NqWitness", Some(q), Some(value)),
        LemmaVerdict::Violation => ("Violation", None, None),
    };
    json!({
        "field": print::field(ctx),
        "upoly": print::upoly(p),
        "k": k,
        "l": l,
        "verdict": name,
        "q": q,
        "value": value,
    })
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// One header row and one value row; nested keys are joined with `.`.
pub fn single_row_csv(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    let mut cells = Vec::new();
    flatten("", v, &mut cells);
    let mut w = csv::Writer::from_writer(out);
    w.write_record(cells.iter().map(|(k, _)| k))?;
    w.write_record(cells.iter().map(|(_, v)| v))?;
    w.flush()?;
    Ok(())
}
