//! JSON encodings. Exact numbers are always strings.

use std::collections::BTreeMap;

use anyhow::{anyhow, bail, Result};
use mzv_core::algebra::{Coefficient, Rational};
use mzv_core::lab::cases::{Case, Outcome};
use mzv_core::lab::explorer::{ExplorerReport, ORDER};
use mzv_core::lab::Param;
use mzv_core::{Index, IntExpansion, Word, WordCombo};
use serde_json::{json, Map, Value};

use crate::parse;

pub fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

pub fn index(k: &Index) -> Value {
    json!(k.entries())
}

/// A constant coefficient as `"p/q"`, otherwise the list of coefficients
/// in ascending degree.
pub fn coefficient(c: &Coefficient) -> Value {
    match c.as_rational() {
        Some(r) => rational(&r),
        None => Value::Array(c.coeffs().iter().map(rational).collect()),
    }
}

pub fn expansion(k: &Index, e: &IntExpansion) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .map(|(l, c)| json!({"index": index(l), "coeff": c.to_string()}))
        .collect();
    json!({"index": index(k), "weight": k.weight(), "terms": terms})
}

pub fn interpolated_expansion(k: &Index, e: &BTreeMap<Index, Coefficient>) -> Value {
    let terms: Vec<Value> = e
        .iter()
        .map(|(l, c)| json!({"index": index(l), "coeff": coefficient(c)}))
        .collect();
    json!({"index": index(k), "weight": k.weight(), "terms": terms})
}

pub fn combo(a: &WordCombo) -> Value {
    let mut m = Map::new();
    for (w, c) in a.iter() {
        m.insert(w.to_string(), coefficient(c));
    }
    Value::Object(m)
}

fn coefficient_from(v: &Value) -> Result<Coefficient> {
    match v {
        Value::String(s) => Ok(parse::rational(s)?.into()),
        Value::Number(n) => Ok(parse::rational(&n.to_string())?.into()),
        Value::Array(items) => {
            let cs = items
                .iter()
                .map(|x| x.as_str().ok_or_else(|| anyhow!("coefficients must be strings")).and_then(parse::rational))
                .collect::<Result<Vec<_>>>()?;
            Ok(Coefficient::from_coeffs(cs))
        }
        _ => bail!("bad coefficient {v}"),
    }
}

fn word_key(key: &str) -> Result<Word> {
    let numeric = key != "1" && key.chars().all(|c| c.is_ascii_digit());
    if numeric || key.contains(',') || key.starts_with('(') || key.starts_with('[') {
        Ok(parse::index(key)?.to_word())
    } else {
        parse::word(key)
    }
}

/// Parses `{"yyx": "1", "3": "-1", "[1,2]": ["0", "1"]}`: keys are words in
/// `x, y` or indices, values are rationals or coefficient lists in `t`.
pub fn combo_from(v: &Value) -> Result<WordCombo> {
    let obj = v.as_object().ok_or_else(|| anyhow!("a combination must be a JSON object"))?;
    let mut out = WordCombo::zero();
    for (k, c) in obj {
        out.add_term(word_key(k)?, &coefficient_from(c)?);
    }
    Ok(out)
}

pub fn param(p: &Param) -> Value {
    match p {
        Param::Nat(n) => json!(n),
        Param::Index(k) => index(k),
        Param::Word(w) => Value::String(w.to_string()),
    }
}

pub fn params(ps: &[(&'static str, Param)]) -> Value {
    let mut m = Map::new();
    for (k, p) in ps {
        m.insert((*k).to_string(), param(p));
    }
    Value::Object(m)
}

pub fn outcome(case: &Case, o: &Outcome) -> Value {
    let mut m = Map::new();
    m.insert("family".into(), Value::String(case.suite().name().into()));
    m.insert("case".into(), params(&case.params()));
    m.insert("N".into(), o.n.map_or(Value::Null, |n| json!(n)));
    if let Some(t) = &o.t {
        m.insert("t".into(), rational(t));
    }
    m.insert("ok".into(), Value::Bool(o.ok));
    if let Some(d) = &o.detail {
        m.insert("detail".into(), Value::String(d.clone()));
    }
    Value::Object(m)
}

pub fn explorer(r: &ExplorerReport) -> Value {
    let gens: Vec<Value> = r
        .useful
        .iter()
        .map(|t| json!([t.w1.to_string(), t.w2.to_string(), t.w3.to_string()]))
        .collect();
    json!({
        "weight": r.weight,
        "rank": r.rank,
        "target": r.target,
        "met": r.met,
        "tried": r.tried,
        "budget": r.budget,
        "exhausted": r.exhausted,
        "order": ORDER,
        "generators": gens,
    })
}
