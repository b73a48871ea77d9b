//! Versioned, serializable reports for every command.
//!
//! Exact values are emitted as strings (`"-3/4"`, `"1+sqrt(-2)"`), enclosures
//! as `{"enclosure": [lo, hi], "precision": bits}` with decimal endpoints
//! rounded outward.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::analytic::{mahler_measure_embedded, roots_of_embedding, DEFAULT_ROOT_WIDTH};
use crate::bounds::{self, BoundCheck, BoundName, Verdict};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::heights::{count_unity_roots, expand, height};
use crate::interval::{ComplexBox, RealInterval};
use crate::poly::{IntPoly, PolyOverK};
use crate::search;

pub const SCHEMA_VERSION: u32 = 1;

/// Decimal digits per interval endpoint.
pub const DIGITS: usize = 40;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub name: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    pub field: Option<String>,
    pub precision: u32,
    pub inputs: BTreeMap<String, String>,
    pub results: Value,
    pub verdicts: Vec<VerdictEntry>,
}

impl Report {
    fn new(command: &str, field: Option<Field>, precision: u32) -> Report {
        Report {
            schema: SCHEMA_VERSION,
            command: command.to_string(),
            field: field.map(|f| f.to_string()),
            precision,
            inputs: BTreeMap::new(),
            results: Value::Object(Map::new()),
            verdicts: Vec::new(),
        }
    }

    fn input(mut self, key: &str, value: impl ToString) -> Report {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    fn verdict(&mut self, name: impl ToString, verdict: Verdict) {
        self.verdicts.push(VerdictEntry {
            name: name.to_string(),
            verdict,
        });
    }

    /// 0 if every verdict holds, 1 if one fails, 2 if one is inconclusive.
    pub fn exit_code(&self) -> i32 {
        if self.verdicts.iter().any(|v| v.verdict == Verdict::Fails) {
            1
        } else if self.verdicts.iter().any(|v| v.verdict == Verdict::Inconclusive) {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// Aligned `key  value` lines.
    pub fn to_text(&self) -> String {
        let mut rows: Vec<(String, String)> = vec![("command".into(), self.command.clone())];
        if let Some(f) = &self.field {
            rows.push(("field".into(), f.clone()));
        }
        rows.push(("precision".into(), format!("{} bits", self.precision)));
        for (k, v) in &self.inputs {
            rows.push((k.clone(), v.clone()));
        }
        flatten("", &self.results, &mut rows);
        for v in &self.verdicts {
            rows.push((format!("verdict.{}", v.name), v.verdict.to_string()));
        }
        let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<width$}  {v}");
        }
        out
    }
}

fn flatten(prefix: &str, v: &Value, rows: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) if m.contains_key("enclosure") => {
            let e = &m["enclosure"];
            rows.push((prefix.to_string(), format!("[{}, {}]", plain(&e[0]), plain(&e[1]))));
        }
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&key(k), x, rows);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(plain).collect();
            rows.push((prefix.to_string(), items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, rows);
            }
        }
        x => rows.push((prefix.to_string(), plain(x))),
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        x => x.to_string(),
    }
}

pub fn interval_json(iv: &RealInterval) -> Value {
    let (lo, hi) = iv.to_decimal_strings(DIGITS);
    json!({ "enclosure": [lo, hi], "precision": iv.prec() })
}

fn box_json(b: &ComplexBox) -> Value {
    json!({ "re": interval_json(&b.re), "im": interval_json(&b.im) })
}

/// Finite floats as numbers, infinities as strings.
fn num(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else if x > 0.0 {
        json!("inf")
    } else {
        json!("-inf")
    }
}

fn check_json(c: &BoundCheck) -> Value {
    json!({
        "name": c.name.to_string(),
        "lhs": interval_json(&c.lhs),
        "rhs": interval_json(&c.rhs),
        "verdict": c.verdict,
        "margin": num(c.margin),
    })
}

pub fn height_report(f: &PolyOverK, prec: u32) -> Result<Report> {
    let h = height(f, prec)?;
    let mut r = Report::new("height", Some(f.field()), prec).input("poly", f);
    r.results = json!({
        "degree": h.degree,
        "nonarch": h.nonarch.to_string(),
        "arch": interval_json(&h.arch),
        "height": interval_json(&h.height),
        "log_height": interval_json(&h.log_height),
    });
    Ok(r)
}

/// Mahler measure of `f_σ` for every embedding `σ`, with its roots.
pub fn mahler_report(f: &PolyOverK, prec: u32) -> Result<Report> {
    let mut embeddings = Vec::new();
    for sigma in 0..f.field().degree() as usize {
        let m = mahler_measure_embedded(f, sigma, prec)?;
        let roots: Vec<Value> = roots_of_embedding(f, sigma, prec, DEFAULT_ROOT_WIDTH)?
            .iter()
            .map(|r| json!({ "root": box_json(&r.enclosure), "multiplicity": r.multiplicity }))
            .collect();
        embeddings.push(json!({ "sigma": sigma, "measure": interval_json(&m.enclosure), "roots": roots }));
    }
    let mut r = Report::new("mahler", Some(f.field()), prec).input("poly", f);
    r.results = json!({ "degree": f.degree(), "embeddings": embeddings });
    Ok(r)
}

pub fn mk_report(field: Field, cap: f64, prec: u32) -> Result<Report> {
    let m = search::mk_search(field, cap, prec)?;
    let mut r = Report::new("mk", Some(field), prec).input("cap", cap);
    r.results = json!({
        "value": interval_json(&m.value.enclosure),
        "witnesses": m.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "exhaustive": m.exhaustive,
        "candidates": m.candidates,
    });
    Ok(r)
}

pub fn ck_certify_report(field: Field, base: &IntPoly, j_max: u32, prec: u32) -> Result<Report> {
    let certs = search::ck_lower_certify(base, field, j_max, prec)?;
    let base_value = search::base_bound(base, prec);
    let ck = bounds::ck_interval(field, None)?;
    let mut r = Report::new("ck-certify", Some(field), prec)
        .input("base", base)
        .input("jmax", j_max);
    let best = certs.iter().map(|c| c.cert_value).fold(f64::NEG_INFINITY, f64::max);
    r.results = json!({
        "base_bound": num(base_value),
        "best": num(best),
        "exceeds_w_over_log2": best > ck.lower,
        "certificates": certs.iter().map(|c| json!({
            "j": c.j,
            "degree": c.degree,
            "sum_abs": c.sum_abs.to_string(),
            "cert_value": num(c.cert_value),
            "height_trend": num(c.height_trend),
        })).collect::<Vec<_>>(),
    });
    Ok(r)
}

pub fn ck_interval_report(field: Field, mk: Option<f64>, prec: u32) -> Result<Report> {
    let c = bounds::ck_interval(field, mk)?;
    let mut r = Report::new("ck-interval", Some(field), prec);
    if let Some(m) = mk {
        r = r.input("mk", m);
    }
    r.results = json!({ "lower": num(c.lower), "upper": num(c.upper), "exact": c.exact });
    Ok(r)
}

/// Default `M_K` lower bound for verification: the least measure from
/// [`search::mk_search`] with the largest cap, rounded down.
pub fn default_mk(field: Field, prec: u32) -> Result<f64> {
    Ok(search::mk_search(field, search::MK_MAX_CAP, prec)?
        .value
        .enclosure
        .lo_f64())
}

pub fn verify_report(f: &PolyOverK, checks: &[BoundName], mk: Option<f64>, prec: u32) -> Result<Report> {
    let field = f.field();
    let s = search::recognize_split(f, prec)?.ok_or_else(|| Error::NotSplit(field.to_string()))?;
    let mk = match mk {
        Some(m) => m,
        None => default_mk(field, prec)?,
    };
    let mut results = Vec::new();
    for name in checks {
        match name {
            BoundName::AlphaBound1 => results.push(bounds::check_alphabound1(&s, prec)?),
            BoundName::Bound1 => results.push(bounds::check_bound1(&s, mk, prec)?),
            BoundName::AlphaBound2 => results.push(bounds::check_alphabound2(&s, prec)?),
            BoundName::Bound2 => results.push(bounds::check_bound2(&s, prec)?),
            BoundName::ComplexMahler => results.extend(bounds::check_complexmahler_split(&s, prec)?),
            BoundName::Combined => results.push(bounds::check_combined(&s, mk, prec)?),
        }
    }
    let h = height(&expand(&s), prec)?;
    let mut r = Report::new("verify", Some(field), prec)
        .input("poly", f)
        .input("mk", mk);
    r.results = json!({
        "split": s.to_string(),
        "degree": s.degree(),
        "unity_roots": count_unity_roots(&s),
        "height": interval_json(&h.height),
        "checks": results.iter().map(check_json).collect::<Vec<_>>(),
    });
    for (i, c) in results.iter().enumerate() {
        let name = if c.name == BoundName::ComplexMahler {
            let sigma = results[..i].iter().filter(|x| x.name == c.name).count();
            format!("{}.{sigma}", c.name)
        } else {
            c.name.to_string()
        };
        r.verdict(name, c.verdict);
    }
    Ok(r)
}

pub fn lattice_report(field: Field, radius: i64) -> Result<Report> {
    let l = search::lattice_case_check(field, radius)?;
    let pairs = |v: &[(crate::field::FieldElement, crate::field::FieldElement)]| {
        v.iter()
            .map(|(b, g)| json!([b.to_string(), g.to_string()]))
            .collect::<Vec<_>>()
    };
    let mut r = Report::new("lattice", Some(field), 0).input("radius", radius);
    r.results = json!({
        "w": l.w,
        "min_norm": l.min_norm.to_string(),
        "pairs_scanned": l.pairs_scanned,
        "attaining_pairs": pairs(&l.attaining_pairs),
        "exceptional_pairs": pairs(&l.exceptional_pairs),
    });
    let ok = |b: bool| if b { Verdict::Holds } else { Verdict::Fails };
    r.verdict("min_norm_at_least_4", ok(l.min_norm >= 4));
    r.verdict("no_exceptional_pairs", ok(l.exceptional_pairs.is_empty()));
    Ok(r)
}

pub fn pell_report(d: i64) -> Result<Report> {
    let w = search::pell_counterexample(d)?;
    let field = w.alpha.field();
    let mut r = Report::new("pell", Some(field), 0).input("d", d);
    r.results = json!({
        "b": w.b.to_string(),
        "c": w.c.to_string(),
        "alpha": w.alpha.to_string(),
        "product": w.product.to_string(),
    });
    let v = if w.product == 1 { Verdict::Holds } else { Verdict::Fails };
    r.verdict("product_equals_1", v);
    Ok(r)
}

pub fn t2_report(k: u32, cap: f64, prec: u32) -> Result<Report> {
    let t = bounds::t2_constant(k, cap, prec)?;
    let floor = bounds::mahler_floor(k, true)?;
    let mut r = Report::new("t2", None, prec).input("k", k).input("cap", cap);
    r.results = json!({
        "w": t.w,
        "m_floor": num(t.m_floor),
        "c": num(t.c),
        "witness": t.witness,
        "polynomials_scanned": t.polynomials_scanned,
        "stated_floor": { "value": num(floor.value), "source": floor.source, "vacuous": floor.vacuous },
    });
    Ok(r)
}
