//! Machine- and human-readable reports.
//!
//! The JSON form is the source of truth: rationals are `"p/q"` strings,
//! keys are ordered, and timings are only present when requested, so equal
//! runs produce byte-identical output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::calculus::{
    InfConvolution, IntersectionRuleResult, QcReport, SupportIntersectionVerdict, SupportValue,
};
use crate::cone::{ConeDoc, PolyhedralCone};
use crate::error::{Error, Result};
use crate::extremality::{
    ApproxEpCertificate, ExtremalityVerdict, SeparationCertificate, SupportPoint,
};
use crate::polyhedron::Row;
use crate::rational::{parse_rational, to_f64, to_strs, Rational};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub summary: String,
    #[serde(default)]
    pub details: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    pub passed: bool,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

impl Report {
    pub fn new(command: Vec<String>) -> Self {
        Report {
            command,
            passed: true,
            verdicts: Vec::new(),
            timings: None,
        }
    }

    pub fn push(&mut self, name: &str, passed: bool, summary: impl Into<String>, details: Value) {
        self.passed &= passed;
        self.verdicts.push(Verdict {
            name: name.into(),
            passed,
            summary: summary.into(),
            details,
        });
    }

    pub fn record_timing(&mut self, name: &str, seconds: f64) {
        self.timings
            .get_or_insert_with(BTreeMap::new)
            .insert(name.into(), seconds);
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Report> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn render_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "$ {}", self.command.join(" "));
        for v in &self.verdicts {
            let tag = if v.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(out, "[{tag}] {}: {}", v.name, v.summary);
            if !v.details.is_null() {
                render_value(&mut out, &v.details, 1, None);
            }
        }
        if let Some(t) = &self.timings {
            let _ = writeln!(out, "timings:");
            for (k, s) in t {
                let _ = writeln!(out, "  {k}: {s:.3}s");
            }
        }
        let _ = writeln!(out, "{}", if self.passed { "ALL PASSED" } else { "FAILURES PRESENT" });
        out
    }
}

/// `"p/q"` strings get a decimal approximation appended.
fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => match parse_rational(s) {
            Ok(q) if s.contains('/') => format!("{s} (~{})", decimal(&q)),
            _ => s.clone(),
        },
        other => other.to_string(),
    }
}

fn decimal(q: &Rational) -> String {
    let s = format!("{:.6}", to_f64(q));
    let s = s.trim_end_matches('0').trim_end_matches('.');
    s.to_string()
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn flat_text(v: &Value) -> String {
    match v {
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(scalar_text).collect();
            format!("({})", parts.join(", "))
        }
        other => scalar_text(other),
    }
}

fn render_value(out: &mut String, v: &Value, depth: usize, key: Option<&str>) {
    let pad = "  ".repeat(depth);
    let label = key.map(|k| format!("{k}: ")).unwrap_or_default();
    if is_flat(v) {
        let _ = writeln!(out, "{pad}{label}{}", flat_text(v));
        return;
    }
    match v {
        Value::Object(map) => {
            if key.is_some() {
                let _ = writeln!(out, "{pad}{label}");
            }
            let inner = if key.is_some() { depth + 1 } else { depth };
            for (k, x) in map {
                render_value(out, x, inner, Some(k));
            }
        }
        Value::Array(items) => {
            let _ = writeln!(out, "{pad}{label}");
            for x in items {
                render_value(out, x, depth + 1, Some("-"));
            }
        }
        _ => unreachable!("flat values handled above"),
    }
}

pub fn vec_json(v: &[Rational]) -> Value {
    json!(to_strs(v))
}

pub fn vecs_json(v: &[Vec<Rational>]) -> Value {
    Value::Array(v.iter().map(|x| vec_json(x)).collect())
}

pub fn rat_json(q: &Rational) -> Value {
    json!(crate::rational::RatStr(q.clone()))
}

pub fn row_json(r: &Row) -> Value {
    json!({"normal": vec_json(&r.normal), "rhs": rat_json(&r.rhs)})
}

pub fn cone_json(c: &PolyhedralCone) -> Value {
    serde_json::to_value(ConeDoc::from(c)).expect("cones serialize")
}

pub fn extremality_json(v: &ExtremalityVerdict) -> Value {
    json!({
        "extremal": v.extremal,
        "perturbation": v.perturbation.as_ref().map(|a| vec_json(a)),
        "boundary_evidence": v.boundary_evidence.as_ref().map(row_json),
        "interior_ball_radius": v.interior_ball_radius.as_ref().map(rat_json),
    })
}

pub fn separation_json(c: &SeparationCertificate) -> Value {
    json!({"functional": vec_json(&c.functional), "sup1": c.sup1, "inf2": c.inf2})
}

pub fn approx_ep_json(c: &ApproxEpCertificate) -> Value {
    json!({
        "epsilon": rat_json(&c.epsilon),
        "perturbation": vec_json(&c.perturbation),
        "x1": vec_json(&c.x1),
        "x2": vec_json(&c.x2),
        "xstar1": vec_json(&c.xstar1),
        "xstar2": vec_json(&c.xstar2),
    })
}

pub fn qc_json(q: &QcReport) -> Value {
    json!({
        "classical_interiority": q.classical_interiority,
        "difference_interiority": q.difference_interiority,
        "bounded_extremality": q.bounded_extremality,
        "bounded_radius": q.bounded_radius.as_ref().map(rat_json),
        "core_condition": q.core_condition,
    })
}

pub fn rule_json(r: &IntersectionRuleResult) -> Value {
    let decomps: Vec<Value> = r
        .decompositions
        .iter()
        .filter(|d| d.in_lhs)
        .map(|d| {
            json!({
                "probe": vec_json(&d.probe),
                "parts": d.parts.as_ref().map(|(a, b)| json!([vec_json(a), vec_json(b)])),
            })
        })
        .collect();
    json!({
        "lhs": cone_json(&r.lhs),
        "rhs": cone_json(&r.rhs),
        "equal": r.equal,
        "rhs_in_lhs": r.rhs_in_lhs,
        "decompositions": decomps,
    })
}

pub fn support_json(s: &SupportValue) -> Value {
    json!({
        "value": s.value,
        "maximizer": s.maximizer.as_ref().map(|x| vec_json(x)),
        "ray": s.ray.as_ref().map(|x| vec_json(x)),
    })
}

pub fn infconv_json(c: &InfConvolution) -> Value {
    json!({
        "value": c.value,
        "witnesses": c.witnesses.as_ref().map(|(a, b)| json!([vec_json(a), vec_json(b)])),
    })
}

pub fn support_theorem_json(v: &SupportIntersectionVerdict) -> Value {
    json!({
        "hypotheses": {
            "intersection_nonempty": v.intersection_nonempty,
            "one_bounded": v.one_bounded,
            "difference_interiority": v.difference_interiority,
            "met": v.hypotheses_met,
        },
        "support_of_intersection": v.lhs,
        "infimal_convolution": v.rhs,
        "equal": v.equal,
        "inequality_holds": v.inequality_holds,
        "witnesses": v.witnesses.as_ref().map(|(a, b)| json!([vec_json(a), vec_json(b)])),
        "witness_value": v.witness_value,
    })
}

pub fn support_point_json(p: &SupportPoint) -> Value {
    json!({"point": vec_json(&p.point), "functional": vec_json(&p.functional)})
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn json_round_trip_and_exit_code() {
        let mut r = Report::new(vec!["support".into()]);
        r.push("support", true, "2", json!({"value": rat_json(&rat(5, 2))}));
        r.push("other", false, "broken", Value::Null);
        let text = r.to_json();
        assert_eq!(Report::from_json(&text).unwrap(), r);
        assert_eq!(r.exit_code(), 1);
        let human = r.render_human();
        assert!(human.contains("5/2 (~2.5)"), "{human}");
        assert!(human.contains("[FAIL] other"));
    }
}
