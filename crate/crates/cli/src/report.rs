//! Versioned JSON reports.
//!
//! Objects are emitted with sorted keys and polynomials are written as
//! coefficient lists, lowest degree first, of decimal strings. Apart from
//! `elapsed`, a report is a pure function of its inputs.

use num_bigint::BigInt;
use purecone_core::exactcore::IntPoly;
use purecone_core::hilbert::{DimensionVector, FactorWitness};
use purecone_core::intpoly::{MembershipFlags, RatFunc2, Valuation};
use purecone_core::obstruction::{Case, CaseRecord, Mechanism, Outcome, Verdict};
use purecone_core::pureray::{BettiPoint, DegreeSequence};
use serde_json::{json, Map, Number, Value};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub verdicts: Vec<Value>,
    pub witnesses: Value,
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            verdicts: Vec::new(),
            witnesses: Value::Object(Map::new()),
            elapsed_ms: 0,
        }
    }

    pub fn witness(&mut self, key: &str, value: Value) {
        if let Value::Object(map) = &mut self.witnesses {
            map.insert(key.to_string(), value);
        }
    }

    pub fn to_value(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "elapsed": int_value(&BigInt::from(self.elapsed_ms)),
        })
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}

/// Exact integer as a JSON number of any size.
pub fn int_value(n: &BigInt) -> Value {
    let num: Number = serde_json::from_str(&n.to_string()).expect("decimal integers are JSON numbers");
    Value::Number(num)
}

/// Exact integer as a decimal string.
pub fn int_string(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn ints_value(ns: &[BigInt]) -> Value {
    Value::Array(ns.iter().map(int_value).collect())
}

pub fn degrees_value(d: &DegreeSequence) -> Value {
    json!(d.entries())
}

pub fn point_value(b: &BettiPoint) -> Value {
    ints_value(b.entries())
}

pub fn dims_value(h: &DimensionVector) -> Value {
    json!(h.entries())
}

pub fn poly_value(p: &IntPoly) -> Value {
    json!({
        "coeffs": p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "text": p.to_text(),
    })
}

pub fn ratfunc_value(f: &RatFunc2) -> Value {
    json!({
        "num": f.num().to_text(),
        "den": f.den().to_text(),
        "text": f.to_text(),
    })
}

pub fn valuation_value(v: Valuation) -> Value {
    match v {
        Valuation::Finite(k) => json!(k),
        Valuation::Infinity => json!("inf"),
    }
}

pub fn membership_value(m: &MembershipFlags) -> Value {
    json!({ "in_T": m.in_t, "in_M": m.in_m, "in_M2": m.in_m2, "in_D": m.in_d })
}

fn factor_witness_value(w: &FactorWitness) -> Value {
    let mut obj = json!({
        "factor": w.factor.label(),
        "factor_coeffs": poly_value(&w.factor.poly())["coeffs"].clone(),
        "exponent": w.exponent,
        "remainder": poly_value(&w.remainder),
    });
    if let Some(c) = w.constant_remainder() {
        obj["value"] = int_string(&c);
    }
    obj
}

pub fn case_value(case: &Case) -> Value {
    match case {
        Case::PolynomialRing { n_vars } => json!({ "kind": "polynomial_ring", "n_vars": n_vars }),
        Case::Lie(h) => json!({
            "kind": "lie",
            "dims": dims_value(h),
            "abelian": h.is_abelian(),
        }),
    }
}

pub fn mechanism_value(m: &Mechanism) -> Value {
    let mut obj = match m {
        Mechanism::Divisibility { remainder, witness } => json!({
            "remainder": poly_value(remainder),
            "witness": witness.as_ref().map_or(Value::Null, factor_witness_value),
        }),
        Mechanism::Krull { beta0, beta1, n_vars } => json!({
            "beta0": int_string(beta0),
            "beta1": int_string(beta1),
            "n_vars": n_vars,
            "inequality": format!("beta0 = {beta0}, beta1 = {beta1} < {n_vars}"),
        }),
        Mechanism::NegativeQuotient { quotient } => json!({ "quotient": poly_value(quotient) }),
        Mechanism::LieConstraint { reason } => json!({ "reason": reason }),
    };
    obj["mechanism"] = json!(m.kind());
    obj
}

pub fn record_value(r: &CaseRecord) -> Value {
    let mut obj = json!({ "case": case_value(&r.case) });
    match &r.outcome {
        Outcome::Eliminated(m) => {
            obj["outcome"] = json!("ELIMINATED");
            obj["elimination"] = mechanism_value(m);
        }
        Outcome::Survives { quotient } => {
            obj["outcome"] = json!("SURVIVES");
            if let Some(q) = quotient {
                obj["quotient"] = poly_value(q);
            }
        }
    }
    obj
}

pub fn verdict_value(ring: &str, v: &Verdict) -> Value {
    json!({
        "ring": ring,
        "status": v.status.as_str(),
        "records": v.records.iter().map(record_value).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn huge_integers_stay_exact() {
        let n: BigInt = "123456789012345678901234567890".parse().unwrap();
        let v = int_value(&n);
        assert_eq!(serde_json::to_string(&v).unwrap(), "123456789012345678901234567890");
    }

    #[test]
    fn keys_are_sorted() {
        let r = Report::new("hk", json!({"z": 1, "a": 2}));
        let text = r.render();
        let a = text.find("\"command\"").unwrap();
        let b = text.find("\"elapsed\"").unwrap();
        let c = text.find("\"schema_version\"").unwrap();
        assert!(a < b && b < c);
        assert!(text.find("\"a\"").unwrap() < text.find("\"z\"").unwrap());
    }

    #[test]
    fn polynomial_encoding() {
        let p = IntPoly::from_i64s(&[1, 0, -2]);
        assert_eq!(poly_value(&p), json!({"coeffs": ["1", "0", "-2"], "text": "1 - 2t^2"}));
    }
}
