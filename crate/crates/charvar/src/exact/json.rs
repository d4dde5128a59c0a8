//! JSON form of polynomials: a list of `{"exps": {...}, "coeff": "a/b"}`
//! objects in descending graded-lex order.  Zero exponents are omitted.

use std::str::FromStr;

use serde_json::{json, Map, Value};

use super::poly::{Rational, SparsePoly};
use super::ratfun::RationalFunction;
use super::AlgebraError;

pub fn rational_to_json(c: &Rational) -> Value {
    Value::String(c.to_string())
}

pub fn poly_to_json(p: &SparsePoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .into_iter()
        .map(|(c, f)| {
            let mut exps = Map::new();
            for (v, e) in f {
                exps.insert(v.name().to_string(), json!(e));
            }
            json!({"exps": Value::Object(exps), "coeff": c.to_string()})
        })
        .collect();
    Value::Array(terms)
}

pub fn rf_to_json(f: &RationalFunction) -> Value {
    json!({"num": poly_to_json(f.numer()), "den": poly_to_json(f.denom())})
}

pub fn poly_from_json(v: &Value) -> Result<SparsePoly, AlgebraError> {
    let bad = |m: &str| AlgebraError::Json(m.to_string());
    let arr = v.as_array().ok_or_else(|| bad("expected a list of terms"))?;
    let mut acc = SparsePoly::zero();
    for t in arr {
        let coeff = t
            .get("coeff")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("term without string coeff"))?;
        let c = Rational::from_str(coeff).map_err(|_| bad(coeff))?;
        let exps = t
            .get("exps")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("term without exps"))?;
        let mut f = Vec::new();
        for (k, e) in exps {
            let e = e.as_u64().ok_or_else(|| bad("exponent must be a natural number"))?;
            f.push((k.as_str(), e as u32));
        }
        acc = &acc + &SparsePoly::monomial(c, &f);
    }
    Ok(acc)
}

pub fn rf_from_json(v: &Value) -> Result<RationalFunction, AlgebraError> {
    let num = poly_from_json(v.get("num").ok_or(AlgebraError::Json("missing num".into()))?)?;
    let den = poly_from_json(v.get("den").ok_or(AlgebraError::Json("missing den".into()))?)?;
    RationalFunction::new(num, den)
}
