//! JSON documents read and written by the command line.
//!
//! Rationals are written as canonical `"p/q"` strings (`"3"` when `q = 1`,
//! sign on the numerator); polynomials in `y` as `"3 - 2*y + y^2"`.

use std::str::FromStr;

use riordan_core::lattice::LevelWeights;
use riordan_core::production::ProductionMatrix;
use riordan_core::{CFrac, CfKind, CoeffSeq, Rational, Tail, Triangle, WeightScheme, YPoly};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::expr::{parse_ypoly, ExprError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad coefficient {text:?}: {source}")]
    Coefficient { text: String, source: ExprError },
    #[error("bad rational {0:?}")]
    Rational(String),
    #[error("{0}")]
    Shape(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ring {
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "Q[y]")]
    Polynomials,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub name: Option<String>,
    pub order: usize,
    pub ring: Ring,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub name: Option<String>,
    pub order: usize,
    pub terms: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    pub size: usize,
    pub rows: Vec<Vec<String>>,
}

pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(text: &str) -> Result<Rational, FormatError> {
    Rational::from_str(text.trim()).map_err(|_| FormatError::Rational(text.to_string()))
}

pub fn coefficient(text: &str) -> Result<YPoly, FormatError> {
    parse_ypoly(text).map_err(|source| FormatError::Coefficient {
        text: text.to_string(),
        source,
    })
}

impl TriangleDoc {
    pub fn rational(name: Option<&str>, t: &Triangle) -> Self {
        TriangleDoc {
            name: name.map(str::to_string),
            order: t.order(),
            ring: Ring::Rationals,
            rows: t.rows().iter().map(|r| r.iter().map(rational_str).collect()).collect(),
        }
    }

    pub fn polynomial(name: Option<&str>, t: &Triangle<YPoly>) -> Self {
        TriangleDoc {
            name: name.map(str::to_string),
            order: t.order(),
            ring: Ring::Polynomials,
            rows: t.rows().iter().map(|r| r.iter().map(YPoly::to_string).collect()).collect(),
        }
    }

    fn check_shape(&self) -> Result<(), FormatError> {
        if self.rows.len() != self.order {
            return Err(FormatError::Shape(format!(
                "order is {} but there are {} rows",
                self.order,
                self.rows.len()
            )));
        }
        Ok(())
    }

    pub fn to_rational(&self) -> Result<Triangle, FormatError> {
        self.check_shape()?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| parse_rational(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Triangle::from_rows(rows).map_err(|e| FormatError::Shape(e.to_string()))
    }

    pub fn to_polynomial(&self) -> Result<Triangle<YPoly>, FormatError> {
        self.check_shape()?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| coefficient(e)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Triangle::from_rows(rows).map_err(|e| FormatError::Shape(e.to_string()))
    }
}

impl SequenceDoc {
    pub fn new(name: Option<&str>, terms: &[Rational]) -> Self {
        SequenceDoc {
            name: name.map(str::to_string),
            order: terms.len(),
            terms: terms.iter().map(rational_str).collect(),
        }
    }

    pub fn to_terms(&self) -> Result<Vec<Rational>, FormatError> {
        self.terms.iter().map(|t| parse_rational(t)).collect()
    }
}

impl MatrixDoc {
    pub fn new(p: &ProductionMatrix) -> Self {
        MatrixDoc {
            size: p.size(),
            rows: p.rows().iter().map(|r| r.iter().map(rational_str).collect()).collect(),
        }
    }
}

/// A JSON coefficient: a string in the expression grammar or a plain integer.
fn coefficient_value(v: &Value) -> Result<YPoly, FormatError> {
    match v {
        Value::String(s) => coefficient(s),
        Value::Number(n) => coefficient(&n.to_string()),
        other => Err(FormatError::Shape(format!("expected a coefficient, found {other}"))),
    }
}

fn coefficient_list(v: &Value) -> Result<Vec<YPoly>, FormatError> {
    match v {
        Value::Array(items) => items.iter().map(coefficient_value).collect(),
        other => Err(FormatError::Shape(format!("expected a list of coefficients, found {other}"))),
    }
}

/// `{"prefix": [...], "tail": c | {"cycle": [...]} | {"poly": [...]}}`.
/// A missing tail means zeros after the prefix.
fn coeff_seq(v: &Value) -> Result<CoeffSeq, FormatError> {
    let Value::Object(map) = v else {
        return Err(FormatError::Shape(format!("expected a coefficient sequence object, found {v}")));
    };
    if let Some(key) = map.keys().find(|k| *k != "prefix" && *k != "tail") {
        return Err(FormatError::Shape(format!("unknown key {key:?} in coefficient sequence")));
    }
    let prefix = match map.get("prefix") {
        Some(p) => coefficient_list(p)?,
        None => Vec::new(),
    };
    let tail = match map.get("tail") {
        None | Some(Value::Null) => Tail::Periodic(Vec::new()),
        Some(Value::Object(t)) => match (t.get("cycle"), t.get("poly"), t.len()) {
            (Some(c), None, 1) => Tail::Periodic(coefficient_list(c)?),
            (None, Some(p), 1) => Tail::Polynomial(coefficient_list(p)?),
            _ => return Err(FormatError::Shape("tail object needs exactly one of \"cycle\" or \"poly\"".into())),
        },
        Some(t) => Tail::Periodic(vec![coefficient_value(t)?]),
    };
    Ok(CoeffSeq::new(prefix, tail))
}

fn coeff_seq_json(s: &CoeffSeq) -> Value {
    let s = s.normalized();
    let list = |v: &[YPoly]| Value::Array(v.iter().map(|c| Value::String(c.to_string())).collect());
    let tail = match s.tail() {
        Tail::Periodic(c) if c.is_empty() => return serde_json::json!({ "prefix": list(s.prefix()) }),
        Tail::Periodic(c) if c.len() == 1 => Value::String(c[0].to_string()),
        Tail::Periodic(c) => serde_json::json!({ "cycle": list(c) }),
        Tail::Polynomial(p) => serde_json::json!({ "poly": list(p) }),
    };
    serde_json::json!({ "prefix": list(s.prefix()), "tail": tail })
}

pub fn parse_cf_spec(text: &str) -> Result<CFrac, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    cf_from_value(&v)
}

pub fn cf_from_value(v: &Value) -> Result<CFrac, FormatError> {
    let Value::Object(map) = v else {
        return Err(FormatError::Shape("a continued fraction spec must be an object".into()));
    };
    let kind = match map.get("kind").and_then(Value::as_str) {
        Some("stieltjes") => CfKind::Stieltjes,
        Some("jacobi") => CfKind::Jacobi,
        Some("thron") => CfKind::Thron,
        Some(other) => return Err(FormatError::Shape(format!("unknown kind {other:?}"))),
        None => return Err(FormatError::Shape("missing \"kind\"".into())),
    };
    let a = coeff_seq(map.get("a").ok_or_else(|| FormatError::Shape("missing \"a\"".into()))?)?;
    Ok(match kind {
        CfKind::Stieltjes => {
            if map.contains_key("b") {
                return Err(FormatError::Shape("a Stieltjes fraction takes only \"a\"".into()));
            }
            CFrac::stieltjes(a)
        }
        _ => {
            let b = coeff_seq(map.get("b").ok_or_else(|| FormatError::Shape("missing \"b\"".into()))?)?;
            if kind == CfKind::Jacobi {
                CFrac::jacobi(a, b)
            } else {
                CFrac::thron(a, b)
            }
        }
    })
}

pub fn cf_to_value(cf: &CFrac) -> Value {
    let mut v = serde_json::json!({ "kind": cf.kind().name(), "a": coeff_seq_json(cf.alpha()) });
    if cf.kind() != CfKind::Stieltjes {
        v["b"] = coeff_seq_json(cf.beta());
    }
    v
}

/// `{"rise": {...}, "fall": {...}, "horizontal": {...}}`, each a
/// `{"prefix": [...], "tail": c}` object; missing entries weigh 1.
pub fn parse_weights(text: &str) -> Result<WeightScheme, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    let Value::Object(map) = &v else {
        return Err(FormatError::Shape("weights must be an object".into()));
    };
    let mut w = WeightScheme::default();
    for (key, val) in map {
        let Value::Object(lw) = val else {
            return Err(FormatError::Shape(format!("{key:?} must be an object")));
        };
        let prefix = match lw.get("prefix") {
            Some(p) => coefficient_list(p)?,
            None => Vec::new(),
        };
        let tail = match lw.get("tail") {
            Some(t) => coefficient_value(t)?,
            None => YPoly::one(),
        };
        let weights = LevelWeights::new(prefix, tail);
        match key.as_str() {
            "rise" => w.rise = weights,
            "fall" => w.fall = weights,
            "horizontal" => w.horizontal = weights,
            other => return Err(FormatError::Shape(format!("unknown step kind {other:?}"))),
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use riordan_core::rational::frac;

    #[test]
    fn spec_example_parses() {
        let cf = parse_cf_spec(r#"{"kind":"jacobi","a":{"prefix":["y+2"],"tail":"3"},"b":{"prefix":["y+1"],"tail":"2"}}"#)
            .unwrap();
        assert_eq!(cf.kind(), CfKind::Jacobi);
        assert_eq!(cf.alpha().take(3), [YPoly::from_ints(&[2, 1]), YPoly::int(3), YPoly::int(3)]);
        assert_eq!(cf.beta().take(2), [YPoly::from_ints(&[1, 1]), YPoly::int(2)]);
        assert_eq!(cf_from_value(&cf_to_value(&cf)).unwrap(), cf);
    }

    #[test]
    fn tails() {
        let cf = parse_cf_spec(r#"{"kind":"thron","a":{"tail":-1},"b":{"tail":{"cycle":[2,1]}}}"#).unwrap();
        assert_eq!(cf.beta().take(4), [2, 1, 2, 1].map(YPoly::int));
        let cf = parse_cf_spec(r#"{"kind":"stieltjes","a":{"tail":{"poly":["1","1"]}}}"#).unwrap();
        assert_eq!(cf.alpha().take(3), [1, 2, 3].map(YPoly::int));
        assert_eq!(cf_from_value(&cf_to_value(&cf)).unwrap(), cf);
    }

    #[test]
    fn malformed_specs() {
        for text in [
            "[]",
            r#"{"kind":"jacobi","a":{}}"#,
            r#"{"kind":"other","a":{}}"#,
            r#"{"kind":"stieltjes","a":{"prefix":["x"]}}"#,
            r#"{"kind":"stieltjes","a":{"tail":{"cycle":[1],"poly":[1]}}}"#,
            r#"{"kind":"stieltjes","a":{"bogus":1}}"#,
            "{",
        ] {
            assert!(parse_cf_spec(text).is_err(), "{text}");
        }
    }

    #[test]
    fn rationals_round_trip() {
        for r in [frac(-3, 4), frac(5, 1), frac(0, 1), frac(12, -8)] {
            assert_eq!(parse_rational(&rational_str(&r)).unwrap(), r);
        }
        assert_eq!(rational_str(&frac(3, -6)), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("y").is_err());
    }

    #[test]
    fn triangle_round_trip() {
        let t = Triangle::from_rows(vec![vec![frac(1, 2)], vec![frac(-1, 3), frac(7, 1)]]).unwrap();
        let doc = TriangleDoc::rational(Some("t"), &t);
        let text = serde_json::to_string(&doc).unwrap();
        let back: TriangleDoc = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_rational().unwrap(), t);
        assert!(text.contains(r#""ring":"Q""#));
    }

    #[test]
    fn weights() {
        let w = parse_weights(r#"{"rise":{"prefix":[5],"tail":4},"horizontal":{"prefix":["4"],"tail":"2"}}"#).unwrap();
        assert_eq!(w.rise.get(0), &YPoly::int(5));
        assert_eq!(w.rise.get(3), &YPoly::int(4));
        assert_eq!(w.fall.get(2), &YPoly::one());
        assert!(parse_weights(r#"{"up":{}}"#).is_err());
    }
}
