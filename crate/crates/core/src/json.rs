//! JSON forms of elements and series.
//!
//! Element: `{"terms": [{"coeff": "3/2", "word": [[i, j, r], ...]}, ...]}`.
//! Series: `{"vars": ["u"], "known": [4], "coeffs": [{"exp": [1, 0, 0], "elt": <element>}]}`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{Elem, Generator, Signature, Word};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::series::{MultiSeries, Var};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff: String,
    word: Vec<[i64; 3]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementJson {
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoeffJson {
    exp: [i32; 3],
    elt: ElementJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SeriesJson {
    vars: Vec<String>,
    known: Vec<i32>,
    coeffs: Vec<CoeffJson>,
}

fn element_json(x: &Elem) -> ElementJson {
    ElementJson {
        terms: x
            .terms()
            .map(|(w, c)| TermJson {
                coeff: c.to_string(),
                word: w.iter().map(|g| [g.i() as i64, g.j() as i64, g.r() as i64]).collect(),
            })
            .collect(),
    }
}

pub fn element_to_value(x: &Elem) -> Value {
    serde_json::to_value(element_json(x)).expect("element serializes")
}

pub fn element_to_string(x: &Elem) -> String {
    serde_json::to_string(&element_json(x)).expect("element serializes")
}

fn element_from_json(raw: ElementJson, sig: Option<Signature>, at: &str) -> Result<Elem> {
    let mut out = Elem::zero();
    for (n, t) in raw.terms.into_iter().enumerate() {
        let c: Rational = t
            .coeff
            .parse()
            .map_err(|e| Error::Parse(format!("{at}terms[{n}].coeff: {e}")))?;
        let mut w = Word::new();
        for (p, [i, j, r]) in t.word.into_iter().enumerate() {
            let loc = || format!("{at}terms[{n}].word[{p}]");
            if i < 1 || j < 1 || r < 1 || i > 255 || j > 255 || r > u16::MAX as i64 {
                return Err(Error::Parse(format!("{}: generator [{i},{j},{r}] out of range", loc())));
            }
            if let Some(sig) = sig {
                if i as usize > sig.dim() || j as usize > sig.dim() {
                    return Err(Error::IndexOutOfRange(format!(
                        "{}: index above {} for {sig}",
                        loc(),
                        sig.dim()
                    )));
                }
            }
            w.push(Generator::new(i as usize, j as usize, r as usize));
        }
        out.add_term(w, c);
    }
    Ok(out)
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

/// Parses an element; words are taken literally and are not reduced.
pub fn element_from_str(s: &str, sig: Option<Signature>) -> Result<Elem> {
    let raw: ElementJson = serde_json::from_str(s).map_err(parse_error)?;
    element_from_json(raw, sig, "")
}

pub fn element_from_value(v: &Value, sig: Option<Signature>) -> Result<Elem> {
    let raw: ElementJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    element_from_json(raw, sig, "")
}

fn series_json(s: &MultiSeries) -> SeriesJson {
    let vars = s.active_vars();
    SeriesJson {
        vars: vars.iter().map(|v| v.name().to_string()).collect(),
        known: vars.iter().map(|v| s.known_in(*v)).collect(),
        coeffs: s.coeffs().map(|(e, c)| CoeffJson { exp: *e, elt: element_json(c) }).collect(),
    }
}

pub fn series_to_value(s: &MultiSeries) -> Value {
    serde_json::to_value(series_json(s)).expect("series serializes")
}

pub fn series_from_str(s: &str, sig: Option<Signature>) -> Result<MultiSeries> {
    let raw: SeriesJson = serde_json::from_str(s).map_err(parse_error)?;
    let mut vars = Vec::new();
    for name in &raw.vars {
        let v = Var::from_name(name).ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        if vars.contains(&v) {
            return Err(Error::Parse(format!("variable `{name}` listed twice")));
        }
        vars.push(v);
    }
    let mut coeffs = Vec::new();
    for (n, c) in raw.coeffs.into_iter().enumerate() {
        let at = format!("coeffs[{n}].elt.");
        coeffs.push((c.exp, element_from_json(c.elt, sig, &at)?));
    }
    MultiSeries::from_parts(&vars, &raw.known, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Yangian;

    #[test]
    fn element_round_trip() {
        let y = Yangian::new(Signature::new(1, 1).unwrap());
        let x = y
            .normal_form(&y.t(2, 1, 1).concat(&y.t(1, 2, 1)))
            .scale(&Rational::new(3, 2));
        let s = element_to_string(&x);
        assert_eq!(element_from_str(&s, Some(y.signature())).unwrap(), x);
        assert_eq!(element_to_string(&Elem::zero()), r#"{"terms":[]}"#);
    }

    #[test]
    fn malformed_input_reports_location() {
        let err = element_from_str("{\"terms\": [ {\"coeff\": 1}", None).unwrap_err();
        match err {
            Error::Parse(msg) => assert!(msg.contains("line 1"), "{msg}"),
            e => panic!("unexpected {e:?}"),
        }
        let bad = r#"{"terms":[{"coeff":"1","word":[[3,1,1]]}]}"#;
        let sig = Signature::new(1, 1).unwrap();
        assert!(matches!(element_from_str(bad, Some(sig)), Err(Error::IndexOutOfRange(_))));
        let bad = r#"{"terms":[{"coeff":"1/0","word":[]}]}"#;
        assert!(matches!(element_from_str(bad, None), Err(Error::Parse(_))));
    }

    #[test]
    fn series_round_trip() {
        let y = Yangian::new(Signature::new(1, 1).unwrap());
        let s = MultiSeries::univariate(Var::U, 3, (0..=3).map(|r| y.t(1, 2, r)).collect())
            .mul(&y, &MultiSeries::univariate(Var::V, 2, vec![Elem::one(), y.t(2, 1, 1)]));
        let text = series_to_value(&s).to_string();
        assert!(text.starts_with(r#"{"vars":["u","v"],"known":[3,2]"#), "{text}");
        assert_eq!(series_from_str(&text, None).unwrap(), s);
    }
}
