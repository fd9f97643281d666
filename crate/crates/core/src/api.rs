//! JSON in, JSON out: the operations behind the command line and the C ABI.
//!
//! Every function here is deterministic; output never depends on the
//! number of worker threads.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::algebra::{Elem, Signature, Yangian};
use crate::error::{Error, Result};
use crate::gauss::{gauss_blocks, Composition};
use crate::json::{element_from_str, element_to_value, series_from_str, series_to_value};
use crate::matrix::MatrixSeries;
use crate::morphisms::{MapKind, Morphism};
use crate::pbw::{enumerate_pbw, gr_bracket_check, Family, PbwToolkit};
use crate::report::VerifyReport;
use crate::series::{MultiSeries, Var};
use crate::verify::{Suite, Verifier};

/// Process exit status for an error: 2 for bad input or shape, 3 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_)
        | Error::WrongShape(_)
        | Error::InvalidComposition(_)
        | Error::IndexOutOfRange(_)
        | Error::OrderTooSmall { .. }
        | Error::DegreeExceeded { .. } => 2,
        Error::OutOfKnownRange { .. } | Error::NotUnitriangularConstantTerm | Error::DimensionMismatch(_) => 3,
    }
}

/// `"M,N"`.
pub fn parse_signature(s: &str) -> Result<Signature> {
    let bad = || Error::Parse(format!("expected M,N but got {s:?}"));
    let (m, n) = s.split_once(',').ok_or_else(bad)?;
    let m = m.trim().parse().map_err(|_| bad())?;
    let n = n.trim().parse().map_err(|_| bad())?;
    Signature::new(m, n)
}

pub fn normal_form(sig: Signature, input: &str) -> Result<Value> {
    let x = element_from_str(input, Some(sig))?;
    Ok(element_to_value(&Yangian::new(sig).normal_form(&x)))
}

pub fn gauss(mu: &Composition, k: usize) -> Result<Value> {
    let y = Yangian::new(mu.signature());
    Ok(gauss_blocks(&y, mu, k)?.to_json())
}

pub enum MapInput {
    Element(Elem),
    Series(MultiSeries),
}

/// `t12` or `t1,2` is the series `t_12(u)` to order `k`; `t12^(3)` is the
/// single generator. Anything starting with `{` is element or series JSON.
pub fn parse_map_input(s: &str, sig: Signature, k: usize) -> Result<MapInput> {
    let s = s.trim();
    if s.starts_with('{') {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        return if v.get("vars").is_some() {
            Ok(MapInput::Series(series_from_str(s, Some(sig))?))
        } else {
            Ok(MapInput::Element(element_from_str(s, Some(sig))?))
        };
    }
    let bad = || Error::Parse(format!("cannot read {s:?} as t<i><j>, t<i>,<j> or t<i><j>^(<r>)"));
    let body = s.strip_prefix('t').ok_or_else(bad)?;
    let (idx, order) = match body.split_once("^(") {
        Some((idx, rest)) => {
            let r: usize = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
            (idx, Some(r))
        }
        None => (body, None),
    };
    let (i, j): (usize, usize) = match idx.split_once(',') {
        Some((i, j)) => (i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?),
        None if idx.len() == 2 && idx.bytes().all(|b| b.is_ascii_digit()) => {
            ((idx.as_bytes()[0] - b'0') as usize, (idx.as_bytes()[1] - b'0') as usize)
        }
        None => return Err(bad()),
    };
    let y = Yangian::new(sig);
    match order {
        Some(r) => Ok(MapInput::Element(Elem::symbol(y.generator(i, j, r)?))),
        None => {
            sig.check_index(i)?;
            sig.check_index(j)?;
            Ok(MapInput::Series(MatrixSeries::build_t(&y, Var::U, k).get(i - 1, j - 1).clone()))
        }
    }
}

pub fn map(kind: MapKind, sig: Signature, k: usize, expr: &str) -> Result<Value> {
    let f = Morphism::build(kind, sig, k)?;
    let image = match parse_map_input(expr, sig, k)? {
        MapInput::Element(x) => element_to_value(&f.apply(&x)?),
        MapInput::Series(s) => series_to_value(&f.apply_series(&s)?),
    };
    Ok(json!({
        "map": kind.to_string(),
        "source": sig.to_string(),
        "target": kind.target(sig).to_string(),
        "K": k,
        "image": image,
    }))
}

fn report_value(head: Map<String, Value>, rep: &VerifyReport) -> Value {
    let mut out = head;
    if let Value::Object(body) = serde_json::to_value(rep).expect("report serializes") {
        out.extend(body);
    }
    Value::Object(out)
}

/// The report of one suite and whether it passed.
pub fn verify(suite: Suite, mu: &Composition, k: usize) -> Result<(Value, bool)> {
    let rep = Verifier::new(mu, k)?.run(suite)?;
    let mut head = Map::new();
    head.insert("suite".into(), json!(suite.name()));
    head.insert("mu".into(), json!(mu.to_string()));
    head.insert("K".into(), json!(k));
    Ok((report_value(head, &rep), rep.ok()))
}

pub fn gr_check(mu: &Composition, k_max: usize) -> Result<(Value, bool)> {
    let rep = gr_bracket_check(mu, k_max)?;
    let mut head = Map::new();
    head.insert("mu".into(), json!(mu.to_string()));
    head.insert("k_max".into(), json!(k_max));
    Ok((report_value(head, &rep), rep.ok()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PbwCheck {
    Rank,
    Span,
    Both,
}

impl FromStr for PbwCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rank" => Ok(PbwCheck::Rank),
            "span" => Ok(PbwCheck::Span),
            "both" => Ok(PbwCheck::Both),
            _ => Err(Error::Parse(format!("unknown check {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PbwSummary {
    pub mu: String,
    pub family: String,
    pub deg: usize,
    pub len: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub count: usize,
    pub rank: Option<usize>,
    pub span_targets: Option<usize>,
    pub span_failures: Option<usize>,
}

impl PbwSummary {
    pub fn ok(&self) -> bool {
        self.rank.is_none_or(|r| r == self.count) && self.span_failures.is_none_or(|f| f == 0)
    }
}

pub fn pbw(mu: &Composition, deg: usize, len: usize, k: usize, family: Family, check: PbwCheck) -> Result<PbwSummary> {
    let monos = enumerate_pbw(mu, deg, len, family);
    let tk = PbwToolkit::new(mu, k)?;
    let mut out = PbwSummary {
        mu: mu.to_string(),
        family: family.to_string(),
        deg,
        len,
        k,
        count: monos.len(),
        rank: None,
        span_targets: None,
        span_failures: None,
    };
    if check != PbwCheck::Span {
        out.rank = Some(tk.independence(&monos)?.rank);
    }
    if check != PbwCheck::Rank {
        let rep = tk.spanning(deg, len)?;
        out.span_targets = Some(rep.total);
        out.span_failures = Some(rep.failed);
    }
    Ok(out)
}

fn elem_json(words: &[(&str, &[[i64; 3]])]) -> String {
    let terms: Vec<Value> = words.iter().map(|(c, w)| json!({"coeff": c, "word": w})).collect();
    json!({ "terms": terms }).to_string()
}

/// Golden outputs for the regression corpus, keyed by file stem.
pub fn fixtures() -> Result<Vec<(String, Value)>> {
    let s11 = Signature::new(1, 1)?;
    let mu = |s: &str| s.parse::<Composition>();
    let mut out: Vec<(String, Value)> = vec![];
    let mut push = |name: &str, v: Value| out.push((name.to_string(), v));

    push("nf-odd-pair", normal_form(s11, &elem_json(&[("1", &[[2, 1, 1], [1, 2, 1]])]))?);
    push("nf-commuting", normal_form(s11, &elem_json(&[("1", &[[2, 2, 1], [1, 1, 1]])]))?);
    push("nf-odd-square", normal_form(s11, &elem_json(&[("1", &[[1, 2, 1], [1, 2, 1]])]))?);
    push("nf-empty", normal_form(s11, r#"{"terms": []}"#)?);
    push("gauss-1-1-K2", gauss(&mu("1|1")?, 2)?);
    push("gauss-1,1-1-K2", gauss(&mu("1,1|1")?, 2)?);
    push("map-zeta-t11-K2", map(MapKind::Zeta, s11, 2, "t11")?);
    push("map-rho-t11-K1", map(MapKind::Rho, s11, 1, "t11^(1)")?);
    push("map-psi1-t11-K2", map(MapKind::Psi(1), s11, 2, "t11")?);
    push("map-omega-t12-K2", map(MapKind::Omega, s11, 2, "t12")?);
    for (suite, m, k) in [
        (Suite::Thm73, "1|1", 3),
        (Suite::Mn11, "1|1", 3),
        (Suite::All, "1,1|1", 2),
    ] {
        push(&format!("verify-{suite}-{m}-K{k}").replace('|', "-"), verify(suite, &mu(m)?, k)?.0);
    }
    push("gr-1-1-k2", gr_check(&mu("1|1")?, 2)?.0);
    for (m, deg, len, k) in [("1|1", 0, 1, 1), ("1|1", 1, 2, 4), ("1,1|1", 1, 2, 4)] {
        let s = pbw(&mu(m)?, deg, len, k, Family::Full, PbwCheck::Both)?;
        let name = format!("pbw-{m}-deg{deg}-len{len}-K{k}").replace('|', "-");
        push(&name, serde_json::to_value(s).expect("summary serializes"));
    }
    Ok(out)
}
