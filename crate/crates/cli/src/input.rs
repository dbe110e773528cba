//! Input ingestion: integer lists, point files, group-ring and decomposition
//! files, and the small polynomial grammar they share.

use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use purecone_core::exactcore::{BinPoly, GF2Poly, Monomial};
use purecone_core::intpoly::{KPoly, RatFunc2};
use purecone_core::pureray::{BettiPoint, DegreeSequence};
use serde::Deserialize;
use serde_json::Value;

use crate::error::CliError;

fn input_err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))
}

/// One point request: `{"d": [...], "beta": [...]?, "n_vars": k?, "lie_dim": k?}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointInput {
    pub d: Vec<i64>,
    #[serde(default)]
    pub beta: Option<Vec<Value>>,
    #[serde(default)]
    pub n_vars: Option<u32>,
    #[serde(default)]
    pub lie_dim: Option<u32>,
}

impl PointInput {
    pub fn degrees(&self) -> Result<DegreeSequence, CliError> {
        Ok(DegreeSequence::new(self.d.clone())?)
    }

    pub fn point(&self) -> Result<Option<BettiPoint>, CliError> {
        let Some(raw) = &self.beta else { return Ok(None) };
        let entries = raw.iter().map(json_bigint).collect::<Result<Vec<_>, _>>()?;
        Ok(Some(BettiPoint::new(entries)?))
    }
}

fn json_bigint(v: &Value) -> Result<BigInt, CliError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => return Err(input_err(format!("expected an integer, found {other}"))),
    };
    text.trim()
        .parse()
        .map_err(|_| input_err(format!("not an integer: {text}")))
}

pub fn parse_point_input(text: &str) -> Result<PointInput, CliError> {
    Ok(serde_json::from_str(text)?)
}

/// JSON lines; blank lines are skipped.
pub fn parse_batch(text: &str) -> Result<Vec<PointInput>, CliError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| input_err(format!("line {}: {e}", i + 1)))
        })
        .collect()
}

pub fn parse_big_list(s: &str) -> Result<Vec<BigInt>, CliError> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse()
                .map_err(|_| input_err(format!("not an integer: {x:?}")))
        })
        .collect()
}

/// Parses GF(2) polynomials such as `x^2*y + y + 1` over the given
/// variables. Products use `*`; terms are joined with `+`.
pub fn parse_gf2_poly(text: &str, vars: &[String]) -> Result<GF2Poly, CliError> {
    let nvars = vars.len();
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(input_err("empty polynomial"));
    }
    let mut poly = GF2Poly::zero(nvars);
    for term in cleaned.split('+') {
        if term.is_empty() {
            return Err(input_err(format!("dangling '+' in {text:?}")));
        }
        let mut exps = vec![0u32; nvars];
        let mut zero = false;
        for factor in term.split('*') {
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let e: u32 = e.parse().map_err(|_| input_err(format!("bad exponent in {factor:?}")))?;
                    (n, e)
                }
                None => (factor, 1),
            };
            match name {
                "1" => {}
                "0" => zero = true,
                _ => {
                    let i = vars
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| input_err(format!("unknown variable {name:?} in {text:?}")))?;
                    exps[i] += exp;
                }
            }
        }
        if !zero {
            poly.toggle(Monomial::from_exponents(exps));
        }
    }
    Ok(poly)
}

fn parse_t_poly(text: &str) -> Result<BinPoly, CliError> {
    let p = parse_gf2_poly(text, &["t".to_string()])?;
    let mut out = BinPoly::zero();
    for m in p.terms() {
        out = &out + &BinPoly::monomial(m.exponents()[0] as usize);
    }
    Ok(out)
}

/// Group-ring verification input.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRingInput {
    pub variables: Vec<String>,
    #[serde(default)]
    pub m: Option<usize>,
    pub generators: Vec<String>,
    pub degree_bound: u32,
}

/// Parsed generators, ready for the group-ring routines.
#[derive(Debug, Clone)]
pub struct GroupRingSpec {
    pub variables: Vec<String>,
    pub generators: Vec<GF2Poly>,
    pub degree_bound: u32,
}

pub const MAX_GROUPRING_BOUND: u32 = 8;

pub fn parse_groupring(text: &str) -> Result<GroupRingSpec, CliError> {
    let raw: GroupRingInput = serde_json::from_str(text)?;
    if raw.generators.is_empty() {
        return Err(input_err("at least one generator is required"));
    }
    if let Some(m) = raw.m {
        if m != raw.generators.len() {
            return Err(input_err(format!("m = {m} but {} generators given", raw.generators.len())));
        }
    }
    if raw.generators.len() > 8 {
        return Err(input_err("at most 8 generators are supported"));
    }
    if raw.degree_bound > MAX_GROUPRING_BOUND {
        return Err(input_err(format!("degree_bound must be at most {MAX_GROUPRING_BOUND}")));
    }
    for (i, v) in raw.variables.iter().enumerate() {
        let valid = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid || raw.variables[..i].contains(v) {
            return Err(input_err(format!("invalid or repeated variable name {v:?}")));
        }
    }
    let generators = raw
        .generators
        .iter()
        .map(|g| parse_gf2_poly(g, &raw.variables))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupRingSpec { variables: raw.variables, generators, degree_bound: raw.degree_bound })
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Text(String),
    Fraction { num: String, #[serde(default)] den: Option<String> },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum RawKPoly {
    Named(String),
    Coeffs(Vec<RawCoeff>),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    f: RawKPoly,
    h: RawKPoly,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDecomposition {
    name: String,
    terms: Vec<RawTerm>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDecompositionFile {
    decompositions: Vec<RawDecomposition>,
}

/// A candidate `P(X,Y) = Σ f_i(X) h_i(Y)`.
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub name: String,
    pub terms: Vec<(KPoly, KPoly)>,
}

fn coeff_from_raw(c: &RawCoeff) -> Result<RatFunc2, CliError> {
    let (num, den) = match c {
        RawCoeff::Text(t) => (t.as_str(), "1"),
        RawCoeff::Fraction { num, den } => (num.as_str(), den.as_deref().unwrap_or("1")),
    };
    Ok(RatFunc2::new(parse_t_poly(num)?, parse_t_poly(den)?)?)
}

fn kpoly_from_raw(p: &RawKPoly) -> Result<KPoly, CliError> {
    match p {
        RawKPoly::Named(name) => match name.as_str() {
            "X" => Ok(KPoly::x()),
            "q" => Ok(KPoly::q()),
            "g" => Ok(KPoly::g()),
            "0" => Ok(KPoly::zero()),
            "1" => Ok(KPoly::one()),
            other => Err(input_err(format!("unknown polynomial name {other:?} (use X, q, g, 0, 1 or a coefficient list)"))),
        },
        RawKPoly::Coeffs(cs) => Ok(KPoly::new(cs.iter().map(coeff_from_raw).collect::<Result<_, _>>()?)),
    }
}

/// Decomposition file:
/// `{"decompositions": [{"name": .., "terms": [{"f": KPOLY, "h": KPOLY}]}]}`
/// where `KPOLY` is one of `"X"`, `"q"`, `"g"`, `"0"`, `"1"`, or a list of
/// coefficients (lowest power of `X` first), each either a polynomial in `t`
/// such as `"t^2 + t"` or `{"num": "...", "den": "..."}`.
pub fn parse_decompositions(text: &str) -> Result<Vec<Decomposition>, CliError> {
    let raw: RawDecompositionFile = serde_json::from_str(text)?;
    raw.decompositions
        .iter()
        .map(|d| {
            let terms = d
                .terms
                .iter()
                .map(|t| Ok((kpoly_from_raw(&t.f)?, kpoly_from_raw(&t.h)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            Ok(Decomposition { name: d.name.clone(), terms })
        })
        .collect()
}

pub const BUNDLED_DECOMPOSITIONS: &str = include_str!("../data/decompositions.json");
