//! Text and JSON renderings.
//!
//! Text: terms in ascending monomial order joined by ` + ` / ` - `, each term
//! `coeff*x^e*y*...` with variables in fixed order; unit coefficients are
//! omitted on non-constant terms, exponent 1 has no caret, zero prints `0`.
//!
//! JSON: an array of `{"coeff": "<decimal>", "<var>": <exp>, ...}` objects
//! listing every variable, in the same term order as the text form.

use super::laurent::Laurent;
use super::monomial::Monomial;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde_json::{Map, Value};
use std::fmt;
use std::str::FromStr;

fn factors<M: Monomial>(m: M) -> String {
    M::VARS
        .iter()
        .zip(m.exps())
        .filter(|(_, e)| *e != 0)
        .map(|(v, e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect::<Vec<_>>()
        .join("*")
}

impl<M: Monomial> fmt::Display for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let vars = factors(*m);
            if vars.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{vars}")?;
            } else {
                write!(f, "{a}*{vars}")?;
            }
        }
        Ok(())
    }
}

impl<M: Monomial> fmt::Debug for Laurent<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_term<M: Monomial>(s: &str) -> Result<(M, BigInt)> {
    let bad = || Error::Parse(format!("malformed term `{s}`"));
    let mut coeff = BigInt::one();
    let mut exps = vec![0i64; M::VARS.len()];
    for (i, f) in s.split('*').enumerate() {
        if f.is_empty() {
            return Err(bad());
        }
        if i == 0 && f.chars().all(|c| c.is_ascii_digit()) {
            coeff = f.parse().map_err(|_| bad())?;
            continue;
        }
        let (name, e) = match f.split_once('^') {
            Some((n, e)) => (n, e.parse::<i64>().map_err(|_| bad())?),
            None => (f, 1),
        };
        let idx = M::VARS
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
        exps[idx] += e;
    }
    Ok((M::from_exps(&exps), coeff))
}

impl<M: Monomial> FromStr for Laurent<M> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Laurent::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut sign = BigInt::one();
        for i in 0..=bytes.len() {
            let boundary =
                i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > 0 && bytes[i - 1] != b'^');
            if !boundary {
                continue;
            }
            let mut tok = &s[start..i];
            let mut sg = sign.clone();
            if let Some(rest) = tok.strip_prefix('-') {
                sg = -sg;
                tok = rest;
            } else if let Some(rest) = tok.strip_prefix('+') {
                tok = rest;
            }
            let (m, c) = parse_term::<M>(tok)?;
            out.add_term(m, c * sg);
            if i < bytes.len() {
                sign = if bytes[i] == b'-' { -BigInt::one() } else { BigInt::one() };
                start = i + 1;
            }
        }
        Ok(out)
    }
}

impl<M: Monomial> Laurent<M> {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .iter()
                .map(|(m, c)| {
                    let mut o = Map::new();
                    o.insert("coeff".into(), Value::String(c.to_string()));
                    for (v, e) in M::VARS.iter().zip(m.exps()) {
                        o.insert(v.to_string(), Value::from(e));
                    }
                    Value::Object(o)
                })
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected a term array".into()))?;
        let mut out = Laurent::zero();
        for t in arr {
            let c: BigInt = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term without string coeff".into()))?
                .parse()
                .map_err(|_| Error::Parse("bad coefficient".into()))?;
            let exps = M::VARS.iter().map(|v| t.get(*v).and_then(Value::as_i64).unwrap_or(0)).collect::<Vec<_>>();
            out.add_term(M::from_exps(&exps), c);
        }
        Ok(out)
    }
}
