//! Continued fractions, twist words and the boundary-configuration automaton.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// `[a_1, …, a_r]`, all parts positive, denoting `a_1 + 1/(a_2 + 1/(⋯ + 1/a_r))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContinuedFraction {
    parts: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidFraction("continued fraction must be nonempty".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidFraction("continued fraction parts must be >= 1".into()));
        }
        Ok(ContinuedFraction { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Canonical means the last part is at least 2, or the expansion is `[1]`.
    pub fn is_canonical(&self) -> bool {
        *self.parts.last().unwrap() >= 2 || self.parts == [1]
    }

    /// The other expansion of the same fraction: `[…, a_r - 1, 1]` if `a_r >= 2`,
    /// `[…, a_{r-1} + 1]` if `a_r = 1` and `r >= 2`; `None` for `[1]`.
    pub fn alternate(&self) -> Option<Self> {
        let mut v = self.parts.clone();
        let last = *v.last().unwrap();
        if last >= 2 {
            *v.last_mut().unwrap() -= 1;
            v.push(1);
        } else if v.len() >= 2 {
            v.pop();
            *v.last_mut().unwrap() += 1;
        } else {
            return None;
        }
        Some(ContinuedFraction { parts: v })
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u64::to_string).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Parses `3,2` (brackets optional).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidFraction(format!("bad continued-fraction part `{x}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        ContinuedFraction::new(parts)
    }
}

/// Value `(p, q)` of a continued fraction, coprime.
pub fn cf_to_fraction(cf: &ContinuedFraction) -> (u64, u64) {
    let (mut p, mut q) = (1u64, 0u64);
    for &a in cf.parts.iter().rev() {
        (p, q) = (a * p + q, p);
    }
    (p, q)
}

/// Euclidean expansion of `p/q`; requires `p > q >= 1` and `gcd(p, q) = 1`.
pub fn fraction_to_cf(p: u64, q: u64) -> Result<ContinuedFraction> {
    if q == 0 || p <= q {
        return Err(Error::InvalidFraction(format!("{p}/{q}: need p > q >= 1")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidFraction(format!("{p}/{q}: p and q must be coprime")));
    }
    let (mut a, mut b) = (p, q);
    let mut parts = Vec::new();
    while b != 0 {
        parts.push(a / b);
        (a, b) = (b, a % b);
    }
    ContinuedFraction::new(parts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwistMove {
    Top,
    Right,
}

impl fmt::Display for TwistMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwistMove::Top => "T",
            TwistMove::Right => "R",
        })
    }
}

pub type TwistWord = Vec<TwistMove>;

/// `a_r` top twists, then `a_{r-1}` right twists, alternating down to `a_1`.
pub fn twist_word(cf: &ContinuedFraction) -> TwistWord {
    let r = cf.parts.len();
    let mut w = Vec::new();
    for (n, &a) in cf.parts.iter().rev().enumerate() {
        let m = if n % 2 == 0 { TwistMove::Top } else { TwistMove::Right };
        w.extend(std::iter::repeat_n(m, a as usize));
    }
    debug_assert_eq!(w.len() as u64, cf.parts[..r].iter().sum::<u64>());
    w
}

/// The six boundary configurations of the basic webs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundaryConfig {
    UP,
    UPs,
    OP,
    OPs,
    RI,
    RIs,
}

impl BoundaryConfig {
    pub const ALL: [BoundaryConfig; 6] = [Self::UP, Self::UPs, Self::OP, Self::OPs, Self::RI, Self::RIs];

    pub fn name(self) -> &'static str {
        match self {
            Self::UP => "UP",
            Self::UPs => "UPs",
            Self::OP => "OP",
            Self::OPs => "OPs",
            Self::RI => "RI",
            Self::RIs => "RIs",
        }
    }
}

impl fmt::Display for BoundaryConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryConfig {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown configuration `{s}`")))
    }
}

/// One step of the hexagonal automaton. Each move is an involution.
pub fn config_step(c: BoundaryConfig, m: TwistMove) -> BoundaryConfig {
    use BoundaryConfig::*;
    match (m, c) {
        (TwistMove::Top, UP) => UPs,
        (TwistMove::Top, UPs) => UP,
        (TwistMove::Top, OP) => RIs,
        (TwistMove::Top, RIs) => OP,
        (TwistMove::Top, RI) => OPs,
        (TwistMove::Top, OPs) => RI,
        (TwistMove::Right, UP) => OP,
        (TwistMove::Right, OP) => UP,
        (TwistMove::Right, UPs) => OPs,
        (TwistMove::Right, OPs) => UPs,
        (TwistMove::Right, RI) => RIs,
        (TwistMove::Right, RIs) => RI,
    }
}

/// Folds [`config_step`] over a word.
pub fn final_config(start: BoundaryConfig, word: &[TwistMove]) -> BoundaryConfig {
    word.iter().fold(start, |c, &m| config_step(c, m))
}

/// A positive rational tangle `T(p, q)` with its expansion and twist word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TangleDesc {
    pub p: u64,
    pub q: u64,
    /// `None` for the trivial tangles `T(1, 0)` and `T(0, 1)`.
    pub cf: Option<ContinuedFraction>,
    pub word: TwistWord,
}

impl TangleDesc {
    pub fn from_cf(cf: ContinuedFraction) -> Self {
        let (p, q) = cf_to_fraction(&cf);
        let word = twist_word(&cf);
        TangleDesc { p, q, cf: Some(cf), word }
    }

    /// Uses the Euclidean expansion; `q = 1` gives `[p]`.
    pub fn from_fraction(p: u64, q: u64) -> Result<Self> {
        if (p, q) == (1, 0) {
            return Ok(Self::trivial_horizontal());
        }
        if (p, q) == (0, 1) {
            return Ok(Self::trivial_vertical());
        }
        Ok(Self::from_cf(fraction_to_cf(p, q)?))
    }

    /// `T(1, 0)`, the starting tangle of every twist word.
    pub fn trivial_horizontal() -> Self {
        TangleDesc { p: 1, q: 0, cf: None, word: vec![] }
    }

    /// `T(0, 1)`.
    pub fn trivial_vertical() -> Self {
        TangleDesc { p: 0, q: 1, cf: None, word: vec![] }
    }

    /// The tangle given by the alternate expansion of the same fraction.
    pub fn alternate(&self) -> Option<Self> {
        self.cf.as_ref()?.alternate().map(Self::from_cf)
    }

    pub fn final_config(&self, start: BoundaryConfig) -> BoundaryConfig {
        final_config(start, &self.word)
    }
}

impl fmt::Display for TangleDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.cf {
            Some(cf) => write!(f, "T({},{}) {}", self.p, self.q, cf),
            None => write!(f, "T({},{})", self.p, self.q),
        }
    }
}

/// Parses `P/Q`.
pub fn parse_fraction(s: &str) -> Result<(u64, u64)> {
    let (a, b) = s.split_once('/').ok_or_else(|| Error::InvalidFraction(format!("`{s}`: expected P/Q")))?;
    let p = a.trim().parse::<u64>().map_err(|_| Error::InvalidFraction(format!("`{s}`: bad numerator")))?;
    let q = b.trim().parse::<u64>().map_err(|_| Error::InvalidFraction(format!("`{s}`: bad denominator")))?;
    Ok((p, q))
}
