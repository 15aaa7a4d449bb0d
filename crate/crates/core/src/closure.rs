//! Closures of the basic webs, colored HOMFLY polynomials of 2-bridge links
//! and the color-stable HOMFLY polynomial.
//!
//! A tangle whose expansion has odd length is closed by joining its left ends
//! and its right ends; even length joins top ends and bottom ends. Closure
//! values are products of three quantum binomials. The `UP` family is
//! `{N-k, i}{j, k}{N, j}`; the other families follow from it by the
//! symmetries of the basic webs (see [`closure_value`]).

use crate::error::{Error, Result};
use crate::qsymbols::{
    qbinom, substitute, Binding, Bindings, ExponentVector, LaurentPoly4, QLaurent, QRational, StablePoly,
};
use crate::tangle::{BoundaryConfig, TangleDesc};
use crate::twist::{ComplexState, TwistEngine};
use serde::{Deserialize, Serialize};
use std::fmt;

/// How the four ends of a tangle are joined.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClosureKind {
    /// Left ends together, right ends together.
    LeftRight,
    /// Top ends together, bottom ends together.
    TopBottom,
}

impl ClosureKind {
    pub fn for_tangle(t: &TangleDesc) -> Self {
        match &t.cf {
            Some(cf) if cf.len() % 2 == 0 => ClosureKind::TopBottom,
            _ => ClosureKind::LeftRight,
        }
    }
}

fn check_order(i: u32, j: u32, k: u32, n: u32) -> Result<()> {
    if !(j <= i && i <= n) {
        return Err(Error::InvalidArgument(format!("colors need j <= i <= N, got i={i} j={j} N={n}")));
    }
    let _ = k;
    Ok(())
}

/// `{N-k, i}{j, k}{N, j}`, the closure of `UP[i, j, k]`; zero for `k > j`.
pub fn closed_up_value(i: u32, j: u32, k: u32, n: u32) -> Result<QLaurent> {
    check_order(i, j, k, n)?;
    let (i, j, k, n) = (i as i64, j as i64, k as i64, n as i64);
    Ok(&(&qbinom(n - k, i) * &qbinom(j, k)) * &qbinom(n, j))
}

fn unavailable(c: BoundaryConfig, kind: ClosureKind, i: u32, j: u32) -> Error {
    Error::ClosureUnavailable(format!(
        "{c} with {kind} closure is not an oriented link for colors i={i}, j={j} (try the other start)"
    ))
}

impl fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClosureKind::LeftRight => "left-right",
            ClosureKind::TopBottom => "top-bottom",
        })
    }
}

/// Unreduced closure value of the weight-`k` web of configuration `c`.
///
/// Left-right closures: `UP` as above, `OP` gives `{N-k, N-j}{i, k}{N, i}`,
/// and for a knot (`i = j`) `UPs` and `OPs` take the `UP` and `OP` values. Top-bottom closures are left-right closures of
/// the rotated web, which exchanges weight `k` with `j-k`: `RI ↔ UP`,
/// `RIs ↔ UPs`, `OPs ↔ OP` and `OP ↔ OPs`.
pub fn closure_value(c: BoundaryConfig, kind: ClosureKind, i: u32, j: u32, k: u32, n: u32) -> Result<QLaurent> {
    use BoundaryConfig::*;
    check_order(i, j, k, n)?;
    if k > j {
        return Ok(QLaurent::zero());
    }
    let (ii, jj, kk, nn) = (i as i64, j as i64, k as i64, n as i64);
    let three =
        |a: (i64, i64), b: (i64, i64), c: (i64, i64)| &(&qbinom(a.0, a.1) * &qbinom(b.0, b.1)) * &qbinom(c.0, c.1);
    match (kind, c) {
        (ClosureKind::LeftRight, UP) => Ok(three((nn - kk, ii), (jj, kk), (nn, jj))),
        (ClosureKind::LeftRight, OP) => Ok(three((nn - kk, nn - jj), (ii, kk), (nn, ii))),
        (ClosureKind::LeftRight, UPs) if i == j => Ok(three((nn - kk, ii), (jj, kk), (nn, jj))),
        (ClosureKind::LeftRight, OPs) if i == j => Ok(three((nn - kk, nn - ii), (ii, kk), (nn, ii))),
        (ClosureKind::TopBottom, RI) => closure_value(UP, ClosureKind::LeftRight, i, j, j - k, n),
        (ClosureKind::TopBottom, RIs) if i == j => closure_value(UPs, ClosureKind::LeftRight, i, j, j - k, n),
        (ClosureKind::TopBottom, OPs) => closure_value(OP, ClosureKind::LeftRight, i, j, j - k, n),
        (ClosureKind::TopBottom, OP) if i == j => closure_value(OPs, ClosureKind::LeftRight, i, j, j - k, n),
        _ => Err(unavailable(c, kind, i, j)),
    }
}

/// `∏_{l=1}^{c} (x q^{b-l+1} - x^{-1} q^{-b+l-1}) / (q^l - q^{-l})` with `x = a^α s^β`:
/// the stable form of `{αN + β(i-j) + b, c}`.
fn stable_binomial(alpha: i64, beta: i64, b: i64, c: i64) -> StablePoly {
    (1..=c)
        .map(|l| {
            let den = QRational::new(QLaurent::one(), QLaurent::from_terms([(l, 1.into()), (-l, (-1).into())]))
                .expect("nonzero");
            let mut f = StablePoly::monomial(alpha, beta, QRational::from(QLaurent::q_pow(b - l + 1)));
            f.add_term((-alpha, -beta), -QRational::from(QLaurent::q_pow(-b + l - 1)));
            f.scale(&den)
        })
        .product()
}

/// Reduced stable closure of `UP[·, j, k]`:
/// `{-k, j-k}_a · ∏_{l=1}^{k} (a s^{-1} q^{-j-l+1} - a^{-1} s q^{j+l-1}) / (q^l - q^{-l})`,
/// i.e. `{N-k, j-k}{N-i, k}` under `a = q^N`, `s = q^{i-j}`.
pub fn reduced_stable_closure(j: u32, k: u32) -> StablePoly {
    if k > j {
        return StablePoly::zero();
    }
    let (j, k) = (j as i64, k as i64);
    &stable_binomial(1, 0, -k, j - k) * &stable_binomial(1, -1, -j, k)
}

/// Reduced stable closure value of weight `k` for a two-component closure.
///
/// `OP` reduces to `{N-k, j-k}{i, k}`; top-bottom closures rotate as in
/// [`closure_value`].
pub fn stable_closure_value(c: BoundaryConfig, kind: ClosureKind, j: u32, k: u32) -> Result<StablePoly> {
    use BoundaryConfig::*;
    if k > j {
        return Ok(StablePoly::zero());
    }
    let (jj, kk) = (j as i64, k as i64);
    match (kind, c) {
        (ClosureKind::LeftRight, UP) => Ok(reduced_stable_closure(j, k)),
        (ClosureKind::LeftRight, OP) => Ok(&stable_binomial(1, 0, -kk, jj - kk) * &stable_binomial(0, 1, jj, kk)),
        (ClosureKind::TopBottom, RI) => stable_closure_value(UP, ClosureKind::LeftRight, j, j - k),
        (ClosureKind::TopBottom, OPs) => stable_closure_value(OP, ClosureKind::LeftRight, j, j - k),
        _ => Err(Error::ClosureUnavailable(format!(
            "{c} with {kind} closure is not a two-component link with a free color"
        ))),
    }
}

/// A link invariant up to sign and a power of `q`, in canonical form
/// (lowest exponent 0, positive lowest coefficient) plus the removed factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkValue {
    pub poly: QLaurent,
    pub shift: i64,
    pub sign: i32,
}

impl LinkValue {
    fn from_raw(p: &QLaurent) -> Self {
        let (n, e) = p.normalize_up_to_monomial();
        let sign = if n.trailing().is_some_and(|(_, c)| c < &0.into()) { -1 } else { 1 };
        let poly = if sign < 0 { -n } else { n };
        LinkValue { poly, shift: e, sign }
    }

    /// The un-normalized value.
    pub fn raw(&self) -> QLaurent {
        self.poly.mul_monomial(self.shift).scale(&self.sign.into())
    }
}

fn decategorify(p: &LaurentPoly4, n: u32, i: u32, j: u32) -> QLaurent {
    let b = Bindings::color(n as i64, i as i64 - j as i64).t(Binding::Sign(-1));
    substitute(p, &b).and_then(|s| s.into_q()).expect("full specialization is a polynomial in q")
}

/// Unnormalized colored HOMFLY value from a twist-engine state.
pub fn colored_homfly_of_state(
    st: &ComplexState,
    kind: ClosureKind,
    i: u32,
    j: u32,
    n: u32,
    reduced: bool,
) -> Result<QLaurent> {
    check_order(i, j, 0, n)?;
    if st.color_j != j {
        return Err(Error::InvalidArgument("state color differs from j".into()));
    }
    let mut acc = QLaurent::zero();
    for (k, c) in st.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = closure_value(st.config, kind, i, j, k as u32, n)?;
        acc += &decategorify(c, n, i, j) * &v;
    }
    if reduced {
        acc = acc.div_exact(&qbinom(n as i64, i as i64))?;
    }
    Ok(acc)
}

/// `(Λ^i, Λ^j)`-colored `sl_N` HOMFLY polynomial of the closure, up to sign and monomial.
pub fn colored_homfly(
    t: &TangleDesc,
    i: u32,
    j: u32,
    n: u32,
    start: BoundaryConfig,
    reduced: bool,
) -> Result<LinkValue> {
    if j < 1 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    let st = TwistEngine::new().run(&t.word, j, start);
    let raw = colored_homfly_of_state(&st, ClosureKind::for_tangle(t), i, j, n, reduced)?;
    Ok(LinkValue::from_raw(&raw))
}

/// Unnormalized color-stable value from a state.
pub fn color_stable_of_state(st: &ComplexState, kind: ClosureKind) -> Result<StablePoly> {
    let j = st.color_j;
    let mut acc = StablePoly::zero();
    for (k, c) in st.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let v = stable_closure_value(st.config, kind, j, k as u32)?;
        let c1 = substitute(c, &Bindings::new().t(Binding::Sign(-1)))?.into_poly4()?;
        acc = &acc + &(&StablePoly::from_poly4(&c1)? * &v);
    }
    Ok(acc)
}

/// Color-stable HOMFLY polynomial, in canonical form up to sign and monomial,
/// with the removed monomial and sign.
pub fn color_stable_homfly(t: &TangleDesc, j: u32, start: BoundaryConfig) -> Result<(StablePoly, ExponentVector, i32)> {
    if j < 1 {
        return Err(Error::InvalidArgument("j must be at least 1".into()));
    }
    let st = TwistEngine::new().run(&t.word, j, start);
    Ok(color_stable_of_state(&st, ClosureKind::for_tangle(t))?.canonical_class())
}
