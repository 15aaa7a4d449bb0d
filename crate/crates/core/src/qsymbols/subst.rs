//! Exact substitution of `a, q, s, t` by powers of `q`, signs, or `u, v`.
//!
//! Bindings are simultaneous; a variable counts as remaining only if it is
//! unbound and actually occurs. `q`-powers appearing in an image are
//! themselves subject to the `q` binding (so `a ↦ q^N, q ↦ v` sends `a` to
//! `v^N`).

use super::laurent::{BiLaurent, LaurentPoly4, QLaurent};
use super::monomial::{ExponentVector, UV};
use super::rational::QRational;
use super::stable::StablePoly;
use super::upoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Binding {
    /// `x ↦ q^n`.
    QPow(i64),
    /// `x ↦ ±1`.
    Sign(i64),
    /// `s ↦ u/v`.
    UOverV,
    /// `q ↦ v`.
    V,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    pub a: Option<Binding>,
    pub q: Option<Binding>,
    pub s: Option<Binding>,
    pub t: Option<Binding>,
}

impl Bindings {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn a(mut self, b: Binding) -> Self {
        self.a = Some(b);
        self
    }

    pub fn q(mut self, b: Binding) -> Self {
        self.q = Some(b);
        self
    }

    pub fn s(mut self, b: Binding) -> Self {
        self.s = Some(b);
        self
    }

    pub fn t(mut self, b: Binding) -> Self {
        self.t = Some(b);
        self
    }

    /// `a = q^n`, `s = q^m`.
    pub fn color(n: i64, m: i64) -> Self {
        Self::new().a(Binding::QPow(n)).s(Binding::QPow(m))
    }

    /// `a = 1`, `s = u/v`, `q = v`.
    pub fn alexander() -> Self {
        Self::new().a(Binding::Sign(1)).s(Binding::UOverV).q(Binding::V)
    }

    fn validate(&self) -> Result<bool> {
        for (name, b) in [("a", self.a), ("s", self.s), ("t", self.t)] {
            match b {
                Some(Binding::Sign(c)) if c != 1 && c != -1 => {
                    return Err(Error::UnsupportedBinding(format!("{name} ↦ {c}: only ±1 constants")))
                }
                Some(Binding::V) => return Err(Error::UnsupportedBinding(format!("{name} ↦ v: only q may map to v"))),
                Some(Binding::UOverV) if name != "s" => {
                    return Err(Error::UnsupportedBinding(format!("{name} ↦ u/v: only s may map to u/v")))
                }
                _ => {}
            }
        }
        let to_v = match self.q {
            None | Some(Binding::Sign(1)) => false,
            Some(Binding::V) => true,
            Some(other) => return Err(Error::UnsupportedBinding(format!("q ↦ {other:?}: q binds only to v or 1"))),
        };
        if self.s == Some(Binding::UOverV) && !to_v {
            return Err(Error::UnsupportedBinding("s ↦ u/v requires q ↦ v".into()));
        }
        Ok(to_v)
    }
}

/// Result of substituting into a [`LaurentPoly4`]; the variant reflects which variables remain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Substituted {
    Poly4(LaurentPoly4),
    Q(QLaurent),
    UV(BiLaurent),
}

/// Result of substituting into a [`StablePoly`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubstitutedStable {
    Stable(StablePoly),
    Q(QRational),
    UV(BiLaurent),
}

impl Substituted {
    pub fn into_poly4(self) -> Result<LaurentPoly4> {
        match self {
            Substituted::Poly4(p) => Ok(p),
            Substituted::Q(p) => Ok(LaurentPoly4::from_q(&p)),
            Substituted::UV(_) => Err(Error::InvalidArgument("result lives in u, v".into())),
        }
    }

    pub fn into_q(self) -> Result<QLaurent> {
        match self {
            Substituted::Q(p) => Ok(p),
            _ => Err(Error::InvalidArgument("result is not a polynomial in q alone".into())),
        }
    }

    pub fn into_uv(self) -> Result<BiLaurent> {
        match self {
            Substituted::UV(p) => Ok(p),
            _ => Err(Error::InvalidArgument("result is not a polynomial in u, v".into())),
        }
    }
}

impl SubstitutedStable {
    pub fn into_q(self) -> Result<QRational> {
        match self {
            SubstitutedStable::Q(p) => Ok(p),
            _ => Err(Error::InvalidArgument("result is not a rational function of q".into())),
        }
    }

    pub fn into_uv(self) -> Result<BiLaurent> {
        match self {
            SubstitutedStable::UV(p) => Ok(p),
            _ => Err(Error::InvalidArgument("result is not a polynomial in u, v".into())),
        }
    }
}

/// Image of `x^e`: (sign, exponents of a, q, s, t, u) where `q` is the new variable.
fn image(b: Option<Binding>, own: usize, e: i64, acc: &mut [i64; 5], sign: &mut i64) {
    match b {
        None => acc[own] += e,
        Some(Binding::QPow(n)) => acc[1] += n * e,
        Some(Binding::Sign(c)) => {
            if c < 0 && e.rem_euclid(2) == 1 {
                *sign = -*sign;
            }
        }
        Some(Binding::UOverV) => {
            acc[4] += e;
            acc[1] -= e;
        }
        Some(Binding::V) => acc[1] += e,
    }
}

fn image_of(b: &Bindings, m: ExponentVector) -> ([i64; 5], i64) {
    let mut acc = [0i64; 5];
    let mut sign = 1;
    image(b.a, 0, m.e_a, &mut acc, &mut sign);
    image(b.s, 2, m.e_s, &mut acc, &mut sign);
    image(b.t, 3, m.e_t, &mut acc, &mut sign);
    // q itself: unbound or V keeps the exponent (as v); q ↦ 1 is applied afterwards.
    acc[1] += m.e_q;
    (acc, sign)
}

/// Substitutes into a polynomial in `a, q, s, t`; a ring homomorphism.
pub fn substitute(p: &LaurentPoly4, b: &Bindings) -> Result<Substituted> {
    let to_v = b.validate()?;
    let q_one = b.q == Some(Binding::Sign(1));
    let occurs = |f: fn(&ExponentVector) -> i64| p.terms().keys().any(|m| f(m) != 0);
    let all_bound = (b.a.is_some() || !occurs(|m| m.e_a))
        && (b.s.is_some() || !occurs(|m| m.e_s))
        && (b.t.is_some() || !occurs(|m| m.e_t));
    if to_v && !all_bound {
        return Err(Error::UnsupportedBinding("q ↦ v requires a, s and t to be bound".into()));
    }
    let mut out = LaurentPoly4::zero();
    let mut uv = BiLaurent::zero();
    for (m, c) in p.terms() {
        let (mut e, sign) = image_of(b, *m);
        if q_one {
            e[1] = 0;
        }
        let c: BigInt = c * sign;
        if to_v {
            uv.add_term(UV::new(e[4], e[1]), c);
        } else {
            out.add_term(ExponentVector::new(e[0], e[1], e[2], e[3]), c);
        }
    }
    Ok(if to_v {
        Substituted::UV(uv)
    } else if all_bound {
        Substituted::Q(out.map_terms(|m, c| (m.e_q, c.clone())))
    } else {
        Substituted::Poly4(out)
    })
}

fn lcm(a: &QLaurent, b: &QLaurent) -> QLaurent {
    let g = upoly::from_dense(&upoly::gcd(&upoly::to_dense(a), &upoly::to_dense(b)));
    a * &b.div_exact(&g).expect("gcd divides")
}

/// Substitutes into a stable polynomial (only `a`, `s`, `q` matter; `t` is ignored).
pub fn substitute_stable(p: &StablePoly, b: &Bindings) -> Result<SubstitutedStable> {
    let to_v = b.validate()?;
    let q_one = b.q == Some(Binding::Sign(1));
    let all_bound = (b.a.is_some() || p.terms().keys().all(|k| k.0 == 0)) && (b.s.is_some() || p.is_s_free());
    if to_v && !all_bound {
        return Err(Error::UnsupportedBinding("q ↦ v requires a and s to be bound".into()));
    }
    let mut stable = StablePoly::zero();
    let mut images: Vec<([i64; 5], i64, &QRational)> = Vec::new();
    for ((ea, es), c) in p.terms() {
        let (e, sign) = image_of(b, ExponentVector::new(*ea, 0, *es, 0));
        images.push((e, sign, c));
    }
    if to_v {
        let den = images.iter().fold(QLaurent::one(), |d, (_, _, c)| lcm(&d, c.denominator()));
        let mut num = BiLaurent::zero();
        for (e, sign, c) in &images {
            let part = c.numerator() * &den.div_exact(c.denominator())?;
            for (qe, qc) in part.terms() {
                num.add_term(UV::new(e[4], e[1] + qe), qc * *sign);
            }
        }
        let d = den.map_terms(|qe, c| (UV::new(0, qe), c.clone()));
        return num.div_exact(&d).map(SubstitutedStable::UV).map_err(|_| {
            Error::InexactDivision("specialization at s = u/v, q = v is not a Laurent polynomial".into())
        });
    }
    if all_bound {
        let mut acc = QRational::zero();
        for (e, sign, c) in &images {
            acc = &acc + &(&c.shift(e[1]) * &QRational::from(*sign));
        }
        if q_one {
            let v = acc.eval_one()?;
            return Ok(SubstitutedStable::Q(QRational::new(
                QLaurent::constant(v.numer().clone()),
                QLaurent::constant(v.denom().clone()),
            )?));
        }
        return Ok(SubstitutedStable::Q(acc));
    }
    if q_one {
        return Err(Error::UnsupportedBinding("q ↦ 1 on a stable polynomial requires a and s bound".into()));
    }
    for (e, sign, c) in images {
        stable.add_term((e[0], e[2]), &c.shift(e[1]) * &QRational::from(sign));
    }
    Ok(SubstitutedStable::Stable(stable))
}
