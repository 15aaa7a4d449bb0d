use super::laurent::{LaurentPoly4, QLaurent};
use super::monomial::ExponentVector;
use super::rational::QRational;
use crate::error::{Error, Result};
use num_traits::Signed;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in `a, s` with coefficients in `Q(q)`.
/// Keys are `(e_a, e_s)`; no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct StablePoly {
    terms: BTreeMap<(i64, i64), QRational>,
}

impl StablePoly {
    pub fn zero() -> Self {
        StablePoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, QRational::one())
    }

    pub fn monomial(e_a: i64, e_s: i64, c: QRational) -> Self {
        let mut p = Self::zero();
        p.add_term((e_a, e_s), c);
        p
    }

    pub fn add_term(&mut self, k: (i64, i64), c: QRational) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&k) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(k, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<(i64, i64), QRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e_a: i64, e_s: i64) -> QRational {
        self.terms.get(&(e_a, e_s)).cloned().unwrap_or_else(QRational::zero)
    }

    /// True iff no term involves `s`.
    pub fn is_s_free(&self) -> bool {
        self.terms.keys().all(|(_, s)| *s == 0)
    }

    /// Embeds a polynomial in `a, q, s`; fails if `t` occurs.
    pub fn from_poly4(p: &LaurentPoly4) -> Result<Self> {
        let mut buckets: BTreeMap<(i64, i64), QLaurent> = BTreeMap::new();
        for (m, c) in p.terms() {
            if m.e_t != 0 {
                return Err(Error::InvalidArgument("t occurs in a stable polynomial".into()));
            }
            buckets.entry((m.e_a, m.e_s)).or_default().add_term(m.e_q, c.clone());
        }
        let mut out = Self::zero();
        for (k, v) in buckets {
            out.add_term(k, QRational::from(v));
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QRational) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(*k, v * c);
        }
        out
    }

    /// Multiplies by `a^e_a q^e_q s^e_s`.
    pub fn shift(&self, e_a: i64, e_q: i64, e_s: i64) -> Self {
        StablePoly { terms: self.terms.iter().map(|((a, s), c)| ((a + e_a, s + e_s), c.shift(e_q))).collect() }
    }

    /// Representative of the class up to sign and monomial: minimum `a`- and
    /// `s`-exponents 0, and the lowest-key coefficient's numerator has lowest
    /// exponent 0 and positive lowest coefficient. Returns the removed
    /// monomial (`e_t = 0`) and sign.
    pub fn canonical_class(&self) -> (Self, ExponentVector, i32) {
        let Some(first) = self.terms.keys().next() else {
            return (Self::zero(), ExponentVector::default(), 1);
        };
        let ma = self.terms.keys().map(|k| k.0).min().unwrap();
        let ms = self.terms.keys().map(|k| k.1).min().unwrap();
        let lead = &self.terms[first];
        let (e, c) = lead.numerator().trailing().expect("nonzero");
        let sign = if c.is_negative() { -1 } else { 1 };
        let mut p = self.shift(-ma, -e, -ms);
        if sign < 0 {
            p = -p;
        }
        (p, ExponentVector::new(ma, e, ms, 0), sign)
    }

    pub fn equal_up_to_monomial(&self, other: &Self, allow_sign: bool) -> bool {
        let (a, _, sa) = self.canonical_class();
        let (b, _, sb) = other.canonical_class();
        a == b && (allow_sign || sa == sb)
    }
}

impl Add<&StablePoly> for &StablePoly {
    type Output = StablePoly;
    fn add(self, o: &StablePoly) -> StablePoly {
        let mut r = self.clone();
        for (k, v) in &o.terms {
            r.add_term(*k, v.clone());
        }
        r
    }
}

impl Sub<&StablePoly> for &StablePoly {
    type Output = StablePoly;
    fn sub(self, o: &StablePoly) -> StablePoly {
        self + &(-o)
    }
}

impl Mul<&StablePoly> for &StablePoly {
    type Output = StablePoly;
    fn mul(self, o: &StablePoly) -> StablePoly {
        let mut r = StablePoly::zero();
        for ((a1, s1), c1) in &self.terms {
            for ((a2, s2), c2) in &o.terms {
                r.add_term((a1 + a2, s1 + s2), c1 * c2);
            }
        }
        r
    }
}

impl Neg for &StablePoly {
    type Output = StablePoly;
    fn neg(self) -> StablePoly {
        StablePoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Neg for StablePoly {
    type Output = StablePoly;
    fn neg(self) -> StablePoly {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<StablePoly> for StablePoly {
            type Output = StablePoly;
            fn $f(self, o: StablePoly) -> StablePoly {
                (&self).$f(&o)
            }
        }
        impl $tr<&StablePoly> for StablePoly {
            type Output = StablePoly;
            fn $f(self, o: &StablePoly) -> StablePoly {
                (&self).$f(o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl std::iter::Sum for StablePoly {
    fn sum<I: Iterator<Item = Self>>(it: I) -> Self {
        it.fold(StablePoly::zero(), |a, b| &a + &b)
    }
}

impl std::iter::Product for StablePoly {
    fn product<I: Iterator<Item = Self>>(it: I) -> Self {
        it.fold(StablePoly::one(), |a, b| &a * &b)
    }
}

impl fmt::Display for StablePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((a, s), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "[{c}]")?;
            for (v, e) in [("a", *a), ("s", *s)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    _ => write!(f, "*{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StablePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl StablePoly {
    /// JSON: array of `{"a", "s", "num", "den"}` with polynomial-JSON numerator and denominator.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|((a, s), c)| {
                    serde_json::json!({
                        "a": a,
                        "s": s,
                        "num": c.numerator().to_json(),
                        "den": c.denominator().to_json(),
                    })
                })
                .collect(),
        )
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected a term array".into()))?;
        let mut out = StablePoly::zero();
        for t in arr {
            let get = |k: &str| {
                t.get(k).and_then(serde_json::Value::as_i64).ok_or_else(|| Error::Parse(format!("missing `{k}`")))
            };
            let num = QLaurent::from_json(t.get("num").unwrap_or(&serde_json::Value::Null))?;
            let den = QLaurent::from_json(t.get("den").unwrap_or(&serde_json::Value::Null))?;
            out.add_term((get("a")?, get("s")?), QRational::new(num, den)?);
        }
        Ok(out)
    }
}
