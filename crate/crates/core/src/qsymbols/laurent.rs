use super::monomial::{ExponentVector, Monomial, UV};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// No stored coefficient is zero, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent<M: Monomial> {
    terms: BTreeMap<M, BigInt>,
}

/// Polynomial in `a, q, s, t`.
pub type LaurentPoly4 = Laurent<ExponentVector>;
/// Polynomial in `q`.
pub type QLaurent = Laurent<i64>;
/// Polynomial in `u, v`.
pub type BiLaurent = Laurent<UV>;

impl<M: Monomial> Laurent<M> {
    pub fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(M::default(), BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(M::default(), c.into())
    }

    pub fn monomial(m: M, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Laurent { terms }
    }

    /// Sums the given terms, dropping anything that cancels.
    pub fn from_terms<I: IntoIterator<Item = (M, BigInt)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: M, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> &BTreeMap<M, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: M) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Greatest term in the monomial order.
    pub fn leading(&self) -> Option<(M, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Least term in the monomial order.
    pub fn trailing(&self) -> Option<(M, &BigInt)> {
        self.terms.iter().next().map(|(m, c)| (*m, c))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Laurent { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: M) -> Self {
        Laurent { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Applies an arbitrary map to every exponent and every coefficient sign.
    pub fn map_terms<N: Monomial>(&self, mut f: impl FnMut(M, &BigInt) -> (N, BigInt)) -> Laurent<N> {
        Laurent::from_terms(self.terms.iter().map(|(m, c)| f(*m, c)))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum of all exponents, `None` for zero.
    pub fn min_exponent(&self) -> Option<M> {
        self.terms.keys().copied().reduce(M::meet)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn all_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Divides by the monomial making every variable's minimum exponent 0.
    /// Returns the result and the removed monomial.
    pub fn normalize_up_to_monomial(&self) -> (Self, M) {
        match self.min_exponent() {
            None => (Self::zero(), M::default()),
            Some(m) => (self.mul_monomial(m.inv()), m),
        }
    }

    /// True iff `self = ±m·other` for some monomial `m` (sign only when allowed).
    pub fn equal_up_to_monomial(&self, other: &Self, allow_sign: bool) -> bool {
        let (a, _) = self.normalize_up_to_monomial();
        let (b, _) = other.normalize_up_to_monomial();
        a == b || (allow_sign && a == -b)
    }

    /// Returns the monomial `m` and sign with `self = sign·m·other`, if any.
    pub fn monomial_ratio(&self, other: &Self, allow_sign: bool) -> Option<(i32, M)> {
        let (a, ma) = self.normalize_up_to_monomial();
        let (b, mb) = other.normalize_up_to_monomial();
        let m = ma.mul(mb.inv());
        if a == b {
            Some((1, m))
        } else if allow_sign && a == -b {
            Some((-1, m))
        } else {
            None
        }
    }

    /// Normal form up to sign and monomial: normalized with a positive leading coefficient.
    pub fn canonical_class(&self) -> (Self, M, i32) {
        let (p, m) = self.normalize_up_to_monomial();
        match p.leading() {
            Some((_, c)) if c.is_negative() => (-p, m, -1),
            _ => (p, m, 1),
        }
    }

    /// Exact division. Fails if `d` does not divide `self` in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::InexactDivision("division by zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (dn, dm) = d.normalize_up_to_monomial();
        let (mut r, rm) = self.normalize_up_to_monomial();
        let (lm, lc) = {
            let (m, c) = dn.leading().expect("nonzero");
            (m, c.clone())
        };
        let mut quot = Self::zero();
        while let Some((m, c)) = r.leading() {
            if !lm.divides(m) {
                return Err(Error::InexactDivision("leading monomial not divisible".into()));
            }
            let (qc, rem) = c.div_rem(&lc);
            if !rem.is_zero() {
                return Err(Error::InexactDivision("leading coefficient not divisible".into()));
            }
            let qm = m.mul(lm.inv());
            r -= &dn.mul_monomial(qm).scale(&qc);
            quot.add_term(qm, qc);
        }
        Ok(quot.mul_monomial(rm.mul(dm.inv())))
    }
}

impl<M: Monomial> Add<&Laurent<M>> for &Laurent<M> {
    type Output = Laurent<M>;
    fn add(self, o: &Laurent<M>) -> Laurent<M> {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl<M: Monomial> Sub<&Laurent<M>> for &Laurent<M> {
    type Output = Laurent<M>;
    fn sub(self, o: &Laurent<M>) -> Laurent<M> {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl<M: Monomial> Mul<&Laurent<M>> for &Laurent<M> {
    type Output = Laurent<M>;
    fn mul(self, o: &Laurent<M>) -> Laurent<M> {
        let mut r = Laurent::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        r
    }
}

impl<M: Monomial> Neg for &Laurent<M> {
    type Output = Laurent<M>;
    fn neg(self) -> Laurent<M> {
        Laurent { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl<M: Monomial> Neg for Laurent<M> {
    type Output = Laurent<M>;
    fn neg(mut self) -> Laurent<M> {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl<M: Monomial> AddAssign<&Laurent<M>> for Laurent<M> {
    fn add_assign(&mut self, o: &Laurent<M>) {
        for (m, c) in &o.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl<M: Monomial> SubAssign<&Laurent<M>> for Laurent<M> {
    fn sub_assign(&mut self, o: &Laurent<M>) {
        for (m, c) in &o.terms {
            self.add_term(*m, -c);
        }
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<M: Monomial> $tr<Laurent<M>> for Laurent<M> {
            type Output = Laurent<M>;
            fn $f(self, o: Laurent<M>) -> Laurent<M> {
                (&self).$f(&o)
            }
        }
        impl<M: Monomial> $tr<&Laurent<M>> for Laurent<M> {
            type Output = Laurent<M>;
            fn $f(self, o: &Laurent<M>) -> Laurent<M> {
                (&self).$f(o)
            }
        }
        impl<M: Monomial> $tr<Laurent<M>> for &Laurent<M> {
            type Output = Laurent<M>;
            fn $f(self, o: Laurent<M>) -> Laurent<M> {
                self.$f(&o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<M: Monomial> AddAssign<Laurent<M>> for Laurent<M> {
    fn add_assign(&mut self, o: Laurent<M>) {
        *self += &o;
    }
}

impl<M: Monomial> std::iter::Sum for Laurent<M> {
    fn sum<I: Iterator<Item = Self>>(it: I) -> Self {
        let mut acc = Self::zero();
        for p in it {
            acc += &p;
        }
        acc
    }
}

impl<M: Monomial> std::iter::Product for Laurent<M> {
    fn product<I: Iterator<Item = Self>>(it: I) -> Self {
        it.fold(Self::one(), |a, b| &a * &b)
    }
}

impl QLaurent {
    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(e, 1)
    }

    /// `q ↦ q^{-1}`.
    pub fn bar(&self) -> Self {
        self.map_terms(|m, c| (-m, c.clone()))
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coefficient_sum()
    }

    /// `q ↦ q^k`.
    pub fn compose_pow(&self, k: i64) -> Self {
        self.map_terms(|m, c| (m * k, c.clone()))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.trailing().map(|(m, _)| m)
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.leading().map(|(m, _)| m)
    }
}

impl LaurentPoly4 {
    pub fn mono(e_a: i64, e_q: i64, e_s: i64, e_t: i64) -> Self {
        Self::monomial(ExponentVector::new(e_a, e_q, e_s, e_t), 1)
    }

    /// Embeds a polynomial in `q`.
    pub fn from_q(p: &QLaurent) -> Self {
        p.map_terms(|e, c| (ExponentVector::new(0, e, 0, 0), c.clone()))
    }

    /// Value at `a = q = s = t = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.coefficient_sum()
    }
}
