use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

/// Exponent data of a Laurent monomial. Multiplication is exponent addition.
///
/// The `Ord` impl must be a monomial order on nonnegative exponents; exact
/// division relies on it.
pub trait Monomial: Copy + Ord + Eq + Hash + Default + Debug + Send + Sync + 'static {
    /// Variable names in rendering order.
    const VARS: &'static [&'static str];

    /// Exponents listed in `VARS` order.
    fn exps(self) -> Vec<i64>;

    /// Inverse of [`Monomial::exps`]; `e.len()` equals `VARS.len()`.
    fn from_exps(e: &[i64]) -> Self;

    fn mul(self, other: Self) -> Self {
        let (x, y) = (self.exps(), other.exps());
        Self::from_exps(&x.iter().zip(&y).map(|(a, b)| a + b).collect::<Vec<_>>())
    }

    fn inv(self) -> Self {
        Self::from_exps(&self.exps().iter().map(|a| -a).collect::<Vec<_>>())
    }

    /// Componentwise minimum.
    fn meet(self, other: Self) -> Self {
        let (x, y) = (self.exps(), other.exps());
        Self::from_exps(&x.iter().zip(&y).map(|(a, b)| *a.min(b)).collect::<Vec<_>>())
    }

    /// Componentwise `self <= other`.
    fn divides(self, other: Self) -> bool {
        self.exps().iter().zip(other.exps()).all(|(a, b)| *a <= b)
    }

    fn is_one(self) -> bool {
        self == Self::default()
    }

    /// `x^k` for the variable at index `idx` of `VARS`.
    fn var(idx: usize, k: i64) -> Self {
        let mut e = vec![0; Self::VARS.len()];
        e[idx] = k;
        Self::from_exps(&e)
    }
}

/// Exponents of `a, q, s, t`.
///
/// Ordered by `(e_t, e_a, e_s, e_q)`, which is also the rendering order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExponentVector {
    pub e_a: i64,
    pub e_q: i64,
    pub e_s: i64,
    pub e_t: i64,
}

impl ExponentVector {
    pub const fn new(e_a: i64, e_q: i64, e_s: i64, e_t: i64) -> Self {
        ExponentVector { e_a, e_q, e_s, e_t }
    }

    fn key(&self) -> (i64, i64, i64, i64) {
        (self.e_t, self.e_a, self.e_s, self.e_q)
    }
}

impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial for ExponentVector {
    const VARS: &'static [&'static str] = &["a", "q", "s", "t"];

    fn exps(self) -> Vec<i64> {
        vec![self.e_a, self.e_q, self.e_s, self.e_t]
    }

    fn from_exps(e: &[i64]) -> Self {
        ExponentVector::new(e[0], e[1], e[2], e[3])
    }

    fn mul(self, o: Self) -> Self {
        ExponentVector::new(self.e_a + o.e_a, self.e_q + o.e_q, self.e_s + o.e_s, self.e_t + o.e_t)
    }
}

/// Exponent of the single variable `q`.
impl Monomial for i64 {
    const VARS: &'static [&'static str] = &["q"];

    fn exps(self) -> Vec<i64> {
        vec![self]
    }

    fn from_exps(e: &[i64]) -> Self {
        e[0]
    }

    fn mul(self, o: Self) -> Self {
        self + o
    }

    fn inv(self) -> Self {
        -self
    }

    fn meet(self, o: Self) -> Self {
        self.min(o)
    }

    fn divides(self, o: Self) -> bool {
        self <= o
    }
}

/// Exponents of `u, v`, ordered lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UV {
    pub e_u: i64,
    pub e_v: i64,
}

impl UV {
    pub const fn new(e_u: i64, e_v: i64) -> Self {
        UV { e_u, e_v }
    }
}

impl Monomial for UV {
    const VARS: &'static [&'static str] = &["u", "v"];

    fn exps(self) -> Vec<i64> {
        vec![self.e_u, self.e_v]
    }

    fn from_exps(e: &[i64]) -> Self {
        UV::new(e[0], e[1])
    }

    fn mul(self, o: Self) -> Self {
        UV::new(self.e_u + o.e_u, self.e_v + o.e_v)
    }
}
