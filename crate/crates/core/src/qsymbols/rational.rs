use super::laurent::QLaurent;
use super::upoly;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of `Q(q)` in canonical form.
///
/// Numerator and denominator are coprime, the denominator's lowest exponent
/// is 0 and its lowest coefficient is positive, so equal values have equal
/// representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QRational {
    num: QLaurent,
    den: QLaurent,
}

impl QRational {
    pub fn new(num: QLaurent, den: QLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        QRational { num: QLaurent::zero(), den: QLaurent::one() }
    }

    pub fn one() -> Self {
        Self::from(QLaurent::one())
    }

    pub fn numerator(&self) -> &QLaurent {
        &self.num
    }

    pub fn denominator(&self) -> &QLaurent {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The value as a Laurent polynomial, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&QLaurent> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    /// `q ↦ q^k` (k nonzero).
    pub fn compose_pow(&self, k: i64) -> Self {
        Self::canonical(self.num.compose_pow(k), self.den.compose_pow(k))
    }

    /// Multiplies by `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        QRational { num: self.num.mul_monomial(e), den: self.den.clone() }
    }

    /// Value at `q = 1`; fails at a pole.
    pub fn eval_one(&self) -> Result<num_rational::BigRational> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(Error::InvalidArgument("pole at q = 1".into()));
        }
        Ok(num_rational::BigRational::new(self.num.eval_one(), d))
    }

    /// `Some((sign, e))` when the value is `sign·q^e`.
    pub fn as_signed_monomial(&self) -> Option<(i32, i64)> {
        if !self.den.is_one() || self.num.len() != 1 {
            return None;
        }
        let (e, c) = self.num.leading()?;
        if c.abs().is_one() {
            Some((if c.is_negative() { -1 } else { 1 }, e))
        } else {
            None
        }
    }

    fn canonical(num: QLaurent, den: QLaurent) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (n, sn) = num.normalize_up_to_monomial();
        let (d, sd) = den.normalize_up_to_monomial();
        let (dn, dd) = (upoly::to_dense(&n), upoly::to_dense(&d));
        let g = upoly::gcd(&dn, &dd);
        let (mut n, mut d) = if g.len() > 1 {
            let g = upoly::from_dense(&g);
            (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
        } else {
            (n, d)
        };
        let c = n.content().gcd(&d.content());
        if !c.is_one() {
            n = n.div_exact(&QLaurent::constant(c.clone())).expect("content divides");
            d = d.div_exact(&QLaurent::constant(c)).expect("content divides");
        }
        if d.trailing().expect("nonzero").1.is_negative() {
            n = -n;
            d = -d;
        }
        QRational { num: n.mul_monomial(sn - sd), den: d }
    }
}

impl From<QLaurent> for QRational {
    fn from(p: QLaurent) -> Self {
        QRational { num: p, den: QLaurent::one() }
    }
}

impl From<i64> for QRational {
    fn from(c: i64) -> Self {
        QRational::from(QLaurent::constant(BigInt::from(c)))
    }
}

impl Add<&QRational> for &QRational {
    type Output = QRational;
    fn add(self, o: &QRational) -> QRational {
        if self.den == o.den {
            return QRational::canonical(&self.num + &o.num, self.den.clone());
        }
        QRational::canonical(&self.num * &o.den + &o.num * &self.den, &self.den * &o.den)
    }
}

impl Sub<&QRational> for &QRational {
    type Output = QRational;
    fn sub(self, o: &QRational) -> QRational {
        self + &(-o)
    }
}

impl Mul<&QRational> for &QRational {
    type Output = QRational;
    fn mul(self, o: &QRational) -> QRational {
        if self.is_zero() || o.is_zero() {
            return QRational::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return QRational::from(&self.num * &o.num);
        }
        QRational::canonical(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        QRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QRational {
    type Output = QRational;
    fn neg(self) -> QRational {
        -&self
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr<QRational> for QRational {
            type Output = QRational;
            fn $f(self, o: QRational) -> QRational {
                (&self).$f(&o)
            }
        }
        impl $tr<&QRational> for QRational {
            type Output = QRational;
            fn $f(self, o: &QRational) -> QRational {
                (&self).$f(o)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl fmt::Display for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for QRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Zero for QRational {
    fn zero() -> Self {
        QRational::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
