//! Exact Laurent polynomials, rational functions of `q`, and quantum symbols.

mod laurent;
mod monomial;
mod rational;
mod render;
mod stable;
mod subst;
mod upoly;

pub use laurent::{BiLaurent, Laurent, LaurentPoly4, QLaurent};
pub use monomial::{ExponentVector, Monomial, UV};
pub use rational::QRational;
pub use stable::StablePoly;
pub use subst::{substitute, substitute_stable, Binding, Bindings, Substituted, SubstitutedStable};

use crate::error::Result;

/// Renormalization of a quantum binomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Balanced,
    /// Lowest degree 0: `q^{k(h-k)}` times the balanced value.
    Plus,
    /// Highest degree 0: `q^{-k(h-k)}` times the balanced value.
    Minus,
}

/// `[n] = (q^n - q^{-n}) / (q - q^{-1})`.
pub fn quantum_integer(n: i64) -> QLaurent {
    let sign = if n < 0 { -1 } else { 1 };
    let m = n.abs();
    QLaurent::from_terms((0..m).map(|i| (m - 1 - 2 * i, num_bigint::BigInt::from(sign))))
}

/// `[n]! = [1][2]⋯[n]`.
pub fn quantum_factorial(n: u32) -> QLaurent {
    (1..=n as i64).map(quantum_integer).product()
}

/// `{h, k} = [h][h-1]⋯[h-k+1] / [k]!`, computed by exact division, optionally renormalized.
///
/// `h` may be negative for the balanced variant.
pub fn quantum_binomial(h: i64, k: u32, variant: Variant) -> Result<QLaurent> {
    let num: QLaurent = (0..k as i64).map(|i| quantum_integer(h - i)).product();
    let bal = num.div_exact(&quantum_factorial(k))?;
    let k = k as i64;
    Ok(match variant {
        Variant::Balanced => bal,
        Variant::Plus => bal.mul_monomial(k * (h - k)),
        Variant::Minus => bal.mul_monomial(-k * (h - k)),
    })
}

/// Balanced quantum binomial; the division is always exact.
pub fn qbinom(h: i64, k: i64) -> QLaurent {
    if k < 0 {
        return QLaurent::zero();
    }
    quantum_binomial(h, k as u32, Variant::Balanced).expect("quantum binomial division is exact")
}

/// `(q^k - q^{-k})`.
fn q_diff(k: i64) -> QLaurent {
    QLaurent::from_terms([(k, 1.into()), (-k, (-1).into())])
}

/// `{b, c}_a = ∏_{k=1}^{c} (a q^{b-k+1} - a^{-1} q^{-b+k-1}) / (q^k - q^{-k})`,
/// the stable form of `{N+b, c}` under `a = q^N`.
pub fn a_binomial(b: i64, c: u32) -> StablePoly {
    (1..=c as i64)
        .map(|k| {
            let den = QRational::new(QLaurent::one(), q_diff(k)).expect("nonzero");
            let mut f = StablePoly::monomial(1, 0, QRational::from(QLaurent::q_pow(b - k + 1)));
            f.add_term((-1, 0), -QRational::from(QLaurent::q_pow(-b + k - 1)));
            f.scale(&den)
        })
        .product()
}

/// Normalizes so every variable's minimum exponent is 0; returns the removed monomial.
pub fn normalize_up_to_monomial(p: &LaurentPoly4) -> (LaurentPoly4, ExponentVector) {
    p.normalize_up_to_monomial()
}

/// True iff `p = ±m·q` for a monomial `m` (sign only when allowed).
pub fn equal_up_to_monomial(p: &LaurentPoly4, q: &LaurentPoly4, allow_sign: bool) -> bool {
    p.equal_up_to_monomial(q, allow_sign)
}
