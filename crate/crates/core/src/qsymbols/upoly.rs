//! Dense univariate integer polynomials, used only for gcd computations.

use super::laurent::QLaurent;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from degree 0 upward; no trailing zeros.
pub type Dense = Vec<BigInt>;

fn trim(mut p: Dense) -> Dense {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Converts a Laurent polynomial with minimum exponent `>= 0` to dense form.
pub fn to_dense(p: &QLaurent) -> Dense {
    let Some(top) = p.max_degree() else { return vec![] };
    let mut v = vec![BigInt::zero(); top as usize + 1];
    for (e, c) in p.terms() {
        assert!(*e >= 0, "negative exponent in dense conversion");
        v[*e as usize] = c.clone();
    }
    v
}

pub fn from_dense(p: &Dense) -> QLaurent {
    QLaurent::from_terms(p.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

fn content(p: &Dense) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn div_scalar(p: &Dense, c: &BigInt) -> Dense {
    p.iter().map(|x| x / c).collect()
}

fn primitive(p: &Dense) -> Dense {
    let c = content(p);
    if c.is_zero() {
        return vec![];
    }
    div_scalar(p, &c)
}

/// Pseudo-remainder of `a` by `b`: `lc(b)^(deg a - deg b + 1) · a mod b`.
fn prem(a: &Dense, b: &Dense) -> Dense {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.clone();
    let mut steps = a.len() as i64 - b.len() as i64 + 1;
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[dr - db + i] -= &lr * bc;
        }
        r = trim(r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb, steps as usize);
        for x in r.iter_mut() {
            *x *= &f;
        }
    }
    r
}

/// Primitive gcd with positive leading coefficient (subresultant PRS).
pub fn gcd(a: &Dense, b: &Dense) -> Dense {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return normalize_sign(a);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.len() - b.len();
        let r = prem(&a, &b);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = div_scalar(&r, &divisor);
        g = a.last().unwrap().clone();
        h = if delta == 0 { h } else { num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1) };
    }
    normalize_sign(primitive(&b))
}

fn normalize_sign(p: Dense) -> Dense {
    if p.last().is_some_and(|c| c.is_negative()) {
        p.into_iter().map(|c| -c).collect()
    } else {
        p
    }
}
