use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Minimal sparse Laurent polynomial in `N` variables with `i128` coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LPoly<const N: usize>(pub BTreeMap<[i64; N], i128>);

impl<const N: usize> LPoly<N> {
    pub fn zero() -> Self {
        LPoly(BTreeMap::new())
    }

    pub fn term(e: [i64; N], c: i128) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn one() -> Self {
        Self::term([0; N], 1)
    }

    pub fn add_term(&mut self, e: [i64; N], c: i128) {
        if c == 0 {
            return;
        }
        let v = self.0.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.0.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scale(&self, c: i128) -> Self {
        let mut p = Self::zero();
        for (e, x) in &self.0 {
            p.add_term(*e, x * c);
        }
        p
    }

    pub fn shift(&self, d: [i64; N]) -> Self {
        let mut p = Self::zero();
        for (e, x) in &self.0 {
            let mut f = *e;
            for i in 0..N {
                f[i] += d[i];
            }
            p.add_term(f, *x);
        }
        p
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |a, _| &a * self)
    }

    /// Shifts so every variable's minimum exponent is 0 and the first coefficient is positive.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut m = [i64::MAX; N];
        for e in self.0.keys() {
            for i in 0..N {
                m[i] = m[i].min(e[i]);
            }
        }
        let p = self.shift(m.map(|x| -x));
        if *p.0.values().next().unwrap() < 0 {
            -p
        } else {
            p
        }
    }

    /// Exact division (lex order on exponents); `None` if inexact.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (dl, dc) = d.0.iter().next_back().map(|(e, c)| (*e, *c))?;
        let dt = *d.0.keys().next()?;
        // in an exact division the last quotient term is trail(self)/trail(d)
        let floor = self.0.keys().next().map(|t| {
            let mut e = [0; N];
            for i in 0..N {
                e[i] = t[i] - dt[i];
            }
            e
        });
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((rl, rc)) = r.0.iter().next_back().map(|(e, c)| (*e, *c)) {
            let mut e = [0; N];
            for i in 0..N {
                e[i] = rl[i] - dl[i];
            }
            if rc % dc != 0 || Some(e) < floor {
                return None;
            }
            let t = Self::term(e, rc / dc);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }
}

impl<const N: usize> Add for &LPoly<N> {
    type Output = LPoly<N>;
    fn add(self, o: &LPoly<N>) -> LPoly<N> {
        let mut p = self.clone();
        for (e, c) in &o.0 {
            p.add_term(*e, *c);
        }
        p
    }
}

impl<const N: usize> Sub for &LPoly<N> {
    type Output = LPoly<N>;
    fn sub(self, o: &LPoly<N>) -> LPoly<N> {
        self + &(-o.clone())
    }
}

impl<const N: usize> Mul for &LPoly<N> {
    type Output = LPoly<N>;
    fn mul(self, o: &LPoly<N>) -> LPoly<N> {
        let mut p = LPoly::zero();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &o.0 {
                let mut e = *e1;
                for i in 0..N {
                    e[i] += e2[i];
                }
                p.add_term(e, c1 * c2);
            }
        }
        p
    }
}

impl<const N: usize> Neg for LPoly<N> {
    type Output = LPoly<N>;
    fn neg(self) -> LPoly<N> {
        LPoly(self.0.into_iter().map(|(e, c)| (e, -c)).collect())
    }
}
