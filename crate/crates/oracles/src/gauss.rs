//! Quantum binomials from the Gaussian binomial recursion in `x = q^2`.

use crate::lpoly::LPoly;

/// Coefficients of the Gaussian binomial `[h choose k]_x` (ordinary polynomial in `x`), `0 <= k <= h`.
pub fn gaussian(h: usize, k: usize) -> Vec<i128> {
    // C(h,k) = C(h-1,k-1) + x^k C(h-1,k)
    let mut table: Vec<Vec<Vec<i128>>> = vec![vec![vec![1]]];
    for n in 1..=h {
        let mut row = Vec::with_capacity(n + 1);
        for m in 0..=n {
            let mut c = vec![0i128; m * (n - m) + 1];
            if m >= 1 {
                for (i, v) in table[n - 1][m - 1].iter().enumerate() {
                    c[i] += v;
                }
            }
            if m < n {
                for (i, v) in table[n - 1][m].iter().enumerate() {
                    c[i + m] += v;
                }
            }
            row.push(c);
        }
        table.push(row);
    }
    table[h][k].clone()
}

/// Balanced quantum binomial `{h, k}` as a polynomial in `q`: `q^{-k(h-k)} · [h choose k]_{q^2}`.
pub fn balanced(h: usize, k: usize) -> LPoly<1> {
    if k > h {
        return LPoly::zero();
    }
    let off = -((k * (h - k)) as i64);
    let mut p = LPoly::zero();
    for (i, c) in gaussian(h, k).iter().enumerate() {
        p.add_term([off + 2 * i as i64], *c);
    }
    p
}

/// `[n]` by direct expansion.
pub fn qint(n: i64) -> LPoly<1> {
    let mut p = LPoly::zero();
    let s = n.signum() as i128;
    for i in 0..n.abs() {
        p.add_term([n.abs() - 1 - 2 * i], s);
    }
    p
}
