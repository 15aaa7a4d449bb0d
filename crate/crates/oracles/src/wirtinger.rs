//! Multivariable Alexander polynomial from the Wirtinger presentation.

use crate::diagram::Diagram;
use crate::lpoly::LPoly;

fn find(p: &mut [usize], mut x: usize) -> usize {
    while p[x] != x {
        p[x] = p[p[x]];
        x = p[x];
    }
    x
}

/// Determinant by fraction-free Gaussian elimination.
pub fn det(mut m: Vec<Vec<LPoly<2>>>) -> LPoly<2> {
    let n = m.len();
    if n == 0 {
        return LPoly::one();
    }
    let mut sign = 1;
    let mut prev = LPoly::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return LPoly::zero();
        };
        if piv != k {
            m.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LPoly::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].scale(sign)
}

/// `Δ(x, y)` with `x` for component 0 and `y` for component 1 (or `Δ(x)` for
/// a knot, where the minor itself is `Δ`), normalized to nonnegative exponents and positive first coefficient.
pub fn alexander(d: &Diagram) -> LPoly<2> {
    let n = d.crossings.len();
    let mut parent: Vec<usize> = (0..d.edges).collect();
    for c in &d.crossings {
        let (a, b) = (find(&mut parent, c.over_in), find(&mut parent, c.over_out));
        parent[a] = b;
    }
    let mut roots: Vec<usize> = (0..d.edges).map(|e| find(&mut parent, e)).collect();
    roots.sort();
    roots.dedup();
    let arc = |p: &mut Vec<usize>, e: usize| roots.iter().position(|&r| r == find(p, e)).unwrap();
    let var = |e: usize| -> [i64; 2] {
        if d.component[e] == 0 {
            [1, 0]
        } else {
            [0, 1]
        }
    };
    let arcs = roots.len();
    assert_eq!(arcs, n, "every component needs an undercrossing");
    let mut m = vec![vec![LPoly::<2>::zero(); arcs]; n];
    for (r, c) in d.crossings.iter().enumerate() {
        let (o, a, b) = (arc(&mut parent, c.over_in), arc(&mut parent, c.under_in), arc(&mut parent, c.under_out));
        let to = var(c.over_in);
        let ta = var(c.under_in);
        if c.sign > 0 {
            // b = o a o^-1
            m[r][o] = &m[r][o] + &(&LPoly::one() - &LPoly::term(ta, 1));
            m[r][a] = &m[r][a] + &LPoly::term(to, 1);
        } else {
            // b = o^-1 a o
            let inv = [-to[0], -to[1]];
            let mut d_o = LPoly::term([ta[0] + inv[0], ta[1] + inv[1]], 1);
            d_o.add_term(inv, -1);
            m[r][o] = &m[r][o] + &d_o;
            m[r][a] = &m[r][a] + &LPoly::term(inv, 1);
        }
        m[r][b] = &m[r][b] - &LPoly::one();
    }
    // drop the last relation and the column of an arc on component 0
    let col = (0..arcs).find(|&k| d.component[roots[k]] == 0).unwrap();
    let minor: Vec<Vec<LPoly<2>>> = m[..n - 1]
        .iter()
        .map(|row| row.iter().enumerate().filter(|(k, _)| *k != col).map(|(_, v)| v.clone()).collect())
        .collect();
    let dm = det(minor);
    if d.components == 1 {
        return dm.normalized();
    }
    let mut t = LPoly::term([1, 0], 1);
    t.add_term([0, 0], -1);
    dm.div_exact(&t).expect("minor divisible by t - 1").normalized()
}
