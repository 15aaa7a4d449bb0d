//! Kauffman bracket state sum.

use crate::diagram::Diagram;
use crate::lpoly::LPoly;

fn find(p: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while p[r] != r {
        r = p[r];
    }
    let mut y = x;
    while p[y] != r {
        let n = p[y];
        p[y] = r;
        y = n;
    }
    r
}

/// Unnormalized bracket `<D>` with `<O> = 1`, in the variable `A`.
pub fn bracket(d: &Diagram) -> LPoly<1> {
    let n = d.crossings.len();
    assert!(n < 24, "state sum too large");
    let delta = {
        let mut p = LPoly::zero();
        p.add_term([2], -1);
        p.add_term([-2], -1);
        p
    };
    let mut out = LPoly::zero();
    for state in 0u32..(1 << n) {
        let mut parent: Vec<usize> = (0..d.edges).collect();
        let mut a_minus_b = 0i64;
        for (i, c) in d.crossings.iter().enumerate() {
            let is_a = state >> i & 1 == 0;
            a_minus_b += if is_a { 1 } else { -1 };
            // the A-smoothing is the oriented one at positive crossings
            let oriented = is_a == (c.sign > 0);
            let pairs = if oriented {
                [(c.over_in, c.under_out), (c.under_in, c.over_out)]
            } else {
                [(c.over_in, c.under_in), (c.over_out, c.under_out)]
            };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent[rx] = ry;
            }
        }
        let loops = (0..d.edges).filter(|&e| find(&mut parent, e) == e).count() as u32;
        out = &out + &(&LPoly::term([a_minus_b], 1) * &delta.pow(loops - 1));
    }
    out
}

/// Unreduced `sl_2` invariant in `q` (unknot `q + q^-1`), up to sign and a
/// power of `q`: `d · (-A^3)^(-w) <D>` with `A^2 = -q`.
pub fn sl2_unreduced(d: &Diagram) -> LPoly<1> {
    let w = d.writhe() as i64;
    let mut f = &bracket(d) * &LPoly::term([-3 * w], if w % 2 == 0 { 1 } else { -1 });
    let mut delta = LPoly::zero();
    delta.add_term([2], -1);
    delta.add_term([-2], -1);
    f = &f * &delta;
    let lo = *f.0.keys().next().expect("nonzero bracket");
    let mut q = LPoly::zero();
    for (e, c) in &f.0 {
        let m = (e[0] - lo[0]) / 2;
        assert_eq!((e[0] - lo[0]) % 2, 0, "mixed parity bracket");
        q.add_term([m], if m % 2 == 0 { *c } else { -*c });
    }
    q
}

/// Jones polynomial in `q` (unknot 1), up to sign and a power of `q`.
pub fn jones(d: &Diagram) -> LPoly<1> {
    let mut two = LPoly::zero();
    two.add_term([1], 1);
    two.add_term([-1], 1);
    sl2_unreduced(d).div_exact(&two).expect("sl2 invariant divisible by [2]")
}
