//! HOMFLY polynomial by the skein relation over descending diagrams.
//!
//! Convention: `a P(L+) - a^-1 P(L-) = z P(L0)`, reduced (unknot 1), so the
//! unknot of the unreduced invariant is `(a - a^-1)/z`, which is `[N]` at
//! `a = q^N`, `z = q - q^-1`.

use crate::diagram::{Crossing, Diagram};
use crate::lpoly::LPoly;

#[derive(Clone)]
struct State {
    crossings: Vec<Crossing>,
    /// Smoothed passages `in -> out`.
    junctions: Vec<(usize, usize)>,
    edges: usize,
}

enum Head {
    Cross(usize, bool),
    Junction(usize),
}

impl State {
    fn head(&self, e: usize) -> Head {
        for (i, c) in self.crossings.iter().enumerate() {
            if c.over_in == e {
                return Head::Cross(i, true);
            }
            if c.under_in == e {
                return Head::Cross(i, false);
            }
        }
        for (i, j) in self.junctions.iter().enumerate() {
            if j.0 == e {
                return Head::Junction(i);
            }
        }
        Head::Junction(usize::MAX)
    }

    fn next(&self, e: usize) -> (usize, Option<(usize, bool)>) {
        match self.head(e) {
            Head::Cross(i, over) => {
                let c = &self.crossings[i];
                (if over { c.over_out } else { c.under_out }, Some((i, over)))
            }
            Head::Junction(usize::MAX) => (e, None),
            Head::Junction(i) => (self.junctions[i].1, None),
        }
    }

    /// Number of components and the first crossing met first from below, if any.
    fn scan(&self) -> (u32, Option<usize>) {
        let mut seen_edge = vec![false; self.edges];
        let mut seen_cross = vec![false; self.crossings.len()];
        let mut comps = 0;
        let mut bad = None;
        for start in 0..self.edges {
            if seen_edge[start] {
                continue;
            }
            comps += 1;
            let mut e = start;
            loop {
                seen_edge[e] = true;
                let (n, hit) = self.next(e);
                if let Some((i, over)) = hit {
                    if !seen_cross[i] {
                        seen_cross[i] = true;
                        if !over && bad.is_none() {
                            bad = Some(i);
                        }
                    }
                }
                e = n;
                if e == start {
                    break;
                }
            }
        }
        (comps, bad)
    }
}

/// Terms `c · a^x z^y δ^m`, keyed `[x, y, m]`.
fn eval(s: &State, coef: LPoly<3>, out: &mut LPoly<3>) {
    let (comps, bad) = s.scan();
    let Some(i) = bad else {
        *out = &*out + &(&coef * &LPoly::term([0, 0, comps as i64 - 1], 1));
        return;
    };
    let c = s.crossings[i];
    let mut switched = s.clone();
    switched.crossings[i] = Crossing {
        over_in: c.under_in,
        over_out: c.under_out,
        under_in: c.over_in,
        under_out: c.over_out,
        sign: -c.sign,
    };
    let mut smoothed = s.clone();
    smoothed.crossings.remove(i);
    smoothed.junctions.push((c.over_in, c.under_out));
    smoothed.junctions.push((c.under_in, c.over_out));
    if c.sign > 0 {
        // P(L+) = a^-2 P(L-) + a^-1 z P(L0)
        eval(&switched, &coef * &LPoly::term([-2, 0, 0], 1), out);
        eval(&smoothed, &coef * &LPoly::term([-1, 1, 0], 1), out);
    } else {
        // P(L-) = a^2 P(L+) - a z P(L0)
        eval(&switched, &coef * &LPoly::term([2, 0, 0], 1), out);
        eval(&smoothed, &coef * &LPoly::term([1, 1, 0], -1), out);
    }
}

/// Reduced HOMFLY polynomial in `(a, z)`.
pub fn homfly_az(d: &Diagram) -> LPoly<2> {
    let s = State { crossings: d.crossings.clone(), junctions: vec![], edges: d.edges };
    let mut acc = LPoly::zero();
    eval(&s, LPoly::one(), &mut acc);
    let mut a_diff = LPoly::zero();
    a_diff.add_term([1, 0], 1);
    a_diff.add_term([-1, 0], -1);
    let mut out = LPoly::zero();
    for (e, c) in &acc.0 {
        let term = &a_diff.pow(e[2] as u32) * &LPoly::term([e[0], e[1] - e[2]], *c);
        out = &out + &term;
    }
    out
}

/// Reduced `sl_N` invariant in `q`: `a = q^N`, `z = q - q^-1`.
pub fn sl_n_reduced(d: &Diagram, n: i64) -> LPoly<1> {
    let mut z = LPoly::zero();
    z.add_term([1], 1);
    z.add_term([-1], -1);
    let zinv_free = homfly_az(d);
    let lowest_z = zinv_free.0.keys().map(|e| e[1]).min().unwrap_or(0).min(0);
    // multiply through by z^-lowest so only nonnegative powers occur, then divide back
    let mut acc = LPoly::zero();
    for (e, c) in &zinv_free.0 {
        acc = &acc + &(&z.pow((e[1] - lowest_z) as u32) * &LPoly::term([n * e[0]], *c));
    }
    acc.div_exact(&z.pow((-lowest_z) as u32)).expect("HOMFLY specialization is a Laurent polynomial")
}
