//! The one-arc diagram of a rational tangle and its graded generators.
//!
//! The diagram lives on the pillowcase: the torus `R²/(2Z)²` modulo `x ↦ -x`.
//! Its four corners are the special points `P_L = (0,1)`, `P_M = (0,0)`,
//! `P_R = (1,0)` and the point at infinity `(1,1)`. The boundary of the front
//! square is the real axis of the plane picture. The left vertical `l_p` is
//! the boundary of a thin neighbourhood of the edge `[P_L, ∞]`, and the right
//! vertical `l_q` is the same for `[P_R, ∞]`. The arc `α` lifts to a straight
//! lattice segment.
//!
//! A top twist is the affine map `(x, y) ↦ (x, x + y + 1)`. It swaps `P_L` and
//! `P_M`, fixes `[P_R, ∞]` and adds the right intersections to the left ones.
//! A right twist is the mirror map `(x, y) ↦ (x + y + 1, y)`. Both preserve
//! the parameter along `α`, so intersection points of consecutive diagrams
//! are matched in order along the arc.
//!
//! Positions are exact rationals. The `m`-th parallel copy of a vertical sits
//! at distance `m·δ` from its edge, and winding numbers are signed crossing
//! counts with a lifted ray to infinity.

use crate::qsymbols::{ExponentVector, LaurentPoly4};
use crate::tangle::{config_step, BoundaryConfig, TangleDesc, TwistMove};
use crate::twist::{RuleId, TwistEngine};
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

type Q = Ratio<i128>;

fn rat(n: i128) -> Q {
    Q::from_integer(n)
}

/// Reduces a coordinate modulo 2 into `[-1, 1)`.
fn reduce(x: Q) -> Q {
    let two = rat(2);
    let k = ((x + Q::one()) / two).floor();
    x - k * two
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pt {
    x: Q,
    y: Q,
}

impl Pt {
    fn new(x: Q, y: Q) -> Self {
        Pt { x, y }
    }
    fn sub(self, o: Pt) -> Pt {
        Pt::new(self.x - o.x, self.y - o.y)
    }
    fn add(self, o: Pt) -> Pt {
        Pt::new(self.x + o.x, self.y + o.y)
    }
    fn scale(self, k: Q) -> Pt {
        Pt::new(self.x * k, self.y * k)
    }
    fn neg(self) -> Pt {
        Pt::new(-self.x, -self.y)
    }
}

fn cross(a: Pt, b: Pt) -> Q {
    a.x * b.y - a.y * b.x
}

/// Sign of a transverse crossing of path segment `(p0, p1)` with arc `(a0, a1)`:
/// `+1` when the path crosses counterclockwise about `a0`.
fn crossing_sign(p0: Pt, p1: Pt, a0: Pt, a1: Pt) -> i64 {
    let d = p1.sub(p0);
    let e = a1.sub(a0);
    let den = cross(d, e);
    if den.is_zero() {
        return 0;
    }
    let w = a0.sub(p0);
    let t = cross(w, e) / den;
    let u = cross(w, d) / den;
    let (zero, one) = (Q::zero(), Q::one());
    let open = |v: Q| v > zero && v < one;
    let closed = |v: Q| v >= zero && v <= one;
    if open(t) && open(u) {
        if cross(e, d).is_positive() {
            1
        } else {
            -1
        }
    } else {
        assert!(!(closed(t) && closed(u)), "degenerate crossing in winding computation");
        0
    }
}

/// Winding number about `z` of the closed path given by its segments, as seen
/// in the plane (relative to the point at infinity).
fn winding(path: &[(Pt, Pt)], z: Pt) -> i64 {
    let (fx, fy) = (z.x.floor().to_integer(), z.y.floor().to_integer());
    let odd = |f: i128| if f.is_odd() { f } else { f + 1 };
    let c = Pt::new(rat(odd(fx)), rat(odd(fy)));
    let mut total = 0;
    for (a0, a1) in [(z, c), (z.neg(), c.neg())] {
        for &(p0, p1) in path {
            let lo_x = p0.x.min(p1.x) - a0.x.max(a1.x);
            let hi_x = p0.x.max(p1.x) - a0.x.min(a1.x);
            let lo_y = p0.y.min(p1.y) - a0.y.max(a1.y);
            let hi_y = p0.y.max(p1.y) - a0.y.min(a1.y);
            let (mx0, mx1) = ((lo_x / rat(2)).floor().to_integer(), (hi_x / rat(2)).ceil().to_integer());
            let (my0, my1) = ((lo_y / rat(2)).floor().to_integer(), (hi_y / rat(2)).ceil().to_integer());
            for mx in mx0..=mx1 {
                for my in my0..=my1 {
                    let v = Pt::new(rat(2 * mx), rat(2 * my));
                    total += crossing_sign(p0, p1, a0.add(v), a1.add(v));
                }
            }
        }
    }
    total
}

/// True iff the point lies on the front face of the pillowcase.
fn front(p: Pt) -> bool {
    (p.x.floor().to_integer() + p.y.floor().to_integer()).is_even()
}

/// Integers strictly between `c0` and `c0 + span`, in the direction of travel.
fn lines_between(c0: Q, span: Q) -> Vec<i128> {
    let end = c0 + span;
    let (lo, hi) = if span.is_negative() { (end, c0) } else { (c0, end) };
    let mut ks: Vec<i128> = ((lo.floor().to_integer() + 1)..=(hi.ceil().to_integer() - 1))
        .filter(|&k| lo < rat(k) && rat(k) < hi)
        .collect();
    if span.is_negative() {
        ks.reverse();
    }
    ks
}

/// Which vertical an intersection lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

/// Part of the real axis crossed by `α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxisRegion {
    LeftOfLp,
    Between,
    RightOfLq,
}

/// One event along `α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Event {
    /// Intersection with a vertical; `slot` counts from the bottom.
    VerticalCross { side: Side, slot: usize },
    /// Crossing of the real axis; `up` means into the upper half-plane.
    AxisCross { region: AxisRegion, up: bool },
}

/// The distinguished points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Special {
    XPlus,
    XMinus,
    Y,
}

impl Special {
    /// Grading contributed by a domain covering the point once, at color `j`.
    pub fn weight(self, j: i64) -> ExponentVector {
        match self {
            Special::XPlus => ExponentVector::new(2, 2 - 4 * j, -2, -1),
            Special::XMinus => ExponentVector::new(0, 2, 2, -1),
            Special::Y => ExponentVector::new(0, 2, 0, -1),
        }
    }

    /// Shift of a simple slide of the innermost vertical across the point.
    pub fn slide(self, j: i64) -> ExponentVector {
        match self {
            Special::XPlus => ExponentVector::new(-1, 2 * j - 1, 1, 1),
            Special::XMinus => ExponentVector::new(0, -1, -1, 1),
            Special::Y => ExponentVector::new(0, -1, 0, 1),
        }
    }
}

impl fmt::Display for Special {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Special::XPlus => "X+",
            Special::XMinus => "X-",
            Special::Y => "Y",
        })
    }
}

/// Labels of the left, middle and right regions in a configuration.
pub fn special_points(c: BoundaryConfig) -> [Special; 3] {
    use BoundaryConfig::*;
    use Special::*;
    match c {
        UP => [Y, XMinus, XPlus],
        UPs => [XMinus, Y, XPlus],
        OP => [Y, XPlus, XMinus],
        OPs => [XMinus, XPlus, Y],
        RI => [XPlus, XMinus, Y],
        RIs => [XPlus, Y, XMinus],
    }
}

/// An intersection of `α` with a vertical.
///
/// It is recorded by the odd lattice line `level` hugged by the vertical
/// (`y = level` for the left, `x = level` for the right) and by `sign`, the
/// side of that line the vertical's lift runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Crossing {
    side: Side,
    level: i64,
    sign: i64,
    slot: usize,
}

/// The diagram of one tangle: `α`, its events and the special-point labels.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub word: Vec<TwistMove>,
    pub start: BoundaryConfig,
    pub config: BoundaryConfig,
    /// Endpoints of the lift of `α` in the double cover.
    pub alpha: [[i64; 2]; 2],
    /// Labels of the regions left of `l_p`, between, and right of `l_q`.
    pub special_points: [Special; 3],
    pub events: Vec<Event>,
    /// Vertical intersections in order along `α`.
    crossings: Vec<Crossing>,
    delta: Q,
}

/// Builds the diagram by folding the twist word over the trivial one.
pub fn build_diagram(tangle: &TangleDesc, start: BoundaryConfig) -> Diagram {
    diagram_of_word(&tangle.word, start)
}

/// Draws the diagram directly from its intersection numbers `(L, R)`: the
/// straight segment of direction `(R, L)` between the two corners it joins.
pub fn direct_diagram(left: u64, right: u64, start: BoundaryConfig, word: &[TwistMove]) -> Diagram {
    let (r, l) = (right as i64, left as i64);
    // From P_M unless both counts are odd, when P_M would be joined to infinity.
    let a = if l % 2 == 1 && r % 2 == 1 { [0, 1] } else { [0, 0] };
    let config = word.iter().fold(start, |c, &m| config_step(c, m));
    assemble(word, start, config, a, [a[0] + r, a[1] + l])
}

fn diagram_of_word(word: &[TwistMove], start: BoundaryConfig) -> Diagram {
    let (mut a, mut b) = ([0i64, 0], [1i64, 0]);
    let mut config = start;
    for &m in word {
        let f = |p: [i64; 2]| match m {
            TwistMove::Top => [p[0], p[0] + p[1] + 1],
            TwistMove::Right => [p[0] + p[1] + 1, p[1]],
        };
        (a, b) = (f(a), f(b));
        config = config_step(config, m);
    }
    assemble(word, start, config, a, b)
}

fn assemble(word: &[TwistMove], start: BoundaryConfig, config: BoundaryConfig, a: [i64; 2], b: [i64; 2]) -> Diagram {
    let (da, db) = ((b[0] - a[0]) as i128, (b[1] - a[1]) as i128);
    let delta = Q::new(1, 64 * (da + db + 1) + 1);
    let mut d = Diagram {
        word: word.to_vec(),
        start,
        config,
        alpha: [a, b],
        special_points: special_points(config),
        events: vec![],
        crossings: vec![],
        delta,
    };
    d.locate();
    d
}

impl Diagram {
    fn origin(&self) -> Pt {
        Pt::new(rat(self.alpha[0][0] as i128), rat(self.alpha[0][1] as i128))
    }

    fn dir(&self) -> Pt {
        Pt::new(rat((self.alpha[1][0] - self.alpha[0][0]) as i128), rat((self.alpha[1][1] - self.alpha[0][1]) as i128))
    }

    fn point_at(&self, t: Q) -> Pt {
        self.origin().add(self.dir().scale(t))
    }

    /// Parameter along `α` of the crossing with the copy at offset `eps`.
    fn t_of(&self, c: &Crossing, eps: Q) -> Q {
        let (o, d) = (self.origin(), self.dir());
        let line = rat(c.level as i128) + eps * rat(c.sign as i128);
        match c.side {
            Side::Left => (line - o.y) / d.y,
            Side::Right => (line - o.x) / d.x,
        }
    }

    /// Height along the vertical, in `(-1, 1)`, increasing upwards.
    fn height_of(&self, c: &Crossing, eps: Q) -> Q {
        let p = self.point_at(self.t_of(c, eps));
        let along = match c.side {
            Side::Left => p.x,
            Side::Right => p.y,
        };
        reduce(if c.sign < 0 { along } else { -along })
    }

    fn locate(&mut self) {
        let (o, d) = (self.origin(), self.dir());
        let eps = self.delta;
        let mut found: Vec<(Q, Crossing)> = vec![];
        for (side, start, span) in [(Side::Left, o.y, d.y), (Side::Right, o.x, d.x)] {
            if span.is_zero() {
                continue;
            }
            let lo = start.to_integer() as i64 - 1;
            let hi = (start + span).to_integer() as i64 + 1;
            for level in (lo..=hi).filter(|v| v.is_odd()) {
                for sign in [-1, 1] {
                    let c = Crossing { side, level, sign, slot: 0 };
                    let t = self.t_of(&c, eps);
                    if t > Q::zero() && t < Q::one() {
                        found.push((t, c));
                    }
                }
            }
        }
        found.sort_by_key(|x| x.0);
        let mut crossings: Vec<Crossing> = found.into_iter().map(|(_, c)| c).collect();
        for side in [Side::Left, Side::Right] {
            let mut idx: Vec<usize> = (0..crossings.len()).filter(|&i| crossings[i].side == side).collect();
            idx.sort_by_key(|&i| self.height_of(&crossings[i], eps));
            for (slot, i) in idx.into_iter().enumerate() {
                crossings[i].slot = slot;
            }
        }
        self.crossings = crossings;
        self.events = self.build_events();
    }

    fn build_events(&self) -> Vec<Event> {
        let (o, d) = (self.origin(), self.dir());
        let mut ev: Vec<(Q, Event)> = self
            .crossings
            .iter()
            .map(|c| (self.t_of(c, self.delta), Event::VerticalCross { side: c.side, slot: c.slot }))
            .collect();
        for (horizontal, start, span) in [(true, o.y, d.y), (false, o.x, d.x)] {
            if span.is_zero() {
                continue;
            }
            let lo = start.to_integer() + 1;
            let hi = (start + span).to_integer() - 1;
            for line in lo..=hi {
                let t = (rat(line) - start) / span;
                let p = self.point_at(t);
                let region = match (horizontal, line.is_odd()) {
                    (true, true) => AxisRegion::LeftOfLp,
                    (false, true) => AxisRegion::RightOfLq,
                    _ => AxisRegion::Between,
                };
                // Distinct grid crossings are at least 1/|dx·dy| apart in t.
                let step = d.scale(Q::new(1, 4 * (d.x * d.y).to_integer().abs() + 4));
                let after = p.add(step);
                ev.push((t, Event::AxisCross { region, up: front(after) }));
            }
        }
        ev.sort_by_key(|x| x.0);
        ev.into_iter().map(|(_, e)| e).collect()
    }

    /// Number of intersections with the left vertical.
    pub fn left_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.side == Side::Left).count()
    }

    /// Number of intersections with the right vertical.
    pub fn right_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.side == Side::Right).count()
    }

    /// Vertical intersections in order along `α`.
    pub fn along(&self) -> Vec<(Side, usize)> {
        self.crossings.iter().map(|c| (c.side, c.slot)).collect()
    }

    fn crossing(&self, side: Side, slot: usize) -> &Crossing {
        self.crossings.iter().find(|c| c.side == side && c.slot == slot).expect("slot exists")
    }

    /// True iff the lift of `α` has coprime direction, i.e. `α` is embedded.
    pub fn is_embedded(&self) -> bool {
        let d = self.dir();
        d.x.to_integer().gcd(&d.y.to_integer()) == 1
    }

    /// Label of the special point at corner index 0 (`P_L`), 1 (`P_M`), 2 (`P_R`).
    fn corner(i: usize) -> Pt {
        match i {
            0 => Pt::new(rat(0), rat(1)),
            1 => Pt::new(rat(0), rat(0)),
            _ => Pt::new(rat(1), rat(0)),
        }
    }

    /// The loop running along `α` from the intersection `from` to `to` with
    /// the vertical copy at offset `eps`, then back along that copy.
    fn domain_loop(&self, side: Side, from: usize, to: usize, eps: Q) -> Vec<(Pt, Pt)> {
        let (cf, ct) = (self.crossing(side, from), self.crossing(side, to));
        let (p0, p1) = (self.point_at(self.t_of(cf, eps)), self.point_at(self.t_of(ct, eps)));
        let dh = self.height_of(cf, eps) - self.height_of(ct, eps);
        let dh = if ct.sign < 0 { dh } else { -dh };
        let back = match side {
            Side::Left => Pt::new(p1.x + dh, p1.y),
            Side::Right => Pt::new(p1.x, p1.y + dh),
        };
        vec![(p0, p1), (p1, back)]
    }

    /// Windings of the domain from `from` to `to` about `P_L, P_M, P_R`.
    fn special_windings(&self, side: Side, from: usize, to: usize, eps: Q) -> [i64; 3] {
        let path = self.domain_loop(side, from, to, eps);
        [0, 1, 2].map(|i| winding(&path, Self::corner(i)))
    }

    /// Additive grading change of the domain from `from` to `to` on `side`.
    fn domain_shift(&self, side: Side, from: usize, to: usize, j: i64) -> ExponentVector {
        let w = self.special_windings(side, from, to, self.delta);
        let mut g = ExponentVector::default();
        for (i, n) in w.into_iter().enumerate() {
            g = add_scaled(g, self.special_points[i].weight(j), -n);
        }
        g
    }

    /// Copy offset of tuple position `m` (0-based) in a weight-`h`, color-`j` tuple.
    ///
    /// Weighted copies `w_1…w_h` run from the outermost (nearest the edge) to
    /// the innermost; unweighted copies `u_1…u_{j-h}` from innermost to outermost.
    fn copy_offset(&self, h: usize, j: usize, m: usize) -> Q {
        let rank = if m < h { m + 1 } else { j - m };
        self.delta * rat(rank as i128)
    }

    fn tuple_point(&self, gen: &[usize], h: usize, m: usize) -> Pt {
        let side = if m < h { Side::Left } else { Side::Right };
        let c = self.crossing(side, gen[m]);
        self.point_at(self.t_of(c, self.copy_offset(h, gen.len(), m)))
    }

    /// Grading change from moving coordinate `m` of a weight-`h` tuple to
    /// `to_slot`, counting the special points and the other coordinates.
    pub fn rule_one_shift(&self, gen: &[usize], h: usize, m: usize, to_slot: usize) -> Grading {
        let j = gen.len();
        let side = if m < h { Side::Left } else { Side::Right };
        let eps = self.copy_offset(h, j, m);
        let path = self.domain_loop(side, gen[m], to_slot, eps);
        let mut g = Grading::default();
        for i in 0..3 {
            let n = winding(&path, Self::corner(i));
            g = g.add_additive(add_scaled(ExponentVector::default(), self.special_points[i].weight(j as i64), -n));
        }
        let normal = {
            let d = self.dir();
            Pt::new(-d.y, d.x).scale(self.delta * Q::new(1, 64 * (d.x + d.y).to_integer() + 1))
        };
        for r in (0..j).filter(|&r| r != m) {
            let z = self.tuple_point(gen, h, r);
            let both = winding(&path, z.add(normal)) + winding(&path, z.sub(normal));
            g.e_q_non -= 2 * both;
        }
        g
    }

    /// Pairs `(left slot, right slot)` joined by a piece of `α` in the middle region.
    pub fn through_arcs(&self) -> Vec<(usize, usize)> {
        self.crossings
            .windows(2)
            .filter(|w| w[0].side != w[1].side)
            .map(|w| if w[0].side == Side::Left { (w[0].slot, w[1].slot) } else { (w[1].slot, w[0].slot) })
            .collect()
    }

    /// True iff the bridges of the closure are the horizontal edges of the
    /// front square, i.e. the word ends in a top twist. `α` crosses the
    /// bridges `p - 1` times in its interior.
    pub fn bridges_horizontal(&self) -> bool {
        self.word.last() == Some(&TwistMove::Top)
    }

    /// Coordinate across the bridge lines, and along them.
    fn split(&self, p: Pt) -> (Q, Q) {
        if self.bridges_horizontal() {
            (p.y, p.x)
        } else {
            (p.x, p.y)
        }
    }

    fn join(&self, across: Q, along: Q) -> Pt {
        if self.bridges_horizontal() {
            Pt::new(along, across)
        } else {
            Pt::new(across, along)
        }
    }

    /// Crossings of the boundary of a thin neighbourhood of `α` with the two
    /// bridges, in order: `(near, into_front)`. `near` marks the bridge that
    /// contains both endpoints of `α`; `into_front` the crossing direction.
    ///
    /// The boundary lifts to a parallel copy of the segment doubled through
    /// its far end, which is the image of `α` under the half-turn there.
    pub fn boundary_crossings(&self) -> Vec<(bool, bool)> {
        let (a, d) = (self.origin(), self.dir());
        let (dx, dy) = (d.x.to_integer(), d.y.to_integer());
        let eta = Q::new(1, 4 * (dx * dx + dy * dy) + 1);
        let start = a.add(Pt::new(-d.y, d.x).scale(eta));
        let span = d.scale(rat(2));
        let mut cuts: Vec<(Q, bool, i128)> = vec![];
        for (horizontal, c0, s) in [(true, start.y, span.y), (false, start.x, span.x)] {
            for k in lines_between(c0, s) {
                cuts.push(((rat(k) - c0) / s, horizontal, k));
            }
        }
        cuts.sort_by_key(|x| x.0);
        let (a_across, _) = self.split(a);
        let horizontal = self.bridges_horizontal();
        let mut out = vec![];
        for (i, &(t, h, k)) in cuts.iter().enumerate() {
            if h != horizontal {
                continue;
            }
            let next = cuts.get(i + 1).map_or(Q::one(), |c| c.0);
            let mid = start.add(span.scale((t + next) / rat(2)));
            out.push(((rat(k) - a_across).to_integer().is_even(), front(mid)));
        }
        out
    }

    /// For each interior crossing of `α` with the bridge not containing its
    /// endpoints, in order along `α`: the windings about `P_L, P_M, P_R` of
    /// the loop from the first such crossing along `α` to this one and back
    /// beside the bridge on the back face.
    pub fn far_bridge_windings(&self) -> Vec<[i64; 3]> {
        let (a, d) = (self.origin(), self.dir());
        let (a_across, _) = self.split(a);
        let (d_across, _) = self.split(d);
        let gap = Q::new(1, 4 * (d.x * d.y).to_integer().abs() + 4);
        let points: Vec<Pt> = lines_between(a_across, d_across)
            .into_iter()
            .filter(|&k| (rat(k) - a_across).to_integer().is_odd())
            .map(|k| {
                let t = (rat(k) - a_across) / d_across;
                let p = self.point_at(t + gap);
                if front(p) {
                    self.point_at(t - gap)
                } else {
                    p
                }
            })
            .collect();
        let Some(&first) = points.first() else { return vec![] };
        let (x0, y0) = self.split(first);
        points
            .iter()
            .map(|&p| {
                let (across, along) = self.split(p);
                let base = if ((across - x0) / rat(2)).is_integer() { y0 } else { -y0 };
                let f = along.floor();
                let m = ((f - base) / rat(2)).ceil();
                let back = base + m * rat(2);
                assert!(back < f + Q::one(), "return path leaves the bridge");
                let path = [(first, p), (p, self.join(across, back))];
                [0, 1, 2].map(|i| winding(&path, Self::corner(i)))
            })
            .collect()
    }

    /// JSON dump of the lift of `α`, the events and the labels.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "start": self.start.name(),
            "config": self.config.name(),
            "word": self.word.iter().map(|m| m.to_string()).collect::<String>(),
            "alpha": self.alpha,
            "special_points": self.special_points.map(|s| s.to_string()),
            "left": self.left_count(),
            "right": self.right_count(),
            "events": self.events,
        })
    }
}

fn add_scaled(g: ExponentVector, w: ExponentVector, n: i64) -> ExponentVector {
    ExponentVector::new(g.e_a + n * w.e_a, g.e_q + n * w.e_q, g.e_s + n * w.e_s, g.e_t + n * w.e_t)
}

/// Relative grading of a generator, with the `q`-degree split into its
/// additive part `Q` and the non-additive remainder.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    pub e_a: i64,
    pub e_q_add: i64,
    pub e_q_non: i64,
    pub e_s: i64,
    pub e_t: i64,
}

impl Grading {
    /// The monomial `a^e_a q^(Q + (q-Q)) s^e_s t^e_t`.
    pub fn monomial(&self) -> ExponentVector {
        ExponentVector::new(self.e_a, self.e_q_add + self.e_q_non, self.e_s, self.e_t)
    }

    /// The monomial with the non-additive part dropped.
    pub fn additive(&self) -> ExponentVector {
        ExponentVector::new(self.e_a, self.e_q_add, self.e_s, self.e_t)
    }

    fn add_additive(mut self, e: ExponentVector) -> Self {
        self.e_a += e.e_a;
        self.e_q_add += e.e_q;
        self.e_s += e.e_s;
        self.e_t += e.e_t;
        self
    }

    fn add_total(mut self, e: ExponentVector) -> Self {
        self.e_a += e.e_a;
        self.e_q_non += e.e_q;
        self.e_s += e.e_s;
        self.e_t += e.e_t;
        self
    }
}

impl std::ops::Add for Grading {
    type Output = Grading;
    fn add(self, o: Grading) -> Grading {
        Grading {
            e_a: self.e_a + o.e_a,
            e_q_add: self.e_q_add + o.e_q_add,
            e_q_non: self.e_q_non + o.e_q_non,
            e_s: self.e_s + o.e_s,
            e_t: self.e_t + o.e_t,
        }
    }
}

impl std::ops::Sub for Grading {
    type Output = Grading;
    fn sub(self, o: Grading) -> Grading {
        Grading {
            e_a: self.e_a - o.e_a,
            e_q_add: self.e_q_add - o.e_q_add,
            e_q_non: self.e_q_non - o.e_q_non,
            e_s: self.e_s - o.e_s,
            e_t: self.e_t - o.e_t,
        }
    }
}

/// A `j`-tuple of intersections: the first `weight` entries are left slots
/// on `w_1…w_h`, the rest right slots on `u_1…u_{j-h}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub weight: usize,
    pub tuple: Vec<usize>,
    pub grading: Grading,
}

/// Generators of one diagram and color, grouped by weight.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GradedGeneratorSet {
    pub j: usize,
    pub by_weight: Vec<Vec<Generator>>,
    /// The grading-zero generator: the iterated clone of the start generator.
    pub base: Generator,
}

impl GradedGeneratorSet {
    /// Generating function of each weight, optionally without the non-additive part.
    pub fn sums(&self, additive_only: bool) -> Vec<LaurentPoly4> {
        self.by_weight
            .iter()
            .map(|gs| {
                let mut p = LaurentPoly4::zero();
                for g in gs {
                    let m = if additive_only { g.grading.additive() } else { g.grading.monomial() };
                    p.add_term(m, 1.into());
                }
                p
            })
            .collect()
    }

    pub fn find(&self, weight: usize, tuple: &[usize]) -> Option<&Generator> {
        self.by_weight.get(weight)?.iter().find(|g| g.tuple == tuple)
    }
}

/// All tuples of the diagram at color `j`, with zero gradings.
pub fn enumerate_generators(d: &Diagram, j: usize) -> GradedGeneratorSet {
    let (l, r) = (d.left_count(), d.right_count());
    let by_weight: Vec<Vec<Generator>> = (0..=j)
        .map(|h| {
            let mut out = vec![vec![]];
            for m in 0..j {
                let n = if m < h { l } else { r };
                out = out
                    .into_iter()
                    .flat_map(|t: Vec<usize>| (0..n).map(move |s| [t.clone(), vec![s]].concat()))
                    .collect();
            }
            out.into_iter().map(|tuple| Generator { weight: h, tuple, grading: Grading::default() }).collect()
        })
        .collect();
    let base = Generator { weight: 0, tuple: vec![base_slot(d); j], grading: Grading::default() };
    GradedGeneratorSet { j, by_weight, base }
}

/// Right slot of the iterated clone of the trivial diagram's intersection.
fn base_slot(d: &Diagram) -> usize {
    let mut slot = 0;
    for n in 0..d.word.len() {
        let (prev, next) = (diagram_of_word(&d.word[..n], d.start), diagram_of_word(&d.word[..=n], d.start));
        slot = step_map(&prev, &next, d.word[n]).right_to_right[slot];
    }
    slot
}

/// How the intersections of one diagram reappear after a twist.
struct StepMap {
    left_to_left: Vec<usize>,
    left_to_right: Vec<usize>,
    right_to_left: Vec<usize>,
    right_to_right: Vec<usize>,
}

fn step_map(prev: &Diagram, next: &Diagram, m: TwistMove) -> StepMap {
    let old = prev.along();
    let new = next.along();
    let pick = |v: &[(Side, usize)], s: Side| v.iter().filter(|c| c.0 == s).copied().collect::<Vec<_>>();
    let (grow, keep) = match m {
        TwistMove::Top => (Side::Left, Side::Right),
        TwistMove::Right => (Side::Right, Side::Left),
    };
    let mut map = StepMap {
        left_to_left: vec![usize::MAX; prev.left_count()],
        left_to_right: vec![usize::MAX; prev.left_count()],
        right_to_left: vec![usize::MAX; prev.right_count()],
        right_to_right: vec![usize::MAX; prev.right_count()],
    };
    let grown = pick(&new, grow);
    assert_eq!(grown.len(), old.len(), "twist must absorb every old intersection");
    for (&(os, oslot), &(_, nslot)) in old.iter().zip(&grown) {
        match (os, grow) {
            (Side::Left, Side::Left) => map.left_to_left[oslot] = nslot,
            (Side::Right, Side::Left) => map.right_to_left[oslot] = nslot,
            (Side::Left, Side::Right) => map.left_to_right[oslot] = nslot,
            (Side::Right, Side::Right) => map.right_to_right[oslot] = nslot,
        }
    }
    let (ok, nk) = (pick(&old, keep), pick(&new, keep));
    assert_eq!(ok.len(), nk.len());
    for (&(_, oslot), &(_, nslot)) in ok.iter().zip(&nk) {
        match keep {
            Side::Left => map.left_to_left[oslot] = nslot,
            Side::Right => map.right_to_right[oslot] = nslot,
        }
    }
    map
}

/// The clone, after the twist `m`, of a weight-`weight` tuple of `prev`: the
/// child of the same weight that steals nothing.
pub fn clone_tuple(prev: &Diagram, m: TwistMove, weight: usize, tuple: &[usize]) -> Vec<usize> {
    let mut word = prev.word.clone();
    word.push(m);
    let next = diagram_of_word(&word, prev.start);
    let map = step_map(prev, &next, m);
    let (lp, rp) = tuple.split_at(weight);
    let (left, right): (Vec<usize>, Vec<usize>) = match m {
        TwistMove::Top => (
            lp.iter().rev().map(|&s| map.left_to_left[s]).collect(),
            rp.iter().map(|&s| map.right_to_right[s]).collect(),
        ),
        TwistMove::Right => (
            lp.iter().map(|&s| map.left_to_left[s]).collect(),
            rp.iter().rev().map(|&s| map.right_to_right[s]).collect(),
        ),
    };
    [left, right].concat()
}

/// Subsets of `0..n` of size `k`, as sorted position lists.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Interleaves `kept` at `positions` with `stolen` elsewhere; also returns
/// the number of inverted (kept, stolen) pairs. With `stolen_first` a pair
/// counts when the stolen entry comes first, otherwise when the kept one does.
fn interleave(kept: &[usize], stolen: &[usize], positions: &[usize], stolen_first: bool) -> (Vec<usize>, i64) {
    let n = kept.len() + stolen.len();
    let (mut ki, mut si, mut inv) = (0, 0, 0i64);
    let mut out = Vec::with_capacity(n);
    for pos in 0..n {
        if positions.contains(&pos) {
            out.push(kept[ki]);
            ki += 1;
            if stolen_first {
                inv += si as i64;
            }
        } else {
            out.push(stolen[si]);
            si += 1;
            if !stolen_first {
                inv += ki as i64;
            }
        }
    }
    (out, inv)
}

/// Grades every generator by the parent/child/clone recursion along the
/// twist word. Each child's grading is its parent's times the rule monomial
/// `(k → h)` and `q^(±2)` per sorting inversion.
pub fn grade_generators(d: &Diagram, j: usize) -> GradedGeneratorSet {
    let mut set = recursion(d, j);
    split_additive(d, &mut set);
    set
}

/// The recursion itself; the whole `q`-degree is left in the non-additive slot.
fn recursion(d: &Diagram, j: usize) -> GradedGeneratorSet {
    let ji = j as i64;
    let mut prev = diagram_of_word(&[], d.start);
    let mut gens: Vec<Generator> = vec![Generator { weight: 0, tuple: vec![0; j], grading: Grading::default() }];
    let mut base = vec![0usize; j];
    let mut config = d.start;
    for n in 0..d.word.len() {
        let m = d.word[n];
        let next = diagram_of_word(&d.word[..=n], d.start);
        let map = step_map(&prev, &next, m);
        let rule = RuleId::of(config, m);
        let mut children = Vec::new();
        for g in &gens {
            let k = g.weight;
            let (lp, rp) = g.tuple.split_at(k);
            for h in rule.range(j as u32, k as u32) {
                let h = h as usize;
                let (ea, eq, es) = rule.monomial(ji, k as i64, h as i64);
                let mono = ExponentVector::new(ea, eq, es, -(h as i64));
                match m {
                    TwistMove::Top => {
                        let kept: Vec<usize> = lp.iter().rev().map(|&s| map.left_to_left[s]).collect();
                        let stolen: Vec<usize> = rp[..h - k].iter().map(|&s| map.right_to_left[s]).collect();
                        let rest: Vec<usize> = rp[h - k..].iter().map(|&s| map.right_to_right[s]).collect();
                        for pos in subsets(h, k) {
                            let (left, inv) = interleave(&kept, &stolen, &pos, true);
                            let grading = g.grading.add_total(mono).add_total(ExponentVector::new(0, 2 * inv, 0, 0));
                            children.push(Generator { weight: h, tuple: [left, rest.clone()].concat(), grading });
                        }
                    }
                    TwistMove::Right => {
                        let left: Vec<usize> = lp[..h].iter().map(|&s| map.left_to_left[s]).collect();
                        let stolen: Vec<usize> = lp[h..].iter().map(|&s| map.left_to_right[s]).collect();
                        let kept: Vec<usize> = rp.iter().rev().map(|&s| map.right_to_right[s]).collect();
                        for pos in subsets(j - h, j - k) {
                            let (right, inv) = interleave(&kept, &stolen, &pos, false);
                            let grading = g.grading.add_total(mono).add_total(ExponentVector::new(0, -2 * inv, 0, 0));
                            children.push(Generator { weight: h, tuple: [left.clone(), right].concat(), grading });
                        }
                    }
                }
            }
        }
        gens = children;
        base = base.iter().map(|&s| map.right_to_right[s]).collect();
        config = config_step(config, m);
        prev = next;
    }
    let mut by_weight = vec![vec![]; j + 1];
    for g in gens {
        by_weight[g.weight].push(g);
    }
    for gs in &mut by_weight {
        gs.sort_by(|x, y| x.tuple.cmp(&y.tuple));
    }
    let base = by_weight[0].iter().find(|g| g.tuple == base).expect("base generator exists").clone();
    GradedGeneratorSet { j, by_weight, base }
}

/// Moves the part of each `q`-degree that is the sum of the coordinates'
/// single-point degrees into `Q`; the remainder is the non-additive part.
fn split_additive(d: &Diagram, set: &mut GradedGeneratorSet) {
    let single = point_gradings(d, set.j as i64);
    for gs in &mut set.by_weight {
        for g in gs.iter_mut() {
            let q: i64 = g
                .tuple
                .iter()
                .enumerate()
                .map(|(m, &s)| if m < g.weight { single.left[s].e_q } else { single.right[s].e_q })
                .sum();
            g.grading.e_q_add = q;
            g.grading.e_q_non -= q;
        }
    }
    set.base = set.find(0, &set.base.tuple).expect("base generator exists").clone();
}

/// Gradings of single intersections (the color-one generators), with the
/// `X⁺` weight taken at color `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointGradings {
    pub left: Vec<ExponentVector>,
    pub right: Vec<ExponentVector>,
}

impl PointGradings {
    /// Generating sums `(W_L, W_R)`.
    pub fn sums(&self) -> (LaurentPoly4, LaurentPoly4) {
        let sum = |v: &[ExponentVector]| {
            let mut p = LaurentPoly4::zero();
            for &m in v {
                p.add_term(m, 1.into());
            }
            p
        };
        (sum(&self.left), sum(&self.right))
    }
}

/// Single-point gradings from the color-one recursion, with `a ↦ a q^(2-2j)`.
pub fn point_gradings(d: &Diagram, j: i64) -> PointGradings {
    let set = recursion(d, 1);
    let adjust = |g: &Grading| {
        let m = g.monomial();
        ExponentVector::new(m.e_a, m.e_q - (2 * j - 2) * m.e_a, m.e_s, m.e_t)
    };
    let mut left = vec![ExponentVector::default(); d.left_count()];
    let mut right = vec![ExponentVector::default(); d.right_count()];
    for g in &set.by_weight[1] {
        left[g.tuple[0]] = adjust(&g.grading);
    }
    for g in &set.by_weight[0] {
        right[g.tuple[0]] = adjust(&g.grading);
    }
    PointGradings { left, right }
}

/// Color-one gradings computed independently from windings of domains
/// around the special points (rule (1)) and one simple slide (rule (2)).
///
/// Returns `None` when the slides disagree with one another.
pub fn winding_gradings(d: &Diagram) -> Option<PointGradings> {
    let mut left = vec![ExponentVector::default(); d.left_count()];
    let mut right = vec![ExponentVector::default(); d.right_count()];
    for (side, out) in [(Side::Left, &mut left), (Side::Right, &mut right)] {
        for (s, g) in out.iter_mut().enumerate().skip(1) {
            *g = d.domain_shift(side, 0, s, 1);
        }
    }
    let slide = d.special_points[1].slide(1);
    let mut offset = None;
    for (l, r) in d.through_arcs() {
        // grading(right r) = grading(left l) · slide
        let o = add_scaled(add_scaled(left[l], slide, 1), right[r], -1);
        match offset {
            None => offset = Some(o),
            Some(prev) if prev != o => return None,
            _ => {}
        }
    }
    if let Some(o) = offset {
        for g in &mut right {
            *g = add_scaled(*g, o, 1);
        }
    }
    Some(PointGradings { left, right })
}

/// Per-weight outcome of a cross-validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightReport {
    pub weight: usize,
    pub count: usize,
    pub expected_count: u64,
    /// Engine polynomial divided by the geometric one, when that is a monomial.
    pub residual_monomial: Option<ExponentVector>,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Geometric gradings against the twist engine, with one global monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub tangle: String,
    pub j: usize,
    pub start: BoundaryConfig,
    pub per_weight: Vec<WeightReport>,
    /// The common monomial, when every weight agrees on one.
    pub global_monomial: Option<ExponentVector>,
    pub pass: bool,
}

/// Sums the graded generators per weight and compares with the twist engine.
pub fn cross_validate(tangle: &TangleDesc, j: usize, start: BoundaryConfig) -> CrossValidation {
    let d = build_diagram(tangle, start);
    let set = grade_generators(&d, j);
    let state = TwistEngine::new().run(&tangle.word, j as u32, start);
    compare_with_state(tangle, &d, &set, &state.coeffs, start)
}

/// Compares graded sums with engine coefficients; also used for negative controls.
pub fn compare_with_state(
    tangle: &TangleDesc,
    d: &Diagram,
    set: &GradedGeneratorSet,
    coeffs: &[LaurentPoly4],
    start: BoundaryConfig,
) -> CrossValidation {
    let sums = set.sums(false);
    let (l, r) = (d.left_count() as u64, d.right_count() as u64);
    let mut per_weight = vec![];
    for (h, (geo, eng)) in sums.iter().zip(coeffs).enumerate() {
        let residual = eng.monomial_ratio(geo, false).map(|(_, m)| m);
        per_weight.push(WeightReport {
            weight: h,
            count: set.by_weight[h].len(),
            expected_count: l.pow(h as u32) * r.pow((set.j - h) as u32),
            residual_monomial: residual,
            matches: false,
        });
    }
    let global = per_weight.iter().find_map(|w| w.residual_monomial);
    for w in &mut per_weight {
        w.matches =
            w.residual_monomial.is_some() && w.residual_monomial == global && w.count as u64 == w.expected_count;
    }
    let pass = sums.len() == coeffs.len() && per_weight.iter().all(|w| w.matches);
    CrossValidation {
        tangle: tangle.to_string(),
        j: set.j,
        start,
        per_weight,
        global_monomial: if pass { global } else { None },
        pass,
    }
}

/// With the non-additive part dropped, checks that the weight-`h` sum is
/// `W_L^h · W_R^(j-h)` up to one monomial per weight.
pub fn additive_factorization_check(d: &Diagram, j: usize) -> bool {
    let set = grade_generators(d, j);
    let (wl, wr) = point_gradings(d, j as i64).sums();
    set.sums(true).iter().enumerate().all(|(h, sum)| {
        let expect = &wl.pow(h as u32) * &wr.pow((j - h) as u32);
        sum.equal_up_to_monomial(&expect, false)
    })
}

/// Number of generators whose `a`, `s`, `t` and `Q` degrees are not the sum of
/// their coordinates' single-point degrees plus a constant of their weight.
pub fn additivity_defects(d: &Diagram, set: &GradedGeneratorSet) -> usize {
    let single = point_gradings(d, set.j as i64);
    let mut defects = 0;
    for gs in &set.by_weight {
        let mut constant = None;
        for g in gs {
            let mut sum = ExponentVector::default();
            for (m, &s) in g.tuple.iter().enumerate() {
                let p = if m < g.weight { single.left[s] } else { single.right[s] };
                sum = add_scaled(sum, p, 1);
            }
            let off = add_scaled(g.grading.additive(), sum, -1);
            match constant {
                None => constant = Some(off),
                Some(c) if c != off => defects += 1,
                _ => {}
            }
        }
    }
    defects
}

/// The color-one gradings from windings agree with the twist engine up to
/// one global monomial, and all simple slides agree.
pub fn verify_windings(tangle: &TangleDesc, start: BoundaryConfig) -> bool {
    let d = build_diagram(tangle, start);
    let Some(w) = winding_gradings(&d) else { return false };
    let (wl, wr) = w.sums();
    let state = TwistEngine::new().run(&tangle.word, 1, start);
    let Some(a) = state.coeffs[0].monomial_ratio(&wr, false) else { return false };
    if wl.is_zero() {
        return state.coeffs[1].is_zero();
    }
    state.coeffs[1].monomial_ratio(&wl, false) == Some(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// After a twist every absorbed intersection sits next to its twin on
    /// the untouched vertical, as the bent vertical runs alongside it.
    #[test]
    fn absorbed_intersections_sit_next_to_their_twins() {
        let words = ["TTRTT", "TRRRT", "TTTRRT", "TRTRTRT", "TTRRRTTR"];
        for w in words {
            let word: Vec<TwistMove> =
                w.chars().map(|c| if c == 'T' { TwistMove::Top } else { TwistMove::Right }).collect();
            for n in 0..word.len() {
                let prev = diagram_of_word(&word[..n], BoundaryConfig::UP);
                let next = diagram_of_word(&word[..=n], BoundaryConfig::UP);
                let map = step_map(&prev, &next, word[n]);
                let along = next.along();
                let pos = |c: (Side, usize)| along.iter().position(|&x| x == c).unwrap();
                let twins: Vec<((Side, usize), (Side, usize))> = match word[n] {
                    TwistMove::Top => (0..prev.right_count())
                        .map(|s| ((Side::Left, map.right_to_left[s]), (Side::Right, map.right_to_right[s])))
                        .collect(),
                    TwistMove::Right => (0..prev.left_count())
                        .map(|s| ((Side::Right, map.left_to_right[s]), (Side::Left, map.left_to_left[s])))
                        .collect(),
                };
                for (a, b) in twins {
                    assert_eq!(pos(a).abs_diff(pos(b)), 1, "{w} step {n}");
                }
            }
        }
    }

    #[test]
    fn winding_of_small_loops() {
        let p = |x, y| Pt::new(Q::new(x, 4), Q::new(y, 4));
        let path = |pts: &[Pt]| pts.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>();
        let origin = Pt::new(rat(0), rat(0));
        // P_M is a cone point: one turn around it lifts to a path from v to -v.
        let half = [p(2, -1), p(2, 3), p(-2, 3), p(-2, 1)];
        assert_eq!(winding(&path(&half), origin), 1);
        let back: Vec<Pt> = half.iter().rev().copied().collect();
        assert_eq!(winding(&path(&back), origin), -1);
        // A full turn in the cover is two turns in the pillowcase.
        let full = [p(2, -1), p(2, 3), p(-2, 3), p(-2, -3), p(2, -3), p(2, -1)];
        assert_eq!(winding(&path(&full), origin), 2);
        let away = [p(1, 2), p(3, 2), p(3, 5), p(1, 5), p(1, 2)];
        assert_eq!(winding(&path(&away), origin), 0);
    }
}
