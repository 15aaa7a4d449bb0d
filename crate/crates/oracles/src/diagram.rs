//! Oriented crossing lists of closed 2-bridge diagrams, built directly from a
//! twist word.
//!
//! Every crossing is drawn with legs SW, SE, NE, NW (counterclockwise) and the
//! SW–NE strand over. The starting tangle is two vertical arcs; a top twist
//! glues a crossing onto the two top ends, a right twist onto the two right
//! ends. The closure joins left ends and right ends (`lr`) or top ends and
//! bottom ends.

/// One oriented crossing: each strand enters on edge `in_` and leaves on `out`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    /// +1 or -1.
    pub sign: i32,
}

/// A closed oriented diagram. Edges are numbered `0..edges`; `component[e]` is
/// the component of edge `e`, and the left starting arc lies on component 0.
#[derive(Clone, Debug)]
pub struct Diagram {
    pub crossings: Vec<Crossing>,
    pub edges: usize,
    pub component: Vec<usize>,
    pub components: usize,
}

impl Diagram {
    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|c| c.sign).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Port {
    /// (crossing, leg) with legs SW=0, SE=1, NE=2, NW=3.
    X(usize, usize),
    /// (arc, end) with bottom=0, top=1.
    Arc(usize, usize),
}

fn through(p: Port) -> Port {
    match p {
        Port::X(c, l) => Port::X(c, (l + 2) % 4),
        Port::Arc(a, e) => Port::Arc(a, 1 - e),
    }
}

/// Builds the closure of the tangle given by `word` (`true` = top twist).
///
/// The left arc points up; the right arc points up if `parallel`, down
/// otherwise. Returns `None` if the closure is not orientation-consistent.
pub fn two_bridge(word: &[bool], parallel: bool, lr: bool) -> Option<Diagram> {
    let mut links: Vec<(Port, Port)> = Vec::new();
    // boundary ends: NW, NE, SW, SE
    let (mut nw, mut ne, sw, mut se) = (Port::Arc(0, 1), Port::Arc(1, 1), Port::Arc(0, 0), Port::Arc(1, 0));
    let mut n = 0;
    for &top in word {
        let c = n;
        n += 1;
        if top {
            links.push((Port::X(c, 0), nw));
            links.push((Port::X(c, 1), ne));
            nw = Port::X(c, 3);
            ne = Port::X(c, 2);
        } else {
            links.push((Port::X(c, 3), ne));
            links.push((Port::X(c, 0), se));
            ne = Port::X(c, 2);
            se = Port::X(c, 1);
        }
    }
    if lr {
        links.push((nw, sw));
        links.push((ne, se));
    } else {
        links.push((nw, ne));
        links.push((sw, se));
    }
    let partner = |p: Port| -> Port {
        for (a, b) in &links {
            if *a == p {
                return *b;
            }
            if *b == p {
                return *a;
            }
        }
        unreachable!("unlinked port {p:?}")
    };
    // Trace components from each arc's outgoing end. Edges run from one
    // crossing exit to the next crossing entry; arcs are transparent.
    let mut exits: Vec<(Port, usize)> = Vec::new();
    // (crossing, entry leg) -> incoming edge
    let mut entries: Vec<((usize, usize), usize)> = Vec::new();
    let mut component = Vec::new();
    let mut seen_arc = [None::<usize>, None];
    let mut comps = 0;
    for (arc, out_end) in [(0usize, 1usize), (1, if parallel { 1 } else { 0 })] {
        if let Some(e) = seen_arc[arc] {
            if e != out_end {
                return None;
            }
            continue;
        }
        let start = Port::Arc(arc, out_end);
        let mut path = Vec::new();
        let mut exit = start;
        loop {
            let enter = partner(exit);
            if let Port::Arc(a, e) = enter {
                if seen_arc[a].is_some_and(|x| x != 1 - e) {
                    return None;
                }
                seen_arc[a] = Some(1 - e);
            }
            exit = through(enter);
            if let Port::X(c, l) = enter {
                path.push((c, l));
            }
            if exit == start {
                break;
            }
            if path.len() > 4 * n + 4 {
                return None;
            }
        }
        if path.is_empty() {
            component.push(comps);
        }
        let first = component.len();
        for (idx, (c, l)) in path.iter().enumerate() {
            let e = first + idx;
            component.push(comps);
            exits.push((Port::X(*c, (l + 2) % 4), e));
        }
        for (idx, (c, l)) in path.iter().enumerate() {
            let prev = first + (idx + path.len() - 1) % path.len();
            entries.push(((*c, *l), prev));
        }
        comps += 1;
    }
    let edge_out = |p: Port| exits.iter().find(|(q, _)| *q == p).map(|(_, e)| *e);
    let edge_in = |c: usize, l: usize| entries.iter().find(|(k, _)| *k == (c, l)).map(|(_, e)| *e);
    let mut crossings = Vec::with_capacity(n);
    for c in 0..n {
        // each strand: enters at leg l, exits at leg l+2
        let mut strands = Vec::new();
        for l in 0..4 {
            if let Some(e_in) = edge_in(c, l) {
                strands.push((l, e_in, edge_out(Port::X(c, (l + 2) % 4))?));
            }
        }
        if strands.len() != 2 {
            return None;
        }
        let dir = |enter_leg: usize| -> (i32, i32) {
            // unit direction from the entry leg towards the exit leg
            match enter_leg {
                0 => (1, 1),
                1 => (-1, 1),
                2 => (-1, -1),
                _ => (1, -1),
            }
        };
        let (over, under) = if strands[0].0 % 2 == 0 { (strands[0], strands[1]) } else { (strands[1], strands[0]) };
        let (o, u) = (dir(over.0), dir(under.0));
        let cross = o.0 * u.1 - o.1 * u.0;
        crossings.push(Crossing {
            over_in: over.1,
            over_out: over.2,
            under_in: under.1,
            under_out: under.2,
            sign: cross.signum(),
        });
    }
    Some(Diagram { crossings, edges: component.len(), component, components: comps })
}
