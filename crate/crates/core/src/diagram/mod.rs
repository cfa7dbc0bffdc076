//! Oriented link diagrams as planar combinatorial maps.
//!
//! A crossing lists its four incident edge labels counterclockwise,
//! starting at the incoming under-strand (slot 0). Slot 2 is therefore the
//! outgoing under-strand and slots 1, 3 carry the over-strand. Corner `k`
//! of a crossing is the sector between slot `k` and slot `k + 1`.

mod moves;
mod parse;

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use moves::{Kink, Pass};
pub use parse::{parse_braid, parse_input, parse_pd, Braid, ParsedInput};

use crate::{Error, Result};

/// Crossing sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Colour {
    White,
    Black,
}

impl Colour {
    pub fn other(self) -> Colour {
        match self {
            Colour::White => Colour::Black,
            Colour::Black => Colour::White,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// One end of an edge: a crossing and the slot it occupies there.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct End {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Edge labels (0-based) counterclockwise from the incoming under-strand.
    pub edges: [usize; 4],
    pub sign: Sign,
}

impl Crossing {
    /// Slot where the over-strand enters.
    pub fn over_in_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Region {
    pub id: usize,
    /// `(crossing, corner)` pairs in boundary order.
    pub corners: Vec<(usize, usize)>,
    pub colour: Colour,
}

/// Kauffman's corner label: `1`, `s = t^{1/2}` or `s^{-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CornerLabel {
    One,
    SHalf,
    SMinusHalf,
}

impl CornerLabel {
    /// Exponent of `s`.
    pub fn exponent(self) -> i32 {
        match self {
            CornerLabel::One => 0,
            CornerLabel::SHalf => 1,
            CornerLabel::SMinusHalf => -1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerInfo {
    pub region: usize,
    pub label: CornerLabel,
    pub left_of_over: bool,
    pub left_of_under: bool,
}

/// Corner data of one crossing.
///
/// `ik` holds the two opposite corners bounded by two incoming or two
/// outgoing rays (Kauffman labels `s^{+-1}`); `jl` holds the two coherently
/// oriented corners (label `1`). Which member of a pair is called `i`
/// rather than `k` does not matter for any matrix built from the frame.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CornerFrame {
    pub corners: [CornerInfo; 4],
    pub ik: [usize; 2],
    pub jl: [usize; 2],
}

/// An oriented, connected link diagram with its regions and checkerboard
/// colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    name: Option<String>,
    crossings: Vec<Crossing>,
    /// `[tail, head]` per edge; empty for the crossingless unknot.
    ends: Vec<[End; 2]>,
    /// `(left, right)` region per edge.
    sides: Vec<(usize, usize)>,
    corner_region: Vec<[usize; 4]>,
    regions: Vec<Region>,
    components: usize,
    outer: usize,
    outer_ref: (usize, Side),
}

impl Diagram {
    /// The round unknot: one edge, two regions.
    pub fn unknot() -> Self {
        Diagram {
            name: None,
            crossings: Vec::new(),
            ends: Vec::new(),
            sides: vec![(0, 1)],
            corner_region: Vec::new(),
            regions: vec![
                Region { id: 0, corners: Vec::new(), colour: Colour::Black },
                Region { id: 1, corners: Vec::new(), colour: Colour::White },
            ],
            components: 1,
            outer: 1,
            outer_ref: (0, Side::Right),
        }
    }

    /// Builds a diagram from crossing tuples with 0-based edge labels.
    ///
    /// Orientation is propagated from the under-strands (slot 0 in, slot 2
    /// out). A component that never passes under is oriented along
    /// increasing labels. Labels are then renumbered consecutively along
    /// each oriented component, which leaves already-consecutive labellings
    /// unchanged. `outer` designates the unbounded region as one side of an
    /// edge (in the input labels); by default the region with most corners
    /// is used.
    pub fn from_tuples(tuples: &[[usize; 4]], outer: Option<(usize, Side)>) -> Result<Self> {
        if tuples.is_empty() {
            return Ok(Self::unknot());
        }
        let n_edges = 2 * tuples.len();
        let mut occ: Vec<Vec<End>> = vec![Vec::new(); n_edges];
        for (c, t) in tuples.iter().enumerate() {
            for (slot, &e) in t.iter().enumerate() {
                if e >= n_edges {
                    return Err(Error::EdgeMultiplicity { label: e as i64 + 1, count: 1 });
                }
                occ[e].push(End { crossing: c, slot });
            }
        }
        for (e, o) in occ.iter().enumerate() {
            if o.len() != 2 {
                return Err(Error::EdgeMultiplicity { label: e as i64 + 1, count: o.len() });
            }
        }
        if !crossings_connected(tuples, &occ) {
            return Err(Error::Disconnected);
        }
        let other_end = |e: usize, end: End| if occ[e][0] == end { occ[e][1] } else { occ[e][0] };

        // Orient each component by walking strands.
        let mut oriented: Vec<Option<[End; 2]>> = vec![None; n_edges];
        let mut order: Vec<usize> = Vec::with_capacity(n_edges);
        let mut components = 0;
        for start in 0..n_edges {
            if oriented[start].is_some() {
                continue;
            }
            components += 1;
            let cycle = strand_cycle(tuples, &occ, start);
            // Entry end for the walk: an incoming under-strand if any.
            let head = cycle
                .iter()
                .flat_map(|&e| occ[e].iter().copied())
                .find(|end| end.slot == 0)
                .unwrap_or_else(|| label_order_head(tuples, &occ, &cycle));
            let mut arrive = head;
            let mut e = tuples[head.crossing][head.slot];
            let first = e;
            let mut walk = Vec::with_capacity(cycle.len());
            loop {
                let tail = other_end(e, arrive);
                oriented[e] = Some([tail, arrive]);
                walk.push(e);
                if arrive.slot == 2 || tail.slot == 0 {
                    return Err(Error::Orientation { crossing: arrive.crossing });
                }
                let out = End { crossing: arrive.crossing, slot: (arrive.slot + 2) % 4 };
                e = tuples[out.crossing][out.slot];
                if e == first {
                    if oriented[first].unwrap()[0] != out {
                        return Err(Error::Orientation { crossing: out.crossing });
                    }
                    break;
                }
                if oriented[e].is_some() {
                    return Err(Error::Orientation { crossing: out.crossing });
                }
                arrive = other_end(e, out);
            }
            // The walk above starts at the edge entering `head`; rotate so the
            // component is listed from its smallest label when that keeps
            // the consecutive order.
            let pos = walk.iter().enumerate().min_by_key(|(_, &e)| e).map(|(i, _)| i).unwrap();
            walk.rotate_left(pos);
            order.extend(walk);
        }

        // Canonical relabelling along the oriented components.
        let mut relabel = vec![0usize; n_edges];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let mut crossings = Vec::with_capacity(tuples.len());
        for (c, t) in tuples.iter().enumerate() {
            let edges = t.map(|e| relabel[e]);
            let over_in_is_3 = oriented[t[3]].unwrap()[1] == End { crossing: c, slot: 3 };
            let over_in_is_1 = oriented[t[1]].unwrap()[1] == End { crossing: c, slot: 1 };
            if over_in_is_3 == over_in_is_1 {
                return Err(Error::Orientation { crossing: c });
            }
            let sign = if over_in_is_3 { Sign::Positive } else { Sign::Negative };
            crossings.push(Crossing { edges, sign });
        }
        let mut ends = vec![[End { crossing: 0, slot: 0 }; 2]; n_edges];
        for old in 0..n_edges {
            ends[relabel[old]] = oriented[old].unwrap();
        }
        let outer = outer.map(|(e, side)| (relabel[e], side));
        Self::assemble(crossings, ends, components, outer)
    }

    fn assemble(
        crossings: Vec<Crossing>,
        ends: Vec<[End; 2]>,
        components: usize,
        outer: Option<(usize, Side)>,
    ) -> Result<Self> {
        let n = crossings.len();
        let n_edges = ends.len();
        // Face tracing: a dart is (edge, forward). Arriving at slot `s`, the
        // next dart leaves from slot s - 1, keeping the face on the left and
        // sweeping corner s - 1.
        let mut dart_face = vec![usize::MAX; 2 * n_edges];
        let mut corner_region = vec![[usize::MAX; 4]; n];
        let mut faces: Vec<Vec<(usize, usize)>> = Vec::new();
        for start in 0..2 * n_edges {
            if dart_face[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut corners = Vec::new();
            let mut d = start;
            while dart_face[d] == usize::MAX {
                dart_face[d] = id;
                let (e, fwd) = (d / 2, d % 2 == 0);
                let arrive = if fwd { ends[e][1] } else { ends[e][0] };
                let slot = (arrive.slot + 3) % 4;
                corners.push((arrive.crossing, slot));
                corner_region[arrive.crossing][slot] = id;
                let f = crossings[arrive.crossing].edges[slot];
                let leave = End { crossing: arrive.crossing, slot };
                d = if ends[f][0] == leave { 2 * f } else { 2 * f + 1 };
            }
            faces.push(corners);
        }
        if faces.len() != n + 2 {
            return Err(Error::NonPlanar { crossings: n, edges: n_edges, faces: faces.len() });
        }
        let sides: Vec<(usize, usize)> = (0..n_edges).map(|e| (dart_face[2 * e], dart_face[2 * e + 1])).collect();

        let outer_ref = match outer {
            Some(r) => r,
            None => {
                let big = (0..faces.len()).max_by_key(|&f| (faces[f].len(), core::cmp::Reverse(f))).unwrap();
                let e = sides.iter().position(|&(l, _)| l == big);
                match e {
                    Some(e) => (e, Side::Left),
                    None => (sides.iter().position(|&(_, r)| r == big).unwrap(), Side::Right),
                }
            }
        };
        if outer_ref.0 >= n_edges {
            return Err(Error::InvalidEdge(outer_ref.0));
        }
        let outer = match outer_ref.1 {
            Side::Left => sides[outer_ref.0].0,
            Side::Right => sides[outer_ref.0].1,
        };

        let mut colour: Vec<Option<Colour>> = vec![None; faces.len()];
        colour[outer] = Some(Colour::White);
        let mut queue = VecDeque::from([outer]);
        while let Some(f) = queue.pop_front() {
            let c = colour[f].unwrap();
            for &(l, r) in &sides {
                let g = if l == f {
                    r
                } else if r == f {
                    l
                } else {
                    continue;
                };
                match colour[g] {
                    None => {
                        colour[g] = Some(c.other());
                        queue.push_back(g);
                    }
                    Some(cg) if cg == c => {
                        return Err(Error::NonPlanar { crossings: n, edges: n_edges, faces: faces.len() })
                    }
                    _ => {}
                }
            }
        }
        let regions = faces
            .into_iter()
            .enumerate()
            .map(|(id, corners)| Region { id, corners, colour: colour[id].unwrap() })
            .collect();
        Ok(Diagram { name: None, crossings, ends, sides, corner_region, regions, components, outer, outer_ref })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.sides.len()
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    pub fn outer_region(&self) -> usize {
        self.outer
    }

    pub(crate) fn outer_ref(&self) -> (usize, Side) {
        self.outer_ref
    }

    pub fn colour(&self, region: usize) -> Colour {
        self.regions[region].colour
    }

    /// Regions of the given colour, ascending.
    pub fn regions_of(&self, colour: Colour) -> Vec<usize> {
        self.regions.iter().filter(|r| r.colour == colour).map(|r| r.id).collect()
    }

    /// `[tail, head]` of an edge (none for the crossingless unknot).
    pub fn edge_ends(&self, e: usize) -> Option<[End; 2]> {
        self.ends.get(e).copied()
    }

    /// `(left, right)` regions of an edge with respect to its orientation.
    pub fn edge_sides(&self, e: usize) -> Result<(usize, usize)> {
        self.sides.get(e).copied().ok_or(Error::InvalidEdge(e))
    }

    pub fn region_of_corner(&self, crossing: usize, corner: usize) -> usize {
        self.corner_region[crossing][corner]
    }

    /// True when some edge separates the two regions.
    pub fn are_adjacent(&self, a: usize, b: usize) -> bool {
        a != b && self.sides.iter().any(|&(l, r)| (l == a && r == b) || (l == b && r == a))
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// Connectivity of the underlying 4-valent graph. Construction rejects
    /// disconnected input, so this holds for every `Diagram`.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return true;
        }
        let tuples: Vec<[usize; 4]> = self.crossings.iter().map(|c| c.edges).collect();
        let mut occ: Vec<Vec<End>> = vec![Vec::new(); self.edge_count()];
        for (c, t) in tuples.iter().enumerate() {
            for (slot, &e) in t.iter().enumerate() {
                occ[e].push(End { crossing: c, slot });
            }
        }
        crossings_connected(&tuples, &occ)
    }

    pub fn corner_frame(&self, c: usize) -> CornerFrame {
        let x = &self.crossings[c];
        let corners = core::array::from_fn(|k| {
            let left_of_under = k == 2 || k == 3;
            let left_of_over = match x.sign {
                Sign::Positive => k == 1 || k == 2,
                Sign::Negative => k == 0 || k == 3,
            };
            let label = match (left_of_over, left_of_under) {
                (true, false) => CornerLabel::SHalf,
                (false, true) => CornerLabel::SMinusHalf,
                _ => CornerLabel::One,
            };
            CornerInfo { region: self.corner_region[c][k], label, left_of_over, left_of_under }
        });
        let (ik, jl) = match x.sign {
            Sign::Positive => ([1, 3], [0, 2]),
            Sign::Negative => ([0, 2], [1, 3]),
        };
        CornerFrame { corners, ik, jl }
    }

    /// Corners of crossing `c` carrying colour `v` (always an opposite pair).
    pub fn colour_corners(&self, c: usize, v: Colour) -> [usize; 2] {
        if self.colour(self.corner_region[c][0]) == v {
            [0, 2]
        } else {
            [1, 3]
        }
    }

    /// Gordon-Litherland incidence sign: `+1` when the `v`-corners are the
    /// ones swept by turning the over-strand counterclockwise onto the
    /// under-strand (corners 1 and 3). Independent of orientation.
    pub fn eta(&self, c: usize, v: Colour) -> i64 {
        if self.colour_corners(c, v) == [1, 3] {
            1
        } else {
            -1
        }
    }

    /// Orientation type: `+1` when the `v`-corners lie between two
    /// incoming or two outgoing rays, `-1` when they are coherently
    /// oriented. Independent of which strand is over.
    pub fn orientation_type(&self, c: usize, v: Colour) -> i64 {
        let frame = self.corner_frame(c);
        let vc = self.colour_corners(c, v);
        if frame.ik.contains(&vc[0]) {
            1
        } else {
            -1
        }
    }

    /// True when, for each colour, the orientation type is the same at all
    /// crossings.
    pub fn is_special(&self) -> bool {
        let mut types = (0..self.crossing_count()).map(|c| self.orientation_type(c, Colour::White));
        match types.next() {
            None => true,
            Some(t0) => types.all(|t| t == t0),
        }
    }

    /// PD text with 1-based labels, `X a b c d` records joined by `; `.
    pub fn to_pd_string(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if i > 0 {
                out.push_str("; ");
            }
            let [a, b, cc, d] = c.edges.map(|e| e + 1);
            out.push_str(&alloc::format!("X {a} {b} {cc} {d}"));
        }
        out
    }
}

fn crossings_connected(tuples: &[[usize; 4]], occ: &[Vec<End>]) -> bool {
    let n = tuples.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(c) = stack.pop() {
        for &e in &tuples[c] {
            for end in &occ[e] {
                if !seen[end.crossing] {
                    seen[end.crossing] = true;
                    stack.push(end.crossing);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Edges of the strand component containing `start` (unordered).
fn strand_cycle(tuples: &[[usize; 4]], occ: &[Vec<End>], start: usize) -> Vec<usize> {
    let mut out = vec![start];
    let mut from = occ[start][0];
    let mut e = start;
    loop {
        let to = if occ[e][0] == from { occ[e][1] } else { occ[e][0] };
        let through = End { crossing: to.crossing, slot: (to.slot + 2) % 4 };
        let f = tuples[through.crossing][through.slot];
        if f == start || out.len() > occ.len() {
            break;
        }
        out.push(f);
        from = through;
        e = f;
    }
    out
}

/// For a component with no under-passes: the end through which the
/// smallest label enters when walking towards its successor label.
fn label_order_head(tuples: &[[usize; 4]], occ: &[Vec<End>], cycle: &[usize]) -> End {
    let e = *cycle.iter().min().unwrap();
    let succ = cycle.iter().copied().filter(|&f| f > e).min().unwrap_or(e);
    for &head in &occ[e] {
        let out = tuples[head.crossing][(head.slot + 2) % 4];
        if out == succ {
            return head;
        }
    }
    occ[e][1]
}
