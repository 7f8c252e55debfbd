//! Binary sequences along tines, their weights, and the differential.

use crate::field::Ring;
use crate::garden::{corner_thread, validate_garden, Dir, Garden, GardenError, Thread, TineEvent};
use crate::graph_core::{CubicPlanarGraph, EdgeOrientation};
use crate::symbolic::{apply_differential, AlgebraElement, DifferentialTable, Gen, LaurentPoly, Space};

/// A signed Laurent monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub sign: i64,
    pub exps: Vec<i32>,
}

impl Weight {
    pub fn one(n: usize) -> Self {
        Weight { sign: 1, exps: vec![0; n] }
    }

    pub fn mul(&self, o: &Weight) -> Weight {
        Weight { sign: self.sign * o.sign, exps: self.exps.iter().zip(&o.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn negate(&self) -> Weight {
        Weight { sign: -self.sign, exps: self.exps.clone() }
    }

    pub fn to_poly(&self, ring: &Ring, space: Space) -> LaurentPoly {
        let mut e = self.exps.clone();
        e.resize(space.nvars(), 0);
        LaurentPoly::monomial(ring, space, self.sign, e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Switch {
    Up,
    Down,
}

/// Sign rules for crossings.
///
/// `Calibrated` is the only assignment of the four candidates under which every
/// consistency check passes; the others exist so tests can show that they fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// Edge sign = direction x switch; thread sign as recorded.
    #[default]
    Calibrated,
    /// Edge sign = direction only; thread sign as recorded.
    DirectionOnly,
    /// Edge sign = direction x switch; thread sign reversed.
    ReversedThreads,
    /// Edge sign = direction only; thread sign reversed.
    DirectionOnlyReversedThreads,
}

impl SignConvention {
    pub const ALL: [SignConvention; 4] = [
        SignConvention::Calibrated,
        SignConvention::DirectionOnly,
        SignConvention::ReversedThreads,
        SignConvention::DirectionOnlyReversedThreads,
    ];

    fn edge_uses_switch(self) -> bool {
        matches!(self, SignConvention::Calibrated | SignConvention::ReversedThreads)
    }

    fn thread_factor(self) -> i64 {
        match self {
            SignConvention::Calibrated | SignConvention::DirectionOnly => 1,
            _ => -1,
        }
    }
}

/// `(-1)^{r_v} e_n e_m e_k^{-1}`, `r_v` counting edges leaving `v`.
pub fn thread_weight(graph: &CubicPlanarGraph, thread: &Thread, orientation: &EdgeOrientation) -> Weight {
    let mut exps = vec![0; graph.n_edges()];
    exps[thread.e_n] += 1;
    exps[thread.e_m] += 1;
    exps[thread.e_k] -= 1;
    let r = graph.outward_count(thread.vertex, orientation);
    Weight { sign: if r % 2 == 0 { 1 } else { -1 }, exps }
}

/// `±e` for a 0-to-1 switch, `±e^{-1}` for 1-to-0.
pub fn edge_cross_weight(n_edges: usize, edge: usize, dir: Dir, switch: Switch, conv: SignConvention) -> Weight {
    let w = match switch {
        Switch::Up => 1,
        Switch::Down => -1,
    };
    let mut exps = vec![0; n_edges];
    exps[edge] = w;
    let sign = if conv.edge_uses_switch() { dir.sign() * w as i64 } else { dir.sign() };
    Weight { sign, exps }
}

/// Interval values (bottom first) and the thread events where the value switches.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BinarySequence {
    pub values: Vec<u8>,
    pub switches: Vec<usize>,
}

impl BinarySequence {
    pub fn start(&self) -> u8 {
        self.values[0]
    }
    pub fn end(&self) -> u8 {
        *self.values.last().unwrap()
    }
}

/// All sequences from `a` to `b` by depth-first choice at thread crossings.
pub fn enumerate_binary_sequences(events: &[TineEvent], a: u8, b: u8) -> Vec<BinarySequence> {
    fn rec(events: &[TineEvent], i: usize, b: u8, values: &mut Vec<u8>, sw: &mut Vec<usize>, out: &mut Vec<BinarySequence>) {
        let cur = *values.last().unwrap();
        if i == events.len() {
            if cur == b {
                out.push(BinarySequence { values: values.clone(), switches: sw.clone() });
            }
            return;
        }
        match events[i] {
            TineEvent::Edge { .. } => {
                values.push(1 - cur);
                rec(events, i + 1, b, values, sw, out);
                values.pop();
            }
            TineEvent::Center { .. } => {
                if cur == 0 {
                    values.push(1);
                    rec(events, i + 1, b, values, sw, out);
                    values.pop();
                }
            }
            TineEvent::Thread { .. } => {
                values.push(cur);
                rec(events, i + 1, b, values, sw, out);
                values.pop();
                if cur == 0 {
                    values.push(1);
                    sw.push(i);
                    rec(events, i + 1, b, values, sw, out);
                    sw.pop();
                    values.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(events, 0, b, &mut vec![a], &mut Vec::new(), &mut out);
    out
}

/// Weight evaluator for one garden.
#[derive(Clone, Debug)]
pub struct WeightContext {
    n_edges: usize,
    thread_weights: Vec<Weight>,
    conv: SignConvention,
}

impl WeightContext {
    pub fn new(graph: &CubicPlanarGraph, garden: &Garden, conv: SignConvention) -> Self {
        let thread_weights = garden.threads.iter().map(|t| thread_weight(graph, t, &garden.orientation)).collect();
        WeightContext { n_edges: graph.n_edges(), thread_weights, conv }
    }

    /// Context for a local picture with explicit thread weights.
    pub fn from_weights(n_edges: usize, thread_weights: Vec<Weight>, conv: SignConvention) -> Self {
        WeightContext { n_edges, thread_weights, conv }
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn thread(&self, t: usize, sigma: i8) -> Weight {
        let w = &self.thread_weights[t];
        if sigma as i64 * self.conv.thread_factor() < 0 {
            w.negate()
        } else {
            w.clone()
        }
    }

    /// `H(B)` for a sequence along `events`.
    pub fn sequence_weight(&self, events: &[TineEvent], seq: &BinarySequence) -> Weight {
        let n = self.n_edges;
        let mut acc = Weight::one(n);
        for (i, ev) in events.iter().enumerate() {
            let (before, after) = (seq.values[i], seq.values[i + 1]);
            match *ev {
                TineEvent::Edge { edge, dir } => {
                    let s = if before == 0 { Switch::Up } else { Switch::Down };
                    acc = acc.mul(&edge_cross_weight(n, edge, dir, s, self.conv));
                }
                TineEvent::Thread { thread, sigma } if before != after => {
                    acc = acc.mul(&self.thread(thread, sigma));
                }
                _ => {}
            }
        }
        acc
    }

    /// `sum_{B in B_{a,b}} H(B)` by a two-state transfer recursion.
    pub fn sequence_sum(&self, events: &[TineEvent], a: u8, b: u8, ring: &Ring) -> LaurentPoly {
        let n = self.n_edges;
        let space = Space::new(n);
        let zero = LaurentPoly::zero(ring, space);
        let mut s = [zero.clone(), zero.clone()];
        s[a as usize] = LaurentPoly::one(ring, space);
        for ev in events {
            match *ev {
                TineEvent::Edge { edge, dir } => {
                    let up = edge_cross_weight(n, edge, dir, Switch::Up, self.conv).to_poly(ring, space);
                    let down = edge_cross_weight(n, edge, dir, Switch::Down, self.conv).to_poly(ring, space);
                    s = [&s[1] * &down, &s[0] * &up];
                }
                TineEvent::Center { .. } => {
                    s = [zero.clone(), s[0].clone()];
                }
                TineEvent::Thread { thread, sigma } => {
                    let w = self.thread(thread, sigma).to_poly(ring, space);
                    s[1] = &s[1] + &(&s[0] * &w);
                }
            }
        }
        s[b as usize].clone()
    }
}

/// One interior thread per (face, vertex) at the first corner, for faces-only computations.
pub fn combinatorial_threads(graph: &CubicPlanarGraph) -> Vec<Thread> {
    let mut out = Vec::new();
    for f in 0..graph.n_faces() {
        let face = (f != graph.exterior_face()).then_some(f);
        let mut seen = Vec::new();
        for (v, hin, hout) in graph.face_corners(f) {
            if !seen.contains(&v) {
                seen.push(v);
                out.push(corner_thread(graph, face, hin, hout));
            }
        }
    }
    out
}

/// `d(f_j) = sum_v H(tau_{f_j}(v))` for the given threads.
pub fn face_differentials(graph: &CubicPlanarGraph, threads: &[Thread], orientation: &EdgeOrientation, ring: &Ring) -> Vec<LaurentPoly> {
    let space = Space::new(graph.n_edges());
    let mut df = vec![LaurentPoly::zero(ring, space); graph.n_bounded_faces()];
    for t in threads {
        if let Some(f) = t.face {
            df[f].add_assign_ref(&thread_weight(graph, t, orientation).to_poly(ring, space));
        }
    }
    df
}

/// Sum over exterior vertices of `H(tau_0(v))` for the combinatorial exterior corners.
pub fn exterior_equation(graph: &CubicPlanarGraph, orientation: &EdgeOrientation, ring: &Ring) -> LaurentPoly {
    let space = Space::new(graph.n_edges());
    let mut p = LaurentPoly::zero(ring, space);
    for t in combinatorial_threads(graph).iter().filter(|t| t.face.is_none()) {
        p.add_assign_ref(&thread_weight(graph, t, orientation).to_poly(ring, space));
    }
    p
}

/// The differential table over the integers.
pub fn differential(graph: &CubicPlanarGraph, garden: &Garden) -> Result<DifferentialTable, GardenError> {
    differential_with(graph, garden, SignConvention::Calibrated)
}

pub fn differential_with(graph: &CubicPlanarGraph, garden: &Garden, conv: SignConvention) -> Result<DifferentialTable, GardenError> {
    let problems = validate_garden(graph, garden);
    if !problems.is_empty() {
        return Err(GardenError::Invalid(problems));
    }
    Ok(differential_unchecked(graph, garden, conv))
}

pub(crate) fn differential_unchecked(graph: &CubicPlanarGraph, garden: &Garden, conv: SignConvention) -> DifferentialTable {
    let ring = Ring::Integers;
    let space = Space::new(graph.n_edges());
    let ctx = WeightContext::new(graph, garden, conv);
    let mut dx = AlgebraElement::zero(&ring, space);
    let mut dy = AlgebraElement::zero(&ring, space);
    let mut dz = AlgebraElement::zero(&ring, space);
    for tine in &garden.tines {
        let f = AlgebraElement::gen(&ring, space, Gen::F(tine.face));
        dx.add_assign_ref(&f.scale(&ctx.sequence_sum(&tine.events, 1, 1, &ring)));
        dy.add_assign_ref(&f.scale(&ctx.sequence_sum(&tine.events, 1, 0, &ring)));
        dz.add_assign_ref(&f.scale(&ctx.sequence_sum(&tine.events, 0, 0, &ring)));
    }
    let df = face_differentials(graph, &garden.threads, &garden.orientation, &ring);
    DifferentialTable { ring, space, dx, dy, dz, df }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DSquaredReport {
    pub ddx: LaurentPoly,
    pub ddy: LaurentPoly,
    pub ddz: LaurentPoly,
}

impl DSquaredReport {
    pub fn is_zero(&self) -> bool {
        self.ddx.is_zero() && self.ddy.is_zero() && self.ddz.is_zero()
    }

    pub fn witnesses(&self) -> Vec<(Gen, LaurentPoly)> {
        [(Gen::X, &self.ddx), (Gen::Y, &self.ddy), (Gen::Z, &self.ddz)]
            .into_iter()
            .filter(|(_, p)| !p.is_zero())
            .map(|(g, p)| (g, p.clone()))
            .collect()
    }
}

/// Computes `d^2` on `x, y, z` (it vanishes on faces automatically).
pub fn check_d_squared(table: &DifferentialTable) -> DSquaredReport {
    let dd = |e: &AlgebraElement| apply_differential(table, e).scalar_part();
    DSquaredReport { ddx: dd(&table.dx), ddy: dd(&table.dy), ddz: dd(&table.dz) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(edge: usize) -> TineEvent {
        TineEvent::Edge { edge, dir: Dir::Right }
    }
    const C: TineEvent = TineEvent::Center { center: 0 };
    fn t(thread: usize) -> TineEvent {
        TineEvent::Thread { thread, sigma: 1 }
    }

    #[test]
    fn forced_switches() {
        let ev = [e(0), C, e(1)];
        assert_eq!(enumerate_binary_sequences(&ev, 1, 0).len(), 1);
        assert_eq!(enumerate_binary_sequences(&ev, 1, 1).len(), 0);
    }

    #[test]
    fn single_choice() {
        let ev = [e(0), C, e(1), t(0)];
        let s11 = enumerate_binary_sequences(&ev, 1, 1);
        assert_eq!(s11.len(), 1);
        assert_eq!(s11[0].switches, vec![3]);
        let s10 = enumerate_binary_sequences(&ev, 1, 0);
        assert_eq!(s10.len(), 1);
        assert!(s10[0].switches.is_empty());
    }

    #[test]
    fn tangent_thread_pair() {
        let ev = [TineEvent::Thread { thread: 0, sigma: 1 }, TineEvent::Thread { thread: 0, sigma: -1 }];
        assert_eq!(enumerate_binary_sequences(&ev, 0, 1).len(), 2);
        assert!(enumerate_binary_sequences(&ev, 1, 0).is_empty());
    }

    #[test]
    fn exponent_follows_switch() {
        let w = edge_cross_weight(3, 1, Dir::Right, Switch::Down, SignConvention::Calibrated);
        assert_eq!(w.exps, vec![0, -1, 0]);
        let w = edge_cross_weight(3, 1, Dir::Left, Switch::Up, SignConvention::Calibrated);
        assert_eq!((w.sign, w.exps), (-1, vec![0, 1, 0]));
    }
}
