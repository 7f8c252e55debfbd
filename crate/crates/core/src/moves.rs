//! Garden-change isomorphisms and the local moves that leave the differential unchanged.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::binseq::{thread_weight, SignConvention, Weight, WeightContext};
use crate::field::Ring;
use crate::garden::geometry::cross_vertical;
use crate::garden::{BuildOptions, Dir, Embedding, Garden, GardenError, GardenGeometry, Point, TineEvent, Q};
use crate::graph_core::{CubicPlanarGraph, EdgeOrientation};
use crate::symbolic::{apply_differential, AlgebraElement, DifferentialTable, Gen, LaurentPoly, Space, SymbolicError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("bad generalized tine: {0}")]
    BadGeneralizedTine(String),
    #[error(transparent)]
    Garden(#[from] GardenError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

/// A unital graded algebra map given by generator images.
///
/// Variables (edges, and `t` when present) go to unit monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraMap {
    pub ring: Ring,
    pub space: Space,
    pub vars: Vec<LaurentPoly>,
    pub faces: Vec<AlgebraElement>,
    pub x: AlgebraElement,
    pub y: AlgebraElement,
    pub z: AlgebraElement,
}

impl AlgebraMap {
    pub fn identity(ring: &Ring, space: Space, n_faces: usize) -> Self {
        let gen = |g| AlgebraElement::gen(ring, space, g);
        AlgebraMap {
            ring: ring.clone(),
            space,
            vars: (0..space.nvars()).map(|i| LaurentPoly::var(ring, space, i)).collect(),
            faces: (0..n_faces).map(|j| gen(Gen::F(j))).collect(),
            x: gen(Gen::X),
            y: gen(Gen::Y),
            z: gen(Gen::Z),
        }
    }

    pub fn image(&self, g: Gen) -> &AlgebraElement {
        match g {
            Gen::X => &self.x,
            Gen::Y => &self.y,
            Gen::Z => &self.z,
            Gen::F(j) => &self.faces[j],
        }
    }

    pub fn image_mut(&mut self, g: Gen) -> &mut AlgebraElement {
        match g {
            Gen::X => &mut self.x,
            Gen::Y => &mut self.y,
            Gen::Z => &mut self.z,
            Gen::F(j) => &mut self.faces[j],
        }
    }

    pub fn generators(&self) -> Vec<Gen> {
        let mut g = vec![Gen::X, Gen::Y, Gen::Z];
        g.extend((0..self.faces.len()).map(Gen::F));
        g
    }

    pub fn apply_poly(&self, p: &LaurentPoly) -> Result<LaurentPoly, SymbolicError> {
        p.substitute_units(&self.vars)
    }

    pub fn apply(&self, elt: &AlgebraElement) -> Result<AlgebraElement, SymbolicError> {
        let mut out = AlgebraElement::zero(&self.ring, self.space);
        for (w, c) in elt.terms() {
            let mut term = AlgebraElement::scalar(self.apply_poly(c)?);
            for &g in w {
                term = &term * self.image(g);
            }
            out.add_assign_ref(&term);
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AlgebraMap) -> Result<AlgebraMap, SymbolicError> {
        let mut out = other.clone();
        for (i, v) in other.vars.iter().enumerate() {
            out.vars[i] = self.apply_poly(v)?;
        }
        for g in other.generators() {
            *out.image_mut(g) = self.apply(other.image(g))?;
        }
        Ok(out)
    }

    /// Every generator image is homogeneous of the generator's degree.
    pub fn is_graded(&self) -> bool {
        self.generators().into_iter().all(|g| {
            let im = self.image(g);
            im.is_zero() || im.degrees().iter().all(|&d| d == g.degree())
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == AlgebraMap::identity(&self.ring, self.space, self.faces.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutationReport {
    /// First generator where `φ(∂₀g) ≠ ∂₁(φ(g))`, with the difference.
    pub witness: Option<(Gen, AlgebraElement)>,
}

impl CommutationReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `φ ∘ ∂₀ = ∂₁ ∘ φ` on every generator.
pub fn verify_commutation(map: &AlgebraMap, t0: &DifferentialTable, t1: &DifferentialTable) -> Result<CommutationReport, SymbolicError> {
    for g in map.generators() {
        let lhs = map.apply(&t0.image(g))?;
        let rhs = apply_differential(t1, map.image(g));
        let diff = &lhs - &rhs;
        if !diff.is_zero() {
            return Ok(CommutationReport { witness: Some((g, diff)) });
        }
    }
    Ok(CommutationReport { witness: None })
}

/// `e_i ↦ −e_i`, the identity elsewhere.
pub fn orientation_flip_iso(ring: &Ring, space: Space, n_faces: usize, edge: usize) -> AlgebraMap {
    let mut m = AlgebraMap::identity(ring, space, n_faces);
    m.vars[edge] = m.vars[edge].scale(-1);
    m
}

/// Signed weight `σH(τ)` of a thread at infinity where it crosses the tines.
pub fn anchor_coefficient(graph: &CubicPlanarGraph, garden: &Garden, thread: usize, sigma: i8) -> LaurentPoly {
    let w = thread_weight(graph, &garden.threads[thread], &garden.orientation);
    let w = if sigma < 0 { w.negate() } else { w };
    w.to_poly(&Ring::Integers, Space::new(graph.n_edges()))
}

/// Map from the garden with the thread routed over the top to the one routed underneath:
/// `x ↦ x + c·y`, `z ↦ z − c·y`, `y ↦ y`.
pub fn anchor_move_iso(n_faces: usize, c: &LaurentPoly) -> AlgebraMap {
    let ring = c.ring().clone();
    let space = c.space();
    let mut m = AlgebraMap::identity(&ring, space, n_faces);
    let cy = AlgebraElement::gen(&ring, space, Gen::Y).scale(c);
    m.x = &m.x + &cy;
    m.z = &m.z - &cy;
    m
}

/// The tine-switch map `w ↦ w + S_{a,b}(γ_{m,n})·f_lower·f_upper` for `w = x, y, z`.
///
/// `events` lists the crossings along the generalized tine, bottom to top, with
/// exactly the two centers of `lower` (first) and `upper`.
pub fn tine_switch_iso(
    ctx: &WeightContext,
    n_faces: usize,
    lower: usize,
    upper: usize,
    events: &[TineEvent],
) -> Result<AlgebraMap, MoveError> {
    let centers: Vec<usize> = events
        .iter()
        .filter_map(|e| match e {
            TineEvent::Center { center } => Some(*center),
            _ => None,
        })
        .collect();
    if centers != [lower, upper] {
        return Err(MoveError::BadGeneralizedTine(format!(
            "expected centers of f{} then f{}, found {:?}",
            lower + 1,
            upper + 1,
            centers.iter().map(|c| c + 1).collect::<Vec<_>>()
        )));
    }
    let ring = Ring::Integers;
    let space = Space::new(ctx.n_edges());
    let mut m = AlgebraMap::identity(&ring, space, n_faces);
    let word = vec![Gen::F(lower), Gen::F(upper)];
    for (g, a, b) in [(Gen::X, 1, 1), (Gen::Y, 1, 0), (Gen::Z, 0, 0)] {
        let s = ctx.sequence_sum(events, a, b, &ring);
        m.image_mut(g).add_term(&s, word.clone());
    }
    Ok(m)
}

/// Local crossing sequences on the two sides of a vertex (Move III).
#[derive(Clone, Debug)]
pub struct VertexCrossing {
    pub left: Vec<TineEvent>,
    pub right: Vec<TineEvent>,
    pub context: WeightContext,
}

/// The vertex picture with `e1` to the lower left, `e3` to the upper left and `e2` to the right.
///
/// `heads_at_v[i]` says whether edge `i` points into the vertex.  Threads are `τ13` (left face),
/// `τ12` (lower face) and `τ23` (upper face), indexed 0, 1, 2.
pub fn vertex_crossing(heads_at_v: [bool; 3], conv: SignConvention) -> VertexCrossing {
    let r_v = heads_at_v.iter().filter(|&&h| !h).count();
    let sign = if r_v % 2 == 0 { 1 } else { -1 };
    let tw = |n: usize, m: usize, k: usize| {
        let mut exps = vec![0; 3];
        exps[n] += 1;
        exps[m] += 1;
        exps[k] -= 1;
        Weight { sign, exps }
    };
    let right_if = |b: bool| if b { Dir::Right } else { Dir::Left };
    let e = |edge: usize, dir: Dir| TineEvent::Edge { edge, dir };
    let t = |thread: usize, sigma: i8| TineEvent::Thread { thread, sigma };
    VertexCrossing {
        left: vec![e(0, right_if(heads_at_v[0])), t(0, 1), e(2, right_if(heads_at_v[2]))],
        right: vec![t(1, -1), e(1, right_if(!heads_at_v[1])), t(2, -1)],
        context: WeightContext::from_weights(3, vec![tw(0, 2, 1), tw(0, 1, 2), tw(1, 2, 0)], conv),
    }
}

/// Local sums on both sides for `(a, b)` in `11, 10, 01, 00` order.
pub fn vertex_crossing_table(vc: &VertexCrossing) -> Vec<((u8, u8), LaurentPoly, LaurentPoly)> {
    let ring = Ring::Integers;
    [(1, 1), (1, 0), (0, 1), (0, 0)]
        .into_iter()
        .map(|(a, b)| {
            ((a, b), vc.context.sequence_sum(&vc.left, a, b, &ring), vc.context.sequence_sum(&vc.right, a, b, &ring))
        })
        .collect()
}

/// Inserts a tangency with thread `thread` (Move I) before event `pos` of the tine of `face`.
pub fn thread_tangency(garden: &Garden, face: usize, pos: usize, thread: usize, sigma: i8) -> Garden {
    let mut g = garden.clone();
    let ev = &mut g.tines[face].events;
    ev.insert(pos, TineEvent::Thread { thread, sigma: -sigma });
    ev.insert(pos, TineEvent::Thread { thread, sigma });
    g
}

/// Inserts a tangency with edge `edge` (Move II) before event `pos` of the tine of `face`.
pub fn edge_tangency(garden: &Garden, face: usize, pos: usize, edge: usize, dir: Dir) -> Garden {
    let mut g = garden.clone();
    let ev = &mut g.tines[face].events;
    ev.insert(pos, TineEvent::Edge { edge, dir: dir.reversed() });
    ev.insert(pos, TineEvent::Edge { edge, dir });
    g
}

/// Wraps thread `thread` of the tine's own face around its center (Move IV).
pub fn thread_rotation(garden: &Garden, face: usize, thread: usize, above: bool, sigma: i8) -> Garden {
    let mut g = garden.clone();
    let ev = &mut g.tines[face].events;
    let c = ev.iter().position(|e| matches!(e, TineEvent::Center { .. })).expect("center");
    ev.insert(if above { c + 1 } else { c }, TineEvent::Thread { thread, sigma });
    g
}

/// Two gardens that differ by switching the tines of two faces, with the generalized tine.
#[derive(Clone, Debug)]
pub struct TineSwitchPair {
    pub before: Garden,
    pub after: Garden,
    /// Face whose center is lower on the shared line.
    pub lower: usize,
    pub upper: usize,
    /// In `before`, whether the lower center's tine is on the left.
    pub lower_left_before: bool,
    pub events: Vec<TineEvent>,
}

/// Open intervals of the vertical line `x` inside face `f`, as midpoints.
fn interior_points(graph: &CubicPlanarGraph, emb: &Embedding, f: usize, x: &Q) -> Vec<Q> {
    let poly = emb.face_polygon(graph, f);
    let n = poly.len();
    let mut ys: Vec<Q> = (0..n).filter_map(|i| cross_vertical(&poly[i], &poly[(i + 1) % n], x)).collect();
    ys.sort();
    ys.windows(2)
        .map(|w| (&w[0] + &w[1]) / Q::from_integer(2.into()))
        .filter(|y| crate::garden::geometry::point_in_polygon(&Point::new(x.clone(), y.clone()), &poly))
        .collect()
}

/// Candidate shared lines: midpoints between consecutive critical x-coordinates.
fn generic_lines(emb: &Embedding) -> Vec<Q> {
    let xs: Vec<Q> = emb.critical_xs().into_iter().collect();
    xs.windows(2).map(|w| (&w[0] + &w[1]) / Q::from_integer(2.into())).collect()
}

/// Builds up to `limit` tine-switch pairs for faces `m`, `n`, one per generic shared line.
pub fn tine_switch_pairs(
    graph: &CubicPlanarGraph,
    emb: &Embedding,
    base: &BuildOptions,
    m: usize,
    n: usize,
    limit: usize,
) -> Vec<TineSwitchPair> {
    let delta = Q::new(1.into(), (1i64 << 30).into());
    let mut out = Vec::new();
    let default_geo = match GardenGeometry::new(graph, emb, base) {
        Ok(g) => g,
        Err(_) => return out,
    };
    for x in generic_lines(emb) {
        if out.len() >= limit {
            break;
        }
        let (Some(ym), Some(yn)) = (interior_points(graph, emb, m, &x).first().cloned(), interior_points(graph, emb, n, &x).first().cloned())
        else {
            continue;
        };
        let lo = &x - &delta;
        let hi = &x + &delta;
        let others: BTreeSet<usize> = (0..graph.n_bounded_faces()).filter(|&f| f != m && f != n).collect();
        if others.iter().any(|&f| {
            let cx = base.centers.get(&f).map(|c| c.x.clone()).unwrap_or_else(|| default_geo.centers()[f].x.clone());
            cx >= lo && cx <= hi
        }) {
            continue;
        }
        let mk = |xm: &Q, xn: &Q| {
            let mut o = base.clone();
            for &f in &others {
                o.centers.entry(f).or_insert_with(|| default_geo.centers()[f].clone());
            }
            o.centers.insert(m, Point::new(xm.clone(), ym.clone()));
            o.centers.insert(n, Point::new(xn.clone(), yn.clone()));
            GardenGeometry::new(graph, emb, &o)
        };
        let (Ok(g0), Ok(g1)) = (mk(&lo, &hi), mk(&hi, &lo)) else { continue };
        if g0.centers()[m].x != lo || g0.centers()[n].x != hi || g1.centers()[m].x != hi || g1.centers()[n].x != lo {
            continue;
        }
        let (Ok(before), Ok(after)) = (g0.garden(), g1.garden()) else { continue };
        let Ok(events) = g0.events_at(&x, &[m, n], &[m, n]) else { continue };
        let (lower, upper) = if ym < yn { (m, n) } else { (n, m) };
        out.push(TineSwitchPair { before, after, lower, upper, lower_left_before: lower == m, events });
    }
    out
}

/// Two gardens differing by moving the rightmost vertex's thread at infinity from top to bottom.
#[derive(Clone, Debug)]
pub struct AnchorPair {
    pub top: Garden,
    pub bottom: Garden,
    pub thread: usize,
    /// Sign of the moved thread's crossings in `top`.
    pub sigma: i8,
}

pub fn anchor_pair(graph: &CubicPlanarGraph, emb: &Embedding, base: &BuildOptions) -> Result<Option<AnchorPair>, GardenError> {
    let geo = GardenGeometry::new(graph, emb, base)?;
    let r = geo.exterior_split();
    if r == 0 {
        return Ok(None);
    }
    let Some(thread) = geo.exterior_corner_thread(r) else { return Ok(None) };
    let top = geo.garden()?;
    let mut o = base.clone();
    o.exterior_split = Some(r - 1);
    for (f, c) in geo.centers().iter().enumerate() {
        o.centers.insert(f, c.clone());
    }
    let bottom = GardenGeometry::new(graph, emb, &o)?.garden()?;
    let sigmas: BTreeSet<i8> = top
        .tines
        .iter()
        .flat_map(|t| t.events.iter())
        .filter_map(|e| match *e {
            TineEvent::Thread { thread: th, sigma } if th == thread => Some(sigma),
            _ => None,
        })
        .collect();
    if sigmas.len() != 1 {
        return Ok(None);
    }
    Ok(Some(AnchorPair { top, bottom, thread, sigma: *sigmas.iter().next().unwrap() }))
}

/// Same garden with another orientation; crossing directions follow the edges.
pub fn reorient(graph: &CubicPlanarGraph, garden: &Garden, orientation: &EdgeOrientation) -> Garden {
    let mut g = garden.clone();
    for e in 0..graph.n_edges() {
        if orientation.head(e) != garden.orientation.head(e) {
            g = g.flip_edge(graph, e);
        }
    }
    g
}

/// Pass/fail counts for one move type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveCheck {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
}

impl MoveCheck {
    fn new(name: &'static str) -> Self {
        MoveCheck { name, checked: 0, failed: 0 }
    }

    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
        }
    }

    pub fn holds(&self) -> bool {
        self.failed == 0
    }
}

/// The face the tine is in before each event, then after the last one.
pub fn faces_along(graph: &CubicPlanarGraph, events: &[TineEvent]) -> Vec<usize> {
    let mut cur = graph.exterior_face();
    let mut out = Vec::with_capacity(events.len() + 1);
    for ev in events {
        out.push(cur);
        if let TineEvent::Edge { edge, .. } = *ev {
            let [a, b] = graph.edge_half_edges(edge);
            cur = if graph.face_of(a) == cur { graph.face_of(b) } else { graph.face_of(a) };
        }
    }
    out.push(cur);
    out
}

/// Runs every move on one garden.
///
/// Moves I, II and IV must leave the differential literally unchanged; Move III is the local
/// vertex table over all orientations. Move V and the anchor move need a drawing and are
/// skipped without one; orientation flips are checked on every edge.
pub fn move_battery(
    graph: &CubicPlanarGraph,
    garden: &Garden,
    emb: Option<(&Embedding, &BuildOptions)>,
) -> Result<Vec<MoveCheck>, MoveError> {
    let base = crate::binseq::differential(graph, garden)?;
    let ext = graph.exterior_face();
    let same = |g: &Garden| -> Result<bool, MoveError> { Ok(crate::binseq::differential(graph, g)? == base) };
    let (mut m1, mut m2, mut m3, mut m4) = (MoveCheck::new("I"), MoveCheck::new("II"), MoveCheck::new("III"), MoveCheck::new("IV"));
    for tine in &garden.tines {
        let f = tine.face;
        for (pos, &cur) in faces_along(graph, &tine.events).iter().enumerate() {
            for (ti, t) in garden.threads.iter().enumerate() {
                if t.face.unwrap_or(ext) == cur {
                    for sigma in [1, -1] {
                        m1.record(same(&thread_tangency(garden, f, pos, ti, sigma))?);
                    }
                }
            }
            for e in graph.face_edges(cur) {
                for dir in [Dir::Left, Dir::Right] {
                    m2.record(same(&edge_tangency(garden, f, pos, e, dir))?);
                }
            }
        }
        for (ti, _) in garden.threads.iter().enumerate().filter(|(_, t)| t.face == Some(f)) {
            for above in [false, true] {
                for sigma in [1, -1] {
                    m4.record(same(&thread_rotation(garden, f, ti, above, sigma))?);
                }
            }
        }
    }
    for bits in 0..8u8 {
        let vc = vertex_crossing([bits & 1 != 0, bits & 2 != 0, bits & 4 != 0], SignConvention::Calibrated);
        for (_, l, r) in vertex_crossing_table(&vc) {
            m3.record(l == r);
        }
    }
    let mut out = vec![m1, m2, m3, m4];
    if let Some((emb, opts)) = emb {
        let nb = graph.n_bounded_faces();
        let mut m5 = MoveCheck::new("V");
        for m in 0..nb {
            for n in m + 1..nb {
                for p in tine_switch_pairs(graph, emb, opts, m, n, 1) {
                    let ctx = WeightContext::new(graph, &p.before, SignConvention::Calibrated);
                    let phi = tine_switch_iso(&ctx, nb, p.lower, p.upper, &p.events)?;
                    let t0 = crate::binseq::differential(graph, &p.before)?;
                    let t1 = crate::binseq::differential(graph, &p.after)?;
                    let (src, dst) = if p.lower_left_before { (&t0, &t1) } else { (&t1, &t0) };
                    m5.record(verify_commutation(&phi, src, dst)?.holds());
                }
            }
        }
        out.push(m5);
        let mut anchor = MoveCheck::new("anchor");
        if let Some(p) = anchor_pair(graph, emb, opts)? {
            let phi = anchor_move_iso(nb, &anchor_coefficient(graph, &p.top, p.thread, p.sigma));
            let t0 = crate::binseq::differential(graph, &p.top)?;
            let t1 = crate::binseq::differential(graph, &p.bottom)?;
            anchor.record(verify_commutation(&phi, &t0, &t1)?.holds());
        }
        out.push(anchor);
    }
    let mut flip = MoveCheck::new("orientation");
    for edge in 0..graph.n_edges() {
        let t1 = crate::binseq::differential(graph, &garden.flip_edge(graph, edge))?;
        let phi = orientation_flip_iso(&base.ring, base.space, base.n_faces(), edge);
        flip.record(verify_commutation(&phi, &base, &t1)?.holds());
    }
    out.push(flip);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binseq::{differential, enumerate_binary_sequences};

    fn g2() -> (CubicPlanarGraph, Garden) {
        let g = CubicPlanarGraph::from_json(include_str!("../fixtures/g2.json")).unwrap();
        let gd = Garden::from_json(&g, include_str!("../fixtures/g2_garden.json")).unwrap();
        (g, gd)
    }

    #[test]
    fn identity_commutes_with_equal_tables() {
        let (g, gd) = g2();
        let t = differential(&g, &gd).unwrap();
        let id = AlgebraMap::identity(&t.ring, t.space, t.n_faces());
        assert!(verify_commutation(&id, &t, &t).unwrap().holds());
    }

    #[test]
    fn corrupted_sign_yields_witness() {
        let (g, gd) = g2();
        let t0 = differential(&g, &gd).unwrap();
        let mut t1 = t0.clone();
        t1.dx = t1.dx.scale(&LaurentPoly::constant(&t1.ring, t1.space, -1));
        let id = AlgebraMap::identity(&t0.ring, t0.space, t0.n_faces());
        let r = verify_commutation(&id, &t0, &t1).unwrap();
        assert_eq!(r.witness.map(|w| w.0), Some(Gen::X));
    }

    #[test]
    fn double_flip_is_identity() {
        let s = Space::new(6);
        let f = orientation_flip_iso(&Ring::Integers, s, 3, 4);
        assert!(!f.is_identity());
        assert!(f.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn anchor_map_is_unipotent_and_graded() {
        let s = Space::new(6);
        let c = LaurentPoly::monomial(&Ring::Integers, s, -1, vec![1, 1, 0, -1, 0, 0]);
        let phi = anchor_move_iso(3, &c);
        let inv = anchor_move_iso(3, &c.scale(-1));
        assert!(phi.is_graded());
        assert!(phi.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&phi).unwrap().is_identity());
    }

    #[test]
    fn missing_center_is_bad_tine() {
        let ctx = WeightContext::from_weights(2, vec![], SignConvention::Calibrated);
        let ev = [TineEvent::Edge { edge: 0, dir: Dir::Right }, TineEvent::Center { center: 0 }];
        assert!(matches!(tine_switch_iso(&ctx, 2, 0, 1, &ev), Err(MoveError::BadGeneralizedTine(_))));
    }

    #[test]
    fn forced_generalized_tine_has_one_x_correction() {
        let ctx = WeightContext::from_weights(2, vec![], SignConvention::Calibrated);
        let ev = [
            TineEvent::Edge { edge: 0, dir: Dir::Right },
            TineEvent::Center { center: 0 },
            TineEvent::Edge { edge: 1, dir: Dir::Right },
            TineEvent::Center { center: 1 },
        ];
        let phi = tine_switch_iso(&ctx, 2, 0, 1, &ev).unwrap();
        // only 1 → 0 → 1 → 0 → 1 survives, crossing both edges downward
        assert_eq!(enumerate_binary_sequences(&ev, 1, 1).len(), 1);
        let s = Space::new(2);
        let mut x = AlgebraElement::gen(&Ring::Integers, s, Gen::X);
        x.add_term(&ctx.sequence_sum(&ev, 1, 1, &Ring::Integers), vec![Gen::F(0), Gen::F(1)]);
        assert_eq!(phi.x, x);
        assert_eq!(phi.x.terms().count(), 2);
        assert_eq!(phi.y, AlgebraElement::gen(&Ring::Integers, s, Gen::Y));
        assert_eq!(phi.z, AlgebraElement::gen(&Ring::Integers, s, Gen::Z));
        assert!(phi.is_graded());
    }
}
