//! Face colorings by the projective line and the maps between colorings and augmentations.

use std::collections::BTreeSet;
use std::fmt;

use crate::augvar::{Augmentation, AugvarError};
use crate::field::FiniteField;
use crate::graph_core::{CubicPlanarGraph, EdgeOrientation};
use crate::invariant::{projection_pi, BasisMatrices};

/// A point of `FP¹`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum P1 {
    Finite(u32),
    Infinity,
}

impl P1 {
    fn homogeneous(self) -> [u32; 2] {
        match self {
            P1::Finite(a) => [a, 1],
            P1::Infinity => [1, 0],
        }
    }

    fn from_homogeneous(field: &FiniteField, v: [u32; 2]) -> Option<P1> {
        match (v[0], v[1]) {
            (0, 0) => None,
            (_, 0) => Some(P1::Infinity),
            (a, b) => Some(P1::Finite(field.div(a, b).expect("nonzero"))),
        }
    }

    pub fn all(field: &FiniteField) -> Vec<P1> {
        let mut v: Vec<P1> = field.elements().map(P1::Finite).collect();
        v.push(P1::Infinity);
        v
    }

    pub fn format(self, field: &FiniteField) -> String {
        match self {
            P1::Finite(a) => field.format(a),
            P1::Infinity => "inf".into(),
        }
    }
}

fn det(field: &FiniteField, a: [u32; 2], b: [u32; 2]) -> u32 {
    field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0]))
}

fn lin(field: &FiniteField, s: u32, a: [u32; 2], t: u32, b: [u32; 2]) -> [u32; 2] {
    [field.add(field.mul(s, a[0]), field.mul(t, b[0])), field.add(field.mul(s, a[1]), field.mul(t, b[1]))]
}

/// `z ↦ (a z + b) / (c z + d)` with `ad − bc ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Mobius {
    pub m: [u32; 4],
}

impl Mobius {
    pub fn apply(&self, field: &FiniteField, z: P1) -> P1 {
        let [x, y] = z.homogeneous();
        let [a, b, c, d] = self.m;
        let v = [field.add(field.mul(a, x), field.mul(b, y)), field.add(field.mul(c, x), field.mul(d, y))];
        P1::from_homogeneous(field, v).expect("invertible")
    }

    /// The unique map sending `p, q, r` to `0, 1, ∞`.
    pub fn to_standard(field: &FiniteField, p: P1, q: P1, r: P1) -> Option<Mobius> {
        let (p, q, r) = (p.homogeneous(), q.homogeneous(), r.homogeneous());
        let row1 = [p[1], field.neg(p[0])];
        let row2 = [r[1], field.neg(r[0])];
        let s1 = field.add(field.mul(row1[0], q[0]), field.mul(row1[1], q[1]));
        let s2 = field.add(field.mul(row2[0], q[0]), field.mul(row2[1], q[1]));
        if s1 == 0 || s2 == 0 {
            return None;
        }
        let alpha = field.div(s2, s1)?;
        let m = [field.mul(alpha, row1[0]), field.mul(alpha, row1[1]), row2[0], row2[1]];
        let d = field.sub(field.mul(m[0], m[3]), field.mul(m[1], m[2]));
        (d != 0).then_some(Mobius { m })
    }

    /// `κ ↦ 1/(κ − x)`, sending `x` to `∞`.
    pub fn send_to_infinity(field: &FiniteField, x: P1) -> Mobius {
        match x {
            P1::Infinity => Mobius { m: [1, 0, 0, 1] },
            P1::Finite(a) => Mobius { m: [0, 1, 1, field.neg(a)] },
        }
    }
}

/// All elements of `PGL₂(F)`, one normalized matrix per class.
pub fn pgl2_elements(field: &FiniteField) -> Vec<Mobius> {
    let q = field.order();
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = [a, b, c, d];
                    let lead = m.iter().copied().find(|&x| x != 0);
                    if lead != Some(1) {
                        continue;
                    }
                    if field.sub(field.mul(a, d), field.mul(b, c)) != 0 {
                        out.push(Mobius { m });
                    }
                }
            }
        }
    }
    out
}

/// Colors of all faces, exterior last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coloring {
    pub colors: Vec<P1>,
}

impl Coloring {
    pub fn is_proper(&self, graph: &CubicPlanarGraph) -> bool {
        self.first_conflict(graph).is_none()
    }

    fn first_conflict(&self, graph: &CubicPlanarGraph) -> Option<(usize, usize, usize)> {
        graph.dual_graph().edges.iter().enumerate().find_map(|(e, &(a, b))| (self.colors[a] == self.colors[b]).then_some((a, b, e)))
    }

    pub fn map(&self, field: &FiniteField, m: &Mobius) -> Coloring {
        Coloring { colors: self.colors.iter().map(|&c| m.apply(field, c)).collect() }
    }

    pub fn format(&self, graph: &CubicPlanarGraph, field: &FiniteField) -> String {
        let parts: Vec<String> =
            self.colors.iter().enumerate().map(|(f, c)| format!("{}={}", graph.face_name(f), c.format(field))).collect();
        parts.join(" ")
    }
}

impl fmt::Display for P1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            P1::Finite(a) => write!(f, "{a}"),
            P1::Infinity => f.write_str("inf"),
        }
    }
}

/// The three faces at `v`, in rotation order.
fn faces_at(graph: &CubicPlanarGraph, v: usize) -> [usize; 3] {
    graph.rotation(v).map(|h| graph.face_of(h))
}

/// Normal form moving the faces around `base_vertex` to `0, 1, ∞`.
pub fn canonical_coloring(graph: &CubicPlanarGraph, field: &FiniteField, coloring: &Coloring, base_vertex: usize) -> Option<Coloring> {
    let [a, b, c] = faces_at(graph, base_vertex);
    let m = Mobius::to_standard(field, coloring.colors[a], coloring.colors[b], coloring.colors[c])?;
    Some(coloring.map(field, &m))
}

/// The four faces around edge `e` and the cross-ratio value the augmentation prescribes.
///
/// Faces `(A, B, C, D)`: `A` and `C` are the two sides of `e`, `B` and `D` the third faces at
/// its endpoints. The value is `X = (−1)^{r_v+r_w} λ_q λ_s / (λ_r λ_t)` and a coloring
/// satisfies `−[B,C][D,A] = X [A,B][C,D]`.
fn edge_frame(graph: &CubicPlanarGraph, orientation: &EdgeOrientation, field: &FiniteField, lambda: &[u32], e: usize) -> ([usize; 4], u32) {
    let [h, h2] = graph.edge_half_edges(e);
    let faces = [graph.face_of(h2), graph.face_of(graph.next_ccw(h)), graph.face_of(h), graph.face_of(graph.next_ccw(h2))];
    let l = |x: usize| lambda[graph.edge_of(x)];
    let num = field.mul(l(graph.prev_ccw(h)), l(graph.prev_ccw(h2)));
    let den = field.mul(l(graph.next_ccw(h)), l(graph.next_ccw(h2)));
    let r = graph.outward_count(graph.vertex_of(h), orientation) + graph.outward_count(graph.vertex_of(h2), orientation);
    let mut x = field.div(num, den).expect("unit values");
    if r % 2 == 1 {
        x = field.neg(x);
    }
    (faces, x)
}

/// The cross-ratio value at an edge.
pub fn cross_ratio_value(graph: &CubicPlanarGraph, orientation: &EdgeOrientation, field: &FiniteField, lambda: &[u32], e: usize) -> u32 {
    edge_frame(graph, orientation, field, lambda, e).1
}

/// `S` with `−[P,Q][R,S] / ([Q,R][S,P]) = y`.
fn solve_fourth(field: &FiniteField, p: [u32; 2], q: [u32; 2], r: [u32; 2], y: u32) -> Option<P1> {
    let s = lin(field, field.mul(y, det(field, q, r)), p, field.neg(det(field, p, q)), r);
    P1::from_homogeneous(field, s)
}

fn cross_holds(field: &FiniteField, c: [P1; 4], x: u32) -> bool {
    let [a, b, cc, d] = c.map(|p| p.homogeneous());
    let lhs = field.neg(field.mul(det(field, b, cc), det(field, d, a)));
    let rhs = field.mul(x, field.mul(det(field, a, b), det(field, cc, d)));
    lhs == rhs && det(field, a, b) != 0 && det(field, cc, d) != 0
}

/// Propagates colors from `0, 1, ∞` at `base_vertex` across edges, visiting edges in `order`.
fn propagate(
    graph: &CubicPlanarGraph,
    orientation: &EdgeOrientation,
    field: &FiniteField,
    lambda: &[u32],
    base_vertex: usize,
    order: &[usize],
) -> Result<Coloring, AugvarError> {
    let seeds = faces_at(graph, base_vertex);
    let distinct: BTreeSet<usize> = seeds.iter().copied().collect();
    if distinct.len() != 3 {
        return Err(AugvarError::BadBaseVertex(base_vertex));
    }
    let mut colors: Vec<Option<P1>> = vec![None; graph.n_faces()];
    for (f, c) in seeds.iter().zip([P1::Finite(0), P1::Finite(1), P1::Infinity]) {
        colors[*f] = Some(c);
    }
    let frames: Vec<([usize; 4], u32)> = (0..graph.n_edges()).map(|e| edge_frame(graph, orientation, field, lambda, e)).collect();
    loop {
        let mut progress = false;
        for &e in order {
            let (faces, x) = frames[e];
            let known: Vec<Option<P1>> = faces.iter().map(|&f| colors[f]).collect();
            let missing: Vec<usize> = (0..4).filter(|&i| known[i].is_none()).collect();
            if missing.len() != 1 {
                continue;
            }
            let h = |i: usize| known[i].expect("known").homogeneous();
            let xinv = field.inv(x).expect("unit");
            // each rotation of (A,B,C,D) keeps or inverts the value
            let solved = match missing[0] {
                0 => solve_fourth(field, h(1), h(2), h(3), x),
                2 => solve_fourth(field, h(3), h(0), h(1), x),
                3 => solve_fourth(field, h(0), h(1), h(2), xinv),
                _ => solve_fourth(field, h(2), h(3), h(0), xinv),
            };
            // `B = D` or `A = C` leaves the missing face free at this edge
            let Some(c) = solved else { continue };
            colors[faces[missing[0]]] = Some(c);
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let colors: Vec<P1> = colors.into_iter().collect::<Option<_>>().ok_or(AugvarError::Underdetermined)?;
    let coloring = Coloring { colors };
    for (e, (faces, x)) in frames.iter().enumerate() {
        if !cross_holds(field, faces.map(|f| coloring.colors[f]), *x) {
            return Err(AugvarError::PropagationClash(e + 1));
        }
    }
    if let Some((a, b, e)) = coloring.first_conflict(graph) {
        return Err(AugvarError::NotProper(graph.face_name(a), graph.face_name(b), e + 1));
    }
    Ok(coloring)
}

/// `Φ`: the coloring of an augmentation, normalized at `base_vertex`.
///
/// Propagation runs with edges in increasing and in decreasing order and both results
/// must agree; every edge is then checked against its cross-ratio value.
pub fn aug_to_coloring(
    graph: &CubicPlanarGraph,
    orientation: &EdgeOrientation,
    field: &FiniteField,
    lambda: &[u32],
    base_vertex: usize,
) -> Result<Coloring, AugvarError> {
    let fwd: Vec<usize> = (0..graph.n_edges()).collect();
    let rev: Vec<usize> = fwd.iter().rev().copied().collect();
    let a = propagate(graph, orientation, field, lambda, base_vertex, &fwd)?;
    let b = propagate(graph, orientation, field, lambda, base_vertex, &rev)?;
    if a != b {
        return Err(AugvarError::OrderDependent);
    }
    Ok(a)
}

/// `Ψ`: a T-versal augmentation with the given coloring.
///
/// Moves an unused color to `∞`, sets `λ_e = 1/(κ_L − κ_R)` with `L` the face left of the
/// oriented edge, then projects to the slice.
pub fn coloring_to_aug(
    graph: &CubicPlanarGraph,
    orientation: &EdgeOrientation,
    field: &FiniteField,
    coloring: &Coloring,
    mats: &BasisMatrices,
) -> Result<Augmentation, AugvarError> {
    if let Some((a, b, e)) = coloring.first_conflict(graph) {
        return Err(AugvarError::NotProper(graph.face_name(a), graph.face_name(b), e + 1));
    }
    let used: BTreeSet<P1> = coloring.colors.iter().copied().collect();
    let mut candidates = vec![P1::Infinity];
    candidates.extend(field.elements().map(P1::Finite));
    let x = candidates.into_iter().find(|c| !used.contains(c)).ok_or(AugvarError::NoFreeColor)?;
    let moved = coloring.map(field, &Mobius::send_to_infinity(field, x));
    let value = |f: usize| match moved.colors[f] {
        P1::Finite(a) => a,
        P1::Infinity => unreachable!("no face is colored by the point sent to infinity"),
    };
    let lambda: Vec<u32> = (0..graph.n_edges())
        .map(|e| {
            let head = orientation.head(e);
            let diff = field.sub(value(graph.face_of(graph.twin(head))), value(graph.face_of(head)));
            field.inv(diff).expect("proper coloring")
        })
        .collect();
    Ok(projection_pi(mats, field, &lambda))
}

/// Every proper coloring of the faces by `FP¹`.
pub fn enumerate_proper_colorings(graph: &CubicPlanarGraph, field: &FiniteField) -> Vec<Coloring> {
    let points = P1::all(field);
    let dual = graph.dual_graph();
    let n = dual.n_vertices;
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &dual.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    if dual.has_loop() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut colors = vec![P1::Infinity; n];
    fn rec(v: usize, adj: &[Vec<usize>], points: &[P1], colors: &mut Vec<P1>, out: &mut Vec<Coloring>) {
        if v == adj.len() {
            out.push(Coloring { colors: colors.clone() });
            return;
        }
        for &p in points {
            if adj[v].iter().all(|&w| w >= v || colors[w] != p) {
                colors[v] = p;
                rec(v + 1, adj, points, colors, out);
            }
        }
    }
    rec(0, &adj, &points, &mut colors, &mut out);
    out
}

/// Number of `PGL₂(F)` orbits, by marking each orbit through the full group.
pub fn count_pgl2_orbits(colorings: &[Coloring], field: &FiniteField) -> usize {
    let group = pgl2_elements(field);
    let mut seen: BTreeSet<Coloring> = BTreeSet::new();
    let mut orbits = 0;
    for c in colorings {
        if seen.contains(c) {
            continue;
        }
        orbits += 1;
        for m in &group {
            seen.insert(c.map(field, m));
        }
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgl2_order() {
        for q in [2u32, 3, 5] {
            let f = FiniteField::prime(q).unwrap();
            assert_eq!(pgl2_elements(&f).len() as u32, q * q * q - q);
        }
        let f4 = FiniteField::new(2, 2, None).unwrap();
        assert_eq!(pgl2_elements(&f4).len(), 60);
    }

    #[test]
    fn standard_map_hits_triple() {
        let f = FiniteField::prime(7).unwrap();
        let pts = P1::all(&f);
        for &p in &pts {
            for &q in &pts {
                for &r in &pts {
                    if p == q || q == r || p == r {
                        continue;
                    }
                    let m = Mobius::to_standard(&f, p, q, r).unwrap();
                    assert_eq!(m.apply(&f, p), P1::Finite(0));
                    assert_eq!(m.apply(&f, q), P1::Finite(1));
                    assert_eq!(m.apply(&f, r), P1::Infinity);
                }
            }
        }
    }

    #[test]
    fn degenerate_cross_ratio_is_minus_one() {
        let f = FiniteField::prime(5).unwrap();
        let c = [P1::Finite(2), P1::Infinity, P1::Finite(3), P1::Infinity];
        assert!(cross_holds(&f, c, f.from_int(-1)));
        assert!(!cross_holds(&f, c, 1));
    }

    #[test]
    fn fourth_point_solves_cross_ratio() {
        let f = FiniteField::prime(7).unwrap();
        let pts = P1::all(&f);
        for &a in &pts {
            for &b in &pts {
                for &c in &pts {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    for y in 1..7 {
                        let d = solve_fourth(&f, a.homogeneous(), b.homogeneous(), c.homogeneous(), y).unwrap();
                        assert!(cross_holds(&f, [a, b, c, d], f.inv(y).unwrap()));
                    }
                }
            }
        }
    }
}
