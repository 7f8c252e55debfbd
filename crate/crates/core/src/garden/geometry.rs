//! Exact-rational garden builder for polyline embeddings with vertical tines.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{corner_thread, Dir, Garden, GardenError, Thread, Tine, TineEvent};
use crate::graph_core::{CubicPlanarGraph, EdgeOrientation};

pub type Q = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64, den: i64) -> Self {
        Point { x: q_frac(x, den), y: q_frac(y, den) }
    }

    fn sub(&self, o: &Point) -> (Q, Q) {
        (&self.x - &o.x, &self.y - &o.y)
    }

    pub fn to_strings(&self) -> [String; 2] {
        [self.x.to_string(), self.y.to_string()]
    }
}

pub fn q_frac(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q`, an integer, or a finite decimal, exactly.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let t = s.trim();
    if let Some((int, frac)) = t.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        let n: BigInt = digits.parse().map_err(|_| format!("bad number `{s}`"))?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let v = BigRational::new(n, d);
        return Ok(if neg { -v } else { v });
    }
    t.parse::<BigRational>().map_err(|_| format!("bad number `{s}`"))
}

fn cross(a: &(Q, Q), b: &(Q, Q)) -> Q {
    &a.0 * &b.1 - &a.1 * &b.0
}

fn dot(a: &(Q, Q), b: &(Q, Q)) -> Q {
    &a.0 * &b.0 + &a.1 * &b.1
}

fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    cross(&b.sub(a), &c.sub(a)).cmp(&Q::zero())
}

/// Compares the counterclockwise angles from `a` to `u` and from `a` to `v`, in `[0, 2pi)`.
fn cmp_from(a: &(Q, Q), u: &(Q, Q), v: &(Q, Q)) -> Ordering {
    let half = |w: &(Q, Q)| -> u8 {
        let c = cross(a, w);
        if c.is_positive() || (c.is_zero() && dot(a, w).is_positive()) {
            0
        } else {
            1
        }
    };
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    let c = cross(u, v);
    if c.is_positive() {
        Ordering::Less
    } else if c.is_negative() {
        Ordering::Greater
    } else {
        Ordering::Equal
    }
}

/// `d` lies strictly inside the counterclockwise sector from `a` to `b`.
fn in_sector(d: &(Q, Q), a: &(Q, Q), b: &(Q, Q)) -> bool {
    let zero_angle = cross(a, d).is_zero() && dot(a, d).is_positive();
    !zero_angle && cmp_from(a, d, b) == Ordering::Less
}

#[derive(Debug, PartialEq, Eq)]
enum Meet {
    None,
    At(Point),
    Overlap,
}

fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

fn segment_meet(a: &Point, b: &Point, c: &Point, d: &Point) -> Meet {
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        let mut shared = Vec::new();
        for p in [a, b] {
            if on_segment(p, c, d) && !shared.contains(&p) {
                shared.push(p);
            }
        }
        for p in [c, d] {
            if on_segment(p, a, b) && !shared.contains(&p) {
                shared.push(p);
            }
        }
        return match shared.len() {
            0 => Meet::None,
            1 => Meet::At(shared[0].clone()),
            _ => Meet::Overlap,
        };
    }
    if o1 != o2 && o3 != o4 {
        if o1 == Ordering::Equal {
            return Meet::At(c.clone());
        }
        if o2 == Ordering::Equal {
            return Meet::At(d.clone());
        }
        if o3 == Ordering::Equal {
            return Meet::At(a.clone());
        }
        if o4 == Ordering::Equal {
            return Meet::At(b.clone());
        }
        let r = b.sub(a);
        let s = d.sub(c);
        let t = cross(&c.sub(a), &s) / cross(&r, &s);
        return Meet::At(Point::new(&a.x + &t * &r.0, &a.y + &t * &r.1));
    }
    Meet::None
}

/// `y` where the segment crosses the vertical line `x`, if it crosses strictly between its ends.
pub fn cross_vertical(a: &Point, b: &Point, x: &Q) -> Option<Q> {
    let (lo, hi) = if a.x < b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    if !(lo < x && x < hi) {
        return None;
    }
    Some(&a.y + (x - &a.x) * (&b.y - &a.y) / (&b.x - &a.x))
}

/// Vertex positions plus optional bend points per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    pub vertices: Vec<Point>,
    /// Per edge, interior polyline points listed from the vertex of its first half-edge.
    pub bends: Vec<Vec<Point>>,
}

#[derive(Serialize, Deserialize)]
struct EmbeddingFile {
    vertices: Vec<[String; 2]>,
    #[serde(default)]
    bends: BTreeMap<String, Vec<[String; 2]>>,
}

impl Embedding {
    pub fn straight(vertices: Vec<Point>, n_edges: usize) -> Self {
        Embedding { vertices, bends: vec![Vec::new(); n_edges] }
    }

    pub fn from_json(graph: &CubicPlanarGraph, text: &str) -> Result<Self, GardenError> {
        let f: EmbeddingFile = serde_json::from_str(text).map_err(|e| GardenError::Json(e.to_string()))?;
        let pt = |p: &[String; 2]| -> Result<Point, GardenError> {
            Ok(Point::new(parse_q(&p[0]).map_err(GardenError::Json)?, parse_q(&p[1]).map_err(GardenError::Json)?))
        };
        if f.vertices.len() != graph.n_vertices() {
            return Err(GardenError::Json(format!("{} points for {} vertices", f.vertices.len(), graph.n_vertices())));
        }
        let vertices = f.vertices.iter().map(pt).collect::<Result<Vec<_>, _>>()?;
        let mut bends = vec![Vec::new(); graph.n_edges()];
        for (k, pts) in &f.bends {
            let e: usize = k.parse().map_err(|_| GardenError::Json(format!("bad edge key `{k}`")))?;
            if e >= graph.n_edges() {
                return Err(GardenError::Json(format!("bend for missing edge {e}")));
            }
            bends[e] = pts.iter().map(pt).collect::<Result<Vec<_>, _>>()?;
        }
        Ok(Embedding { vertices, bends })
    }

    pub fn to_json(&self) -> String {
        let f = EmbeddingFile {
            vertices: self.vertices.iter().map(|p| p.to_strings()).collect(),
            bends: self
                .bends
                .iter()
                .enumerate()
                .filter(|(_, b)| !b.is_empty())
                .map(|(e, b)| (e.to_string(), b.iter().map(|p| p.to_strings()).collect()))
                .collect(),
        };
        serde_json::to_string_pretty(&f).expect("embedding serializes")
    }

    /// Polyline of half-edge `h`, from its vertex to its twin's vertex.
    pub fn half_edge_path(&self, graph: &CubicPlanarGraph, h: usize) -> Vec<Point> {
        let e = graph.edge_of(h);
        let first = graph.edge_half_edges(e)[0] == h;
        let mut pts = vec![self.vertices[graph.vertex_of(h)].clone()];
        if first {
            pts.extend(self.bends[e].iter().cloned());
        } else {
            pts.extend(self.bends[e].iter().rev().cloned());
        }
        pts.push(self.vertices[graph.vertex_of(graph.twin(h))].clone());
        pts
    }

    fn first_dir(&self, graph: &CubicPlanarGraph, h: usize) -> (Q, Q) {
        let p = self.half_edge_path(graph, h);
        p[1].sub(&p[0])
    }

    /// Closed boundary polyline of face `f`.
    pub fn face_polygon(&self, graph: &CubicPlanarGraph, f: usize) -> Vec<Point> {
        let mut poly = Vec::new();
        for &h in &graph.face(f).walk {
            let p = self.half_edge_path(graph, h);
            poly.extend(p[..p.len() - 1].iter().cloned());
        }
        poly
    }

    /// All critical x-coordinates: vertices and bends.
    pub fn critical_xs(&self) -> BTreeSet<Q> {
        let mut s: BTreeSet<Q> = self.vertices.iter().map(|p| p.x.clone()).collect();
        for b in &self.bends {
            s.extend(b.iter().map(|p| p.x.clone()));
        }
        s
    }

    /// Checks the drawing realizes the rotation system without crossings.
    pub fn validate(&self, graph: &CubicPlanarGraph) -> Result<(), GardenError> {
        let deg = |m: String| Err(GardenError::DegenerateEmbedding(m));
        let one = Q::one();
        let mut all_pts = BTreeSet::new();
        for p in self.vertices.iter().chain(self.bends.iter().flatten()) {
            if p.x.abs() >= one || p.y.abs() >= one {
                return deg(format!("point ({}, {}) outside the open square", p.x, p.y));
            }
            if !all_pts.insert(p.clone()) {
                return deg(format!("repeated point ({}, {})", p.x, p.y));
            }
        }
        for v in 0..graph.n_vertices() {
            let r = graph.rotation(v);
            let d: Vec<(Q, Q)> = r.iter().map(|&h| self.first_dir(graph, h)).collect();
            if cmp_from(&d[0], &d[1], &d[2]) != Ordering::Less
                || cross(&d[0], &d[1]).is_zero() && dot(&d[0], &d[1]).is_positive()
                || cross(&d[0], &d[2]).is_zero() && dot(&d[0], &d[2]).is_positive()
            {
                return deg(format!("drawing at vertex {v} does not match its rotation"));
            }
        }
        let mut segs: Vec<(usize, Point, Point)> = Vec::new();
        for e in 0..graph.n_edges() {
            let p = self.half_edge_path(graph, graph.edge_half_edges(e)[0]);
            for w in p.windows(2) {
                segs.push((e, w[0].clone(), w[1].clone()));
            }
        }
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let (a, b) = (&segs[i].1, &segs[i].2);
                let (c, d) = (&segs[j].1, &segs[j].2);
                match segment_meet(a, b, c, d) {
                    Meet::None => {}
                    Meet::Overlap => return deg(format!("edges e{} and e{} overlap", segs[i].0 + 1, segs[j].0 + 1)),
                    Meet::At(p) => {
                        let shared = (p == *a || p == *b) && (p == *c || p == *d);
                        if !shared {
                            return deg(format!("edges e{} and e{} cross", segs[i].0 + 1, segs[j].0 + 1));
                        }
                    }
                }
            }
        }
        let ext = graph.exterior_face();
        for f in 0..graph.n_faces() {
            let a = signed_area2(&self.face_polygon(graph, f));
            if (f == ext) != a.is_negative() {
                return deg(format!("face {} has the wrong winding for the chosen exterior", graph.face_name(f)));
            }
        }
        Ok(())
    }
}

fn signed_area2(poly: &[Point]) -> Q {
    let n = poly.len();
    let mut a = Q::zero();
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        a += &p.x * &q.y - &p.y * &q.x;
    }
    a
}

/// Area centroid of a simple polygon.
pub fn polygon_centroid(poly: &[Point]) -> Point {
    let n = poly.len();
    let mut a = Q::zero();
    let (mut cx, mut cy) = (Q::zero(), Q::zero());
    for i in 0..n {
        let (p, q) = (&poly[i], &poly[(i + 1) % n]);
        let w = &p.x * &q.y - &q.x * &p.y;
        cx += (&p.x + &q.x) * &w;
        cy += (&p.y + &q.y) * &w;
        a += w;
    }
    let six_a = a * q_frac(3, 1);
    Point::new(cx / &six_a, cy / &six_a)
}

/// Strictly inside (nonzero winding, not on the boundary).
pub fn point_in_polygon(p: &Point, poly: &[Point]) -> bool {
    let n = poly.len();
    let mut wn = 0i32;
    for i in 0..n {
        let (a, b) = (&poly[i], &poly[(i + 1) % n]);
        if on_segment(p, a, b) {
            return false;
        }
        if a.y <= p.y {
            if b.y > p.y && orient(a, b, p) == Ordering::Greater {
                wn += 1;
            }
        } else if b.y <= p.y && orient(a, b, p) == Ordering::Less {
            wn -= 1;
        }
    }
    wn != 0
}

#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    pub orientation: Option<EdgeOrientation>,
    /// Per face center overrides; moved horizontally only if their x is not generic.
    pub centers: BTreeMap<usize, Point>,
    /// Last exterior corner index routed over the top; defaults to the rightmost vertex.
    pub exterior_split: Option<usize>,
}

#[derive(Clone, Debug)]
struct StepThread {
    thread: usize,
    rank: usize,
    top: bool,
}

/// Geometry of threads and centers, able to report crossings on any vertical line.
#[derive(Clone, Debug)]
pub struct GardenGeometry {
    graph: CubicPlanarGraph,
    emb: Embedding,
    orientation: EdgeOrientation,
    centers: Vec<Point>,
    threads: Vec<Thread>,
    thread_segments: Vec<Option<(Point, Point)>>,
    exterior_walk: Vec<usize>,
    step_threads: Vec<Vec<StepThread>>,
    split: usize,
}

impl GardenGeometry {
    pub fn new(graph: &CubicPlanarGraph, emb: &Embedding, opts: &BuildOptions) -> Result<Self, GardenError> {
        emb.validate(graph)?;
        let orientation = opts.orientation.clone().unwrap_or_else(|| graph.default_orientation().clone());
        let nb = graph.n_bounded_faces();
        let critical = emb.critical_xs();
        let mut used_xs: BTreeSet<Q> = BTreeSet::new();
        let mut centers = Vec::with_capacity(nb);
        let mut threads = Vec::new();
        let mut thread_segments = Vec::new();
        for f in 0..nb {
            let poly = emb.face_polygon(graph, f);
            let base = opts.centers.get(&f).cloned().unwrap_or_else(|| polygon_centroid(&poly));
            let mut found = None;
            'search: for qexp in 10..14u32 {
                let qden = num_traits::pow(BigInt::from(2), qexp as usize);
                for k in 0..=16i64 {
                    for s in [1i64, -1] {
                        if k == 0 && s == -1 {
                            continue;
                        }
                        let x = &base.x + BigRational::new(BigInt::from(s * k), qden.clone());
                        if critical.contains(&x) || used_xs.contains(&x) {
                            continue;
                        }
                        let c = Point::new(x, base.y.clone());
                        if let Ok(ts) = star_threads(graph, emb, f, &poly, &c) {
                            found = Some((c, ts));
                            break 'search;
                        }
                    }
                }
                if qexp == 10 && !point_in_polygon(&base, &poly) {
                    break;
                }
            }
            let (c, ts) = found.ok_or(GardenError::NotStarShaped(f))?;
            used_xs.insert(c.x.clone());
            for (t, seg) in ts {
                threads.push(t);
                thread_segments.push(Some(seg));
            }
            centers.push(c);
        }
        let mut geo = GardenGeometry {
            graph: graph.clone(),
            emb: emb.clone(),
            orientation,
            centers,
            threads,
            thread_segments,
            exterior_walk: Vec::new(),
            step_threads: Vec::new(),
            split: 0,
        };
        geo.route_exterior(opts.exterior_split)?;
        Ok(geo)
    }

    fn route_exterior(&mut self, split: Option<usize>) -> Result<(), GardenError> {
        let g = &self.graph;
        let emb = &self.emb;
        let ext = g.exterior_face();
        let mut leftmost: Option<(Point, Option<usize>)> = None;
        for (v, p) in emb.vertices.iter().enumerate() {
            if leftmost.as_ref().map_or(true, |(q, _)| (&p.x, &p.y) < (&q.x, &q.y)) {
                leftmost = Some((p.clone(), Some(v)));
            }
        }
        for p in emb.bends.iter().flatten() {
            if leftmost.as_ref().map_or(true, |(q, _)| (&p.x, &p.y) < (&q.x, &q.y)) {
                leftmost = Some((p.clone(), None));
            }
        }
        let lv = leftmost
            .and_then(|(_, v)| v)
            .ok_or_else(|| GardenError::ExteriorRoutingFailure("leftmost point is a bend".into()))?;
        let walk = &g.face(ext).walk;
        let n = walk.len();
        let left = (-Q::one(), Q::zero());
        let start = (0..n)
            .find(|&i| {
                let hout = walk[i];
                let hin = walk[(i + n - 1) % n];
                g.vertex_of(hout) == lv
                    && in_sector(&left, &emb.first_dir(g, hout), &emb.first_dir(g, g.twin(hin)))
            })
            .ok_or_else(|| GardenError::ExteriorRoutingFailure("no exterior corner faces left at the leftmost vertex".into()))?;
        let steps: Vec<usize> = (0..n).map(|i| walk[(start + i) % n]).collect();
        let mut rightmost = 0;
        for i in 0..n {
            let (p, q) = (&emb.vertices[g.vertex_of(steps[i])], &emb.vertices[g.vertex_of(steps[rightmost])]);
            if (&p.x, &p.y) > (&q.x, &q.y) {
                rightmost = i;
            }
        }
        let split = split.unwrap_or(rightmost);
        if split >= n {
            return Err(GardenError::ExteriorRoutingFailure(format!("split {split} beyond {n} corners")));
        }
        let mut step_threads = vec![Vec::new(); n];
        let mut seen = BTreeSet::new();
        for i in 0..n {
            let v = g.vertex_of(steps[i]);
            if !seen.insert(v) {
                continue;
            }
            let hin = steps[(i + n - 1) % n];
            let id = self.threads.len();
            self.threads.push(corner_thread(g, None, hin, steps[i]));
            self.thread_segments.push(None);
            if i == 0 {
                continue;
            }
            if i <= split {
                for st in step_threads.iter_mut().take(i) {
                    st.push(StepThread { thread: id, rank: i, top: true });
                }
            } else {
                for st in step_threads.iter_mut().skip(i) {
                    st.push(StepThread { thread: id, rank: n - i, top: false });
                }
            }
        }
        self.exterior_walk = steps;
        self.step_threads = step_threads;
        self.split = split;
        Ok(())
    }

    pub fn centers(&self) -> &[Point] {
        &self.centers
    }

    pub fn threads(&self) -> &[Thread] {
        &self.threads
    }

    pub fn exterior_split(&self) -> usize {
        self.split
    }

    /// Number of corners of the exterior walk.
    pub fn exterior_corners(&self) -> usize {
        self.exterior_walk.len()
    }

    pub fn embedding(&self) -> &Embedding {
        &self.emb
    }

    /// Thread at infinity starting at exterior corner `i`, if that corner carries one.
    pub fn exterior_corner_thread(&self, i: usize) -> Option<usize> {
        let v = self.graph.vertex_of(self.exterior_walk[i]);
        let first = (0..self.exterior_walk.len()).find(|&j| self.graph.vertex_of(self.exterior_walk[j]) == v)?;
        if first != i {
            return None;
        }
        self.threads.iter().position(|t| t.face.is_none() && t.vertex == v)
    }

    /// Crossing events on the vertical line `x`, bottom to top.
    ///
    /// Centers of `on_line` faces are placed on the line at their own heights; threads of
    /// `skip_faces` are ignored.
    pub fn events_at(&self, x: &Q, on_line: &[usize], skip_faces: &[usize]) -> Result<Vec<TineEvent>, GardenError> {
        let g = &self.graph;
        let mut keyed: Vec<((Q, i64), TineEvent)> = Vec::new();
        for e in 0..g.n_edges() {
            let head = self.orientation.head(e);
            let path = self.emb.half_edge_path(g, g.twin(head));
            for w in path.windows(2) {
                if let Some(y) = cross_vertical(&w[0], &w[1], x) {
                    let dir = if w[1].x > w[0].x { Dir::Right } else { Dir::Left };
                    keyed.push(((y, 0), TineEvent::Edge { edge: e, dir }));
                }
            }
        }
        for (i, seg) in self.thread_segments.iter().enumerate() {
            let Some((c, v)) = seg else { continue };
            if skip_faces.contains(&self.threads[i].face.unwrap()) {
                continue;
            }
            if let Some(y) = cross_vertical(c, v, x) {
                let sigma = if v.x > c.x { 1 } else { -1 };
                keyed.push(((y, 0), TineEvent::Thread { thread: i, sigma }));
            }
        }
        for &f in on_line {
            keyed.push(((self.centers[f].y.clone(), 0), TineEvent::Center { center: f }));
        }
        for (j, &h) in self.exterior_walk.iter().enumerate() {
            if self.step_threads[j].is_empty() {
                continue;
            }
            let path = self.emb.half_edge_path(g, h);
            for w in path.windows(2) {
                if let Some(y) = cross_vertical(&w[0], &w[1], x) {
                    let rightward = w[1].x > w[0].x;
                    for st in &self.step_threads[j] {
                        let along = if rightward { 1 } else { -1 };
                        let sigma = if st.top { along } else { -along };
                        let sub = if rightward { st.rank as i64 } else { -(st.rank as i64) };
                        keyed.push(((y.clone(), sub), TineEvent::Thread { thread: st.thread, sigma }));
                    }
                }
            }
        }
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        for w in keyed.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(GardenError::DegenerateEmbedding(format!("two crossings coincide on the line x = {x}")));
            }
        }
        Ok(keyed.into_iter().map(|(_, e)| e).collect())
    }

    pub fn garden(&self) -> Result<Garden, GardenError> {
        let mut tines = Vec::new();
        for f in 0..self.centers.len() {
            let events = self.events_at(&self.centers[f].x, &[f], &[])?;
            tines.push(Tine { face: f, events });
        }
        Ok(Garden {
            orientation: self.orientation.clone(),
            centers: Some(self.centers.iter().map(|c| c.to_strings()).collect()),
            threads: self.threads.clone(),
            tines,
        })
    }
}

/// Interior threads of face `f` from center `c`, or an error if some vertex is not visible.
fn star_threads(
    graph: &CubicPlanarGraph,
    emb: &Embedding,
    f: usize,
    poly: &[Point],
    c: &Point,
) -> Result<Vec<(Thread, (Point, Point))>, GardenError> {
    if !point_in_polygon(c, poly) {
        return Err(GardenError::NotStarShaped(f));
    }
    let n = poly.len();
    let mut out = Vec::new();
    for v in graph.face_vertices(f) {
        let pv = &emb.vertices[v];
        for i in 0..n {
            let (a, b) = (&poly[i], &poly[(i + 1) % n]);
            match segment_meet(c, pv, a, b) {
                Meet::None => {}
                Meet::At(p) if p == *pv && (a == pv || b == pv) => {}
                _ => return Err(GardenError::NotStarShaped(f)),
            }
        }
        let d = c.sub(pv);
        let r = graph.rotation(v);
        let dirs: Vec<(Q, Q)> = r.iter().map(|&h| emb.first_dir(graph, h)).collect();
        let slot = (0..3)
            .find(|&i| in_sector(&d, &dirs[i], &dirs[(i + 1) % 3]))
            .ok_or(GardenError::NotStarShaped(f))?;
        let hout = r[slot];
        if graph.face_of(hout) != f {
            return Err(GardenError::NotStarShaped(f));
        }
        let hin = graph.twin(r[(slot + 1) % 3]);
        out.push((corner_thread(graph, Some(f), hin, hout), (c.clone(), pv.clone())));
    }
    Ok(out)
}

/// Builds the garden with vertical tines through (perturbed) centers.
pub fn build_garden_geometric(graph: &CubicPlanarGraph, emb: &Embedding, opts: &BuildOptions) -> Result<Garden, GardenError> {
    GardenGeometry::new(graph, emb, opts)?.garden()
}
