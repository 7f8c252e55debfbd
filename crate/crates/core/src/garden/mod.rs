//! Gardens: orientation, centers, threads and tines as ordered crossing events.

pub mod geometry;
pub mod random;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph_core::{CubicPlanarGraph, EdgeOrientation};

pub use geometry::{build_garden_geometric, BuildOptions, Embedding, GardenGeometry, Point, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GardenError {
    #[error("face f{} is not star-shaped from its center", .0 + 1)]
    NotStarShaped(usize),
    #[error("degenerate embedding: {0}")]
    DegenerateEmbedding(String),
    #[error("cannot route threads at infinity: {0}")]
    ExteriorRoutingFailure(String),
    #[error("invalid garden: {}", .0.join("; "))]
    Invalid(Vec<String>),
    #[error("json: {0}")]
    Json(String),
}

/// A thread from a vertex to a face center (`face = Some`) or to the left wall (`None`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thread {
    pub face: Option<usize>,
    pub vertex: usize,
    /// The two edges bounding the corner the thread leaves from, then the opposite edge.
    pub e_n: usize,
    pub e_m: usize,
    pub e_k: usize,
}

/// Oriented direction of an edge where it crosses an upward tine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Dir {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Dir {
    pub fn sign(self) -> i64 {
        match self {
            Dir::Left => -1,
            Dir::Right => 1,
        }
    }

    pub fn reversed(self) -> Dir {
        match self {
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TineEvent {
    Edge { edge: usize, dir: Dir },
    Thread { thread: usize, sigma: i8 },
    Center { center: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tine {
    pub face: usize,
    /// Bottom to top.
    pub events: Vec<TineEvent>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Garden {
    pub orientation: EdgeOrientation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub centers: Option<Vec<[String; 2]>>,
    pub threads: Vec<Thread>,
    /// One tine per bounded face, sorted by face.
    pub tines: Vec<Tine>,
}

#[derive(Deserialize)]
struct GardenFile {
    #[serde(default)]
    orientation: Option<Vec<usize>>,
    #[serde(default)]
    centers: Option<Vec<[String; 2]>>,
    threads: Vec<Thread>,
    tines: Vec<Tine>,
}

impl Garden {
    /// Parses a garden file; a missing orientation defaults to the graph's.
    pub fn from_json(graph: &CubicPlanarGraph, text: &str) -> Result<Self, GardenError> {
        let f: GardenFile = serde_json::from_str(text).map_err(|e| GardenError::Json(e.to_string()))?;
        let orientation = match f.orientation {
            Some(o) => EdgeOrientation(o),
            None => graph.default_orientation().clone(),
        };
        let mut tines = f.tines;
        tines.sort_by_key(|t| t.face);
        let g = Garden { orientation, centers: f.centers, threads: f.threads, tines };
        let problems = validate_garden(graph, &g);
        if problems.is_empty() {
            Ok(g)
        } else {
            Err(GardenError::Invalid(problems))
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("garden serializes")
    }

    pub fn tine(&self, face: usize) -> &[TineEvent] {
        &self.tines.iter().find(|t| t.face == face).expect("tine for face").events
    }

    /// Same garden with edge `e` reversed; edge-crossing directions flip accordingly.
    pub fn flip_edge(&self, graph: &CubicPlanarGraph, e: usize) -> Garden {
        let mut g = self.clone();
        g.orientation = self.orientation.flipped(graph, e);
        for t in &mut g.tines {
            for ev in &mut t.events {
                if let TineEvent::Edge { edge, dir } = ev {
                    if *edge == e {
                        *dir = dir.reversed();
                    }
                }
            }
        }
        g
    }
}

fn sorted3(a: usize, b: usize, c: usize) -> [usize; 3] {
    let mut v = [a, b, c];
    v.sort();
    v
}

/// Thread for the corner between consecutive walk half-edges `h_in` and `h_out`.
pub fn corner_thread(graph: &CubicPlanarGraph, face: Option<usize>, h_in: usize, h_out: usize) -> Thread {
    let v = graph.vertex_of(h_out);
    let t_in = graph.twin(h_in);
    let third = graph.rotation(v).into_iter().find(|&h| h != h_out && h != t_in).expect("cubic vertex");
    Thread { face, vertex: v, e_n: graph.edge_of(h_out), e_m: graph.edge_of(h_in), e_k: graph.edge_of(third) }
}

/// Checks the garden invariants; returns a list of violations.
pub fn validate_garden(graph: &CubicPlanarGraph, garden: &Garden) -> Vec<String> {
    let mut bad = Vec::new();
    let nb = graph.n_bounded_faces();
    let ext = graph.exterior_face();
    let o = &garden.orientation.0;
    if o.len() != graph.n_edges() {
        bad.push(format!("orientation lists {} heads for {} edges", o.len(), graph.n_edges()));
    } else {
        for (e, &h) in o.iter().enumerate() {
            let [a, b] = graph.edge_half_edges(e);
            if h != a && h != b {
                bad.push(format!("orientation head {h} is not on edge e{}", e + 1));
            }
        }
    }
    let corner_match = |face: usize, t: &Thread| -> bool {
        graph.face_corners(face).iter().any(|&(v, hin, hout)| {
            v == t.vertex && {
                let c = corner_thread(graph, None, hin, hout);
                sorted3(c.e_n, c.e_m, 0)[..] == sorted3(t.e_n, t.e_m, 0)[..] && c.e_k == t.e_k
            }
        })
    };
    let mut interior = vec![Vec::new(); nb];
    let mut at_inf = Vec::new();
    for (i, t) in garden.threads.iter().enumerate() {
        if t.vertex >= graph.n_vertices() {
            bad.push(format!("thread {i}: vertex {} out of range", t.vertex));
            continue;
        }
        let [a, b, c] = graph.edges_at(t.vertex);
        if sorted3(a, b, c) != sorted3(t.e_n, t.e_m, t.e_k) {
            bad.push(format!("thread {i}: edges are not the three edges at vertex {}", t.vertex));
            continue;
        }
        match t.face {
            Some(f) if f >= nb => bad.push(format!("thread {i}: face {f} is not bounded")),
            Some(f) => {
                if !corner_match(f, t) {
                    bad.push(format!("thread {i}: (e{}, e{}) is not a corner of f{} at vertex {}", t.e_n + 1, t.e_m + 1, f + 1, t.vertex));
                }
                if graph.is_bridgeless() && graph.face_edges(f).contains(&t.e_k) {
                    bad.push(format!("thread {i}: opposite edge e{} lies on f{}", t.e_k + 1, f + 1));
                }
                interior[f].push(t.vertex);
            }
            None => {
                if !corner_match(ext, t) {
                    bad.push(format!("thread {i}: not an exterior corner at vertex {}", t.vertex));
                }
                at_inf.push(t.vertex);
            }
        }
    }
    for f in 0..nb {
        let mut want = graph.face_vertices(f);
        want.sort();
        let mut have = interior[f].clone();
        have.sort();
        if want != have {
            bad.push(format!("face f{}: interior threads at {:?}, expected one at each of {:?}", f + 1, have, want));
        }
    }
    let mut want = graph.face_vertices(ext);
    want.sort();
    at_inf.sort();
    if want != at_inf {
        bad.push(format!("threads at infinity at {:?}, expected one at each of {:?}", at_inf, want));
    }

    let faces: Vec<usize> = garden.tines.iter().map(|t| t.face).collect();
    if faces != (0..nb).collect::<Vec<_>>() {
        bad.push(format!("tines for faces {:?}, expected exactly one per bounded face", faces));
    }
    for tine in &garden.tines {
        check_tine_walk(graph, garden, tine, &mut bad);
    }
    bad
}

/// Follows the faces visited by a tine and checks each event against them.
fn check_tine_walk(graph: &CubicPlanarGraph, garden: &Garden, tine: &Tine, bad: &mut Vec<String>) {
    let ext = graph.exterior_face();
    let name = format!("tine f{}", tine.face + 1);
    let centers = tine.events.iter().filter(|e| matches!(e, TineEvent::Center { .. })).count();
    if centers != 1 {
        bad.push(format!("{name}: {centers} center events"));
    }
    let mut cur = ext;
    for (i, ev) in tine.events.iter().enumerate() {
        match *ev {
            TineEvent::Edge { edge, .. } => {
                if edge >= graph.n_edges() {
                    bad.push(format!("{name}: event {i} references missing edge {edge}"));
                    return;
                }
                let [a, b] = graph.edge_half_edges(edge);
                let (fa, fb) = (graph.face_of(a), graph.face_of(b));
                if cur == fa {
                    cur = fb;
                } else if cur == fb {
                    cur = fa;
                } else {
                    bad.push(format!("{name}: event {i} crosses e{} from a face it does not bound", edge + 1));
                    return;
                }
            }
            TineEvent::Thread { thread, sigma } => {
                if sigma != 1 && sigma != -1 {
                    bad.push(format!("{name}: event {i} has sigma {sigma}"));
                }
                match garden.threads.get(thread) {
                    None => bad.push(format!("{name}: event {i} references missing thread {thread}")),
                    Some(t) => {
                        let home = t.face.unwrap_or(ext);
                        if home != cur {
                            bad.push(format!("{name}: event {i} crosses thread {thread} outside its face"));
                        }
                    }
                }
            }
            TineEvent::Center { center } => {
                if center != tine.face {
                    bad.push(format!("{name}: event {i} is the center of f{}", center + 1));
                } else if cur != center {
                    bad.push(format!("{name}: center event outside its face"));
                }
            }
        }
    }
    if cur != ext {
        bad.push(format!("{name}: does not end in the exterior face"));
    }
}
