//! Cubic planar multigraphs as rotation systems on half-edges.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} does not list exactly 3 half-edges")]
    NonCubic(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("bad pairing: {0}")]
    BadPairing(String),
    #[error("Euler characteristic mismatch: V={v}, E={e}, F={f}")]
    EulerMismatch { v: usize, e: usize, f: usize },
    #[error("bad orientation: {0}")]
    BadOrientation(String),
    #[error("exterior face hint {0} is not a half-edge")]
    BadHint(usize),
    #[error("bad spanning basis: {0}")]
    BadBasis(String),
    #[error("json: {0}")]
    Json(String),
}

/// Graph input file contents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSpec {
    /// Per vertex, its three half-edges in counterclockwise order.
    pub vertices: Vec<Vec<usize>>,
    /// Edge `i` joins the two half-edges `pairing[i]`.
    pub pairing: Vec<[usize; 2]>,
    /// Per edge, the head half-edge.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientation: Option<Vec<usize>>,
    /// A half-edge on the unbounded face.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exterior_face_hint: Option<usize>,
}

/// Per-edge choice of head half-edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeOrientation(pub Vec<usize>);

impl EdgeOrientation {
    pub fn head(&self, edge: usize) -> usize {
        self.0[edge]
    }

    /// Reverses edge `i`.
    pub fn flipped(&self, graph: &CubicPlanarGraph, edge: usize) -> Self {
        let mut v = self.0.clone();
        v[edge] = graph.twin(v[edge]);
        EdgeOrientation(v)
    }
}

/// A face boundary walk: half-edges in traversal order, face on the left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub walk: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub n_vertices: usize,
    /// Dual edge `i` joins the two faces sharing primal edge `i`.
    pub edges: Vec<(usize, usize)>,
}

impl DualGraph {
    pub fn has_loop(&self) -> bool {
        self.edges.iter().any(|(a, b)| a == b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningBasis {
    pub root: usize,
    /// Sorted tree edge ids.
    pub tree_edges: Vec<usize>,
}

impl SpanningBasis {
    /// Validated basis from an explicit edge set.
    pub fn from_edges(graph: &CubicPlanarGraph, root: usize, edges: &[usize]) -> Result<Self, GraphError> {
        let mut tree: Vec<usize> = edges.to_vec();
        tree.sort();
        tree.dedup();
        if root >= graph.n_vertices() {
            return Err(GraphError::BadBasis(format!("root {root} out of range")));
        }
        if tree.len() != 2 * graph.genus() {
            return Err(GraphError::BadBasis(format!("expected {} edges, got {}", 2 * graph.genus(), tree.len())));
        }
        let mut uf: Vec<usize> = (0..graph.n_vertices()).collect();
        fn find(uf: &mut [usize], a: usize) -> usize {
            let mut a = a;
            while uf[a] != a {
                uf[a] = uf[uf[a]];
                a = uf[a];
            }
            a
        }
        for &e in &tree {
            if e >= graph.n_edges() {
                return Err(GraphError::BadBasis(format!("edge {e} out of range")));
            }
            let (u, v) = graph.edge_endpoints(e);
            if u == root || v == root {
                return Err(GraphError::BadBasis(format!("edge {e} touches the root")));
            }
            let (a, b) = (find(&mut uf, u), find(&mut uf, v));
            if a == b {
                return Err(GraphError::BadBasis(format!("edge {e} closes a cycle")));
            }
            uf[a] = b;
        }
        Ok(SpanningBasis { root, tree_edges: tree })
    }

    pub fn non_tree_edges(&self, graph: &CubicPlanarGraph) -> Vec<usize> {
        (0..graph.n_edges()).filter(|e| self.tree_edges.binary_search(e).is_err()).collect()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.tree_edges.binary_search(&e).is_ok()
    }
}

/// Connected cubic planar multigraph with a fixed rotation system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicPlanarGraph {
    rotation: Vec<[usize; 3]>,
    vertex_of: Vec<usize>,
    slot_of: Vec<usize>,
    twin: Vec<usize>,
    edges: Vec<[usize; 2]>,
    edge_of: Vec<usize>,
    /// All faces; bounded faces first in discovery order, the exterior face last.
    faces: Vec<Face>,
    face_of: Vec<usize>,
    orientation: EdgeOrientation,
    genus: usize,
}

impl CubicPlanarGraph {
    pub fn build(spec: &RotationSpec) -> Result<Self, GraphError> {
        let nv = spec.vertices.len();
        let nh = 3 * nv;
        let mut rotation = Vec::with_capacity(nv);
        let mut vertex_of = vec![usize::MAX; nh];
        let mut slot_of = vec![0; nh];
        for (v, hs) in spec.vertices.iter().enumerate() {
            if hs.len() != 3 {
                return Err(GraphError::NonCubic(v));
            }
            for (s, &h) in hs.iter().enumerate() {
                if h >= nh {
                    return Err(GraphError::BadPairing(format!("half-edge id {h} out of range 0..{nh}")));
                }
                if vertex_of[h] != usize::MAX {
                    return Err(GraphError::BadPairing(format!("half-edge {h} listed twice")));
                }
                vertex_of[h] = v;
                slot_of[h] = s;
            }
            rotation.push([hs[0], hs[1], hs[2]]);
        }
        if nv == 0 {
            return Err(GraphError::Disconnected);
        }
        let mut twin = vec![usize::MAX; nh];
        let mut edge_of = vec![usize::MAX; nh];
        if spec.pairing.len() * 2 != nh {
            return Err(GraphError::BadPairing(format!("{} pairs for {} half-edges", spec.pairing.len(), nh)));
        }
        for (i, &[a, b]) in spec.pairing.iter().enumerate() {
            if a >= nh || b >= nh || a == b {
                return Err(GraphError::BadPairing(format!("pair {i} = ({a}, {b}) invalid")));
            }
            if twin[a] != usize::MAX || twin[b] != usize::MAX {
                return Err(GraphError::BadPairing(format!("pair {i} reuses a half-edge")));
            }
            twin[a] = b;
            twin[b] = a;
            edge_of[a] = i;
            edge_of[b] = i;
        }
        let edges = spec.pairing.clone();

        let mut seen = vec![false; nv];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &rotation[v] {
                let w = vertex_of[twin[h]];
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(GraphError::Disconnected);
        }

        let next = |h: usize| -> usize {
            let t = twin[h];
            rotation[vertex_of[t]][(slot_of[t] + 2) % 3]
        };
        let mut walks: Vec<Vec<usize>> = Vec::new();
        let mut face_tmp = vec![usize::MAX; nh];
        for start in 0..nh {
            if face_tmp[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut walk = Vec::new();
            let mut h = start;
            loop {
                face_tmp[h] = id;
                walk.push(h);
                h = next(h);
                if h == start {
                    break;
                }
            }
            walks.push(walk);
        }
        let (v, e, f) = (nv, nh / 2, walks.len());
        if v + f != e + 2 || v % 2 != 0 {
            return Err(GraphError::EulerMismatch { v, e, f });
        }
        let genus = (v - 2) / 2;

        let ext = match spec.exterior_face_hint {
            Some(h) if h >= nh => return Err(GraphError::BadHint(h)),
            Some(h) => face_tmp[h],
            None => {
                let mut best = 0;
                for (i, w) in walks.iter().enumerate() {
                    if w.len() > walks[best].len() {
                        best = i;
                    }
                }
                best
            }
        };
        let mut faces = Vec::with_capacity(f);
        let mut remap = vec![0; f];
        for (i, w) in walks.iter().enumerate() {
            if i != ext {
                remap[i] = faces.len();
                faces.push(Face { walk: w.clone() });
            }
        }
        remap[ext] = faces.len();
        faces.push(Face { walk: walks[ext].clone() });
        let face_of = face_tmp.iter().map(|&i| remap[i]).collect();

        let orientation = match &spec.orientation {
            Some(o) => {
                if o.len() != edges.len() {
                    return Err(GraphError::BadOrientation(format!("{} heads for {} edges", o.len(), edges.len())));
                }
                for (i, &h) in o.iter().enumerate() {
                    if h != edges[i][0] && h != edges[i][1] {
                        return Err(GraphError::BadOrientation(format!("head {h} not on edge {i}")));
                    }
                }
                EdgeOrientation(o.clone())
            }
            None => EdgeOrientation(edges.iter().map(|p| p[1]).collect()),
        };

        Ok(CubicPlanarGraph { rotation, vertex_of, slot_of, twin, edges, edge_of, faces, face_of, orientation, genus })
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let spec: RotationSpec = serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::build(&spec)
    }

    pub fn to_spec(&self) -> RotationSpec {
        RotationSpec {
            vertices: self.rotation.iter().map(|r| r.to_vec()).collect(),
            pairing: self.edges.clone(),
            orientation: Some(self.orientation.0.clone()),
            exterior_face_hint: Some(self.faces[self.exterior_face()].walk[0]),
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }
    pub fn n_vertices(&self) -> usize {
        self.rotation.len()
    }
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn n_half_edges(&self) -> usize {
        self.twin.len()
    }
    pub fn n_bounded_faces(&self) -> usize {
        self.faces.len() - 1
    }
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }
    /// Index of the exterior face in the all-faces numbering.
    pub fn exterior_face(&self) -> usize {
        self.faces.len() - 1
    }
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }
    pub fn face(&self, f: usize) -> &Face {
        &self.faces[f]
    }
    pub fn rotation(&self, v: usize) -> [usize; 3] {
        self.rotation[v]
    }
    pub fn vertex_of(&self, h: usize) -> usize {
        self.vertex_of[h]
    }
    pub fn twin(&self, h: usize) -> usize {
        self.twin[h]
    }
    pub fn edge_of(&self, h: usize) -> usize {
        self.edge_of[h]
    }
    pub fn edge_half_edges(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (self.vertex_of[self.edges[e][0]], self.vertex_of[self.edges[e][1]])
    }
    /// Face on the left of half-edge `h`.
    pub fn face_of(&self, h: usize) -> usize {
        self.face_of[h]
    }
    pub fn default_orientation(&self) -> &EdgeOrientation {
        &self.orientation
    }
    pub fn next_ccw(&self, h: usize) -> usize {
        self.rotation[self.vertex_of[h]][(self.slot_of[h] + 1) % 3]
    }
    pub fn prev_ccw(&self, h: usize) -> usize {
        self.rotation[self.vertex_of[h]][(self.slot_of[h] + 2) % 3]
    }
    /// Next half-edge of the face walk containing `h`.
    pub fn face_next(&self, h: usize) -> usize {
        self.prev_ccw(self.twin[h])
    }

    /// Edges at `v`, one entry per half-edge (a loop appears twice).
    pub fn edges_at(&self, v: usize) -> [usize; 3] {
        self.rotation[v].map(|h| self.edge_of[h])
    }

    /// Number of edges leaving `v` (tail half-edges at `v`).
    pub fn outward_count(&self, v: usize, orientation: &EdgeOrientation) -> usize {
        self.rotation[v].iter().filter(|&&h| orientation.head(self.edge_of[h]) != h).count()
    }

    /// Edges on the boundary of face `f` (sorted, deduplicated).
    pub fn face_edges(&self, f: usize) -> Vec<usize> {
        let mut es: Vec<usize> = self.faces[f].walk.iter().map(|&h| self.edge_of[h]).collect();
        es.sort();
        es.dedup();
        es
    }

    /// Vertices on the boundary of face `f` in order of first appearance along the walk.
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &h in &self.faces[f].walk {
            let v = self.vertex_of[h];
            if !out.contains(&v) {
                out.push(v);
            }
        }
        out
    }

    /// Corners of face `f`: for each walk position, (vertex, incoming half-edge, outgoing half-edge).
    pub fn face_corners(&self, f: usize) -> Vec<(usize, usize, usize)> {
        let w = &self.faces[f].walk;
        let n = w.len();
        (0..n).map(|i| (self.vertex_of[w[i]], w[(i + n - 1) % n], w[i])).collect()
    }

    pub fn dual_graph(&self) -> DualGraph {
        DualGraph {
            n_vertices: self.faces.len(),
            edges: self.edges.iter().map(|&[a, b]| (self.face_of[a], self.face_of[b])).collect(),
        }
    }

    /// Edges whose two sides lie in the same face.
    pub fn find_bridges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.face_of[self.edges[e][0]] == self.face_of[self.edges[e][1]]).collect()
    }

    pub fn is_bridgeless(&self) -> bool {
        self.find_bridges().is_empty()
    }

    /// BFS tree over all vertices but `v0`, scanning edges by increasing id.
    pub fn spanning_basis(&self, v0: usize) -> Result<SpanningBasis, GraphError> {
        let nv = self.n_vertices();
        if v0 >= nv {
            return Err(GraphError::BadBasis(format!("root {v0} out of range")));
        }
        let mut adj: Vec<BTreeSet<(usize, usize)>> = vec![BTreeSet::new(); nv];
        for e in 0..self.n_edges() {
            let (u, v) = self.edge_endpoints(e);
            if u != v && u != v0 && v != v0 {
                adj[u].insert((e, v));
                adj[v].insert((e, u));
            }
        }
        let start = if v0 == 0 { 1 } else { 0 };
        let mut tree = Vec::new();
        if nv > 1 {
            let mut seen = vec![false; nv];
            seen[v0] = true;
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &(e, w) in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        tree.push(e);
                        queue.push_back(w);
                    }
                }
            }
            if seen.iter().any(|s| !s) {
                return Err(GraphError::BadBasis(format!("graph minus vertex {v0} is disconnected")));
            }
        }
        SpanningBasis::from_edges(self, v0, &tree)
    }

    /// Every spanning basis, for small graphs.
    pub fn all_spanning_bases(&self) -> Vec<SpanningBasis> {
        let m = self.n_edges();
        let k = 2 * self.genus;
        let mut out = Vec::new();
        for root in 0..self.n_vertices() {
            let mut pick = Vec::new();
            fn rec(
                g: &CubicPlanarGraph,
                root: usize,
                start: usize,
                m: usize,
                k: usize,
                pick: &mut Vec<usize>,
                out: &mut Vec<SpanningBasis>,
            ) {
                if pick.len() == k {
                    if let Ok(b) = SpanningBasis::from_edges(g, root, pick) {
                        out.push(b);
                    }
                    return;
                }
                for e in start..m {
                    pick.push(e);
                    rec(g, root, e + 1, m, k, pick, out);
                    pick.pop();
                }
            }
            rec(self, root, 0, m, k, &mut pick, &mut out);
        }
        out
    }

    pub fn face_name(&self, f: usize) -> String {
        if f == self.exterior_face() {
            "f0".into()
        } else {
            format!("f{}", f + 1)
        }
    }
}
