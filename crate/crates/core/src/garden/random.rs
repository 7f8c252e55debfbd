//! Randomized graphs and straight-line embeddings for property tests.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use super::geometry::{q_frac, BuildOptions, Embedding, Point, Q};
use crate::graph_core::{CubicPlanarGraph, EdgeOrientation, RotationSpec};

/// Solves `a x = b` exactly; `None` if singular.
pub fn solve_rational(mut a: Vec<Vec<Q>>, mut b: Vec<Q>) -> Option<Vec<Q>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        let inv = Q::one() / &a[col][col];
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let factor = &a[r][col] * &inv;
                for c in col..n {
                    let v = &factor * &a[col][c];
                    a[r][c] -= v;
                }
                let v = &factor * &b[col];
                b[r] -= v;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Weighted barycentric embedding with the exterior face on a random convex polygon.
///
/// Returns `None` when the result does not realize the rotation system.
pub fn tutte_embedding<R: Rng>(graph: &CubicPlanarGraph, rng: &mut R) -> Option<Embedding> {
    let ext = graph.exterior_face();
    let outer: Vec<usize> = graph.face(ext).walk.iter().map(|&h| graph.vertex_of(h)).collect();
    let mut uniq = outer.clone();
    uniq.sort();
    uniq.dedup();
    if uniq.len() != outer.len() || outer.len() < 3 {
        return None;
    }
    let n_out = outer.len();
    let mut ts: Vec<Q> = Vec::new();
    while ts.len() < n_out {
        let t = q_frac(rng.gen_range(-400..=400), 100);
        if !ts.contains(&t) {
            ts.push(t);
        }
    }
    ts.sort();
    ts.reverse();
    let r = q_frac(9, 10);
    let mut pos: BTreeMap<usize, Point> = BTreeMap::new();
    for (i, &v) in outer.iter().enumerate() {
        let t = &ts[i];
        let den = Q::one() + t * t;
        let x = &r * (Q::one() - t * t) / &den;
        let y = &r * q_frac(2, 1) * t / &den;
        pos.insert(v, Point::new(x, y));
    }
    let inner: Vec<usize> = (0..graph.n_vertices()).filter(|v| !pos.contains_key(v)).collect();
    let idx: BTreeMap<usize, usize> = inner.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let weights: Vec<i64> = (0..graph.n_edges()).map(|_| rng.gen_range(1..=6)).collect();
    let m = inner.len();
    let mut ax = vec![vec![Q::zero(); m]; m];
    let mut bx = vec![Q::zero(); m];
    let mut by = vec![Q::zero(); m];
    for e in 0..graph.n_edges() {
        let (u, v) = graph.edge_endpoints(e);
        if u == v {
            return None;
        }
        let w = q_frac(weights[e], 1);
        for (a, b) in [(u, v), (v, u)] {
            if let Some(&i) = idx.get(&a) {
                ax[i][i] += &w;
                match idx.get(&b) {
                    Some(&j) => ax[i][j] -= &w,
                    None => {
                        bx[i] += &w * &pos[&b].x;
                        by[i] += &w * &pos[&b].y;
                    }
                }
            }
        }
    }
    let xs = solve_rational(ax.clone(), bx)?;
    let ys = solve_rational(ax, by)?;
    for (i, &v) in inner.iter().enumerate() {
        pos.insert(v, Point::new(xs[i].clone(), ys[i].clone()));
    }
    let emb = Embedding::straight((0..graph.n_vertices()).map(|v| pos[&v].clone()).collect(), graph.n_edges());
    emb.validate(graph).ok()?;
    Some(emb)
}

/// Random straight-line embedding, retrying until the drawing is valid.
pub fn random_embedding<R: Rng>(graph: &CubicPlanarGraph, rng: &mut R) -> Option<Embedding> {
    (0..32).find_map(|_| tutte_embedding(graph, rng))
}

pub fn random_orientation<R: Rng>(graph: &CubicPlanarGraph, rng: &mut R) -> EdgeOrientation {
    EdgeOrientation((0..graph.n_edges()).map(|e| graph.edge_half_edges(e)[rng.gen_range(0..2)]).collect())
}

/// Random centers as positive convex combinations of face vertices, plus a random orientation.
pub fn random_options<R: Rng>(graph: &CubicPlanarGraph, emb: &Embedding, rng: &mut R) -> BuildOptions {
    let mut opts = BuildOptions { orientation: Some(random_orientation(graph, rng)), ..Default::default() };
    for f in 0..graph.n_bounded_faces() {
        let vs = graph.face_vertices(f);
        let ws: Vec<i64> = vs.iter().map(|_| rng.gen_range(1..=8)).collect();
        let total: i64 = ws.iter().sum();
        let mut x = Q::zero();
        let mut y = Q::zero();
        for (v, w) in vs.iter().zip(&ws) {
            x += &emb.vertices[*v].x * q_frac(*w, total);
            y += &emb.vertices[*v].y * q_frac(*w, total);
        }
        opts.centers.insert(f, Point::new(x, y));
    }
    opts
}

/// Splits face `face` by a new edge joining midpoints of walk positions `i` and `j`.
pub fn insert_chord(graph: &CubicPlanarGraph, face: usize, i: usize, j: usize) -> Option<CubicPlanarGraph> {
    let walk = &graph.face(face).walk;
    let (hi, hj) = (walk[i], walk[j]);
    if i == j || graph.edge_of(hi) == graph.edge_of(hj) {
        return None;
    }
    let mut spec: RotationSpec = graph.to_spec();
    spec.orientation = None;
    let n = graph.n_half_edges();
    let mut pairing = spec.pairing.clone();
    let mut k = n;
    let mut new_pts = Vec::new();
    for h in [hi, hj] {
        let (fwd, mid, back) = (k, k + 1, k + 2);
        k += 3;
        spec.vertices.push(vec![fwd, mid, back]);
        let e = graph.edge_of(h);
        let t = graph.twin(h);
        pairing[e] = [h, back];
        pairing.push([fwd, t]);
        new_pts.push(mid);
    }
    pairing.push([new_pts[0], new_pts[1]]);
    spec.pairing = pairing;
    CubicPlanarGraph::build(&spec).ok()
}

/// Random cubic planar graph grown from K4 by chord insertions.
pub fn random_cubic_graph<R: Rng>(rng: &mut R, genus: usize) -> CubicPlanarGraph {
    let mut g = CubicPlanarGraph::from_json(include_str!("../../fixtures/k4.json")).expect("k4 fixture");
    while g.genus() < genus {
        let f = rng.gen_range(0..g.n_faces());
        let len = g.face(f).walk.len();
        let mut pos: Vec<usize> = (0..len).collect();
        pos.shuffle(rng);
        if let Some(h) = insert_chord(&g, f, pos[0], pos[1]) {
            g = h;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tutte_embeds_fixture_graphs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for text in [
            include_str!("../../fixtures/k4.json"),
            include_str!("../../fixtures/cube.json"),
            include_str!("../../fixtures/prism6.json"),
        ] {
            let g = CubicPlanarGraph::from_json(text).unwrap();
            assert!(random_embedding(&g, &mut rng).is_some());
        }
    }

    #[test]
    fn chord_insertion_grows_genus() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for genus in 1..=5 {
            let g = random_cubic_graph(&mut rng, genus);
            assert_eq!(g.genus(), genus);
            assert!(g.is_bridgeless());
        }
    }
}
