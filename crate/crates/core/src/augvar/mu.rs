//! Corner weights `μ_{f,v}` of an augmentation and their identities.

use crate::binseq::{combinatorial_threads, thread_weight};
use crate::field::FiniteField;
use crate::graph_core::{CubicPlanarGraph, EdgeOrientation};

/// `μ_{f,v} = H(τ_f(v))` at every corner, exterior included, and `ν_e = λ_e²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuAssignment {
    /// `(face, vertex, μ)`, faces indexed with the exterior last.
    pub corners: Vec<(usize, usize, u32)>,
    pub nu: Vec<u32>,
}

pub fn mu_from_aug(graph: &CubicPlanarGraph, orientation: &EdgeOrientation, field: &FiniteField, lambda: &[u32]) -> MuAssignment {
    let ext = graph.exterior_face();
    let corners = combinatorial_threads(graph)
        .iter()
        .map(|t| {
            let w = thread_weight(graph, t, orientation);
            let mut val = if w.sign < 0 { field.neg(1) } else { 1 };
            for (e, &a) in w.exps.iter().enumerate() {
                if a != 0 {
                    val = field.mul(val, field.pow(lambda[e], a as i64).expect("unit"));
                }
            }
            (t.face.unwrap_or(ext), t.vertex, val)
        })
        .collect();
    let nu = lambda.iter().map(|&l| field.mul(l, l)).collect();
    MuAssignment { corners, nu }
}

impl MuAssignment {
    fn get(&self, f: usize, v: usize) -> u32 {
        self.corners.iter().find(|&&(g, w, _)| g == f && w == v).map(|c| c.2).expect("corner")
    }

    /// `Σ_{v∈f} μ_{f,v}` for every face, exterior last.
    pub fn face_sums(&self, graph: &CubicPlanarGraph, field: &FiniteField) -> Vec<u32> {
        let mut sums = vec![0; graph.n_faces()];
        for &(f, _, m) in &self.corners {
            sums[f] = field.add(sums[f], m);
        }
        sums
    }

    pub fn mu_sum_holds(&self, graph: &CubicPlanarGraph, field: &FiniteField) -> bool {
        self.face_sums(graph, field).iter().all(|&s| s == 0)
    }

    /// `μ_{f,v} μ_{g,v} = μ_{f,w} μ_{g,w} = ν_e` across every edge `e = vw` with sides `f, g`.
    pub fn mu_prod_holds(&self, graph: &CubicPlanarGraph, field: &FiniteField) -> bool {
        (0..graph.n_edges()).all(|e| {
            let [h, h2] = graph.edge_half_edges(e);
            let (f, g) = (graph.face_of(h), graph.face_of(h2));
            let (v, w) = (graph.vertex_of(h), graph.vertex_of(h2));
            let at_v = field.mul(self.get(f, v), self.get(g, v));
            let at_w = field.mul(self.get(f, w), self.get(g, w));
            at_v == at_w && at_v == self.nu[e]
        })
    }

    /// `∏_e ν_e = (−1)^{g+1} ∏_{(f,v)} μ_{f,v}`.
    pub fn product_identity_holds(&self, graph: &CubicPlanarGraph, field: &FiniteField) -> bool {
        let nu = self.nu.iter().fold(1, |a, &b| field.mul(a, b));
        let mut mu = self.corners.iter().fold(1, |a, c| field.mul(a, c.2));
        if (graph.genus() + 1) % 2 == 1 {
            mu = field.neg(mu);
        }
        nu == mu
    }
}
