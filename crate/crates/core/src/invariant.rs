//! The lattice action on the algebra with `t` adjoined, basis matrices, and the T-versal slice.

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::binseq::{enumerate_binary_sequences, SignConvention, WeightContext};
use crate::field::{FiniteField, Ring};
use crate::garden::{Garden, GardenError, Q};
use crate::graph_core::{CubicPlanarGraph, SpanningBasis};
use crate::moves::{verify_commutation, AlgebraMap, CommutationReport};
use crate::symbolic::{AlgebraElement, DifferentialTable, Gen, LaurentPoly, Space, SymbolicError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph has bridges {0:?}")]
    BridgePresent(Vec<usize>),
    #[error("adjacency matrix A is singular")]
    SingularA,
    #[error("A^-1 is not integral")]
    NonIntegralInverse,
    #[error("exponent vector has length {got}, expected {expected}")]
    BadExponents { got: usize, expected: usize },
    #[error(transparent)]
    Garden(#[from] GardenError),
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
}

fn require_bridgeless(graph: &CubicPlanarGraph) -> Result<(), InvariantError> {
    let bridges = graph.find_bridges();
    if bridges.is_empty() {
        Ok(())
    } else {
        Err(InvariantError::BridgePresent(bridges))
    }
}

/// Edge `e` lies on bounded face `f`.
fn on_face(graph: &CubicPlanarGraph, e: usize, f: usize) -> bool {
    graph.edge_half_edges(e).iter().any(|&h| graph.face_of(h) == f)
}

/// `φ₀^{λ₀} ∘ φ_{f₁}^{λ₁} ∘ … ∘ φ_{f_{g+2}}^{λ_{g+2}}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAction {
    pub exponents: Vec<i32>,
}

impl LatticeAction {
    pub fn new(graph: &CubicPlanarGraph, exponents: Vec<i32>) -> Result<Self, InvariantError> {
        let expected = graph.n_bounded_faces() + 1;
        if exponents.len() != expected {
            return Err(InvariantError::BadExponents { got: exponents.len(), expected });
        }
        Ok(LatticeAction { exponents })
    }

    /// The `i`-th generator: `φ₀` for `i = 0`, `φ_{f_i}` otherwise.
    pub fn generator(graph: &CubicPlanarGraph, i: usize) -> Self {
        let mut exponents = vec![0; graph.n_bounded_faces() + 1];
        exponents[i] = 1;
        LatticeAction { exponents }
    }

    pub fn generators(graph: &CubicPlanarGraph) -> Vec<Self> {
        (0..=graph.n_bounded_faces()).map(|i| Self::generator(graph, i)).collect()
    }

    pub fn name(&self) -> String {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &k)| k != 0)
            .map(|(i, &k)| {
                let base = if i == 0 { "phi0".to_string() } else { format!("phi_f{i}") };
                if k == 1 {
                    base
                } else {
                    format!("{base}^{k}")
                }
            })
            .collect();
        if parts.is_empty() {
            "id".into()
        } else {
            parts.join("*")
        }
    }

    /// `β(e)`: the power of `t` multiplying each edge.
    pub fn edge_powers(&self, graph: &CubicPlanarGraph) -> Vec<i32> {
        (0..graph.n_edges())
            .map(|e| {
                self.exponents[0]
                    + (0..graph.n_bounded_faces()).filter(|&f| on_face(graph, e, f)).map(|f| self.exponents[f + 1]).sum::<i32>()
            })
            .collect()
    }

    pub fn face_powers(&self) -> Vec<i32> {
        self.exponents[1..].iter().map(|&k| self.exponents[0] + 2 * k).collect()
    }

    pub fn y_power(&self) -> i32 {
        -self.exponents[0]
    }

    /// The action as an algebra map over `Λ_G[t^{±1}]`.
    pub fn to_map(&self, graph: &CubicPlanarGraph, ring: &Ring) -> AlgebraMap {
        let n = graph.n_edges();
        let space = Space::new(n).with_t();
        let mut map = AlgebraMap::identity(ring, space, graph.n_bounded_faces());
        let t_pow = |k: i32| {
            let mut e = vec![0; n + 1];
            e[n] = k;
            LaurentPoly::monomial(ring, space, 1, e)
        };
        for (e, b) in self.edge_powers(graph).into_iter().enumerate() {
            let mut exps = vec![0; n + 1];
            exps[e] = 1;
            exps[n] = b;
            map.vars[e] = LaurentPoly::monomial(ring, space, 1, exps);
        }
        for (j, c) in self.face_powers().into_iter().enumerate() {
            map.faces[j] = AlgebraElement::term(t_pow(c), vec![Gen::F(j)]);
        }
        map.y = AlgebraElement::term(t_pow(self.y_power()), vec![Gen::Y]);
        map
    }
}

/// Applies the action to an element over `Λ_G[t^{±1}]` (elements without `t` are extended).
pub fn apply_lattice_action(
    graph: &CubicPlanarGraph,
    action: &LatticeAction,
    elt: &AlgebraElement,
) -> Result<AlgebraElement, InvariantError> {
    require_bridgeless(graph)?;
    let map = action.to_map(graph, elt.ring());
    Ok(map.apply(&elt.extend_t())?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub results: Vec<(String, CommutationReport)>,
}

impl ActionReport {
    pub fn holds(&self) -> bool {
        self.results.iter().all(|(_, r)| r.holds())
    }
}

/// Checks `∂ ∘ φ = φ ∘ ∂` on every generator for each of the `g+3` lattice generators.
pub fn verify_action_commutes(graph: &CubicPlanarGraph, garden: &Garden) -> Result<ActionReport, InvariantError> {
    require_bridgeless(graph)?;
    let table = crate::binseq::differential(graph, garden)?.extend_t();
    let mut results = Vec::new();
    for action in LatticeAction::generators(graph) {
        let map = action.to_map(graph, &table.ring);
        results.push((action.name(), verify_commutation(&map, &table, &table)?));
    }
    Ok(ActionReport { results })
}

/// Checks that the lattice generators pairwise commute as algebra maps.
pub fn generators_commute(graph: &CubicPlanarGraph) -> Result<bool, InvariantError> {
    let maps: Vec<AlgebraMap> = LatticeAction::generators(graph).iter().map(|a| a.to_map(graph, &Ring::Integers)).collect();
    for (i, a) in maps.iter().enumerate() {
        for b in &maps[i + 1..] {
            if a.compose(b)? != b.compose(a)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of checking `φ(H(B)) = t^k H(B)` for every binary sequence of a garden.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SequenceActionReport {
    pub sequences: usize,
    pub failures: Vec<String>,
}

impl SequenceActionReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every tine and every sequence in `ℬ_{a,b}`: `φ₀(H(B)) = t^{b−a−1} H(B)`,
/// `φ_f(H(B)) = t^{-2} H(B)` for the tine's own face and `H(B)` for the others.
pub fn check_sequence_action(graph: &CubicPlanarGraph, garden: &Garden) -> Result<SequenceActionReport, InvariantError> {
    require_bridgeless(graph)?;
    let ring = Ring::Integers;
    let n = graph.n_edges();
    let space = Space::new(n);
    let ctx = WeightContext::new(graph, garden, SignConvention::Calibrated);
    let maps: Vec<AlgebraMap> = LatticeAction::generators(graph).iter().map(|a| a.to_map(graph, &ring)).collect();
    let mut report = SequenceActionReport::default();
    for j in 0..graph.n_bounded_faces() {
        let events = garden.tine(j);
        for (a, b) in [(1u8, 1u8), (1, 0), (0, 1), (0, 0)] {
            for seq in enumerate_binary_sequences(events, a, b) {
                report.sequences += 1;
                let h = ctx.sequence_weight(events, &seq).to_poly(&ring, space).extend_t();
                for (i, map) in maps.iter().enumerate() {
                    let k = match i {
                        0 => b as i32 - a as i32 - 1,
                        _ if i == j + 1 => -2,
                        _ => 0,
                    };
                    let mut texp = vec![0; n + 1];
                    texp[n] = k;
                    let expected = &LaurentPoly::monomial(&ring, space.with_t(), 1, texp) * &h;
                    if map.apply_poly(&h)? != expected {
                        report.failures.push(format!("f{} B{}{} {}: generator {}", j + 1, a, b, seq_text(&seq.values), i));
                    }
                }
            }
        }
    }
    Ok(report)
}

fn seq_text(values: &[u8]) -> String {
    values.iter().map(|v| char::from(b'0' + v)).collect()
}

/// The matrices relating the lattice action to a spanning basis.
///
/// Rows of `a` and `a_t` are indexed by non-tree and tree edges; column 0 is all ones and
/// column `j+1` is adjacency to bounded face `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisMatrices {
    pub non_tree: Vec<usize>,
    pub tree: Vec<usize>,
    pub a: Vec<Vec<i64>>,
    pub a_t: Vec<Vec<i64>>,
    pub a_f: Vec<Vec<i64>>,
    pub det: i64,
    pub a_inv: Vec<Vec<i64>>,
    /// `−(A; A_T) A⁻¹`, rows in the order `non_tree` then `tree`.
    pub b: Vec<Vec<i64>>,
    /// `−A_F A⁻¹`.
    pub mu: Vec<Vec<i64>>,
    /// First row of `A⁻¹`.
    pub eta: Vec<i64>,
}

impl BasisMatrices {
    /// Row of `B` for edge `e`.
    pub fn b_row(&self, e: usize) -> &[i64] {
        match self.non_tree.iter().position(|&x| x == e) {
            Some(i) => &self.b[i],
            None => &self.b[self.non_tree.len() + self.tree.iter().position(|&x| x == e).expect("edge in basis")],
        }
    }

    /// The top `g+3` rows of `B` are `−Id`.
    pub fn top_block_is_minus_identity(&self) -> bool {
        let m = self.non_tree.len();
        (0..m).all(|i| (0..m).all(|j| self.b[i][j] == if i == j { -1 } else { 0 }))
    }
}

/// Determinant and inverse by exact rational Gauss–Jordan elimination.
pub fn det_and_inverse(m: &[Vec<i64>]) -> Option<(Q, Vec<Vec<Q>>)> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
    let mut inv: Vec<Vec<Q>> = (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    let mut det = Q::one();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        if piv != col {
            a.swap(col, piv);
            inv.swap(col, piv);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for c in 0..n {
            a[col][c] /= &p;
            inv[col][c] /= &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..n {
                    let (x, y) = (&f * &a[col][c], &f * &inv[col][c]);
                    a[r][c] -= x;
                    inv[r][c] -= y;
                }
            }
        }
    }
    Some((det, inv))
}

fn to_int(q: &Q) -> Option<i64> {
    q.is_integer().then(|| q.to_integer().to_i64()).flatten()
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter().map(|r| (0..cols).map(|c| (0..inner).map(|k| r[k] * b[k][c]).sum()).collect()).collect()
}

/// Builds `A`, `A_T`, `A_F`, `B`, `μ` and `η` for a spanning basis.
pub fn basis_matrices(graph: &CubicPlanarGraph, basis: &SpanningBasis) -> Result<BasisMatrices, InvariantError> {
    require_bridgeless(graph)?;
    let nf = graph.n_bounded_faces();
    let row = |e: usize| -> Vec<i64> {
        let mut r = vec![1];
        r.extend((0..nf).map(|f| i64::from(on_face(graph, e, f))));
        r
    };
    let non_tree = basis.non_tree_edges(graph);
    let tree = basis.tree_edges.clone();
    let a: Vec<Vec<i64>> = non_tree.iter().map(|&e| row(e)).collect();
    let a_t: Vec<Vec<i64>> = tree.iter().map(|&e| row(e)).collect();
    let a_f: Vec<Vec<i64>> = (0..nf)
        .map(|j| {
            let mut r = vec![1];
            r.extend((0..nf).map(|f| if f == j { 2 } else { 0 }));
            r
        })
        .collect();
    let (det_q, inv_q) = det_and_inverse(&a).ok_or(InvariantError::SingularA)?;
    let det = to_int(&det_q).ok_or(InvariantError::NonIntegralInverse)?;
    let a_inv: Vec<Vec<i64>> = inv_q
        .iter()
        .map(|r| r.iter().map(to_int).collect::<Option<Vec<i64>>>())
        .collect::<Option<_>>()
        .ok_or(InvariantError::NonIntegralInverse)?;
    let mut stacked = a.clone();
    stacked.extend(a_t.iter().cloned());
    let neg = |m: Vec<Vec<i64>>| -> Vec<Vec<i64>> { m.into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect() };
    let b = neg(mat_mul(&stacked, &a_inv));
    let mu = neg(mat_mul(&a_f, &a_inv));
    let eta = a_inv[0].clone();
    Ok(BasisMatrices { non_tree, tree, a, a_t, a_f, det, a_inv, b, mu, eta })
}

/// Sets every non-tree edge to 1 in every image.
pub fn tversal_table(graph: &CubicPlanarGraph, table: &DifferentialTable, basis: &SpanningBasis) -> DifferentialTable {
    let nt = basis.non_tree_edges(graph);
    table.map_polys(|p| p.set_vars_to_one(&nt))
}

/// `λ'_k = λ_k ∏_r λ_{r}^{b_{kr}}` over the non-tree edges `r`.
pub fn projection_pi(mats: &BasisMatrices, field: &FiniteField, lambda: &[u32]) -> Vec<u32> {
    (0..lambda.len())
        .map(|k| {
            mats.non_tree.iter().zip(mats.b_row(k)).fold(lambda[k], |acc, (&r, &b)| {
                field.mul(acc, field.pow(lambda[r], b).expect("nonzero edge value"))
            })
        })
        .collect()
}

/// Exponent vectors (over all edges) of the invariant generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantGenerators {
    /// `(k, exps)` with `ê_k = ∏ e^{exps}` for each tree edge `k`.
    pub edges: Vec<(usize, Vec<i32>)>,
    /// `f̂_j = f_j ∏ e^{exps}`.
    pub faces: Vec<Vec<i32>>,
    /// `ŷ = y ∏ e^{exps}`.
    pub y: Vec<i32>,
}

pub fn invariant_generators(graph: &CubicPlanarGraph, mats: &BasisMatrices) -> InvariantGenerators {
    let n = graph.n_edges();
    let over_non_tree = |coeffs: &[i64], base: Option<usize>| {
        let mut exps = vec![0i32; n];
        if let Some(k) = base {
            exps[k] += 1;
        }
        for (&r, &c) in mats.non_tree.iter().zip(coeffs) {
            exps[r] += c as i32;
        }
        exps
    };
    InvariantGenerators {
        edges: mats.tree.iter().map(|&k| (k, over_non_tree(mats.b_row(k), Some(k)))).collect(),
        faces: mats.mu.iter().map(|r| over_non_tree(r, None)).collect(),
        y: over_non_tree(&mats.eta, None),
    }
}

impl InvariantGenerators {
    /// The generators as algebra elements over `Λ_G[t^{±1}]`, with `x` and `z`.
    pub fn elements(&self, ring: &Ring, n_edges: usize) -> Vec<(String, AlgebraElement)> {
        let space = Space::new(n_edges).with_t();
        let mono = |exps: &[i32]| {
            let mut e = exps.to_vec();
            e.push(0);
            LaurentPoly::monomial(ring, space, 1, e)
        };
        let mut out = Vec::new();
        for (k, exps) in &self.edges {
            out.push((format!("e{}^", k + 1), AlgebraElement::scalar(mono(exps))));
        }
        for (j, exps) in self.faces.iter().enumerate() {
            out.push((format!("f{}^", j + 1), AlgebraElement::term(mono(exps), vec![Gen::F(j)])));
        }
        out.push(("x^".into(), AlgebraElement::gen(ring, space, Gen::X)));
        out.push(("y^".into(), AlgebraElement::term(mono(&self.y), vec![Gen::Y])));
        out.push(("z^".into(), AlgebraElement::gen(ring, space, Gen::Z)));
        out
    }
}

/// Names of invariant generators moved by some lattice generator (empty when all are fixed).
pub fn verify_invariant_generators(graph: &CubicPlanarGraph, gens: &InvariantGenerators) -> Result<Vec<String>, InvariantError> {
    let ring = Ring::Integers;
    let mut moved = Vec::new();
    for action in LatticeAction::generators(graph) {
        let map = action.to_map(graph, &ring);
        for (name, elt) in gens.elements(&ring, graph.n_edges()) {
            if map.apply(&elt)? != elt {
                moved.push(format!("{} moves {}", action.name(), name));
            }
        }
    }
    Ok(moved)
}

/// Random spanning basis: random root, random spanning tree of the rest (random edge order Kruskal).
pub fn random_basis<R: rand::Rng>(graph: &CubicPlanarGraph, rng: &mut R) -> Option<SpanningBasis> {
    use rand::seq::SliceRandom;
    let root = rng.gen_range(0..graph.n_vertices());
    let mut edges: Vec<usize> = (0..graph.n_edges()).collect();
    edges.shuffle(rng);
    let mut uf: Vec<usize> = (0..graph.n_vertices()).collect();
    fn find(uf: &mut [usize], mut a: usize) -> usize {
        while uf[a] != a {
            uf[a] = uf[uf[a]];
            a = uf[a];
        }
        a
    }
    let mut tree = Vec::new();
    for e in edges {
        let (u, v) = graph.edge_endpoints(e);
        if u == root || v == root {
            continue;
        }
        let (a, b) = (find(&mut uf, u), find(&mut uf, v));
        if a != b {
            uf[a] = b;
            tree.push(e);
        }
    }
    SpanningBasis::from_edges(graph, root, &tree).ok()
}

/// `|det A|` as a plain integer, for reports.
pub fn abs_det(mats: &BasisMatrices) -> i64 {
    Q::from_integer(mats.det.into()).abs().to_integer().to_i64().unwrap_or(i64::MAX)
}
