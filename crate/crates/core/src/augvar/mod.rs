//! Augmentations over finite fields, the chromatic polynomial of the dual graph, and the
//! correspondence between augmentations and face colorings by the projective line.

pub mod chromatic;
pub mod coloring;
pub mod mu;
pub mod theorem;

use thiserror::Error;

use crate::field::{FiniteField, Ring};
use crate::graph_core::SpanningBasis;
use crate::symbolic::{DifferentialTable, LaurentPoly};

pub use chromatic::{chromatic_polynomial, count_proper_colorings, ChromaticPoly};
pub use coloring::{
    aug_to_coloring, canonical_coloring, coloring_to_aug, count_pgl2_orbits, cross_ratio_value, enumerate_proper_colorings,
    pgl2_elements, Coloring, Mobius, P1,
};
pub use mu::{mu_from_aug, MuAssignment};
pub use theorem::{verify_chromatic_theorem, TheoremReport};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AugvarError {
    /// 1-based edge id.
    #[error("color propagation clashed at edge e{0}")]
    PropagationClash(usize),
    #[error("color propagation left some face uncolored")]
    Underdetermined,
    #[error("propagation depends on the edge order")]
    OrderDependent,
    /// Face names and a 1-based edge id.
    #[error("labelling is not a proper coloring ({0} and {1} share edge e{2})")]
    NotProper(String, String, usize),
    #[error("every point of the projective line is used; no Möbius chart is available")]
    NoFreeColor,
    #[error("the base vertex {0} does not see three distinct faces")]
    BadBaseVertex(usize),
    #[error("the ring is not a finite field")]
    NotAField,
}

/// An assignment of nonzero field elements to the edges.
pub type Augmentation = Vec<u32>;

/// A Laurent polynomial prepared for repeated evaluation over one field.
#[derive(Clone, Debug)]
pub struct CompiledPoly {
    terms: Vec<(u32, Vec<(usize, i64)>)>,
}

impl CompiledPoly {
    pub fn new(p: &LaurentPoly, field: &FiniteField) -> Self {
        let terms = p
            .terms()
            .map(|(exps, c)| {
                let coeff = match p.ring() {
                    Ring::Integers => field.from_int(c),
                    Ring::Field(_) => c as u32,
                };
                let vars = exps.iter().enumerate().filter(|(_, &a)| a != 0).map(|(i, &a)| (i, a as i64)).collect();
                (coeff, vars)
            })
            .filter(|(c, _)| *c != 0)
            .collect();
        CompiledPoly { terms }
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().flat_map(|(_, v)| v.iter().map(|&(i, _)| i))
    }

    /// Evaluates with all variables nonzero.
    pub fn eval(&self, field: &FiniteField, values: &[u32]) -> u32 {
        let mut acc = 0;
        for (c, vars) in &self.terms {
            let mut t = *c;
            for &(i, a) in vars {
                t = field.mul(t, field.pow(values[i], a).expect("unit value"));
            }
            acc = field.add(acc, t);
        }
        acc
    }
}

/// All points of `(F*)^n` with the `fixed` coordinates prescribed that annihilate every polynomial.
///
/// Depth-first over the free coordinates in increasing index order; each polynomial is
/// tested as soon as its last variable is assigned. Results come in lexicographic order.
pub fn solve_unit_equations(polys: &[LaurentPoly], fixed: &[Option<u32>], field: &FiniteField) -> Vec<Vec<u32>> {
    let n = fixed.len();
    let free: Vec<usize> = (0..n).filter(|&i| fixed[i].is_none()).collect();
    let mut depth_of = vec![0usize; n];
    for (d, &i) in free.iter().enumerate() {
        depth_of[i] = d + 1;
    }
    let mut checks: Vec<Vec<CompiledPoly>> = vec![Vec::new(); free.len() + 1];
    for p in polys {
        let c = CompiledPoly::new(p, field);
        let d = c.vars().map(|i| depth_of[i]).max().unwrap_or(0);
        checks[d].push(c);
    }
    let mut values: Vec<u32> = fixed.iter().map(|v| v.unwrap_or(1)).collect();
    if checks[0].iter().any(|c| c.eval(field, &values) != 0) {
        return Vec::new();
    }
    let units: Vec<u32> = field.units().collect();
    let mut out = Vec::new();
    fn rec(
        d: usize,
        free: &[usize],
        units: &[u32],
        checks: &[Vec<CompiledPoly>],
        field: &FiniteField,
        values: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if d == free.len() {
            out.push(values.clone());
            return;
        }
        for &u in units {
            values[free[d]] = u;
            if checks[d + 1].iter().all(|c| c.eval(field, values) == 0) {
                rec(d + 1, free, units, checks, field, values, out);
            }
        }
    }
    rec(0, &free, &units, &checks, field, &mut values, &mut out);
    out
}

/// T-versal augmentations: non-tree edges are 1, tree edges range over `F*`.
pub fn enumerate_augmentations(table: &DifferentialTable, basis: &SpanningBasis, field: &FiniteField) -> Vec<Augmentation> {
    let fixed: Vec<Option<u32>> = (0..table.space.n_edges).map(|e| if basis.contains(e) { None } else { Some(1) }).collect();
    solve_unit_equations(&table.df, &fixed, field)
}

/// Augmentations of the full algebra: every edge ranges over `F*`.
pub fn enumerate_full_augmentations(table: &DifferentialTable, field: &FiniteField) -> Vec<Augmentation> {
    solve_unit_equations(&table.df, &vec![None; table.space.n_edges], field)
}

/// Evaluates a polynomial at an augmentation.
pub fn eval_at(p: &LaurentPoly, field: &FiniteField, lambda: &[u32]) -> u32 {
    CompiledPoly::new(p, field).eval(field, lambda)
}
