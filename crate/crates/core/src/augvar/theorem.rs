//! `χ_{G*}(q+1) = (q³ − q)·|Aug|`, both sides computed independently.

use std::fmt;

use serde::Serialize;

use crate::augvar::chromatic::chromatic_polynomial;
use crate::augvar::enumerate_augmentations;
use crate::field::FiniteField;
use crate::garden::{Garden, GardenError};
use crate::graph_core::{CubicPlanarGraph, SpanningBasis};
use crate::invariant::tversal_table;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub q: u32,
    pub chromatic_value: i128,
    pub pgl2_order: i128,
    pub augmentations: usize,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.chromatic_value == self.pgl2_order * self.augmentations as i128
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.holds() { "=" } else { "!=" };
        write!(f, "{} {} {} × {}", self.chromatic_value, rel, self.pgl2_order, self.augmentations)
    }
}

pub fn verify_chromatic_theorem(
    graph: &CubicPlanarGraph,
    garden: &Garden,
    basis: &SpanningBasis,
    field: &FiniteField,
) -> Result<TheoremReport, GardenError> {
    let table = crate::binseq::differential(graph, garden)?;
    let augs = enumerate_augmentations(&tversal_table(graph, &table, basis), basis, field);
    let dual = graph.dual_graph();
    let q = field.order();
    let chi = chromatic_polynomial(dual.n_vertices, &dual.edges);
    let qi = q as i128;
    Ok(TheoremReport { q, chromatic_value: chi.eval(q as i64 + 1), pgl2_order: qi * qi * qi - qi, augmentations: augs.len() })
}
