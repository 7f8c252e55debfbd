//! Binary-sequence differential graded algebras of cubic planar graphs.
//!
//! The crate builds the algebra of a garden on a cubic planar graph, checks that its
//! differential squares to zero, relates gardens by explicit isomorphisms, and studies
//! the augmentation variety through its correspondence with colorings of the dual graph.

pub mod augvar;
pub mod binseq;
pub mod field;
pub mod fixtures;
pub mod garden;
pub mod graph_core;
pub mod invariant;
pub mod moves;
pub mod run;
pub mod symbolic;
