//! Chromatic polynomials of mixed 2-edge-coloured graphs.
//!
//! A mixed 2-edge-coloured graph has red, blue and flexible edges. Its
//! `k`-colourings are proper vertex colourings in which no pair of colour
//! classes is joined by both a red and a blue edge; counting them gives a
//! monic integer polynomial in `k`. This crate computes that polynomial
//! three independent ways, audits structural formulas for its leading
//! coefficients, classifies when colouring the edges leaves the polynomial
//! unchanged, builds special families with closed forms, and locates
//! polynomial roots.

pub mod canon;
pub mod chromatic;
pub mod enumeration;
pub mod families;
pub mod format;
pub mod graph;
pub mod invariance;
pub mod partitions;
pub mod poly;
pub mod roots;
pub mod verify;

pub use chromatic::{
    audit_coefficients, chromatic_number, classical_chromatic, coeff_formula_second,
    coeff_formula_third, count_colourings, poly_interpolated, poly_partition, poly_recursive,
    CoefficientAudit, EngineError,
};
pub use enumeration::{root_cloud, EnumError, EnumerationRecord, Universe};
pub use families::{FamilyError, FamilySpec};
pub use format::{parse_graph6, parse_meg, to_graph6, write_meg, ParseError};
pub use graph::{EdgeKind, GraphError, MixedGraph, SimpleGraph, StructuralCensus};
pub use invariance::{
    admits_invariant_colouring, construct_join_colouring, is_invariant_structural, InvarianceError,
    InvarianceReport, Witness,
};
pub use poly::{IntPolynomial, PolyError};
pub use roots::{find_roots, RootError, RootSet};
pub use verify::{CriterionOutcome, Verifier};
