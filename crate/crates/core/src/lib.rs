//! Generalized Petersen graphs `P(n,m)`: distance tables, closed-form
//! distances for `P(n,3)`, good/bad vertex recognition, and exact
//! metric-dimension search.
//!
//! Subscripts are 1-based everywhere in the public API.

pub mod closed_form;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod recognition;
pub mod resolving;
pub mod subscript;

pub use closed_form::{
    best_oracle, closed_form_distance, verify_formulas, verify_formulas_for, ClosedForm, Domain, FormulaCheck,
    FormulaMismatch, Residue, ResidueClass,
};
pub use error::{Error, Result};
pub use graph::{build_graph, GPInstance, GPParams, Ring, VertexRef};
pub use oracle::{bfs_all_pairs, bfs_oracle, DistanceOracle, Provenance};
pub use resolving::{
    exhaust_size, is_resolving, metric_dimension, representation, DimensionResult, LandmarkSet, MetricRepresentation,
    Resolution, SearchOptions, SearchVerdict,
};
pub use subscript::SubscriptExpr;
