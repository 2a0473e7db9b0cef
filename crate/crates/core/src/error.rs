use thiserror::Error;

use crate::graph::VertexRef;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters P({n},{m}): need n >= 3 and 1 <= m <= {max_m}", max_m = n.saturating_sub(1) / 2)]
    InvalidParams { n: usize, m: usize },

    #[error("subscript {subscript} out of range 1..={n}")]
    SubscriptOutOfRange { subscript: i64, n: usize },

    #[error("n = {n} is outside the closed-form domain: {reason}")]
    OutsideFormulaDomain { n: usize, reason: String },

    #[error("{0} is on the inner cycle; good/bad vertices are defined for outer targets only")]
    InnerTarget(VertexRef),

    #[error("operation requires P(n,3), got P({n},{m})")]
    RequiresStepThree { n: usize, m: usize },

    #[error("landmark set must be nonempty")]
    EmptyLandmarks,

    #[error("duplicate landmark {0}")]
    DuplicateLandmark(VertexRef),

    #[error("vertex {vertex} does not belong to a graph with n = {n}")]
    ForeignVertex { vertex: VertexRef, n: usize },

    #[error("subset size {size} exceeds vertex count {vertices}")]
    SizeTooLarge { size: usize, vertices: usize },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
