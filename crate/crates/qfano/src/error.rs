use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// The input does not describe a Fano complete intersection the
    /// library accepts (r < 3, a degree below 2, non-Fano, …).
    #[error("invalid space: {0}")]
    InvalidSpace(String),

    /// A Tevelev query with no defined degree (stability or
    /// divisibility failure).
    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    /// Ring elements from different contexts, or an operation that
    /// requires the other basis / the borderline case.
    #[error("basis mismatch: {0}")]
    BasisMismatch(String),

    /// A descendant was requested above the table's curve-degree bound.
    #[error("curve degree {requested} exceeds the table bound {bound}")]
    CurveDegreeBound { requested: u32, bound: u32 },

    #[error("cache error: {0}")]
    Cache(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
