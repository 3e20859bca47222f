use thiserror::Error;

/// Crate-wide error type.
///
/// The distinction between variants matters to the CLI, which maps them onto
/// exit codes: schema/input problems, verification failures, and exceeded
/// search caps are reported differently.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (bad parameters, loops, wrong graph).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A drawing violates the validity rules (coincident vertices, an edge
    /// through a vertex, collinear overlap, tangency).
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),

    /// A claimed property failed to re-verify; the message names the first
    /// counterexample found.
    #[error("verification failed: {0}")]
    Verification(String),

    /// An exhaustive search was asked to exceed its configured cap.
    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    /// A construction that is guaranteed by proof failed at runtime. Seeing
    /// this error means the implementation (or the proof) is wrong, so the
    /// message carries diagnostic state.
    #[error("construction failed: {0}")]
    Construction(String),

    /// JSON artifact does not match any known schema.
    #[error("schema error: {0}")]
    Schema(String),
}
