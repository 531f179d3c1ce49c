use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// A closed-form theorem was asked to treat a non-regular graph as `G1`.
    #[error("graph is not regular: degrees range from {min} to {max}")]
    NonRegular { min: usize, max: usize },

    /// The eigensolver contract requires a symmetric input.
    #[error("matrix is not symmetric: max asymmetry {0:.3e}")]
    NonSymmetric(f64),

    /// A coronal evaluation point sits on (or too close to) a pole.
    #[error("evaluation point {x} is within {dist:.3e} of an eigenvalue")]
    NearSingular { x: f64, dist: f64 },

    /// Checked polynomial division left a remainder that is too large; this
    /// signals a theorem-assembly bug or an invalid input, never noise.
    #[error("polynomial division left remainder of magnitude {residual:.3e} (tolerance {tolerance:.3e})")]
    InexactDivision { residual: f64, tolerance: f64 },

    /// A factor that must be real-rooted produced a genuinely complex root.
    #[error("factor expected to be real-rooted has root {re} + {im}i")]
    ComplexRootsUnexpected { re: f64, im: f64 },

    /// Operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,

    /// A cospectral-construction corollary was invoked outside its hypotheses.
    #[error("cospectral hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// Seed data claimed to be cospectral is not.
    #[error("spectra differ: residual {residual:.3e} exceeds tolerance {tolerance:.3e}")]
    SpectraDiffer { residual: f64, tolerance: f64 },

    /// The exact isomorphism search is bounded to desk-scale graphs.
    #[error("graph too large for isomorphism search: {n} vertices (limit {limit})")]
    TooLarge { n: usize, limit: usize },

    /// A generator or operation rejected its parameters.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Malformed graph data (programmatic or parsed from JSON / edge lists).
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T> = std::result::Result<T, Error>;
