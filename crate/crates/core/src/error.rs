use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick exit codes and HTTP statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// The input is well-formed but the answer is negative (not graphic, not factorable).
    Domain,
    /// Parameters fall outside the domain an operation accepts.
    Parameter,
    /// An internal invariant was violated. Always a bug.
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree sequence is empty")]
    EmptySequence,
    #[error("degree sequence is not nonincreasing at position {position}")]
    NotNonincreasing { position: usize },
    #[error("degree sequence contains a zero entry at position {position}")]
    ZeroDegree { position: usize },
    #[error("invalid bounds a={a}, b={b}: need a >= b > 0")]
    InvalidBounds { a: u64, b: u64 },
    #[error("connected length bound needs a - b < 2, got a={a}, b={b}")]
    ConnectedBoundUnavailable { a: u64, b: u64 },
    #[error("cannot subtract k={k}: smallest degree is {min_degree}")]
    KTooLarge { k: usize, min_degree: usize },
    #[error("invalid generation parameters: {0}")]
    InvalidGenerationParams(String),
    #[error("no sequence found after {attempts} attempts")]
    RetriesExhausted { attempts: u32 },
    #[error("no value in [{b}, {a}] fixes the degree-sum parity")]
    ParityUnfixable { a: u64, b: u64 },
    #[error("d - {k} stayed non-graphic after {attempts} attempts")]
    KFactorabilityFailed { k: usize, attempts: u32 },
    #[error("no middle degree in [{low}, {high}] gives an even degree sum")]
    NoValidX { low: usize, high: usize },
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("invalid packing parameters: {0}")]
    InvalidPackingParams(String),
    #[error("degree sequence is not graphic")]
    NotGraphic,
    #[error("no {r}-regular graph on {n} vertices")]
    InfeasibleRegular { n: usize, r: usize },
    #[error("could not pack a perfect matching edge-disjoint from the 2-regular graph")]
    PackingFailed,
    #[error("sequence is not {k}-factorable")]
    NotFactorable { k: usize },
    #[error("no switch found for shared edge {{{u}, {v}}}")]
    SwitchNotFound { u: usize, v: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid switch: {0}")]
    InvalidSwitch(String),
    #[error("vertex count mismatch: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },
    #[error("switch did not reduce shared edges ({before} -> {after})")]
    NoProgress { before: usize, after: usize },
    #[error("inconsistent report: {0}")]
    InconsistentReport(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            NotGraphic | NotFactorable { .. } => ErrorKind::Domain,
            SwitchNotFound { .. } | NoProgress { .. } | InconsistentReport(_) => {
                ErrorKind::Internal
            }
            _ => ErrorKind::Parameter,
        }
    }

    /// Stable machine-readable code, used in JSON error envelopes.
    pub fn code(&self) -> &'static str {
        use Error::*;
        match self {
            EmptySequence => "empty_sequence",
            NotNonincreasing { .. } => "not_nonincreasing",
            ZeroDegree { .. } => "zero_degree",
            InvalidBounds { .. } => "invalid_bounds",
            ConnectedBoundUnavailable { .. } => "connected_bound_unavailable",
            KTooLarge { .. } => "k_too_large",
            InvalidGenerationParams(_) => "invalid_generation_params",
            RetriesExhausted { .. } => "retries_exhausted",
            ParityUnfixable { .. } => "parity_unfixable",
            KFactorabilityFailed { .. } => "k_factorability_failed",
            NoValidX { .. } => "no_valid_x",
            InvalidFamilyParams(_) => "invalid_family_params",
            InvalidPackingParams(_) => "invalid_packing_params",
            NotGraphic => "not_graphic",
            InfeasibleRegular { .. } => "infeasible_regular",
            PackingFailed => "packing_failed",
            NotFactorable { .. } => "not_factorable",
            SwitchNotFound { .. } => "switch_not_found",
            InvalidGraph(_) => "invalid_graph",
            InvalidSwitch(_) => "invalid_switch",
            VertexCountMismatch { .. } => "vertex_count_mismatch",
            NoProgress { .. } => "no_progress",
            InconsistentReport(_) => "inconsistent_report",
        }
    }
}
