use thiserror::Error;

/// Every failure the library can report.
///
/// Non-genericity is not an error for the subdivision
/// routines: callers receive a verdict with a witness instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("distance table is not symmetric at ({0},{1})")]
    AsymmetricInput(usize, usize),
    #[error("distance table has a nonzero diagonal entry at node {0}")]
    NonzeroDiagonal(usize),
    #[error("unsupported point count {0}")]
    BadArity(usize),
    #[error("node {node} is out of range 1..={n}")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("subset of size {0} is too small (need at least 3 nodes)")]
    SubsetTooSmall(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("optimal solution is not unique (metric is probably not generic)")]
    NonUniqueOptimum,
    #[error("support graph violates the (b,1,...,1)-matching structure: {0}")]
    StructureViolation(String),
    #[error("enumeration threshold exceeded: n = {n} > {threshold}; use the traversal")]
    ThresholdExceeded { n: usize, threshold: usize },
    #[error("degenerate ridge pivot: {0}")]
    DegenerateRidge(String),
    #[error("seed is not a valid cell: {0}")]
    SeedInvalid(String),
    #[error("no seed cell found within {0} probes")]
    SeedSearchFailed(usize),
    #[error("subdivision is not a triangulation")]
    NotATriangulation,
    #[error("not supported: {0}")]
    NotSupported(String),
    #[error("metric is not generic: {0}")]
    NotGeneric(String),
    #[error("inapplicable premise: {0}")]
    InapplicablePremise(String),
    #[error("instance too large for the exhaustive oracle (n = {0})")]
    ScaleExceeded(usize),
    #[error("polyhedron is not simple at vertex {0}")]
    NonSimple(String),
    #[error("objective is degenerate on the vertex set")]
    DegenerateObjective,
    #[error("dual and primal pipelines disagree: {0}")]
    Mismatch(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("bound violated: {0}")]
    BoundViolated(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown {kind} `{name}`")]
    UnknownStrategy { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
