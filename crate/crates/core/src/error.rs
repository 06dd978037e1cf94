use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width mismatch: expected {expected}, found {found}")]
    WidthMismatch { expected: usize, found: usize },

    #[error("{what} is {size}, above the configured cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("element {element} is outside the ground set 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },

    #[error("member {contained:?} is contained in member {container:?}")]
    NotAntichain { contained: Vec<usize>, container: Vec<usize> },

    #[error("element {0} is both deleted and contracted")]
    MinorOverlap(usize),

    #[error("the clutter has the empty set as a member")]
    EmptyMember,

    #[error("member {0:?} has fewer than two elements")]
    SmallMember(Vec<usize>),

    #[error("covering number is {found}, need {need}")]
    CoveringNumber { found: String, need: &'static str },

    #[error("the clutter is not tangled")]
    NotTangled,

    #[error("the clutter is not binary")]
    NotBinary,

    #[error("the clutter is not ideal")]
    NotIdeal,

    #[error("idealness of a clutter on {n} elements cannot be verified (cap {cap}); pass the assume-ideal flag")]
    IdealnessUnverified { n: usize, cap: usize },

    #[error("linear program is infeasible")]
    Infeasible,

    #[error("linear program is unbounded")]
    Unbounded,

    #[error("inconsistent linear program: {0}")]
    BadProblem(String),

    #[error("invalid fractional packing: {0}")]
    InvalidPacking(String),

    #[error("packing value {0} is not above one")]
    PackingValueTooSmall(String),

    #[error("the point set is empty")]
    EmptySet,

    #[error("points agree on coordinate {coordinate} (value {value})")]
    AgreedCoordinate { coordinate: usize, value: bool },

    #[error("not a valid 1-, 2- or Y-sum: {0}")]
    InvalidSum(String),

    #[error("invalid cycle cover: {0}")]
    InvalidCover(String),

    #[error("edge {edge} is a bridge")]
    Bridge { edge: usize },

    #[error("no 3-cycle cover exists")]
    NoThreeCycleCover,

    #[error("the matroid is not simple")]
    NotSimple,

    #[error("{what} must lie in {min}..={max}, got {value}")]
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },

    #[error("unknown element {0}")]
    UnknownElement(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal check failed: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
