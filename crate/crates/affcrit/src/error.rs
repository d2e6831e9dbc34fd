use thiserror::Error;

/// Errors raised by precondition checks across the crate.
///
/// Every message names the violated precondition so that callers (in
/// particular the CLI) can surface a one-line diagnostic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: String,
    },

    #[error("precondition violated: reflections exist only for real roots, got an imaginary root")]
    ImaginaryReflection,

    #[error(
        "precondition violated: {op} requires a critical-level weight (level must be {expected})"
    )]
    NotCritical { op: &'static str, expected: String },

    #[error("precondition violated: the weight is not a member of the window")]
    WeightNotInWindow,

    #[error("precondition violated: depth {depth} exceeds the safety cap {cap}")]
    DepthExceedsCap { depth: u32, cap: u32 },

    #[error("precondition violated: window must have at least one ceiling")]
    EmptyWindow,

    #[error("precondition violated: window ceilings must all share one level")]
    MixedCeilingLevels,

    #[error("precondition violated: {coords:?} is not a positive root of this system")]
    NotAPositiveRoot { coords: Vec<i64> },

    #[error("precondition violated: the dot reflection fixes this weight")]
    DotFixedPoint,

    #[error(
        "precondition violated: <lambda+rho, alpha_vee> = {value} is not an integer, \
         so neither dot image is comparable to the weight"
    )]
    NonIntegralReflection { value: String },

    #[error(
        "precondition violated: the class is neither generic nor subgeneric \
         (finite orbit size {orbit_size}); no flag structure is available"
    )]
    HigherClass { orbit_size: usize },

    #[error(
        "precondition violated: series of length {len} is shorter than the character depth {depth}"
    )]
    SeriesTooShort { len: usize, depth: u32 },

    #[error("precondition violated: the difference is not a nonnegative integer combination of simple affine roots")]
    NotDecomposable,

    #[error("precondition violated: height {height} exceeds the requested depth {depth}")]
    HeightExceedsDepth { height: i64, depth: u32 },

    #[error("orbit enumeration exceeded the safety cap of {cap} elements")]
    OrbitTooLarge { cap: usize },

    #[error("internal inconsistency: {0}")]
    Internal(String),
}
