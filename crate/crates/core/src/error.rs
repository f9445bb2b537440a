use thiserror::Error;

/// Errors raised by the belief-revision engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a universe needs at least one world")]
    EmptyUniverse,
    #[error("universe has {0} worlds; at most {max} are supported", max = crate::world::MAX_WORLDS)]
    TooManyWorlds(usize),
    #[error("duplicate world label `{0}`")]
    DuplicateWorld(String),
    #[error("invalid world label `{0}`")]
    InvalidLabel(String),
    #[error("duplicate atom `{0}`")]
    DuplicateAtom(String),
    #[error("invalid atom name `{0}`")]
    InvalidAtom(String),
    #[error("world `{world}` has {found} truth values, expected {expected}")]
    ValuationArity {
        world: String,
        expected: usize,
        found: usize,
    },
    #[error("worlds `{0}` and `{1}` share the same valuation")]
    DuplicateValuation(String, String),
    #[error("unknown world `{0}`")]
    UnknownWorld(String),
    #[error("world index {index} is outside a universe of {width} worlds")]
    WorldOutOfRange { index: usize, width: usize },
    #[error("operands range over different universes ({left} vs {right} worlds)")]
    UniverseMismatch { left: usize, right: usize },
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("not normalized: minimum rank is {0}, expected 0")]
    NotNormalized(u64),
    #[error("the degree of the contradictory proposition is undefined")]
    EmptyProposition,
    #[error("epistemic inputs must be neither the contradiction nor the tautology")]
    DegenerateInput,
    #[error("preference needs two distinct worlds")]
    SameWorld,
    #[error("strength of belief must be at least 1 for a believe/disbelieve rule")]
    ZeroStrength,
    #[error("rank arithmetic overflowed")]
    Overflow,
    #[error("universe of {width} worlds exceeds the exhaustive bound of {bound}")]
    BoundExceeded { width: usize, bound: usize },
    #[error("universe of {width} worlds is too small; at least {min} needed")]
    UniverseTooSmall { width: usize, min: usize },
    #[error("revision table has no entry for a non-empty proposition")]
    PartialTable,
    #[error("witness was produced by rule `{expected}`, replay was given `{found}`")]
    RuleMismatch { expected: String, found: String },
    #[error("replaying a rule-based witness needs the rule")]
    MissingRule,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
