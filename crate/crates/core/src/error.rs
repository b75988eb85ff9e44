use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Dynkin type {0}")]
    InvalidType(String),

    #[error("vertex {vertex} out of range for rank {rank}")]
    VertexOutOfRange { vertex: usize, rank: usize },

    #[error("pair not exchangeable: orbit set has {0} elements")]
    NotExchangeable(usize),

    #[error("sign reduction did not reach a negative simple root")]
    SignReduction,

    #[error("cluster roots do not form a basis of the root lattice")]
    NotABasis,

    #[error("exchange matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("not finite type: entry {entry} at ({row}, {col})")]
    NotFiniteType { row: usize, col: usize, entry: i32 },

    #[error("not finite type or cap too low: class exceeded {0} quivers")]
    ClassCapExceeded(usize),

    #[error("arrow {from}->{to} has {count} shortest paths")]
    TooManyShortestPaths { from: usize, to: usize, count: usize },

    #[error("non-exact Laurent division")]
    NonExactDivision,

    #[error("exchange graph exceeded {0} clusters; raise the cap or pass --allow-large")]
    AtlasCapExceeded(usize),

    #[error("{0} needs an explicit large-atlas opt-in")]
    LargeType(String),

    #[error("Laurent property violated by {0}")]
    LaurentViolation(String),

    #[error("denominator vectors do not biject onto almost positive roots: {0}")]
    RootBijection(String),

    #[error("exchange graph inconsistency: {0}")]
    SeedMismatch(String),

    #[error("denominator vector {0:?} is not a positive root")]
    NotARoot(Vec<i32>),

    #[error("{0} is not a positive root")]
    NotPositiveRoot(String),

    #[error("negative Ext dimension between {0} and {1}")]
    NegativeExt(String, String),

    #[error("hom bound violated: dim Hom({0}, {1}) = {2}")]
    HomBound(String, String, usize),

    #[error("not a tilting object: Ext({0}, {1}) != 0")]
    NotTilting(String, String),

    #[error("expected two complements, found {0}")]
    ComplementCount(usize),

    #[error("derived category invariant violated: {0}")]
    Derived(String),

    #[error("unknown check {0}")]
    UnknownCheck(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
