//! Seeds, exact Laurent cluster variables and the exchange graph.

pub mod atlas;
pub mod laurent;
pub mod seed;

pub use atlas::{
    explore, Atlas, AtlasJson, ClusterJson, ClusterRecord, ExchangeEdge, ExploreOptions,
    VariableJson, DEFAULT_ATLAS_CAP,
};
pub use laurent::LaurentPolynomial;
pub use seed::{alternating_quiver, initial_seed, mutate_seed, ExchangeMonomials, Seed};
