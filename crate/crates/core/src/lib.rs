pub mod cli;
pub mod cluster_algebra;
pub mod error;
pub mod linalg;
pub mod quiver;
pub mod repcat;
pub mod root_system;
pub mod tilting;

pub use error::{Error, Result};
