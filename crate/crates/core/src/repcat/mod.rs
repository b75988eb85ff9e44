//! Modules over the alternating quiver, the bounded derived category and the
//! cluster category built from them.

pub mod category;
pub mod derived;
pub mod mesh;
pub mod representation;

pub use category::{span_rank, CMorphism, ClusterCategory, HomEntry};
pub use derived::{CObject, DObject, DerivedLedger};
pub use representation::{euler_form, tau_inverse, Intertwiner, ModuleCategory, Representation};
