//! Conley-index normal forms, exit-set combinatorics, suspension and duality,
//! with an integer homology engine to check them.

mod descriptor;
mod exit_set;
mod homology;
mod maps;
mod rep;

pub use descriptor::{descriptor_homology, spanier_whitehead_dual, suspend, ConleyDescriptor, Removed};
pub use exit_set::{exit_set_descriptor, pin_exit_set_descriptor, window_loci, ExitSet};
pub use homology::{homology, ChainComplex, GradedHom, HomGroup, IntMatrix};
pub use maps::{attractor_map, MapDescriptor, MapKind};
pub use rep::{Group, VirtualRep};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConleyError {
    #[error("malformed complex or descriptor: {0}")]
    Structure(String),
    #[error("virtual suspension by {0} cannot be applied to a space; pair it with a dual or keep it as a formal shift")]
    VirtualSuspension(String),
    #[error("no supported Spanier-Whitehead dual for {0}")]
    UnsupportedDual(String),
    #[error("incompatible normal forms: {0}")]
    IncompatibleForms(String),
    #[error("exit set precondition violated: {0}")]
    Precondition(String),
}
