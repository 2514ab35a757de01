//! Exponential graphs G^H: construction, routing, diameter and connectivity
//! analysis, and Hamiltonian certificates, together with the base families
//! (de Bruijn, Kautz, hypercubes, Möbius cubes) they are compared against.

pub mod connectivity;
pub mod error;
pub mod expo;
pub mod generators;
pub mod graph;
pub mod ham_search;
pub mod hamiltonicity;
pub mod iterated;
pub mod metrics;

pub use error::{Error, Result};
pub use expo::{Budget, ExpoEdgeKind, ExpoSpace};
pub use graph::{Graph, Host, StepKind, WalkSpec};
pub use hamiltonicity::{CistPair, HamCycleCert};
