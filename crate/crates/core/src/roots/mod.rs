//! Finite root systems, almost positive roots, the involutions `tau_+` and
//! `tau_-`, and the cluster complex.

mod cluster;
mod system;

pub use cluster::{
    bipartition, build_i2_complex, AlmostPositiveRoot, CensusEntry, ClusterComplex, CyclicCensus, Epsilon, RootEntry,
};
pub use system::{build_root_system, catalan_product, Family, RootSystem};

use crate::error::Result;

/// Cluster complex of a crystallographic type.
pub fn cluster_complex(family: Family, rank: usize) -> Result<ClusterComplex> {
    ClusterComplex::from_root_system(&build_root_system(family, rank)?)
}
