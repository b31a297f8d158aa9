//! Finite computations behind the classification of abelian groups acting
//! on rationally connected threefolds through K3 fibrations and Fano
//! threefolds: product-type and K3-type predicates, Littlewood–Richardson
//! extension enumeration, orbifold Riemann–Roch baskets, orbit filters and
//! lattice divisibility checks.

pub mod abelian;
pub mod catalog;
pub mod error;
pub mod exec;
pub mod extensions;
pub mod lattice;
pub mod orbits;
pub mod partitions;
pub mod reproduce;
pub mod rr;
pub mod smith;

pub use abelian::AbelianGroup;
pub use error::{Error, Result};
pub use partitions::Partition;
