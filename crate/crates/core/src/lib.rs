//! Permutation groups, subgroup lattices, maximal covers and FF-subgroups.
//!
//! Everything here is pure computation over `alloc`; report formats, the
//! verification harness and the command line live in the `ffgroups` crate.

#![no_std]

extern crate alloc;

pub mod constructors;
pub mod error;
pub mod ff;
pub mod field;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod psl2_maximals;
pub mod table;

pub use error::{Error, Result};
pub use group::PermutationGroup;
pub use lattice::SubgroupLattice;
pub use perm::{CycleType, Parity, Permutation};
