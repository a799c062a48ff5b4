//! Finite permutation groups, subgroup lattices, and decision procedures for
//! Hamiltonian-type group families.

pub mod catalog;
pub mod error;
pub mod group;
pub mod perm;
pub mod predicates;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use group::{Caps, GroupElementTable, PermGroup};
pub use perm::Permutation;
