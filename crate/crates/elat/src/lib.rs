//! Canonical ε-lattices of finite groups.
//!
//! An ε-lattice is a set `L` with a map `ε: L → L` and two binary operations
//! `∧ε`, `∨ε` that are associative, commutative, satisfy `a ∧ε a = a ∨ε a = ε(a)`
//! and absorb to `ε(a)` (`a ∧ε (a ∨ε b) = a ∨ε (a ∧ε b) = ε(a)`). It is
//! *canonical* when every operation result is a fixed point of `ε`. The motivating
//! instance is the subgroup ε-lattice of a finite group `G`: the carrier is the
//! set of all subgroups, `ε(H)` is the normal core `H_G`, the meet of two
//! subgroups is the intersection of their cores and the join is the product of
//! their cores; the fixed points form the normal subgroup lattice `N(G)`.
//!
//! The crate provides:
//!
//! * a small permutation-group engine ([`group`], [`autos`], [`catalog`]) with a
//!   built-in catalog of small groups,
//! * exhaustive subgroup enumeration with cores, Frattini and derived subgroups
//!   and group-class predicates ([`subgroups`]),
//! * the ε-lattice algebra: axiom checking, the subgroup ε-lattice, quotient and
//!   inflation constructions ([`elattice`]),
//! * ε-lattice homomorphism checking, isomorphism search, and the decomposition
//!   of the automorphism group through the exact sequence
//!   `1 → ∏ S'([aᵢ]) → Aut_E(L) → Aut(Fix ε) → 1` ([`morphisms`], [`towers`]),
//! * a deterministic suite of structural checks over the group catalog
//!   ([`suite`]) and the report types backing the `elat` CLI ([`report`]).

pub mod analysis;
pub mod autos;
pub mod bitset;
pub mod catalog;
pub mod config;
pub mod elattice;
pub mod error;
pub mod group;
pub mod lattice;
pub mod morphisms;
pub mod perm;
pub mod report;
pub mod subgroups;
pub mod suite;
pub mod towers;

pub use analysis::{analyze, Analysis};
pub use bitset::BitSet;
pub use config::Config;
pub use elattice::{verify_axioms, ELattice};
pub use group::FiniteGroup;
pub use lattice::Lattice;
pub use perm::Perm;
pub use subgroups::SubgroupLattice;
