//! Error types. Bound violations are kept distinct from malformed input so the
//! CLI can map them to different exit codes.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("generator degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("a group needs at least one generator")]
    EmptyGenerators,
    #[error("group too large: closure exceeds the order bound {bound}")]
    TooLarge { bound: usize },
    #[error("order bound exceeded: |G| = {order} > {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("subgroup #{id} is not normal")]
    NotNormal { id: usize },
    #[error("arguments belong to different parent groups")]
    DifferentParents,
    #[error("element set is not closed under composition")]
    NotClosed,
    #[error("element set does not contain the identity")]
    NoIdentity,
    #[error("the given set is not a subgroup")]
    NotSubgroup,
    #[error("set product of normal subgroups #{a} and #{b} is not their join")]
    ProductJoinMismatch { a: usize, b: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("unknown group name `{name}`")]
    UnknownName { name: String },
    #[error("malformed group spec at byte {pos}: {msg}")]
    Malformed { msg: String, pos: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ELatticeError {
    #[error("malformed table: {msg}")]
    MalformedTable { msg: String },
    #[error("class size for element {element} must be at least 1")]
    ZeroClassSize { element: usize },
    #[error("equivalence class mixes ε-values: elements {a} and {b} share a class but ε differs")]
    RelationNotInKernel { a: usize, b: usize },
    #[error("relation is finer than Ker ε: element {a} is not related to ε({a}); the quotient would not be a lattice")]
    RelationFinerThanKernel { a: usize },
    #[error("set product of cores of #{a} and #{b} is not a subgroup")]
    ProductNotSubgroup { a: usize, b: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("malformed map: {msg}")]
    MalformedMap { msg: String },
    #[error("{side} ε-lattice fails the axioms or is not canonical")]
    NotCanonical { side: &'static str },
    #[error("automorphism count {total} exceeds the enumeration threshold {max}")]
    ThresholdExceeded { total: String, max: usize },
    #[error(transparent)]
    ELattice(#[from] ELatticeError),
}

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown check id `{id}`")]
    UnknownCheck { id: String },
    #[error("scope group `{name}` is not in the catalog")]
    UnknownScopeGroup { name: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    ELattice(#[from] ELatticeError),
    #[error(transparent)]
    Morphism(#[from] MorphismError),
}
