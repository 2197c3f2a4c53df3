//! Brute-force permutation-group character theory: explicit groups,
//! conjugacy classes, induced and permutation characters, and character
//! tables peeled from permutation characters. Shares no code with the
//! symmetric-function engine it is used to check.

pub mod checks;
pub mod classfn;
pub mod group;
pub mod monomial;
pub mod perm;
pub mod table;

pub use classfn::{
    coset_character, induced_character, induced_characters, inner, permutation_character, point_character, restrict,
    ClassFunction,
};
pub use group::{
    build_iterated_wreath, build_symmetric, build_wreath, build_wreath_diagonal,
    build_wreath_diagonal_pair, build_young, wreath_of, Class, PermGroup, ORDER_LIMIT,
};
pub use monomial::{monomial_character, CosetRep, MonomialRep, PowerRep};
pub use perm::Perm;
pub use table::{cyclic_seeds, irreducible_table, partitions, symmetric_table};

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("group order exceeds the enumeration limit of {0}")]
    OrderLimit(usize),
    #[error("permutation of degree {found} where {expected} was expected")]
    Degree { expected: usize, found: usize },
    #[error("subgroup is not contained in the group")]
    NotSubgroup,
    #[error("seed characters span only {found} of {classes} class-function dimensions")]
    SeedsDoNotSpan { found: usize, classes: usize },
    #[error("inconsistent character data: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;
