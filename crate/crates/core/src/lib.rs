//! Exact engine for the graded λ-ring `⊕ₙ K_{Σₙ}((X,A)ⁿ)` realized through
//! symmetric functions: characters of symmetric and wreath groups, the τ-ring
//! structure, and free λ-ring models for spaces built from even cells.

pub mod error;
pub mod kmodel;
pub mod lambda_tau;
pub mod rep_sn;
pub mod symcore;
pub mod wreath;

pub use error::{Error, Result};
