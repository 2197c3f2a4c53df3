//! Partitions and exact symmetric-function calculus.

mod basis;
pub mod linalg;
mod partition;
mod symfunc;
mod text;

pub use basis::{convert, Basis, Expansion};
pub use partition::{conjugate, gen_partitions, Partition};
pub use symfunc::{plethysm_into, PlethysticAlgebra, SymFunc, SymTensor};
pub use text::{format_terms, parse_symfunc, SymRecord, TermRecord};

pub(crate) use symfunc::add_into;
pub(crate) use text::{term_records, terms_from_records};
