//! Free λ-ring models of K-theory for finite CW pairs with even cells.

mod cells;
mod element;
mod model;

pub use cells::{Cell, CellComplex};
pub use element::KElement;
pub use model::{
    excision_check, monomial_label, point_monomial_det, point_monomial_matrix, rank_table,
    schur_terms, ExcisionReport, FreeModel, RankRow, RankTable,
};
