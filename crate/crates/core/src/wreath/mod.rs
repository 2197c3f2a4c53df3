//! Representation rings of the wreath products `Σ_l ≀ Σ_k`.

mod multipartition;
mod ops;
mod table;

pub use multipartition::{
    multipartitions, ClassLabel, MultiPartition, WreathRecord, WreathRep, WreathTermRecord,
};
pub use ops::{
    delta_closed_form, delta_map, power_map, power_map_class_function, pullback,
    restrict_class_function, wreath_cross, wreath_induce, wreath_induce_ch, wreath_internal,
    wreath_restrict,
};
pub use table::{wreath_table, WreathClassFunction, WreathTable};
