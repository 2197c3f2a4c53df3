//! The representation rings `R(Σₙ)` and the characteristic map.

pub mod character;
mod rep;

pub use character::{character_table, mn_character, CharacterTable};
pub use rep::{
    ch, ch_inverse, induction_product, internal_product, kronecker_coefficients, lr_coefficient,
    lr_product, restriction_coproduct, sign_projection_g, RepRecord, RepSn, RepTensor,
};
