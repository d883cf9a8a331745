//! The quantum Cartan algebra of the 4D+ calculus.

mod algebra;
mod elem;
mod relations;
mod rep;
mod verify;

pub use algebra::{basis, mono_elem, CMono, Cartan, CartanTensor};
pub use elem::{CartanElem, OddWord, DELTA};
pub use relations::{
    evaluate, relations, w_as_printed, word_reversal_sign, Gen, Relation, FAMILIES,
};
pub use rep::{scalar_form, LeftOp, OpKind, Reps, RightOp};
pub use verify::{
    measure_lr_commutation, verify_antipode, verify_bialgebra, verify_ids2,
    verify_left_representation, verify_right_representation, verify_w_as_printed,
};
