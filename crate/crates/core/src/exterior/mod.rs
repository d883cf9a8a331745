//! Exterior algebra of the 4D+ calculus.

mod engine;
mod form;
mod verify;

pub use engine::{
    present_kernel, EtaForm, Exterior, LeftCoacted, RightCoacted, TensorForm, WordRules,
};
pub use form::{Form, Wedge};
pub use verify::{random_form, test_coefficients, test_forms, verify_exterior, verify_fun_f_r};
