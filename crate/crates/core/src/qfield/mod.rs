//! Exact arithmetic in Q(s) with s = q^{1/2}, and linear algebra over it.

mod field;
mod matrix;
mod poly;

pub use field::FieldElem;
pub use matrix::{in_span, kernel_basis, span_rank, FMatrix};
pub use poly::LaurentPoly;

use num_rational::BigRational;

use crate::error::Result;

/// Exact rational value of `a` at `s = s_value`.
pub fn field_eval(a: &FieldElem, s_value: &BigRational) -> Result<BigRational> {
    a.eval(s_value)
}
