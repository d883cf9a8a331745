//! The dually paired Hopf algebras A = O(SU_q(2)) and H = U_q(su(2)).
//!
//! Elements are sparse sums of PBW monomials. Products, coproducts and
//! antipodes of monomials are memoized in process-wide tables; every cached
//! value is a pure function of its key.

mod axioms;
mod dynamic;
mod elem;
mod ops;
mod pairing;
mod suq2;
mod uqsu2;

use std::fmt;

pub use axioms::{verify_hopf_axioms, verify_hopf_axioms_with, AxiomCheck, HopfReport};
pub use dynamic::{AlgebraElem, TensorElem};
pub use elem::{Elem, Monomial};
pub use ops::{
    antipode, antipode_with, coproduct, counit, mul, mul_tensor, pow, star, tensor_flip,
    HopfCaches, HopfMonomial,
};
pub use pairing::{act_left, act_right, pair, pair_mono, pair_tensor};
pub use suq2::AMono;
pub use uqsu2::HMono;

/// Element of O(SU_q(2)).
pub type AElem = Elem<AMono>;
/// Element of U_q(su(2)).
pub type HElem = Elem<HMono>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum AlgebraId {
    A,
    H,
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraId::A => write!(f, "A"),
            AlgebraId::H => write!(f, "H"),
        }
    }
}

/// Writes a linear combination as `c * m + ...`, pulling negative
/// single-term coefficients out as ` - `.
pub fn format_terms<'a, T: 'a>(
    terms: impl IntoIterator<Item = (&'a T, &'a crate::qfield::FieldElem)>,
    is_unit: impl Fn(&T) -> bool,
    mono: impl Fn(&T) -> String,
) -> String {
    let mut out = String::new();
    for (m, c) in terms {
        let neg = c.is_negative_monomial();
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if is_unit(m) {
            out.push_str(&mag.to_string());
        } else if mag.is_one() {
            out.push_str(&mono(m));
        } else {
            out.push_str(&format!("{} * {}", mag, mono(m)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for AElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(
            self.iter(),
            |m| m.is_unit(),
            |m| m.to_string(),
        ))
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(
            self.iter(),
            |m| m.is_unit(),
            |m| m.to_string(),
        ))
    }
}
