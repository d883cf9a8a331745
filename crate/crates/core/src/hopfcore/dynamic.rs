use super::elem::Elem;
use super::ops;
use super::{pairing, AElem, AMono, AlgebraId, HElem, HMono};
use crate::error::{Error, Result};
use crate::qfield::FieldElem;

/// Element of either algebra, for callers that only know the algebra at
/// run time (the expression front end). Typed code uses `AElem`/`HElem`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AlgebraElem {
    A(AElem),
    H(HElem),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TensorElem {
    A(Elem<(AMono, AMono)>),
    H(Elem<(HMono, HMono)>),
}

fn mismatch(expected: AlgebraId, found: AlgebraId) -> Error {
    Error::AlgebraMismatch {
        expected: expected.to_string(),
        found: found.to_string(),
    }
}

impl AlgebraElem {
    pub fn algebra(&self) -> AlgebraId {
        match self {
            AlgebraElem::A(_) => AlgebraId::A,
            AlgebraElem::H(_) => AlgebraId::H,
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        match (self, other) {
            (AlgebraElem::A(x), AlgebraElem::A(y)) => Ok(AlgebraElem::A(ops::mul(x, y))),
            (AlgebraElem::H(x), AlgebraElem::H(y)) => Ok(AlgebraElem::H(ops::mul(x, y))),
            _ => Err(mismatch(self.algebra(), other.algebra())),
        }
    }

    pub fn coproduct(&self) -> TensorElem {
        match self {
            AlgebraElem::A(x) => TensorElem::A(ops::coproduct(x)),
            AlgebraElem::H(x) => TensorElem::H(ops::coproduct(x)),
        }
    }

    pub fn counit(&self) -> FieldElem {
        match self {
            AlgebraElem::A(x) => ops::counit(x),
            AlgebraElem::H(x) => ops::counit(x),
        }
    }

    pub fn antipode(&self, inverse: bool) -> Self {
        match self {
            AlgebraElem::A(x) => AlgebraElem::A(ops::antipode(x, inverse)),
            AlgebraElem::H(x) => AlgebraElem::H(ops::antipode(x, inverse)),
        }
    }

    pub fn star(&self) -> Self {
        match self {
            AlgebraElem::A(x) => AlgebraElem::A(ops::star(x)),
            AlgebraElem::H(x) => AlgebraElem::H(ops::star(x)),
        }
    }

    fn split(h: &Self, x: &Self) -> Result<(HElem, AElem)> {
        match (h, x) {
            (AlgebraElem::H(h), AlgebraElem::A(x)) => Ok((h.clone(), x.clone())),
            (AlgebraElem::H(_), other) => Err(mismatch(AlgebraId::A, other.algebra())),
            (other, _) => Err(mismatch(AlgebraId::H, other.algebra())),
        }
    }

    /// `<h, x>` with `self = h`.
    pub fn pair(h: &Self, x: &Self) -> Result<FieldElem> {
        let (h, x) = Self::split(h, x)?;
        Ok(pairing::pair(&h, &x))
    }

    pub fn act_left(h: &Self, x: &Self) -> Result<Self> {
        let (h, x) = Self::split(h, x)?;
        Ok(AlgebraElem::A(pairing::act_left(&h, &x)))
    }

    pub fn act_right(x: &Self, h: &Self) -> Result<Self> {
        let (h, x) = Self::split(h, x)?;
        Ok(AlgebraElem::A(pairing::act_right(&x, &h)))
    }
}

impl std::fmt::Display for AlgebraElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AlgebraElem::A(x) => write!(f, "{}", x),
            AlgebraElem::H(x) => write!(f, "{}", x),
        }
    }
}
