use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::ops::{Add, Neg, Sub};

use crate::qfield::FieldElem;

/// Sparse linear combination of basis keys with Q(s) coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Elem<M: Ord> {
    terms: BTreeMap<M, FieldElem>,
}

impl<M: Ord> Default for Elem<M> {
    fn default() -> Self {
        Elem {
            terms: BTreeMap::new(),
        }
    }
}

impl<M: Ord + Clone> Elem<M> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(m: M) -> Self {
        Self::term(FieldElem::one(), m)
    }

    pub fn term(c: FieldElem, m: M) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (M, FieldElem)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (m, c) in it {
            e.add_term(m, c);
        }
        e
    }

    pub fn add_term(&mut self, m: M, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Self, c: &FieldElem) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (m, v) in &other.terms {
            let t = if unit { v.clone() } else { v * c };
            self.add_term(m.clone(), t);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &FieldElem::one());
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Elem {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &FieldElem)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &M> {
        self.terms.keys()
    }

    /// Linear extension of a map on basis keys.
    pub fn map_linear<N: Ord + Clone>(&self, mut f: impl FnMut(&M) -> Elem<N>) -> Elem<N> {
        let mut out = Elem::zero();
        for (m, c) in &self.terms {
            out.add_scaled(&f(m), c);
        }
        out
    }

    /// Linear extension of a scalar-valued map on basis keys.
    pub fn map_scalar(&self, mut f: impl FnMut(&M) -> FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for (m, c) in &self.terms {
            let v = f(m);
            if !v.is_zero() {
                acc += &(&v * c);
            }
        }
        acc
    }

    /// Coefficients evaluated through `f`, dropping terms that become zero.
    pub fn map_coeffs<E>(
        &self,
        mut f: impl FnMut(&FieldElem) -> Result<FieldElem, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c)?);
        }
        Ok(out)
    }
}

impl<M: Ord + Clone> FromIterator<(M, FieldElem)> for Elem<M> {
    fn from_iter<I: IntoIterator<Item = (M, FieldElem)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, M: Ord + Clone> Add<&'a Elem<M>> for &'a Elem<M> {
    type Output = Elem<M>;
    fn add(self, o: &Elem<M>) -> Elem<M> {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
}

impl<'a, M: Ord + Clone> Sub<&'a Elem<M>> for &'a Elem<M> {
    type Output = Elem<M>;
    fn sub(self, o: &Elem<M>) -> Elem<M> {
        let mut r = self.clone();
        r.add_scaled(o, &FieldElem::from_int(-1));
        r
    }
}

impl<M: Ord + Clone> Neg for &Elem<M> {
    type Output = Elem<M>;
    fn neg(self) -> Elem<M> {
        self.scale(&FieldElem::from_int(-1))
    }
}

/// Basis monomial of an algebra with a PBW-type normal form.
pub trait Monomial: Clone + Ord + Eq + Hash + Debug + Send + Sync + 'static {}
impl<T: Clone + Ord + Eq + Hash + Debug + Send + Sync + 'static> Monomial for T {}
