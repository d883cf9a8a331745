use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::hopfcore::{format_terms, AElem, AMono, Elem};
use crate::qfield::FieldElem;
use crate::syntax::INDEX_CHARS;

/// Normal-form wedge monomial ω_{i1} ∧ … ∧ ω_{ik} with i1 < … < ik, stored
/// as a bit mask over the index order (−, +, z, 0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Wedge(pub u8);

impl Wedge {
    pub const EMPTY: Wedge = Wedge(0);

    pub fn single(i: u8) -> Self {
        Wedge(1 << i)
    }

    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    /// Indices in increasing order.
    pub fn indices(&self) -> Vec<u8> {
        (0..4).filter(|i| self.0 >> i & 1 == 1).collect()
    }

    /// All normal monomials of the given degree.
    pub fn of_degree(d: u32) -> Vec<Wedge> {
        let mut v: Vec<Wedge> = (0u8..16).map(Wedge).filter(|w| w.degree() == d).collect();
        v.sort();
        v
    }

    pub fn text(&self, prefix: char) -> String {
        self.indices()
            .iter()
            .map(|&i| format!("{}{}", prefix, INDEX_CHARS[i as usize]))
            .collect::<Vec<_>>()
            .join(" /\\ ")
    }
}

impl PartialOrd for Wedge {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Wedge {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.indices()).cmp(&(other.degree(), other.indices()))
    }
}

/// Element of the exterior algebra: left A-coefficients on normal wedge
/// monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Form {
    terms: BTreeMap<Wedge, AElem>,
}

impl Form {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(x: AElem) -> Self {
        Self::term(x, Wedge::EMPTY)
    }

    pub fn omega(i: u8) -> Self {
        Self::term(Elem::basis(AMono::one()), Wedge::single(i))
    }

    pub fn term(x: AElem, w: Wedge) -> Self {
        let mut f = Self::zero();
        f.add_term(w, &x);
        f
    }

    pub fn add_term(&mut self, w: Wedge, x: &AElem) {
        if x.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        e.add_assign(x);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, other: &Form) {
        for (w, x) in &other.terms {
            self.add_term(*w, x);
        }
    }

    pub fn add_scaled(&mut self, other: &Form, c: &FieldElem) {
        for (w, x) in &other.terms {
            self.add_term(*w, &x.scale(c));
        }
    }

    pub fn scale(&self, c: &FieldElem) -> Form {
        let mut f = Form::zero();
        f.add_scaled(self, c);
        f
    }

    pub fn neg(&self) -> Form {
        self.scale(&FieldElem::from_int(-1))
    }

    pub fn sub(&self, other: &Form) -> Form {
        let mut f = self.clone();
        f.add_scaled(other, &FieldElem::from_int(-1));
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Wedge, &AElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: Wedge) -> AElem {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// Homogeneous component of degree `d`.
    pub fn part(&self, d: u32) -> Form {
        Form {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.degree() == d)
                .map(|(w, x)| (*w, x.clone()))
                .collect(),
        }
    }

    /// Degree when homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|w| w.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Text with a chosen letter for the basis one-forms (`w` or `e`).
    pub fn text(&self, prefix: char) -> String {
        let mut items: Vec<(AMono, FieldElem, Option<String>, Wedge)> = Vec::new();
        for (w, x) in &self.terms {
            if w.degree() == 0 || x.len() == 1 {
                for (m, c) in x.iter() {
                    items.push((*m, c.clone(), None, *w));
                }
            } else {
                items.push((AMono::one(), FieldElem::one(), Some(format!("({})", x)), *w));
            }
        }
        let idx: Vec<usize> = (0..items.len()).collect();
        let text = format_terms(
            idx.iter().map(|i| (i, &items[*i].1)),
            |i| {
                let t = &items[*i];
                t.3.degree() == 0 && t.0 == AMono::one()
            },
            |i| {
                let (m, _, group, w) = &items[*i];
                let mut parts = Vec::new();
                if let Some(g) = group {
                    parts.push(g.clone());
                } else if *m != AMono::one() {
                    parts.push(m.to_string());
                }
                if w.degree() > 0 {
                    parts.push(w.text(prefix));
                }
                parts.join(" * ")
            },
        );
        text
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.text('w'))
    }
}
