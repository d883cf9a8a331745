use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::hopfcore::{format_terms, Elem, HElem, HMono};
use crate::qfield::FieldElem;
use crate::syntax::INDEX_CHARS;

/// Ordered odd word in ξ_−, ξ_+, ξ_z, ξ_0, δ (bits 0..=4), each letter at
/// most once.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct OddWord(pub u8);

pub const DELTA: u8 = 4;

impl OddWord {
    pub const EMPTY: OddWord = OddWord(0);

    pub fn letter(i: u8) -> Self {
        OddWord(1 << i)
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn letters(&self) -> Vec<u8> {
        (0..5).filter(|i| self.0 >> i & 1 == 1).collect()
    }

    pub fn all() -> Vec<OddWord> {
        let mut v: Vec<OddWord> = (0u8..32).map(OddWord).collect();
        v.sort();
        v
    }

    pub fn text(&self) -> String {
        self.letters()
            .iter()
            .map(|&i| {
                if i == DELTA {
                    "del".to_string()
                } else {
                    format!("xi{}", INDEX_CHARS[i as usize])
                }
            })
            .collect::<Vec<_>>()
            .join(" * ")
    }
}

impl PartialOrd for OddWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for OddWord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), self.letters()).cmp(&(other.len(), other.letters()))
    }
}

/// Element of the quantum Cartan algebra in normal form: H-coefficients to
/// the left of ordered odd words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CartanElem {
    terms: BTreeMap<OddWord, HElem>,
}

impl CartanElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn even(h: HElem) -> Self {
        Self::term(h, OddWord::EMPTY)
    }

    pub fn one() -> Self {
        Self::even(Elem::basis(HMono::one()))
    }

    pub fn odd(letter: u8) -> Self {
        Self::term(Elem::basis(HMono::one()), OddWord::letter(letter))
    }

    pub fn term(h: HElem, w: OddWord) -> Self {
        let mut x = Self::zero();
        x.add_term(w, &h);
        x
    }

    pub fn add_term(&mut self, w: OddWord, h: &HElem) {
        if h.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        e.add_assign(h);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, other: &CartanElem) {
        for (w, h) in &other.terms {
            self.add_term(*w, h);
        }
    }

    pub fn add_scaled(&mut self, other: &CartanElem, c: &FieldElem) {
        for (w, h) in &other.terms {
            self.add_term(*w, &h.scale(c));
        }
    }

    pub fn scale(&self, c: &FieldElem) -> CartanElem {
        let mut x = CartanElem::zero();
        x.add_scaled(self, c);
        x
    }

    pub fn neg(&self) -> CartanElem {
        self.scale(&FieldElem::from_int(-1))
    }

    pub fn sub(&self, other: &CartanElem) -> CartanElem {
        let mut x = self.clone();
        x.add_scaled(other, &FieldElem::from_int(-1));
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&OddWord, &HElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: OddWord) -> HElem {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// Parity when homogeneous.
    pub fn parity(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|w| w.len() % 2);
        let p = it.next()?;
        it.all(|e| e == p).then_some(p)
    }
}

impl fmt::Display for CartanElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<(HMono, FieldElem, Option<String>, OddWord)> = Vec::new();
        for (w, h) in &self.terms {
            if w.is_empty() || h.len() == 1 {
                for (m, c) in h.iter() {
                    items.push((*m, c.clone(), None, *w));
                }
            } else {
                items.push((HMono::one(), FieldElem::one(), Some(format!("({})", h)), *w));
            }
        }
        let idx: Vec<usize> = (0..items.len()).collect();
        let text = format_terms(
            idx.iter().map(|i| (i, &items[*i].1)),
            |i| items[*i].3.is_empty() && items[*i].0 == HMono::one(),
            |i| {
                let (m, _, group, w) = &items[*i];
                let mut parts = Vec::new();
                if let Some(g) = group {
                    parts.push(g.clone());
                } else if *m != HMono::one() {
                    parts.push(m.to_string());
                }
                if !w.is_empty() {
                    parts.push(w.text());
                }
                parts.join(" * ")
            },
        );
        f.write_str(&text)
    }
}
