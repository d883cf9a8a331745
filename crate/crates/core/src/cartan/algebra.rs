use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::elem::{CartanElem, OddWord, DELTA};
use crate::calculus4d::CalculusTables;
use crate::hopfcore::{antipode, coproduct, counit, mul, pair, Elem, HElem, HMono};
use crate::memo::Memo;
use crate::qfield::FieldElem;

/// Basis element `h w` of the Cartan algebra.
pub type CMono = (HMono, OddWord);

fn koszul(a: u32, b: u32) -> FieldElem {
    FieldElem::from_int(if a % 2 == 1 && b % 2 == 1 { -1 } else { 1 })
}

/// Sign of reversing a product of `k` odd factors.
fn reversal_sign(k: u32) -> FieldElem {
    FieldElem::from_int(if (k * k.saturating_sub(1) / 2) % 2 == 1 {
        -1
    } else {
        1
    })
}

fn word_from(letters: &[u8]) -> OddWord {
    OddWord(letters.iter().fold(0, |acc, &l| acc | 1 << l))
}

/// Element of C ⊗ C: for each pair of odd words, an element of H ⊗ H.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CartanTensor {
    terms: BTreeMap<(OddWord, OddWord), Elem<(HMono, HMono)>>,
}

impl CartanTensor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis_term(a: CMono, b: CMono, c: FieldElem) -> Self {
        let mut t = Self::zero();
        t.add_basis(a, b, c);
        t
    }

    pub fn add_basis(&mut self, a: CMono, b: CMono, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        let key = (a.1, b.1);
        let e = self.terms.entry(key).or_default();
        e.add_term((a.0, b.0), c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_scaled(&mut self, other: &CartanTensor, c: &FieldElem) {
        for (a, b, d) in other.basis() {
            self.add_basis(a, b, &d * c);
        }
    }

    pub fn add_assign(&mut self, other: &CartanTensor) {
        self.add_scaled(other, &FieldElem::one());
    }

    /// `x ⊗ y`.
    pub fn outer(x: &CartanElem, y: &CartanElem) -> Self {
        let mut t = Self::zero();
        for (v, h) in x.iter() {
            for (w, g) in y.iter() {
                for (m, c) in h.iter() {
                    for (n, d) in g.iter() {
                        t.add_basis((*m, *v), (*n, *w), c * d);
                    }
                }
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn basis(&self) -> Vec<(CMono, CMono, FieldElem)> {
        let mut out = Vec::new();
        for ((v, w), e) in &self.terms {
            for ((m, n), c) in e.iter() {
                out.push(((*m, *v), (*n, *w), c.clone()));
            }
        }
        out
    }

    /// Graded flip `a ⊗ b ↦ (−1)^{|a||b|} b ⊗ a`.
    pub fn flip(&self) -> Self {
        let mut t = Self::zero();
        for (a, b, c) in self.basis() {
            t.add_basis(b, a, &c * &koszul(a.1.len(), b.1.len()));
        }
        t
    }
}

impl fmt::Display for CartanTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .basis()
            .into_iter()
            .map(|(a, b, c)| {
                let l = CartanElem::term(Elem::term(c, a.0), a.1);
                let r = CartanElem::term(Elem::basis(b.0), b.1);
                format!("({}) (x) ({})", l, r)
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Normal-form arithmetic and Hopf structure of the Cartan algebra, built on
/// the calculus tables.
///
/// Odd letters move left past H by `ξ_i h = (h ◁ J_im) ξ_m` with
/// `h ◁ x = h_(1) <h_(2), x>`; on f_kj and X_j this is exactly the pair of
/// cross relations, and it is multiplicative, so it extends them to all of H.
pub struct Cartan<'t> {
    tables: &'t CalculusTables,
    s_f: Vec<Vec<HElem>>,
    sinv_f: Vec<Vec<HElem>>,
    phi_memo: Memo<(u8, u8, HMono), Arc<HElem>>,
    move_memo: Memo<(Vec<u8>, HMono), Arc<Vec<(Vec<u8>, HElem)>>>,
    reduce_memo: Memo<Vec<u8>, Arc<CartanElem>>,
    mul_memo: Memo<(CMono, CMono), Arc<CartanElem>>,
    coproduct_memo: Memo<CMono, Arc<CartanTensor>>,
    antipode_memo: Memo<(CMono, bool), Arc<CartanElem>>,
}

impl<'t> Cartan<'t> {
    pub fn new(tables: &'t CalculusTables) -> Self {
        let map = |inverse: bool| -> Vec<Vec<HElem>> {
            tables
                .f
                .iter()
                .map(|row| row.iter().map(|f| antipode(f, inverse)).collect())
                .collect()
        };
        Cartan {
            tables,
            s_f: map(false),
            sinv_f: map(true),
            phi_memo: Memo::new(),
            move_memo: Memo::new(),
            reduce_memo: Memo::new(),
            mul_memo: Memo::new(),
            coproduct_memo: Memo::new(),
            antipode_memo: Memo::new(),
        }
    }

    pub fn tables(&self) -> &'t CalculusTables {
        self.tables
    }

    pub fn x(&self, i: u8) -> CartanElem {
        CartanElem::even(self.tables.x[i as usize].clone())
    }

    pub fn f(&self, i: u8, j: u8) -> CartanElem {
        CartanElem::even(self.tables.f[i as usize][j as usize].clone())
    }

    pub fn xi(&self, i: u8) -> CartanElem {
        CartanElem::odd(i)
    }

    pub fn delta(&self) -> CartanElem {
        CartanElem::odd(DELTA)
    }

    /// Coefficient of letter `m` when letter `l` passes h leftward.
    fn phi(&self, l: u8, m: u8, h: &HMono) -> Arc<HElem> {
        self.phi_memo.get_or_insert_with(&(l, m, *h), || {
            Arc::new(if l == DELTA || m == DELTA {
                if l == m {
                    Elem::basis(*h)
                } else {
                    HElem::zero()
                }
            } else {
                let j = &self.tables.j[l as usize][m as usize];
                let mut out = HElem::zero();
                for ((h1, h2), c) in coproduct(&Elem::basis(*h)).iter() {
                    let p = pair(&Elem::basis(*h2), j);
                    if !p.is_zero() {
                        out.add_term(*h1, &p * c);
                    }
                }
                out
            })
        })
    }

    /// `letters · h` as Σ h' · letters'.
    fn word_times_h(&self, letters: &[u8], h: &HMono) -> Arc<Vec<(Vec<u8>, HElem)>> {
        self.move_memo
            .get_or_insert_with(&(letters.to_vec(), *h), || {
                let Some((&last, prefix)) = letters.split_last() else {
                    return Arc::new(vec![(Vec::new(), Elem::basis(*h))]);
                };
                let mut acc: BTreeMap<Vec<u8>, HElem> = BTreeMap::new();
                for m in 0..=DELTA {
                    let p = self.phi(last, m, h);
                    for (mono, c) in p.iter() {
                        for (seq, g) in self.word_times_h(prefix, mono).iter() {
                            let mut key = seq.clone();
                            key.push(m);
                            acc.entry(key).or_default().add_scaled(g, c);
                        }
                    }
                }
                Arc::new(acc.into_iter().filter(|(_, g)| !g.is_zero()).collect())
            })
    }

    /// Left multiplication by an H-element.
    pub fn h_times(&self, h: &HElem, x: &CartanElem) -> CartanElem {
        let mut out = CartanElem::zero();
        for (w, g) in x.iter() {
            out.add_term(*w, &mul(h, g));
        }
        out
    }

    /// Normal form of a product of odd letters.
    pub fn reduce_letters(&self, letters: &[u8]) -> Arc<CartanElem> {
        self.reduce_memo.get_or_insert_with(&letters.to_vec(), || {
            let Some(p) =
                (0..letters.len().saturating_sub(1)).find(|&p| letters[p] >= letters[p + 1])
            else {
                return Arc::new(CartanElem::term(
                    Elem::basis(HMono::one()),
                    word_from(letters),
                ));
            };
            let (a, b) = (letters[p], letters[p + 1]);
            let (prefix, suffix) = (&letters[..p], &letters[p + 2..]);
            let splice = |mid: &[u8]| -> Vec<u8> { [prefix, mid, suffix].concat() };
            let mut out = CartanElem::zero();
            if a == DELTA && b == DELTA {
                // δδ = 0
            } else if a == DELTA {
                // δξ_b = X_b − ξ_b δ
                out.add_scaled(
                    &self.reduce_letters(&splice(&[b, DELTA])),
                    &FieldElem::from_int(-1),
                );
                for (m, c) in self.tables.x[b as usize].iter() {
                    for (seq, g) in self.word_times_h(prefix, m).iter() {
                        let tail = self.reduce_letters(&[seq.as_slice(), suffix].concat());
                        out.add_scaled(&self.h_times(g, &tail), c);
                    }
                }
            } else {
                // ξ_a ξ_b = −t^{ab}_{kl} ξ_k ξ_l
                for k in 0..4u8 {
                    for l in 0..4u8 {
                        let t = self.tables.t.get(a, b, k, l);
                        if !t.is_zero() {
                            out.add_scaled(&self.reduce_letters(&splice(&[k, l])), &-t);
                        }
                    }
                }
            }
            Arc::new(out)
        })
    }

    fn mul_basis(&self, x: &CMono, y: &CMono) -> Arc<CartanElem> {
        self.mul_memo.get_or_insert_with(&(*x, *y), || {
            let tail = y.1.letters();
            let mut acc = CartanElem::zero();
            for (seq, g) in self.word_times_h(&x.1.letters(), &y.0).iter() {
                let r = self.reduce_letters(&[seq.as_slice(), &tail].concat());
                acc.add_assign(&self.h_times(g, &r));
            }
            Arc::new(self.h_times(&Elem::basis(x.0), &acc))
        })
    }

    /// Product in normal form.
    pub fn multiply(&self, x: &CartanElem, y: &CartanElem) -> CartanElem {
        let mut out = CartanElem::zero();
        for (a, c) in basis(x) {
            for (b, d) in basis(y) {
                out.add_scaled(&self.mul_basis(&a, &b), &(&c * &d));
            }
        }
        out
    }

    pub fn product(&self, factors: &[CartanElem]) -> CartanElem {
        factors
            .iter()
            .fold(CartanElem::one(), |acc, x| self.multiply(&acc, x))
    }

    /// Graded product in C ⊗ C.
    pub fn tensor_mul(&self, x: &CartanTensor, y: &CartanTensor) -> CartanTensor {
        let mut out = CartanTensor::zero();
        for (a1, a2, c) in x.basis() {
            for (b1, b2, d) in y.basis() {
                let sign = koszul(a2.1.len(), b1.1.len());
                let l = self.mul_basis(&a1, &b1);
                let r = self.mul_basis(&a2, &b2);
                out.add_scaled(&CartanTensor::outer(&l, &r), &(&(&c * &d) * &sign));
            }
        }
        out
    }

    fn letter_coproduct(&self, l: u8) -> CartanTensor {
        let one = CartanElem::one();
        let mut t = CartanTensor::outer(&one, &CartanElem::odd(l));
        if l == DELTA {
            t.add_assign(&CartanTensor::outer(&CartanElem::odd(l), &one));
        } else {
            for j in 0..4u8 {
                t.add_assign(&CartanTensor::outer(&CartanElem::odd(j), &self.f(j, l)));
            }
        }
        t
    }

    fn coproduct_basis(&self, x: &CMono) -> Arc<CartanTensor> {
        self.coproduct_memo.get_or_insert_with(x, || {
            let mut acc = CartanTensor::zero();
            for ((h1, h2), c) in coproduct(&Elem::basis(x.0)).iter() {
                acc.add_basis((*h1, OddWord::EMPTY), (*h2, OddWord::EMPTY), c.clone());
            }
            for l in x.1.letters() {
                acc = self.tensor_mul(&acc, &self.letter_coproduct(l));
            }
            Arc::new(acc)
        })
    }

    pub fn coproduct(&self, x: &CartanElem) -> CartanTensor {
        let mut out = CartanTensor::zero();
        for (a, c) in basis(x) {
            out.add_scaled(&self.coproduct_basis(&a), &c);
        }
        out
    }

    pub fn counit(&self, x: &CartanElem) -> FieldElem {
        counit(&x.coeff(OddWord::EMPTY))
    }

    /// S or S^{-1} on a single letter.
    fn letter_antipode(&self, l: u8, inverse: bool) -> CartanElem {
        if l == DELTA {
            return self.delta().neg();
        }
        let mut out = CartanElem::zero();
        for j in 0..4u8 {
            let term = if inverse {
                // S^{-1}(ξ_i) = −S^{-1}(f_ji) ξ_j
                CartanElem::term(
                    self.sinv_f[j as usize][l as usize].clone(),
                    OddWord::letter(j),
                )
            } else {
                // S(ξ_i) = −ξ_j S(f_ji)
                self.multiply(
                    &CartanElem::odd(j),
                    &CartanElem::even(self.s_f[j as usize][l as usize].clone()),
                )
            };
            out.add_scaled(&term, &FieldElem::from_int(-1));
        }
        out
    }

    fn antipode_basis(&self, x: &CMono, inverse: bool) -> Arc<CartanElem> {
        self.antipode_memo.get_or_insert_with(&(*x, inverse), || {
            let letters = x.1.letters();
            let mut acc = CartanElem::even(Elem::term(
                reversal_sign(letters.len() as u32),
                HMono::one(),
            ));
            for &l in letters.iter().rev() {
                acc = self.multiply(&acc, &self.letter_antipode(l, inverse));
            }
            let h = CartanElem::even(antipode(&Elem::basis(x.0), inverse));
            Arc::new(self.multiply(&acc, &h))
        })
    }

    /// Graded anti-homomorphic S, or S^{-1} when `inverse`.
    pub fn antipode(&self, x: &CartanElem, inverse: bool) -> CartanElem {
        let mut out = CartanElem::zero();
        for (a, c) in basis(x) {
            out.add_scaled(&self.antipode_basis(&a, inverse), &c);
        }
        out
    }

    /// Multiplication map C ⊗ C → C after applying `left` and `right` to
    /// the legs.
    pub fn contract(
        &self,
        t: &CartanTensor,
        left: impl Fn(&CartanElem) -> CartanElem,
        right: impl Fn(&CartanElem) -> CartanElem,
    ) -> CartanElem {
        let mut out = CartanElem::zero();
        for (a, b, c) in t.basis() {
            let l = left(&mono_elem(&a));
            let r = right(&mono_elem(&b));
            out.add_scaled(&self.multiply(&l, &r), &c);
        }
        out
    }

    /// `f ⊗ g` applied legwise.
    pub fn map_tensor(
        &self,
        t: &CartanTensor,
        left: impl Fn(&CartanElem) -> CartanElem,
        right: impl Fn(&CartanElem) -> CartanElem,
    ) -> CartanTensor {
        let mut out = CartanTensor::zero();
        for (a, b, c) in t.basis() {
            out.add_scaled(
                &CartanTensor::outer(&left(&mono_elem(&a)), &right(&mono_elem(&b))),
                &c,
            );
        }
        out
    }

    /// (Δ ⊗ id) and (id ⊗ Δ) applied to a tensor, as triple-tensor terms.
    pub fn coassociators(
        &self,
        t: &CartanTensor,
    ) -> (Elem<(CMono, CMono, CMono)>, Elem<(CMono, CMono, CMono)>) {
        let mut left = Elem::zero();
        let mut right = Elem::zero();
        for (a, b, c) in t.basis() {
            for (a1, a2, d) in self.coproduct_basis(&a).basis() {
                left.add_term((a1, a2, b), &c * &d);
            }
            for (b1, b2, d) in self.coproduct_basis(&b).basis() {
                right.add_term((a, b1, b2), &c * &d);
            }
        }
        (left, right)
    }
}

/// Basis expansion `Σ c (h w)`.
pub fn basis(x: &CartanElem) -> Vec<(CMono, FieldElem)> {
    let mut out = Vec::new();
    for (w, h) in x.iter() {
        for (m, c) in h.iter() {
            out.push(((*m, *w), c.clone()));
        }
    }
    out
}

pub fn mono_elem(a: &CMono) -> CartanElem {
    CartanElem::term(Elem::basis(a.0), a.1)
}
