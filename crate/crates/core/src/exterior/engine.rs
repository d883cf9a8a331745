use std::collections::BTreeMap;
use std::sync::Arc;

use super::form::{Form, Wedge};
use crate::calculus4d::{pair_index, pair_of, CalculusTables, Presentation};
use crate::error::{Error, Result};
use crate::hopfcore::{
    act_left, act_right, antipode, coproduct, counit, mul, pair, AElem, AMono, Elem, HElem,
};
use crate::memo::Memo;
use crate::qfield::{kernel_basis, FMatrix, FieldElem};
use crate::syntax::{eval_str, BareEnv};

/// `x1 ⊗ x2 ω_W`, the shape of a left coaction.
pub type LeftCoacted = Elem<(AMono, AMono, Wedge)>;
/// `x1 ω_W ⊗ x2`, the shape of a right coaction.
pub type RightCoacted = Elem<(AMono, Wedge, AMono)>;

/// Unreduced tensor words with left coefficients, i.e. elements of the
/// tensor algebra of Γ over A.
pub type TensorForm = BTreeMap<Vec<u8>, AElem>;

type Normal = Arc<Vec<(Wedge, FieldElem)>>;

fn add_into(map: &mut TensorForm, key: Vec<u8>, x: &AElem) {
    if x.is_zero() {
        return;
    }
    let e = map.entry(key.clone()).or_default();
    e.add_assign(x);
    if e.is_zero() {
        map.remove(&key);
    }
}

/// Degree-2 rewrite rules of a quadratic exterior algebra. Normal words are
/// strictly increasing (ω) or strictly decreasing (η).
pub struct WordRules {
    rhs: Vec<Option<Vec<((u8, u8), FieldElem)>>>,
    descending: bool,
    memo: Memo<(Vec<u8>, bool), Normal>,
}

impl WordRules {
    /// Rules from an echelonized kernel whose pivots are the non-normal pairs:
    /// each pivot pair equals minus the rest of its row.
    pub fn new(p: &Presentation, descending: bool) -> Result<Self> {
        let mut rhs = vec![None; 16];
        for (row, &(i, j)) in p.rows.iter().zip(&p.pivots) {
            let normal = if descending { i > j } else { i < j };
            if normal {
                return Err(Error::TExtractionAmbiguous(format!(
                    "pivot on normal pair ({}, {})",
                    i, j
                )));
            }
            let terms = (0..16)
                .filter(|&c| c != pair_index(i, j) && !row[c].is_zero())
                .map(|c| (pair_of(c), -&row[c]))
                .collect();
            rhs[pair_index(i, j)] = Some(terms);
        }
        if rhs.iter().filter(|r| r.is_some()).count() != 10 {
            return Err(Error::TExtractionAmbiguous(
                "expected 10 degree-2 relations".into(),
            ));
        }
        Ok(WordRules {
            rhs,
            descending,
            memo: Memo::new(),
        })
    }

    pub fn is_normal_pair(&self, i: u8, j: u8) -> bool {
        if self.descending {
            i > j
        } else {
            i < j
        }
    }

    /// Letters of a normal monomial in reading order.
    pub fn word_of(&self, w: Wedge) -> Vec<u8> {
        let mut v = w.indices();
        if self.descending {
            v.reverse();
        }
        v
    }

    /// Normal form of a word, rewriting the leftmost (or rightmost)
    /// non-normal adjacent pair first.
    pub fn reduce_with(&self, word: &[u8], leftmost: bool) -> Normal {
        self.memo
            .get_or_insert_with(&(word.to_vec(), leftmost), || {
                let mut bad = (0..word.len().saturating_sub(1))
                    .filter(|&p| !self.is_normal_pair(word[p], word[p + 1]));
                let p = if leftmost { bad.next() } else { bad.last() };
                let Some(p) = p else {
                    let mask = word.iter().fold(0u8, |m, &i| m | 1 << i);
                    return Arc::new(vec![(Wedge(mask), FieldElem::one())]);
                };
                let rules = self.rhs[pair_index(word[p], word[p + 1])]
                    .as_ref()
                    .expect("non-normal pair has a rule");
                let mut acc: BTreeMap<Wedge, FieldElem> = BTreeMap::new();
                for ((k, l), c) in rules {
                    let mut next = word.to_vec();
                    next[p] = *k;
                    next[p + 1] = *l;
                    for (w, d) in self.reduce_with(&next, leftmost).iter() {
                        *acc.entry(*w).or_insert_with(FieldElem::zero) += &(c * d);
                    }
                }
                Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
            })
    }

    pub fn reduce(&self, word: &[u8]) -> Normal {
        self.reduce_with(word, true)
    }
}

/// Echelonized kernel of `1 − M` with pivots searched first in `order`.
pub fn present_kernel(m: &FMatrix, order: &[usize]) -> Result<Presentation> {
    let n = m.rows();
    let id_minus = FMatrix::identity(n).sub(m);
    let ker = kernel_basis(&id_minus);
    let (r, pivots) = FMatrix::from_rows(ker.clone()).rref_with_order(order);
    if pivots.len() != ker.len() {
        return Err(Error::TExtractionAmbiguous(
            "dependent kernel vectors".into(),
        ));
    }
    Ok(Presentation {
        rows: (0..r.rows()).map(|i| r.row(i).to_vec()).collect(),
        pivots: pivots.into_iter().map(pair_of).collect(),
    })
}

/// Forms expanded on right-invariant monomials η_K with coefficients on
/// the right. Monomials are read in decreasing index order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct EtaForm {
    terms: BTreeMap<Wedge, AElem>,
}

impl EtaForm {
    pub fn add_term(&mut self, w: Wedge, y: &AElem) {
        if y.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        e.add_assign(y);
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Wedge, &AElem)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: Wedge) -> AElem {
        self.terms.get(&w).cloned().unwrap_or_default()
    }
}

/// The exterior algebra of the calculus with its differential, coactions
/// and the H-actions and inner derivatives on it.
pub struct Exterior<'t> {
    tables: &'t CalculusTables,
    omega_rules: WordRules,
    eta_rules: WordRules,
    eta_presentation: Presentation,
    d_omega: Vec<Form>,
    eta: Vec<Form>,
    /// R_i = −S^{-1}(X_i).
    r: Vec<HElem>,
    /// S^{-1}(f_ij).
    sinv_f: Vec<Vec<HElem>>,
    push_memo: Memo<(Vec<u8>, AMono), Arc<TensorForm>>,
    d_word_memo: Memo<Wedge, Arc<Form>>,
    d_memo: Memo<(AMono, Wedge), Arc<Form>>,
    coact_memo: Memo<(AMono, Wedge), Arc<RightCoacted>>,
    inner_memo: Memo<(u8, Wedge), Arc<Form>>,
    to_eta_memo: Memo<(AMono, Wedge), Arc<EtaForm>>,
    eta_word_memo: Memo<Wedge, Arc<Form>>,
    inner_eta_memo: Memo<(u8, Wedge), Normal>,
}

fn a_expr(e: &str) -> Result<AElem> {
    eval_str(&BareEnv, e).and_then(|v| v.into_a())
}

impl<'t> Exterior<'t> {
    pub fn new(tables: &'t CalculusTables) -> Result<Self> {
        let omega_rules = WordRules::new(&tables.wedge_rules, false)?;
        // σ(η_i ⊗ η_j) = σ^{lk}_{ji} η_k ⊗ η_l
        let mut m = FMatrix::zeros(16, 16);
        for (i, j, k, l) in quads() {
            m.set(
                pair_index(k, l),
                pair_index(i, j),
                tables.sigma(j, i, l, k).clone(),
            );
        }
        let mut order: Vec<usize> = (0..16).filter(|&p| pair_of(p).0 <= pair_of(p).1).collect();
        order.extend((0..16).filter(|&p| pair_of(p).0 > pair_of(p).1));
        let eta_presentation = present_kernel(&m, &order)?;
        let eta_rules = WordRules::new(&eta_presentation, true)?;
        let sinv_f = tables
            .f
            .iter()
            .map(|row| row.iter().map(|f| antipode(f, true)).collect())
            .collect();
        let r = tables.x.iter().map(|x| -&antipode(x, true)).collect();
        let mut ext = Exterior {
            tables,
            omega_rules,
            eta_rules,
            eta_presentation,
            d_omega: Vec::new(),
            eta: Vec::new(),
            r,
            sinv_f,
            push_memo: Memo::new(),
            d_word_memo: Memo::new(),
            d_memo: Memo::new(),
            coact_memo: Memo::new(),
            inner_memo: Memo::new(),
            to_eta_memo: Memo::new(),
            eta_word_memo: Memo::new(),
            inner_eta_memo: Memo::new(),
        };
        ext.d_omega = ext.maurer_cartan()?;
        ext.eta = (0..4)
            .map(|j| {
                let mut out = Form::zero();
                for i in 0..4 {
                    let s = antipode(&tables.j[i][j], false);
                    out.add_assign(&ext.form_times_a(&Form::omega(i as u8), &s));
                }
                out
            })
            .collect();
        Ok(ext)
    }

    /// dω_i from the inverse formulas ω_i = Σ coef x dy, as Σ coef dx ∧ dy.
    fn maurer_cartan(&self) -> Result<Vec<Form>> {
        let name = "inverse_formulas";
        let mut out = vec![None; 4];
        for (i, terms) in self.inverse_formulas()? {
            let mut acc = Form::zero();
            for (coef, x, y) in terms {
                let dx = self.d(&Form::scalar(x));
                let dy = self.d(&Form::scalar(y));
                acc.add_scaled(&self.wedge(&dx, &dy), &coef);
            }
            out[i as usize] = Some(acc);
        }
        out.into_iter()
            .enumerate()
            .map(|(i, f)| {
                f.ok_or_else(|| Error::Fixture {
                    name: name.into(),
                    msg: format!("no formula for index {}", i),
                })
            })
            .collect()
    }

    /// Parsed inverse formulas: `(i, [(coef, x, y)])` with ω_i = Σ coef x dy.
    pub fn inverse_formulas(&self) -> Result<Vec<(u8, Vec<(FieldElem, AElem, AElem)>)>> {
        let name = "inverse_formulas";
        let text = self.tables.fixtures.get(name)?;
        let parsed = crate::calculus4d::fixtures::inverse_formulas(name, text)?;
        let wrap = |r| crate::calculus4d::fixtures::in_fixture(name, r);
        parsed
            .into_iter()
            .map(|(i, terms)| {
                let terms = terms
                    .into_iter()
                    .map(|t| {
                        let c = crate::calculus4d::tables::scalar(name, &t.coef)?;
                        Ok((c, wrap(a_expr(&t.x))?, wrap(a_expr(&t.y))?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok((i, terms))
            })
            .collect()
    }

    pub fn tables(&self) -> &'t CalculusTables {
        self.tables
    }

    pub fn omega_rules(&self) -> &WordRules {
        &self.omega_rules
    }

    pub fn eta_rules(&self) -> &WordRules {
        &self.eta_rules
    }

    pub fn eta_presentation(&self) -> &Presentation {
        &self.eta_presentation
    }

    pub fn tangent_right(&self, i: u8) -> &HElem {
        &self.r[i as usize]
    }

    pub fn functional_inverse(&self, i: u8, j: u8) -> &HElem {
        &self.sinv_f[i as usize][j as usize]
    }

    /// Rank of Γ^∧ in degree `d` as a free left A-module.
    pub fn dimension(&self, d: u32) -> usize {
        Wedge::of_degree(d).len()
    }

    /// Normal form of a word of one-forms ω_{i1} ⊗ … ⊗ ω_{ik}.
    pub fn reduce_word(&self, word: &[u8]) -> Form {
        let mut out = Form::zero();
        for (w, c) in self.omega_rules.reduce(word).iter() {
            out.add_term(*w, &Elem::term(c.clone(), AMono::one()));
        }
        out
    }

    /// `ω_{word} y = Σ ((f_{i1 j1} ⋯ f_{ik jk}) ⊳ y) ω_J`, unreduced.
    pub fn push_raw(&self, word: &[u8], y: &AMono) -> Arc<TensorForm> {
        self.push_memo.get_or_insert_with(&(word.to_vec(), *y), || {
            let mut state: TensorForm = BTreeMap::from([(Vec::new(), Elem::basis(*y))]);
            for &i in word.iter().rev() {
                let mut next = TensorForm::new();
                for (tail, x) in &state {
                    for j in 0..4u8 {
                        let f = &self.tables.f[i as usize][j as usize];
                        if f.is_zero() {
                            continue;
                        }
                        let mut key = vec![j];
                        key.extend_from_slice(tail);
                        add_into(&mut next, key, &act_left(f, x));
                    }
                }
                state = next;
            }
            Arc::new(state)
        })
    }

    /// Left-normal raw tensor of a form.
    pub fn raw(&self, f: &Form) -> TensorForm {
        let mut out = TensorForm::new();
        for (w, x) in f.iter() {
            add_into(&mut out, w.indices(), x);
        }
        out
    }

    /// Tensor product over A of raw tensors.
    pub fn raw_tensor(&self, x: &TensorForm, y: &TensorForm) -> TensorForm {
        let mut out = TensorForm::new();
        for (w1, x1) in x {
            for (w2, x2) in y {
                for (m, c) in x2.iter() {
                    for (w, z) in self.push_raw(w1, m).iter() {
                        let mut key = w.clone();
                        key.extend_from_slice(w2);
                        add_into(&mut out, key, &mul(x1, z).scale(c));
                    }
                }
            }
        }
        out
    }

    /// Projection of a raw tensor onto Γ^∧.
    pub fn reduce_raw(&self, x: &TensorForm) -> Form {
        let mut out = Form::zero();
        for (word, y) in x {
            for (w, c) in self.omega_rules.reduce(word).iter() {
                out.add_term(*w, &y.scale(c));
            }
        }
        out
    }

    pub fn wedge(&self, x: &Form, y: &Form) -> Form {
        self.reduce_raw(&self.raw_tensor(&self.raw(x), &self.raw(y)))
    }

    pub fn mul_left(&self, x: &AElem, f: &Form) -> Form {
        let mut out = Form::zero();
        for (w, y) in f.iter() {
            out.add_term(*w, &mul(x, y));
        }
        out
    }

    pub fn form_times_a(&self, f: &Form, y: &AElem) -> Form {
        let mut out = Form::zero();
        for (w, x) in f.iter() {
            let mut raw = TensorForm::new();
            for (m, c) in y.iter() {
                for (word, z) in self.push_raw(&w.indices(), m).iter() {
                    add_into(&mut raw, word.clone(), &mul(x, z).scale(c));
                }
            }
            out.add_assign(&self.reduce_raw(&raw));
        }
        out
    }

    pub fn d_omega(&self, i: u8) -> &Form {
        &self.d_omega[i as usize]
    }

    fn d_word(&self, w: Wedge) -> Arc<Form> {
        self.d_word_memo.get_or_insert_with(&w, || {
            let idx = w.indices();
            Arc::new(match idx.split_first() {
                None => Form::zero(),
                Some((&i, rest)) => {
                    let rest_w = Wedge(w.0 & !(1 << i));
                    let mut out = self.wedge(
                        &self.d_omega[i as usize],
                        &Form::term(Elem::basis(AMono::one()), rest_w),
                    );
                    if !rest.is_empty() {
                        out.add_scaled(
                            &self.wedge(&Form::omega(i), &self.d_word(rest_w)),
                            &FieldElem::from_int(-1),
                        );
                    }
                    out
                }
            })
        })
    }

    fn d_mono(&self, m: &AMono, w: Wedge) -> Arc<Form> {
        self.d_memo.get_or_insert_with(&(*m, w), || {
            let x = Elem::basis(*m);
            let mut out = Form::zero();
            for i in 0..4u8 {
                let y = act_left(&self.tables.x[i as usize], &x);
                if y.is_zero() {
                    continue;
                }
                let mut word = vec![i];
                word.extend(w.indices());
                for (v, c) in self.omega_rules.reduce(&word).iter() {
                    out.add_term(*v, &y.scale(c));
                }
            }
            if w.degree() > 0 && !self.d_omega.is_empty() {
                out.add_assign(&self.mul_left(&x, &self.d_word(w)));
            }
            Arc::new(out)
        })
    }

    /// The exterior derivative.
    pub fn d(&self, f: &Form) -> Form {
        let mut out = Form::zero();
        for (w, x) in f.iter() {
            for (m, c) in x.iter() {
                out.add_scaled(&self.d_mono(m, *w), c);
            }
        }
        out
    }

    /// Δ_L(x ω_W) = x_(1) ⊗ x_(2) ω_W.
    pub fn coact_left(&self, f: &Form) -> LeftCoacted {
        let mut out = Elem::zero();
        for (w, x) in f.iter() {
            for ((x1, x2), c) in coproduct(x).iter() {
                out.add_term((*x1, *x2, *w), c.clone());
            }
        }
        out
    }

    fn coact_mono(&self, m: &AMono, w: Wedge) -> Arc<RightCoacted> {
        self.coact_memo.get_or_insert_with(&(*m, w), || {
            // Δ_R(ω_{w1} ⋯ ω_{wk}) = ω_{j1} ⋯ ω_{jk} ⊗ J_{j1 w1} ⋯ J_{jk wk}
            let mut state: TensorForm = BTreeMap::from([(Vec::new(), Elem::basis(AMono::one()))]);
            for wi in w.indices() {
                let mut next = TensorForm::new();
                for (word, y) in &state {
                    for j in 0..4u8 {
                        let jj = &self.tables.j[j as usize][wi as usize];
                        if jj.is_zero() {
                            continue;
                        }
                        let mut key = word.clone();
                        key.push(j);
                        add_into(&mut next, key, &mul(y, jj));
                    }
                }
                state = next;
            }
            let mut out = Elem::zero();
            for ((m1, m2), c) in coproduct(&Elem::basis(*m)).iter() {
                for (word, y) in &state {
                    let right = mul(&Elem::basis(*m2), y);
                    for (v, d) in self.omega_rules.reduce(word).iter() {
                        let cd = c * d;
                        for (r, e) in right.iter() {
                            out.add_term((*m1, *v, *r), &cd * e);
                        }
                    }
                }
            }
            Arc::new(out)
        })
    }

    /// Δ_R, extended from Δ_R(ω_i) = ω_j ⊗ J_ji as a comodule algebra map.
    pub fn coact_right(&self, f: &Form) -> RightCoacted {
        let mut out = Elem::zero();
        for (w, x) in f.iter() {
            for (m, c) in x.iter() {
                out.add_scaled(&self.coact_mono(m, *w), c);
            }
        }
        out
    }

    /// `h ⊳ α = α_(0) <h, α_(1)>`.
    pub fn act_h(&self, h: &HElem, f: &Form) -> Form {
        let mut out = Form::zero();
        for (w, x) in f.iter() {
            for (m, c) in x.iter() {
                for ((m1, v, r), e) in self.coact_mono(m, *w).iter() {
                    let p = pair(h, &Elem::basis(*r));
                    if !p.is_zero() {
                        out.add_term(*v, &Elem::term(&(&p * e) * c, *m1));
                    }
                }
            }
        }
        out
    }

    /// `α ⊲ h = <h, α_(−1)> α_(0)`; left-invariant forms are untouched.
    pub fn act_h_right(&self, f: &Form, h: &HElem) -> Form {
        let mut out = Form::zero();
        for (w, x) in f.iter() {
            out.add_term(*w, &act_right(x, h));
        }
        out
    }

    /// L_i = X_i ⊳.
    pub fn lie(&self, i: u8, f: &Form) -> Form {
        self.act_h(&self.tables.x[i as usize], f)
    }

    /// L_ij = f_ij ⊳.
    pub fn lie_f(&self, i: u8, j: u8, f: &Form) -> Form {
        self.act_h(&self.tables.f[i as usize][j as usize], f)
    }

    /// i_k(ω_W): i_k(ω_{w1} ∧ ρ) = L_{w1 k}(ρ) − ω_{w1} ∧ i_k(ρ).
    fn inner_word(&self, k: u8, w: Wedge) -> Arc<Form> {
        self.inner_memo.get_or_insert_with(&(k, w), || {
            let idx = w.indices();
            Arc::new(match idx.first() {
                None => Form::zero(),
                Some(&i) => {
                    let rest = Form::term(Elem::basis(AMono::one()), Wedge(w.0 & !(1 << i)));
                    let mut out = self.lie_f(i, k, &rest);
                    let tail = self.inner_word(k, Wedge(w.0 & !(1 << i)));
                    out.add_scaled(
                        &self.wedge(&Form::omega(i), &tail),
                        &FieldElem::from_int(-1),
                    );
                    out
                }
            })
        })
    }

    /// Left inner derivative i_k, left A-linear with i_k(ω_j) = δ_kj.
    pub fn inner(&self, k: u8, f: &Form) -> Form {
        let mut out = Form::zero();
        for (w, x) in f.iter() {
            out.add_assign(&self.mul_left(x, &self.inner_word(k, *w)));
        }
        out
    }

    /// L^R_i = ⊲ R_i.
    pub fn lie_right(&self, i: u8, f: &Form) -> Form {
        self.act_h_right(f, &self.r[i as usize])
    }

    /// L^R_ij = ⊲ S^{-1}(f_ij).
    pub fn lie_right_f(&self, i: u8, j: u8, f: &Form) -> Form {
        self.act_h_right(f, &self.sinv_f[i as usize][j as usize])
    }

    pub fn eta(&self, i: u8) -> &Form {
        &self.eta[i as usize]
    }

    /// η_K as a left-normal form.
    pub fn eta_word(&self, w: Wedge) -> Arc<Form> {
        self.eta_word_memo.get_or_insert_with(&w, || {
            let mut acc = Form::scalar(Elem::basis(AMono::one()));
            for i in self.eta_rules.word_of(w) {
                acc = self.wedge(&acc, &self.eta[i as usize]);
            }
            Arc::new(acc)
        })
    }

    fn to_eta_mono(&self, m: &AMono, w: Wedge) -> Arc<EtaForm> {
        self.to_eta_memo.get_or_insert_with(&(*m, w), || {
            // y ω_k = Σ_i y η_i J_ik and y η_i = η_j (y ⊲ S^{-1}(f_ij))
            let mut state: TensorForm = BTreeMap::from([(Vec::new(), Elem::basis(*m))]);
            for k in w.indices() {
                let mut next = TensorForm::new();
                for (word, y) in &state {
                    for i in 0..4usize {
                        let jik = &self.tables.j[i][k as usize];
                        if jik.is_zero() {
                            continue;
                        }
                        for j in 0..4u8 {
                            let g = &self.sinv_f[i][j as usize];
                            if g.is_zero() {
                                continue;
                            }
                            let moved = act_right(y, g);
                            if moved.is_zero() {
                                continue;
                            }
                            let mut key = word.clone();
                            key.push(j);
                            add_into(&mut next, key, &mul(&moved, jik));
                        }
                    }
                }
                state = next;
            }
            let mut out = EtaForm::default();
            for (word, y) in &state {
                for (v, c) in self.eta_rules.reduce(word).iter() {
                    out.add_term(*v, &y.scale(c));
                }
            }
            Arc::new(out)
        })
    }

    /// Expansion on the right-invariant basis.
    pub fn to_eta(&self, f: &Form) -> EtaForm {
        let mut out = EtaForm::default();
        for (w, x) in f.iter() {
            for (m, c) in x.iter() {
                for (v, y) in self.to_eta_mono(m, *w).iter() {
                    out.add_term(*v, &y.scale(c));
                }
            }
        }
        out
    }

    pub fn from_eta(&self, e: &EtaForm) -> Form {
        let mut out = Form::zero();
        for (w, y) in e.iter() {
            out.add_assign(&self.form_times_a(&self.eta_word(*w), y));
        }
        out
    }

    /// i^R_j(η_{k1} ∧ ρ) = δ_{k1 j} ρ − σ^{lj}_{m k1} η_l ∧ i^R_m(ρ).
    fn inner_right_eta_word(&self, j: u8, w: Wedge) -> Normal {
        self.inner_eta_memo.get_or_insert_with(&(j, w), || {
            let word = self.eta_rules.word_of(w);
            let Some((&k1, _)) = word.split_first() else {
                return Arc::new(Vec::new());
            };
            let rest = Wedge(w.0 & !(1 << k1));
            let mut acc: BTreeMap<Wedge, FieldElem> = BTreeMap::new();
            if k1 == j {
                acc.insert(rest, FieldElem::one());
            }
            for m in 0..4u8 {
                let inner = self.inner_right_eta_word(m, rest);
                for l in 0..4u8 {
                    let s = self.tables.sigma(m, k1, l, j);
                    if s.is_zero() {
                        continue;
                    }
                    for (v, c) in inner.iter() {
                        let mut next = vec![l];
                        next.extend(self.eta_rules.word_of(*v));
                        for (u, e) in self.eta_rules.reduce(&next).iter() {
                            *acc.entry(*u).or_insert_with(FieldElem::zero) -= &(&(s * c) * e);
                        }
                    }
                }
            }
            Arc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
        })
    }

    pub fn inner_right_eta(&self, j: u8, e: &EtaForm) -> EtaForm {
        let mut out = EtaForm::default();
        for (w, y) in e.iter() {
            for (v, c) in self.inner_right_eta_word(j, *w).iter() {
                out.add_term(*v, &y.scale(c));
            }
        }
        out
    }

    /// Right inner derivative, computed on the η-expansion.
    pub fn inner_right(&self, j: u8, f: &Form) -> Form {
        self.from_eta(&self.inner_right_eta(j, &self.to_eta(f)))
    }

    /// Right inner derivative computed directly on ω-monomials from its
    /// Leibniz rule, with i^R_k(ω_i) = J_ki. Used as a cross-check.
    pub fn inner_right_via_omega(&self, j: u8, f: &Form) -> Form {
        let mut out = Form::zero();
        for (w, x) in f.iter() {
            for k in 0..4u8 {
                let y = act_right(x, &self.sinv_f[k as usize][j as usize]);
                if y.is_zero() {
                    continue;
                }
                out.add_assign(&self.mul_left(&y, &self.inner_right_omega_word(k, *w)));
            }
        }
        out
    }

    fn inner_right_omega_word(&self, k: u8, w: Wedge) -> Form {
        let idx = w.indices();
        let Some(&i) = idx.first() else {
            return Form::zero();
        };
        let rest = Wedge(w.0 & !(1 << i));
        let mut out = Form::term(self.tables.j[k as usize][i as usize].clone(), rest);
        let tail = self.inner_right_omega_word(k, rest);
        out.add_scaled(
            &self.wedge(&Form::omega(i), &tail),
            &FieldElem::from_int(-1),
        );
        out
    }

    /// Product in Γ^∧ ⊗ A.
    pub fn right_coacted_mul(&self, x: &RightCoacted, y: &RightCoacted) -> RightCoacted {
        let mut out = Elem::zero();
        for ((m1, v1, r1), c1) in x.iter() {
            for ((m2, v2, r2), c2) in y.iter() {
                let form = self.wedge(
                    &Form::term(Elem::basis(*m1), *v1),
                    &Form::term(Elem::basis(*m2), *v2),
                );
                let right = mul(&Elem::basis(*r1), &Elem::basis(*r2));
                let c = c1 * c2;
                for (v, a) in form.iter() {
                    for (m, d) in a.iter() {
                        let cd = &c * d;
                        for (r, e) in right.iter() {
                            out.add_term((*m, *v, *r), &cd * e);
                        }
                    }
                }
            }
        }
        out
    }

    /// Product in A ⊗ Γ^∧.
    pub fn left_coacted_mul(&self, x: &LeftCoacted, y: &LeftCoacted) -> LeftCoacted {
        let mut out = Elem::zero();
        for ((l1, m1, v1), c1) in x.iter() {
            for ((l2, m2, v2), c2) in y.iter() {
                let left = mul(&Elem::basis(*l1), &Elem::basis(*l2));
                let form = self.wedge(
                    &Form::term(Elem::basis(*m1), *v1),
                    &Form::term(Elem::basis(*m2), *v2),
                );
                let c = c1 * c2;
                for (l, d) in left.iter() {
                    let cd = &c * d;
                    for (v, a) in form.iter() {
                        for (m, e) in a.iter() {
                            out.add_term((*l, *m, *v), &cd * e);
                        }
                    }
                }
            }
        }
        out
    }

    /// (id ⊗ ε) of a right coaction.
    pub fn right_counit(&self, x: &RightCoacted) -> Form {
        let mut out = Form::zero();
        for ((m, v, r), c) in x.iter() {
            let e = counit(&Elem::basis(*r));
            if !e.is_zero() {
                out.add_term(*v, &Elem::term(&e * c, *m));
            }
        }
        out
    }

    /// (ε ⊗ id) of a left coaction.
    pub fn left_counit(&self, x: &LeftCoacted) -> Form {
        let mut out = Form::zero();
        for ((l, m, v), c) in x.iter() {
            let e = counit(&Elem::basis(*l));
            if !e.is_zero() {
                out.add_term(*v, &Elem::term(&e * c, *m));
            }
        }
        out
    }
}

fn quads() -> impl Iterator<Item = (u8, u8, u8, u8)> {
    (0..256u32).map(|n| {
        (
            (n >> 6) as u8 & 3,
            (n >> 4) as u8 & 3,
            (n >> 2) as u8 & 3,
            n as u8 & 3,
        )
    })
}
