use std::fmt;
use std::sync::Arc;

use super::algebra::Cartan;
use super::elem::{CartanElem, DELTA};
use super::relations::Gen;
use crate::error::{Error, Result};
use crate::exterior::{Exterior, Form, Wedge};
use crate::hopfcore::{antipode, AMono, Elem, HElem, HMono};
use crate::memo::Memo;
use crate::qfield::FieldElem;
use crate::syntax::index_of;

/// Operator kinds shared by the left and right representations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum OpKind {
    Lie(u8),
    FAction(u8, u8),
    Inner(u8),
    Diff,
}

impl OpKind {
    pub fn degree(&self) -> i32 {
        match self {
            OpKind::Lie(_) | OpKind::FAction(..) => 0,
            OpKind::Inner(_) => -1,
            OpKind::Diff => 1,
        }
    }

    /// Parses `L-`, `Lf[i][j]`, `i0`, `d`.
    pub fn parse(name: &str) -> Result<OpKind> {
        let bad = || Error::Unknown {
            kind: "operator".into(),
            name: name.into(),
        };
        let idx = |c: Option<char>| c.and_then(index_of).ok_or_else(bad);
        let chars: Vec<char> = name.chars().collect();
        match chars.as_slice() {
            ['d'] => Ok(OpKind::Diff),
            ['L', 'f', '[', i, ']', '[', j, ']'] => {
                Ok(OpKind::FAction(idx(Some(*i))?, idx(Some(*j))?))
            }
            ['L', i] => Ok(OpKind::Lie(idx(Some(*i))?)),
            ['i', i] => Ok(OpKind::Inner(idx(Some(*i))?)),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |i: u8| crate::syntax::INDEX_CHARS[i as usize];
        match *self {
            OpKind::Lie(i) => write!(f, "L{}", c(i)),
            OpKind::FAction(i, j) => write!(f, "Lf[{}][{}]", c(i), c(j)),
            OpKind::Inner(i) => write!(f, "i{}", c(i)),
            OpKind::Diff => f.write_str("d"),
        }
    }
}

/// L_i, L_ij, i_k or d.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LeftOp(pub OpKind);

/// L^R_i, L^R_ij, i^R_k or d.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RightOp(pub OpKind);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
enum Piece {
    Letter(u8),
    H(HMono),
}

/// λ and ρ as operators on Γ^∧.
///
/// λ is the homomorphism X_i ↦ L_i, f_ij ↦ L_ij, ξ_i ↦ i_i, δ ↦ d, with
/// h ↦ h ⊳ on H. The right representation ρ is an anti-homomorphism; it is
/// evaluated as ρ_x = ρ'_{S(x)} where the homomorphism ρ' sends h to
/// ⊲ S^{-1}(h), ξ_j to −i^R_j and δ to d.
pub struct Reps<'a> {
    ext: &'a Exterior<'a>,
    alg: &'a Cartan<'a>,
    left_memo: Memo<(Piece, AMono, Wedge), Arc<Form>>,
    right_memo: Memo<(Piece, AMono, Wedge), Arc<Form>>,
}

impl<'a> Reps<'a> {
    pub fn new(ext: &'a Exterior<'a>, alg: &'a Cartan<'a>) -> Self {
        Reps {
            ext,
            alg,
            left_memo: Memo::new(),
            right_memo: Memo::new(),
        }
    }

    pub fn exterior(&self) -> &'a Exterior<'a> {
        self.ext
    }

    pub fn algebra(&self) -> &'a Cartan<'a> {
        self.alg
    }

    pub fn apply_left(&self, op: LeftOp, f: &Form) -> Form {
        match op.0 {
            OpKind::Lie(i) => self.ext.lie(i, f),
            OpKind::FAction(i, j) => self.ext.lie_f(i, j, f),
            OpKind::Inner(k) => self.ext.inner(k, f),
            OpKind::Diff => self.ext.d(f),
        }
    }

    pub fn apply_right(&self, op: RightOp, f: &Form) -> Form {
        match op.0 {
            OpKind::Lie(i) => self.ext.lie_right(i, f),
            OpKind::FAction(i, j) => self.ext.lie_right_f(i, j, f),
            OpKind::Inner(k) => self.ext.inner_right(k, f),
            OpKind::Diff => self.ext.d(f),
        }
    }

    fn piece_left(&self, p: Piece, m: &AMono, w: Wedge) -> Arc<Form> {
        self.left_memo.get_or_insert_with(&(p, *m, w), || {
            let f = Form::term(Elem::basis(*m), w);
            Arc::new(match p {
                Piece::Letter(DELTA) => self.ext.d(&f),
                Piece::Letter(k) => self.ext.inner(k, &f),
                Piece::H(h) => self.ext.act_h(&Elem::basis(h), &f),
            })
        })
    }

    fn piece_right(&self, p: Piece, m: &AMono, w: Wedge) -> Arc<Form> {
        self.right_memo.get_or_insert_with(&(p, *m, w), || {
            let f = Form::term(Elem::basis(*m), w);
            Arc::new(match p {
                Piece::Letter(DELTA) => self.ext.d(&f),
                Piece::Letter(k) => self.ext.inner_right(k, &f).neg(),
                Piece::H(h) => self.ext.act_h_right(&f, &antipode(&Elem::basis(h), true)),
            })
        })
    }

    fn apply_piece(&self, right: bool, p: Piece, f: &Form) -> Form {
        let mut out = Form::zero();
        for (w, x) in f.iter() {
            for (m, c) in x.iter() {
                let r = if right {
                    self.piece_right(p, m, *w)
                } else {
                    self.piece_left(p, m, *w)
                };
                out.add_scaled(&r, c);
            }
        }
        out
    }

    fn apply_h(&self, right: bool, h: &HElem, f: &Form) -> Form {
        let mut out = Form::zero();
        for (m, c) in h.iter() {
            if *m == HMono::one() {
                out.add_scaled(f, c);
            } else {
                out.add_scaled(&self.apply_piece(right, Piece::H(*m), f), c);
            }
        }
        out
    }

    fn apply_elem(&self, right: bool, x: &CartanElem, f: &Form) -> Form {
        let mut out = Form::zero();
        for (w, h) in x.iter() {
            let mut g = f.clone();
            for &l in w.letters().iter().rev() {
                g = self.apply_piece(right, Piece::Letter(l), &g);
            }
            out.add_assign(&self.apply_h(right, h, &g));
        }
        out
    }

    /// λ_x(α).
    pub fn lambda(&self, x: &CartanElem, f: &Form) -> Form {
        self.apply_elem(false, x, f)
    }

    /// ρ'_x(α) = ρ_{S^{-1}(x)}(α).
    pub fn rho_prime(&self, x: &CartanElem, f: &Form) -> Form {
        self.apply_elem(true, x, f)
    }

    /// ρ_x(α), the right representation.
    pub fn rho(&self, x: &CartanElem, f: &Form) -> Form {
        self.rho_prime(&self.alg.antipode(x, false), f)
    }

    pub fn lambda_gen(&self, g: &Gen, f: &Form) -> Form {
        match *g {
            Gen::Xi(k) => self.apply_piece(false, Piece::Letter(k), f),
            Gen::Delta => self.apply_piece(false, Piece::Letter(DELTA), f),
            _ => self.apply_h(false, &gen_even(self.alg, g), f),
        }
    }

    pub fn rho_prime_gen(&self, g: &Gen, f: &Form) -> Form {
        match *g {
            Gen::Xi(k) => self.apply_piece(true, Piece::Letter(k), f),
            Gen::Delta => self.apply_piece(true, Piece::Letter(DELTA), f),
            _ => self.apply_h(true, &gen_even(self.alg, g), f),
        }
    }

    /// Applies a generator word, rightmost factor first.
    pub fn word(&self, right: bool, w: &[Gen], f: &Form) -> Form {
        let mut g = f.clone();
        for x in w.iter().rev() {
            g = if right {
                self.rho_prime_gen(x, &g)
            } else {
                self.lambda_gen(x, &g)
            };
        }
        g
    }
}

fn gen_even(alg: &Cartan, g: &Gen) -> HElem {
    let t = alg.tables();
    match *g {
        Gen::X(i) => t.x[i as usize].clone(),
        Gen::F(i, j) => t.f[i as usize][j as usize].clone(),
        _ => HElem::zero(),
    }
}

/// Scalar multiple of 1 as a form.
pub fn scalar_form(c: FieldElem) -> Form {
    Form::scalar(Elem::term(c, AMono::one()))
}
