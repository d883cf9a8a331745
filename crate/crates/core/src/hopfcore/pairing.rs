use std::collections::BTreeMap;

use once_cell::sync::Lazy;

use super::elem::Elem;
use super::ops::coproduct;
use super::{AElem, AMono, HElem, HMono};
use crate::memo::Memo;
use crate::qfield::{FieldElem, LaurentPoly};

static PAIR: Lazy<Memo<(HMono, AMono), FieldElem>> = Lazy::new(Memo::new);
static LEFT: Lazy<Memo<(HMono, AMono), AElem>> = Lazy::new(Memo::new);
static RIGHT: Lazy<Memo<(HMono, AMono), AElem>> = Lazy::new(Memo::new);

type State = BTreeMap<u32, LaurentPoly>;

/// `s` exponent of the K^{±1} weights around position `p`: K^{-1} acts on
/// the factors before `p` and K on those after it.
fn ladder_weight(bits: u32, n: usize, p: usize) -> i32 {
    let mut w = 0;
    for r in 0..n {
        let one = (bits >> r) & 1 == 1;
        if r < p {
            w += if one { -1 } else { 1 };
        } else if r > p {
            w += if one { 1 } else { -1 };
        }
    }
    w
}

/// Applies E (`raise`) or F on the n-fold tensor power of the spin-1/2
/// representation, with Δ^{(n)}(E) = Σ_p K^{-1}⊗…⊗E⊗K⊗…⊗K.
fn apply_ladder(state: &State, n: usize, raise: bool) -> State {
    let mut out: State = BTreeMap::new();
    for (&bits, c) in state {
        for p in 0..n {
            let set = (bits >> p) & 1 == 1;
            if set == raise {
                continue;
            }
            let nb = bits ^ (1 << p);
            let v = c.shift(ladder_weight(bits, n, p));
            let e = out.entry(nb).or_insert_with(LaurentPoly::zero);
            *e = e.add(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn compute_pair(h: &HMono, x: &AMono) -> FieldElem {
    let word = x.matrix_word();
    let n = word.len();
    let (fa, kb, ec) = h.exponents();
    let row: u32 = word
        .iter()
        .enumerate()
        .map(|(p, &(r, _))| (r as u32) << p)
        .sum();
    let col: u32 = word
        .iter()
        .enumerate()
        .map(|(p, &(_, c))| (c as u32) << p)
        .sum();
    if col.count_ones() + ec != row.count_ones() + fa {
        return FieldElem::zero();
    }
    let mut state: State = BTreeMap::from([(col, LaurentPoly::one())]);
    for _ in 0..ec {
        state = apply_ladder(&state, n, true);
    }
    let ones = row.count_ones() as i32;
    let zeros = n as i32 - ones;
    for _ in 0..fa {
        state = apply_ladder(&state, n, false);
    }
    let Some(v) = state.get(&row) else {
        return FieldElem::zero();
    };
    // K^b is diagonal; its eigenvalue on the final basis vector equals the one
    // on the intermediate vector since F changes weights uniformly per step.
    let k_exp = kb * (ones - zeros + 2 * fa as i32);
    let (_, _, m) = x.exponents();
    let sign = if m % 2 == 1 { -1 } else { 1 };
    let val = FieldElem::from_poly(v.shift(k_exp)) * FieldElem::from_int(sign);
    &val * &FieldElem::q_pow(-(m as i32))
}

/// `<h, x>` on basis monomials, through the spin-1/2 representation:
/// a, a*, c, c* are the matrix entries u11, u22, u21 and -q^{-1} u12.
pub fn pair_mono(h: &HMono, x: &AMono) -> FieldElem {
    PAIR.get_or_insert_with(&(*h, *x), || compute_pair(h, x))
}

pub fn pair(h: &HElem, x: &AElem) -> FieldElem {
    let mut acc = FieldElem::zero();
    for (hm, hc) in h.iter() {
        for (xm, xc) in x.iter() {
            let v = pair_mono(hm, xm);
            if !v.is_zero() {
                acc += &(&(&v * hc) * xc);
            }
        }
    }
    acc
}

/// `<g ⊗ h, x ⊗ y> = <g, x><h, y>`.
pub fn pair_tensor(h: &Elem<(HMono, HMono)>, x: &Elem<(AMono, AMono)>) -> FieldElem {
    let mut acc = FieldElem::zero();
    for ((h1, h2), hc) in h.iter() {
        for ((x1, x2), xc) in x.iter() {
            let a = pair_mono(h1, x1);
            if a.is_zero() {
                continue;
            }
            let b = pair_mono(h2, x2);
            if !b.is_zero() {
                acc += &(&(&(&a * &b) * hc) * xc);
            }
        }
    }
    acc
}

fn left_mono(h: &HMono, x: &AMono) -> AElem {
    LEFT.get_or_insert_with(&(*h, *x), || {
        let mut out = Elem::zero();
        for ((x1, x2), c) in coproduct(&Elem::basis(*x)).iter() {
            let p = pair_mono(h, x2);
            if !p.is_zero() {
                out.add_term(*x1, &p * c);
            }
        }
        out
    })
}

fn right_mono(h: &HMono, x: &AMono) -> AElem {
    RIGHT.get_or_insert_with(&(*h, *x), || {
        let mut out = Elem::zero();
        for ((x1, x2), c) in coproduct(&Elem::basis(*x)).iter() {
            let p = pair_mono(h, x1);
            if !p.is_zero() {
                out.add_term(*x2, &p * c);
            }
        }
        out
    })
}

/// `h ⊳ x = x_(1) <h, x_(2)>`.
pub fn act_left(h: &HElem, x: &AElem) -> AElem {
    let mut out = Elem::zero();
    for (hm, hc) in h.iter() {
        for (xm, xc) in x.iter() {
            out.add_scaled(&left_mono(hm, xm), &(hc * xc));
        }
    }
    out
}

/// `x ⊲ h = <h, x_(1)> x_(2)`.
pub fn act_right(x: &AElem, h: &HElem) -> AElem {
    let mut out = Elem::zero();
    for (hm, hc) in h.iter() {
        for (xm, xc) in x.iter() {
            out.add_scaled(&right_mono(hm, xm), &(hc * xc));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_table() {
        let k = HMono::k_pow(1);
        let ki = HMono::k_pow(-1);
        assert_eq!(pair_mono(&k, &AMono::a()), FieldElem::s_pow(-1));
        assert_eq!(pair_mono(&ki, &AMono::a()), FieldElem::s_pow(1));
        assert_eq!(pair_mono(&k, &AMono::a_star()), FieldElem::s_pow(1));
        assert_eq!(pair_mono(&HMono::e(), &AMono::c()), FieldElem::one());
        assert_eq!(
            pair_mono(&HMono::f(), &AMono::c_star()),
            -FieldElem::q_pow(-1)
        );
        assert!(pair_mono(&HMono::e(), &AMono::a()).is_zero());
        assert!(pair_mono(&HMono::e(), &AMono::c_star()).is_zero());
        assert!(pair_mono(&HMono::f(), &AMono::c()).is_zero());
    }

    #[test]
    fn k_squared_on_a_star_squared() {
        let v = pair_mono(&HMono::k_pow(2), &AMono::new(true, 2, 0, 0));
        assert_eq!(v, FieldElem::q_pow(2));
    }

    #[test]
    fn right_action_of_k_on_a() {
        let r = act_right(&Elem::basis(AMono::a()), &Elem::basis(HMono::k_pow(1)));
        assert_eq!(r, Elem::term(FieldElem::s_pow(-1), AMono::a()));
    }
}
