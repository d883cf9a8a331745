use std::sync::Arc;

use super::elem::{Elem, Monomial};
use super::AlgebraId;
use crate::memo::Memo;
use crate::qfield::FieldElem;

/// Memo tables attached to one algebra.
pub struct HopfCaches<M: Monomial> {
    pub(crate) mul: Memo<(M, M), Arc<Elem<M>>>,
    pub(crate) coproduct: Memo<M, Arc<Elem<(M, M)>>>,
    pub(crate) antipode: Memo<(M, bool), Arc<Elem<M>>>,
    pub(crate) star: Memo<M, Arc<Elem<M>>>,
}

impl<M: Monomial> Default for HopfCaches<M> {
    fn default() -> Self {
        HopfCaches {
            mul: Memo::new(),
            coproduct: Memo::new(),
            antipode: Memo::new(),
            star: Memo::new(),
        }
    }
}

/// PBW monomial of a Hopf algebra given by generators.
///
/// `split_first` peels one generator `g` off a monomial `m` so that
/// `g * rest == m` holds exactly; all structure maps extend from generators
/// through this factorization.
pub trait HopfMonomial: Monomial {
    const ALGEBRA: AlgebraId;

    fn unit() -> Self;
    fn is_unit(&self) -> bool;
    fn degree(&self) -> u32;
    /// Normal-form product of two monomials, uncached.
    fn mul_raw(a: &Self, b: &Self) -> Elem<Self>;
    fn split_first(&self) -> Option<(Self, Self)>;
    fn gen_coproduct(g: &Self) -> Elem<(Self, Self)>;
    fn gen_counit(g: &Self) -> FieldElem;
    fn gen_antipode(g: &Self, inverse: bool) -> Elem<Self>;
    fn gen_star(g: &Self) -> Elem<Self>;
    fn generators() -> Vec<Self>;
    /// All PBW monomials of total degree at most `d`.
    fn monomials_up_to(d: u32) -> Vec<Self>;
    fn caches() -> &'static HopfCaches<Self>;

    fn mul_mono(a: &Self, b: &Self) -> Arc<Elem<Self>> {
        if a.is_unit() {
            return Arc::new(Elem::basis(b.clone()));
        }
        if b.is_unit() {
            return Arc::new(Elem::basis(a.clone()));
        }
        Self::caches()
            .mul
            .get_or_insert_with(&(a.clone(), b.clone()), || Arc::new(Self::mul_raw(a, b)))
    }
}

pub fn mul<M: HopfMonomial>(x: &Elem<M>, y: &Elem<M>) -> Elem<M> {
    let mut out = Elem::zero();
    for (mx, cx) in x.iter() {
        for (my, cy) in y.iter() {
            out.add_scaled(&M::mul_mono(mx, my), &(cx * cy));
        }
    }
    out
}

pub fn pow<M: HopfMonomial>(x: &Elem<M>, n: u32) -> Elem<M> {
    let mut acc = Elem::basis(M::unit());
    for _ in 0..n {
        acc = mul(&acc, x);
    }
    acc
}

/// Product in the tensor square, `(x1⊗x2)(y1⊗y2) = x1y1 ⊗ x2y2`.
pub fn mul_tensor<M: HopfMonomial, N: HopfMonomial>(
    x: &Elem<(M, N)>,
    y: &Elem<(M, N)>,
) -> Elem<(M, N)> {
    let mut out = Elem::zero();
    for ((x1, x2), cx) in x.iter() {
        for ((y1, y2), cy) in y.iter() {
            let left = M::mul_mono(x1, y1);
            let right = N::mul_mono(x2, y2);
            let c = cx * cy;
            for (l, cl) in left.iter() {
                let cl = &c * cl;
                for (r, cr) in right.iter() {
                    out.add_term((l.clone(), r.clone()), &cl * cr);
                }
            }
        }
    }
    out
}

pub fn tensor_flip<M: Monomial, N: Monomial>(x: &Elem<(M, N)>) -> Elem<(N, M)> {
    x.iter()
        .map(|((a, b), c)| ((b.clone(), a.clone()), c.clone()))
        .collect()
}

fn coproduct_mono<M: HopfMonomial>(m: &M) -> Arc<Elem<(M, M)>> {
    M::caches().coproduct.get_or_insert_with(m, || {
        Arc::new(match m.split_first() {
            None => Elem::basis((M::unit(), M::unit())),
            Some((g, rest)) if rest.is_unit() => M::gen_coproduct(&g),
            Some((g, rest)) => mul_tensor(&M::gen_coproduct(&g), &coproduct_mono(&rest)),
        })
    })
}

pub fn coproduct<M: HopfMonomial>(x: &Elem<M>) -> Elem<(M, M)> {
    x.map_linear(|m| (*coproduct_mono(m)).clone())
}

pub fn counit<M: HopfMonomial>(x: &Elem<M>) -> FieldElem {
    x.map_scalar(|m| {
        let mut acc = FieldElem::one();
        let mut cur = m.clone();
        while let Some((g, rest)) = cur.split_first() {
            acc *= &M::gen_counit(&g);
            if acc.is_zero() {
                break;
            }
            cur = rest;
        }
        acc
    })
}

/// Anti-homomorphic extension of an arbitrary generator table. Used directly
/// by the axiom checker so that a corrupted table can be supplied.
pub fn antipode_with<M: HopfMonomial>(x: &Elem<M>, table: &dyn Fn(&M) -> Elem<M>) -> Elem<M> {
    x.map_linear(|m| {
        let mut acc = Elem::basis(M::unit());
        let mut cur = m.clone();
        while let Some((g, rest)) = cur.split_first() {
            acc = mul(&table(&g), &acc);
            cur = rest;
        }
        acc
    })
}

fn antipode_mono<M: HopfMonomial>(m: &M, inverse: bool) -> Arc<Elem<M>> {
    M::caches()
        .antipode
        .get_or_insert_with(&(m.clone(), inverse), || {
            Arc::new(match m.split_first() {
                None => Elem::basis(M::unit()),
                Some((g, rest)) => mul(
                    &antipode_mono(&rest, inverse),
                    &M::gen_antipode(&g, inverse),
                ),
            })
        })
}

/// S, or S^{-1} when `inverse` is set.
pub fn antipode<M: HopfMonomial>(x: &Elem<M>, inverse: bool) -> Elem<M> {
    x.map_linear(|m| (*antipode_mono(m, inverse)).clone())
}

fn star_mono<M: HopfMonomial>(m: &M) -> Arc<Elem<M>> {
    M::caches().star.get_or_insert_with(m, || {
        Arc::new(match m.split_first() {
            None => Elem::basis(M::unit()),
            Some((g, rest)) => mul(&star_mono(&rest), &M::gen_star(&g)),
        })
    })
}

/// Star involution. All coefficients are real rational functions of s, so
/// the conjugate-linear extension acts trivially on them.
pub fn star<M: HopfMonomial>(x: &Elem<M>) -> Elem<M> {
    x.map_linear(|m| (*star_mono(m)).clone())
}
