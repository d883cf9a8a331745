use std::cmp::Ordering;
use std::fmt;

use once_cell::sync::Lazy;

use super::elem::Elem;
use super::ops::{mul, HopfCaches, HopfMonomial};
use super::AlgebraId;
use crate::qfield::FieldElem;

/// PBW monomial `F^f K^k E^e` of U_q(su(2)).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct HMono {
    f: u32,
    k: i32,
    e: u32,
}

impl HMono {
    pub fn new(f: u32, k: i32, e: u32) -> Self {
        HMono { f, k, e }
    }

    pub fn one() -> Self {
        Self::new(0, 0, 0)
    }

    pub fn e() -> Self {
        Self::new(0, 0, 1)
    }

    pub fn f() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn k_pow(k: i32) -> Self {
        Self::new(0, k, 0)
    }

    /// Exponents `(f, k, e)`.
    pub fn exponents(&self) -> (u32, i32, u32) {
        (self.f, self.k, self.e)
    }

    fn key(&self) -> (u32, u32, i32, u32) {
        (
            self.f + self.k.unsigned_abs() + self.e,
            self.f,
            self.k,
            self.e,
        )
    }
}

impl PartialOrd for HMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for HMono {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.f {
            0 => {}
            1 => parts.push("F".to_string()),
            n => parts.push(format!("F^{}", n)),
        }
        match self.k {
            0 => {}
            1 => parts.push("K".to_string()),
            n => parts.push(format!("K^{}", n)),
        }
        match self.e {
            0 => {}
            1 => parts.push("E".to_string()),
            n => parts.push(format!("E^{}", n)),
        }
        if parts.is_empty() {
            write!(fm, "1")
        } else {
            write!(fm, "{}", parts.join(" * "))
        }
    }
}

/// `EF` rewritten as `FE + (K^2 - K^-2)/λ`.
fn ef_straightened() -> Elem<HMono> {
    let inv_l = FieldElem::lambda().inv().expect("λ is nonzero");
    Elem::from_terms([
        (HMono::new(1, 0, 1), FieldElem::one()),
        (HMono::k_pow(2), inv_l.clone()),
        (HMono::k_pow(-2), -inv_l),
    ])
}

fn mul_h(x: &HMono, y: &HMono) -> Elem<HMono> {
    if x.e == 0 {
        // F^a K^b F^a' K^b' E^c' with K^b F^a' = q^{-b a'} F^a' K^b
        let exp = -x.k * y.f as i32;
        return Elem::term(FieldElem::q_pow(exp), HMono::new(x.f + y.f, x.k + y.k, y.e));
    }
    if y.f == 0 {
        // E^c K^b' = q^{-c b'} K^b' E^c
        let exp = -(x.e as i32) * y.k;
        return Elem::term(FieldElem::q_pow(exp), HMono::new(x.f, x.k + y.k, x.e + y.e));
    }
    let left = Elem::basis(HMono::new(x.f, x.k, x.e - 1));
    let right = Elem::basis(HMono::new(y.f - 1, y.k, y.e));
    mul(&mul(&left, &ef_straightened()), &right)
}

static CACHES: Lazy<HopfCaches<HMono>> = Lazy::new(HopfCaches::default);

impl HopfMonomial for HMono {
    const ALGEBRA: AlgebraId = AlgebraId::H;

    fn unit() -> Self {
        HMono::one()
    }

    fn is_unit(&self) -> bool {
        self.f == 0 && self.k == 0 && self.e == 0
    }

    fn degree(&self) -> u32 {
        self.f + self.k.unsigned_abs() + self.e
    }

    fn mul_raw(a: &Self, b: &Self) -> Elem<Self> {
        mul_h(a, b)
    }

    fn split_first(&self) -> Option<(Self, Self)> {
        if self.f > 0 {
            Some((HMono::f(), HMono::new(self.f - 1, self.k, self.e)))
        } else if self.k != 0 {
            let s = self.k.signum();
            Some((HMono::k_pow(s), HMono::new(0, self.k - s, self.e)))
        } else if self.e > 0 {
            Some((HMono::e(), HMono::new(0, 0, self.e - 1)))
        } else {
            None
        }
    }

    fn gen_coproduct(g: &Self) -> Elem<(Self, Self)> {
        let one = FieldElem::one();
        let (k, ki) = (HMono::k_pow(1), HMono::k_pow(-1));
        if g.k != 0 {
            Elem::basis((*g, *g))
        } else {
            // X ⊗ K + K^{-1} ⊗ X for X = E, F
            Elem::from_terms([((*g, k), one.clone()), ((ki, *g), one)])
        }
    }

    fn gen_counit(g: &Self) -> FieldElem {
        if g.k != 0 {
            FieldElem::one()
        } else {
            FieldElem::zero()
        }
    }

    fn gen_antipode(g: &Self, inverse: bool) -> Elem<Self> {
        let sgn = if inverse { -1 } else { 1 };
        if g.k != 0 {
            Elem::basis(HMono::k_pow(-g.k))
        } else if g.e > 0 {
            Elem::term(-FieldElem::q_pow(sgn), *g)
        } else {
            Elem::term(-FieldElem::q_pow(-sgn), *g)
        }
    }

    fn gen_star(g: &Self) -> Elem<Self> {
        Elem::basis(HMono::new(g.e, g.k, g.f))
    }

    fn generators() -> Vec<Self> {
        vec![HMono::e(), HMono::f(), HMono::k_pow(1), HMono::k_pow(-1)]
    }

    fn monomials_up_to(d: u32) -> Vec<Self> {
        let mut out = Vec::new();
        let d = d as i32;
        for f in 0..=d {
            for k in -(d - f)..=(d - f) {
                for e in 0..=(d - f - k.abs()) {
                    out.push(HMono::new(f as u32, k, e as u32));
                }
            }
        }
        out.sort();
        out
    }

    fn caches() -> &'static HopfCaches<Self> {
        &CACHES
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfcore::{antipode, mul, star};

    fn g(m: HMono) -> Elem<HMono> {
        Elem::basis(m)
    }

    #[test]
    fn ef_commutator() {
        let ef = mul(&g(HMono::e()), &g(HMono::f()));
        assert_eq!(ef, ef_straightened());
        let fe = mul(&g(HMono::f()), &g(HMono::e()));
        let comm = &ef - &fe;
        let expect = Elem::from_terms([
            (HMono::k_pow(2), FieldElem::lambda().inv().unwrap()),
            (HMono::k_pow(-2), -FieldElem::lambda().inv().unwrap()),
        ]);
        assert_eq!(comm, expect);
    }

    #[test]
    fn k_conjugation() {
        // K E K^{-1} = q E, K F K^{-1} = q^{-1} F
        let k = g(HMono::k_pow(1));
        let ki = g(HMono::k_pow(-1));
        let kek = mul(&mul(&k, &g(HMono::e())), &ki);
        assert_eq!(kek, g(HMono::e()).scale(&FieldElem::q()));
        let kfk = mul(&mul(&k, &g(HMono::f())), &ki);
        assert_eq!(kfk, g(HMono::f()).scale(&FieldElem::q_pow(-1)));
    }

    #[test]
    fn antipode_round_trip_and_star() {
        let e = g(HMono::e());
        assert_eq!(antipode(&antipode(&e, true), false), e);
        assert_eq!(star(&e), g(HMono::f()));
    }
}
