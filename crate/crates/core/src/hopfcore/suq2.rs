use std::cmp::Ordering;
use std::fmt;

use once_cell::sync::Lazy;

use super::elem::Elem;
use super::ops::{HopfCaches, HopfMonomial};
use super::AlgebraId;
use crate::qfield::FieldElem;

/// PBW monomial of O(SU_q(2)): `a^k c^l (c*)^m`, or `(a*)^k c^l (c*)^m`
/// with `k >= 1` when `star` is set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct AMono {
    star: bool,
    k: u32,
    l: u32,
    m: u32,
}

impl AMono {
    pub fn new(star: bool, k: u32, l: u32, m: u32) -> Self {
        AMono {
            star: star && k > 0,
            k,
            l,
            m,
        }
    }

    pub fn one() -> Self {
        Self::new(false, 0, 0, 0)
    }

    pub fn a() -> Self {
        Self::new(false, 1, 0, 0)
    }

    pub fn a_star() -> Self {
        Self::new(true, 1, 0, 0)
    }

    pub fn c() -> Self {
        Self::new(false, 0, 1, 0)
    }

    pub fn c_star() -> Self {
        Self::new(false, 0, 0, 1)
    }

    pub fn is_star(&self) -> bool {
        self.star
    }

    /// Exponents `(k, l, m)`.
    pub fn exponents(&self) -> (u32, u32, u32) {
        (self.k, self.l, self.m)
    }

    /// Letters of the monomial as entries `(row, col)` of the fundamental
    /// corepresentation, together with the number of `c*` letters.
    pub(crate) fn matrix_word(&self) -> Vec<(u8, u8)> {
        let head = if self.star { (1, 1) } else { (0, 0) };
        let mut w = vec![head; self.k as usize];
        w.extend(std::iter::repeat_n((1, 0), self.l as usize));
        w.extend(std::iter::repeat_n((0, 1), self.m as usize));
        w
    }

    fn key(&self) -> (u32, bool, u32, u32, u32) {
        (self.k + self.l + self.m, self.star, self.k, self.l, self.m)
    }
}

impl PartialOrd for AMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for AMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let mut push = |name: &str, e: u32| match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{}^{}", name, e)),
        };
        push(if self.star { "a!" } else { "a" }, self.k);
        push("c", self.l);
        push("c!", self.m);
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

/// Coefficients of `prod_j (1 - q^{e_j} N)` as a polynomial in `N`.
fn expand_factors(exps: &[i32]) -> Vec<FieldElem> {
    let mut poly = vec![FieldElem::one()];
    for &e in exps {
        let f = -FieldElem::q_pow(e);
        let mut next = vec![FieldElem::zero(); poly.len() + 1];
        for (r, c) in poly.iter().enumerate() {
            next[r] += c;
            next[r + 1] += &(c * &f);
        }
        poly = next;
    }
    poly
}

fn mul_a(x: &AMono, y: &AMono) -> Elem<AMono> {
    // Move c^l c*^m of x past the a-type head of y.
    let nx = (x.l + x.m) as i32;
    let ky = y.k as i32;
    let base_exp = if y.k == 0 {
        0
    } else if y.star {
        nx * ky
    } else {
        -nx * ky
    };
    let l = x.l + y.l;
    let m = x.m + y.m;
    // Expansion of (head x)(head y) as sum_r coef_r N^r Z^n.
    let (coeffs, star, n): (Vec<FieldElem>, bool, u32) = if x.k == 0 {
        (vec![FieldElem::one()], y.star, y.k)
    } else if y.k == 0 || x.star == y.star {
        (vec![FieldElem::one()], x.star, x.k + y.k)
    } else {
        let (k1, k2) = (x.k as i32, y.k as i32);
        let p = k1.min(k2);
        let exps: Vec<i32> = if !x.star {
            (0..p).map(|j| 2 * (k1 - j)).collect()
        } else {
            (0..p).map(|j| -2 * (k1 - 1 - j)).collect()
        };
        let star = if k1 > k2 { x.star } else { y.star };
        (expand_factors(&exps), star, (k1 - k2).unsigned_abs())
    };
    let mut out = Elem::zero();
    for (r, c) in coeffs.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let r = r as u32;
        // N^r Z^n = q^{-+2rn} Z^n N^r
        let swap = 2 * (r * n) as i32;
        let e = base_exp
            + if n == 0 {
                0
            } else if star {
                swap
            } else {
                -swap
            };
        out.add_term(AMono::new(star, n, l + r, m + r), &c * &FieldElem::q_pow(e));
    }
    out
}

static CACHES: Lazy<HopfCaches<AMono>> = Lazy::new(HopfCaches::default);

fn tensor(terms: &[(FieldElem, AMono, AMono)]) -> Elem<(AMono, AMono)> {
    terms
        .iter()
        .map(|(c, x, y)| ((*x, *y), c.clone()))
        .collect()
}

impl HopfMonomial for AMono {
    const ALGEBRA: AlgebraId = AlgebraId::A;

    fn unit() -> Self {
        AMono::one()
    }

    fn is_unit(&self) -> bool {
        self.k == 0 && self.l == 0 && self.m == 0
    }

    fn degree(&self) -> u32 {
        self.k + self.l + self.m
    }

    fn mul_raw(a: &Self, b: &Self) -> Elem<Self> {
        mul_a(a, b)
    }

    fn split_first(&self) -> Option<(Self, Self)> {
        if self.k > 0 {
            let g = if self.star {
                AMono::a_star()
            } else {
                AMono::a()
            };
            Some((g, AMono::new(self.star, self.k - 1, self.l, self.m)))
        } else if self.l > 0 {
            Some((AMono::c(), AMono::new(false, 0, self.l - 1, self.m)))
        } else if self.m > 0 {
            Some((AMono::c_star(), AMono::new(false, 0, 0, self.m - 1)))
        } else {
            None
        }
    }

    fn gen_coproduct(g: &Self) -> Elem<(Self, Self)> {
        let one = FieldElem::one();
        let mq = -FieldElem::q();
        let (a, as_, c, cs) = (AMono::a(), AMono::a_star(), AMono::c(), AMono::c_star());
        if *g == a {
            tensor(&[(one, a, a), (mq, cs, c)])
        } else if *g == as_ {
            tensor(&[(one, as_, as_), (mq, c, cs)])
        } else if *g == c {
            tensor(&[(one.clone(), c, a), (one, as_, c)])
        } else if *g == cs {
            tensor(&[(one.clone(), cs, as_), (one, a, cs)])
        } else {
            unreachable!("not a generator of A: {g}")
        }
    }

    fn gen_counit(g: &Self) -> FieldElem {
        if g.k > 0 {
            FieldElem::one()
        } else {
            FieldElem::zero()
        }
    }

    fn gen_antipode(g: &Self, inverse: bool) -> Elem<Self> {
        let (a, as_, c, cs) = (AMono::a(), AMono::a_star(), AMono::c(), AMono::c_star());
        let e = if inverse { -1 } else { 1 };
        if *g == a {
            Elem::basis(as_)
        } else if *g == as_ {
            Elem::basis(a)
        } else if *g == c {
            Elem::term(-FieldElem::q_pow(e), c)
        } else if *g == cs {
            Elem::term(-FieldElem::q_pow(-e), cs)
        } else {
            unreachable!("not a generator of A: {g}")
        }
    }

    fn gen_star(g: &Self) -> Elem<Self> {
        let (a, as_, c, cs) = (AMono::a(), AMono::a_star(), AMono::c(), AMono::c_star());
        Elem::basis(if *g == a {
            as_
        } else if *g == as_ {
            a
        } else if *g == c {
            cs
        } else {
            c
        })
    }

    fn generators() -> Vec<Self> {
        vec![AMono::a(), AMono::a_star(), AMono::c(), AMono::c_star()]
    }

    fn monomials_up_to(d: u32) -> Vec<Self> {
        let mut out = Vec::new();
        for k in 0..=d {
            for l in 0..=d - k {
                for m in 0..=d - k - l {
                    out.push(AMono::new(false, k, l, m));
                    if k > 0 {
                        out.push(AMono::new(true, k, l, m));
                    }
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

    fn g(m: AMono) -> Elem<AMono> {
        Elem::basis(m)
    }

    #[test]
    fn unitarity_relations() {
        // a a* = 1 - q^2 c c*, a* a = 1 - c c*
        let cc = AMono::new(false, 0, 1, 1);
        let aas = mul(&g(AMono::a()), &g(AMono::a_star()));
        let expect =
            Elem::from_terms([(AMono::one(), FieldElem::one()), (cc, -FieldElem::q_pow(2))]);
        assert_eq!(aas, expect);
        let asa = mul(&g(AMono::a_star()), &g(AMono::a()));
        let expect = Elem::from_terms([
            (AMono::one(), FieldElem::one()),
            (cc, FieldElem::from_int(-1)),
        ]);
        assert_eq!(asa, expect);
        assert_eq!(aas.to_string(), "1 - s^4 * c * c!");
    }

    #[test]
    fn q_commutations() {
        // ac = q ca, c* c = c c*, a c* = q c* a
        let ac = mul(&g(AMono::a()), &g(AMono::c()));
        let ca = mul(&g(AMono::c()), &g(AMono::a()));
        assert_eq!(ac, ca.scale(&FieldElem::q()));
        let csc = mul(&g(AMono::c_star()), &g(AMono::c()));
        assert_eq!(csc, g(AMono::new(false, 0, 1, 1)));
        let acs = mul(&g(AMono::a()), &g(AMono::c_star()));
        let csa = mul(&g(AMono::c_star()), &g(AMono::a()));
        assert_eq!(acs, csa.scale(&FieldElem::q()));
    }

    #[test]
    fn antipode_and_star_examples() {
        let s2 = antipode(&antipode(&g(AMono::c()), false), false);
        assert_eq!(s2, Elem::term(FieldElem::q_pow(2), AMono::c()));
        // Starring ac = q ca gives c* a* = q a* c*, so (ac)* = q a* c*.
        let ac = mul(&g(AMono::a()), &g(AMono::c()));
        let expect = Elem::term(FieldElem::q(), AMono::new(true, 1, 0, 1));
        assert_eq!(star(&ac), expect);
        assert_eq!(mul(&g(AMono::c_star()), &g(AMono::a_star())), expect);
    }
}
