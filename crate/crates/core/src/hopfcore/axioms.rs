use std::fmt::Display;

use rayon::prelude::*;

use super::elem::Elem;
use super::ops::{antipode_with, coproduct, counit, mul, HopfMonomial};
use super::{AMono, AlgebraId, HMono};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfReport {
    pub algebra: AlgebraId,
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

type Triple<M> = Elem<(M, M, M)>;

fn delta_left<M: HopfMonomial>(x: &Elem<(M, M)>) -> Triple<M> {
    let mut out = Elem::zero();
    for ((a, b), c) in x.iter() {
        for ((a1, a2), d) in coproduct(&Elem::basis(a.clone())).iter() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c * d);
        }
    }
    out
}

fn delta_right<M: HopfMonomial>(x: &Elem<(M, M)>) -> Triple<M> {
    let mut out = Elem::zero();
    for ((a, b), c) in x.iter() {
        for ((b1, b2), d) in coproduct(&Elem::basis(b.clone())).iter() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c * d);
        }
    }
    out
}

fn first_failure<M: HopfMonomial + Display>(
    monos: &[M],
    check: impl Fn(&M) -> bool + Sync,
) -> Option<String> {
    monos
        .par_iter()
        .find_first(|m| !check(m))
        .map(|m| m.to_string())
}

fn record(name: &str, witness: Option<String>) -> AxiomCheck {
    AxiomCheck {
        name: name.to_string(),
        passed: witness.is_none(),
        witness,
    }
}

/// Hopf axioms with a caller-supplied antipode table on generators.
pub fn verify_hopf_axioms_with<M: HopfMonomial + Display>(
    degree_bound: u32,
    s_table: &(dyn Fn(&M) -> Elem<M> + Sync),
    s_inv_table: &(dyn Fn(&M) -> Elem<M> + Sync),
) -> HopfReport {
    let monos = M::monomials_up_to(degree_bound);
    let unit = Elem::basis(M::unit());
    let s = |x: &Elem<M>| antipode_with(x, s_table);
    let s_inv = |x: &Elem<M>| antipode_with(x, s_inv_table);
    let mut checks = Vec::new();

    checks.push(record(
        "coassociativity",
        first_failure(&monos, |m| {
            let d = coproduct(&Elem::basis(m.clone()));
            delta_left(&d) == delta_right(&d)
        }),
    ));
    checks.push(record(
        "counit",
        first_failure(&monos, |m| {
            let x = Elem::basis(m.clone());
            let d = coproduct(&x);
            let mut left = Elem::zero();
            let mut right = Elem::zero();
            for ((a, b), c) in d.iter() {
                let ea = counit(&Elem::basis(a.clone()));
                let eb = counit(&Elem::basis(b.clone()));
                left.add_term(b.clone(), &ea * c);
                right.add_term(a.clone(), &eb * c);
            }
            left == x && right == x
        }),
    ));
    checks.push(record(
        "antipode",
        first_failure(&monos, |m| {
            let x = Elem::basis(m.clone());
            let eps = unit.scale(&counit(&x));
            let mut left = Elem::zero();
            let mut right = Elem::zero();
            for ((a, b), c) in coproduct(&x).iter() {
                let (a, b) = (Elem::basis(a.clone()), Elem::basis(b.clone()));
                left.add_scaled(&mul(&s(&a), &b), c);
                right.add_scaled(&mul(&a, &s(&b)), c);
            }
            left == eps && right == eps
        }),
    ));
    checks.push(record(
        "antipode-inverse",
        first_failure(&monos, |m| {
            let x = Elem::basis(m.clone());
            s(&s_inv(&x)) == x && s_inv(&s(&x)) == x
        }),
    ));
    let pairs: Vec<(M, M)> = monos
        .iter()
        .flat_map(|x| monos.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let anti = pairs
        .par_iter()
        .find_first(|(x, y)| {
            let (x, y) = (Elem::basis(x.clone()), Elem::basis(y.clone()));
            s(&mul(&x, &y)) != mul(&s(&y), &s(&x))
        })
        .map(|(x, y)| format!("{} , {}", x, y));
    checks.push(record("antipode-antihomomorphism", anti));
    let hom = pairs
        .par_iter()
        .find_first(|(x, y)| {
            let (x, y) = (Elem::basis(x.clone()), Elem::basis(y.clone()));
            coproduct(&mul(&x, &y)) != super::ops::mul_tensor(&coproduct(&x), &coproduct(&y))
        })
        .map(|(x, y)| format!("{} , {}", x, y));
    checks.push(record("coproduct-homomorphism", hom));
    let counit_hom = pairs
        .par_iter()
        .find_first(|(x, y)| {
            let (x, y) = (Elem::basis(x.clone()), Elem::basis(y.clone()));
            counit(&mul(&x, &y)) != &counit(&x) * &counit(&y)
        })
        .map(|(x, y)| format!("{} , {}", x, y));
    checks.push(record("counit-homomorphism", counit_hom));
    HopfReport {
        algebra: M::ALGEBRA,
        checks,
    }
}

fn run<M: HopfMonomial + Display>(degree_bound: u32) -> HopfReport {
    verify_hopf_axioms_with::<M>(
        degree_bound,
        &|g: &M| M::gen_antipode(g, false),
        &|g: &M| M::gen_antipode(g, true),
    )
}

/// Coassociativity, counit, antipode and S∘S^{-1} on every PBW monomial up to
/// `degree_bound`, plus multiplicativity of Δ, ε and anti-multiplicativity of S
/// on all pairs of such monomials.
pub fn verify_hopf_axioms(algebra: AlgebraId, degree_bound: u32) -> HopfReport {
    match algebra {
        AlgebraId::A => run::<AMono>(degree_bound),
        AlgebraId::H => run::<HMono>(degree_bound),
    }
}
