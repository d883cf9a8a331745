use cartanq::calculus4d::build_tables;
use cartanq::exterior::*;
use cartanq::hopfcore::{act_left, antipode, AElem, AMono, Elem};
use cartanq::qfield::FieldElem;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const M: u8 = 0;
const P: u8 = 1;
const Z: u8 = 2;
const O: u8 = 3;

fn ext() -> Exterior<'static> {
    Exterior::new(build_tables().unwrap()).unwrap()
}

fn fun(m: AMono) -> Form {
    Form::scalar(Elem::basis(m))
}

fn w2(i: u8, j: u8) -> Wedge {
    Wedge((1 << i) | (1 << j))
}

#[test]
fn wedge_examples() {
    let e = ext();
    let om = Form::omega;
    assert!(e.wedge(&om(M), &om(M)).is_zero());
    let lam = FieldElem::lambda();
    let qq = &FieldElem::q() + &FieldElem::q_pow(-1);
    assert_eq!(
        e.wedge(&om(Z), &om(Z)),
        e.wedge(&om(P), &om(M)).scale(&(&lam * &qq))
    );

    // ω_- ∧ (a ω_+) = (f_{-j} ⊳ a) ω_j ∧ ω_+
    let t = e.tables();
    let a = Elem::basis(AMono::a());
    let lhs = e.wedge(&om(M), &e.mul_left(&a, &om(P)));
    let mut rhs = Form::zero();
    for j in 0..4u8 {
        rhs.add_assign(&e.mul_left(
            &act_left(&t.f[M as usize][j as usize], &a),
            &e.wedge(&om(j), &om(P)),
        ));
    }
    assert_eq!(lhs, rhs);
    // f_{--} acts on a by a scalar, and ω_-∧ω_+ is a normal word
    assert!(!lhs.coeff(w2(M, P)).is_zero());
}

#[test]
fn coactions() {
    let e = ext();
    let t = e.tables();
    let mut want = RightCoacted::zero();
    for k in 0..4u8 {
        for (m, c) in t.j[k as usize][M as usize].iter() {
            want.add_term((AMono::one(), Wedge::single(k), *m), c.clone());
        }
    }
    assert_eq!(e.coact_right(&Form::omega(M)), want);
    assert!(t.j[O as usize][M as usize].is_zero());

    let mut want = LeftCoacted::zero();
    want.add_term(
        (AMono::one(), AMono::one(), Wedge::single(O)),
        FieldElem::one(),
    );
    assert_eq!(e.coact_left(&Form::omega(O)), want);

    for i in 0..4 {
        let eta = e.eta(i);
        let mut want = RightCoacted::zero();
        for (w, x) in eta.iter() {
            for (m, c) in x.iter() {
                want.add_term((*m, *w, AMono::one()), c.clone());
            }
        }
        assert_eq!(e.coact_right(eta), want, "eta {}", i);
    }
}

#[test]
fn eta_zero_expansion() {
    let e = ext();
    let t = e.tables();
    let mut want = Form::zero();
    for k in 0..4u8 {
        let s: AElem = antipode(&t.j[k as usize][O as usize], false);
        want.add_assign(&e.form_times_a(&Form::omega(k), &s));
    }
    assert_eq!(*e.eta(O), want);
}

#[test]
fn differentials() {
    let e = ext();
    let t = e.tables();
    let q = FieldElem::q();
    let a = Elem::basis(AMono::a());
    let mut want = Form::zero();
    want.add_term(
        Wedge::single(Z),
        &a.scale(&(&q * &(&q + &FieldElem::one()).inv().unwrap())),
    );
    want.add_term(Wedge::single(P), &Elem::basis(AMono::c_star()).scale(&-&q));
    want.add_term(Wedge::single(O), &a.scale(&t.c0));
    assert_eq!(e.d(&fun(AMono::a())), want);
    assert!(e.d(&fun(AMono::one())).is_zero());

    // ω_- = c* da* - q a* dc*, so dω_- = dc*∧da* - q da*∧dc*
    let (da_s, dc_s) = (e.d(&fun(AMono::a_star())), e.d(&fun(AMono::c_star())));
    let mut want = e.wedge(&dc_s, &da_s);
    want.add_scaled(&e.wedge(&da_s, &dc_s), &-&q);
    assert_eq!(e.d(&Form::omega(M)), want);
    for m in [AMono::a(), AMono::a_star(), AMono::c(), AMono::c_star()] {
        assert!(e.d(&e.d(&fun(m))).is_zero());
    }
}

#[test]
fn dimensions() {
    let e = ext();
    let dims: Vec<usize> = (0..=4).map(|d| e.dimension(d)).collect();
    assert_eq!(&dims[..3], &[1, 4, 6]);
    assert_eq!(dims, vec![1, 4, 6, 4, 1]);
}

#[test]
fn exterior_checks_pass() {
    let e = ext();
    let checks = verify_exterior(&e, 2, 11);
    let failed: Vec<_> = checks.iter().filter(|c| !c.passed).collect();
    assert!(failed.is_empty(), "{:?}", failed);
    assert!(verify_fun_f_r(&e).passed);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn graded_leibniz_and_d_squared(seed in any::<u64>(), d1 in 0u32..=2, d2 in 0u32..=2) {
        let e = ext();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (x, y) = (random_form(&mut rng, d1), random_form(&mut rng, d2));
        let lhs = e.d(&e.wedge(&x, &y));
        let mut rhs = e.wedge(&e.d(&x), &y);
        let sign = if d1 % 2 == 1 { -1 } else { 1 };
        rhs.add_scaled(&e.wedge(&x, &e.d(&y)), &FieldElem::from_int(sign));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(e.d(&e.d(&x)).is_zero());
    }

    #[test]
    fn wedge_is_associative(seed in any::<u64>(), d in prop::array::uniform3(0u32..=2)) {
        let e = ext();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_form(&mut rng, d[0]);
        let y = random_form(&mut rng, d[1]);
        let z = random_form(&mut rng, d[2]);
        prop_assert_eq!(e.wedge(&e.wedge(&x, &y), &z), e.wedge(&x, &e.wedge(&y, &z)));
    }

    #[test]
    fn eta_round_trip(seed in any::<u64>(), d in 0u32..=3) {
        let e = ext();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_form(&mut rng, d);
        prop_assert_eq!(e.from_eta(&e.to_eta(&x)), x);
    }
}
