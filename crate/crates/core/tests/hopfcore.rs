use cartanq::calculus4d::build_tables;
use cartanq::hopfcore::*;
use cartanq::qfield::FieldElem;
use cartanq::Error;
use proptest::prelude::*;

fn int(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

fn a(m: AMono) -> AElem {
    Elem::basis(m)
}

fn h(m: HMono) -> HElem {
    Elem::basis(m)
}

fn outer<M: Monomial>(x: &Elem<M>, y: &Elem<M>) -> Elem<(M, M)> {
    let mut out = Elem::zero();
    for (m, c) in x.iter() {
        for (n, d) in y.iter() {
            out.add_term((m.clone(), n.clone()), c * d);
        }
    }
    out
}

fn random<M: HopfMonomial>(pool: Vec<M>) -> impl Strategy<Value = Elem<M>> {
    let scalars = [int(1), int(-2), FieldElem::q(), FieldElem::s_pow(-1)];
    prop::collection::vec((0..pool.len(), 0..scalars.len()), 1..3).prop_map(move |ts| {
        Elem::from_terms(
            ts.into_iter()
                .map(|(i, c)| (pool[i].clone(), scalars[c].clone())),
        )
    })
}

fn a_elem() -> impl Strategy<Value = AElem> {
    random(AMono::monomials_up_to(2))
}

fn h_elem() -> impl Strategy<Value = HElem> {
    let mut pool = HMono::monomials_up_to(2);
    pool.push(HMono::k_pow(-1));
    pool.push(HMono::new(1, -1, 0));
    random(pool)
}

#[test]
fn products_in_a_and_h() {
    let q = FieldElem::q();
    let mut want = a(AMono::one());
    want.add_term(AMono::new(false, 0, 1, 1), -&(&q * &q));
    assert_eq!(mul(&a(AMono::a()), &a(AMono::a_star())), want);
    assert_eq!(
        mul(&a(AMono::c_star()), &a(AMono::c())),
        mul(&a(AMono::c()), &a(AMono::c_star()))
    );

    let ef = mul(&h(HMono::e()), &h(HMono::f()));
    let mut want = mul(&h(HMono::f()), &h(HMono::e()));
    let lambda_inv = FieldElem::lambda().inv().unwrap();
    want.add_term(HMono::k_pow(2), lambda_inv.clone());
    want.add_term(HMono::k_pow(-2), -lambda_inv);
    assert_eq!(ef, want);
}

#[test]
fn coproduct_counit_antipode_examples() {
    let q = FieldElem::q();
    let mut da = outer(&a(AMono::a()), &a(AMono::a()));
    da.add_scaled(&outer(&a(AMono::c_star()), &a(AMono::c())), &-&q);
    assert_eq!(coproduct(&a(AMono::a())), da);
    assert_eq!(
        coproduct(&a(AMono::one())),
        outer(&a(AMono::one()), &a(AMono::one()))
    );
    let k2 = h(HMono::k_pow(2));
    assert_eq!(coproduct(&k2), outer(&k2, &k2));

    assert!(counit(&mul(&a(AMono::a()), &a(AMono::c()))).is_zero());
    assert!(counit(&pow(&a(AMono::a_star()), 2)).is_one());
    let mut x = h(HMono::k_pow(-2));
    x.add_term(HMono::one(), int(-1));
    assert!(counit(&x).is_zero());

    let c = a(AMono::c());
    assert_eq!(antipode(&c, false), c.scale(&-&q));
    assert_eq!(antipode(&antipode(&c, false), false), c.scale(&(&q * &q)));
    assert_eq!(
        antipode(&antipode(&h(HMono::e()), true), false),
        h(HMono::e())
    );
}

#[test]
fn star_examples() {
    let ac = mul(&a(AMono::a()), &a(AMono::c()));
    // (ac)* = c* a*, and starring ac = q ca gives c* a* = q a* c*
    let c_a = mul(&a(AMono::c_star()), &a(AMono::a_star()));
    assert_eq!(star(&ac), c_a);
    assert_eq!(
        c_a,
        mul(&a(AMono::a_star()), &a(AMono::c_star())).scale(&FieldElem::q())
    );
    assert_eq!(star(&h(HMono::e())), h(HMono::f()));
}

#[test]
fn pairing_and_actions() {
    let q = FieldElem::q();
    assert_eq!(
        pair(&h(HMono::k_pow(1)), &a(AMono::a())),
        FieldElem::s_pow(-1)
    );
    assert_eq!(
        pair(&h(HMono::k_pow(2)), &pow(&a(AMono::a_star()), 2)),
        &q * &q
    );
    assert!(pair(&h(HMono::e()), &a(AMono::a())).is_zero());

    let t = build_tables().unwrap();
    let x = a(AMono::a());
    assert_eq!(act_left(&h(HMono::one()), &x), x);
    assert_eq!(act_right(&x, &h(HMono::one())), x);
    assert_eq!(act_left(&t.x[1], &a(AMono::c())), a(AMono::a_star()));
    let qq = &q * &(&q + &int(1)).inv().unwrap();
    assert_eq!(act_left(&t.x[2], &x), x.scale(&qq));
    assert_eq!(
        act_right(&x, &h(HMono::k_pow(1))),
        x.scale(&FieldElem::s_pow(-1))
    );
}

#[test]
fn mixed_algebras_are_rejected() {
    let x = AlgebraElem::A(a(AMono::a()));
    let y = AlgebraElem::H(h(HMono::e()));
    assert!(matches!(x.multiply(&y), Err(Error::AlgebraMismatch { .. })));
    assert!(matches!(
        AlgebraElem::pair(&x, &y),
        Err(Error::AlgebraMismatch { .. })
    ));
}

#[test]
fn axioms_hold_and_a_corrupted_antipode_is_caught() {
    assert!(verify_hopf_axioms(AlgebraId::A, 2).all_passed());
    assert!(verify_hopf_axioms(AlgebraId::H, 2).all_passed());
    let bad = |g: &AMono| {
        let s = AMono::gen_antipode(g, false);
        if *g == AMono::c() {
            s.scale(&int(2))
        } else {
            s
        }
    };
    let report = verify_hopf_axioms_with::<AMono>(2, &bad, &|g| AMono::gen_antipode(g, true));
    let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed).collect();
    assert!(!failed.is_empty());
    assert!(failed.iter().all(|c| c.witness.is_some()));
}

#[test]
fn quantum_leibniz_on_generators() {
    let t = build_tables().unwrap();
    let gens = [AMono::a(), AMono::a_star(), AMono::c(), AMono::c_star()];
    for i in 0..4 {
        for x in gens {
            for y in gens {
                let (x, y) = (a(x), a(y));
                let lhs = act_left(&t.x[i], &mul(&x, &y));
                let mut rhs = mul(&x, &act_left(&t.x[i], &y));
                for j in 0..4 {
                    rhs.add_assign(&mul(&act_left(&t.x[j], &x), &act_left(&t.f[j][i], &y)));
                }
                assert_eq!(lhs, rhs, "i = {}, x = {}, y = {}", i, x, y);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn associativity(x in a_elem(), y in a_elem(), z in a_elem(), g in h_elem(), k in h_elem(), l in h_elem()) {
        prop_assert_eq!(mul(&mul(&x, &y), &z), mul(&x, &mul(&y, &z)));
        prop_assert_eq!(mul(&mul(&g, &k), &l), mul(&g, &mul(&k, &l)));
    }

    #[test]
    fn coproduct_is_multiplicative(x in a_elem(), y in a_elem(), g in h_elem(), k in h_elem()) {
        prop_assert_eq!(coproduct(&mul(&x, &y)), mul_tensor(&coproduct(&x), &coproduct(&y)));
        prop_assert_eq!(coproduct(&mul(&g, &k)), mul_tensor(&coproduct(&g), &coproduct(&k)));
    }

    #[test]
    fn pairing_duality(g in h_elem(), k in h_elem(), x in a_elem(), y in a_elem()) {
        prop_assert_eq!(pair(&g, &mul(&x, &y)), pair_tensor(&coproduct(&g), &outer(&x, &y)));
        prop_assert_eq!(pair(&mul(&g, &k), &x), pair_tensor(&outer(&g, &k), &coproduct(&x)));
        prop_assert_eq!(pair(&antipode(&g, false), &x), pair(&g, &antipode(&x, false)));
    }

    #[test]
    fn actions_are_actions(g in h_elem(), k in h_elem(), x in a_elem()) {
        prop_assert_eq!(act_left(&g, &act_left(&k, &x)), act_left(&mul(&g, &k), &x));
        prop_assert_eq!(act_right(&act_right(&x, &g), &k), act_right(&x, &mul(&g, &k)));
    }

    #[test]
    fn star_is_an_involution(x in a_elem(), g in h_elem()) {
        prop_assert_eq!(star(&star(&x)), x);
        prop_assert_eq!(star(&star(&g)), g);
    }
}
