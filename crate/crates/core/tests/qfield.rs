use cartanq::qfield::{field_eval, kernel_basis, FMatrix, FieldElem, LaurentPoly};
use cartanq::Error;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -3i64..=3), 0..4)
        .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, rat(c, 1)))))
}

fn elem() -> impl Strategy<Value = FieldElem> {
    (poly(), poly()).prop_map(|(n, d)| {
        let d = if d.is_zero() { LaurentPoly::one() } else { d };
        FieldElem::from_fraction(n, d).expect("nonzero denominator")
    })
}

#[test]
fn lambda_over_itself_and_known_quotients() {
    let q = FieldElem::q();
    let l = FieldElem::lambda();
    assert_eq!(&(&q - &q.inv().unwrap()) + &q.inv().unwrap(), q);
    let lhs = &(&q.pow(-2).unwrap() - &FieldElem::one()) / &l;
    // q^{-2} - 1 = -q^{-1}(q - q^{-1}), so the quotient is -q^{-1}
    assert_eq!(lhs, -q.inv().unwrap());
    assert_eq!(&(&q * &q - &FieldElem::one()) / &l, q);
}

#[test]
fn evaluation_examples() {
    let s = rat(3, 2);
    assert_eq!(field_eval(&FieldElem::q(), &s).unwrap(), rat(9, 4));
    assert_eq!(field_eval(&FieldElem::lambda(), &s).unwrap(), rat(65, 36));
    let inv = FieldElem::lambda().inv().unwrap();
    for p in [rat(1, 1), rat(-1, 1)] {
        assert!(matches!(
            field_eval(&inv, &p),
            Err(Error::PoleAtEvaluationPoint { .. })
        ));
    }
    assert!(matches!(
        FieldElem::zero().inv(),
        Err(Error::DivisionByZero)
    ));
}

#[test]
fn small_kernels() {
    let one = FieldElem::one();
    let zero = FieldElem::zero();
    assert!(kernel_basis(&FMatrix::identity(2)).is_empty());
    assert_eq!(kernel_basis(&FMatrix::zeros(2, 2)).len(), 2);
    let m = FMatrix::from_rows(vec![
        vec![one.clone(), FieldElem::q()],
        vec![FieldElem::q(), &FieldElem::q() * &FieldElem::q()],
    ]);
    let k = kernel_basis(&m);
    assert_eq!(k.len(), 1);
    assert!(m.mul_vec(&k[0]).iter().all(|x| *x == zero));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn inverse_round_trip(a in elem()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn evaluation_is_multiplicative(a in elem(), b in elem(), n in 2i64..7, d in 1i64..5) {
        let s = rat(n, d);
        if let (Ok(x), Ok(y)) = (a.eval(&s), b.eval(&s)) {
            prop_assert_eq!((&a * &b).eval(&s).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).eval(&s).unwrap(), &x + &y);
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated(rows in 1usize..4, cols in 1usize..5, seed in prop::collection::vec(elem(), 16)) {
        let mut m = FMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                // sparse: keep roughly half the entries
                if (r + 2 * c) % 3 != 1 {
                    m.set(r, c, seed[(r * cols + c) % seed.len()].clone());
                }
            }
        }
        let k = kernel_basis(&m);
        prop_assert_eq!(m.rank() + k.len(), cols);
        for v in &k {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(kernel_basis(&m), k);
    }
}
