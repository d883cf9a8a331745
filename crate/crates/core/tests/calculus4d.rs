use cartanq::calculus4d::*;
use cartanq::hopfcore::{coproduct, counit, mul, AMono, Elem, HElem, HMono};
use cartanq::qfield::{in_span, FMatrix, FieldElem};
use cartanq::Error;
use num_bigint::BigInt;
use num_rational::BigRational;

const M: u8 = 0;
const P: u8 = 1;
const Z: u8 = 2;
const O: u8 = 3;

fn int(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

fn q(e: i32) -> FieldElem {
    FieldElem::q_pow(e)
}

fn vector(entries: &[((u8, u8), FieldElem)]) -> Vec<FieldElem> {
    let mut v = vec![FieldElem::zero(); 16];
    for ((i, j), c) in entries {
        v[pair_index(*i, *j)] = c.clone();
    }
    v
}

fn outer<T: cartanq::hopfcore::Monomial>(x: &Elem<T>, y: &Elem<T>) -> Elem<(T, T)> {
    let mut out = Elem::zero();
    for (m, c) in x.iter() {
        for (n, d) in y.iter() {
            out.add_term((m.clone(), n.clone()), c * d);
        }
    }
    out
}

fn passes(checks: &[cartanq::report::Check], id: &str) -> bool {
    checks
        .iter()
        .find(|c| c.id == id)
        .unwrap_or_else(|| panic!("no check {}", id))
        .passed
}

#[test]
fn sigma_and_structure_constants() {
    let t = build_tables().unwrap();
    assert_eq!(*t.sigma(M, Z, M, O), &int(1) + &q(2));
    assert!(t.sigma(M, M, M, M).is_one());
    assert_eq!(*t.c(M, M, Z), -q(-1));
    assert_eq!(*t.c(M, Z, M), q(-1));
    let nonzero = t.sigma_flat().iter().filter(|x| !x.is_zero()).count();
    let listed = golden_sigma(&t.fixtures)
        .unwrap()
        .iter()
        .filter(|x| !x.is_zero())
        .count();
    assert_eq!(nonzero, listed);
    let checks = verify_golden_tables(t);
    assert!(checks.iter().all(|c| c.passed), "{:?}", checks);
}

#[test]
fn t_matrix_rows() {
    let t = build_tables().unwrap();
    for k in 0..4 {
        for l in 0..4 {
            let want = if (k, l) == (M, P) {
                int(1)
            } else {
                FieldElem::zero()
            };
            assert_eq!(*t.t(P, M, k, l), want, "t^(+-)_({}{})", k, l);
            assert!(t.t(M, M, k, l).is_zero());
        }
    }
    assert_eq!(t.t.pivots.len(), 10);
    assert!(t.t.pivots.iter().all(|&(i, j)| i >= j));
    let checks = verify_t(t);
    assert!(passes(&checks, "t.eq-t"));
    assert!(passes(&checks, "t.odd-relations.computed-in-golden"));
    assert!(passes(&checks, "t.odd-relations.golden-in-computed"));
}

#[test]
fn kernels() {
    let t = build_tables().unwrap();
    assert_eq!(t.s_ker.len(), 10);
    assert_eq!(t.t_ker.len(), 10);
    let lam = FieldElem::lambda();
    let zz = vector(&[((Z, Z), int(1)), ((P, M), -(&lam * &(&q(1) + &q(-1))))]);
    assert!(in_span(&t.s_ker, &zz));
    let x = vector(&[
        ((M, O), q(-2)),
        ((O, M), int(1)),
        ((Z, M), -(&int(1) + &q(-2))),
    ]);
    assert!(in_span(&t.t_ker, &x));
    // ω_-⊗ω_+ alone is not a relation
    assert!(!in_span(&t.s_ker, &vector(&[((M, P), int(1))])));

    let s = BigRational::new(BigInt::from(3), BigInt::from(2));
    let one_minus = FMatrix::identity(16).sub(&t.sigma_matrix());
    assert_eq!(numeric_nullity(&one_minus, &s).unwrap(), 10);
    assert_eq!(numeric_nullity(&one_minus.transpose(), &s).unwrap(), 10);
    assert!(verify_kernels(t).iter().all(|c| c.passed));
}

#[test]
fn commutator_and_antipode_of_f() {
    let t = build_tables().unwrap();
    let mut want = t.x[Z as usize].scale(&(&q(1) + &q(-1)));
    want.add_scaled(&t.x[O as usize], &-FieldElem::lambda());
    assert_eq!(commutator(t, M, P), want);

    let sf = SfTable::new(t);
    assert_eq!(
        *sf.get(Z, M),
        mul(&t.f[O as usize][O as usize], &t.f[Z as usize][M as usize]).scale(&int(-1))
    );
    let mut zz = HElem::zero();
    for j in 0..4 {
        zz.add_assign(&mul(sf.get(Z, j), &t.f[j as usize][Z as usize]));
    }
    assert_eq!(zz, Elem::basis(HMono::one()));
    assert!(verify_sf_matrices(t).iter().all(|c| c.passed));
}

#[test]
fn f_and_j_are_matrix_coalgebras() {
    let t = build_tables().unwrap();
    for i in 0..4 {
        for j in 0..4 {
            let mut df = Elem::zero();
            let mut dj = Elem::zero();
            for k in 0..4 {
                df.add_assign(&outer(&t.f[i][k], &t.f[k][j]));
                dj.add_assign(&outer(&t.j[i][k], &t.j[k][j]));
            }
            assert_eq!(coproduct(&t.f[i][j]), df);
            assert_eq!(coproduct(&t.j[i][j]), dj);
            let delta = if i == j { int(1) } else { FieldElem::zero() };
            assert_eq!(counit(&t.f[i][j]), delta);
            assert_eq!(counit(&t.j[i][j]), delta);
        }
    }
    for j in [M, P, Z] {
        assert!(t.f[O as usize][j as usize].is_zero());
    }
    assert_eq!(
        t.j[M as usize][M as usize],
        Elem::basis(AMono::new(true, 2, 0, 0))
    );
}

#[test]
fn fundamental_identities() {
    let t = build_tables().unwrap();
    let checks = verify_fundamental_identities(t);
    for id in [
        "identities.quat.xx",
        "identities.quat.xf",
        "identities.quat.ff",
        "identities.quat.cff",
        "identities.ja",
        "identities.coJ",
        "identities.coJf",
        "identities.neco",
        "identities.qLe.left",
        "identities.qLe.right",
        "identities.idS.x",
        "identities.idS.f",
        "identities.ids",
        "identities.ids3",
        "identities.ids4.antipode-image",
        "identities.xj",
        "identities.commutators",
    ] {
        assert!(passes(&checks, id), "{}", id);
    }
}

#[test]
fn corrupted_sigma_fixture_is_reported() {
    let mut fx = Fixtures::builtin();
    let text = fx.get("sigma").unwrap().replace("-- -- : 1", "-- -- : 2");
    fx.set("sigma", text).unwrap();
    match build_tables_from(&fx) {
        Err(Error::TableMismatch { table, index, .. }) => {
            assert_eq!(table, "sigma");
            assert!(index.contains("--"));
        }
        other => panic!("expected a table mismatch, got {:?}", other.map(|_| ())),
    }
    let t = CalculusTables::compute(&fx).unwrap();
    let checks = verify_golden_tables(&t);
    let c = checks.iter().find(|c| c.id == "tables.sigma").unwrap();
    assert!(!c.passed && c.witness.is_some());
}

#[test]
fn table_exports_are_stable() {
    let t = build_tables().unwrap();
    for name in TABLE_NAMES {
        let a = table_json(t, name).unwrap();
        assert_eq!(a["table"], *name);
        assert_eq!(a, table_json(t, name).unwrap());
        assert_eq!(table_text(t, name).unwrap(), table_text(t, name).unwrap());
    }
    assert!(matches!(table_json(t, "nope"), Err(Error::Unknown { .. })));
}
