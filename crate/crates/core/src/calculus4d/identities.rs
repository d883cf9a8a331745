use super::fixtures::{self, in_fixture};
use super::tables::{pair_name, CalculusTables};
use crate::hopfcore::{
    act_left, act_right, antipode, coproduct, counit, mul, AElem, AMono, Elem, HElem, HMono,
};
use crate::qfield::FieldElem;
use crate::report::Check;
use crate::syntax::{elaborate, parse, Expr, Sym, INDEX_CHARS};

/// All index tuples of length `n`.
pub fn tuples(n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| (0..4u8).map(move |i| [t.clone(), vec![i]].concat()))
            .collect();
    }
    out
}

fn name(t: &[u8]) -> String {
    t.iter().map(|&i| INDEX_CHARS[i as usize]).collect()
}

/// The four generators a, a*, c, c* with their names.
pub fn a_generators() -> Vec<(&'static str, AElem)> {
    vec![
        ("a", Elem::basis(AMono::a())),
        ("a!", Elem::basis(AMono::a_star())),
        ("c", Elem::basis(AMono::c())),
        ("c!", Elem::basis(AMono::c_star())),
    ]
}

fn h_one() -> HElem {
    Elem::basis(HMono::one())
}

fn delta(i: u8, j: u8) -> HElem {
    if i == j {
        h_one()
    } else {
        HElem::zero()
    }
}

/// Cached S(f_ij).
pub struct SfTable(pub Vec<Vec<HElem>>);

impl SfTable {
    pub fn new(t: &CalculusTables) -> Self {
        SfTable(
            t.f.iter()
                .map(|row| row.iter().map(|h| antipode(h, false)).collect())
                .collect(),
        )
    }

    pub fn get(&self, i: u8, j: u8) -> &HElem {
        &self.0[i as usize][j as usize]
    }
}

fn zero_check(id: &str, cases: Vec<Vec<u8>>, residual: impl Fn(&[u8]) -> HElem) -> Check {
    Check::first_failure(id, cases, |c| {
        let r = residual(c);
        (!r.is_zero()).then(|| format!("indices {}: residual {}", name(c), r))
    })
}

/// X_i X_j − σ^{ij}_{kl} X_k X_l.
pub fn commutator(t: &CalculusTables, i: u8, j: u8) -> HElem {
    let mut out = mul(&t.x[i as usize], &t.x[j as usize]);
    for kl in tuples(2) {
        let s = t.sigma(kl[0], kl[1], i, j);
        if !s.is_zero() {
            out.add_scaled(&mul(&t.x[kl[0] as usize], &t.x[kl[1] as usize]), &-s);
        }
    }
    out
}

/// The relation t_{ij}^{rs} f_rn f_sk = f_ir f_js t_{rs}^{nk} and its image
/// under the antipode.
pub fn verify_relt(t: &CalculusTables) -> Vec<Check> {
    let f = |i: u8, j: u8| &t.f[i as usize][j as usize];
    let relt = zero_check("t.relt", tuples(4), |c| {
        let (i, j, n, k) = (c[0], c[1], c[2], c[3]);
        let mut r = HElem::zero();
        for rs in tuples(2) {
            let (a, b) = (rs[0], rs[1]);
            let l = t.t(a, b, i, j);
            if !l.is_zero() {
                r.add_scaled(&mul(f(a, n), f(b, k)), l);
            }
            let rt = t.t(n, k, a, b);
            if !rt.is_zero() {
                r.add_scaled(&mul(f(i, a), f(j, b)), &-rt);
            }
        }
        r
    });
    let sf = SfTable::new(t);
    let st = zero_check("t.st", tuples(4), |c| {
        let (m, n, p, q) = (c[0], c[1], c[2], c[3]);
        let mut r = HElem::zero();
        for ij in tuples(2) {
            let (i, j) = (ij[0], ij[1]);
            let a = t.t(m, n, i, j);
            if !a.is_zero() {
                r.add_scaled(&mul(sf.get(p, j), sf.get(q, i)), a);
            }
            let (l, k) = (ij[0], ij[1]);
            let b = t.t(l, k, q, p);
            if !b.is_zero() {
                r.add_scaled(&mul(sf.get(k, n), sf.get(l, m)), &-b);
            }
        }
        r
    });
    vec![relt, st]
}

/// Identities among the X, f, J data that live in H, or in A for x over
/// the generators.
pub fn verify_fundamental_identities(t: &CalculusTables) -> Vec<Check> {
    let x = |i: u8| &t.x[i as usize];
    let f = |i: u8, j: u8| &t.f[i as usize][j as usize];
    let jm = |i: u8, j: u8| &t.j[i as usize][j as usize];
    let sf = SfTable::new(t);
    let mut out = Vec::new();

    out.push(zero_check("identities.quat.xx", tuples(2), |c| {
        let mut r = commutator(t, c[0], c[1]);
        for k in 0..4 {
            r.add_scaled(x(k), &-t.c(k, c[0], c[1]));
        }
        r
    }));
    out.push(zero_check("identities.quat.ff", tuples(4), |c| {
        let (n, m, p, q) = (c[0], c[1], c[2], c[3]);
        let mut r = HElem::zero();
        for ij in tuples(2) {
            let (i, j) = (ij[0], ij[1]);
            let a = t.sigma(n, m, i, j);
            if !a.is_zero() {
                r.add_scaled(&mul(f(i, p), f(j, q)), a);
            }
            let b = t.sigma(i, j, p, q);
            if !b.is_zero() {
                r.add_scaled(&mul(f(n, i), f(m, j)), &-b);
            }
        }
        r
    }));
    out.push(zero_check("identities.quat.cff", tuples(3), |c| {
        let (i, j, k) = (c[0], c[1], c[2]);
        let mut r = mul(f(i, j), x(k));
        for mn in tuples(2) {
            let (m, n) = (mn[0], mn[1]);
            let a = t.c(i, m, n);
            if !a.is_zero() {
                r.add_scaled(&mul(f(m, j), f(n, k)), a);
            }
            let b = t.sigma(m, n, j, k);
            if !b.is_zero() {
                r.add_scaled(&mul(x(m), f(i, n)), &-b);
            }
        }
        for l in 0..4 {
            r.add_scaled(f(i, l), &-t.c(l, j, k));
        }
        r
    }));
    out.push(zero_check("identities.quat.xf", tuples(3), |c| {
        let (k, n, l) = (c[0], c[1], c[2]);
        let mut r = mul(x(k), f(n, l));
        for ij in tuples(2) {
            let s = t.sigma(ij[0], ij[1], k, l);
            if !s.is_zero() {
                r.add_scaled(&mul(f(n, ij[0]), x(ij[1])), &-s);
            }
        }
        r
    }));
    out.push(zero_check("identities.ja", tuples(2), |c| {
        let mut r = commutator(t, c[0], c[1]);
        for m in 0..4 {
            r.add_scaled(x(m), &-crate::hopfcore::pair(x(c[1]), jm(c[0], m)));
        }
        r
    }));
    out.push(commutator_table(t));

    // Coalgebra structure of J, f and X.
    out.push(Check::first_failure("identities.coJ", tuples(2), |c| {
        let (i, j) = (c[0], c[1]);
        let mut expect = Elem::zero();
        for k in 0..4 {
            expect.add_assign(&tensor_a(jm(i, k), jm(k, j)));
        }
        let eps = counit(jm(i, j));
        let want = if i == j {
            FieldElem::one()
        } else {
            FieldElem::zero()
        };
        (coproduct(jm(i, j)) != expect || eps != want).then(|| format!("J_{}", name(c)))
    }));
    out.push(Check::first_failure("identities.neco", tuples(2), |c| {
        let (i, j) = (c[0], c[1]);
        let mut expect = Elem::zero();
        for k in 0..4 {
            expect.add_assign(&tensor_h(f(i, k), f(k, j)));
        }
        let ok_f = coproduct(f(i, j)) == expect && counit(f(i, j)) == counit(&delta(i, j));
        let mut dx = tensor_h(&h_one(), x(i));
        for k in 0..4 {
            dx.add_assign(&tensor_h(x(k), f(k, i)));
        }
        let ok_x = coproduct(x(i)) == dx && counit(x(i)).is_zero();
        (!(ok_f && ok_x)).then(|| format!("f_{} or X_{}", name(c), INDEX_CHARS[i as usize]))
    }));
    out.push(Check::first_failure(
        "identities.coJf",
        cross(tuples(2)),
        |(c, (g, y))| {
            let (i, j) = (c[0], c[1]);
            let mut r = AElem::zero();
            for k in 0..4 {
                r.add_assign(&mul(jm(k, i), &act_right(y, f(k, j))));
                r.add_assign(&-&mul(&act_left(f(i, k), y), jm(j, k)));
            }
            (!r.is_zero()).then(|| format!("ij={} x={}: residual {}", name(c), g, r))
        },
    ));
    out.push(Check::first_failure(
        "identities.xj",
        cross(tuples(1)),
        |(c, (g, y))| {
            let i = c[0];
            let mut r = act_right(y, x(i));
            for k in 0..4 {
                r.add_assign(&-&mul(&act_left(x(k), y), jm(i, k)));
            }
            (!r.is_zero()).then(|| format!("i={} x={}: residual {}", name(c), g, r))
        },
    ));
    let gens = a_generators();
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (0..4).map(move |b| (a, b))).collect();
    let cases: Vec<(u8, (usize, usize))> = (0..4u8)
        .flat_map(|i| pairs.iter().map(move |p| (i, *p)))
        .collect();
    out.push(Check::first_failure(
        "identities.qLe.left",
        cases.iter(),
        |(i, (a, b))| {
            let (xa, xb) = (&gens[*a].1, &gens[*b].1);
            let mut r = act_left(x(*i), &mul(xa, xb));
            r.add_assign(&-&mul(xa, &act_left(x(*i), xb)));
            for j in 0..4 {
                r.add_assign(&-&mul(&act_left(x(j), xa), &act_left(f(j, *i), xb)));
            }
            (!r.is_zero()).then(|| {
                format!(
                    "i={} x={} y={}: residual {}",
                    INDEX_CHARS[*i as usize], gens[*a].0, gens[*b].0, r
                )
            })
        },
    ));
    let rr: Vec<HElem> = (0..4)
        .map(|i| antipode(x(i), true).scale(&FieldElem::from_int(-1)))
        .collect();
    out.push(Check::first_failure(
        "identities.qLe.right",
        cases.iter(),
        |(i, (a, b))| {
            let (xa, xb) = (&gens[*a].1, &gens[*b].1);
            let ri = &rr[*i as usize];
            let mut r = act_right(&mul(xa, xb), ri);
            r.add_assign(&-&mul(&act_right(xa, ri), xb));
            for j in 0..4 {
                let sinv = antipode(f(j, *i), true);
                r.add_assign(&-&mul(
                    &act_right(xa, &sinv),
                    &act_right(xb, &rr[j as usize]),
                ));
            }
            (!r.is_zero()).then(|| {
                format!(
                    "i={} x={} y={}: residual {}",
                    INDEX_CHARS[*i as usize], gens[*a].0, gens[*b].0, r
                )
            })
        },
    ));

    out.push(zero_check("identities.idS.f", tuples(2), |c| {
        let (i, k) = (c[0], c[1]);
        let mut l = delta(i, k).scale(&FieldElem::from_int(-1));
        let mut r = l.clone();
        for j in 0..4 {
            l.add_assign(&mul(sf.get(i, j), f(j, k)));
            r.add_assign(&mul(f(i, j), sf.get(j, k)));
        }
        &l + &r
    }));
    out.push(zero_check("identities.idS.x", tuples(1), |c| {
        let i = c[0];
        let mut r = antipode(x(i), false);
        for j in 0..4 {
            r.add_assign(&mul(x(j), sf.get(j, i)));
        }
        r
    }));
    out.push(zero_check("identities.ids", tuples(4), |c| {
        let (i, j, n, k) = (c[0], c[1], c[2], c[3]);
        let mut r = HElem::zero();
        for rs in tuples(2) {
            let (a, b) = (rs[0], rs[1]);
            let l = t.sigma(i, j, a, b);
            if !l.is_zero() {
                r.add_scaled(&mul(sf.get(b, n), sf.get(a, k)), l);
            }
            let rt = t.sigma(b, a, k, n);
            if !rt.is_zero() {
                r.add_scaled(&mul(sf.get(j, a), sf.get(i, b)), &-rt);
            }
        }
        r
    }));
    out.push(zero_check("identities.ids3", tuples(3), |c| {
        let (p, q, i) = (c[0], c[1], c[2]);
        let mut r = mul(sf.get(p, q), x(i));
        for mj in tuples(2) {
            let s = t.sigma(p, mj[0], i, mj[1]);
            if !s.is_zero() {
                r.add_scaled(&mul(x(mj[0]), sf.get(mj[1], q)), &-s);
            }
        }
        r
    }));
    out.push(zero_check("identities.ids4", tuples(3), |c| {
        ids4_residual(t, &sf, c[0], c[1], c[2], false)
    }));
    // S applied to the third quat relation; differs from the line above only
    // in the sign of the last term.
    out.push(zero_check(
        "identities.ids4.antipode-image",
        tuples(3),
        |c| ids4_residual(t, &sf, c[0], c[1], c[2], true),
    ));
    out
}

/// Left side of the fourth antipode identity. With `flip` the sign of the
/// final C^l_{jk} S(f_il) term is reversed.
pub fn ids4_residual(t: &CalculusTables, sf: &SfTable, i: u8, j: u8, k: u8, flip: bool) -> HElem {
    let x = |i: u8| &t.x[i as usize];
    let mut r = HElem::zero();
    for mn in tuples(2) {
        let a = t.c(i, mn[0], mn[1]);
        if !a.is_zero() {
            r.add_scaled(&mul(sf.get(mn[1], k), sf.get(mn[0], j)), a);
        }
    }
    for rr in 0..4 {
        r.add_assign(&-&mul(&mul(x(rr), sf.get(rr, k)), sf.get(i, j)));
    }
    for pq in tuples(2) {
        let s = t.sigma(pq[0], pq[1], j, k);
        if s.is_zero() {
            continue;
        }
        for rr in 0..4 {
            let term = mul(&mul(sf.get(i, pq[1]), x(rr)), sf.get(rr, pq[0]));
            r.add_scaled(&term, s);
        }
    }
    let sign = FieldElem::from_int(if flip { -1 } else { 1 });
    for l in 0..4 {
        r.add_scaled(sf.get(i, l), &(&sign * t.c(l, j, k)));
    }
    r
}

fn cross(idx: Vec<Vec<u8>>) -> Vec<(Vec<u8>, (&'static str, AElem))> {
    idx.into_iter()
        .flat_map(|c| a_generators().into_iter().map(move |g| (c.clone(), g)))
        .collect()
}

fn tensor_a(x: &AElem, y: &AElem) -> Elem<(AMono, AMono)> {
    let mut out = Elem::zero();
    for (m, c) in x.iter() {
        for (n, d) in y.iter() {
            out.add_term((*m, *n), c * d);
        }
    }
    out
}

fn tensor_h(x: &HElem, y: &HElem) -> Elem<(HMono, HMono)> {
    let mut out = Elem::zero();
    for (m, c) in x.iter() {
        for (n, d) in y.iter() {
            out.add_term((*m, *n), c * d);
        }
    }
    out
}

fn eval_h(t: &CalculusTables, file: &str, e: &str) -> crate::Result<HElem> {
    in_fixture(
        file,
        parse(e)
            .and_then(|x| elaborate(&t.env(), &x))
            .and_then(|v| v.into_h()),
    )
}

/// Compares every commutator with the listed table (unlisted entries zero).
fn commutator_table(t: &CalculusTables) -> Check {
    let id = "identities.commutators";
    let listed = match t
        .fixtures
        .get("commutators")
        .and_then(|s| fixtures::keyed("commutators", s, 2))
    {
        Ok(l) => l,
        Err(e) => return Check::fail(id, e.to_string()),
    };
    let mut golden = vec![HElem::zero(); 16];
    for (k, e) in listed {
        match eval_h(t, "commutators", &e) {
            Ok(h) => golden[4 * k[0] as usize + k[1] as usize] = h,
            Err(e) => return Check::fail(id, e.to_string()),
        }
    }
    Check::first_failure(id, tuples(2), |c| {
        let got = commutator(t, c[0], c[1]);
        let want = &golden[4 * c[0] as usize + c[1] as usize];
        (&got != want).then(|| {
            format!(
                "[X_{}, X_{}]: listed {}, computed {}",
                INDEX_CHARS[c[0] as usize], INDEX_CHARS[c[1] as usize], want, got
            )
        })
    })
}

fn load_matrix(t: &CalculusTables, file: &str) -> crate::Result<Vec<Vec<(HElem, Expr)>>> {
    let mut m = vec![vec![(HElem::zero(), Expr::Int(0.into())); 4]; 4];
    for (k, e) in fixtures::keyed(file, t.fixtures.get(file)?, 2)? {
        let ast = in_fixture(file, parse(&e))?;
        let h = in_fixture(file, elaborate(&t.env(), &ast).and_then(|v| v.into_h()))?;
        m[k[0] as usize][k[1] as usize] = (h, ast);
    }
    Ok(m)
}

/// True when the expression only involves scalars and f symbols.
fn only_f(e: &Expr) -> bool {
    match e {
        Expr::Int(_) => true,
        Expr::Sym(s) => matches!(s, Sym::Fij(..) | Sym::Q | Sym::S),
        Expr::Neg(x) | Expr::Pow(x, _) => only_f(x),
        Expr::Add(x, y) | Expr::Sub(x, y) | Expr::Mul(x, y) | Expr::Div(x, y) => {
            only_f(x) && only_f(y)
        }
        Expr::Wedge(..) | Expr::D(_) => false,
    }
}

/// The antipode on the f's against the listed S(f) and S^{-1}(f) matrices,
/// the inverse-matrix property, the element g, and S-compatibility.
pub fn verify_sf_matrices(t: &CalculusTables) -> Vec<Check> {
    let f = |i: u8, j: u8| &t.f[i as usize][j as usize];
    let mut out = Vec::new();
    let sf = match load_matrix(t, "antipode_f") {
        Ok(m) => m,
        Err(e) => return vec![Check::fail("tables.sf.entries", e.to_string())],
    };
    let sfi = match load_matrix(t, "antipode_inverse_f") {
        Ok(m) => m,
        Err(e) => return vec![Check::fail("tables.sf-inv.entries", e.to_string())],
    };
    let get = |m: &Vec<Vec<(HElem, Expr)>>, i: u8, j: u8| m[i as usize][j as usize].0.clone();
    out.push(Check::first_failure("tables.sf.entries", tuples(2), |c| {
        let got = antipode(f(c[0], c[1]), false);
        let want = get(&sf, c[0], c[1]);
        (got != want).then(|| {
            format!(
                "S(f_{}): listed {}, computed {}",
                pair_name(c[0], c[1]),
                want,
                got
            )
        })
    }));
    out.push(zero_check("tables.sf.inverse-matrix", tuples(2), |c| {
        let (i, k) = (c[0], c[1]);
        let mut l = delta(i, k).scale(&FieldElem::from_int(-1));
        let mut r = l.clone();
        for j in 0..4 {
            l.add_assign(&mul(&get(&sf, i, j), f(j, k)));
            r.add_assign(&mul(f(i, j), &get(&sf, j, k)));
        }
        &l + &r
    }));
    out.push(Check::first_failure(
        "tables.sf-inv.entries",
        tuples(2),
        |c| {
            let got = antipode(f(c[0], c[1]), true);
            let want = get(&sfi, c[0], c[1]);
            (got != want).then(|| {
                format!(
                    "S^-1(f_{}): listed {}, computed {}",
                    pair_name(c[0], c[1]),
                    want,
                    got
                )
            })
        },
    ));
    out.push(Check::first_failure(
        "tables.sf-inv.round-trip",
        tuples(2),
        |c| {
            let back = antipode(&get(&sfi, c[0], c[1]), false);
            let fwd = antipode(&get(&sf, c[0], c[1]), true);
            (&back != f(c[0], c[1]) || &fwd != f(c[0], c[1]))
                .then(|| format!("f_{}", pair_name(c[0], c[1])))
        },
    ));
    out.push(Check::first_failure(
        "tables.sf.f-subalgebra",
        tuples(2),
        |c| {
            let (h, ast) = &sf[c[0] as usize][c[1] as usize];
            (!only_f(ast) || h != &antipode(f(c[0], c[1]), false)).then(|| {
                format!(
                    "S(f_{}) not given as a polynomial in the f's",
                    pair_name(c[0], c[1])
                )
            })
        },
    ));
    out.push(match g_check(t) {
        Ok(c) => c,
        Err(e) => Check::fail("tables.sf.g", e.to_string()),
    });
    out
}

fn g_check(t: &CalculusTables) -> crate::Result<Check> {
    let rows = fixtures::named("g_element", t.fixtures.get("g_element")?)?;
    let find = |k: &str| {
        rows.iter()
            .find(|(n, _)| n == k)
            .map(|(_, e)| e.clone())
            .ok_or_else(|| crate::Error::Fixture {
                name: "g_element".into(),
                msg: format!("missing `{}`", k),
            })
    };
    let product = eval_h(t, "g_element", &find("product")?)?;
    let closed = eval_h(t, "g_element", &find("closed")?)?;
    let f = |i: u8, j: u8| &t.f[i as usize][j as usize];
    let mut direct = mul(f(2, 0), f(0, 3));
    direct.add_assign(&mul(f(2, 1), f(1, 3)));
    direct.add_assign(&-f(2, 3));
    Ok(Check::expect(
        "tables.sf.g",
        product == closed && closed == direct,
        || {
            format!(
                "product form {}, closed form {}, from the f's {}",
                product, closed, direct
            )
        },
    ))
}

/// Basic shape of the f and J tables.
pub fn verify_shapes(t: &CalculusTables) -> Vec<Check> {
    let zero_row = [(3u8, 0u8), (3, 1), (3, 2)];
    vec![Check::first_failure(
        "tables.f-zero-entries",
        zero_row.iter(),
        |&&(i, j)| {
            (!t.f[i as usize][j as usize].is_zero())
                .then(|| format!("f_{} = {}", pair_name(i, j), t.f[i as usize][j as usize]))
        },
    )]
}
