use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::algebra::{mono_elem, Cartan, CartanTensor};
use super::elem::{CartanElem, OddWord, DELTA};
use super::relations::{
    evaluate, relations, w_as_printed, word_reversal_sign, Gen, Relation, FAMILIES,
};
use super::rep::{scalar_form, LeftOp, OpKind, Reps, RightOp};
use crate::calculus4d::{a_generators, tuples, CalculusTables};
use crate::exterior::{random_form, test_forms, Form, Wedge};
use crate::hopfcore::{antipode, AMono, Elem, HElem, HMono};
use crate::qfield::FieldElem;
use crate::report::Check;
use crate::syntax::INDEX_CHARS;

fn rng_for(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn idx(i: u8) -> char {
    INDEX_CHARS[i as usize]
}

fn int(n: i64) -> FieldElem {
    FieldElem::from_int(n)
}

fn q(e: i32) -> FieldElem {
    FieldElem::q_pow(e)
}

fn sign(odd: bool) -> FieldElem {
    int(if odd { -1 } else { 1 })
}

/// `c ξ_{i1} ⋯` with the letters already in normal order.
fn word(c: FieldElem, letters: &[u8]) -> CartanElem {
    CartanElem::term(
        Elem::term(c, HMono::one()),
        OddWord(letters.iter().fold(0, |a, &l| a | 1 << l)),
    )
}

fn par_first<T: Sync>(
    id: &str,
    cases: &[T],
    failing: impl Fn(&T) -> Option<String> + Sync + Send,
) -> Check {
    Check::new(id, cases.par_iter().find_map_first(failing))
}

fn eval_c(alg: &Cartan, t: &CalculusTables, r: &Relation) -> CartanElem {
    evaluate(
        r,
        CartanElem::zero(),
        &|g| g.elem(t),
        &|f| alg.product(f),
        &|acc, x, c| acc.add_scaled(x, c),
    )
}

fn eval_delta(alg: &Cartan, t: &CalculusTables, r: &Relation) -> CartanTensor {
    let one = CartanTensor::outer(&CartanElem::one(), &CartanElem::one());
    evaluate(
        r,
        CartanTensor::zero(),
        &|g| alg.coproduct(&g.elem(t)),
        &|f| f.iter().fold(one.clone(), |acc, x| alg.tensor_mul(&acc, x)),
        &|acc, x, c| acc.add_scaled(x, c),
    )
}

fn eval_counit(alg: &Cartan, t: &CalculusTables, r: &Relation) -> FieldElem {
    let mut acc = FieldElem::zero();
    for (c, w) in &r.terms {
        let mut p = c.clone();
        for g in w {
            p *= &alg.counit(&g.elem(t));
        }
        acc += &p;
    }
    acc
}

/// S or S^{-1} of a relation, pushed through the generator words with the
/// graded reversal rule.
fn eval_antipode(alg: &Cartan, t: &CalculusTables, r: &Relation, inverse: bool) -> CartanElem {
    let mut acc = CartanElem::zero();
    for (c, w) in &r.terms {
        let factors: Vec<CartanElem> = w
            .iter()
            .rev()
            .map(|g| alg.antipode(&g.elem(t), inverse))
            .collect();
        acc.add_scaled(&alg.product(&factors), &(c * &word_reversal_sign(w)));
    }
    acc
}

/// Generators together with E, F, K and K^{-1}.
fn generator_pool(t: &CalculusTables) -> Vec<(String, CartanElem)> {
    let mut v: Vec<(String, CartanElem)> = Gen::all()
        .iter()
        .map(|g| (g.to_string(), g.elem(t)))
        .collect();
    for (name, m) in [
        ("E", HMono::e()),
        ("F", HMono::f()),
        ("K", HMono::k_pow(1)),
        ("K^-1", HMono::k_pow(-1)),
    ] {
        v.push((name.to_string(), CartanElem::even(Elem::basis(m))));
    }
    v
}

/// A random homogeneous product of two generators with a scalar.
fn random_product(
    alg: &Cartan,
    pool: &[(String, CartanElem)],
    rng: &mut ChaCha8Rng,
) -> (String, CartanElem) {
    let scalars = [int(1), int(-2), q(1), int(3)];
    let (n1, x) = pool.choose(rng).expect("pool");
    let (n2, y) = pool.choose(rng).expect("pool");
    let c = scalars.choose(rng).expect("scalars");
    (
        format!("({}) {} {}", c, n1, n2),
        alg.multiply(x, y).scale(c),
    )
}

fn random_element(
    alg: &Cartan,
    pool: &[(String, CartanElem)],
    rng: &mut ChaCha8Rng,
) -> (String, CartanElem) {
    if rng.gen_bool(0.5) {
        let (n, x) = pool.choose(rng).expect("pool");
        (n.clone(), x.clone())
    } else {
        random_product(alg, pool, rng)
    }
}

fn family_checks(
    prefix: &str,
    rels: &[Relation],
    failing: impl Fn(&Relation) -> Option<String> + Sync + Send,
) -> Vec<Check> {
    FAMILIES
        .iter()
        .map(|f| {
            let members: Vec<&Relation> = rels.iter().filter(|r| r.family == *f).collect();
            par_first(&format!("{}.{}", prefix, f), &members, |r| failing(r))
        })
        .collect()
}

fn examples_bialgebra(alg: &Cartan, t: &CalculusTables) -> Check {
    let mut bad = Vec::new();
    let mut expect = |name: &str, got: &CartanElem, want: &CartanElem| {
        if got != want {
            bad.push(format!("{}: got {}, want {}", name, got, want));
        }
    };
    let xi = |i: u8| alg.xi(i);
    let one = int(1);
    // ordering rules for pairs of odd letters
    let rules: Vec<((u8, u8), CartanElem)> = vec![
        ((1, 0), word(int(-1), &[0, 1])),
        ((2, 0), word(int(-1), &[0, 2])),
        ((2, 1), word(int(-1), &[1, 2])),
        ((3, 0), {
            let mut e = word(-&q(-2), &[0, 3]);
            e.add_assign(&word(-&(&one + &q(-2)), &[0, 2]));
            e
        }),
        ((3, 1), {
            let mut e = word(-&q(2), &[1, 3]);
            e.add_assign(&word(&one + &q(2), &[1, 2]));
            e
        }),
        ((3, 2), {
            let mut e = word(int(-1), &[2, 3]);
            e.add_assign(&word(int(1), &[0, 1]));
            e
        }),
    ];
    for ((a, b), want) in &rules {
        expect(
            &format!("xi{} xi{}", idx(*a), idx(*b)),
            &alg.multiply(&xi(*a), &xi(*b)),
            want,
        );
    }
    for i in 0..=DELTA {
        expect(
            "square",
            &alg.multiply(&CartanElem::odd(i), &CartanElem::odd(i)),
            &CartanElem::zero(),
        );
    }
    let mut want = alg.x(0);
    want.add_assign(&word(int(-1), &[0, DELTA]));
    expect("del xi-", &alg.multiply(&alg.delta(), &xi(0)), &want);
    let f_z = t.f[2][0].clone();
    expect(
        "xi- f[z][-]",
        &alg.multiply(&xi(0), &alg.f(2, 0)),
        &CartanElem::term(f_z, OddWord::letter(0)),
    );

    let mut d_xi = CartanTensor::outer(&CartanElem::one(), &xi(0));
    for j in 0..4u8 {
        d_xi.add_assign(&CartanTensor::outer(&xi(j), &alg.f(j, 0)));
    }
    if alg.coproduct(&xi(0)) != d_xi {
        bad.push("coproduct of xi-".into());
    }
    let support: Vec<u8> = (0..4u8)
        .filter(|&j| !t.f[j as usize][0].is_zero())
        .collect();
    if support != vec![0, 2] {
        bad.push(format!("f_(j-) nonzero for j in {:?}", support));
    }
    let one_e = CartanElem::one();
    if alg.coproduct(&one_e) != CartanTensor::outer(&one_e, &one_e) || !alg.counit(&one_e).is_one()
    {
        bad.push("unit".into());
    }
    // Δ(δξ_−) by hand: (1⊗δ + δ⊗1)(1⊗ξ_− + ξ_j⊗f_j−)
    let del = alg.delta();
    let mut manual = CartanTensor::outer(&one_e, &alg.multiply(&del, &xi(0)));
    manual.add_assign(&CartanTensor::outer(&del, &xi(0)));
    for j in 0..4u8 {
        let f = alg.f(j, 0);
        manual.add_scaled(
            &CartanTensor::outer(&xi(j), &alg.multiply(&del, &f)),
            &int(-1),
        );
        manual.add_assign(&CartanTensor::outer(&alg.multiply(&del, &xi(j)), &f));
    }
    if alg.coproduct(&alg.multiply(&del, &xi(0))) != manual {
        bad.push("coproduct of del xi-".into());
    }
    // d relation of the pair {−, +}, and t = δδ
    let rels = relations(t);
    for label in ["d_+-", "t_"] {
        match rels.iter().find(|r| r.label == label) {
            Some(r) if eval_delta(alg, t, r).is_zero() => {}
            _ => bad.push(format!("coproduct of {}", label)),
        }
    }
    Check::new("bialgebra.examples", bad.into_iter().next())
}

/// Coproduct, counit, associativity and the vanishing of every relation
/// element under Δ and ε.
pub fn verify_bialgebra(alg: &Cartan, seed: u64) -> Vec<Check> {
    let t = alg.tables();
    let rels = relations(t);
    let mut out = vec![examples_bialgebra(alg, t)];
    out.push(par_first("bialgebra.relations", &rels, |r| {
        let v = eval_c(alg, t, r);
        (!v.is_zero()).then(|| format!("{} = {}", r.label, v))
    }));
    out.extend(family_checks("bialgebra.delta", &rels, |r| {
        let v = eval_delta(alg, t, r);
        (!v.is_zero()).then(|| format!("Δ({}) = {}", r.label, v))
    }));
    out.push(par_first("bialgebra.counit", &rels, |r| {
        let v = eval_counit(alg, t, r);
        (!v.is_zero()).then(|| format!("ε({}) = {}", r.label, v))
    }));

    let pool = generator_pool(t);
    let mut rng = rng_for(seed, 1);
    let triples: Vec<_> = (0..60)
        .map(|_| {
            (
                random_element(alg, &pool, &mut rng),
                random_element(alg, &pool, &mut rng),
                random_element(alg, &pool, &mut rng),
            )
        })
        .collect();
    out.push(par_first(
        "bialgebra.associativity",
        &triples,
        |(x, y, z)| {
            let l = alg.multiply(&alg.multiply(&x.1, &y.1), &z.1);
            let r = alg.multiply(&x.1, &alg.multiply(&y.1, &z.1));
            (l != r).then(|| format!("({})({})({})", x.0, y.0, z.0))
        },
    ));
    let mut rng = rng_for(seed, 2);
    let pairs: Vec<_> = (0..40)
        .map(|_| {
            (
                random_element(alg, &pool, &mut rng),
                random_element(alg, &pool, &mut rng),
            )
        })
        .collect();
    out.push(par_first(
        "bialgebra.delta-homomorphism",
        &pairs,
        |(x, y)| {
            let l = alg.coproduct(&alg.multiply(&x.1, &y.1));
            let r = alg.tensor_mul(&alg.coproduct(&x.1), &alg.coproduct(&y.1));
            (l != r).then(|| format!("x = {}, y = {}", x.0, y.0))
        },
    ));
    let mut rng = rng_for(seed, 3);
    let mut singles: Vec<(String, CartanElem)> = pool.clone();
    singles.extend((0..20).map(|_| random_product(alg, &pool, &mut rng)));
    out.push(par_first("bialgebra.coassociativity", &singles, |x| {
        let (l, r) = alg.coassociators(&alg.coproduct(&x.1));
        (l != r).then(|| x.0.clone())
    }));
    out.push(par_first("bialgebra.counit-axiom", &singles, |x| {
        let d = alg.coproduct(&x.1);
        let mut l = CartanElem::zero();
        let mut r = CartanElem::zero();
        for (a, b, c) in d.basis() {
            l.add_scaled(&mono_elem(&b), &(&c * &alg.counit(&mono_elem(&a))));
            r.add_scaled(&mono_elem(&a), &(&c * &alg.counit(&mono_elem(&b))));
        }
        (l != x.1 || r != x.1).then(|| x.0.clone())
    }));
    out
}

fn antipode_axiom(alg: &Cartan, x: &CartanElem) -> bool {
    let d = alg.coproduct(x);
    let e = CartanElem::one().scale(&alg.counit(x));
    let l = alg.contract(&d, |a| alg.antipode(a, false), |b| b.clone());
    let r = alg.contract(&d, |a| a.clone(), |b| alg.antipode(b, false));
    l == e && r == e
}

/// S and S^{-1}: relations, the antipode axiom and the structural
/// properties of a graded antipode.
pub fn verify_antipode(alg: &Cartan, seed: u64) -> Vec<Check> {
    let t = alg.tables();
    let rels = relations(t);
    let mut out = family_checks("antipode.relations", &rels, |r| {
        let v = eval_antipode(alg, t, r, false);
        (!v.is_zero()).then(|| format!("S({}) = {}", r.label, v))
    });
    out.push(par_first("antipode.inverse-relations", &rels, |r| {
        let v = eval_antipode(alg, t, r, true);
        (!v.is_zero()).then(|| format!("S^-1({}) = {}", r.label, v))
    }));
    let pool = generator_pool(t);
    out.push(par_first("antipode.axiom.generators", &pool, |x| {
        (!antipode_axiom(alg, &x.1)).then(|| x.0.clone())
    }));
    let mut rng = rng_for(seed, 4);
    let products: Vec<_> = (0..100)
        .map(|_| random_product(alg, &pool, &mut rng))
        .collect();
    out.push(par_first("antipode.axiom.products", &products, |x| {
        (!antipode_axiom(alg, &x.1)).then(|| x.0.clone())
    }));

    let mut cases = pool.clone();
    cases.extend(products.iter().take(40).cloned());
    out.push(par_first("antipode.round-trip", &cases, |x| {
        let a = alg.antipode(&alg.antipode(&x.1, false), true);
        let b = alg.antipode(&alg.antipode(&x.1, true), false);
        (a != x.1 || b != x.1).then(|| x.0.clone())
    }));
    let mut rng = rng_for(seed, 5);
    let pairs: Vec<_> = (0..40)
        .map(|_| {
            (
                random_element(alg, &pool, &mut rng),
                random_element(alg, &pool, &mut rng),
            )
        })
        .collect();
    out.push(par_first("antipode.anti-homomorphism", &pairs, |(x, y)| {
        let p = x.1.parity().unwrap_or(0) * y.1.parity().unwrap_or(0);
        let l = alg.antipode(&alg.multiply(&x.1, &y.1), false);
        let r = alg
            .multiply(&alg.antipode(&y.1, false), &alg.antipode(&x.1, false))
            .scale(&sign(p == 1));
        (l != r).then(|| format!("x = {}, y = {}", x.0, y.0))
    }));
    out.push(par_first("antipode.coalgebra-anti", &pool, |x| {
        let l = alg.coproduct(&alg.antipode(&x.1, false));
        let r = alg.map_tensor(
            &alg.coproduct(&x.1).flip(),
            |a| alg.antipode(a, false),
            |b| alg.antipode(b, false),
        );
        (l != r).then(|| x.0.clone())
    }));
    out.push(antipode_formulas(alg, t));
    out.push(antipode_examples(alg, t, &rels));
    out
}

fn antipode_formulas(alg: &Cartan, t: &CalculusTables) -> Check {
    let s_f =
        |j: u8, i: u8, inv: bool| CartanElem::even(antipode(&t.f[j as usize][i as usize], inv));
    Check::first_failure("antipode.formulas", 0..4u8, |&i| {
        let mut sx = CartanElem::zero();
        let mut sinv_x = CartanElem::zero();
        let mut sinv_xi = CartanElem::zero();
        for j in 0..4u8 {
            sx.add_scaled(&alg.multiply(&alg.x(j), &s_f(j, i, false)), &int(-1));
            sinv_x.add_scaled(&alg.multiply(&s_f(j, i, true), &alg.x(j)), &int(-1));
            sinv_xi.add_scaled(&alg.multiply(&s_f(j, i, true), &alg.xi(j)), &int(-1));
        }
        if alg.antipode(&alg.x(i), false) != sx {
            Some(format!("S(X{})", idx(i)))
        } else if alg.antipode(&alg.x(i), true) != sinv_x {
            Some(format!("S^-1(X{})", idx(i)))
        } else if alg.antipode(&alg.xi(i), true) != sinv_xi {
            Some(format!("S^-1(xi{})", idx(i)))
        } else {
            None
        }
    })
}

fn antipode_examples(alg: &Cartan, t: &CalculusTables, rels: &[Relation]) -> Check {
    let mut bad: Option<String> = None;
    let mut note = |ok: bool, what: &str| {
        if !ok && bad.is_none() {
            bad = Some(what.to_string());
        }
    };
    note(
        alg.antipode(&alg.delta(), false) == alg.delta().neg(),
        "S(del) = -del",
    );
    note(
        alg.antipode(&alg.antipode(&alg.xi(0), false), true) == alg.xi(0),
        "S^-1(S(xi-)) = xi-",
    );
    for x in [alg.delta(), alg.f(2, 3)] {
        let v = alg.contract(
            &alg.coproduct(&x),
            |a| alg.antipode(a, false),
            |b| b.clone(),
        );
        note(
            v == CartanElem::one().scale(&alg.counit(&x)),
            &format!("m(S x id)D({}) = e", x),
        );
    }
    for i in 0..4u8 {
        let v = alg.contract(
            &alg.coproduct(&alg.xi(i)),
            |a| alg.antipode(a, false),
            |b| b.clone(),
        );
        note(v.is_zero(), &format!("m(S x id)D(xi{}) = 0", idx(i)));
    }
    let a = rels
        .iter()
        .find(|r| r.label == "a_-z+")
        .expect("a_-z+ exists");
    note(eval_antipode(alg, t, a, false).is_zero(), "S(a_-z+) = 0");
    Check::new("antipode.examples", bad)
}

/// S(f_pl) ξ_j − σ^{jk}_{pn} ξ_n S(f_kl) = 0.
pub fn verify_ids2(alg: &Cartan) -> Check {
    let t = alg.tables();
    let sf = |i: u8, j: u8| CartanElem::even(antipode(&t.f[i as usize][j as usize], false));
    let cases = tuples(3);
    par_first("identities.ids2", &cases, |c| {
        let (p, l, j) = (c[0], c[1], c[2]);
        let mut r = alg.multiply(&sf(p, l), &alg.xi(j));
        for n in 0..4u8 {
            for k in 0..4u8 {
                let s = t.sigma(p, n, j, k);
                if !s.is_zero() {
                    r.add_scaled(&alg.multiply(&alg.xi(n), &sf(k, l)), &-s);
                }
            }
        }
        (!r.is_zero()).then(|| format!("p l j = {}{}{}: {}", idx(p), idx(l), idx(j), r))
    })
}

/// The w element with σ^{ij}_{mn} in its first term, evaluated in C.
pub fn verify_w_as_printed(alg: &Cartan) -> Check {
    let t = alg.tables();
    let cases = tuples(4);
    let failing: Vec<String> = cases
        .par_iter()
        .filter_map(|c| {
            let r = w_as_printed(t, c);
            (!eval_c(alg, t, &r).is_zero()).then(|| r.label.clone())
        })
        .collect();
    Check::new(
        "identities.conG.w-as-printed",
        failing
            .first()
            .map(|l| format!("{} nonzero ({} of 256 tuples)", l, failing.len())),
    )
}

fn apply_relation(reps: &Reps, right: bool, r: &Relation, f: &Form) -> Form {
    let mut out = Form::zero();
    for (c, w) in &r.terms {
        out.add_scaled(&reps.word(right, w, f), c);
    }
    out
}

fn degree(f: &Form) -> u32 {
    f.degree().unwrap_or(0)
}

fn random_pairs(seed: u64, salt: u64, n: usize) -> Vec<(Form, Form)> {
    let mut rng = rng_for(seed, salt);
    (0..n)
        .map(|_| {
            let d1 = rng.gen_range(0..=2);
            let d2 = rng.gen_range(0..=2);
            (random_form(&mut rng, d1), random_form(&mut rng, d2))
        })
        .collect()
}

/// Relations on forms, one check per family.
fn relation_operator_checks(reps: &Reps, right: bool, prefix: &str, forms: &[Form]) -> Vec<Check> {
    let t = reps.algebra().tables();
    let rels = relations(t);
    family_checks(prefix, &rels, |r| {
        forms.iter().find_map(|f| {
            let v = apply_relation(reps, right, r, f);
            (!v.is_zero()).then(|| format!("{} on {}: {}", r.label, f, v))
        })
    })
}

fn omega_wedge(r: u8, s: u8) -> Form {
    let mut w = Form::zero();
    if r != s {
        let sgn = if r < s { int(1) } else { int(-1) };
        w.add_term(Wedge((1 << r) | (1 << s)), &Elem::term(sgn, AMono::one()));
    }
    w
}

/// Checks that λ is a representation of C on Γ^∧.
pub fn verify_left_representation(reps: &Reps, cap: u32, seed: u64) -> Vec<Check> {
    let alg = reps.algebra();
    let ext = reps.exterior();
    let t = alg.tables();
    let forms = test_forms(cap);
    let left = |k: OpKind, f: &Form| reps.apply_left(LeftOp(k), f);
    let mut out = relation_operator_checks(reps, false, "left-rep.relations", &forms);

    let cases: Vec<(u8, &Form)> = (0..4u8)
        .flat_map(|k| forms.iter().map(move |f| (k, f)))
        .collect();
    out.push(par_first("left-rep.cartan-identity", &cases, |(k, f)| {
        let mut v = left(OpKind::Inner(*k), &ext.d(f));
        v.add_assign(&ext.d(&left(OpKind::Inner(*k), f)));
        v.add_scaled(&left(OpKind::Lie(*k), f), &int(-1));
        (!v.is_zero()).then(|| format!("k = {} on {}", idx(*k), f))
    }));

    let gens = Gen::all();
    let pairs = random_pairs(seed, 6, 100);
    let deltas: Vec<CartanTensor> = gens.iter().map(|g| alg.coproduct(&g.elem(t))).collect();
    let jobs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|g| (0..pairs.len()).map(move |p| (g, p)))
        .collect();
    out.push(par_first("left-rep.azione", &jobs, |&(g, p)| {
        let (a, b) = &pairs[p];
        let lhs = reps.lambda(&gens[g].elem(t), &ext.wedge(a, b));
        let mut rhs = Form::zero();
        for (x1, x2, c) in deltas[g].basis() {
            let s = sign(x2.1.len() % 2 == 1 && degree(a) % 2 == 1);
            let la = reps.lambda(&mono_elem(&x1), a);
            let lb = reps.lambda(&mono_elem(&x2), b);
            rhs.add_scaled(&ext.wedge(&la, &lb), &(&c * &s));
        }
        (lhs != rhs).then(|| format!("x = {}, α = {}, β = {}", gens[g], a, b))
    }));

    let pool = generator_pool(t);
    let one = scalar_form(int(1));
    out.push(par_first("left-rep.unit", &pool, |x| {
        (reps.lambda(&x.1, &one) != scalar_form(alg.counit(&x.1))).then(|| x.0.clone())
    }));

    let small = test_forms(cap.min(2));
    let gen_pairs: Vec<(Gen, Gen)> = gens
        .iter()
        .flat_map(|a| gens.iter().map(move |b| (*a, *b)))
        .collect();
    out.push(par_first("left-rep.homomorphism", &gen_pairs, |(x, y)| {
        let xy = alg.multiply(&x.elem(t), &y.elem(t));
        small.iter().find_map(|f| {
            let l = reps.lambda(&xy, f);
            let r = reps.lambda_gen(x, &reps.lambda_gen(y, f));
            (l != r).then(|| format!("x = {}, y = {} on {}", x, y, f))
        })
    }));
    out.extend(left_proof_identities(reps));
    out.push(left_examples(reps));
    out
}

fn left_proof_identities(reps: &Reps) -> Vec<Check> {
    let t = reps.algebra().tables();
    let l = |k: OpKind, f: &Form| reps.apply_left(LeftOp(k), f);
    use OpKind::*;
    let copri = Check::first_failure("left-rep.copri", tuples(4), |c| {
        let (h, j, k, s) = (c[0], c[1], c[2], c[3]);
        let w = Form::omega(s);
        let mut v = l(Inner(h), &l(FAction(j, k), &w));
        for nm in tuples(2) {
            let sg = t.sigma(nm[0], nm[1], h, k);
            if !sg.is_zero() {
                v.add_scaled(&l(FAction(j, nm[0]), &l(Inner(nm[1]), &w)), &-sg);
            }
        }
        (!v.is_zero()).then(|| format!("h j k s = {}{}{}{}", idx(h), idx(j), idx(k), idx(s)))
    });
    let coprii = Check::first_failure("left-rep.coprii", tuples(3), |c| {
        let (i, j, s) = (c[0], c[1], c[2]);
        let w = Form::omega(s);
        let mut v = l(Inner(i), &l(Lie(j), &w));
        for kl in tuples(2) {
            let sg = t.sigma(kl[0], kl[1], i, j);
            if !sg.is_zero() {
                v.add_scaled(&l(Lie(kl[0]), &l(Inner(kl[1]), &w)), &-sg);
            }
        }
        for k in 0..4u8 {
            v.add_scaled(&l(Inner(k), &w), &-t.c(k, i, j));
        }
        (!v.is_zero()).then(|| format!("i j s = {}{}{}", idx(i), idx(j), idx(s)))
    });
    let pivots: Vec<((u8, u8), Vec<u8>)> =
        t.t.pivots
            .iter()
            .flat_map(|p| tuples(2).into_iter().map(move |rs| (*p, rs)))
            .collect();
    let copriii = Check::first_failure("left-rep.copriii", pivots, |((i, j), rs)| {
        let w = omega_wedge(rs[0], rs[1]);
        let mut v = l(Inner(*i), &l(Inner(*j), &w));
        for kl in tuples(2) {
            let tt = t.t.get(*i, *j, kl[0], kl[1]);
            if !tt.is_zero() {
                v.add_scaled(&l(Inner(kl[0]), &l(Inner(kl[1]), &w)), tt);
            }
        }
        (!v.is_zero()).then(|| {
            format!(
                "i j = {}{} on w{} w{}",
                idx(*i),
                idx(*j),
                idx(rs[0]),
                idx(rs[1])
            )
        })
    });
    vec![copri, coprii, copriii]
}

fn left_examples(reps: &Reps) -> Check {
    let ext = reps.exterior();
    let l = |k: OpKind, f: &Form| reps.apply_left(LeftOp(k), f);
    let a = Form::scalar(Elem::basis(AMono::a()));
    let one = scalar_form(int(1));
    let q_over = &q(1) * &(&q(1) + &int(1)).inv().expect("q + 1 is invertible");
    let mut checks: Vec<(String, bool)> = vec![
        (
            "L_z(w-) = -q^-1 w-".into(),
            l(OpKind::Lie(2), &Form::omega(0)) == Form::omega(0).scale(&-&q(-1)),
        ),
        (
            "i_-(w-) = 1".into(),
            l(OpKind::Inner(0), &Form::omega(0)) == one,
        ),
        (
            "i_+(w-) = 0".into(),
            l(OpKind::Inner(1), &Form::omega(0)).is_zero(),
        ),
        (
            "L_(-0)(wz) = (1+q^2) w-".into(),
            l(OpKind::FAction(0, 3), &Form::omega(2)) == Form::omega(0).scale(&(&int(1) + &q(2))),
        ),
        (
            "L_z(a) = q/(q+1) a".into(),
            l(OpKind::Lie(2), &a) == a.scale(&q_over),
        ),
    ];
    for k in 0..4u8 {
        let mut v = l(OpKind::Inner(k), &ext.d(&a));
        v.add_assign(&ext.d(&l(OpKind::Inner(k), &a)));
        checks.push((
            format!("(i d + d i)(a) = L(a) for k = {}", idx(k)),
            v == l(OpKind::Lie(k), &a),
        ));
        let mut v = l(OpKind::Inner(k), &ext.d(&one));
        v.add_assign(&ext.d(&l(OpKind::Inner(k), &one)));
        checks.push((
            format!("(i d + d i)(1) = 0 for k = {}", idx(k)),
            v.is_zero() && l(OpKind::Lie(k), &one).is_zero(),
        ));
    }
    Check::new(
        "left-rep.examples",
        checks.into_iter().find(|c| !c.1).map(|c| c.0),
    )
}

fn a_monomials(cap: u32) -> Vec<AMono> {
    let mut out = Vec::new();
    for star in [false, true] {
        for k in 0..=cap {
            for l in 0..=cap - k {
                for m in 0..=cap - k - l {
                    if !star || k > 0 {
                        out.push(AMono::new(star, k, l, m));
                    }
                }
            }
        }
    }
    out
}

/// The right-hand generators S^{-1}(X_i), S^{-1}(f_ij), S^{-1}(ξ_i), S^{-1}(δ).
fn right_generators(alg: &Cartan) -> Vec<(String, CartanElem)> {
    let t = alg.tables();
    Gen::all()
        .iter()
        .map(|g| (format!("S^-1({})", g), alg.antipode(&g.elem(t), true)))
        .collect()
}

/// Checks that ρ is an anti-representation of C on Γ^∧.
pub fn verify_right_representation(reps: &Reps, cap: u32, seed: u64) -> Vec<Check> {
    let alg = reps.algebra();
    let ext = reps.exterior();
    let t = alg.tables();
    let forms = test_forms(cap);
    let right = |k: OpKind, f: &Form| reps.apply_right(RightOp(k), f);
    let mut out = relation_operator_checks(reps, true, "right-rep.relations", &forms);

    // (d i^R_j + i^R_j d − L^R_j) on functions and on exact 1-forms
    let cartan = |j: u8, f: &Form| {
        let mut v = ext.d(&right(OpKind::Inner(j), f));
        v.add_assign(&right(OpKind::Inner(j), &ext.d(f)));
        v.add_scaled(&right(OpKind::Lie(j), f), &int(-1));
        v
    };
    let funcs: Vec<(u8, AMono)> = (0..4u8)
        .flat_map(|j| a_monomials(cap).into_iter().map(move |m| (j, m)))
        .collect();
    out.push(par_first(
        "right-rep.cartan-identity.functions",
        &funcs,
        |(j, m)| {
            let v = cartan(*j, &Form::scalar(Elem::basis(*m)));
            (!v.is_zero()).then(|| format!("j = {}, y = {}", idx(*j), m))
        },
    ));
    let exact: Vec<(u8, &'static str, Form)> = (0..4u8)
        .flat_map(|j| {
            a_generators()
                .into_iter()
                .map(move |(n, y)| (j, n, ext.d(&Form::scalar(y))))
        })
        .collect();
    out.push(par_first(
        "right-rep.cartan-identity.exact",
        &exact,
        |(j, n, dy)| {
            let v = cartan(*j, dy);
            (!v.is_zero()).then(|| format!("j = {}, y = {}", idx(*j), n))
        },
    ));
    out.extend(right_proof_identities(reps));

    let gens = right_generators(alg);
    let pairs = random_pairs(seed, 7, 100);
    let deltas: Vec<CartanTensor> = gens.iter().map(|g| alg.coproduct(&g.1)).collect();
    let jobs: Vec<(usize, usize)> = (0..gens.len())
        .flat_map(|g| (0..pairs.len()).map(move |p| (g, p)))
        .collect();
    out.push(par_first("right-rep.azione", &jobs, |&(g, p)| {
        let (a, b) = &pairs[p];
        let lhs = reps.rho(&gens[g].1, &ext.wedge(a, b));
        let mut rhs = Form::zero();
        for (x1, x2, c) in deltas[g].basis() {
            let s = sign(x2.1.len() % 2 == 1 && degree(a) % 2 == 1);
            let la = reps.rho(&mono_elem(&x1), a);
            let lb = reps.rho(&mono_elem(&x2), b);
            rhs.add_scaled(&ext.wedge(&la, &lb), &(&c * &s));
        }
        (lhs != rhs).then(|| format!("x = {}, α = {}, β = {}", gens[g].0, a, b))
    }));
    let one = scalar_form(int(1));
    let mut unit_cases = gens.clone();
    unit_cases.extend(generator_pool(t));
    out.push(par_first("right-rep.unit", &unit_cases, |x| {
        (reps.rho(&x.1, &one) != scalar_form(alg.counit(&x.1))).then(|| x.0.clone())
    }));

    let small = test_forms(cap.min(2));
    let plain = Gen::all();
    let gen_pairs: Vec<(Gen, Gen)> = plain
        .iter()
        .flat_map(|a| plain.iter().map(move |b| (*a, *b)))
        .collect();
    out.push(par_first(
        "right-rep.anti-homomorphism",
        &gen_pairs,
        |(x, y)| {
            let (ex, ey) = (x.elem(t), y.elem(t));
            let xy = alg.multiply(&ex, &ey);
            let s = sign(x.parity() * y.parity() == 1);
            small.iter().find_map(|f| {
                let l = reps.rho(&xy, f);
                let r = reps.rho(&ey, &reps.rho(&ex, f)).scale(&s);
                (l != r).then(|| format!("x = {}, y = {} on {}", x, y, f))
            })
        },
    ));
    let inner_cases: Vec<(u8, &Form)> = (0..4u8)
        .flat_map(|j| forms.iter().map(move |f| (j, f)))
        .collect();
    out.push(par_first(
        "right-rep.inner-omega-route",
        &inner_cases,
        |(j, f)| {
            (ext.inner_right(*j, f) != ext.inner_right_via_omega(*j, f))
                .then(|| format!("j = {} on {}", idx(*j), f))
        },
    ));
    out.push(right_remark(reps));
    out.extend(cosx_checks(alg));
    out.push(right_examples(reps));
    out
}

fn right_proof_identities(reps: &Reps) -> Vec<Check> {
    let ext = reps.exterior();
    let t = reps.algebra().tables();
    let r = |k: OpKind, f: &Form| reps.apply_right(RightOp(k), f);
    use OpKind::*;
    let non1 = Check::first_failure("right-rep.non1", tuples(4), |c| {
        let (h, k, j, s) = (c[0], c[1], c[2], c[3]);
        let e = ext.eta(s);
        let mut v = r(Inner(h), &r(FAction(k, j), e));
        for nm in tuples(2) {
            let sg = t.sigma(nm[0], nm[1], h, j);
            if !sg.is_zero() {
                v.add_scaled(&r(FAction(k, nm[0]), &r(Inner(nm[1]), e)), &-sg);
            }
        }
        (!v.is_zero()).then(|| format!("h k j r = {}{}{}{}", idx(h), idx(k), idx(j), idx(s)))
    });
    let non2 = Check::first_failure("right-rep.non2", tuples(3), |c| {
        let (i, j, s) = (c[0], c[1], c[2]);
        let e = ext.eta(s);
        let mut v = r(Inner(i), &r(Lie(j), e));
        for kl in tuples(2) {
            let sg = t.sigma(kl[0], kl[1], i, j);
            if !sg.is_zero() {
                v.add_scaled(&r(Lie(kl[0]), &r(Inner(kl[1]), e)), &-sg);
            }
        }
        for k in 0..4u8 {
            v.add_scaled(&r(Inner(k), e), t.c(k, i, j));
        }
        (!v.is_zero()).then(|| format!("i j r = {}{}{}", idx(i), idx(j), idx(s)))
    });
    let pivots: Vec<((u8, u8), Vec<u8>)> =
        t.t.pivots
            .iter()
            .flat_map(|p| tuples(2).into_iter().map(move |rs| (*p, rs)))
            .collect();
    let non3 = Check::first_failure("right-rep.non3", pivots, |((i, j), rs)| {
        let e = ext.wedge(ext.eta(rs[0]), ext.eta(rs[1]));
        let mut v = r(Inner(*i), &r(Inner(*j), &e));
        for mn in tuples(2) {
            let tt = t.t.get(*i, *j, mn[0], mn[1]);
            if !tt.is_zero() {
                v.add_scaled(&r(Inner(mn[0]), &r(Inner(mn[1]), &e)), tt);
            }
        }
        (!v.is_zero()).then(|| {
            format!(
                "i j = {}{} on e{} e{}",
                idx(*i),
                idx(*j),
                idx(rs[0]),
                idx(rs[1])
            )
        })
    });
    vec![non1, non2, non3]
}

fn right_remark(reps: &Reps) -> Check {
    let ext = reps.exterior();
    let t = reps.algebra().tables();
    let e = ext.eta(0);
    let lhs = reps.apply_right(RightOp(OpKind::Lie(2)), e);
    // S(R_z) = −X_z
    let s_r: HElem = -&t.x[2];
    let rhs = ext.act_h(&s_r, e);
    let want = e.scale(&q(-1));
    Check::expect(
        "right-rep.remark",
        lhs == want && !lhs.is_zero() && rhs.is_zero(),
        || format!("e- <| R_z = {}, S(R_z) |> e- = {}", lhs, rhs),
    )
}

/// Coproducts of S^{-1} of the generators.
fn cosx_checks(alg: &Cartan) -> Vec<Check> {
    let sinv = |x: &CartanElem| alg.antipode(x, true);
    let one = CartanElem::one();
    let sx = |i: u8| sinv(&alg.x(i));
    let sf = |i: u8, j: u8| sinv(&alg.f(i, j));
    let sxi = |i: u8| sinv(&alg.xi(i));
    let x = Check::first_failure("right-rep.coSx.x", 0..4u8, |&i| {
        let mut want = CartanTensor::outer(&sx(i), &one);
        for j in 0..4u8 {
            want.add_assign(&CartanTensor::outer(&sf(j, i), &sx(j)));
        }
        (alg.coproduct(&sx(i)) != want).then(|| format!("i = {}", idx(i)))
    });
    let f = Check::first_failure("right-rep.coSx.f", tuples(2), |c| {
        let (i, j) = (c[0], c[1]);
        let mut want = CartanTensor::zero();
        for k in 0..4u8 {
            want.add_assign(&CartanTensor::outer(&sf(k, j), &sf(i, k)));
        }
        (alg.coproduct(&sf(i, j)) != want).then(|| format!("i j = {}{}", idx(i), idx(j)))
    });
    // the same line with the legs in the order S^{-1}f_jk ⊗ S^{-1}f_ki
    let f_printed = Check::first_failure("right-rep.coSx.f-as-printed", tuples(2), |c| {
        let (i, j) = (c[0], c[1]);
        let mut want = CartanTensor::zero();
        for k in 0..4u8 {
            want.add_assign(&CartanTensor::outer(&sf(j, k), &sf(k, i)));
        }
        (alg.coproduct(&sf(i, j)) != want).then(|| format!("i j = {}{}", idx(i), idx(j)))
    });
    let xi = Check::first_failure("right-rep.coSx.xi", 0..4u8, |&i| {
        let mut want = CartanTensor::outer(&sxi(i), &one);
        for j in 0..4u8 {
            want.add_assign(&CartanTensor::outer(&sf(j, i), &sxi(j)));
        }
        (alg.coproduct(&sxi(i)) != want).then(|| format!("i = {}", idx(i)))
    });
    let sd = sinv(&alg.delta());
    let mut want = CartanTensor::outer(&sd, &one);
    want.add_assign(&CartanTensor::outer(&one, &sd));
    let d = Check::expect("right-rep.coSx.delta", alg.coproduct(&sd) == want, || {
        "S^-1(del)".into()
    });
    vec![x, f, f_printed, xi, d]
}

fn right_examples(reps: &Reps) -> Check {
    let ext = reps.exterior();
    let t = reps.algebra().tables();
    let r = |k: OpKind, f: &Form| reps.apply_right(RightOp(k), f);
    let mut bad: Option<String> = None;
    for c in tuples(3) {
        let (i, j, k) = (c[0], c[1], c[2]);
        let mut want = Form::zero();
        for l in 0..4u8 {
            want.add_scaled(ext.eta(l), t.sigma(i, k, l, j));
        }
        if r(OpKind::FAction(i, j), ext.eta(k)) != want {
            bad.get_or_insert(format!("L^R_{}{}(e{})", idx(i), idx(j), idx(k)));
        }
        let omega = Form::omega(k);
        let want = if i == j { omega.clone() } else { Form::zero() };
        if r(OpKind::FAction(i, j), &omega) != want {
            bad.get_or_insert(format!("L^R_{}{}(w{})", idx(i), idx(j), idx(k)));
        }
    }
    for c in tuples(2) {
        let (i, k) = (c[0], c[1]);
        let mut want = Form::zero();
        for l in 0..4u8 {
            want.add_scaled(ext.eta(l), &-t.c(k, l, i));
        }
        if r(OpKind::Lie(i), ext.eta(k)) != want {
            bad.get_or_insert(format!("L^R_{}(e{})", idx(i), idx(k)));
        }
        if !r(OpKind::Lie(i), &Form::omega(k)).is_zero() {
            bad.get_or_insert(format!("L^R_{}(w{})", idx(i), idx(k)));
        }
        let want = if i == k {
            scalar_form(int(1))
        } else {
            Form::zero()
        };
        if r(OpKind::Inner(i), ext.eta(k)) != want {
            bad.get_or_insert(format!("i^R_{}(e{})", idx(i), idx(k)));
        }
    }
    Check::new("right-rep.examples", bad)
}

/// Graded commutators λ_x ρ_y − (−1)^{|x||y|} ρ_y λ_x for x in
/// {L_i, i_i, d} and y in {L^R_j, i^R_j, d} on forms of degree ≤ 2.
/// Returns `(pair, commutes)`; this is measured, not asserted.
pub fn measure_lr_commutation(reps: &Reps) -> Vec<(String, bool)> {
    let mut ops = Vec::new();
    for i in 0..4u8 {
        ops.push(OpKind::Lie(i));
        ops.push(OpKind::Inner(i));
    }
    ops.push(OpKind::Diff);
    let forms = test_forms(2);
    let odd = |k: &OpKind| k.degree() % 2 != 0;
    let jobs: Vec<(OpKind, OpKind)> = ops
        .iter()
        .flat_map(|x| ops.iter().map(move |y| (*x, *y)))
        .collect();
    jobs.par_iter()
        .map(|(x, y)| {
            let s = sign(odd(x) && odd(y));
            let ok = forms.iter().all(|f| {
                let a = reps.apply_left(LeftOp(*x), &reps.apply_right(RightOp(*y), f));
                let b = reps.apply_right(RightOp(*y), &reps.apply_left(LeftOp(*x), f));
                a == b.scale(&s)
            });
            (format!("{} with R:{}", x, y), ok)
        })
        .collect()
}
