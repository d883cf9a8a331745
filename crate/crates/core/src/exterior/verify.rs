use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::engine::{Exterior, LeftCoacted, RightCoacted, TensorForm};
use super::form::{Form, Wedge};
use crate::calculus4d::{a_generators, pair_of, tuples};
use crate::hopfcore::{act_left, act_right, antipode, AElem, AMono, Elem, HopfMonomial};
use crate::qfield::{FMatrix, FieldElem};
use crate::report::Check;
use crate::syntax::{eval_str, BareEnv, INDEX_CHARS};

fn one() -> AElem {
    Elem::basis(AMono::one())
}

fn idx(i: u8) -> char {
    INDEX_CHARS[i as usize]
}

/// Coefficients used for exhaustive operator checks.
pub fn test_coefficients() -> Vec<(&'static str, AElem)> {
    vec![
        ("1", one()),
        ("a", Elem::basis(AMono::a())),
        ("c!", Elem::basis(AMono::c_star())),
    ]
}

/// Every `x ω_W` with x in {1, a, c*} and deg W ≤ `cap`.
pub fn test_forms(cap: u32) -> Vec<Form> {
    let mut out = Vec::new();
    for d in 0..=cap.min(4) {
        for w in Wedge::of_degree(d) {
            for (_, x) in test_coefficients() {
                out.push(Form::term(x, w));
            }
        }
    }
    out
}

/// A random homogeneous form of degree `d` with one or two terms.
pub fn random_form(rng: &mut ChaCha8Rng, d: u32) -> Form {
    let coeffs = [
        AMono::one(),
        AMono::a(),
        AMono::a_star(),
        AMono::c(),
        AMono::c_star(),
        AMono::new(false, 1, 0, 1),
        AMono::new(false, 0, 1, 1),
    ];
    let scalars = [
        FieldElem::one(),
        FieldElem::from_int(-2),
        FieldElem::q(),
        FieldElem::from_int(3),
    ];
    let monos = Wedge::of_degree(d);
    let mut f = Form::zero();
    for _ in 0..rng.gen_range(1..=2) {
        let w = *monos.choose(rng).expect("nonempty degree");
        let m = *coeffs.choose(rng).expect("coefficients");
        let c = scalars.choose(rng).expect("scalars").clone();
        f.add_term(w, &Elem::term(c, m));
    }
    f
}

fn a_monomials(cap: u32) -> Vec<AMono> {
    AMono::monomials_up_to(cap)
}

fn diff_text(got: &Form, want: &Form) -> String {
    format!("got {}, expected {}", got, want)
}

fn d_on_generators(e: &Exterior) -> Check {
    let name = "differentials";
    let text = match e.tables().fixtures.get(name) {
        Ok(t) => t.to_string(),
        Err(err) => return Check::fail("exterior.d.generators", err.to_string()),
    };
    let mut lines = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match line.split_once(':') {
            Some((k, v)) => lines.push((k.trim().to_string(), v.trim().to_string())),
            None => {
                return Check::fail(
                    "exterior.d.generators",
                    format!("malformed line `{}`", line),
                )
            }
        }
    }
    if lines.len() != 4 {
        return Check::fail(
            "exterior.d.generators",
            format!("{} lines, expected 4", lines.len()),
        );
    }
    Check::first_failure("exterior.d.generators", lines, |(k, v)| {
        let x = match eval_str(&BareEnv, k).and_then(|v| v.into_a()) {
            Ok(x) => x,
            Err(err) => return Some(format!("{}: {}", k, err)),
        };
        let want = match eval_str(&BareEnv, v).and_then(|v| v.into_form()) {
            Ok(f) => f,
            Err(err) => return Some(format!("{}: {}", k, err)),
        };
        let got = e.d(&Form::scalar(x));
        (got != want).then(|| format!("d({}): {}", k, diff_text(&got, &want)))
    })
}

fn inverse_round_trip(e: &Exterior) -> Check {
    let formulas = match e.inverse_formulas() {
        Ok(f) => f,
        Err(err) => return Check::fail("exterior.d.inverse-formulas", err.to_string()),
    };
    Check::first_failure("exterior.d.inverse-formulas", formulas, |(i, terms)| {
        let mut acc = Form::zero();
        for (c, x, y) in terms {
            acc.add_scaled(&e.mul_left(x, &e.d(&Form::scalar(y.clone()))), c);
        }
        let want = Form::omega(*i);
        (acc != want).then(|| format!("w{}: {}", idx(*i), diff_text(&acc, &want)))
    })
}

fn d_squared(e: &Exterior, cap: u32) -> Vec<Check> {
    let dd = |f: &Form| e.d(&e.d(f));
    vec![
        Check::first_failure("exterior.d2.functions", a_monomials(cap), |m| {
            let r = dd(&Form::scalar(Elem::basis(*m)));
            (!r.is_zero()).then(|| format!("d d({}) = {}", m, r))
        }),
        Check::first_failure("exterior.d2.omega", 0..4u8, |&i| {
            let r = dd(&Form::omega(i));
            (!r.is_zero()).then(|| format!("d d(w{}) = {}", idx(i), r))
        }),
        Check::first_failure("exterior.d2.degree-2", Wedge::of_degree(2), |w| {
            let r = dd(&Form::term(one(), *w));
            (!r.is_zero()).then(|| format!("d d({}) = {}", w.text('w'), r))
        }),
    ]
}

fn sign(d: u32) -> FieldElem {
    FieldElem::from_int(if d.is_multiple_of(2) { 1 } else { -1 })
}

fn random_pairs(seed: u64, n: usize, max_deg: u32) -> Vec<(Form, Form)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let p = rng.gen_range(0..=max_deg);
            let q = rng.gen_range(0..=max_deg - p);
            (random_form(&mut rng, p), random_form(&mut rng, q))
        })
        .collect()
}

fn leibniz(e: &Exterior, seed: u64) -> Check {
    Check::first_failure("exterior.leibniz", random_pairs(seed, 40, 2), |(x, y)| {
        let p = x.degree().unwrap_or(0);
        let lhs = e.d(&e.wedge(x, y));
        let mut rhs = e.wedge(&e.d(x), y);
        rhs.add_scaled(&e.wedge(x, &e.d(y)), &sign(p));
        (lhs != rhs).then(|| format!("alpha = {}, beta = {}", x, y))
    })
}

fn associativity(e: &Exterior, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let triples: Vec<(Form, Form, Form)> = (0..30)
        .map(|_| {
            let a = rng.gen_range(0..=2);
            let b = rng.gen_range(0..=2);
            let c = rng.gen_range(0..=1);
            (
                random_form(&mut rng, a),
                random_form(&mut rng, b),
                random_form(&mut rng, c),
            )
        })
        .collect();
    Check::first_failure("exterior.wedge.associativity", triples, |(x, y, z)| {
        let l = e.wedge(&e.wedge(x, y), z);
        let r = e.wedge(x, &e.wedge(y, z));
        (l != r).then(|| format!("{} ; {} ; {}", x, y, z))
    })
}

/// Leftmost-first and rightmost-first rewriting agree on all words of
/// length 3 and 4.
fn confluence(e: &Exterior) -> Check {
    let words: Vec<Vec<u8>> = tuples(3).into_iter().chain(tuples(4)).collect();
    Check::first_failure("exterior.wedge.confluence", words, |w| {
        let rules = e.omega_rules();
        let l = rules.reduce_with(w, true);
        let r = rules.reduce_with(w, false);
        (l != r).then(|| format!("word {}", w.iter().map(|&i| idx(i)).collect::<String>()))
    })
}

/// Normal-word counts against 4^d minus the rank of the degree-d part of the
/// ideal generated by ker(1 − σ), in degrees 2 and 3.
fn dimensions(e: &Exterior) -> Vec<Check> {
    let counts: Vec<usize> = (0..=4).map(|d| e.dimension(d)).collect();
    let mut out = vec![Check::expect(
        "exterior.dimension.normal-words",
        counts == [1, 4, 6, 4, 1],
        || format!("{:?}", counts),
    )];
    let ker = &e.tables().s_ker;
    let witness = (2..=3u32).find_map(|d| {
        let n = 4usize.pow(d);
        let mut rows = Vec::new();
        for p in 0..=(d - 2) {
            for v in ker {
                for pre in tuples(p as usize) {
                    for post in tuples((d - 2 - p) as usize) {
                        let mut row = vec![FieldElem::zero(); n];
                        for (pair, c) in v.iter().enumerate() {
                            if c.is_zero() {
                                continue;
                            }
                            let (i, j) = pair_of(pair);
                            let word: Vec<u8> = pre
                                .iter()
                                .copied()
                                .chain([i, j])
                                .chain(post.iter().copied())
                                .collect();
                            let col = word.iter().fold(0usize, |acc, &x| acc * 4 + x as usize);
                            row[col] = c.clone();
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let rank = FMatrix::from_rows(rows).rank();
        let quotient = n - rank;
        (quotient != e.dimension(d)).then(|| {
            format!(
                "degree {}: quotient {} vs {} normal words",
                d,
                quotient,
                e.dimension(d)
            )
        })
    });
    out.push(Check::new("exterior.dimension.ideal-rank", witness));
    out
}

fn bimodule(e: &Exterior) -> Check {
    let cases: Vec<(u8, AMono)> = (0..4u8)
        .flat_map(|i| a_monomials(2).into_iter().map(move |m| (i, m)))
        .collect();
    Check::first_failure("exterior.bimodule", cases, |(i, m)| {
        // x ω_i = ω_j (S^{-1}(f_ij) ⊳ x), then pushed back left
        let x = Elem::basis(*m);
        let want = Form::term(x.clone(), Wedge::single(*i));
        let mut got = Form::zero();
        for j in 0..4u8 {
            let y = act_left(e.functional_inverse(*i, j), &x);
            got.add_assign(&e.form_times_a(&Form::omega(j), &y));
        }
        (got != want).then(|| format!("x = {}, i = {}: {}", m, idx(*i), diff_text(&got, &want)))
    })
}

fn d_right(e: &Exterior, x: &RightCoacted) -> RightCoacted {
    let mut out = Elem::zero();
    for ((m, v, r), c) in x.iter() {
        for (w, y) in e.d(&Form::term(Elem::basis(*m), *v)).iter() {
            for (n, d) in y.iter() {
                out.add_term((*n, *w, *r), c * d);
            }
        }
    }
    out
}

fn d_left(e: &Exterior, x: &LeftCoacted) -> LeftCoacted {
    let mut out = Elem::zero();
    for ((l, m, v), c) in x.iter() {
        for (w, y) in e.d(&Form::term(Elem::basis(*m), *v)).iter() {
            for (n, d) in y.iter() {
                out.add_term((*l, *n, *w), c * d);
            }
        }
    }
    out
}

fn coactions(e: &Exterior, seed: u64) -> Vec<Check> {
    let pairs = random_pairs(seed ^ 0xc0ac7, 25, 2);
    let forms: Vec<Form> = pairs
        .iter()
        .flat_map(|(x, y)| [x.clone(), y.clone()])
        .collect();
    vec![
        Check::first_failure(
            "exterior.coaction.right-multiplicative",
            pairs.iter(),
            |(x, y)| {
                let l = e.coact_right(&e.wedge(x, y));
                let r = e.right_coacted_mul(&e.coact_right(x), &e.coact_right(y));
                (l != r).then(|| format!("alpha = {}, beta = {}", x, y))
            },
        ),
        Check::first_failure(
            "exterior.coaction.left-multiplicative",
            pairs.iter(),
            |(x, y)| {
                let l = e.coact_left(&e.wedge(x, y));
                let r = e.left_coacted_mul(&e.coact_left(x), &e.coact_left(y));
                (l != r).then(|| format!("alpha = {}, beta = {}", x, y))
            },
        ),
        Check::first_failure("exterior.coaction.counit", forms.iter(), |x| {
            let r = e.right_counit(&e.coact_right(x));
            let l = e.left_counit(&e.coact_left(x));
            (r != **x || l != **x).then(|| format!("alpha = {}", x))
        }),
        Check::first_failure("exterior.coaction.d-equivariant", forms.iter(), |x| {
            let r = e.coact_right(&e.d(x)) == d_right(e, &e.coact_right(x));
            let l = e.coact_left(&e.d(x)) == d_left(e, &e.coact_left(x));
            (!r || !l).then(|| format!("alpha = {}", x))
        }),
    ]
}

fn parse_a(s: &str) -> AElem {
    eval_str(&BareEnv, s)
        .and_then(|v| v.into_a())
        .expect("literal A-element")
}

fn examples(e: &Exterior) -> Check {
    let t = e.tables();
    let lam_qq = &FieldElem::lambda() * &(&FieldElem::q() + &FieldElem::q_pow(-1));
    let mut failures = Vec::new();
    if !e.reduce_word(&[0, 0]).is_zero() {
        failures.push("w- /\\ w- is not zero".to_string());
    }
    if e.reduce_word(&[2, 2]) != e.reduce_word(&[1, 0]).scale(&lam_qq) {
        failures.push(format!("wz /\\ wz = {}", e.reduce_word(&[2, 2])));
    }
    let w_a_w = e.wedge(
        &Form::omega(0),
        &Form::term(Elem::basis(AMono::a()), Wedge::single(1)),
    );
    if w_a_w.coeff(Wedge(0b11)) != Elem::basis(AMono::a()) {
        failures.push(format!("w- /\\ (a w+) = {}", w_a_w));
    }
    // Δ_R(ω_−) = ω_k ⊗ J_{k−} with the literal J column
    let column = ["a!^2", "-q * c!^2", "-q * a! * c!", "0"];
    let mut want: RightCoacted = Elem::zero();
    for (k, j) in column.iter().enumerate() {
        for (m, c) in parse_a(j).iter() {
            want.add_term((AMono::one(), Wedge::single(k as u8), *m), c.clone());
        }
    }
    if e.coact_right(&Form::omega(0)) != want {
        failures.push("right coaction of w- differs from the J column".into());
    }
    let mut left0: LeftCoacted = Elem::zero();
    left0.add_term(
        (AMono::one(), AMono::one(), Wedge::single(3)),
        FieldElem::one(),
    );
    if e.coact_left(&Form::omega(3)) != left0 {
        failures.push("left coaction of w0 is not 1 (x) w0".into());
    }
    if !e.d(&Form::scalar(one())).is_zero() {
        failures.push("d 1 is not zero".into());
    }
    // η_0 as the J column under the antipode, with J_00 = 1
    let mut eta0 = Form::omega(3);
    for i in 0..3u8 {
        eta0.add_assign(&e.form_times_a(&Form::omega(i), &antipode(&t.j[i as usize][3], false)));
    }
    if t.j[3][3] != one() || *e.eta(3) != eta0 {
        failures.push(format!("e0 = {}", e.eta(3)));
    }
    // d(ω_−) = d(c*) ∧ d(a*) − q d(a*) ∧ d(c*)
    let dc = e.d(&Form::scalar(Elem::basis(AMono::c_star())));
    let da = e.d(&Form::scalar(Elem::basis(AMono::a_star())));
    let mut want = e.wedge(&dc, &da);
    want.add_scaled(&e.wedge(&da, &dc), &-FieldElem::q());
    if *e.d_omega(0) != want {
        failures.push(format!("d w- = {}", e.d_omega(0)));
    }
    Check::new(
        "exterior.examples",
        (!failures.is_empty()).then(|| failures.join("; ")),
    )
}

fn eta_checks(e: &Exterior, seed: u64) -> Vec<Check> {
    let t = e.tables();
    let mut out = Vec::new();
    out.push(Check::first_failure(
        "exterior.eta.omega-from-eta",
        0..4u8,
        |&k| {
            let mut acc = Form::zero();
            for i in 0..4 {
                acc.add_assign(&e.form_times_a(e.eta(i), &t.j[i as usize][k as usize]));
            }
            (acc != Form::omega(k)).then(|| format!("k = {}: {}", idx(k), acc))
        },
    ));
    out.push(Check::first_failure(
        "exterior.eta.right-invariant",
        0..4u8,
        |&i| {
            let mut want: RightCoacted = Elem::zero();
            for (w, x) in e.eta(i).iter() {
                for (m, c) in x.iter() {
                    want.add_term((*m, *w, AMono::one()), c.clone());
                }
            }
            (e.coact_right(e.eta(i)) != want).then(|| format!("e{}", idx(i)))
        },
    ));
    out.push(Check::first_failure(
        "exterior.eta.basis",
        (0u8..16).map(Wedge),
        |w| {
            let got = e.to_eta(&e.eta_word(*w));
            let ok = got.iter().count() == 1 && got.coeff(*w) == one();
            (!ok).then(|| format!("eta monomial {}", w.text('e')))
        },
    ));
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xe7a);
    let forms: Vec<Form> = (0..30).map(|n| random_form(&mut rng, n % 5)).collect();
    out.push(Check::first_failure(
        "exterior.eta.round-trip",
        forms,
        |f| {
            let back = e.from_eta(&e.to_eta(f));
            (back != *f).then(|| diff_text(&back, f))
        },
    ));
    out.push(Check::first_failure(
        "exterior.eta.relations",
        e.eta_presentation()
            .rows
            .iter()
            .zip(&e.eta_presentation().pivots),
        |(row, piv)| {
            let mut acc = Form::zero();
            for (p, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (k, l) = pair_of(p);
                acc.add_scaled(&e.wedge(e.eta(k), e.eta(l)), c);
            }
            (!acc.is_zero()).then(|| format!("relation with pivot e{} e{}", idx(piv.0), idx(piv.1)))
        },
    ));
    out.push(eta_sigma(e));
    out
}

fn apply_sigma(e: &Exterior, x: &TensorForm) -> TensorForm {
    let t = e.tables();
    let mut out = TensorForm::new();
    for (w, y) in x {
        for k in 0..4u8 {
            for l in 0..4u8 {
                let s = t.sigma(w[0], w[1], k, l);
                if s.is_zero() {
                    continue;
                }
                let e = out.entry(vec![k, l]).or_default();
                e.add_assign(&y.scale(s));
            }
        }
    }
    out.retain(|_, y| !y.is_zero());
    out
}

/// σ(η_i ⊗ η_j) = σ^{lk}_{ji} η_k ⊗ η_l, with σ applied left-linearly to the
/// ω-expansion in Γ ⊗_A Γ.
fn eta_sigma(e: &Exterior) -> Check {
    let t = e.tables();
    let raw: Vec<TensorForm> = (0..4u8).map(|i| e.raw(e.eta(i))).collect();
    let pairs: Vec<(u8, u8)> = (0..16).map(pair_of).collect();
    Check::first_failure("exterior.eta.sigma", pairs, |&(i, j)| {
        let lhs = apply_sigma(e, &e.raw_tensor(&raw[i as usize], &raw[j as usize]));
        let mut rhs = TensorForm::new();
        for k in 0..4u8 {
            for l in 0..4u8 {
                let s = t.sigma(j, i, l, k);
                if s.is_zero() {
                    continue;
                }
                for (w, y) in e.raw_tensor(&raw[k as usize], &raw[l as usize]) {
                    let entry = rhs.entry(w).or_default();
                    entry.add_assign(&y.scale(s));
                }
            }
        }
        rhs.retain(|_, y| !y.is_zero());
        (lhs != rhs).then(|| format!("e{} (x) e{}", idx(i), idx(j)))
    })
}

/// η_i x = (x ⊲ S^{-2}(f_ij)) η_j for x over the generators of A.
pub fn verify_fun_f_r(e: &Exterior) -> Check {
    let t = e.tables();
    let s2: Vec<Vec<_>> =
        t.f.iter()
            .map(|row| {
                row.iter()
                    .map(|f| antipode(&antipode(f, true), true))
                    .collect()
            })
            .collect();
    let cases: Vec<(u8, &'static str, AElem)> = (0..4u8)
        .flat_map(|i| a_generators().into_iter().map(move |(n, x)| (i, n, x)))
        .collect();
    Check::first_failure("identities.fun-f-r", cases, |(i, n, x)| {
        let lhs = e.form_times_a(e.eta(*i), x);
        let mut rhs = Form::zero();
        for j in 0..4 {
            let y = act_right(x, &s2[*i as usize][j]);
            rhs.add_assign(&e.mul_left(&y, e.eta(j as u8)));
        }
        (lhs != rhs).then(|| format!("i = {}, x = {}", idx(*i), n))
    })
}

/// Every exterior-algebra check. `cap` bounds the A-degree of the d² test.
pub fn verify_exterior(e: &Exterior, cap: u32, seed: u64) -> Vec<Check> {
    let mut out = vec![d_on_generators(e), inverse_round_trip(e)];
    out.extend(d_squared(e, cap));
    out.push(leibniz(e, seed));
    out.push(associativity(e, seed));
    out.push(confluence(e));
    out.extend(dimensions(e));
    out.push(bimodule(e));
    out.extend(coactions(e, seed));
    out.push(examples(e));
    out.extend(eta_checks(e, seed));
    out
}
