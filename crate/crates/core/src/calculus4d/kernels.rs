use num_rational::BigRational;

use super::tables::{golden_kernel, pair_index, pair_name, pair_of, CalculusTables};
use crate::qfield::{in_span, kernel_basis, span_rank, FMatrix, FieldElem};
use crate::report::Check;

fn vec_text(v: &[FieldElem]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| {
            let (i, j) = pair_of(p);
            format!("{} : {}", pair_name(i, j), c)
        })
        .collect();
    parts.join(" ; ")
}

/// Mutual containment of two spans, with the first stray vector as witness.
fn same_span(id: &str, computed: &[Vec<FieldElem>], golden: &[Vec<FieldElem>]) -> Vec<Check> {
    let g_in_c = Check::first_failure(
        format!("{id}.golden-in-computed"),
        golden.iter().enumerate(),
        |(n, v)| {
            (!in_span(computed, v)).then(|| {
                format!(
                    "listed element {} ({}) not in the kernel",
                    n + 1,
                    vec_text(v)
                )
            })
        },
    );
    let c_in_g = Check::first_failure(format!("{id}.computed-in-golden"), computed.iter(), |v| {
        (!in_span(golden, v))
            .then(|| format!("kernel vector {} not in the listed span", vec_text(v)))
    });
    let rank = span_rank(golden);
    let indep = Check::expect(
        format!("{id}.golden-independent"),
        rank == golden.len(),
        || {
            format!(
                "{} listed elements span only {} dimensions",
                golden.len(),
                rank
            )
        },
    );
    vec![g_in_c, c_in_g, indep]
}

fn annihilated(id: &str, m: &FMatrix, ker: &[Vec<FieldElem>]) -> Check {
    Check::first_failure(format!("{id}.annihilated"), ker.iter(), |v| {
        m.mul_vec(v)
            .iter()
            .any(|c| !c.is_zero())
            .then(|| vec_text(v))
    })
}

/// Nullity of `m` with every entry evaluated at the rational `s`.
pub fn numeric_nullity(m: &FMatrix, s: &BigRational) -> crate::Result<usize> {
    let e = m.map(|c| c.eval(s).map(FieldElem::from_rational))?;
    Ok(kernel_basis(&e).len())
}

/// Dimensions of ker(1 − σ) and ker(1 − σ^t), mutual containment with the
/// listed kernels, and the same dimensions at s = 3/2.
pub fn verify_kernels(t: &CalculusTables) -> Vec<Check> {
    let m = t.sigma_matrix();
    let id = FMatrix::identity(16);
    let a = id.sub(&m);
    let b = id.sub(&m.transpose());
    let mut out = vec![
        Check::expect("kernels.sigma.dim", t.s_ker.len() == 10, || {
            format!("dim = {}", t.s_ker.len())
        }),
        Check::expect("kernels.sigma-t.dim", t.t_ker.len() == 10, || {
            format!("dim = {}", t.t_ker.len())
        }),
        annihilated("kernels.sigma", &a, &t.s_ker),
        annihilated("kernels.sigma-t", &b, &t.t_ker),
    ];
    for (id, name, ker) in [
        ("kernels.sigma", "kernel_sigma", &t.s_ker),
        ("kernels.sigma-t", "kernel_sigma_t", &t.t_ker),
    ] {
        match golden_kernel(&t.fixtures, name) {
            Ok(g) => out.extend(same_span(id, ker, &g)),
            Err(e) => out.push(Check::fail(
                format!("{id}.golden-in-computed"),
                e.to_string(),
            )),
        }
    }
    let s = BigRational::new(3.into(), 2.into());
    let dims = numeric_nullity(&a, &s).and_then(|x| Ok((x, numeric_nullity(&b, &s)?)));
    out.push(match dims {
        Ok((x, y)) => Check::expect("kernels.numeric-s-3/2", x == 10 && y == 10, || {
            format!("dims at s = 3/2: {} and {}", x, y)
        }),
        Err(e) => Check::fail("kernels.numeric-s-3/2", e.to_string()),
    });
    out
}

/// Checks on the extracted t: the defining equation on every pivot row, the
/// bimodule compatibility with the f's, and agreement of the generated odd
/// relations with the listed ones.
pub fn verify_t(t: &CalculusTables) -> Vec<Check> {
    let mut out = Vec::new();
    let pivots = t.t.pivots.clone();
    out.push(Check::first_failure(
        "t.eq-t",
        pivots
            .iter()
            .flat_map(|&p| (0..16).map(move |c| (p, pair_of(c)))),
        |&((i, j), (k, l))| {
            let mut v = t.t(i, j, k, l) - t.sigma(k, l, i, j);
            if (i, j) == (k, l) {
                v += &FieldElem::one();
            }
            for mn in 0..16 {
                let (m, n) = pair_of(mn);
                v -= &(t.t(i, j, m, n) * t.sigma(k, l, m, n));
            }
            (!v.is_zero()).then(|| {
                format!(
                    "ij={} kl={}: residual {}",
                    pair_name(i, j),
                    pair_name(k, l),
                    v
                )
            })
        },
    ));
    out.push(Check::expect(
        "t.pivots-oriented",
        t.t.pivots.len() == 10 && t.t.pivots.iter().all(|&(i, j)| i >= j),
        || {
            let names: Vec<String> = t.t.pivots.iter().map(|&(i, j)| pair_name(i, j)).collect();
            format!("pivots {}", names.join(" "))
        },
    ));
    out.push(Check::expect(
        "t.diagonal-zero",
        pivots.iter().all(|&(i, j)| t.t(i, j, i, j).is_zero()),
        || "t^{ij}_{ij} nonzero".into(),
    ));
    let generated: Vec<Vec<FieldElem>> = pivots
        .iter()
        .map(|&(i, j)| {
            let mut v: Vec<FieldElem> = (0..16)
                .map(|c| t.t(i, j, pair_of(c).0, pair_of(c).1).clone())
                .collect();
            v[pair_index(i, j)] = FieldElem::one();
            v
        })
        .collect();
    match golden_kernel(&t.fixtures, "odd_relations") {
        Ok(g) => out.extend(same_span("t.odd-relations", &generated, &g)),
        Err(e) => out.push(Check::fail(
            "t.odd-relations.golden-in-computed",
            e.to_string(),
        )),
    }
    out.extend(super::identities::verify_relt(t));
    out
}
