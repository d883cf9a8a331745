//! The 4D+ bicovariant calculus on SU_q(2): tangent basis, the f and J
//! tables, and everything derived from them by the pairing.
//!
//! Indices run over (−, +, z, 0), encoded 0..=3.

pub(crate) mod fixtures;
mod identities;
mod kernels;
pub(crate) mod tables;

use serde_json::{json, Value};

pub use fixtures::Fixtures;
pub use identities::{
    a_generators, commutator, ids4_residual, tuples, verify_fundamental_identities, verify_relt,
    verify_sf_matrices, verify_shapes, SfTable,
};
pub use kernels::{numeric_nullity, verify_kernels, verify_t};
pub use tables::{
    build_tables, build_tables_from, extract_t, golden_c, golden_kernel, golden_sigma,
    is_normal_pair, pair_index, pair_name, pair_of, CalculusTables, Presentation, TMatrix,
    TablesEnv,
};

use crate::error::{Error, Result};
use crate::hopfcore::{format_terms, Elem, HopfMonomial};
use crate::qfield::FieldElem;
use crate::report::Check;
use crate::syntax::INDEX_CHARS;

/// Names accepted by [`table_json`] and [`table_text`].
pub const TABLE_NAMES: &[&str] = &[
    "X", "f", "J", "sigma", "C", "t", "S-kernel", "T-kernel", "Sf", "c0",
];

/// σ and C against their golden tables, entry by entry.
pub fn verify_golden_tables(t: &CalculusTables) -> Vec<Check> {
    let compare = |id: &str,
                   golden: Result<Vec<FieldElem>>,
                   computed: &[FieldElem],
                   label: fn(usize) -> String| match golden {
        Ok(g) => Check::first_failure(id, 0..g.len(), |&n| {
            (g[n] != computed[n])
                .then(|| format!("{}: listed {}, computed {}", label(n), g[n], computed[n]))
        }),
        Err(e) => Check::fail(id, e.to_string()),
    };
    vec![
        compare(
            "tables.sigma",
            golden_sigma(&t.fixtures),
            t.sigma_flat(),
            tables::sigma_label,
        ),
        compare(
            "tables.C",
            golden_c(&t.fixtures),
            t.c_flat(),
            tables::c_label,
        ),
    ]
}

fn basis() -> Value {
    json!(INDEX_CHARS
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>())
}

fn elem_json<M: HopfMonomial + std::fmt::Display>(x: &Elem<M>) -> Value {
    json!(x
        .iter()
        .map(|(m, c)| json!({"monomial": m.to_string(), "coeff": c.to_string()}))
        .collect::<Vec<_>>())
}

fn nest<T>(dims: usize, leaf: &dyn Fn(&[u8]) -> T) -> Value
where
    T: Into<Value>,
{
    fn go<T: Into<Value>>(prefix: &mut Vec<u8>, left: usize, leaf: &dyn Fn(&[u8]) -> T) -> Value {
        if left == 0 {
            return leaf(prefix).into();
        }
        let mut v = Vec::new();
        for i in 0..4 {
            prefix.push(i);
            v.push(go(prefix, left - 1, leaf));
            prefix.pop();
        }
        Value::Array(v)
    }
    go(&mut Vec::new(), dims, leaf)
}

fn unknown(name: &str) -> Error {
    Error::Unknown {
        kind: "table".into(),
        name: name.into(),
    }
}

/// JSON export: `{"table", "basis", "entries"}`. Four-index arrays are
/// nested as `[i][j][k][l]` for σ^{kl}_{ij} and t^{ij}_{kl}; C as `[k][i][j]`.
pub fn table_json(t: &CalculusTables, name: &str) -> Result<Value> {
    let entries = match name {
        "X" => nest(1, &|k| elem_json(&t.x[k[0] as usize])),
        "f" => nest(2, &|k| elem_json(&t.f[k[0] as usize][k[1] as usize])),
        "Sf" => {
            let sf = SfTable::new(t);
            nest(2, &|k| elem_json(sf.get(k[0], k[1])))
        }
        "J" => nest(2, &|k| elem_json(&t.j[k[0] as usize][k[1] as usize])),
        "sigma" => nest(4, &|k| t.sigma(k[0], k[1], k[2], k[3]).to_string()),
        "t" => nest(4, &|k| t.t(k[0], k[1], k[2], k[3]).to_string()),
        "C" => nest(3, &|k| t.c(k[0], k[1], k[2]).to_string()),
        "S-kernel" | "T-kernel" => {
            let ker = if name == "S-kernel" {
                &t.s_ker
            } else {
                &t.t_ker
            };
            json!(ker
                .iter()
                .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>())
        }
        "c0" => json!(t.c0.to_string()),
        _ => return Err(unknown(name)),
    };
    Ok(json!({"table": name, "basis": basis(), "entries": entries}))
}

fn idx(k: &[u8]) -> String {
    k.iter().map(|&i| INDEX_CHARS[i as usize]).collect()
}

fn kernel_line(v: &[FieldElem]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| format!("{} : {}", idx(&[pair_of(p).0, pair_of(p).1]), c))
        .collect();
    parts.join(" ; ")
}

/// Text export in the fixture line format; zero entries are omitted.
pub fn table_text(t: &CalculusTables, name: &str) -> Result<String> {
    let mut lines = Vec::new();
    let mut push = |key: String, v: String| {
        if v != "0" {
            lines.push(format!("{} : {}", key, v));
        }
    };
    let pairs = tuples(2);
    match name {
        "X" => (0..4u8).for_each(|i| push(idx(&[i]), t.x[i as usize].to_string())),
        "f" => pairs
            .iter()
            .for_each(|k| push(idx(k), t.f[k[0] as usize][k[1] as usize].to_string())),
        "Sf" => {
            let sf = SfTable::new(t);
            pairs
                .iter()
                .for_each(|k| push(idx(k), sf.get(k[0], k[1]).to_string()))
        }
        "J" => pairs
            .iter()
            .for_each(|k| push(idx(k), t.j[k[0] as usize][k[1] as usize].to_string())),
        "sigma" => tuples(4).iter().for_each(|k| {
            push(
                format!("{} {}", idx(&k[..2]), idx(&k[2..])),
                t.sigma(k[0], k[1], k[2], k[3]).to_string(),
            )
        }),
        "t" => tuples(4).iter().for_each(|k| {
            push(
                format!("{} {}", idx(&k[..2]), idx(&k[2..])),
                t.t(k[0], k[1], k[2], k[3]).to_string(),
            )
        }),
        "C" => tuples(3).iter().for_each(|k| {
            push(
                format!("{} {}", idx(&k[..1]), idx(&k[1..])),
                t.c(k[0], k[1], k[2]).to_string(),
            )
        }),
        "S-kernel" => t.s_ker.iter().for_each(|v| lines.push(kernel_line(v))),
        "T-kernel" => t.t_ker.iter().for_each(|v| lines.push(kernel_line(v))),
        "c0" => lines.push(t.c0.to_string()),
        _ => return Err(unknown(name)),
    }
    Ok(lines.join("\n"))
}

/// `c * m + …` text for an element, shared by the exporters.
pub fn elem_text<M: HopfMonomial + std::fmt::Display>(x: &Elem<M>) -> String {
    format_terms(x.iter(), |m| m.is_unit(), |m| m.to_string())
}
