//! Golden data files and their line formats.
//!
//! Every file is line based; `#` starts a comment and blank lines are
//! skipped. Index keys use the characters `-`, `+`, `z`, `0`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::syntax::index_of;

const BUILTIN: &[(&str, &str)] = &[
    ("tangent", include_str!("../../fixtures/tangent.txt")),
    (
        "functionals",
        include_str!("../../fixtures/functionals.txt"),
    ),
    ("J", include_str!("../../fixtures/J.txt")),
    ("sigma", include_str!("../../fixtures/sigma.txt")),
    (
        "structure_constants",
        include_str!("../../fixtures/structure_constants.txt"),
    ),
    (
        "kernel_sigma",
        include_str!("../../fixtures/kernel_sigma.txt"),
    ),
    (
        "kernel_sigma_t",
        include_str!("../../fixtures/kernel_sigma_t.txt"),
    ),
    (
        "odd_relations",
        include_str!("../../fixtures/odd_relations.txt"),
    ),
    (
        "differentials",
        include_str!("../../fixtures/differentials.txt"),
    ),
    (
        "inverse_formulas",
        include_str!("../../fixtures/inverse_formulas.txt"),
    ),
    ("antipode_f", include_str!("../../fixtures/antipode_f.txt")),
    (
        "antipode_inverse_f",
        include_str!("../../fixtures/antipode_inverse_f.txt"),
    ),
    ("g_element", include_str!("../../fixtures/g_element.txt")),
    (
        "commutators",
        include_str!("../../fixtures/commutators.txt"),
    ),
];

/// The set of golden data files, keyed by name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixtures {
    texts: BTreeMap<String, String>,
}

impl Default for Fixtures {
    fn default() -> Self {
        Self::builtin()
    }
}

impl Fixtures {
    /// The files shipped with the crate.
    pub fn builtin() -> Self {
        Fixtures {
            texts: BUILTIN
                .iter()
                .map(|(k, v)| (k.to_string(), v.to_string()))
                .collect(),
        }
    }

    pub fn names() -> Vec<&'static str> {
        BUILTIN.iter().map(|(k, _)| *k).collect()
    }

    pub fn get(&self, name: &str) -> Result<&str> {
        self.texts
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| Error::Unknown {
                kind: "fixture".into(),
                name: name.into(),
            })
    }

    /// Replaces a file, e.g. to inject a corrupted table.
    pub fn set(&mut self, name: &str, text: impl Into<String>) -> Result<()> {
        match self.texts.get_mut(name) {
            Some(t) => {
                *t = text.into();
                Ok(())
            }
            None => Err(Error::Unknown {
                kind: "fixture".into(),
                name: name.into(),
            }),
        }
    }
}

fn bad(name: &str, line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Fixture {
        name: name.into(),
        msg: format!("line {}: {}", line, msg),
    }
}

/// Non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(n, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((n + 1, l))
    })
}

fn split_key<'a>(name: &str, line: usize, s: &'a str) -> Result<(&'a str, &'a str)> {
    let (k, v) = s
        .split_once(':')
        .ok_or_else(|| bad(name, line, "expected `key : value`"))?;
    Ok((k.trim(), v.trim()))
}

fn indices(name: &str, line: usize, key: &str) -> Result<Vec<u8>> {
    key.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| index_of(c).ok_or_else(|| bad(name, line, format!("bad index `{}`", c))))
        .collect()
}

/// Lines `indices : expr` with exactly `n` index characters in the key.
pub(crate) fn keyed(name: &str, text: &str, n: usize) -> Result<Vec<(Vec<u8>, String)>> {
    let mut out = Vec::new();
    for (line, s) in content_lines(text) {
        let (k, v) = split_key(name, line, s)?;
        let idx = indices(name, line, k)?;
        if idx.len() != n {
            return Err(bad(
                name,
                line,
                format!("expected {} indices, found {}", n, idx.len()),
            ));
        }
        out.push((idx, v.to_string()));
    }
    Ok(out)
}

/// Lines `word : expr` with a free-form key.
pub(crate) fn named(name: &str, text: &str) -> Result<Vec<(String, String)>> {
    content_lines(text)
        .map(|(line, s)| split_key(name, line, s).map(|(k, v)| (k.to_string(), v.to_string())))
        .collect()
}

/// Lines `pq : expr ; rs : expr ; …`, one vector per line.
pub(crate) fn pair_lists(name: &str, text: &str) -> Result<Vec<Vec<((u8, u8), String)>>> {
    let mut out = Vec::new();
    for (line, s) in content_lines(text) {
        let mut row = Vec::new();
        for part in s.split(';') {
            let (k, v) = split_key(name, line, part)?;
            let idx = indices(name, line, k)?;
            if idx.len() != 2 {
                return Err(bad(name, line, "expected a pair of indices"));
            }
            row.push(((idx[0], idx[1]), v.to_string()));
        }
        out.push(row);
    }
    Ok(out)
}

/// One `x dy` summand of an inverse formula.
#[derive(Clone, Debug)]
pub(crate) struct XdY {
    pub coef: String,
    pub x: String,
    pub y: String,
}

/// Lines `i : coef | x | y ; …`.
pub(crate) fn inverse_formulas(name: &str, text: &str) -> Result<Vec<(u8, Vec<XdY>)>> {
    let mut out = Vec::new();
    for (line, s) in content_lines(text) {
        let (k, v) = split_key(name, line, s)?;
        let idx = indices(name, line, k)?;
        if idx.len() != 1 {
            return Err(bad(name, line, "expected one index"));
        }
        let mut terms = Vec::new();
        for part in v.split(';') {
            let f: Vec<&str> = part.split('|').map(str::trim).collect();
            if f.len() != 3 {
                return Err(bad(name, line, "expected `coef | x | y`"));
            }
            terms.push(XdY {
                coef: f[0].into(),
                x: f[1].into(),
                y: f[2].into(),
            });
        }
        out.push((idx[0], terms));
    }
    Ok(out)
}

/// Wraps an elaboration error with the file it came from.
pub(crate) fn in_fixture<T>(name: &str, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        e @ Error::Fixture { .. } => e,
        e => Error::Fixture {
            name: name.into(),
            msg: e.to_string(),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_files_parse() {
        let fx = Fixtures::builtin();
        assert_eq!(
            keyed("sigma", fx.get("sigma").unwrap(), 4).unwrap().len(),
            32
        );
        assert_eq!(
            keyed(
                "structure_constants",
                fx.get("structure_constants").unwrap(),
                3
            )
            .unwrap()
            .len(),
            12
        );
        assert_eq!(
            pair_lists("kernel_sigma", fx.get("kernel_sigma").unwrap())
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            inverse_formulas("inverse_formulas", fx.get("inverse_formulas").unwrap())
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn malformed_line_is_reported() {
        let e = keyed("sigma", "-- -q : 1", 4).unwrap_err();
        assert!(matches!(e, Error::Fixture { .. }));
    }
}
