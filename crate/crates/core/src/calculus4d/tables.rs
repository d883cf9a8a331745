use once_cell::sync::Lazy;

use super::fixtures::{self, in_fixture, Fixtures};
use crate::error::{Error, Result};
use crate::hopfcore::{pair, AElem, HElem};
use crate::qfield::{kernel_basis, FMatrix, FieldElem};
use crate::syntax::{elaborate, eval_str, parse, BareEnv, Env, INDEX_CHARS};

/// Flat position of the index pair `(i, j)` in a 16-vector.
pub fn pair_index(i: u8, j: u8) -> usize {
    4 * i as usize + j as usize
}

pub fn pair_of(p: usize) -> (u8, u8) {
    ((p / 4) as u8, (p % 4) as u8)
}

pub fn pair_name(i: u8, j: u8) -> String {
    format!("{}{}", INDEX_CHARS[i as usize], INDEX_CHARS[j as usize])
}

/// A pair `(i, j)` is normal when `i < j`; these survive in wedge and odd
/// normal forms.
pub fn is_normal_pair(i: u8, j: u8) -> bool {
    i < j
}

/// Column order listing non-normal pairs first, so echelon pivots land on
/// them whenever possible.
pub fn non_normal_first() -> Vec<usize> {
    let mut v: Vec<usize> = (0..16)
        .filter(|&p| !is_normal_pair(pair_of(p).0, pair_of(p).1))
        .collect();
    v.extend((0..16).filter(|&p| is_normal_pair(pair_of(p).0, pair_of(p).1)));
    v
}

/// Echelonized presentation of a 10-dimensional kernel: every row has a
/// distinct pivot pair with coefficient 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub rows: Vec<Vec<FieldElem>>,
    pub pivots: Vec<(u8, u8)>,
}

impl Presentation {
    /// Row whose pivot is `(i, j)`.
    pub fn row_for(&self, i: u8, j: u8) -> Option<&[FieldElem]> {
        self.pivots
            .iter()
            .position(|&p| p == (i, j))
            .map(|r| self.rows[r].as_slice())
    }

    /// Pivots all sit on non-normal pairs, so each non-normal product can be
    /// rewritten into normal ones.
    pub fn is_oriented(&self) -> bool {
        self.pivots.iter().all(|&(i, j)| !is_normal_pair(i, j)) && self.pivots.len() == 10
    }
}

fn present(ker: &[Vec<FieldElem>]) -> Result<Presentation> {
    let m = FMatrix::from_rows(ker.to_vec());
    let (r, pivots) = m.rref_with_order(&non_normal_first());
    if pivots.len() != ker.len() {
        return Err(Error::TExtractionAmbiguous(format!(
            "kernel vectors are dependent: rank {} for {} vectors",
            pivots.len(),
            ker.len()
        )));
    }
    Ok(Presentation {
        rows: (0..r.rows()).map(|i| r.row(i).to_vec()).collect(),
        pivots: pivots.into_iter().map(pair_of).collect(),
    })
}

/// The t-matrix read off an echelonized basis of ker(1 − σ^t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TMatrix {
    /// `t^{ij}_{kl}` at `[pair_index(i,j) * 16 + pair_index(k,l)]`.
    pub entries: Vec<FieldElem>,
    pub pivots: Vec<(u8, u8)>,
    /// Pairs that never occur as pivots; their rows are zero.
    pub unpivoted: Vec<(u8, u8)>,
}

impl TMatrix {
    pub fn get(&self, i: u8, j: u8, k: u8, l: u8) -> &FieldElem {
        &self.entries[pair_index(i, j) * 16 + pair_index(k, l)]
    }
}

/// Echelonizes `t_ker` (non-normal pairs first) and reads off
/// `t^{ij}_{kl}` from the non-pivot coefficients, so `t^{ij}_{ij} = 0`.
pub fn extract_t(t_ker: &[Vec<FieldElem>]) -> Result<TMatrix> {
    let p = present(t_ker)?;
    let mut entries = vec![FieldElem::zero(); 256];
    for (row, &(i, j)) in p.rows.iter().zip(&p.pivots) {
        for (c, v) in row.iter().enumerate() {
            if c != pair_index(i, j) {
                entries[pair_index(i, j) * 16 + c] = v.clone();
            }
        }
    }
    let unpivoted = (0..16)
        .map(pair_of)
        .filter(|pr| !p.pivots.contains(pr))
        .collect();
    Ok(TMatrix {
        entries,
        pivots: p.pivots,
        unpivoted,
    })
}

/// The 4D+ calculus data.
#[derive(Clone, Debug)]
pub struct CalculusTables {
    /// Quantum tangent basis X_i.
    pub x: Vec<HElem>,
    pub f: Vec<Vec<HElem>>,
    pub j: Vec<Vec<AElem>>,
    /// The scalar 1 − q/(q+1)^2 in the ω_0 coefficients of d.
    pub c0: FieldElem,
    sigma: Vec<FieldElem>,
    c: Vec<FieldElem>,
    pub t: TMatrix,
    pub s_ker: Vec<Vec<FieldElem>>,
    pub t_ker: Vec<Vec<FieldElem>>,
    /// Echelonized ker(1 − σ): the wedge rewriting rules.
    pub wedge_rules: Presentation,
    pub fixtures: Fixtures,
}

/// Elaborates X and f symbols from a table set.
pub struct TablesEnv<'a> {
    pub x: &'a [HElem],
    pub f: &'a [Vec<HElem>],
}

impl Env for TablesEnv<'_> {
    fn tangent(&self, i: u8) -> Result<HElem> {
        Ok(self.x[i as usize].clone())
    }

    fn functional(&self, i: u8, j: u8) -> Result<HElem> {
        Ok(self.f[i as usize][j as usize].clone())
    }
}

fn load_h(fx: &Fixtures, name: &str, n: usize) -> Result<Vec<(Vec<u8>, HElem)>> {
    let text = fx.get(name)?;
    let rows = fixtures::keyed(name, text, n)?;
    rows.into_iter()
        .map(|(k, e)| {
            Ok((
                k,
                in_fixture(name, eval_str(&BareEnv, &e).and_then(|v| v.into_h()))?,
            ))
        })
        .collect()
}

/// Parses a scalar-valued fixture expression.
pub(crate) fn scalar(name: &str, e: &str) -> Result<FieldElem> {
    in_fixture(
        name,
        parse(e)
            .and_then(|x| elaborate(&BareEnv, &x))
            .and_then(|v| v.into_scalar()),
    )
}

fn golden_array(
    fx: &Fixtures,
    name: &str,
    n: usize,
    size: usize,
    flat: impl Fn(&[u8]) -> usize,
) -> Result<Vec<FieldElem>> {
    let mut out = vec![FieldElem::zero(); size];
    for (k, e) in fixtures::keyed(name, fx.get(name)?, n)? {
        out[flat(&k)] = scalar(name, &e)?;
    }
    Ok(out)
}

/// σ^{kl}_{ij} from the golden table, at `[pair_index(i,j) * 16 + pair_index(k,l)]`.
pub fn golden_sigma(fx: &Fixtures) -> Result<Vec<FieldElem>> {
    golden_array(fx, "sigma", 4, 256, |k| {
        pair_index(k[0], k[1]) * 16 + pair_index(k[2], k[3])
    })
}

/// C^k_{ij} from the golden table, at `[k * 16 + pair_index(i,j)]`.
pub fn golden_c(fx: &Fixtures) -> Result<Vec<FieldElem>> {
    golden_array(fx, "structure_constants", 3, 64, |k| {
        k[0] as usize * 16 + pair_index(k[1], k[2])
    })
}

/// Reads a kernel list fixture as 16-vectors.
pub fn golden_kernel(fx: &Fixtures, name: &str) -> Result<Vec<Vec<FieldElem>>> {
    let mut out = Vec::new();
    for row in fixtures::pair_lists(name, fx.get(name)?)? {
        let mut v = vec![FieldElem::zero(); 16];
        for ((i, j), e) in row {
            v[pair_index(i, j)] += &scalar(name, &e)?;
        }
        out.push(v);
    }
    Ok(out)
}

/// First index where two flattened tables differ.
fn first_mismatch(
    table: &str,
    expected: &[FieldElem],
    computed: &[FieldElem],
    label: impl Fn(usize) -> String,
) -> Option<Error> {
    expected
        .iter()
        .zip(computed)
        .enumerate()
        .find(|(_, (e, c))| e != c)
        .map(|(n, (e, c))| Error::TableMismatch {
            table: table.into(),
            index: label(n),
            expected: e.to_string(),
            computed: c.to_string(),
        })
}

pub(crate) fn sigma_label(n: usize) -> String {
    let (i, j) = pair_of(n / 16);
    let (k, l) = pair_of(n % 16);
    format!("ij={} kl={}", pair_name(i, j), pair_name(k, l))
}

pub(crate) fn c_label(n: usize) -> String {
    let (i, j) = pair_of(n % 16);
    format!("k={} ij={}", INDEX_CHARS[n / 16], pair_name(i, j))
}

impl CalculusTables {
    /// σ^{kl}_{ij}.
    pub fn sigma(&self, i: u8, j: u8, k: u8, l: u8) -> &FieldElem {
        &self.sigma[pair_index(i, j) * 16 + pair_index(k, l)]
    }

    /// C^k_{ij}.
    pub fn c(&self, k: u8, i: u8, j: u8) -> &FieldElem {
        &self.c[k as usize * 16 + pair_index(i, j)]
    }

    /// t^{ij}_{kl}.
    pub fn t(&self, i: u8, j: u8, k: u8, l: u8) -> &FieldElem {
        self.t.get(i, j, k, l)
    }

    pub fn sigma_flat(&self) -> &[FieldElem] {
        &self.sigma
    }

    pub fn c_flat(&self) -> &[FieldElem] {
        &self.c
    }

    /// The 16×16 matrix M with `M[(kl),(ij)] = σ^{kl}_{ij}`, i.e. σ acting on
    /// coordinates in the basis ω_i ⊗ ω_j.
    pub fn sigma_matrix(&self) -> FMatrix {
        let mut m = FMatrix::zeros(16, 16);
        for a in 0..16 {
            for b in 0..16 {
                m.set(b, a, self.sigma[a * 16 + b].clone());
            }
        }
        m
    }

    pub fn env(&self) -> TablesEnv<'_> {
        TablesEnv {
            x: &self.x,
            f: &self.f,
        }
    }

    /// Computes everything from the X, f and J fixtures without comparing
    /// against the golden σ and C tables.
    pub fn compute(fx: &Fixtures) -> Result<Self> {
        let mut x = vec![HElem::zero(); 4];
        for (k, h) in load_h(fx, "tangent", 1)? {
            x[k[0] as usize] = h;
        }
        let mut f = vec![vec![HElem::zero(); 4]; 4];
        for (k, h) in load_h(fx, "functionals", 2)? {
            f[k[0] as usize][k[1] as usize] = h;
        }
        let mut j = vec![vec![AElem::zero(); 4]; 4];
        for (k, e) in fixtures::keyed("J", fx.get("J")?, 2)? {
            j[k[0] as usize][k[1] as usize] =
                in_fixture("J", eval_str(&BareEnv, &e).and_then(|v| v.into_a()))?;
        }
        let mut sigma = vec![FieldElem::zero(); 256];
        for a in 0..16 {
            let (i, jj) = pair_of(a);
            for b in 0..16 {
                let (k, l) = pair_of(b);
                sigma[a * 16 + b] = pair(&f[i as usize][l as usize], &j[k as usize][jj as usize]);
            }
        }
        let mut c = vec![FieldElem::zero(); 64];
        for k in 0..4usize {
            for a in 0..16 {
                let (i, jj) = pair_of(a);
                c[k * 16 + a] = pair(&x[jj as usize], &j[i as usize][k]);
            }
        }
        let q = FieldElem::q();
        let c0 = FieldElem::one() - &q * &(&q + &FieldElem::one()).pow(-2)?;
        let mut tables = CalculusTables {
            x,
            f,
            j,
            c0,
            sigma,
            c,
            t: TMatrix {
                entries: vec![],
                pivots: vec![],
                unpivoted: vec![],
            },
            s_ker: vec![],
            t_ker: vec![],
            wedge_rules: Presentation {
                rows: vec![],
                pivots: vec![],
            },
            fixtures: fx.clone(),
        };
        let m = tables.sigma_matrix();
        let id = FMatrix::identity(16);
        tables.s_ker = kernel_basis(&id.sub(&m));
        tables.t_ker = kernel_basis(&id.sub(&m.transpose()));
        tables.t = extract_t(&tables.t_ker)?;
        tables.wedge_rules = present(&tables.s_ker)?;
        Ok(tables)
    }

    /// Golden-table mismatches for σ and C, if any.
    pub fn golden_mismatches(&self) -> Result<Vec<Error>> {
        let mut out = Vec::new();
        out.extend(first_mismatch(
            "sigma",
            &golden_sigma(&self.fixtures)?,
            &self.sigma,
            sigma_label,
        ));
        out.extend(first_mismatch(
            "C",
            &golden_c(&self.fixtures)?,
            &self.c,
            c_label,
        ));
        Ok(out)
    }
}

/// Builds the tables from the given fixtures, failing on the first σ or C
/// entry that disagrees with its golden table.
pub fn build_tables_from(fx: &Fixtures) -> Result<CalculusTables> {
    let t = CalculusTables::compute(fx)?;
    if let Some(e) = t.golden_mismatches()?.into_iter().next() {
        return Err(e);
    }
    Ok(t)
}

static TABLES: Lazy<Result<CalculusTables>> = Lazy::new(|| build_tables_from(&Fixtures::builtin()));

/// The tables built from the shipped fixtures, computed once.
pub fn build_tables() -> Result<&'static CalculusTables> {
    TABLES.as_ref().map_err(Clone::clone)
}
