//! The assembled engine: calculus tables, exterior algebra, Cartan algebra
//! and the two representations, plus the grouped verification runner.

use std::fmt;

use num_rational::BigRational;

use crate::calculus4d::{
    build_tables_from, verify_fundamental_identities, verify_golden_tables, verify_kernels,
    verify_sf_matrices, verify_shapes, verify_t, CalculusTables, Fixtures,
};
use crate::cartan::{
    measure_lr_commutation, verify_antipode, verify_bialgebra, verify_ids2,
    verify_left_representation, verify_right_representation, verify_w_as_printed, Cartan,
    CartanElem, Reps,
};
use crate::error::{Error, Result};
use crate::exterior::{verify_exterior, verify_fun_f_r, Exterior, Form};
use crate::hopfcore::{verify_hopf_axioms, AElem, AlgebraId, HElem};
use crate::qfield::FieldElem;
use crate::report::{Check, Report};
use crate::syntax::{eval_str, Env, Value};

/// Default A-degree cap of the verification suite.
pub const DEFAULT_DEGREE_CAP: u32 = 3;

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

/// Everything built on top of one set of calculus tables.
pub struct Engine<'t> {
    tables: &'t CalculusTables,
    ext: Exterior<'t>,
    alg: Cartan<'t>,
}

impl<'t> Engine<'t> {
    pub fn new(tables: &'t CalculusTables) -> Result<Self> {
        Ok(Engine {
            tables,
            ext: Exterior::new(tables)?,
            alg: Cartan::new(tables),
        })
    }

    pub fn tables(&self) -> &'t CalculusTables {
        self.tables
    }

    pub fn exterior(&self) -> &Exterior<'t> {
        &self.ext
    }

    pub fn algebra(&self) -> &Cartan<'t> {
        &self.alg
    }

    pub fn reps(&self) -> Reps<'_> {
        Reps::new(&self.ext, &self.alg)
    }

    /// Parses and evaluates an expression in canonical form.
    pub fn eval(&self, input: &str) -> Result<Value> {
        eval_str(self, input)
    }
}

impl Env for Engine<'_> {
    fn tangent(&self, i: u8) -> Result<HElem> {
        Ok(self.tables.x[i as usize].clone())
    }

    fn functional(&self, i: u8, j: u8) -> Result<HElem> {
        Ok(self.tables.f[i as usize][j as usize].clone())
    }

    fn eta(&self, i: u8) -> Result<Form> {
        Ok(self.ext.eta(i).clone())
    }

    fn differential(&self, x: &Form) -> Result<Form> {
        Ok(self.ext.d(x))
    }

    fn wedge(&self, x: &Form, y: &Form) -> Result<Form> {
        Ok(self.ext.wedge(x, y))
    }

    fn form_times_a(&self, x: &Form, y: &AElem) -> Result<Form> {
        Ok(self.ext.form_times_a(x, y))
    }

    fn cartan_mul(&self, x: &CartanElem, y: &CartanElem) -> Result<CartanElem> {
        Ok(self.alg.multiply(x, y))
    }
}

/// Verification groups, in run order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Group {
    Hopf,
    Tables,
    Kernels,
    Identities,
    Exterior,
    Bialgebra,
    Antipode,
    LeftRep,
    RightRep,
}

impl Group {
    pub const ALL: [Group; 9] = [
        Group::Hopf,
        Group::Tables,
        Group::Kernels,
        Group::Identities,
        Group::Exterior,
        Group::Bialgebra,
        Group::Antipode,
        Group::LeftRep,
        Group::RightRep,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Group::Hopf => "hopf",
            Group::Tables => "tables",
            Group::Kernels => "kernels",
            Group::Identities => "identities",
            Group::Exterior => "exterior",
            Group::Bialgebra => "bialgebra",
            Group::Antipode => "antipode",
            Group::LeftRep => "left-rep",
            Group::RightRep => "right-rep",
        }
    }

    /// Parses a group name; `all` expands to every group.
    pub fn parse(name: &str) -> Result<Vec<Group>> {
        if name == "all" {
            return Ok(Group::ALL.to_vec());
        }
        Group::ALL
            .iter()
            .find(|g| g.name() == name)
            .map(|g| vec![*g])
            .ok_or_else(|| Error::Unknown {
                kind: "verification group".into(),
                name: name.into(),
            })
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub groups: Vec<Group>,
    pub degree_cap: u32,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            groups: Group::ALL.to_vec(),
            degree_cap: DEFAULT_DEGREE_CAP,
            seed: DEFAULT_SEED,
        }
    }
}

/// Checks plus measurements that are reported but never asserted.
#[derive(Clone, Debug, Default)]
pub struct VerifyOutcome {
    pub report: Report,
    /// `(operator pair, commutes)` for λ against ρ on forms of degree ≤ 2.
    pub lr_commutation: Vec<(String, bool)>,
}

fn hopf_checks(cap: u32) -> Vec<Check> {
    [AlgebraId::A, AlgebraId::H]
        .into_iter()
        .flat_map(|id| {
            verify_hopf_axioms(id, cap)
                .checks
                .into_iter()
                .map(move |c| Check::new(format!("hopf.{}.{}", id, c.name), c.witness))
        })
        .collect()
}

/// Runs the selected groups against tables built from `fx`. A fixture that
/// fails to load or disagrees with its golden table shows up as a failing
/// check carrying the error as its witness.
pub fn run_verify(fx: &Fixtures, opts: &VerifyOptions) -> VerifyOutcome {
    let mut groups = opts.groups.clone();
    groups.sort();
    groups.dedup();
    let has = |g: Group| groups.contains(&g);
    let mut checks = Vec::new();
    if has(Group::Hopf) {
        checks.extend(hopf_checks(opts.degree_cap));
    }
    let needs_tables = groups.iter().any(|g| *g != Group::Hopf);
    let mut outcome = VerifyOutcome::default();
    if !needs_tables {
        outcome.report = Report::new(checks);
        return outcome;
    }
    let tables = match CalculusTables::compute(fx) {
        Ok(t) => t,
        Err(e) => {
            checks.push(Check::fail("tables.build", e.to_string()));
            outcome.report = Report::new(checks);
            return outcome;
        }
    };
    if has(Group::Tables) {
        checks.push(Check::new(
            "tables.build",
            build_tables_from(fx).err().map(|e| e.to_string()),
        ));
        checks.extend(verify_golden_tables(&tables));
        checks.extend(verify_shapes(&tables));
        checks.extend(verify_sf_matrices(&tables));
    }
    if has(Group::Kernels) {
        checks.extend(verify_kernels(&tables));
        checks.extend(verify_t(&tables));
    }
    let needs_engine = groups.iter().any(|g| *g > Group::Kernels);
    if !needs_engine {
        outcome.report = Report::new(checks);
        return outcome;
    }
    let engine = match Engine::new(&tables) {
        Ok(e) => e,
        Err(e) => {
            checks.push(Check::fail("exterior.build", e.to_string()));
            outcome.report = Report::new(checks);
            return outcome;
        }
    };
    let (cap, seed) = (opts.degree_cap, opts.seed);
    if has(Group::Identities) {
        checks.extend(verify_fundamental_identities(&tables));
        checks.push(verify_fun_f_r(engine.exterior()));
        checks.push(verify_ids2(engine.algebra()));
        checks.push(verify_w_as_printed(engine.algebra()));
    }
    if has(Group::Exterior) {
        checks.extend(verify_exterior(engine.exterior(), cap, seed));
    }
    if has(Group::Bialgebra) {
        checks.extend(verify_bialgebra(engine.algebra(), seed));
    }
    if has(Group::Antipode) {
        checks.extend(verify_antipode(engine.algebra(), seed));
    }
    let reps = engine.reps();
    if has(Group::LeftRep) {
        checks.extend(verify_left_representation(&reps, cap, seed));
    }
    if has(Group::RightRep) {
        checks.extend(verify_right_representation(&reps, cap, seed));
    }
    if has(Group::LeftRep) && has(Group::RightRep) {
        outcome.lr_commutation = measure_lr_commutation(&reps);
    }
    outcome.report = Report::new(checks);
    outcome
}

fn eval_elem<M: crate::hopfcore::Monomial>(
    x: &crate::hopfcore::Elem<M>,
    s: &BigRational,
) -> Result<crate::hopfcore::Elem<M>> {
    let mut out = crate::hopfcore::Elem::zero();
    for (m, c) in x.iter() {
        out.add_term(m.clone(), FieldElem::from_rational(c.eval(s)?));
    }
    Ok(out)
}

/// Substitutes a rational value for s in every coefficient. Any coefficient
/// with a vanishing denominator there gives `PoleAtEvaluationPoint`.
pub fn evaluate_at(v: &Value, s: &BigRational) -> Result<Value> {
    Ok(match v {
        Value::Scalar(c) => Value::Scalar(FieldElem::from_rational(c.eval(s)?)),
        Value::A(x) => Value::A(eval_elem(x, s)?),
        Value::H(x) => Value::H(eval_elem(x, s)?),
        Value::Form(f) => {
            let mut out = Form::zero();
            for (w, x) in f.iter() {
                out.add_term(*w, &eval_elem(x, s)?);
            }
            Value::Form(out)
        }
        Value::Cartan(x) => {
            let mut out = CartanElem::zero();
            for (w, h) in x.iter() {
                out.add_term(*w, &eval_elem(h, s)?);
            }
            Value::Cartan(out)
        }
    })
}
