use std::fmt;

use num_rational::BigRational;

use super::parse::{Expr, Sym};
use crate::cartan::{CartanElem, DELTA};
use crate::error::{Error, Result};
use crate::exterior::Form;
use crate::hopfcore::{mul, pow, AElem, AMono, Elem, HElem, HMono};
use crate::qfield::FieldElem;

/// Elaborated value of an expression, tagged by sort.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Value {
    Scalar(FieldElem),
    A(AElem),
    H(HElem),
    Form(Form),
    Cartan(CartanElem),
}

impl Value {
    pub fn sort(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::A(_) => "A-element",
            Value::H(_) => "H-element",
            Value::Form(_) => "form",
            Value::Cartan(_) => "Cartan element",
        }
    }

    fn scale(&self, c: &FieldElem) -> Value {
        match self {
            Value::Scalar(x) => Value::Scalar(x * c),
            Value::A(x) => Value::A(x.scale(c)),
            Value::H(x) => Value::H(x.scale(c)),
            Value::Form(x) => Value::Form(x.scale(c)),
            Value::Cartan(x) => Value::Cartan(x.scale(c)),
        }
    }

    pub fn into_a(self) -> Result<AElem> {
        match self {
            Value::Scalar(c) => Ok(Elem::term(c, AMono::one())),
            Value::A(x) => Ok(x),
            v => Err(sort_error(format!(
                "expected an A-element, found a {}",
                v.sort()
            ))),
        }
    }

    pub fn into_h(self) -> Result<HElem> {
        match self {
            Value::Scalar(c) => Ok(Elem::term(c, HMono::one())),
            Value::H(x) => Ok(x),
            v => Err(sort_error(format!(
                "expected an H-element, found a {}",
                v.sort()
            ))),
        }
    }

    pub fn into_scalar(self) -> Result<FieldElem> {
        match self {
            Value::Scalar(c) => Ok(c),
            v => Err(sort_error(format!(
                "expected a scalar, found a {}",
                v.sort()
            ))),
        }
    }

    pub fn into_form(self) -> Result<Form> {
        match self {
            Value::Scalar(c) => Ok(Form::scalar(Elem::term(c, AMono::one()))),
            Value::A(x) => Ok(Form::scalar(x)),
            Value::Form(f) => Ok(f),
            v => Err(sort_error(format!("expected a form, found a {}", v.sort()))),
        }
    }

    pub fn into_cartan(self) -> Result<CartanElem> {
        match self {
            Value::Scalar(c) => Ok(CartanElem::even(Elem::term(c, HMono::one()))),
            Value::H(h) => Ok(CartanElem::even(h)),
            Value::Cartan(x) => Ok(x),
            v => Err(sort_error(format!(
                "expected a Cartan element, found a {}",
                v.sort()
            ))),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(x) => write!(f, "{}", x),
            Value::A(x) => write!(f, "{}", x),
            Value::H(x) => write!(f, "{}", x),
            Value::Form(x) => write!(f, "{}", x),
            Value::Cartan(x) => write!(f, "{}", x),
        }
    }
}

fn sort_error(msg: impl Into<String>) -> Error {
    Error::SortError(msg.into())
}

fn missing(what: &str) -> Error {
    Error::Unknown {
        kind: "symbol in this context".into(),
        name: what.into(),
    }
}

/// Operations that need calculus data. The defaults reject the symbol, so a
/// bare environment elaborates plain algebra expressions only.
pub trait Env {
    fn tangent(&self, _i: u8) -> Result<HElem> {
        Err(missing("X"))
    }
    fn functional(&self, _i: u8, _j: u8) -> Result<HElem> {
        Err(missing("f"))
    }
    fn eta(&self, _i: u8) -> Result<Form> {
        Err(missing("e"))
    }
    fn differential(&self, _x: &Form) -> Result<Form> {
        Err(missing("d"))
    }
    fn wedge(&self, _x: &Form, _y: &Form) -> Result<Form> {
        Err(missing("/\\"))
    }
    fn form_times_a(&self, _x: &Form, _y: &AElem) -> Result<Form> {
        Err(missing("form times A-element"))
    }
    fn cartan_mul(&self, _x: &CartanElem, _y: &CartanElem) -> Result<CartanElem> {
        Err(missing("xi"))
    }
}

/// Environment with no calculus data.
pub struct BareEnv;
impl Env for BareEnv {}

fn add(x: Value, y: Value) -> Result<Value> {
    use Value::*;
    Ok(match (x, y) {
        (Scalar(a), Scalar(b)) => Scalar(&a + &b),
        (Form(a), b) | (b, Form(a)) => {
            let mut f = b.into_form()?;
            f.add_assign(&a);
            Form(f)
        }
        (Cartan(a), b) | (b, Cartan(a)) => {
            let mut c = b.into_cartan()?;
            c.add_assign(&a);
            Cartan(c)
        }
        (A(a), b) | (b, A(a)) => A(&b.into_a()? + &a),
        (H(a), b) | (b, H(a)) => H(&b.into_h()? + &a),
    })
}

fn multiply(env: &dyn Env, x: Value, y: Value) -> Result<Value> {
    use Value::*;
    match (x, y) {
        (Scalar(c), v) | (v, Scalar(c)) => Ok(v.scale(&c)),
        (A(a), A(b)) => Ok(A(mul(&a, &b))),
        (H(a), H(b)) => Ok(H(mul(&a, &b))),
        (A(a), Form(f)) => {
            let mut out = crate::exterior::Form::zero();
            for (w, y) in f.iter() {
                out.add_term(*w, &mul(&a, y));
            }
            Ok(Form(out))
        }
        (Form(f), A(a)) => Ok(Form(env.form_times_a(&f, &a)?)),
        (x @ (H(_) | Cartan(_)), y @ (H(_) | Cartan(_))) => Ok(Cartan(
            env.cartan_mul(&x.into_cartan()?, &y.into_cartan()?)?,
        )),
        (Form(_), Form(_)) => Err(sort_error("forms are multiplied with /\\, not *")),
        (x, y) => Err(sort_error(format!(
            "cannot multiply a {} by a {}",
            x.sort(),
            y.sort()
        ))),
    }
}

fn power(env: &dyn Env, v: Value, n: i64) -> Result<Value> {
    let exp = i32::try_from(n).map_err(|_| sort_error("exponent out of range"))?;
    match v {
        Value::Scalar(c) => Ok(Value::Scalar(c.pow(exp)?)),
        Value::H(h) if n < 0 => {
            let mut it = h.iter();
            match (it.next(), it.next()) {
                (Some((m, c)), None) if m.exponents().0 == 0 && m.exponents().2 == 0 => {
                    let k = m.exponents().1;
                    Ok(Value::H(Elem::term(c.pow(exp)?, HMono::k_pow(k * exp))))
                }
                _ => Err(sort_error(
                    "negative exponents are allowed only on K, q, s and scalars",
                )),
            }
        }
        _ if n < 0 => Err(sort_error(
            "negative exponents are allowed only on K, q, s and scalars",
        )),
        Value::A(x) => Ok(Value::A(pow(&x, n as u32))),
        Value::H(x) => Ok(Value::H(pow(&x, n as u32))),
        Value::Cartan(x) => {
            let mut acc = CartanElem::one();
            for _ in 0..n {
                acc = env.cartan_mul(&acc, &x)?;
            }
            Ok(Value::Cartan(acc))
        }
        Value::Form(_) => Err(sort_error("forms cannot be raised to a power")),
    }
}

fn symbol(env: &dyn Env, s: Sym) -> Result<Value> {
    let a = |m: AMono| Ok(Value::A(Elem::basis(m)));
    let h = |m: HMono| Ok(Value::H(Elem::basis(m)));
    match s {
        Sym::A => a(AMono::a()),
        Sym::AStar => a(AMono::a_star()),
        Sym::C => a(AMono::c()),
        Sym::CStar => a(AMono::c_star()),
        Sym::E => h(HMono::e()),
        Sym::F => h(HMono::f()),
        Sym::K => h(HMono::k_pow(1)),
        Sym::Q => Ok(Value::Scalar(FieldElem::q())),
        Sym::S => Ok(Value::Scalar(FieldElem::s())),
        Sym::X(i) => Ok(Value::H(env.tangent(i)?)),
        Sym::Fij(i, j) => Ok(Value::H(env.functional(i, j)?)),
        Sym::Omega(i) => Ok(Value::Form(Form::omega(i))),
        Sym::Eta(i) => Ok(Value::Form(env.eta(i)?)),
        Sym::Xi(i) => Ok(Value::Cartan(CartanElem::odd(i))),
        Sym::Del => Ok(Value::Cartan(CartanElem::odd(DELTA))),
    }
}

/// Evaluates an expression tree to a sorted value.
pub fn elaborate(env: &dyn Env, e: &Expr) -> Result<Value> {
    match e {
        Expr::Int(n) => Ok(Value::Scalar(FieldElem::from_rational(
            BigRational::from_integer(n.clone()),
        ))),
        Expr::Sym(s) => symbol(env, *s),
        Expr::Neg(x) => Ok(elaborate(env, x)?.scale(&FieldElem::from_int(-1))),
        Expr::Add(x, y) => add(elaborate(env, x)?, elaborate(env, y)?),
        Expr::Sub(x, y) => {
            let y = elaborate(env, y)?.scale(&FieldElem::from_int(-1));
            add(elaborate(env, x)?, y)
        }
        Expr::Mul(x, y) => multiply(env, elaborate(env, x)?, elaborate(env, y)?),
        Expr::Div(x, y) => {
            let d = elaborate(env, y)?;
            let Value::Scalar(d) = d else {
                return Err(sort_error(format!("cannot divide by a {}", d.sort())));
            };
            let inv = d.inv()?;
            Ok(elaborate(env, x)?.scale(&inv))
        }
        Expr::Pow(x, n) => power(env, elaborate(env, x)?, *n),
        Expr::Wedge(x, y) => match (elaborate(env, x)?, elaborate(env, y)?) {
            (Value::Form(a), Value::Form(b)) => Ok(Value::Form(env.wedge(&a, &b)?)),
            (a, b) => Err(sort_error(format!(
                "/\\ needs forms on both sides, found a {} and a {}; write coefficients as (x) * w",
                a.sort(),
                b.sort()
            ))),
        },
        Expr::D(x) => {
            let f = elaborate(env, x)?.into_form()?;
            Ok(Value::Form(env.differential(&f)?))
        }
    }
}

/// Parses and elaborates in one step.
pub fn eval_str(env: &dyn Env, input: &str) -> Result<Value> {
    elaborate(env, &super::parse(input)?)
}
