//! Statement evaluation against a session.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use cga_core::geometry::{
    embed_point, inversor, line_through, normalize_point, plane_dual, plane_through, rotation, sphere_dual,
    sphere_through, to_vector, Construction, HalfAngle, Vector3, Versor,
};
use cga_core::{AnyMultivector, Backed, Backend, Blade, Multivector, Poly, Rational, Scalar, Symbol};
use serde_json::Value as Json;

use crate::ast::{BinOp, Expr, Statement};
use crate::error::EvalError;

type Result<T, E = EvalError> = std::result::Result<T, E>;

/// How blades are written in output.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BladeDisplay {
    /// `e[...]` is the geometric product of its generators.
    #[default]
    Geometric,
    /// `e[0,...,∞]` is read as the wedge `e0 ∧ ... ∧ e∞`.
    Outer,
}

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Mv(AnyMultivector),
    Bool(bool),
}

impl Value {
    pub fn render(&self, blades: BladeDisplay) -> String {
        match self {
            Value::Bool(b) => if *b { "True" } else { "False" }.to_string(),
            Value::Mv(AnyMultivector::Float(m)) => render(&m.map_coefficients(|c| round_sig(*c)), blades),
            Value::Mv(AnyMultivector::Exact(m)) => render(m, blades),
            Value::Mv(AnyMultivector::Symbolic(m)) => render(m, blades),
        }
    }

    pub fn to_json(&self) -> Json {
        match self {
            Value::Bool(b) => Json::Bool(*b),
            Value::Mv(m) => m.to_json(),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(BladeDisplay::Geometric))
    }
}

fn render<S: Scalar>(m: &Multivector<S>, blades: BladeDisplay) -> String {
    match blades {
        BladeDisplay::Geometric => m.to_string(),
        BladeDisplay::Outer => m.render_outer_basis(),
    }
}

/// Float output shows 12 significant digits; JSON keeps full precision.
fn round_sig(v: f64) -> f64 {
    format!("{v:.11e}").parse().unwrap_or(v)
}

/// What one statement produced.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub silent: bool,
    pub warnings: Vec<String>,
}

/// Backend choice, variable bindings and the symbols seen so far.
#[derive(Clone, Debug, Default)]
pub struct Session {
    backend: Backend,
    env: BTreeMap<String, AnyMultivector>,
    symbols: BTreeSet<String>,
}

impl Session {
    pub fn new(backend: Backend) -> Self {
        Session { backend, ..Session::default() }
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    pub fn set_backend(&mut self, backend: Backend) {
        self.backend = backend;
    }

    pub fn vars(&self) -> impl Iterator<Item = (&str, &AnyMultivector)> {
        self.env.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn symbols(&self) -> impl Iterator<Item = &str> {
        self.symbols.iter().map(String::as_str)
    }

    pub fn get(&self, name: &str) -> Option<&AnyMultivector> {
        self.env.get(name)
    }

    pub fn clear(&mut self, name: &str) -> bool {
        let had_var = self.env.remove(name).is_some();
        had_var | self.symbols.remove(name)
    }

    pub fn execute(&mut self, st: &Statement) -> Result<Outcome> {
        let mut warnings = st.warnings.clone();
        let value = self.eval_with(&st.expr, &mut warnings)?;
        Ok(Outcome { value, silent: st.silent, warnings })
    }

    pub fn eval(&mut self, expr: &Expr) -> Result<Value> {
        self.eval_with(expr, &mut Vec::new())
    }

    fn eval_with(&mut self, expr: &Expr, warnings: &mut Vec<String>) -> Result<Value> {
        match self.backend {
            Backend::Exact => Evaluator::<Rational>::run(self, expr, warnings),
            Backend::Symbolic => Evaluator::<Poly>::run(self, expr, warnings),
            Backend::Float => Evaluator::<f64>::run(self, expr, warnings),
        }
    }
}

enum V<S> {
    Mv(Multivector<S>),
    Bool(bool),
}

struct Evaluator<'a, S> {
    session: &'a mut Session,
    warnings: &'a mut Vec<String>,
    _scalar: std::marker::PhantomData<S>,
}

fn arity(name: &str, args: &[Expr], ok: bool, expected: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(EvalError::Arity { name: name.to_string(), expected, got: args.len() })
    }
}

impl<'a, S: Backed> Evaluator<'a, S> {
    fn run(session: &'a mut Session, expr: &Expr, warnings: &'a mut Vec<String>) -> Result<Value> {
        let mut ev = Evaluator { session, warnings, _scalar: std::marker::PhantomData::<S> };
        Ok(match ev.eval(expr)? {
            V::Mv(m) => Value::Mv(S::wrap(m)),
            V::Bool(b) => Value::Bool(b),
        })
    }

    fn eval(&mut self, expr: &Expr) -> Result<V<S>> {
        Ok(match expr {
            Expr::Number(text) => V::Mv(Multivector::scalar(S::parse_text(text)?)),
            Expr::Basis(gens) => V::Mv(Multivector::canonicalize(gens)),
            Expr::Ident(name) => V::Mv(self.lookup(name)?),
            Expr::Neg(e) => V::Mv(-&self.mv(e)?),
            Expr::Binary(op, a, b) => {
                let (a, b) = (self.mv(a)?, self.mv(b)?);
                V::Mv(match op {
                    BinOp::Add => &a + &b,
                    BinOp::Sub => &a - &b,
                    BinOp::Mul => a.geometric_product(&b),
                    BinOp::Outer => a.outer_product(&b),
                    BinOp::Contract => a.left_contraction(&b),
                    BinOp::Div => {
                        let d = scalar_of(&b, "divisor")?;
                        if d.is_zero() {
                            return Err(cga_core::ScalarError::DivisionByZero.into());
                        }
                        a.div_scalar(&d)?
                    }
                })
            }
            Expr::Assign(name, rhs) => {
                if name == "I5" || name == "I5i" {
                    return Err(EvalError::Type(format!("cannot assign to the constant `{name}`")));
                }
                let m = self.mv(rhs)?;
                self.session.env.insert(name.clone(), S::wrap(m.clone()));
                V::Mv(m)
            }
            Expr::Call(name, args) => self.call(name, args)?,
        })
    }

    fn mv(&mut self, expr: &Expr) -> Result<Multivector<S>> {
        match self.eval(expr)? {
            V::Mv(m) => Ok(m),
            V::Bool(_) => Err(EvalError::Type(format!("`{expr}` is a truth value, not a multivector"))),
        }
    }

    fn scalar(&mut self, expr: &Expr) -> Result<S> {
        let m = self.mv(expr)?;
        scalar_of(&m, &expr.to_string())
    }

    fn integer(&mut self, expr: &Expr) -> Result<i64> {
        self.scalar(expr)?
            .to_rational()
            .filter(Rational::is_integer)
            .and_then(|r| r.to_i64())
            .ok_or_else(|| EvalError::Type(format!("`{expr}` must be an integer")))
    }

    fn lookup(&mut self, name: &str) -> Result<Multivector<S>> {
        if let Some(v) = self.session.env.get(name) {
            let converted = v.convert(S::BACKEND).map_err(|e| {
                EvalError::Backend(format!("variable `{name}` cannot be used in the {} backend: {e}", S::BACKEND))
            })?;
            return Ok(S::unwrap(&converted)?.clone());
        }
        match name {
            "I5" => return Ok(Multivector::pseudoscalar()),
            "I5i" => return Ok(Multivector::pseudoscalar_inverse()),
            _ => {}
        }
        match S::symbol(name) {
            Some(s) => {
                self.session.symbols.insert(name.to_string());
                Ok(Multivector::scalar(s))
            }
            None => Err(EvalError::FreeSymbol { name: name.to_string(), backend: S::BACKEND }),
        }
    }

    fn vector3(&mut self, args: &[Expr]) -> Result<Vector3<S>> {
        Ok(Vector3::new(self.scalar(&args[0])?, self.scalar(&args[1])?, self.scalar(&args[2])?))
    }

    fn construction(&mut self, what: &str, c: Construction<S>) -> Multivector<S> {
        if c.degenerate {
            self.warnings.push(format!("{what}: the given points are dependent, the result is degenerate"));
        }
        c.blade
    }

    fn call(&mut self, name: &str, args: &[Expr]) -> Result<V<S>> {
        let n = args.len();
        if name == "subst" {
            arity(name, args, n >= 1, "1 or more")?;
            return self.subst(args).map(V::Mv);
        }
        if let Some(a) = args.iter().find(|a| matches!(a, Expr::Assign(..))) {
            return Err(EvalError::Type(format!("`{a}`: named arguments are only accepted by subst")));
        }
        let m = match name {
            "gp" | "op" => {
                arity(name, args, n >= 1, "1 or more")?;
                let factors = args.iter().map(|a| self.mv(a)).collect::<Result<Vec<_>>>()?;
                if name == "gp" {
                    Multivector::product_all(&factors)
                } else {
                    Multivector::outer_all(&factors)
                }
            }
            "lc" => {
                arity(name, args, n == 2, "2")?;
                self.mv(&args[0])?.left_contraction(&self.mv(&args[1])?)
            }
            "grade" | "gradeq" => {
                arity(name, args, n == 2, "2")?;
                let a = self.mv(&args[0])?;
                let k = self.integer(&args[1])?;
                if name == "gradeq" {
                    return Ok(V::Bool(a.grade_q(k)?));
                }
                a.grade(k)?
            }
            "rev" | "inv" | "gradeinv" | "dual" | "mag2" | "mag" | "tovector" | "normalize" => {
                arity(name, args, n == 1, "1")?;
                let a = self.mv(&args[0])?;
                match name {
                    "rev" => a.reversion(),
                    "inv" => a.inverse()?,
                    "gradeinv" => a.involution(),
                    "dual" => a.dual(),
                    "mag2" => Multivector::scalar(a.magnitude_squared()),
                    "mag" => Multivector::scalar(magnitude(&a)?),
                    "tovector" => to_vector(&a).to_multivector(),
                    _ => normalize_point(&a)?,
                }
            }
            "point" => {
                arity(name, args, n == 3, "3")?;
                embed_point(&self.vector3(args)?).into_multivector()
            }
            "translator" => {
                arity(name, args, n == 3, "3")?;
                Versor::translator(&self.vector3(args)?).multivector().clone()
            }
            "line" => {
                arity(name, args, n == 2, "2")?;
                let (a, b) = (self.mv(&args[0])?, self.mv(&args[1])?);
                let c = line_through(&a, &b);
                self.construction(name, c)
            }
            "plane" => {
                arity(name, args, n == 3, "3")?;
                let (a, b, c) = (self.mv(&args[0])?, self.mv(&args[1])?, self.mv(&args[2])?);
                let c = plane_through(&a, &b, &c);
                self.construction(name, c)
            }
            "sphere" => {
                arity(name, args, n == 4, "4")?;
                let p = args.iter().map(|a| self.mv(a)).collect::<Result<Vec<_>>>()?;
                let c = sphere_through(&p[0], &p[1], &p[2], &p[3]);
                self.construction(name, c)
            }
            "spheredual" => {
                arity(name, args, n == 2, "2")?;
                sphere_dual(&self.mv(&args[0])?, &self.scalar(&args[1])?)
            }
            "planedual" => {
                arity(name, args, n == 4, "4")?;
                let normal = self.vector3(&args[..3])?;
                plane_dual(&normal, &self.scalar(&args[3])?)?
            }
            "rotor" => {
                arity(name, args, n == 2, "2")?;
                Versor::rotor(&self.mv(&args[0])?, &self.mv(&args[1])?)?.multivector().clone()
            }
            "rotate" => {
                arity(name, args, (3..=5).contains(&n), "3, 4 or 5")?;
                let (x, a, b) = (self.mv(&args[0])?, self.mv(&args[1])?, self.mv(&args[2])?);
                let angle = match n {
                    3 => None,
                    4 => Some(self.half_angle(&args[3])?),
                    _ => Some(HalfAngle::new(self.scalar(&args[3])?, self.scalar(&args[4])?)?),
                };
                rotation(&x, &a, &b, angle.as_ref())?
            }
            "inversor" => {
                arity(name, args, n == 3, "3")?;
                let (x, p) = (self.mv(&args[0])?, self.mv(&args[1])?);
                inversor(&x, &p, &self.scalar(&args[2])?)?
            }
            "eq" => {
                arity(name, args, n == 2, "2")?;
                return Ok(V::Bool((&self.mv(&args[0])? - &self.mv(&args[1])?).is_zero()));
            }
            "coeff" => {
                arity(name, args, n == 2, "2")?;
                let a = self.mv(&args[0])?;
                let b = self.mv(&args[1])?;
                let blade = single_blade(&b)?;
                Multivector::scalar(a.coefficient(blade).div_exact(&b.coefficient(blade))?)
            }
            "pow" => {
                arity(name, args, n == 2, "2")?;
                let a = self.mv(&args[0])?;
                let k = self.integer(&args[1])?;
                let base = if k < 0 { a.inverse()? } else { a };
                let k = u32::try_from(k.unsigned_abs()).map_err(|_| EvalError::Type("exponent too large".into()))?;
                (0..k).fold(Multivector::one(), |acc, _| acc.geometric_product(&base))
            }
            _ => return Err(EvalError::UnknownFunction(name.to_string())),
        };
        Ok(V::Mv(m))
    }

    /// A raw angle in radians; only the float backend can take its sine.
    fn half_angle(&mut self, theta: &Expr) -> Result<HalfAngle<S>> {
        if S::BACKEND != Backend::Float {
            return Err(EvalError::Backend(format!(
                "a raw angle needs the float backend; in the {} backend use rotate(x, a, b, c, s) with exact cos(θ/2), sin(θ/2)",
                S::BACKEND
            )));
        }
        let t = self.scalar(theta)?.to_rational().map(|r| r.to_f64()).unwrap_or(f64::NAN);
        let h = HalfAngle::from_radians(t);
        Ok(HalfAngle { cos: S::parse_text(&h.cos.to_string())?, sin: S::parse_text(&h.sin.to_string())? })
    }

    fn subst(&mut self, args: &[Expr]) -> Result<Multivector<S>> {
        let target = self.mv(&args[0])?;
        let mut bindings = HashMap::new();
        for a in &args[1..] {
            let Expr::Assign(sym, value) = a else {
                return Err(EvalError::Type(format!("subst expects `symbol = value`, got `{a}`")));
            };
            let v = self.scalar(value)?.to_rational().ok_or_else(|| {
                EvalError::Type(format!("substituted value for `{sym}` must be a number, got `{value}`"))
            })?;
            bindings.insert(Symbol::new(sym)?, v);
        }
        match S::wrap(target) {
            AnyMultivector::Symbolic(p) => {
                let out = AnyMultivector::Symbolic(p.map_coefficients(|c| c.substitute(&bindings)));
                Ok(S::unwrap(&out)?.clone())
            }
            other if bindings.is_empty() => Ok(S::unwrap(&other)?.clone()),
            _ => Err(EvalError::Backend(format!("subst needs the symbolic backend (current: {})", S::BACKEND))),
        }
    }
}

fn scalar_of<S: Scalar>(m: &Multivector<S>, what: &str) -> Result<S> {
    m.as_scalar().ok_or_else(|| EvalError::Type(format!("`{what}` must be a scalar, got {m}")))
}

fn single_blade<S: Scalar>(m: &Multivector<S>) -> Result<Blade> {
    let mut terms = m.terms();
    match (terms.next(), terms.next()) {
        (Some((b, _)), None) => Ok(b),
        _ => Err(EvalError::Type(format!("coeff needs a single basis blade such as e[0,1,2,3,inf], got {m}"))),
    }
}

/// `sqrt(mag2)`: any nonnegative value in float, perfect squares otherwise.
fn magnitude<S: Scalar>(a: &Multivector<S>) -> Result<S> {
    let m2 = a.magnitude_squared();
    if S::BACKEND == Backend::Float && m2.to_rational().is_some_and(|r| r.is_negative()) {
        return Err(EvalError::Type(format!("mag of `{a}`: squared magnitude is negative")));
    }
    m2.sqrt().ok_or_else(|| {
        EvalError::Type(format!(
            "mag: {} has no exact square root in the {} backend; use mag2 or the float backend",
            m2.to_text(),
            S::BACKEND
        ))
    })
}
