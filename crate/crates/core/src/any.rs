use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::{Backend, Poly, Rational, Scalar};

/// A multivector whose coefficient backend is chosen at runtime.
#[derive(Clone, PartialEq, Debug)]
pub enum AnyMultivector {
    Exact(Multivector<Rational>),
    Symbolic(Multivector<Poly>),
    Float(Multivector<f64>),
}

fn poly_to_rational(p: &Poly) -> Result<Rational> {
    p.as_constant().ok_or_else(|| {
        let names: Vec<String> = p.symbols().iter().map(|s| s.to_string()).collect();
        Error::InvalidInput(format!("coefficient has free symbols: {}", names.join(", ")))
    })
}

fn float_to_rational(v: &f64) -> Result<Rational> {
    Rational::from_f64(*v).ok_or_else(|| Error::InvalidInput(format!("non-finite coefficient {v}")))
}

macro_rules! dispatch2 {
    ($a:expr, $b:expr, $f:expr) => {
        match ($a, $b) {
            (AnyMultivector::Exact(x), AnyMultivector::Exact(y)) => Ok(AnyMultivector::Exact($f(x, y))),
            (AnyMultivector::Symbolic(x), AnyMultivector::Symbolic(y)) => Ok(AnyMultivector::Symbolic($f(x, y))),
            (AnyMultivector::Float(x), AnyMultivector::Float(y)) => Ok(AnyMultivector::Float($f(x, y))),
            (x, y) => Err(Error::BackendMismatch(x.backend(), y.backend())),
        }
    };
}

impl AnyMultivector {
    pub fn backend(&self) -> Backend {
        match self {
            AnyMultivector::Exact(_) => Backend::Exact,
            AnyMultivector::Symbolic(_) => Backend::Symbolic,
            AnyMultivector::Float(_) => Backend::Float,
        }
    }

    /// Re-expresses the coefficients in another backend. Symbolic values
    /// convert only when they have no free symbols.
    pub fn convert(&self, target: Backend) -> Result<AnyMultivector> {
        Ok(match (self, target) {
            (AnyMultivector::Exact(m), Backend::Exact) => AnyMultivector::Exact(m.clone()),
            (AnyMultivector::Exact(m), Backend::Symbolic) => {
                AnyMultivector::Symbolic(m.map_coefficients(|c| Poly::constant(c.clone())))
            }
            (AnyMultivector::Exact(m), Backend::Float) => AnyMultivector::Float(m.map_coefficients(Rational::to_f64)),
            (AnyMultivector::Symbolic(m), Backend::Symbolic) => AnyMultivector::Symbolic(m.clone()),
            (AnyMultivector::Symbolic(m), Backend::Exact) => AnyMultivector::Exact(m.try_map_coefficients(poly_to_rational)?),
            (AnyMultivector::Symbolic(m), Backend::Float) => {
                AnyMultivector::Float(m.try_map_coefficients(|c| poly_to_rational(c).map(|r| r.to_f64()))?)
            }
            (AnyMultivector::Float(m), Backend::Float) => AnyMultivector::Float(m.clone()),
            (AnyMultivector::Float(m), Backend::Exact) => AnyMultivector::Exact(m.try_map_coefficients(float_to_rational)?),
            (AnyMultivector::Float(m), Backend::Symbolic) => {
                AnyMultivector::Symbolic(m.try_map_coefficients(|c| float_to_rational(c).map(Poly::constant))?)
            }
        })
    }

    pub fn geometric_product(&self, rhs: &Self) -> Result<Self> {
        dispatch2!(self, rhs, |x: &Multivector<_>, y| x.geometric_product(y))
    }

    pub fn outer_product(&self, rhs: &Self) -> Result<Self> {
        dispatch2!(self, rhs, |x: &Multivector<_>, y| x.outer_product(y))
    }

    pub fn left_contraction(&self, rhs: &Self) -> Result<Self> {
        dispatch2!(self, rhs, |x: &Multivector<_>, y| x.left_contraction(y))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        dispatch2!(self, rhs, |x: &Multivector<_>, y| x + y)
    }

    /// Left fold of the geometric product over one or more factors.
    pub fn product_all(factors: &[AnyMultivector]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::InvalidInput("product needs at least one factor".into()))?;
        rest.iter().try_fold(first.clone(), |acc, f| acc.geometric_product(f))
    }

    /// Left fold of the outer product over one or more factors.
    pub fn outer_all(factors: &[AnyMultivector]) -> Result<Self> {
        let (first, rest) = factors
            .split_first()
            .ok_or_else(|| Error::InvalidInput("product needs at least one factor".into()))?;
        rest.iter().try_fold(first.clone(), |acc, f| acc.outer_product(f))
    }

    pub fn to_json(&self) -> Value {
        match self {
            AnyMultivector::Exact(m) => m.to_json(),
            AnyMultivector::Symbolic(m) => m.to_json(),
            AnyMultivector::Float(m) => m.to_json(),
        }
    }

    pub fn from_json(backend: Backend, value: &Value) -> Result<Self> {
        Ok(match backend {
            Backend::Exact => AnyMultivector::Exact(Multivector::from_json(value)?),
            Backend::Symbolic => AnyMultivector::Symbolic(Multivector::from_json(value)?),
            Backend::Float => AnyMultivector::Float(Multivector::from_json(value)?),
        })
    }

    pub fn to_input_string(&self) -> String {
        match self {
            AnyMultivector::Exact(m) => m.to_input_string(),
            AnyMultivector::Symbolic(m) => m.to_input_string(),
            AnyMultivector::Float(m) => m.to_input_string(),
        }
    }
}

impl fmt::Display for AnyMultivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyMultivector::Exact(m) => m.fmt(f),
            AnyMultivector::Symbolic(m) => m.fmt(f),
            AnyMultivector::Float(m) => m.fmt(f),
        }
    }
}

/// Moves a typed multivector into and out of [`AnyMultivector`].
pub trait Backed: Scalar {
    fn wrap(m: Multivector<Self>) -> AnyMultivector;
    fn unwrap(m: &AnyMultivector) -> Result<&Multivector<Self>>;
}

impl Backed for Rational {
    fn wrap(m: Multivector<Self>) -> AnyMultivector {
        AnyMultivector::Exact(m)
    }
    fn unwrap(m: &AnyMultivector) -> Result<&Multivector<Self>> {
        match m {
            AnyMultivector::Exact(x) => Ok(x),
            other => Err(Error::BackendMismatch(Backend::Exact, other.backend())),
        }
    }
}

impl Backed for Poly {
    fn wrap(m: Multivector<Self>) -> AnyMultivector {
        AnyMultivector::Symbolic(m)
    }
    fn unwrap(m: &AnyMultivector) -> Result<&Multivector<Self>> {
        match m {
            AnyMultivector::Symbolic(x) => Ok(x),
            other => Err(Error::BackendMismatch(Backend::Symbolic, other.backend())),
        }
    }
}

impl Backed for f64 {
    fn wrap(m: Multivector<Self>) -> AnyMultivector {
        AnyMultivector::Float(m)
    }
    fn unwrap(m: &AnyMultivector) -> Result<&Multivector<Self>> {
        match m {
            AnyMultivector::Float(x) => Ok(x),
            other => Err(Error::BackendMismatch(Backend::Float, other.backend())),
        }
    }
}
