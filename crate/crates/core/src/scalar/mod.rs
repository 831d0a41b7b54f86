//! Coefficient arithmetic shared by every multivector backend.

mod float;
mod poly;
mod rational;

use std::fmt;
use std::str::FromStr;

pub use float::{format_f64, EPS_CLEAN};
pub use poly::{is_valid_symbol_name, Monomial, Poly, Symbol};
pub use rational::Rational;

use crate::error::{Result, ScalarError};
use crate::multivector::Multivector;

/// Which coefficient arithmetic a value uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Backend {
    #[default]
    Exact,
    Symbolic,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Symbolic => "symbolic",
            Backend::Float => "float",
        })
    }
}

impl FromStr for Backend {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "exact" | "rational" => Ok(Backend::Exact),
            "symbolic" | "poly" => Ok(Backend::Symbolic),
            "float" | "f64" => Ok(Backend::Float),
            other => Err(format!("unknown backend `{other}` (expected exact, symbolic or float)")),
        }
    }
}

/// How a coefficient prints in front of a basis blade.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisplayParts {
    /// A single negative term; `magnitude` then omits the sign.
    pub negative: bool,
    pub magnitude: String,
    /// Several terms: needs parentheses in front of a blade.
    pub compound: bool,
}

/// Ring operations plus the extras the multivector kernel needs.
///
/// Exact backends never round; the float backend treats `|v| <= EPS_CLEAN`
/// as zero.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;

    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    fn from_rational(r: &Rational) -> Self;

    fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(&Rational::new(numer, denom).expect("nonzero denominator"))
    }

    fn scale_ratio(&self, numer: i64, denom: i64) -> Self {
        if numer == denom {
            return self.clone();
        }
        if numer == -denom {
            return self.negated();
        }
        self.times(&Self::from_ratio(numer, denom))
    }

    /// The value as an exact rational, if it has one (no free symbols, finite).
    fn to_rational(&self) -> Option<Rational>;

    /// Exact quotient; float division is ordinary IEEE division.
    fn div_exact(&self, rhs: &Self) -> Result<Self, ScalarError>;

    fn sqrt(&self) -> Option<Self>;

    /// Applied to every coefficient when a multivector is built.
    fn clean(self) -> Self {
        self
    }

    fn validate(&self) -> Result<(), ScalarError> {
        Ok(())
    }

    fn display_parts(&self) -> DisplayParts;

    /// Canonical text used by the JSON serialization.
    fn to_text(&self) -> String;

    /// Text accepted by the calculator grammar.
    fn to_input_string(&self) -> String;

    fn parse_text(s: &str) -> Result<Self, ScalarError>;

    /// A free symbol; only the symbolic backend has them.
    fn symbol(_name: &str) -> Option<Self> {
        None
    }

    /// General inverse through the left-regular representation.
    fn linear_inverse(_a: &Multivector<Self>) -> Result<Multivector<Self>> {
        Err(crate::Error::UnsupportedSymbolicInverse)
    }
}

impl Scalar for Rational {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, ScalarError> {
        self.checked_div(rhs)
    }
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_exact()
    }
    fn display_parts(&self) -> DisplayParts {
        DisplayParts {
            negative: self.is_negative(),
            magnitude: self.abs().to_string(),
            compound: false,
        }
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn to_input_string(&self) -> String {
        self.to_string()
    }
    fn parse_text(s: &str) -> Result<Self, ScalarError> {
        s.parse()
    }
    fn linear_inverse(a: &Multivector<Self>) -> Result<Multivector<Self>> {
        crate::ops::linear_inverse(a)
    }
}

impl Scalar for Poly {
    const BACKEND: Backend = Backend::Symbolic;

    fn zero() -> Self {
        Poly::zero()
    }
    fn one() -> Self {
        Poly::one()
    }
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn from_rational(r: &Rational) -> Self {
        Poly::constant(r.clone())
    }
    fn scale_ratio(&self, numer: i64, denom: i64) -> Self {
        self.scale(&Rational::new(numer, denom).expect("nonzero denominator"))
    }
    fn to_rational(&self) -> Option<Rational> {
        self.as_constant()
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Poly::div_exact(self, rhs)
    }
    fn sqrt(&self) -> Option<Self> {
        self.sqrt_exact()
    }
    fn display_parts(&self) -> DisplayParts {
        if self.len() > 1 {
            DisplayParts {
                negative: false,
                magnitude: self.to_string(),
                compound: true,
            }
        } else {
            let negative = self.is_negative_term();
            let magnitude = if negative { (-self.clone()).to_string() } else { self.to_string() };
            DisplayParts {
                negative,
                magnitude,
                compound: false,
            }
        }
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
    fn to_input_string(&self) -> String {
        Poly::to_input_string(self)
    }
    fn parse_text(s: &str) -> Result<Self, ScalarError> {
        s.parse()
    }
    fn symbol(name: &str) -> Option<Self> {
        Poly::symbol(name).ok()
    }
}
