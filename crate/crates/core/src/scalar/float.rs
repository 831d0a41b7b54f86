use crate::error::{Result, ScalarError};
use crate::multivector::Multivector;
use crate::scalar::{Backend, DisplayParts, Rational, Scalar};

/// Float coefficients at or below this magnitude are dropped when a
/// multivector is built.
pub const EPS_CLEAN: f64 = 1e-12;

/// Shortest round-trip text; exponent form for very small or large magnitudes.
pub fn format_f64(v: f64) -> String {
    let a = v.abs();
    if a != 0.0 && !(1e-6..1e15).contains(&a) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

impl Scalar for f64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        self.abs() <= EPS_CLEAN
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
        -self
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn from_ratio(numer: i64, denom: i64) -> Self {
        numer as f64 / denom as f64
    }
    fn scale_ratio(&self, numer: i64, denom: i64) -> Self {
        self * (numer as f64 / denom as f64)
    }
    fn to_rational(&self) -> Option<Rational> {
        Rational::from_f64(*self)
    }
    fn div_exact(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if *rhs == 0.0 {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self / rhs)
    }
    fn sqrt(&self) -> Option<Self> {
        (*self >= 0.0).then(|| f64::sqrt(*self))
    }
    fn clean(self) -> Self {
        if self.abs() <= EPS_CLEAN {
            0.0
        } else {
            self
        }
    }
    fn validate(&self) -> Result<(), ScalarError> {
        if self.is_nan() {
            Err(ScalarError::NotANumber)
        } else {
            Ok(())
        }
    }
    fn display_parts(&self) -> DisplayParts {
        DisplayParts {
            negative: self.is_sign_negative() && *self != 0.0,
            magnitude: format_f64(self.abs()),
            compound: false,
        }
    }
    fn to_text(&self) -> String {
        format_f64(*self)
    }
    fn to_input_string(&self) -> String {
        format_f64(*self)
    }
    fn parse_text(s: &str) -> Result<Self, ScalarError> {
        let t = s.trim();
        let v = match t.split_once('/') {
            Some((p, q)) => {
                let p: f64 = p.trim().parse().map_err(|_| ScalarError::Parse(format!("invalid float `{s}`")))?;
                let q: f64 = q.trim().parse().map_err(|_| ScalarError::Parse(format!("invalid float `{s}`")))?;
                p / q
            }
            None => t
                .parse()
                .map_err(|_| ScalarError::Parse(format!("invalid float `{s}`")))?,
        };
        if v.is_nan() {
            return Err(ScalarError::NotANumber);
        }
        Ok(v)
    }
    fn linear_inverse(a: &Multivector<Self>) -> Result<Multivector<Self>> {
        crate::ops::linear_inverse(a)
    }
}
