//! Conformal geometric algebra G(4,1) on the null basis `{e0, e1, e2, e3, e∞}`.
//!
//! Generators satisfy `ei ej = -ej ei` (i ≠ j), `ei² = 1` for i = 1, 2, 3,
//! `e0² = e∞² = 0` and `e0 e∞ + e∞ e0 = -2`. A [`Multivector`] is generic over
//! its coefficient [`Scalar`]: exact [`Rational`], symbolic [`Poly`] or `f64`.
//! [`AnyMultivector`] carries the backend at runtime.
//!
//! Grades are true Clifford grades: `e[0,∞]` has a scalar part `-1` and a
//! bivector part `1 + e[0,∞]`.

mod any;
mod blade;
mod engine;
mod error;
pub mod geometry;
mod multivector;
mod ops;
pub mod scalar;

pub use any::{AnyMultivector, Backed};
pub use blade::{Blade, Generator};
pub use error::{Error, Result, ScalarError};
pub use multivector::Multivector;
pub use scalar::{Backend, Poly, Rational, Scalar, Symbol};
