//! Conformal embedding of Euclidean points and the round/flat objects built from them.
//!
//! A point `x ∈ R³` is the null vector `e0 + x + ½x² e∞`. Direct (outer
//! product) objects contain `p` when `p ∧ X = 0`; dual objects when `p ⌋ X = 0`.

mod versor;

pub use versor::{inversor, rotation, sandwich, HalfAngle, Parity, Versor};

use std::ops::Deref;

use crate::blade::{Blade, Generator};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Euclidean coordinates, standing for `x e1 + y e2 + z e3`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector3<S> {
    pub x: S,
    pub y: S,
    pub z: S,
}

impl<S: Scalar> Vector3<S> {
    pub fn new(x: S, y: S, z: S) -> Self {
        Vector3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vector3::new(S::zero(), S::zero(), S::zero())
    }

    pub fn to_multivector(&self) -> Multivector<S> {
        Multivector::vector3(self.x.clone(), self.y.clone(), self.z.clone())
    }

    /// The e1, e2, e3 coefficients of any multivector.
    pub fn from_multivector(m: &Multivector<S>) -> Self {
        let [x, y, z] = m.to_vector3();
        Vector3 { x, y, z }
    }

    pub fn dot(&self, other: &Self) -> S {
        self.x
            .times(&other.x)
            .plus(&self.y.times(&other.y))
            .plus(&self.z.times(&other.z))
    }

    pub fn norm_squared(&self) -> S {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn neg(&self) -> Self {
        Vector3::new(self.x.negated(), self.y.negated(), self.z.negated())
    }

    pub fn add(&self, other: &Self) -> Self {
        Vector3::new(self.x.plus(&other.x), self.y.plus(&other.y), self.z.plus(&other.z))
    }
}

/// Coefficients of e1, e2, e3.
pub fn to_vector<S: Scalar>(a: &Multivector<S>) -> Vector3<S> {
    Vector3::from_multivector(a)
}

fn e_inf<S: Scalar>() -> Multivector<S> {
    Multivector::generator(Generator::Inf)
}

fn e0_blade() -> Blade {
    Blade::from_generators(&[Generator::E0]).unwrap()
}

/// A normalized conformal point `e0 + x + ½x² e∞`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConformalPoint<S: Scalar>(Multivector<S>);

impl<S: Scalar> ConformalPoint<S> {
    pub fn embed(v: &Vector3<S>) -> Self {
        let half_sq = v.norm_squared().scale_ratio(1, 2);
        let m = &(&Multivector::generator(Generator::E0) + &v.to_multivector()) + &e_inf::<S>().scale(&half_sq);
        ConformalPoint(m)
    }

    /// Accepts a null vector; rescales so the e0 coefficient is 1.
    pub fn from_multivector(m: &Multivector<S>) -> Result<Self> {
        let n = normalize_point(m)?;
        if !n.grade_q(1)? {
            return Err(Error::InvalidInput(format!("`{m}` is not a vector")));
        }
        if !n.geometric_product(&n).is_zero() {
            return Err(Error::InvalidInput(format!("`{m}` is not a null vector")));
        }
        Ok(ConformalPoint(n))
    }

    pub fn position(&self) -> Vector3<S> {
        Vector3::from_multivector(&self.0)
    }

    pub fn into_multivector(self) -> Multivector<S> {
        self.0
    }
}

impl<S: Scalar> Deref for ConformalPoint<S> {
    type Target = Multivector<S>;
    fn deref(&self) -> &Multivector<S> {
        &self.0
    }
}

pub fn embed_point<S: Scalar>(v: &Vector3<S>) -> ConformalPoint<S> {
    ConformalPoint::embed(v)
}

/// Divides by the e0 coefficient.
pub fn normalize_point<S: Scalar>(x: &Multivector<S>) -> Result<Multivector<S>> {
    let w = x.coefficient(e0_blade());
    if w.is_zero() {
        return Err(Error::InvalidInput(format!("`{x}` has no e0 component to normalize")));
    }
    x.div_scalar(&w)
}

/// A constructed blade plus whether its inputs were dependent.
#[derive(Debug, Clone, PartialEq)]
pub struct Construction<S: Scalar> {
    pub blade: Multivector<S>,
    pub degenerate: bool,
}

impl<S: Scalar> Construction<S> {
    fn flat(blade: Multivector<S>) -> Self {
        let degenerate = blade.is_zero();
        Construction { blade, degenerate }
    }
}

/// `p1 ∧ p2 ∧ e∞`; zero when the points coincide.
pub fn line_through<S: Scalar>(p1: &Multivector<S>, p2: &Multivector<S>) -> Construction<S> {
    Construction::flat(Multivector::outer_all([p1, p2, &e_inf()]))
}

/// `p1 ∧ p2 ∧ p3 ∧ e∞`; zero when the points are collinear.
pub fn plane_through<S: Scalar>(p1: &Multivector<S>, p2: &Multivector<S>, p3: &Multivector<S>) -> Construction<S> {
    Construction::flat(Multivector::outer_all([p1, p2, p3, &e_inf()]))
}

/// `p1 ∧ p2 ∧ p3 ∧ p4`. Coplanar points give a blade with `e∞ ∧ S = 0`
/// (no quadratic term in `p ∧ S`), which is flagged as degenerate.
pub fn sphere_through<S: Scalar>(
    p1: &Multivector<S>,
    p2: &Multivector<S>,
    p3: &Multivector<S>,
    p4: &Multivector<S>,
) -> Construction<S> {
    let blade = Multivector::outer_all([p1, p2, p3, p4]);
    let degenerate = e_inf::<S>().outer_product(&blade).is_zero();
    Construction { blade, degenerate }
}

/// Dual sphere `c - (r²/2) e∞`; `p ⌋ S = ½(r² - |x - c|²)` for normalized points.
pub fn sphere_dual<S: Scalar>(center: &Multivector<S>, r: &S) -> Multivector<S> {
    center - &e_inf::<S>().scale(&r.times(r).scale_ratio(1, 2))
}

/// Dual plane `n - h e∞`.
pub fn plane_dual<S: Scalar>(n: &Vector3<S>, h: &S) -> Result<Multivector<S>> {
    if n.is_zero() {
        return Err(Error::InvalidInput("plane normal must be nonzero".into()));
    }
    Ok(&n.to_multivector() - &e_inf::<S>().scale(h))
}
