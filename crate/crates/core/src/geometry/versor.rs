use crate::blade::Generator;
use crate::engine;
use crate::error::{Error, Result};
use crate::geometry::{sphere_dual, Vector3};
use crate::multivector::Multivector;
use crate::scalar::{Backend, Scalar};

/// Sandwich sign: `+V X V⁻¹` for even versors, `-V X V⁻¹` for odd ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// An invertible multivector applied by sandwiching.
#[derive(Debug, Clone, PartialEq)]
pub struct Versor<S: Scalar> {
    versor: Multivector<S>,
    parity: Parity,
    // `V rev(V)` when it is a nonzero scalar
    norm: Option<S>,
    // `V` and `rev(V)` in the orthonormal basis
    ortho: Box<(engine::Ortho<S>, engine::Ortho<S>)>,
}

impl<S: Scalar> Versor<S> {
    pub fn new(versor: Multivector<S>, parity: Parity) -> Result<Self> {
        let rev = versor.reversion();
        let norm = versor.geometric_product(&rev).as_scalar();
        let ortho = Box::new((engine::to_ortho(&versor), engine::to_ortho(&rev)));
        match norm {
            Some(s) if !s.is_zero() => Ok(Versor {
                versor,
                parity,
                norm: Some(s),
                ortho,
            }),
            Some(_) => Err(Error::NotInvertible),
            None => {
                versor.inverse()?;
                Ok(Versor {
                    versor,
                    parity,
                    norm: None,
                    ortho,
                })
            }
        }
    }

    /// `1 - ½ t e∞`.
    pub fn translator(t: &Vector3<S>) -> Self {
        let te = t
            .to_multivector()
            .geometric_product(&Multivector::generator(Generator::Inf));
        let v = &Multivector::one() - &te.scale(&S::from_ratio(1, 2));
        Versor::new(v, Parity::Even).expect("translators are invertible")
    }

    /// The product `a b` of two vectors.
    pub fn rotor(a: &Multivector<S>, b: &Multivector<S>) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidInput("rotor needs two nonzero vectors".into()));
        }
        Versor::new(a.geometric_product(b), Parity::Even)
    }

    /// The dual sphere `c - (r²/2) e∞` used as an odd versor (sphere inversion).
    pub fn sphere_inversion(center: &Multivector<S>, r: &S) -> Result<Self> {
        Versor::new(sphere_dual(center, r), Parity::Odd)
    }

    pub fn multivector(&self) -> &Multivector<S> {
        &self.versor
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn inverse(&self) -> Result<Multivector<S>> {
        self.versor.inverse()
    }

    /// `±V X V⁻¹`. With a scalar norm `s` this is `±(V X rev(V))/s`, which
    /// stays polynomial whenever the final result is.
    pub fn apply(&self, x: &Multivector<S>) -> Result<Multivector<S>> {
        let out = match &self.norm {
            Some(s) => {
                let (v, r) = &*self.ortho;
                let vx = engine::product(v, &engine::to_ortho(x), |_, _| true);
                engine::from_ortho(&engine::product(&vx, r, |_, _| true)).div_scalar(s)?
            }
            None => Multivector::product_all([&self.versor, x, &self.versor.inverse()?]),
        };
        out.validate()?;
        Ok(match self.parity {
            Parity::Even => out,
            Parity::Odd => -&out,
        })
    }
}

pub fn sandwich<S: Scalar>(v: &Versor<S>, x: &Multivector<S>) -> Result<Multivector<S>> {
    v.apply(x)
}

/// `(cos θ/2, sin θ/2)` for a rotation by θ.
#[derive(Debug, Clone, PartialEq)]
pub struct HalfAngle<S> {
    pub cos: S,
    pub sin: S,
}

impl<S: Scalar> HalfAngle<S> {
    /// Checks `c² + s² = 1` exactly when both values are known constants
    /// in an exact backend.
    pub fn new(cos: S, sin: S) -> Result<Self> {
        if S::BACKEND != Backend::Float {
            let sum = cos.times(&cos).plus(&sin.times(&sin));
            if let Some(r) = sum.to_rational() {
                if !r.is_one() {
                    return Err(Error::InvalidInput(format!(
                        "half-angle pair must satisfy c^2 + s^2 = 1 (got {r})"
                    )));
                }
            }
        }
        Ok(HalfAngle { cos, sin })
    }
}

impl HalfAngle<f64> {
    pub fn from_radians(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        HalfAngle { cos: c, sin: s }
    }
}

/// Rotation of `x` in the plane of vectors `a`, `b`, from `a` towards `b`.
///
/// With an angle: `R = cos(θ/2) - Â sin(θ/2)`, `Â = (a∧b)/|a∧b|`, result
/// `R x R⁻¹`. Without: the sandwich by the rotor `a b`, which turns by twice
/// the angle between `a` and `b`.
pub fn rotation<S: Scalar>(
    x: &Multivector<S>,
    a: &Multivector<S>,
    b: &Multivector<S>,
    angle: Option<&HalfAngle<S>>,
) -> Result<Multivector<S>> {
    let Some(angle) = angle else {
        return Versor::rotor(a, b)?.apply(x);
    };
    let plane = a.outer_product(b);
    if plane.is_zero() {
        return Err(Error::InvalidInput("rotation plane is degenerate: a and b are parallel".into()));
    }
    let norm = plane.magnitude_squared().sqrt().ok_or_else(|| {
        Error::InvalidInput(format!("|a^b| is not exact in the {} backend", S::BACKEND))
    })?;
    let unit = plane.div_scalar(&norm)?;
    let r = &Multivector::scalar(angle.cos.clone()) - &unit.scale(&angle.sin);
    Versor::new(r, Parity::Even)?.apply(x)
}

/// Inversion of `x` in the sphere with center `p` and radius `r`: `-S x S⁻¹`
/// with `S = p - (r²/2) e∞`.
pub fn inversor<S: Scalar>(x: &Multivector<S>, p: &Multivector<S>, r: &S) -> Result<Multivector<S>> {
    if r.is_zero() {
        return Err(Error::NotInvertible);
    }
    Versor::sphere_inversion(p, r)?.apply(x)
}
