//! The multivector value type and its linear structure.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{Map, Value};

use crate::blade::{Blade, Generator};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A finite sum of null-basis blades with coefficients in `S`.
///
/// Terms are canonical: one entry per blade and no zero coefficients.
#[derive(Clone, PartialEq)]
pub struct Multivector<S> {
    terms: BTreeMap<Blade, S>,
}

impl<S: Scalar> Default for Multivector<S> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero() -> Self {
        Multivector {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn scalar(c: S) -> Self {
        Self::from_blade(Blade::SCALAR, c)
    }

    pub fn from_blade(blade: Blade, c: S) -> Self {
        Self::from_terms([(blade, c)])
    }

    /// A single generator as a vector.
    pub fn generator(g: Generator) -> Self {
        Self::from_blade(Blade::from_generators(&[g]).expect("single generator"), S::one())
    }

    /// Sums the given terms; repeated blades accumulate, zeros are dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        let mut map: BTreeMap<Blade, S> = BTreeMap::new();
        for (b, c) in terms {
            match map.get_mut(&b) {
                Some(acc) => *acc = acc.plus(&c),
                None => {
                    map.insert(b, c);
                }
            }
        }
        let terms = map
            .into_iter()
            .map(|(b, c)| (b, c.clean()))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Multivector { terms }
    }

    /// Like [`Multivector::from_terms`], rejecting invalid coefficients (NaN).
    pub fn try_from_terms(terms: impl IntoIterator<Item = (Blade, S)>) -> Result<Self> {
        let mv = Self::from_terms(terms);
        mv.validate()?;
        Ok(mv)
    }

    pub fn validate(&self) -> Result<()> {
        for c in self.terms.values() {
            c.validate()?;
        }
        Ok(())
    }

    /// Euclidean vector `x e1 + y e2 + z e3`.
    pub fn vector3(x: S, y: S, z: S) -> Self {
        Self::from_terms([
            (Blade::from_mask(0b0010).unwrap(), x),
            (Blade::from_mask(0b0100).unwrap(), y),
            (Blade::from_mask(0b1000).unwrap(), z),
        ])
    }

    /// General vector over all five generators.
    pub fn vector(coeffs: [S; 5]) -> Self {
        Self::from_terms(
            Generator::ALL
                .into_iter()
                .zip(coeffs)
                .map(|(g, c)| (Blade::from_generators(&[g]).unwrap(), c)),
        )
    }

    /// The geometric product of the listed generators, in canonical form.
    pub fn canonicalize(seq: &[Generator]) -> Self {
        seq.iter()
            .fold(Self::one(), |acc, &g| acc.geometric_product(&Self::generator(g)))
    }

    /// [`Multivector::canonicalize`] from index labels (`0`..`3`, `inf`, `∞`).
    pub fn canonicalize_labels<T: AsRef<str>>(labels: &[T]) -> Result<Self> {
        let gens = labels
            .iter()
            .map(|l| l.as_ref().parse::<Generator>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::canonicalize(&gens))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &S)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coefficient(&self, blade: Blade) -> S {
        self.terms.get(&blade).cloned().unwrap_or_else(S::zero)
    }

    pub fn scalar_part(&self) -> S {
        self.coefficient(Blade::SCALAR)
    }

    /// The value when the multivector is a pure scalar (including zero).
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Blade::SCALAR).cloned(),
            _ => None,
        }
    }

    /// Coefficients of e1, e2, e3.
    pub fn to_vector3(&self) -> [S; 3] {
        [0b0010, 0b0100, 0b1000].map(|m| self.coefficient(Blade::from_mask(m).unwrap()))
    }

    pub fn scale(&self, c: &S) -> Self {
        Self::from_terms(self.terms.iter().map(|(b, v)| (*b, v.times(c))))
    }

    /// Exact division of every coefficient by `c`.
    pub fn div_scalar(&self, c: &S) -> Result<Self> {
        let terms = self
            .terms
            .iter()
            .map(|(b, v)| Ok((*b, v.div_exact(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(terms))
    }

    pub fn map_coefficients<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Multivector<T> {
        Multivector::from_terms(self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    pub fn try_map_coefficients<T: Scalar>(&self, f: impl Fn(&S) -> Result<T>) -> Result<Multivector<T>> {
        let terms = self
            .terms
            .iter()
            .map(|(b, c)| Ok((*b, f(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Multivector::from_terms(terms))
    }

    /// Coordinates over the outer-product basis, where a blade `{0} ∪ S ∪ {∞}`
    /// stands for `e0 ∧ e_S ∧ e∞` instead of the geometric product `e0 e_S e∞`.
    /// The two differ by `e0 e_S e∞ = (-1)^(|S|+1) e_S + e0 ∧ e_S ∧ e∞`.
    pub fn outer_basis_terms(&self) -> Vec<(Blade, S)> {
        let mut map = self.terms.clone();
        for (b, c) in &self.terms {
            if let Some((s, sign)) = mixed_split(*b) {
                let shift = if sign > 0 { c.clone() } else { c.negated() };
                let acc = map.remove(&s).unwrap_or_else(S::zero).plus(&shift);
                map.insert(s, acc);
            }
        }
        map.into_iter().map(|(b, c)| (b, c.clean())).filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Inverse of [`Multivector::outer_basis_terms`].
    pub fn from_outer_basis(terms: impl IntoIterator<Item = (Blade, S)>) -> Self {
        let mut out = Vec::new();
        for (b, c) in terms {
            if let Some((s, sign)) = mixed_split(b) {
                out.push((s, if sign > 0 { c.negated() } else { c.clone() }));
            }
            out.push((b, c));
        }
        Self::from_terms(out)
    }

    /// Display over the outer-product basis (see [`Multivector::outer_basis_terms`]).
    pub fn render_outer_basis(&self) -> String {
        let terms = self.outer_basis_terms();
        render_terms(terms.iter().map(|(b, c)| (*b, c)))
    }

    /// Text accepted back by the calculator grammar.
    pub fn to_input_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(b, c)| {
                if *b == Blade::SCALAR {
                    format!("({})", c.to_input_string())
                } else {
                    format!("({})*{}", c.to_input_string(), b.notation(true))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Object mapping blade keys to coefficient text, in term order.
    pub fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .terms
            .iter()
            .map(|(b, c)| (b.key(), Value::String(c.to_text())))
            .collect();
        Value::Object(map)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidInput("expected a JSON object".into()))?;
        let terms = obj
            .iter()
            .map(|(k, v)| {
                let text = v
                    .as_str()
                    .ok_or_else(|| Error::InvalidInput(format!("coefficient of `{k}` must be a string")))?;
                Ok((Blade::from_key(k)?, S::parse_text(text)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::try_from_terms(terms)
    }
}

/// Terms in blade order, coefficient 1 suppressed, multi-term coefficients
/// parenthesized: `3a - 12a e[1,3] + (a+b) e[1,∞]`.
impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().map(|(b, c)| (*b, c))))
    }
}

pub(crate) fn render_terms<'a, S: Scalar>(terms: impl ExactSizeIterator<Item = (Blade, &'a S)>) -> String {
    if terms.len() == 0 {
        return "0".to_string();
    }
    let alone = terms.len() == 1;
    let mut out = String::new();
    for (i, (b, c)) in terms.enumerate() {
        let parts = c.display_parts();
        let body = if b == Blade::SCALAR {
            if parts.compound && !alone {
                format!("({})", parts.magnitude)
            } else {
                parts.magnitude
            }
        } else if parts.compound {
            format!("({}) {}", parts.magnitude, b)
        } else if parts.magnitude == "1" {
            b.to_string()
        } else {
            format!("{} {}", parts.magnitude, b)
        };
        match (i, parts.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// For a blade holding both e0 and e∞: the middle blade `S` and `(-1)^(|S|+1)`.
fn mixed_split(b: Blade) -> Option<(Blade, i64)> {
    let m = b.mask();
    if m & 0b10001 != 0b10001 {
        return None;
    }
    let s = m & 0b01110;
    let sign = if (s.count_ones() + 1) % 2 == 0 { 1 } else { -1 };
    Some((Blade::from_mask(s).unwrap(), sign))
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<S: Scalar> Add for &Multivector<S> {
    type Output = Multivector<S>;
    fn add(self, rhs: &Multivector<S>) -> Multivector<S> {
        Multivector::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(b, c)| (*b, c.clone())),
        )
    }
}

impl<S: Scalar> Sub for &Multivector<S> {
    type Output = Multivector<S>;
    fn sub(self, rhs: &Multivector<S>) -> Multivector<S> {
        Multivector::from_terms(
            self.terms
                .iter()
                .map(|(b, c)| (*b, c.clone()))
                .chain(rhs.terms.iter().map(|(b, c)| (*b, c.negated()))),
        )
    }
}

impl<S: Scalar> Neg for &Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        Multivector::from_terms(self.terms.iter().map(|(b, c)| (*b, c.negated())))
    }
}

/// Geometric product.
impl<S: Scalar> Mul for &Multivector<S> {
    type Output = Multivector<S>;
    fn mul(self, rhs: &Multivector<S>) -> Multivector<S> {
        self.geometric_product(rhs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<S: Scalar> $tr for Multivector<S> {
            type Output = Multivector<S>;
            fn $m(self, rhs: Multivector<S>) -> Multivector<S> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for Multivector<S> {
    type Output = Multivector<S>;
    fn neg(self) -> Multivector<S> {
        -&self
    }
}
