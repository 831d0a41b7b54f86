//! Products, grade structure, involutions, duals and inverses.

use crate::blade::{Blade, Generator};
use crate::engine::{self, Ortho};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::scalar::Scalar;

fn check_grade(k: i64) -> Result<u32> {
    if (0..=5).contains(&k) {
        Ok(k as u32)
    } else {
        Err(Error::GradeOutOfRange(k))
    }
}

fn map_ortho<S: Scalar>(a: &Multivector<S>, f: impl Fn(u8, &S) -> Option<S>) -> Multivector<S> {
    let coords = engine::to_ortho(a);
    let mut out: Ortho<S> = engine::zeros();
    for (mask, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            if let Some(v) = f(mask as u8, c) {
                out[mask] = v;
            }
        }
    }
    engine::from_ortho(&out)
}

impl<S: Scalar> Multivector<S> {
    pub fn geometric_product(&self, rhs: &Self) -> Self {
        if let Some(c) = self.as_scalar() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_scalar() {
            return self.scale(&c);
        }
        let p = engine::product(&engine::to_ortho(self), &engine::to_ortho(rhs), |_, _| true);
        engine::from_ortho(&p)
    }

    /// Outer (Grassmann) product: `Σ <<A>_r <B>_s>_(r+s)`.
    pub fn outer_product(&self, rhs: &Self) -> Self {
        let p = engine::product(&engine::to_ortho(self), &engine::to_ortho(rhs), |a, b| a & b == 0);
        engine::from_ortho(&p)
    }

    /// Left contraction: `Σ <<A>_r <B>_s>_(s-r)`, zero when r > s.
    pub fn left_contraction(&self, rhs: &Self) -> Self {
        let p = engine::product(&engine::to_ortho(self), &engine::to_ortho(rhs), |a, b| a & !b == 0);
        engine::from_ortho(&p)
    }

    /// The true grade-`k` part, expressed back in the null basis.
    pub fn grade(&self, k: i64) -> Result<Self> {
        let k = check_grade(k)?;
        Ok(map_ortho(self, |m, c| (m.count_ones() == k).then(|| c.clone())))
    }

    /// True iff `self` equals its own grade-`k` part. Zero is every grade.
    pub fn grade_q(&self, k: i64) -> Result<bool> {
        Ok(&self.grade(k)? == self)
    }

    /// Grades that carry a nonzero part.
    pub fn grades(&self) -> Vec<u32> {
        let coords = engine::to_ortho(self);
        let mut present = [false; 6];
        for (m, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                present[(m as u8).count_ones() as usize] = true;
            }
        }
        (0..6).filter(|&k| present[k as usize]).collect()
    }

    pub fn reversion(&self) -> Self {
        map_ortho(self, |m, c| {
            let k = m.count_ones();
            Some(if matches!(k % 4, 2 | 3) { c.negated() } else { c.clone() })
        })
    }

    pub fn involution(&self) -> Self {
        map_ortho(self, |m, c| Some(if m.count_ones() % 2 == 1 { c.negated() } else { c.clone() }))
    }

    /// Grade-0 part of `A rev(A)`.
    pub fn magnitude_squared(&self) -> S {
        self.geometric_product(&self.reversion()).scalar_part()
    }

    /// `e0 ∧ e1 ∧ e2 ∧ e3 ∧ e∞`, which is `e[0,1,2,3,∞] - e[1,2,3]` in the null basis.
    pub fn pseudoscalar() -> Self {
        Generator::ALL
            .iter()
            .fold(Self::one(), |acc, &g| acc.outer_product(&Self::generator(g)))
    }

    /// Inverse pseudoscalar; `I5 I5 = -1`, so this is `-I5`.
    pub fn pseudoscalar_inverse() -> Self {
        -&Self::pseudoscalar()
    }

    /// `A ⌋ I5⁻¹`, equivalently `-(A ⌋ I5)`.
    pub fn dual(&self) -> Self {
        self.left_contraction(&Self::pseudoscalar_inverse())
    }

    /// Two-sided inverse.
    ///
    /// When `A rev(A)` is a nonzero scalar `s` the result is `rev(A)/s`
    /// (exact division). Otherwise the exact and float backends solve the
    /// left-regular linear system; the symbolic backend reports
    /// [`Error::UnsupportedSymbolicInverse`].
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NotInvertible);
        }
        let rev = self.reversion();
        let norm = self.geometric_product(&rev);
        if let Some(s) = norm.as_scalar() {
            if s.is_zero() {
                // A rev(A) = 0 with rev(A) != 0: A is a zero divisor
                return Err(Error::NotInvertible);
            }
            return rev.div_scalar(&s);
        }
        S::linear_inverse(self)
    }

    /// Left-fold geometric product of all factors; the empty product is 1.
    pub fn product_all<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, f| acc.geometric_product(f))
    }

    /// Left-fold outer product of all factors; the empty product is 1.
    pub fn outer_all<'a>(factors: impl IntoIterator<Item = &'a Self>) -> Self {
        factors
            .into_iter()
            .fold(Self::one(), |acc, f| acc.outer_product(f))
    }
}

/// Inverse via the 32×32 matrix of `X ↦ A X`, by Gauss-Jordan elimination.
pub(crate) fn linear_inverse<S: Scalar>(a: &Multivector<S>) -> Result<Multivector<S>> {
    let blades: Vec<Blade> = Blade::all().collect();
    // rows[i] = [column entries..., rhs]
    let mut m: Vec<Vec<S>> = vec![vec![S::zero(); 33]; 32];
    for (j, b) in blades.iter().enumerate() {
        let col = a.geometric_product(&Multivector::from_blade(*b, S::one()));
        for (blade, c) in col.terms() {
            m[blade.mask() as usize][j] = c.clone();
        }
    }
    m[0][32] = S::one();
    let weight = |v: &S| -> f64 {
        if S::BACKEND == crate::scalar::Backend::Float {
            v.to_rational().map_or(0.0, |r| r.to_f64().abs())
        } else if v.is_zero() {
            0.0
        } else {
            1.0
        }
    };
    for col in 0..32 {
        let (piv, w) = (col..32)
            .map(|r| (r, weight(&m[r][col])))
            .fold((col, 0.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if w == 0.0 || m[piv][col].is_zero() {
            return Err(Error::NotInvertible);
        }
        m.swap(col, piv);
        let p = m[col][col].clone();
        for j in col..33 {
            m[col][j] = m[col][j].div_exact(&p)?;
        }
        for r in 0..32 {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in col..33 {
                    let d = f.times(&m[col][j]);
                    m[r][j] = m[r][j].minus(&d);
                }
            }
        }
    }
    let inv = Multivector::from_terms(blades.iter().map(|b| (*b, m[b.mask() as usize][32].clone())));
    let check = inv.geometric_product(a);
    let unit = Multivector::one();
    let ok = match S::BACKEND {
        crate::scalar::Backend::Float => (&check - &unit).terms().all(|(_, c)| {
            c.to_rational().is_some_and(|r| r.to_f64().abs() <= 1e-10)
        }),
        _ => check == unit,
    };
    if ok {
        Ok(inv)
    } else {
        Err(Error::NotInvertible)
    }
}
