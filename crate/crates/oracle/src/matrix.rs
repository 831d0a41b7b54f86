//! Left-regular representation: for each blade `b`, the matrix of `X ↦ b X`.

use cga_core::{Blade, Multivector, Rational};

use crate::rewrite;

type Matrix = Vec<Vec<Rational>>;

pub struct LeftRegularRep {
    /// `mats[b][row][col]`: coefficient of blade `row` in `b * blade(col)`.
    pub mats: Vec<Matrix>,
}

impl Default for LeftRegularRep {
    fn default() -> Self {
        Self::new()
    }
}

impl LeftRegularRep {
    pub fn new() -> Self {
        let mats = Blade::all()
            .map(|b| {
                let mut m = vec![vec![Rational::zero(); 32]; 32];
                for c in Blade::all() {
                    let mut w = rewrite::word(b);
                    w.extend(rewrite::word(c));
                    for (blade, v) in rewrite::rewrite_product(&w).terms() {
                        m[blade.mask() as usize][c.mask() as usize] = v.clone();
                    }
                }
                m
            })
            .collect();
        LeftRegularRep { mats }
    }

    pub fn matrix_of(&self, a: &Multivector<Rational>) -> Matrix {
        let mut out = vec![vec![Rational::zero(); 32]; 32];
        for (b, c) in a.terms() {
            let m = &self.mats[b.mask() as usize];
            for (orow, mrow) in out.iter_mut().zip(m) {
                for (o, x) in orow.iter_mut().zip(mrow) {
                    if !x.is_zero() {
                        *o = &*o + &(c * x);
                    }
                }
            }
        }
        out
    }

    pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
        let n = a.len();
        let mut out = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if a[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if !b[k][j].is_zero() {
                        out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                    }
                }
            }
        }
        out
    }

    /// `A B` as the matrix of `A` applied to the coordinate vector of `B`.
    pub fn product(&self, a: &Multivector<Rational>, b: &Multivector<Rational>) -> Multivector<Rational> {
        let mut out = vec![Rational::zero(); 32];
        for (ba, ca) in a.terms() {
            let m = &self.mats[ba.mask() as usize];
            for (bb, cb) in b.terms() {
                let k = &(ca * cb);
                for (row, o) in out.iter_mut().enumerate() {
                    let x = &m[row][bb.mask() as usize];
                    if !x.is_zero() {
                        *o = &*o + &(k * x);
                    }
                }
            }
        }
        Multivector::from_terms(
            out.into_iter()
                .enumerate()
                .map(|(i, c)| (Blade::from_mask(i as u8).unwrap(), c)),
        )
    }
}
