//! Product engine.
//!
//! Multivectors are moved into the orthonormal basis `{e+, e1, e2, e3, e-}`
//! (e+² = 1, e-² = -1), multiplied there with bitmask sign rules, and moved
//! back. The vector-level change of basis is
//! `e0 = (e- - e+)/2`, `e∞ = e- + e+`.
//!
//! Orthonormal masks use bit 0 for e+, bits 1..=3 for e1..e3, bit 4 for e-.
//! In that basis the true Clifford grade of a blade is its popcount.

use std::sync::OnceLock;

use crate::blade::Blade;
use crate::multivector::Multivector;
use crate::scalar::{Rational, Scalar};

const E_MINUS: u8 = 1 << 4;

/// Coefficient of a sparse change-of-basis entry: `(target mask, numer, denom)`.
type Entry = (u8, i64, i64);

struct Tables {
    to_ortho: Vec<Vec<Entry>>,
    from_ortho: Vec<Vec<Entry>>,
}

/// Sign from reordering the concatenation of two orthonormal blades.
fn reorder_sign(a: u8, b: u8) -> i64 {
    let mut a = a >> 1;
    let mut swaps = 0;
    while a != 0 {
        swaps += (a & b).count_ones();
        a >>= 1;
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sign of `e_a e_b = sign * e_(a^b)` in the orthonormal basis.
pub(crate) fn ortho_sign(a: u8, b: u8) -> i64 {
    let s = reorder_sign(a, b);
    if a & b & E_MINUS != 0 {
        -s
    } else {
        s
    }
}

fn dense_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); 32];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            let s = Rational::from(ortho_sign(i as u8, j as u8));
            out[i ^ j] = &out[i ^ j] + &(&s * &(x * y));
        }
    }
    out
}

fn invert(mut m: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("change of basis is invertible");
        m.swap(col, piv);
        inv.swap(col, piv);
        let p = m[col][col].recip().expect("nonzero pivot");
        for j in 0..n {
            m[col][j] = &m[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..n {
                    m[r][j] = &m[r][j] - &(&f * &m[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    inv
}

fn small(r: &Rational) -> (i64, i64) {
    let n = r.numer().try_into().expect("small change-of-basis entry");
    let d = r.denom().try_into().expect("small change-of-basis entry");
    (n, d)
}

fn sparse_columns(m: &[Vec<Rational>]) -> Vec<Vec<Entry>> {
    // m[row][col]; returns per-column entries
    (0..32)
        .map(|col| {
            (0..32)
                .filter(|&row| !m[row][col].is_zero())
                .map(|row| {
                    let (n, d) = small(&m[row][col]);
                    (row as u8, n, d)
                })
                .collect()
        })
        .collect()
}

fn build() -> Tables {
    let half = Rational::new(1, 2).unwrap();
    let generator = |bit: u8| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); 32];
        match bit {
            0 => {
                v[1] = -half.clone();
                v[E_MINUS as usize] = half.clone();
            }
            4 => {
                v[1] = Rational::one();
                v[E_MINUS as usize] = Rational::one();
            }
            i => v[1 << i] = Rational::one(),
        }
        v
    };
    // forward[row = ortho][col = null]
    let mut forward = vec![vec![Rational::zero(); 32]; 32];
    for null in 0..32u8 {
        let mut acc = vec![Rational::zero(); 32];
        acc[0] = Rational::one();
        for bit in 0..5u8 {
            if null & (1 << bit) != 0 {
                acc = dense_product(&acc, &generator(bit));
            }
        }
        for (row, v) in acc.into_iter().enumerate() {
            forward[row][null as usize] = v;
        }
    }
    let backward = invert(forward.clone());
    Tables {
        to_ortho: sparse_columns(&forward),
        from_ortho: sparse_columns(&backward),
    }
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(build)
}

/// Dense orthonormal-basis coordinates.
pub(crate) type Ortho<S> = [S; 32];

pub(crate) fn zeros<S: Scalar>() -> Ortho<S> {
    std::array::from_fn(|_| S::zero())
}

pub(crate) fn to_ortho<S: Scalar>(mv: &Multivector<S>) -> Ortho<S> {
    let t = tables();
    let mut out: Ortho<S> = zeros();
    for (blade, c) in mv.terms() {
        for &(o, n, d) in &t.to_ortho[blade.mask() as usize] {
            let o = o as usize;
            out[o] = out[o].plus(&c.scale_ratio(n, d));
        }
    }
    out
}

pub(crate) fn from_ortho<S: Scalar>(coords: &Ortho<S>) -> Multivector<S> {
    let t = tables();
    let mut out: Ortho<S> = zeros();
    for (o, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for &(m, n, d) in &t.from_ortho[o] {
            let m = m as usize;
            out[m] = out[m].plus(&c.scale_ratio(n, d));
        }
    }
    Multivector::from_terms(
        out.into_iter()
            .enumerate()
            .map(|(m, c)| (Blade::from_mask(m as u8).expect("mask < 32"), c)),
    )
}

/// Bilinear product in the orthonormal basis, keeping only blade pairs accepted by `keep`.
pub(crate) fn product<S: Scalar>(a: &Ortho<S>, b: &Ortho<S>, keep: impl Fn(u8, u8) -> bool) -> Ortho<S> {
    let mut out: Ortho<S> = zeros();
    let bs: Vec<(u8, &S)> = b
        .iter()
        .enumerate()
        .filter(|(_, y)| !y.is_zero())
        .map(|(j, y)| (j as u8, y))
        .collect();
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        let i = i as u8;
        for &(j, y) in &bs {
            if !keep(i, j) {
                continue;
            }
            let term = x.times(y);
            let k = (i ^ j) as usize;
            out[k] = if ortho_sign(i, j) > 0 {
                out[k].plus(&term)
            } else {
                out[k].minus(&term)
            };
        }
    }
    out
}
