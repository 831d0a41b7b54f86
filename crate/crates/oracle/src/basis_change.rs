//! Orthonormal model of G(4,1) with its own bit layout:
//! bit 0..=2 = e1..e3, bit 3 = e+ (squares to +1), bit 4 = e- (squares to -1).
//! `e0 = (e- - e+)/2`, `e∞ = e- + e+`.

use cga_core::{Blade, Generator, Multivector, Rational};

pub const E_PLUS: u8 = 1 << 3;
pub const E_MINUS: u8 = 1 << 4;

pub type Dense = Vec<Rational>;

fn zero_vec() -> Dense {
    vec![Rational::zero(); 32]
}

/// Product of two orthonormal blades as (sign, mask), by walking the factor list.
pub fn blade_product(a: u8, b: u8) -> (i64, u8) {
    let mut factors: Vec<u8> = (0..5).filter(|i| a & (1 << i) != 0).collect();
    factors.extend((0..5).filter(|i| b & (1 << i) != 0));
    // bubble sort, counting transpositions, then cancel equal pairs
    let mut sign = 1;
    let n = factors.len();
    for i in 0..n {
        for j in 0..n - 1 - i {
            if factors[j] > factors[j + 1] {
                factors.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    let mut mask = 0u8;
    let mut i = 0;
    while i < factors.len() {
        if i + 1 < factors.len() && factors[i] == factors[i + 1] {
            if factors[i] == 4 {
                sign = -sign;
            }
            i += 2;
        } else {
            mask |= 1 << factors[i];
            i += 1;
        }
    }
    (sign, mask)
}

pub fn dense_product(a: &Dense, b: &Dense, keep: impl Fn(u8, u8) -> bool) -> Dense {
    let mut out = zero_vec();
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() || !keep(i as u8, j as u8) {
                continue;
            }
            let (s, m) = blade_product(i as u8, j as u8);
            out[m as usize] = &out[m as usize] + &(&Rational::from(s) * &(x * y));
        }
    }
    out
}

fn generator_vector(g: Generator) -> Dense {
    let mut v = zero_vec();
    let half = Rational::new(1, 2).unwrap();
    match g {
        Generator::E0 => {
            v[E_MINUS as usize] = half.clone();
            v[E_PLUS as usize] = -half;
        }
        Generator::Inf => {
            v[E_MINUS as usize] = Rational::one();
            v[E_PLUS as usize] = Rational::one();
        }
        Generator::E1 => v[1] = Rational::one(),
        Generator::E2 => v[2] = Rational::one(),
        Generator::E3 => v[4] = Rational::one(),
    }
    v
}

fn invert(m: &[Dense]) -> Vec<Dense> {
    let n = m.len();
    let mut a: Vec<Dense> = m.to_vec();
    let mut inv: Vec<Dense> = (0..n)
        .map(|i| {
            let mut r = zero_vec();
            r[i] = Rational::one();
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).expect("invertible");
        a.swap(col, piv);
        inv.swap(col, piv);
        let p = a[col][col].recip().unwrap();
        for j in 0..n {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..n {
                    a[r][j] = &a[r][j] - &(&f * &a[col][j]);
                    inv[r][j] = &inv[r][j] - &(&f * &inv[col][j]);
                }
            }
        }
    }
    inv
}

/// Exact 32×32 matrices between null-blade and orthonormal-blade coordinates.
/// `forward[row][col]`: orthonormal component `row` of null blade `col`.
pub struct BasisChange {
    pub forward: Vec<Dense>,
    pub backward: Vec<Dense>,
}

impl Default for BasisChange {
    fn default() -> Self {
        Self::new()
    }
}

impl BasisChange {
    pub fn new() -> Self {
        let mut forward = vec![zero_vec(); 32];
        for blade in Blade::all() {
            let mut acc = zero_vec();
            acc[0] = Rational::one();
            for g in blade.generators() {
                acc = dense_product(&acc, &generator_vector(g), |_, _| true);
            }
            for (row, v) in acc.into_iter().enumerate() {
                forward[row][blade.mask() as usize] = v;
            }
        }
        let backward = invert(&forward);
        BasisChange { forward, backward }
    }

    pub fn to_ortho(&self, a: &Multivector<Rational>) -> Dense {
        let mut out = zero_vec();
        for (b, c) in a.terms() {
            for (row, out_row) in out.iter_mut().enumerate() {
                let f = &self.forward[row][b.mask() as usize];
                if !f.is_zero() {
                    *out_row = &*out_row + &(c * f);
                }
            }
        }
        out
    }

    pub fn from_ortho(&self, v: &Dense) -> Multivector<Rational> {
        let mut terms = Vec::new();
        for (row, brow) in self.backward.iter().enumerate() {
            let mut acc = Rational::zero();
            for (col, x) in v.iter().enumerate() {
                if !x.is_zero() && !brow[col].is_zero() {
                    acc = &acc + &(&brow[col] * x);
                }
            }
            terms.push((Blade::from_mask(row as u8).unwrap(), acc));
        }
        Multivector::from_terms(terms)
    }

    fn binary(&self, a: &Multivector<Rational>, b: &Multivector<Rational>, keep: impl Fn(u8, u8) -> bool) -> Multivector<Rational> {
        self.from_ortho(&dense_product(&self.to_ortho(a), &self.to_ortho(b), keep))
    }

    pub fn product(&self, a: &Multivector<Rational>, b: &Multivector<Rational>) -> Multivector<Rational> {
        self.binary(a, b, |_, _| true)
    }

    /// `Σ <<A>_r <B>_s>_(r+s)` computed grade by grade.
    pub fn outer(&self, a: &Multivector<Rational>, b: &Multivector<Rational>) -> Multivector<Rational> {
        self.graded(a, b, |r, s| Some(r + s))
    }

    /// `Σ <<A>_r <B>_s>_(s-r)` computed grade by grade.
    pub fn left_contraction(&self, a: &Multivector<Rational>, b: &Multivector<Rational>) -> Multivector<Rational> {
        self.graded(a, b, |r, s| s.checked_sub(r))
    }

    fn graded(&self, a: &Multivector<Rational>, b: &Multivector<Rational>, target: impl Fn(u32, u32) -> Option<u32>) -> Multivector<Rational> {
        let mut acc = Multivector::zero();
        for r in 0..=5 {
            let ar = self.grade(a, r);
            if ar.is_zero() {
                continue;
            }
            for s in 0..=5 {
                let Some(t) = target(r, s) else { continue };
                if t > 5 {
                    continue;
                }
                let bs = self.grade(b, s);
                if bs.is_zero() {
                    continue;
                }
                acc = &acc + &self.grade(&self.product(&ar, &bs), t);
            }
        }
        acc
    }

    pub fn grade(&self, a: &Multivector<Rational>, k: u32) -> Multivector<Rational> {
        let mut v = self.to_ortho(a);
        for (m, c) in v.iter_mut().enumerate() {
            if (m as u32).count_ones() != k {
                *c = Rational::zero();
            }
        }
        self.from_ortho(&v)
    }

    pub fn reversion(&self, a: &Multivector<Rational>) -> Multivector<Rational> {
        (0..=5)
            .map(|k| {
                let g = self.grade(a, k);
                if (k * k.saturating_sub(1) / 2) % 2 == 1 { -&g } else { g }
            })
            .fold(Multivector::zero(), |acc, g| &acc + &g)
    }

    pub fn involution(&self, a: &Multivector<Rational>) -> Multivector<Rational> {
        (0..=5)
            .map(|k| {
                let g = self.grade(a, k);
                if k % 2 == 1 { -&g } else { g }
            })
            .fold(Multivector::zero(), |acc, g| &acc + &g)
    }

    pub fn pseudoscalar(&self) -> Multivector<Rational> {
        Generator::ALL.iter().fold(Multivector::one(), |acc, &g| {
            self.outer(&acc, &Multivector::generator(g))
        })
    }
}

/// Outcome of [`basis_change_check`]: a list of failed identities.
#[derive(Debug, Default)]
pub struct Report {
    pub failures: Vec<String>,
    pub checked: usize,
}

impl Report {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        self.checked += 1;
        if !ok {
            self.failures.push(what.into());
        }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the defining relations on the mapped generators, `I5² = -1`, and
/// `e[{0}∪S∪{∞}] = (-1)^(|S|+1) e_S + e0 ∧ e_S ∧ e∞` for every `S ⊆ {1,2,3}`.
pub fn basis_change_check(bc: &BasisChange) -> Report {
    let mut rep = Report::default();
    let scalar = |c: i64| {
        let mut v = zero_vec();
        v[0] = Rational::from(c);
        v
    };
    let gp = |a: &Dense, b: &Dense| dense_product(a, b, |_, _| true);
    let add = |a: &Dense, b: &Dense| -> Dense { a.iter().zip(b).map(|(x, y)| x + y).collect() };
    for gi in Generator::ALL {
        for gj in Generator::ALL {
            let (vi, vj) = (generator_vector(gi), generator_vector(gj));
            let sym = add(&gp(&vi, &vj), &gp(&vj, &vi));
            let expected = match (gi, gj) {
                (Generator::E0, Generator::Inf) | (Generator::Inf, Generator::E0) => scalar(-2),
                (Generator::E0, Generator::E0) | (Generator::Inf, Generator::Inf) => scalar(0),
                (a, b) if a == b => scalar(2),
                _ => scalar(0),
            };
            rep.expect(sym == expected, format!("{gi:?}{gj:?} + {gj:?}{gi:?}"));
        }
    }
    let i5 = bc.pseudoscalar();
    rep.expect(
        bc.product(&i5, &i5) == Multivector::scalar(Rational::from(-1)),
        "I5^2 = -1",
    );
    let e0 = Multivector::generator(Generator::E0);
    let einf = Multivector::generator(Generator::Inf);
    for s in 0u8..8 {
        let mid = s << 1;
        let es = Multivector::from_blade(Blade::from_mask(mid).unwrap(), Rational::one());
        let mixed = Multivector::from_blade(Blade::from_mask(mid | 1 | 16).unwrap(), Rational::one());
        let sign = if (s.count_ones() + 1) % 2 == 0 { 1 } else { -1 };
        let rhs = &es.scale(&Rational::from(sign)) + &bc.outer(&bc.outer(&e0, &es), &einf);
        rep.expect(mixed == rhs, format!("mixed-grade identity for S mask {s:03b}"));
    }
    rep
}
