//! Normal forms by exhaustive rewriting with
//! `ei ej = -ej ei`, `ei e0 = -e0 ei`, `ei e∞ = -e∞ ei`, `ei² = 1`,
//! `e∞ e0 = -2 - e0 e∞`, `e0² = e∞² = 0`.

use std::collections::BTreeMap;

use cga_core::{Blade, Generator, Multivector, Rational};

/// Generator indices 0..=4 (4 is e∞).
fn index(g: Generator) -> u8 {
    g as u8
}

/// Geometric product of a generator word, by rewriting.
pub fn rewrite_product(seq: &[Generator]) -> Multivector<Rational> {
    let start: Vec<u8> = seq.iter().map(|&g| index(g)).collect();
    let mut work = vec![(Rational::one(), start)];
    let mut done: BTreeMap<u8, Rational> = BTreeMap::new();
    while let Some((c, word)) = work.pop() {
        match word.windows(2).position(|w| w[0] >= w[1]) {
            None => {
                let mask = word.iter().fold(0u8, |m, &i| m | (1 << i));
                let acc = done.entry(mask).or_insert_with(Rational::zero);
                *acc = &*acc + &c;
            }
            Some(i) => {
                let (a, b) = (word[i], word[i + 1]);
                let mut rest = word.clone();
                if a == b {
                    if a == 0 || a == 4 {
                        continue;
                    }
                    rest.drain(i..i + 2);
                    work.push((c, rest));
                } else if a == 4 && b == 0 {
                    let mut dropped = word.clone();
                    dropped.drain(i..i + 2);
                    work.push((&c * &Rational::from(-2), dropped));
                    rest.swap(i, i + 1);
                    work.push((-c, rest));
                } else {
                    rest.swap(i, i + 1);
                    work.push((-c, rest));
                }
            }
        }
    }
    Multivector::from_terms(
        done.into_iter()
            .map(|(m, c)| (Blade::from_mask(m).unwrap(), c)),
    )
}

/// Generators of a blade in ascending order.
pub fn word(blade: Blade) -> Vec<Generator> {
    blade.generators().collect()
}

/// Bilinear extension of [`rewrite_product`].
pub fn product(a: &Multivector<Rational>, b: &Multivector<Rational>) -> Multivector<Rational> {
    let mut terms = Vec::new();
    for (ba, ca) in a.terms() {
        for (bb, cb) in b.terms() {
            let mut w = word(ba);
            w.extend(word(bb));
            let coeff = ca * cb;
            for (blade, c) in rewrite_product(&w).terms() {
                terms.push((blade, &coeff * c));
            }
        }
    }
    Multivector::from_terms(terms)
}
