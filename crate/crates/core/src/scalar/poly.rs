//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in graded lexicographic order (highest total degree first).
//! Symbols are ordered by name, comparing digit runs numerically so that
//! `x2 < x10`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::ScalarError;
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum NameChunk {
    Text(String),
    // (digit count without leading zeros, digits)
    Number(usize, String),
}

#[derive(Debug)]
struct SymbolData {
    name: Box<str>,
    key: Vec<NameChunk>,
}

/// An interned polynomial variable.
#[derive(Clone)]
pub struct Symbol(Arc<SymbolData>);

fn interner() -> &'static Mutex<HashMap<String, Symbol>> {
    static TABLE: OnceLock<Mutex<HashMap<String, Symbol>>> = OnceLock::new();
    TABLE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_valid_symbol_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

fn natural_key(name: &str) -> Vec<NameChunk> {
    let mut out = Vec::new();
    let bytes = name.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let digit = bytes[i].is_ascii_digit();
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() == digit {
            i += 1;
        }
        let run = &name[start..i];
        if digit {
            let trimmed = run.trim_start_matches('0');
            out.push(NameChunk::Number(trimmed.len(), trimmed.to_string()));
        } else {
            out.push(NameChunk::Text(run.to_string()));
        }
    }
    out
}

impl Symbol {
    pub fn new(name: &str) -> Result<Symbol, ScalarError> {
        if !is_valid_symbol_name(name) {
            return Err(ScalarError::Parse(format!("invalid symbol name `{name}`")));
        }
        let mut table = interner().lock().unwrap_or_else(|e| e.into_inner());
        let sym = table
            .entry(name.to_string())
            .or_insert_with(|| {
                Symbol(Arc::new(SymbolData {
                    name: name.into(),
                    key: natural_key(name),
                }))
            })
            .clone();
        Ok(sym)
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }
}

impl PartialEq for Symbol {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.name == other.0.name
    }
}

impl Eq for Symbol {}

impl Hash for Symbol {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.name.hash(state);
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0
            .key
            .cmp(&other.0.key)
            .then_with(|| self.0.name.cmp(&other.0.name))
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Product of symbol powers; sorted by symbol, all exponents positive.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Symbol, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(s: Symbol) -> Self {
        Monomial(vec![(s, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Symbol, u32)] {
        &self.0
    }

    pub fn exponent(&self, s: &Symbol) -> u32 {
        self.0.iter().find(|(t, _)| t == s).map_or(0, |(_, e)| *e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for (s, e) in &self.0 {
            if j < other.0.len() && &other.0[j].0 == s {
                let d = other.0[j].1;
                match e.cmp(&d) {
                    Ordering::Less => return None,
                    Ordering::Greater => out.push((s.clone(), e - d)),
                    Ordering::Equal => {}
                }
                j += 1;
            } else {
                out.push((s.clone(), *e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    fn render(&self, sep: &str) -> String {
        self.0
            .iter()
            .map(|(s, e)| match e {
                1 => s.name().to_string(),
                _ if sep == "*" => vec![s.name(); *e as usize].join("*"),
                _ => format!("{}^{}", s.name(), e),
            })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

/// Graded lexicographic order with the highest term first.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| {
            let mut i = 0;
            loop {
                match (self.0.get(i), other.0.get(i)) {
                    (Some((sa, ea)), Some((sb, eb))) => {
                        if sa == sb {
                            if ea != eb {
                                return eb.cmp(ea);
                            }
                        } else {
                            return sa.cmp(sb);
                        }
                    }
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (None, None) => return Ordering::Equal,
                }
                i += 1;
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            f.write_str("1")
        } else {
            f.write_str(&self.render(" "))
        }
    }
}

/// Multivariate polynomial over the rationals in expanded form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Poly { terms }
    }

    pub fn var(s: Symbol) -> Self {
        Poly::term(Rational::one(), Monomial::var(s))
    }

    pub fn symbol(name: &str) -> Result<Self, ScalarError> {
        Ok(Poly::var(Symbol::new(name)?))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The value of a polynomial with no symbols.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn symbols(&self) -> Vec<Symbol> {
        let mut out: Vec<Symbol> = self
            .terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(s, _)| s.clone()))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next()
    }

    fn accumulate(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let sum = &*o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Replaces bound symbols by rational values; unbound symbols are kept.
    pub fn substitute(&self, bindings: &HashMap<Symbol, Rational>) -> Poly {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (s, e) in &m.0 {
                match bindings.get(s) {
                    Some(v) => coeff = &coeff * &v.pow(*e),
                    None => rest.push((s.clone(), *e)),
                }
            }
            Poly::accumulate(&mut terms, Monomial(rest), coeff);
        }
        Poly { terms }
    }

    /// Exact quotient; fails unless `divisor` divides `self` in Q[symbols].
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, ScalarError> {
        if divisor.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if let Some(c) = divisor.as_constant() {
            return Ok(self.scale(&c.recip()?));
        }
        let (lead_m, lead_c) = divisor.leading().expect("nonzero divisor");
        let mut quotient = BTreeMap::new();
        let mut rem = self.clone();
        while let Some((rm, rc)) = rem.leading() {
            let m = rm.div(lead_m).ok_or_else(|| {
                ScalarError::InexactDivision(format!("({self}) / ({divisor})"))
            })?;
            let c = rc.checked_div(lead_c)?;
            let step = Poly::term(c.clone(), m.clone());
            rem = &rem - &(&step * divisor);
            Poly::accumulate(&mut quotient, m, c);
        }
        Ok(Poly { terms: quotient })
    }

    /// Square root of a constant or of a monomial with even exponents and a square coefficient.
    pub fn sqrt_exact(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.leading()?;
        let root_c = c.sqrt_exact()?;
        let mut factors = Vec::with_capacity(m.0.len());
        for (s, e) in &m.0 {
            if e % 2 != 0 {
                return None;
            }
            factors.push((s.clone(), e / 2));
        }
        Some(Poly::term(root_c, Monomial(factors)))
    }

    /// Single-term polynomial whose coefficient is negative.
    pub fn is_negative_term(&self) -> bool {
        self.terms.len() == 1 && self.leading().is_some_and(|(_, c)| c.is_negative())
    }

    fn render_term(m: &Monomial, c: &Rational) -> String {
        if m.is_one() {
            return c.to_string();
        }
        let vars = m.render(" ");
        if c.is_one() {
            vars
        } else if c.is_integer() {
            format!("{c}{vars}")
        } else {
            format!("{c} {vars}")
        }
    }

    /// Text accepted by the calculator grammar (explicit `*`, no `^`).
    pub fn to_input_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&a.to_string());
            } else if a.is_one() {
                out.push_str(&m.render("*"));
            } else {
                out.push_str(&format!("{a}*{}", m.render("*")));
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            f.write_str(&Poly::render_term(m, &c.abs()))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Self {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Self {
        Poly::constant(Rational::from(n))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Poly::accumulate(&mut terms, m.clone(), c.clone());
        }
        Poly { terms }
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            Poly::accumulate(&mut terms, m.clone(), -c.clone());
        }
        Poly { terms }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                Poly::accumulate(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Poly { terms }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            Poly::accumulate(&mut self.terms, m, c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            Poly::accumulate(&mut self.terms, m, -c);
        }
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Parses polynomial text: both the display form (`3a^2-1/2 t1 x`) and
/// explicit products (`3*a*a`) are accepted.
impl FromStr for Poly {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = PolyParser { src: s, pos: 0 };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(out)
    }
}

struct PolyParser<'a> {
    src: &'a str,
    pos: usize,
}

impl PolyParser<'_> {
    fn error(&self, msg: &str) -> ScalarError {
        ScalarError::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += self.peek().map_or(0, char::len_utf8);
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ScalarError> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ScalarError> {
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some('/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.div_exact(&d)?;
                }
                Some(c) if c == '(' || c.is_ascii_alphanumeric() || c == '.' => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, ScalarError> {
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let exp: u32 = self.src[start..self.pos]
                .parse()
                .map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(exp));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ScalarError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                while self.peek().is_some_and(|c| c.is_ascii_digit() || c == '.') {
                    self.pos += 1;
                }
                // `p/q` directly followed by digits is one rational literal
                let rest = &self.src[self.pos..];
                if rest.starts_with('/') && rest[1..].starts_with(|c: char| c.is_ascii_digit()) {
                    self.pos += 1;
                    while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                        self.pos += 1;
                    }
                }
                let lit: Rational = self.src[start..self.pos].parse()?;
                Ok(Poly::constant(lit))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
                    self.pos += 1;
                }
                Poly::symbol(&self.src[start..self.pos])
            }
            _ => Err(self.error("expected number, symbol or `(`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(&p("x1 - x2") * &p("x1 + x2"), p("x1^2 - x2^2"));
    }

    #[test]
    fn square_of_symbol() {
        let a = p("a");
        assert_eq!((&a * &a).to_string(), "a^2");
    }

    #[test]
    fn additive_inverse() {
        let q = p("3x y - 1/2 z + 7");
        assert!((&q + &-q.clone()).is_zero());
    }

    #[test]
    fn display_order_is_graded_lex() {
        assert_eq!(p("1 + x + y^2 + x y").to_string(), "x y+y^2+x+1");
        assert_eq!(p("x10 + x2").to_string(), "x2+x10");
        assert_eq!(p("-1/2 t1").to_string(), "-1/2 t1");
        assert_eq!(p("12 a a").to_string(), "12a^2");
    }

    #[test]
    fn substitution() {
        let x = Symbol::new("x").unwrap();
        let x1 = Symbol::new("x1").unwrap();
        let b: HashMap<_, _> = [(x, Rational::zero())].into_iter().collect();
        assert_eq!(p("x y + 3").substitute(&b), p("3"));
        let b: HashMap<_, _> = [(x1, Rational::one())].into_iter().collect();
        assert_eq!(p("x1 x2").substitute(&b), p("x2"));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("2x + 4").div_exact(&p("2")).unwrap(), p("x + 2"));
        assert_eq!(p("r^2 a").div_exact(&p("r^2")).unwrap(), p("a"));
        assert_eq!(
            p("x^2 - y^2").div_exact(&p("x + y")).unwrap(),
            p("x - y")
        );
        assert!(matches!(
            p("x + 1").div_exact(&p("x")),
            Err(ScalarError::InexactDivision(_))
        ));
        assert_eq!(p("x").div_exact(&Poly::zero()), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn input_form_reparses() {
        let q = p("3a^2 b - 1/2 t1 + 5");
        assert_eq!(q.to_input_string(), "3*a*a*b - 1/2*t1 + 5");
        assert_eq!(p(&q.to_input_string()), q);
    }

    #[test]
    fn sqrt_of_monomial() {
        assert_eq!(p("4 r^2").sqrt_exact(), Some(p("2r")));
        assert_eq!(p("r^2 + 1").sqrt_exact(), None);
        assert_eq!(p("r").sqrt_exact(), None);
    }

    #[test]
    fn rejects_garbage() {
        assert!("x +".parse::<Poly>().is_err());
        assert!("(x".parse::<Poly>().is_err());
        assert!("x $".parse::<Poly>().is_err());
    }
}
