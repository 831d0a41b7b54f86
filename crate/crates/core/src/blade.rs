//! Null-basis generators and canonical blades.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One of the five generators `e0, e1, e2, e3, e∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E0,
    E1,
    E2,
    E3,
    Inf,
}

impl Generator {
    pub const ALL: [Generator; 5] = [
        Generator::E0,
        Generator::E1,
        Generator::E2,
        Generator::E3,
        Generator::Inf,
    ];

    pub fn bit(self) -> u8 {
        1 << self as u8
    }

    pub fn label(self) -> &'static str {
        match self {
            Generator::E0 => "0",
            Generator::E1 => "1",
            Generator::E2 => "2",
            Generator::E3 => "3",
            Generator::Inf => "∞",
        }
    }

    fn key(self) -> &'static str {
        match self {
            Generator::E0 => "e0",
            Generator::E1 => "e1",
            Generator::E2 => "e2",
            Generator::E3 => "e3",
            Generator::Inf => "einf",
        }
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "0" => Ok(Generator::E0),
            "1" => Ok(Generator::E1),
            "2" => Ok(Generator::E2),
            "3" => Ok(Generator::E3),
            "inf" | "∞" => Ok(Generator::Inf),
            other => Err(Error::UnknownGenerator(other.to_string())),
        }
    }
}

/// The geometric product of distinct generators in ascending order
/// `e0 < e1 < e2 < e3 < e∞`, stored as a 5-bit mask (e0 = bit 0, e∞ = bit 4).
///
/// Blades sort by nominal length (popcount) first, then by mask value.
/// A blade holding both `e0` and `e∞` is not grade-homogeneous.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);
    pub const COUNT: usize = 32;

    pub fn from_mask(mask: u8) -> Option<Blade> {
        (mask < 32).then_some(Blade(mask))
    }

    /// Blade for a set of generators given in strictly increasing order.
    pub fn from_generators(gens: &[Generator]) -> Option<Blade> {
        if gens.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        Some(Blade(gens.iter().fold(0, |m, g| m | g.bit())))
    }

    pub fn all() -> impl Iterator<Item = Blade> {
        (0..32u8).map(Blade)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    /// Number of generators; not the true grade when both e0 and e∞ appear.
    pub fn nominal_len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn generators(self) -> impl Iterator<Item = Generator> {
        Generator::ALL.into_iter().filter(move |g| self.0 & g.bit() != 0)
    }

    /// Serialization key: `s` for the scalar, else dotted generators (`e0.e2.einf`).
    pub fn key(self) -> String {
        if self.0 == 0 {
            return "s".to_string();
        }
        self.generators().map(Generator::key).collect::<Vec<_>>().join(".")
    }

    pub fn from_key(key: &str) -> Result<Blade, Error> {
        if key == "s" {
            return Ok(Blade::SCALAR);
        }
        let gens = key
            .split('.')
            .map(|part| {
                part.strip_prefix('e')
                    .ok_or_else(|| Error::UnknownGenerator(part.to_string()))?
                    .parse::<Generator>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Blade::from_generators(&gens)
            .ok_or_else(|| Error::InvalidInput(format!("blade key `{key}` is not in canonical order")))
    }

    /// `e[i,...,k]` text, with `inf` instead of `∞` when `ascii`.
    pub fn notation(self, ascii: bool) -> String {
        let idx: Vec<&str> = self
            .generators()
            .map(|g| if ascii && g == Generator::Inf { "inf" } else { g.label() })
            .collect();
        format!("e[{}]", idx.join(","))
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nominal_len()
            .cmp(&other.nominal_len())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            f.write_str("1")
        } else {
            f.write_str(&self.notation(false))
        }
    }
}
