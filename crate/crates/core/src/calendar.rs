//! Day numbers, day names and the pair of inverse isomorphisms between
//! `Z260` and `Z13 ⊕ Z20`.
//!
//! Internally every quantity is a canonical residue. The traditional
//! 1-based presentation (numerals 1..=13, days 1..=260) only appears at the
//! text boundary: numeral residue 0 is shown as `13` and day residue 0 as `260`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

pub const NUMERALS: u16 = 13;
pub const SIGNS: u16 = 20;
pub const DAYS: u16 = 260;

/// Position of a day inside the 260-day count, as a residue modulo 260.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct DayNumber(u16);

impl DayNumber {
    /// Reduces any integer modulo 260.
    pub fn new(n: i64) -> Self {
        DayNumber(n.rem_euclid(DAYS as i64) as u16)
    }

    /// Builds a day from its displayed number, which must lie in `1..=260`.
    pub fn from_display(d: i64) -> Result<Self> {
        if !(1..=DAYS as i64).contains(&d) {
            return Err(Error::OutOfRange {
                what: "day number",
                value: d,
                min: 1,
                max: DAYS as i64,
            });
        }
        Ok(Self::new(d))
    }

    /// The canonical residue in `0..260`.
    pub fn residue(self) -> u16 {
        self.0
    }

    /// The traditional day number in `1..=260`.
    pub fn display_value(self) -> u16 {
        if self.0 == 0 {
            DAYS
        } else {
            self.0
        }
    }

    /// All 260 days in display order `1, 2, …, 260`.
    pub fn all() -> impl Iterator<Item = DayNumber> {
        (1..=DAYS as i64).map(DayNumber::new)
    }

    pub fn name(self) -> DayName {
        ell(self)
    }
}

impl fmt::Display for DayNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_value())
    }
}

impl FromStr for DayNumber {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let d: i64 = t.parse().map_err(|_| Error::ParseDay(t.to_string()))?;
        DayNumber::from_display(d).map_err(|_| Error::ParseDay(t.to_string()))
    }
}

/// A day name `(q, r)`: numeral residue modulo 13 and sign residue modulo 20.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct DayName {
    numeral: u8,
    sign: u8,
}

impl DayName {
    pub const IDENTITY: DayName = DayName {
        numeral: 0,
        sign: 0,
    };
    /// `(1, 1)`, 1-Crocodile, which generates the whole group.
    pub const GENERATOR: DayName = DayName {
        numeral: 1,
        sign: 1,
    };

    /// Builds a name from arbitrary integers, reducing each coordinate.
    pub fn new(q: i64, r: i64) -> Self {
        DayName {
            numeral: q.rem_euclid(NUMERALS as i64) as u8,
            sign: r.rem_euclid(SIGNS as i64) as u8,
        }
    }

    /// Numeral residue `q` in `0..13`.
    pub fn numeral(self) -> u8 {
        self.numeral
    }

    /// Sign residue `r` in `0..20`.
    pub fn sign(self) -> u8 {
        self.sign
    }

    /// Numeral as written, in `1..=13`.
    pub fn numeral_display(self) -> u8 {
        if self.numeral == 0 {
            NUMERALS as u8
        } else {
            self.numeral
        }
    }

    /// All 260 names in `(q, r)` lexicographic order.
    pub fn all() -> impl Iterator<Item = DayName> {
        (0..NUMERALS as i64).flat_map(|q| (0..SIGNS as i64).map(move |r| DayName::new(q, r)))
    }

    pub fn day(self) -> DayNumber {
        iota(self)
    }
}

impl Add for DayName {
    type Output = DayName;

    fn add(self, rhs: DayName) -> DayName {
        add_names(self, rhs)
    }
}

impl Neg for DayName {
    type Output = DayName;

    fn neg(self) -> DayName {
        DayName::new(-(self.numeral as i64), -(self.sign as i64))
    }
}

impl Sub for DayName {
    type Output = DayName;

    fn sub(self, rhs: DayName) -> DayName {
        self + (-rhs)
    }
}

impl fmt::Display for DayName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&display_name(*self, SignTable::standard()))
    }
}

impl FromStr for DayName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_name(s, SignTable::standard())
    }
}

const ENGLISH_SIGNS: [&str; 20] = [
    "Flower",
    "Crocodile",
    "Wind",
    "House",
    "Lizard",
    "Serpent",
    "Death",
    "Deer",
    "Rabbit",
    "Water",
    "Dog",
    "Monkey",
    "Grass",
    "Reed",
    "Jaguar",
    "Eagle",
    "Vulture",
    "Movement",
    "Flint",
    "Rain",
];

const NAHUATL_SIGNS: [&str; 20] = [
    "Xochitl",
    "Cipactli",
    "Ehecatl",
    "Calli",
    "Cuetzpalin",
    "Coatl",
    "Miquiztli",
    "Mazatl",
    "Tochtli",
    "Atl",
    "Itzcuintli",
    "Ozomatli",
    "Malinalli",
    "Acatl",
    "Ocelotl",
    "Cuauhtli",
    "Cozcacuauhtli",
    "Ollin",
    "Tecpatl",
    "Quiahuitl",
];

/// The twenty day signs, indexed by residue. Index 0 is Flower, 1 is Crocodile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignTable {
    names: Vec<String>,
    aliases: Vec<Option<String>>,
}

impl SignTable {
    /// The canonical English table with Nahuatl aliases.
    pub fn standard() -> &'static SignTable {
        static TABLE: OnceLock<SignTable> = OnceLock::new();
        TABLE.get_or_init(|| SignTable {
            names: ENGLISH_SIGNS.iter().map(|s| s.to_string()).collect(),
            aliases: NAHUATL_SIGNS.iter().map(|s| Some(s.to_string())).collect(),
        })
    }

    /// A table with custom display names and no aliases.
    ///
    /// Only the entry count is validated; uniqueness is a property checked by
    /// the verification suites.
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() != SIGNS as usize {
            return Err(Error::SignTableSize(names.len()));
        }
        let aliases = vec![None; names.len()];
        Ok(SignTable { names, aliases })
    }

    pub fn name(&self, sign: u8) -> &str {
        &self.names[sign as usize % SIGNS as usize]
    }

    pub fn alias(&self, sign: u8) -> Option<&str> {
        self.aliases[sign as usize % SIGNS as usize].as_deref()
    }

    /// Case-insensitive lookup by display name, then by alias.
    pub fn lookup(&self, token: &str) -> Option<u8> {
        let hit = |s: &str| s.eq_ignore_ascii_case(token);
        self.names
            .iter()
            .position(|n| hit(n))
            .or_else(|| {
                self.aliases
                    .iter()
                    .position(|a| a.as_deref().is_some_and(hit))
            })
            .map(|i| i as u8)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

/// `ℓ(x) = (x mod 13, x mod 20)`.
pub fn ell(x: DayNumber) -> DayName {
    DayName::new(x.0 as i64, x.0 as i64)
}

/// `ι(q, r) = 40q − 39r mod 260`, the inverse of [`ell`].
///
/// The coefficients are `20·y1 = 40` and `13·y2 = 221 ≡ −39 (mod 260)` with
/// `y1 = 20⁻¹ mod 13 = 2` and `y2 = 13⁻¹ mod 20 = 17`.
pub fn iota(name: DayName) -> DayNumber {
    let x = DayNumber::new(40 * name.numeral as i64 - 39 * name.sign as i64);
    debug_assert_eq!(x, iota_substitution(name));
    x
}

/// `ι` by substitution: `x = 13k + q` with `k ≡ 17(r − q) (mod 20)`.
pub fn iota_substitution(name: DayName) -> DayNumber {
    let q = name.numeral as i64;
    let k = (17 * (name.sign as i64 - q)).rem_euclid(SIGNS as i64);
    DayNumber::new(13 * k + q)
}

/// The group operation of `Z13 ⊕ Z20`.
pub fn add_names(n1: DayName, n2: DayName) -> DayName {
    DayName::new(
        n1.numeral as i64 + n2.numeral as i64,
        n1.sign as i64 + n2.sign as i64,
    )
}

/// Renders `<numeral 1..13>-<SignName>`, e.g. `2-Movement`.
pub fn display_name(name: DayName, table: &SignTable) -> String {
    format!("{}-{}", name.numeral_display(), table.name(name.sign))
}

/// Renders a day number in `1..=260`.
pub fn display_daynumber(x: DayNumber) -> String {
    x.display_value().to_string()
}

/// Parses `<numeral 1..13>-<sign name or index 0..19>`.
///
/// Sign names match case-insensitively against display names and aliases.
pub fn parse_name(text: &str, table: &SignTable) -> Result<DayName> {
    let input = text.trim();
    let err = |token: &str, reason| Error::ParseName {
        input: input.to_string(),
        token: token.to_string(),
        reason,
    };
    let (num_tok, sign_tok) = input
        .split_once('-')
        .ok_or_else(|| err(input, "expected <numeral>-<sign>"))?;
    let (num_tok, sign_tok) = (num_tok.trim(), sign_tok.trim());

    let numeral: i64 = num_tok
        .parse()
        .map_err(|_| err(num_tok, "numeral is not an integer"))?;
    if !(1..=NUMERALS as i64).contains(&numeral) {
        return Err(err(num_tok, "numeral must be in 1..=13"));
    }

    let sign = if !sign_tok.is_empty() && sign_tok.bytes().all(|b| b.is_ascii_digit()) {
        match sign_tok.parse::<i64>() {
            Ok(i) if i < SIGNS as i64 => i,
            _ => return Err(err(sign_tok, "sign index must be in 0..=19")),
        }
    } else {
        table
            .lookup(sign_tok)
            .ok_or_else(|| err(sign_tok, "unknown sign name"))? as i64
    };
    Ok(DayName::new(numeral, sign))
}
