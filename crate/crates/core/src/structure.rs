//! Trecenas, veintenas and the four orientations, all derived from orbits of
//! the corresponding translations.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::action::{orbit, orbit_restrict, Coordinate, Translation};
use crate::calendar::{ell, DayName, DayNumber};
use crate::error::{Error, Result};

/// One of the twenty 13-day periods, numbered `1..=20`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct TrecenaIndex(u8);

impl TrecenaIndex {
    pub fn new(index: i64) -> Result<Self> {
        if !(1..=20).contains(&index) {
            return Err(Error::OutOfRange {
                what: "trecena",
                value: index,
                min: 1,
                max: 20,
            });
        }
        Ok(TrecenaIndex(index as u8))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = TrecenaIndex> {
        (1..=20).map(TrecenaIndex)
    }
}

/// One of the thirteen 20-day periods, numbered `1..=13`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VeintenaIndex(u8);

impl VeintenaIndex {
    pub fn new(index: i64) -> Result<Self> {
        if !(1..=13).contains(&index) {
            return Err(Error::OutOfRange {
                what: "veintena",
                value: index,
                min: 1,
                max: 13,
            });
        }
        Ok(VeintenaIndex(index as u8))
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn all() -> impl Iterator<Item = VeintenaIndex> {
        (1..=13).map(VeintenaIndex)
    }
}

/// Cardinal orientation, cyclically ordered East → North → West → South → East.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Orientation {
    East,
    North,
    West,
    South,
}

impl Orientation {
    pub const ALL: [Orientation; 4] = [
        Orientation::East,
        Orientation::North,
        Orientation::West,
        Orientation::South,
    ];

    /// Position in the cyclic order, taken modulo 4.
    pub fn from_index(i: usize) -> Self {
        Self::ALL[i % 4]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn next(self) -> Self {
        Self::from_index(self.index() + 1)
    }

    /// `(k, k)` for the k-th orientation: days 1, 2, 3, 4.
    pub fn day_seed(self) -> DayName {
        let k = self.index() as i64 + 1;
        DayName::new(k, k)
    }

    /// Start of the k-th trecena: `(1,1)`, `(1,14)`, `(1,7)`, `(1,0)`.
    pub fn trecena_seed(self) -> DayName {
        trecena_start_name(TrecenaIndex(self.index() as u8 + 1))
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::East => "East",
            Orientation::North => "North",
            Orientation::West => "West",
            Orientation::South => "South",
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|o| o.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::ParseName {
                input: s.to_string(),
                token: s.trim().to_string(),
                reason: "unknown orientation",
            })
    }
}

/// Trecena index and 1-based position inside it.
pub fn trecena_of(x: DayNumber) -> (TrecenaIndex, u8) {
    let d = x.display_value() - 1;
    (TrecenaIndex((d / 13 + 1) as u8), (d % 13 + 1) as u8)
}

/// `(1, 1 + 13(i−1) mod 20)`.
pub fn trecena_start_name(i: TrecenaIndex) -> DayName {
    DayName::new(1, 1 + 13 * (i.0 as i64 - 1))
}

/// Veintena index and 1-based position inside it.
pub fn veintena_of(x: DayNumber) -> (VeintenaIndex, u8) {
    let d = x.display_value() - 1;
    (VeintenaIndex((d / 20 + 1) as u8), (d % 20 + 1) as u8)
}

/// Numeral residue of the first day of veintena `i`: `1 + 7(i−1) mod 13`.
pub fn veintena_start_numeral(i: VeintenaIndex) -> u8 {
    (1 + 7 * (i.0 as i64 - 1)).rem_euclid(13) as u8
}

/// Full name of the first day of veintena `i`; the sign is always Crocodile.
pub fn veintena_start_name(i: VeintenaIndex) -> DayName {
    DayName::new(veintena_start_numeral(i) as i64, 1)
}

/// Day orientation by the closed form `(d − 1) mod 4`.
pub fn orientation_of_day(x: DayNumber) -> Orientation {
    Orientation::from_index((x.display_value() as usize - 1) % 4)
}

/// Day orientation by membership in the `φ(4,4)` orbits of `(1,1)`..`(4,4)`.
pub fn orientation_of_day_by_orbit(x: DayNumber) -> Orientation {
    let name = ell(x);
    Orientation::ALL
        .into_iter()
        .find(|o| orbit(Translation::TETRAD, o.day_seed()).contains(name))
        .expect("the four tetrad orbits cover every day")
}

/// Signs of the trecena starts carrying orientation `o`: the `φ(0,4)` orbit of
/// the k-th trecena start.
pub fn oriented_trecena_signs(o: Orientation) -> BTreeSet<u8> {
    orbit_restrict(
        &orbit(Translation::ORIENTED_TRECENA, o.trecena_seed()),
        Coordinate::Sign,
    )
    .into_iter()
    .collect()
}

/// Trecena orientation by the closed form `(i − 1) mod 4`.
pub fn orientation_of_trecena(i: TrecenaIndex) -> Orientation {
    Orientation::from_index(i.0 as usize - 1)
}

/// Trecena orientation by which oriented sign set holds its start sign.
pub fn orientation_of_trecena_by_signs(i: TrecenaIndex) -> Orientation {
    let sign = trecena_start_name(i).sign();
    Orientation::ALL
        .into_iter()
        .find(|o| oriented_trecena_signs(*o).contains(&sign))
        .expect("oriented sign sets cover all signs")
}
