//! The in-extenso plate arrangement of all 260 days: four plate pairs, each
//! 5 rows by 13 columns.
//!
//! Reading starts at the lower-right corner of the first pair and runs right
//! to left across all four pairs (52 days) before moving up one row. Rows
//! and columns here are numbered in reading order: row 1 is the bottom row,
//! column 1 is the rightmost column of a pair.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::calendar::{ell, DayName, DayNumber};
use crate::error::{Error, Result};
use crate::structure::Orientation;

pub const PAIRS: u8 = 4;
pub const ROWS: u8 = 5;
pub const COLUMNS: u8 = 13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LayoutCell {
    pub pair: u8,
    pub row: u8,
    pub column: u8,
    pub day: DayNumber,
    pub name: DayName,
}

impl LayoutCell {
    /// `day = 52(row − 1) + 13(pair − 1) + column`, 1-based.
    fn at(pair: u8, row: u8, column: u8) -> Self {
        let d = 52 * (row as i64 - 1) + 13 * (pair as i64 - 1) + column as i64;
        let day = DayNumber::new(d);
        LayoutCell {
            pair,
            row,
            column,
            day,
            name: ell(day),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlatePair {
    pair_index: u8,
    /// `grid[row − 1][column − 1]`.
    grid: Vec<Vec<LayoutCell>>,
}

impl PlatePair {
    pub fn pair_index(&self) -> u8 {
        self.pair_index
    }

    /// Rows in reading order, bottom row first, each in reading order.
    pub fn rows(&self) -> &[Vec<LayoutCell>] {
        &self.grid
    }

    pub fn cell(&self, row: u8, column: u8) -> &LayoutCell {
        &self.grid[row as usize - 1][column as usize - 1]
    }

    pub fn cells(&self) -> impl Iterator<Item = &LayoutCell> {
        self.grid.iter().flatten()
    }

    /// Rows as drawn on the plates: top row first, columns left to right.
    pub fn facsimile_rows(&self) -> Vec<Vec<LayoutCell>> {
        self.grid
            .iter()
            .rev()
            .map(|r| r.iter().rev().copied().collect())
            .collect()
    }

    /// Orientation of the trecenas this pair holds (one per row).
    pub fn orientation(&self) -> Orientation {
        Orientation::from_index(self.pair_index as usize - 1)
    }
}

pub fn build_layout() -> Vec<PlatePair> {
    (1..=PAIRS)
        .map(|pair| PlatePair {
            pair_index: pair,
            grid: (1..=ROWS)
                .map(|row| {
                    (1..=COLUMNS)
                        .map(|col| LayoutCell::at(pair, row, col))
                        .collect()
                })
                .collect(),
        })
        .collect()
}

/// The cell holding day `x`.
pub fn locate_day(x: DayNumber) -> LayoutCell {
    let d = x.display_value() - 1;
    let row = d / 52 + 1;
    let rem = d % 52;
    LayoutCell::at((rem / 13 + 1) as u8, row as u8, (rem % 13 + 1) as u8)
}

/// Signs in the reading-first column of a plate pair.
pub fn first_column_signs(pair_index: u8) -> Result<BTreeSet<u8>> {
    if !(1..=PAIRS).contains(&pair_index) {
        return Err(Error::OutOfRange {
            what: "plate pair",
            value: pair_index as i64,
            min: 1,
            max: PAIRS as i64,
        });
    }
    Ok((1..=ROWS)
        .map(|row| LayoutCell::at(pair_index, row, 1).name.sign())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{oriented_trecena_signs, trecena_of};
    use std::collections::HashSet;

    /// Inversion oracle: row = ⌈d/52⌉, r = d − 52(row−1), pair = ⌈r/13⌉, col = r − 13(pair−1).
    fn oracle(d: u16) -> (u8, u8, u8) {
        let row = d.div_ceil(52);
        let r = d - 52 * (row - 1);
        let pair = r.div_ceil(13);
        (pair as u8, row as u8, (r - 13 * (pair - 1)) as u8)
    }

    fn coords(c: &LayoutCell) -> (u8, u8, u8) {
        (c.pair, c.row, c.column)
    }

    #[test]
    fn oracle_values() {
        assert_eq!(oracle(1), (1, 1, 1));
        assert_eq!(oracle(52), (4, 1, 13));
        assert_eq!(oracle(147), (4, 3, 4));
        assert_eq!(oracle(260), (4, 5, 13));
    }

    #[test]
    fn build_examples() {
        let l = build_layout();
        assert_eq!(l.len(), 4);
        let c = l[0].cell(1, 1);
        assert_eq!((c.day.display_value(), c.name), (1, DayName::new(1, 1)));
        let c = l[0].cell(2, 1);
        assert_eq!((c.day.display_value(), c.name), (53, DayName::new(1, 13)));
        let c = l[3].cell(5, 13);
        assert_eq!((c.day.display_value(), c.name), (260, DayName::new(0, 0)));
        assert_eq!(c.name.to_string(), "13-Flower");
    }

    #[test]
    fn locate_examples() {
        let l = |d| coords(&locate_day(DayNumber::from_display(d).unwrap()));
        assert_eq!(l(1), (1, 1, 1));
        assert_eq!(l(52), (4, 1, 13));
        assert_eq!(l(147), (4, 3, 4));
    }

    #[test]
    fn locate_matches_oracle_and_round_trips() {
        let layout = build_layout();
        for x in DayNumber::all() {
            let c = locate_day(x);
            assert_eq!(coords(&c), oracle(x.display_value()));
            assert_eq!(*layout[c.pair as usize - 1].cell(c.row, c.column), c);
            assert_eq!(c.day, x);
        }
    }

    #[test]
    fn cells_partition_the_count() {
        let layout = build_layout();
        let mut seen = HashSet::new();
        for p in &layout {
            assert_eq!(p.cells().count(), 65);
            for c in p.cells() {
                assert!(seen.insert(c.day));
            }
        }
        assert_eq!(seen.len(), 260);
    }

    #[test]
    fn first_column_holds_exactly_trecena_starts() {
        for p in build_layout() {
            for c in p.cells() {
                let (_, pos) = trecena_of(c.day);
                assert_eq!(c.column == 1, pos == 1);
                if c.column == 1 {
                    assert_eq!(c.name.numeral(), 1);
                }
            }
        }
    }

    #[test]
    fn first_column_sign_sets() {
        let s = |p| first_column_signs(p).unwrap();
        assert_eq!(s(1), BTreeSet::from([1, 13, 5, 17, 9]));
        // days 14, 66, 118, 170, 222 mod 20
        assert_eq!(s(2), BTreeSet::from([14, 6, 18, 10, 2]));
        assert_eq!(s(4), BTreeSet::from([0, 4, 8, 12, 16]));
        for o in Orientation::ALL {
            assert_eq!(s(o.index() as u8 + 1), oriented_trecena_signs(o));
        }
        assert!(first_column_signs(0).is_err());
        assert!(first_column_signs(5).is_err());
    }

    #[test]
    fn facsimile_is_mirrored() {
        let l = build_layout();
        let f = l[0].facsimile_rows();
        assert_eq!(f[4][12].day.display_value(), 1);
        assert_eq!(f[0][0].day.display_value(), 221);
    }
}
