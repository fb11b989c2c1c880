//! Translations `φ(a,b)` of `Z13 ⊕ Z20`, the induced action on day numbers,
//! and orbit enumeration.

use std::fmt;
use std::ops::Add;

use serde::Serialize;

use crate::calendar::{ell, iota, DayName, DayNumber, NUMERALS, SIGNS};
use crate::modular::{gcd, lcm};

/// The translation `(x, y) ↦ (a + x mod 13, b + y mod 20)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Translation {
    a: u8,
    b: u8,
}

impl Translation {
    pub const IDENTITY: Translation = Translation { a: 0, b: 0 };
    /// Moves day 1 to day 21: a 20-day shift, one veintena forward.
    pub const VEINTENA: Translation = Translation { a: 7, b: 0 };
    /// Moves `(1,1)` to `(1,14)`: a 13-day shift, one trecena forward.
    pub const TRECENA: Translation = Translation { a: 0, b: 13 };
    /// Moves `(1,1)` to `(5,5)`: a 4-day shift within a tetrad class.
    pub const TETRAD: Translation = Translation { a: 4, b: 4 };
    /// Acts on the sign only, stepping by 4; groups trecena start signs by orientation.
    pub const ORIENTED_TRECENA: Translation = Translation { a: 0, b: 4 };

    pub fn new(a: i64, b: i64) -> Self {
        Translation {
            a: a.rem_euclid(NUMERALS as i64) as u8,
            b: b.rem_euclid(SIGNS as i64) as u8,
        }
    }

    pub fn a(self) -> u8 {
        self.a
    }

    pub fn b(self) -> u8 {
        self.b
    }

    /// The translation by a group element.
    pub fn by(name: DayName) -> Self {
        Translation::new(name.numeral() as i64, name.sign() as i64)
    }

    /// The group element this translation adds.
    pub fn as_name(self) -> DayName {
        DayName::new(self.a as i64, self.b as i64)
    }

    /// All 260 translations.
    pub fn all() -> impl Iterator<Item = Translation> {
        DayName::all().map(Translation::by)
    }

    /// Order of the translation as a group element: `lcm(ord₁₃(a), ord₂₀(b))`.
    pub fn order(self) -> usize {
        let ord = |m: i64, c: i64| m / gcd(m, c);
        lcm(
            ord(NUMERALS as i64, self.a as i64),
            ord(SIGNS as i64, self.b as i64),
        ) as usize
    }
}

impl Add for Translation {
    type Output = Translation;

    fn add(self, rhs: Translation) -> Translation {
        Translation::by(self.as_name() + rhs.as_name())
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// `φ(a,b)(q, r)`.
pub fn apply(t: Translation, n: DayName) -> DayName {
    n + t.as_name()
}

/// `T(a,b)(x) = ι(φ(a,b)(ℓ(x)))`.
pub fn act_on_daynumber(t: Translation, x: DayNumber) -> DayNumber {
    iota(apply(t, ell(x)))
}

/// The constant `s = ι(a,b)` with `T(a,b)(x) = x + s mod 260` for every `x`.
pub fn shift_amount(t: Translation) -> DayNumber {
    iota(t.as_name())
}

/// The unique translation carrying `from` to `to`.
pub fn solve_translation(from: DayName, to: DayName) -> Translation {
    Translation::by(to - from)
}

/// Which coordinate of a day name to project onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coordinate {
    Numeral,
    Sign,
}

/// The cycle of a seed under repeated translation.
///
/// `elements[n]` is the `n`-th iterate, starting with the seed itself;
/// translating the last element gives back the seed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Orbit {
    seed: DayName,
    translation: Translation,
    elements: Vec<DayName>,
}

impl Orbit {
    pub fn seed(&self) -> DayName {
        self.seed
    }

    pub fn translation(&self) -> Translation {
        self.translation
    }

    pub fn elements(&self) -> &[DayName] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, name: DayName) -> bool {
        self.elements.contains(&name)
    }
}

/// Iterates `apply(t, ·)` from `seed` until the seed recurs.
pub fn orbit(t: Translation, seed: DayName) -> Orbit {
    let mut elements = vec![seed];
    let mut cur = apply(t, seed);
    while cur != seed {
        elements.push(cur);
        cur = apply(t, cur);
    }
    Orbit {
        seed,
        translation: t,
        elements,
    }
}

/// Projects each orbit element to one coordinate, keeping order and repeats.
pub fn orbit_restrict(o: &Orbit, coordinate: Coordinate) -> Vec<u8> {
    o.elements
        .iter()
        .map(|n| match coordinate {
            Coordinate::Numeral => n.numeral(),
            Coordinate::Sign => n.sign(),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn name(q: i64, r: i64) -> DayName {
        DayName::new(q, r)
    }

    fn day(x: i64) -> DayNumber {
        DayNumber::new(x)
    }

    #[test]
    fn apply_examples() {
        assert_eq!(apply(Translation::new(7, 0), name(1, 1)), name(8, 1));
        assert_eq!(apply(Translation::IDENTITY, name(5, 5)), name(5, 5));
        assert_eq!(apply(Translation::new(7, 0), name(10, 10)), name(4, 10));
        assert_eq!(apply(Translation::new(7, 0), name(7, 0)), name(1, 0));
    }

    #[test]
    fn act_examples() {
        assert_eq!(act_on_daynumber(Translation::new(7, 0), day(1)), day(21));
        assert_eq!(act_on_daynumber(Translation::new(7, 0), day(10)), day(30));
        assert_eq!(act_on_daynumber(Translation::new(7, 0), day(21)), day(41));
        assert_eq!(act_on_daynumber(Translation::new(0, 13), day(1)), day(14));
    }

    #[test]
    fn shift_examples() {
        let s = |a, b| shift_amount(Translation::new(a, b)).residue();
        assert_eq!(s(7, 0), 20);
        assert_eq!(s(1, 0), 40);
        assert_eq!(s(8, 0), 60);
        assert_eq!(s(6, 0), 240);
        assert_eq!(s(0, 13), 13);
        assert_eq!(s(4, 4), 4);
    }

    #[test]
    fn solve_examples() {
        assert_eq!(
            solve_translation(name(1, 1), name(8, 1)),
            Translation::new(7, 0)
        );
        assert_eq!(
            solve_translation(name(1, 1), name(1, 14)),
            Translation::new(0, 13)
        );
        assert_eq!(
            solve_translation(name(1, 1), name(5, 5)),
            Translation::new(4, 4)
        );
    }

    #[test]
    fn shift_theorem_exhaustive() {
        for t in Translation::all() {
            let s = shift_amount(t).residue() as i64;
            for x in 0..260 {
                assert_eq!(act_on_daynumber(t, day(x)), day(x + s));
            }
        }
    }

    #[test]
    fn induced_map_is_a_bijection() {
        for t in Translation::all() {
            let images: HashSet<_> = (0..260).map(|x| act_on_daynumber(t, day(x))).collect();
            assert_eq!(images.len(), 260);
        }
    }

    #[test]
    fn trecena_orbit_signs() {
        let o = orbit(Translation::TRECENA, name(1, 1));
        assert_eq!(
            orbit_restrict(&o, Coordinate::Sign),
            [1, 14, 7, 0, 13, 6, 19, 12, 5, 18, 11, 4, 17, 10, 3, 16, 9, 2, 15, 8]
        );
        assert!(orbit_restrict(&o, Coordinate::Numeral)
            .iter()
            .all(|&q| q == 1));
    }

    #[test]
    fn veintena_orbit_numerals() {
        let o = orbit(Translation::VEINTENA, name(1, 1));
        // Oracle: the days 1, 21, ..., 241 reduced mod 13.
        let expected: Vec<u8> = (0..13).map(|n| ((1 + 20 * n) % 13) as u8).collect();
        assert_eq!(expected, [1, 8, 2, 9, 3, 10, 4, 11, 5, 12, 6, 0, 7]);
        assert_eq!(orbit_restrict(&o, Coordinate::Numeral), expected);
    }

    #[test]
    fn trivial_orbits() {
        let o = orbit(Translation::IDENTITY, name(3, 3));
        assert_eq!(o.elements(), &[name(3, 3)]);
        assert_eq!(
            orbit_restrict(&orbit(Translation::IDENTITY, name(1, 1)), Coordinate::Sign),
            [1]
        );
    }

    #[test]
    fn tetrad_orbit_length() {
        // Brute force: count iterations until (1,1) recurs.
        let t = Translation::TETRAD;
        let mut n = 1;
        let mut cur = apply(t, name(1, 1));
        while cur != name(1, 1) {
            cur = apply(t, cur);
            n += 1;
        }
        assert_eq!(n, 65);
        assert_eq!(orbit(t, name(1, 1)).len(), 65);
        assert_eq!(t.order(), 65);
    }

    #[test]
    fn orbit_lengths_and_partition() {
        for t in Translation::all() {
            let mut covered = HashSet::new();
            for seed in DayName::all() {
                if covered.contains(&seed) {
                    continue;
                }
                let o = orbit(t, seed);
                assert_eq!(o.len(), t.order());
                assert_eq!(260 % o.len(), 0);
                assert_eq!(apply(t, *o.elements().last().unwrap()), seed);
                for e in o.elements() {
                    assert!(covered.insert(*e), "orbits of {t} overlap");
                }
            }
            assert_eq!(covered.len(), 260);
        }
    }

    proptest! {
        #[test]
        fn action_composes(a1 in 0i64..13, b1 in 0i64..20, a2 in 0i64..13, b2 in 0i64..20, x in 0i64..260) {
            let (t1, t2) = (Translation::new(a1, b1), Translation::new(a2, b2));
            prop_assert_eq!(
                act_on_daynumber(t1, act_on_daynumber(t2, day(x))),
                act_on_daynumber(t1 + t2, day(x))
            );
            prop_assert_eq!(act_on_daynumber(Translation::IDENTITY, day(x)), day(x));
        }

        #[test]
        fn solve_inverts_apply(q1 in 0i64..13, r1 in 0i64..20, q2 in 0i64..13, r2 in 0i64..20) {
            let (u, v) = (name(q1, r1), name(q2, r2));
            prop_assert_eq!(apply(solve_translation(u, v), u), v);
        }
    }
}
