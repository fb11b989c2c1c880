//! The 260-day ritual count as the cyclic group `Z13 ⊕ Z20`.
//!
//! A day is a residue modulo 260 ([`DayNumber`]); its name is a pair of a
//! numeral residue modulo 13 and a sign residue modulo 20 ([`DayName`]).
//! [`ell`] and [`iota`] are the two inverse isomorphisms between them.
//! Translations of the name group act on days as fixed shifts, and their
//! orbits give the trecenas, veintenas and the four orientations.
//!
//! ```
//! use tonal_core::{ell, iota, DayName, DayNumber};
//!
//! let name = ell(DayNumber::new(197));
//! assert_eq!(name.to_string(), "2-Movement");
//! assert_eq!(iota("4-Deer".parse::<DayName>().unwrap()).display_value(), 147);
//! ```

pub mod action;
pub mod calendar;
pub mod error;
pub mod layout;
pub mod modular;
pub mod perm;
pub mod structure;
pub mod verify;

pub use action::{
    act_on_daynumber, apply, orbit, orbit_restrict, shift_amount, solve_translation, Coordinate,
    Orbit, Translation,
};
pub use calendar::{
    add_names, display_daynumber, display_name, ell, iota, iota_substitution, parse_name, DayName,
    DayNumber, SignTable,
};
pub use error::{Error, PermutationDefect, Result};
pub use layout::{build_layout, first_column_signs, locate_day, LayoutCell, PlatePair};
pub use modular::{crt_solve, mod_inverse, reduce, CrtSystem, Residue};
pub use perm::{
    cayley_image, generate_cyclic, is_isomorphic_to_zn, trecena_permutation, CycleDecomposition,
    CyclicSubgroup, Parity, Permutation, ZnWitness,
};
pub use structure::{
    orientation_of_day, orientation_of_trecena, oriented_trecena_signs, trecena_of,
    trecena_start_name, veintena_of, veintena_start_name, veintena_start_numeral, Orientation,
    TrecenaIndex, VeintenaIndex,
};
