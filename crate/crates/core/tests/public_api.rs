use std::collections::BTreeSet;

use tonal_core::{
    ell, iota, locate_day, orbit, orientation_of_trecena, shift_amount, trecena_of,
    trecena_permutation, veintena_start_numeral, DayName, DayNumber, Orientation, Parity,
    Translation, TrecenaIndex, VeintenaIndex,
};

#[test]
fn named_days_round_trip() {
    for (day, name) in [
        (1, "1-Crocodile"),
        (20, "7-Flower"),
        (147, "4-Deer"),
        (197, "2-Movement"),
        (260, "13-Flower"),
    ] {
        let n = ell(DayNumber::new(day));
        assert_eq!(n.to_string(), name);
        assert_eq!(
            iota(name.parse::<DayName>().unwrap()).display_value(),
            day as u16
        );
    }
}

#[test]
fn shifts_of_named_translations() {
    let cases = [
        ((7, 0), 20),
        ((1, 0), 40),
        ((8, 0), 60),
        ((6, 0), 240),
        ((0, 13), 13),
        ((4, 4), 4),
    ];
    for ((a, b), s) in cases {
        assert_eq!(
            shift_amount(Translation::new(a, b)).residue(),
            s,
            "({a},{b})"
        );
    }
}

#[test]
fn tetrad_orbit_has_65_days_spaced_by_four() {
    let o = orbit(Translation::TETRAD, DayName::GENERATOR);
    assert_eq!(o.len(), 65);
    let days: Vec<u16> = o
        .elements()
        .iter()
        .map(|&n| iota(n).display_value())
        .collect();
    assert!(days.windows(2).all(|w| (w[1] + 260 - w[0]) % 260 == 4));
}

#[test]
fn trecena_and_veintena_starts() {
    let t = trecena_of(DayNumber::new(197));
    assert_eq!(t, (TrecenaIndex::new(16).unwrap(), 2));
    let nums: Vec<u8> = (1..=13)
        .map(|v| veintena_start_numeral(VeintenaIndex::new(v).unwrap()))
        .collect();
    assert_eq!(nums, [1, 8, 2, 9, 3, 10, 4, 11, 5, 12, 6, 0, 7]);
}

#[test]
fn trecena_orientations_cycle() {
    for i in 1..=20i64 {
        let o = orientation_of_trecena(TrecenaIndex::new(i).unwrap());
        assert_eq!(o, Orientation::from_index(((i - 1) % 4) as usize));
    }
}

#[test]
fn sigma_structure() {
    let s = trecena_permutation();
    assert_eq!(s.order(), 4);
    assert_eq!(s.parity(), Parity::Even);
    assert_eq!(
        s.fixed_points().into_iter().collect::<BTreeSet<_>>(),
        BTreeSet::from([1, 6, 11, 16])
    );
    assert_eq!(s.power(3), s.inverse());
}

#[test]
fn layout_location() {
    let c = locate_day(DayNumber::new(147));
    assert_eq!((c.pair, c.row, c.column), (4, 3, 4));
}
