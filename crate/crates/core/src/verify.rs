//! Exhaustive self-checks over the whole model.
//!
//! Each suite compares two independent routes (closed form against brute
//! force, orbit membership against arithmetic, and so on) and counts every
//! comparison. Failures are recorded, never raised.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::action::{
    act_on_daynumber, apply, orbit, orbit_restrict, shift_amount, Coordinate, Translation,
};
use crate::calendar::{
    add_names, display_name, ell, iota, iota_substitution, parse_name, DayName, DayNumber,
    SignTable,
};
use crate::layout::{build_layout, first_column_signs, locate_day};
use crate::modular::{crt_solve, mod_inverse, reduce, CrtSystem};
use crate::perm::{
    cayley_image, generate_cyclic, is_isomorphic_to_zn, trecena_permutation, Parity, Permutation,
};
use crate::structure::{
    orientation_of_day, orientation_of_day_by_orbit, orientation_of_trecena,
    orientation_of_trecena_by_signs, oriented_trecena_signs, trecena_of, trecena_start_name,
    veintena_start_numeral, Orientation, TrecenaIndex, VeintenaIndex,
};

/// Trecena start signs in trecena order.
pub const TRECENA_START_SIGNS: [u8; 20] = [
    1, 14, 7, 0, 13, 6, 19, 12, 5, 18, 11, 4, 17, 10, 3, 16, 9, 2, 15, 8,
];

/// Oriented trecena start signs, East, North, West, South.
pub const ORIENTED_SIGN_SETS: [[u8; 5]; 4] = [
    [1, 5, 9, 13, 17],
    [14, 18, 2, 6, 10],
    [7, 11, 15, 19, 3],
    [0, 4, 8, 12, 16],
];

/// Nontrivial cycles of σ in canonical form.
pub const SIGMA_CYCLES: [[usize; 4]; 4] = [
    [0, 8, 12, 4],
    [2, 14, 10, 18],
    [3, 7, 19, 15],
    [5, 13, 17, 9],
];

pub const SIGMA_FIXED_POINTS: [usize; 4] = [1, 6, 11, 16];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checks: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} checks, {} failures [{}]",
            self.name,
            self.checks,
            self.failures,
            if self.passed() { "ok" } else { "FAIL" }
        )?;
        if let Some(msg) = &self.first_failure {
            write!(f, "\n  first failure: {msg}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suites: Vec<SuiteReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(SuiteReport::passed)
    }

    pub fn total_checks(&self) -> usize {
        self.suites.iter().map(|s| s.checks).sum()
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.suites {
            writeln!(f, "{s}")?;
        }
        let failed = self.suites.iter().filter(|s| !s.passed()).count();
        if failed == 0 {
            write!(
                f,
                "all {} suites passed ({} checks)",
                self.suites.len(),
                self.total_checks()
            )
        } else {
            write!(f, "{failed} of {} suites FAILED", self.suites.len())
        }
    }
}

struct Tally {
    name: &'static str,
    checks: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            checks: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, ctx: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, expected {want:?}", ctx()));
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            checks: self.checks,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

/// Runs every suite against the standard sign table.
pub fn run_all() -> VerifyReport {
    run_with(SignTable::standard())
}

/// Runs every suite; `table` is used for the text round-trip checks.
pub fn run_with(table: &SignTable) -> VerifyReport {
    VerifyReport {
        suites: vec![
            crt_suite(),
            mod_inverse_suite(),
            bijection_suite(table),
            homomorphism_suite(),
            generator_suite(),
            shift_theorem_suite(),
            action_axioms_suite(),
            orbit_suite(),
            trecena_suite(),
            veintena_suite(),
            orientation_suite(),
            sigma_suite(),
            permutation_order_suite(),
            cayley_suite(),
            layout_suite(),
        ],
    }
}

fn day(x: i64) -> DayNumber {
    DayNumber::new(x)
}

pub fn crt_suite() -> SuiteReport {
    let mut t = Tally::new("crt");
    let sys = CrtSystem::new(13, 20).expect("13 and 20 are coprime");
    t.eq(sys.inv_m2_mod_m1(), 2, || "20^-1 mod 13".into());
    t.eq(sys.inv_m1_mod_m2(), 17, || "13^-1 mod 20".into());
    for r1 in 0..13 {
        for r2 in 0..20 {
            let brute = (0..260).find(|x| x % 13 == r1 && x % 20 == r2);
            let solved = crt_solve(&sys, reduce(r1, 13).unwrap(), reduce(r2, 20).unwrap())
                .map(|r| r.value())
                .ok();
            t.eq(solved, brute, || format!("crt_solve({r1}, {r2})"));
            t.eq(
                sys.solve_closed_form(r1, r2),
                sys.solve_substitution(r1, r2),
                || format!("closed form vs substitution at ({r1}, {r2})"),
            );
        }
    }
    t.finish()
}

pub fn mod_inverse_suite() -> SuiteReport {
    let mut t = Tally::new("mod-inverse");
    for m in [13i64, 20] {
        for a in 0..m {
            let trial = (0..m).find(|y| (a * y) % m == 1);
            t.eq(mod_inverse(a, m).ok(), trial, || {
                format!("inverse of {a} mod {m}")
            });
        }
    }
    t.finish()
}

pub fn bijection_suite(table: &SignTable) -> SuiteReport {
    let mut t = Tally::new("bijection");
    for n in DayName::all() {
        t.eq(ell(iota(n)), n, || format!("ell(iota({n:?}))"));
        let text = display_name(n, table);
        t.eq(parse_name(&text, table).ok(), Some(n), || {
            format!("parse_name({text:?})")
        });
    }
    for x in 0..260 {
        t.eq(iota(ell(day(x))), day(x), || format!("iota(ell({x}))"));
    }
    t.finish()
}

pub fn homomorphism_suite() -> SuiteReport {
    let mut t = Tally::new("homomorphism");
    for a in 0..260 {
        for b in 0..260 {
            t.eq(ell(day(a + b)), add_names(ell(day(a)), ell(day(b))), || {
                format!("ell({a} + {b})")
            });
        }
    }
    t.finish()
}

pub fn generator_suite() -> SuiteReport {
    let mut t = Tally::new("generator");
    let mut seen = HashSet::new();
    let mut cur = DayName::IDENTITY;
    for step in 0..260 {
        t.check(seen.insert(cur), || {
            format!("(1,1) revisits {cur:?} at step {step}")
        });
        cur = cur + DayName::GENERATOR;
    }
    t.eq(cur, DayName::IDENTITY, || "(1,1) has order 260".into());
    for n in DayName::all() {
        t.eq(iota(n), iota_substitution(n), || {
            format!("iota routes at {n:?}")
        });
    }
    t.finish()
}

/// 260 translations × 260 days.
pub fn shift_theorem_suite() -> SuiteReport {
    let mut t = Tally::new("shift-theorem");
    for tr in Translation::all() {
        let s = shift_amount(tr).residue() as i64;
        for x in 0..260 {
            t.eq(act_on_daynumber(tr, day(x)), day(x + s), || {
                format!("T{tr}({x})")
            });
        }
    }
    t.finish()
}

pub fn action_axioms_suite() -> SuiteReport {
    let mut t = Tally::new("action-axioms");
    for x in 0..260 {
        t.eq(
            act_on_daynumber(Translation::IDENTITY, day(x)),
            day(x),
            || format!("T(0,0)({x})"),
        );
    }
    let all: Vec<Translation> = Translation::all().collect();
    for (i, &t1) in all.iter().enumerate() {
        for (j, &t2) in all.iter().enumerate() {
            let x = day((i * 31 + j * 7) as i64);
            t.eq(
                act_on_daynumber(t1, act_on_daynumber(t2, x)),
                act_on_daynumber(t1 + t2, x),
                || format!("T{t1}∘T{t2} at {}", x.residue()),
            );
        }
    }
    for tr in &all {
        let images: HashSet<_> = (0..260).map(|x| act_on_daynumber(*tr, day(x))).collect();
        t.eq(images.len(), 260, || format!("T{tr} is a bijection"));
    }
    t.finish()
}

pub fn orbit_suite() -> SuiteReport {
    let mut t = Tally::new("orbits");
    for tr in Translation::all() {
        let mut covered = HashSet::new();
        let mut ok = true;
        for seed in DayName::all() {
            if covered.contains(&seed) {
                continue;
            }
            let o = orbit(tr, seed);
            ok &= o.len() == tr.order();
            ok &= apply(tr, *o.elements().last().unwrap()) == seed;
            for e in o.elements() {
                ok &= covered.insert(*e);
            }
        }
        ok &= covered.len() == 260;
        t.check(ok, || {
            format!(
                "orbits of {tr} do not partition into cycles of length {}",
                tr.order()
            )
        });
    }
    t.finish()
}

pub fn trecena_suite() -> SuiteReport {
    let mut t = Tally::new("trecenas");
    let signs = orbit_restrict(
        &orbit(Translation::TRECENA, DayName::GENERATOR),
        Coordinate::Sign,
    );
    t.eq(signs.as_slice(), &TRECENA_START_SIGNS[..], || {
        "orbit of (1,1) under (0,13)".into()
    });
    for i in TrecenaIndex::all() {
        t.eq(
            trecena_start_name(i),
            DayName::new(1, TRECENA_START_SIGNS[i.get() as usize - 1] as i64),
            || format!("start of trecena {}", i.get()),
        );
    }
    for x in DayNumber::all() {
        let (i, pos) = trecena_of(x);
        let start = iota(trecena_start_name(i)).display_value() as i64;
        t.eq(start, x.display_value() as i64 - (pos as i64 - 1), || {
            format!("trecena start for day {x}")
        });
    }
    t.finish()
}

pub fn veintena_suite() -> SuiteReport {
    let mut t = Tally::new("veintenas");
    let numerals = orbit_restrict(
        &orbit(Translation::VEINTENA, DayName::GENERATOR),
        Coordinate::Numeral,
    );
    for i in VeintenaIndex::all() {
        let start_day = 1 + 20 * (i.get() as i64 - 1);
        let oracle = (start_day % 13) as u8;
        t.eq(veintena_start_numeral(i), oracle, || {
            format!("veintena {} start", i.get())
        });
        t.eq(
            numerals.get(i.get() as usize - 1).copied(),
            Some(oracle),
            || format!("orbit numeral {}", i.get()),
        );
    }
    t.finish()
}

pub fn orientation_suite() -> SuiteReport {
    let mut t = Tally::new("orientations");
    let mut counts = [0usize; 4];
    for x in DayNumber::all() {
        let o = orientation_of_day(x);
        counts[o.index()] += 1;
        t.eq(o, orientation_of_day_by_orbit(x), || {
            format!("orientation of day {x}")
        });
    }
    t.eq(counts, [65; 4], || "orientation class sizes".into());

    let mut union = BTreeSet::new();
    let mut oriented_sets = Vec::new();
    for o in Orientation::ALL {
        let got = oriented_trecena_signs(o);
        let want: BTreeSet<u8> = ORIENTED_SIGN_SETS[o.index()].iter().copied().collect();
        t.eq(&got, &want, || format!("{o} sign set"));
        t.check(union.is_disjoint(&got), || {
            format!("{o} overlaps an earlier set")
        });
        union.extend(got.iter().copied());
        oriented_sets.push(got.iter().map(|&s| s as usize).collect::<BTreeSet<_>>());
    }
    t.eq(union.len(), 20, || "oriented sets cover all signs".into());

    // Each oriented set is one 4-cycle of sigma plus one fixed point.
    let d = trecena_permutation().cycle_decomposition();
    let mut pairing = BTreeSet::new();
    for (o, set) in Orientation::ALL.iter().zip(&oriented_sets) {
        let cycles: Vec<usize> = (0..d.cycles().len())
            .filter(|&i| d.cycles()[i].iter().all(|x| set.contains(x)))
            .collect();
        let fixed: Vec<usize> = d.fixed_points().intersection(set).copied().collect();
        let ok =
            cycles.len() == 1 && fixed.len() == 1 && d.cycles()[cycles[0]].len() + 1 == set.len();
        t.check(ok, || {
            format!("{o} set {set:?} is not one sigma cycle plus one fixed point")
        });
        if ok {
            pairing.insert((cycles[0], fixed[0]));
        }
    }
    t.eq(pairing.len(), 4, || {
        "each cycle and fixed point used once".into()
    });

    for i in TrecenaIndex::all() {
        t.eq(
            orientation_of_trecena(i),
            orientation_of_trecena_by_signs(i),
            || format!("orientation of trecena {}", i.get()),
        );
    }

    let tetrad = orbit(Translation::TETRAD, DayName::GENERATOR);
    t.eq(tetrad.len(), 65, || "tetrad orbit length".into());
    let signs = orbit_restrict(&tetrad, Coordinate::Sign);
    let period = (1..=signs.len())
        .find(|&p| (0..signs.len()).all(|n| signs[n] == signs[(n + p) % signs.len()]));
    t.eq(period, Some(5), || "period of tetrad signs".into());
    t.finish()
}

pub fn sigma_suite() -> SuiteReport {
    let mut t = Tally::new("sigma");
    let sigma = trecena_permutation();
    for (n, &s) in TRECENA_START_SIGNS.iter().enumerate() {
        let point = (n + 1) % 20;
        t.eq(sigma.apply(point), s as usize, || format!("sigma({point})"));
    }
    let d = sigma.cycle_decomposition();
    let want: Vec<Vec<usize>> = SIGMA_CYCLES.iter().map(|c| c.to_vec()).collect();
    t.eq(d.cycles(), want.as_slice(), || "cycle decomposition".into());
    t.eq(
        d.fixed_points().iter().copied().collect::<Vec<_>>(),
        SIGMA_FIXED_POINTS.to_vec(),
        || "fixed points".into(),
    );
    t.eq(sigma.order(), 4, || "order".into());
    t.eq(sigma.parity(), Parity::Even, || "parity".into());
    t.eq(d.transpositions(), 12, || "transposition count".into());
    t.eq(sigma.power(3), sigma.inverse(), || {
        "sigma^3 = sigma^-1".into()
    });
    t.eq(sigma.power(2).inverse(), sigma.power(2), || {
        "sigma^2 is an involution".into()
    });
    t.check(sigma.power(4).is_identity(), || "sigma^4 = id".into());
    let sq = Permutation::from_cycles(
        20,
        &[
            vec![2, 10],
            vec![14, 18],
            vec![3, 19],
            vec![7, 15],
            vec![4, 8],
            vec![0, 12],
            vec![5, 17],
            vec![13, 9],
        ],
    )
    .expect("valid cycles");
    t.eq(sigma.power(2), sq, || "sigma^2".into());
    let cube = Permutation::from_cycles(
        20,
        &[
            vec![2, 18, 10, 14],
            vec![3, 15, 19, 7],
            vec![4, 12, 8, 0],
            vec![5, 9, 17, 13],
        ],
    )
    .expect("valid cycles");
    t.eq(sigma.power(3), cube, || "sigma^3".into());

    let group = generate_cyclic(&sigma);
    t.eq(group.order(), 4, || "|<sigma>|".into());
    match is_isomorphic_to_zn(&group, 4) {
        Some(w) => {
            for a in 0..4i64 {
                for b in 0..4i64 {
                    let prod = w.image(a).compose(w.image(b)).ok();
                    t.eq(prod.as_ref(), Some(w.image(a + b)), || {
                        format!("phi({a}+{b})")
                    });
                    t.eq(
                        (w.rotation_degrees(a) + w.rotation_degrees(b)) % 360,
                        w.rotation_degrees(a + b),
                        || format!("rotation {a}+{b}"),
                    );
                }
            }
        }
        None => t.check(false, || "<sigma> not isomorphic to Z4".into()),
    }
    t.check(is_isomorphic_to_zn(&group, 5).is_none(), || {
        "<sigma> claimed isomorphic to Z5".into()
    });
    t.finish()
}

fn brute_order(p: &Permutation) -> usize {
    let mut cur = p.clone();
    let mut k = 1;
    while !cur.is_identity() {
        cur = cur.compose(p).expect("same degree");
        k += 1;
    }
    k
}

pub fn permutation_order_suite() -> SuiteReport {
    let mut t = Tally::new("permutation-order");
    let sigma = trecena_permutation();
    for k in 0..4 {
        let p = sigma.power(k);
        t.eq(p.order(), brute_order(&p), || format!("order of sigma^{k}"));
    }
    for tr in Translation::all() {
        let p = cayley_image(tr);
        let o = p.order();
        t.eq(o, brute_order(&p), || format!("order of cayley{tr}"));
        t.eq(o, tr.order(), || format!("order of {tr} in the group"));
    }
    t.finish()
}

pub fn cayley_suite() -> SuiteReport {
    let mut t = Tally::new("cayley");
    let images: Vec<(Translation, Permutation)> = Translation::all()
        .map(|tr| (tr, cayley_image(tr)))
        .collect();
    let distinct: BTreeSet<&Permutation> = images.iter().map(|(_, p)| p).collect();
    t.eq(distinct.len(), 260, || "cayley images are distinct".into());
    let index = |tr: Translation| tr.a() as usize * 20 + tr.b() as usize;
    for (t1, p1) in &images {
        for (t2, p2) in &images {
            let (_, sum) = &images[index(*t1 + *t2)];
            t.eq(p1.compose(p2).ok().as_ref(), Some(sum), || {
                format!("cayley{t1} ∘ cayley{t2}")
            });
        }
    }
    t.finish()
}

pub fn layout_suite() -> SuiteReport {
    let mut t = Tally::new("layout");
    let layout = build_layout();
    let mut seen = HashSet::new();
    for pair in &layout {
        for c in pair.cells() {
            t.check(seen.insert(c.day), || {
                format!("day {} appears twice", c.day)
            });
            t.eq(locate_day(c.day), *c, || format!("locate_day({})", c.day));
            let (trecena, pos) = trecena_of(c.day);
            t.eq(c.column == 1, pos == 1, || {
                format!("column 1 vs trecena start at day {}", c.day)
            });
            t.eq(orientation_of_trecena(trecena), pair.orientation(), || {
                format!(
                    "trecena orientation of day {} in pair {}",
                    c.day,
                    pair.pair_index()
                )
            });
        }
        let want: BTreeSet<u8> = oriented_trecena_signs(pair.orientation());
        t.eq(
            first_column_signs(pair.pair_index()).ok(),
            Some(want),
            || format!("first column of pair {}", pair.pair_index()),
        );
    }
    t.eq(seen.len(), 260, || "layout covers 260 days".into());
    t.finish()
}
