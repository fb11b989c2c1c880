//! Rendering for the `tonal` command: conversions, tables and orbits as
//! text, JSON or CSV. Every renderer is a pure function of its arguments,
//! so output is byte-for-byte reproducible.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use tonal_core::{
    build_layout, generate_cyclic, is_isomorphic_to_zn, locate_day, orbit, orbit_restrict,
    orientation_of_day, orientation_of_trecena, shift_amount, trecena_of, trecena_permutation,
    trecena_start_name, veintena_of, veintena_start_name, Coordinate, DayName, DayNumber,
    LayoutCell, Orientation, Permutation, SignTable, Translation, TrecenaIndex, VeintenaIndex,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    Trecenas,
    Veintenas,
    Orientations,
    Sigma,
    Layout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Restrict {
    None,
    Numeral,
    Sign,
}

/// A day given either as a number `1..=260` or as a name.
pub fn parse_day_or_name(input: &str) -> tonal_core::Result<DayNumber> {
    let t = input.trim();
    if !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit()) {
        t.parse::<DayNumber>()
    } else {
        t.parse::<DayName>().map(DayName::day)
    }
}

fn sign_name(sign: u8) -> &'static str {
    SignTable::standard().name(sign)
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct Position {
    index: u8,
    position: u8,
}

#[derive(Serialize)]
struct Conversion {
    day: u16,
    name: String,
    numeral: u8,
    numeral_residue: u8,
    sign_index: u8,
    sign_name: &'static str,
    trecena: Position,
    veintena: Position,
    orientation: Orientation,
    pair: u8,
    row: u8,
    col: u8,
}

fn conversion(x: DayNumber) -> Conversion {
    let name = x.name();
    let (t, tp) = trecena_of(x);
    let (v, vp) = veintena_of(x);
    let cell = locate_day(x);
    Conversion {
        day: x.display_value(),
        name: name.to_string(),
        numeral: name.numeral_display(),
        numeral_residue: name.numeral(),
        sign_index: name.sign(),
        sign_name: sign_name(name.sign()),
        trecena: Position {
            index: t.get(),
            position: tp,
        },
        veintena: Position {
            index: v.get(),
            position: vp,
        },
        orientation: orientation_of_day(x),
        pair: cell.pair,
        row: cell.row,
        col: cell.column,
    }
}

pub fn render_convert(x: DayNumber, fmt: OutputFormat) -> String {
    let c = conversion(x);
    match fmt {
        OutputFormat::Text => format!(
            "day {}\nname {} ({},{})\ntrecena ({}, {})\nveintena ({}, {})\norientation {}\nlayout pair {}, row {}, col {}\n",
            c.day,
            c.name,
            c.numeral_residue,
            c.sign_index,
            c.trecena.index,
            c.trecena.position,
            c.veintena.index,
            c.veintena.position,
            c.orientation,
            c.pair,
            c.row,
            c.col
        ),
        OutputFormat::Json => json(&c),
        OutputFormat::Csv => format!(
            "day,name,numeral,sign_index,sign_name,trecena,trecena_position,veintena,veintena_position,orientation,pair,row,col\n{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
            c.day,
            c.name,
            c.numeral,
            c.sign_index,
            c.sign_name,
            c.trecena.index,
            c.trecena.position,
            c.veintena.index,
            c.veintena.position,
            c.orientation,
            c.pair,
            c.row,
            c.col
        ),
    }
}

pub fn render_table(which: TableName, fmt: OutputFormat, mirror: bool) -> String {
    match which {
        TableName::Trecenas => trecena_table(fmt),
        TableName::Veintenas => veintena_table(fmt),
        TableName::Orientations => orientation_table(fmt),
        TableName::Sigma => sigma_table(fmt),
        TableName::Layout => layout_table(fmt, mirror),
    }
}

#[derive(Serialize)]
struct TrecenaRow {
    trecena: u8,
    day: u16,
    name: String,
    numeral: u8,
    sign_index: u8,
    sign_name: &'static str,
    orientation: Orientation,
}

fn trecena_table(fmt: OutputFormat) -> String {
    let rows: Vec<TrecenaRow> = TrecenaIndex::all()
        .map(|i| {
            let n = trecena_start_name(i);
            TrecenaRow {
                trecena: i.get(),
                day: n.day().display_value(),
                name: n.to_string(),
                numeral: n.numeral_display(),
                sign_index: n.sign(),
                sign_name: sign_name(n.sign()),
                orientation: orientation_of_trecena(i),
            }
        })
        .collect();
    match fmt {
        OutputFormat::Json => json(&rows),
        OutputFormat::Csv => {
            let mut s = String::from("trecena,day,name,numeral,sign_index,sign_name,orientation\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    r.trecena, r.day, r.name, r.numeral, r.sign_index, r.sign_name, r.orientation
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!(
                "{:>7}  {:>3}  {:<12}  {:>4}  {}\n",
                "trecena", "day", "start", "sign", "orientation"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>7}  {:>3}  {:<12}  {:>4}  {}",
                    r.trecena, r.day, r.name, r.sign_index, r.orientation
                );
            }
            s
        }
    }
}

#[derive(Serialize)]
struct VeintenaRow {
    veintena: u8,
    day: u16,
    name: String,
    numeral: u8,
    numeral_residue: u8,
    sign_index: u8,
    sign_name: &'static str,
}

fn veintena_table(fmt: OutputFormat) -> String {
    let rows: Vec<VeintenaRow> = VeintenaIndex::all()
        .map(|i| {
            let n = veintena_start_name(i);
            VeintenaRow {
                veintena: i.get(),
                day: n.day().display_value(),
                name: n.to_string(),
                numeral: n.numeral_display(),
                numeral_residue: n.numeral(),
                sign_index: n.sign(),
                sign_name: sign_name(n.sign()),
            }
        })
        .collect();
    match fmt {
        OutputFormat::Json => json(&rows),
        OutputFormat::Csv => {
            let mut s =
                String::from("veintena,day,name,numeral,numeral_residue,sign_index,sign_name\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{},{}",
                    r.veintena,
                    r.day,
                    r.name,
                    r.numeral,
                    r.numeral_residue,
                    r.sign_index,
                    r.sign_name
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!(
                "{:>8}  {:>3}  {:<12}  {:>7}\n",
                "veintena", "day", "start", "residue"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>8}  {:>3}  {:<12}  {:>7}",
                    r.veintena, r.day, r.name, r.numeral_residue
                );
            }
            s
        }
    }
}

#[derive(Serialize)]
struct OrientationRow {
    orientation: Orientation,
    day_seed: String,
    days: usize,
    trecenas: Vec<u8>,
    trecena_seed: String,
    trecena_signs: Vec<u8>,
    sigma_cycle: Vec<usize>,
    sigma_fixed_point: Option<usize>,
}

fn orientation_rows() -> Vec<OrientationRow> {
    let sigma = trecena_permutation().cycle_decomposition();
    Orientation::ALL
        .into_iter()
        .map(|o| {
            let signs = orbit_restrict(
                &orbit(Translation::ORIENTED_TRECENA, o.trecena_seed()),
                Coordinate::Sign,
            );
            let holds = |x: &usize| signs.contains(&(*x as u8));
            OrientationRow {
                orientation: o,
                day_seed: o.day_seed().to_string(),
                days: DayNumber::all()
                    .filter(|&x| orientation_of_day(x) == o)
                    .count(),
                trecenas: TrecenaIndex::all()
                    .filter(|&i| orientation_of_trecena(i) == o)
                    .map(TrecenaIndex::get)
                    .collect(),
                trecena_seed: o.trecena_seed().to_string(),
                sigma_cycle: sigma
                    .cycles()
                    .iter()
                    .find(|c| c.iter().all(holds))
                    .cloned()
                    .unwrap_or_default(),
                sigma_fixed_point: sigma.fixed_points().iter().copied().find(holds),
                trecena_signs: signs,
            }
        })
        .collect()
}

fn orientation_table(fmt: OutputFormat) -> String {
    let rows = orientation_rows();
    let cycle = |c: &[usize]| format!("({})", join(c));
    let fixed = |f: Option<usize>| f.map(|x| x.to_string()).unwrap_or_default();
    match fmt {
        OutputFormat::Json => json(&rows),
        OutputFormat::Csv => {
            let mut s = String::from(
                "orientation,day_seed,days,trecenas,trecena_seed,trecena_signs,sigma_cycle,sigma_fixed_point\n",
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},\"{}\",{},\"{}\",\"{}\",{}",
                    r.orientation,
                    r.day_seed,
                    r.days,
                    join(&r.trecenas),
                    r.trecena_seed,
                    join(&r.trecena_signs),
                    cycle(&r.sigma_cycle),
                    fixed(r.sigma_fixed_point)
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!(
                "{:<11}  {:<11}  {:>4}  {:<14}  {:<14}  {}\n",
                "orientation", "day_seed", "days", "trecenas", "trecena_signs", "sigma"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<11}  {:<11}  {:>4}  {:<14}  {:<14}  {}({})",
                    r.orientation.as_str(),
                    r.day_seed,
                    r.days,
                    join(&r.trecenas),
                    join(&r.trecena_signs),
                    cycle(&r.sigma_cycle),
                    fixed(r.sigma_fixed_point)
                );
            }
            s
        }
    }
}

#[derive(Serialize)]
struct SigmaPower {
    exponent: u8,
    cycles: String,
}

#[derive(Serialize)]
struct SigmaReport {
    two_line: [Vec<usize>; 2],
    cycles: String,
    cycle_list: Vec<Vec<usize>>,
    fixed_points: Vec<usize>,
    order: usize,
    parity: tonal_core::Parity,
    transpositions: usize,
    powers: Vec<SigmaPower>,
    cube_is_inverse: bool,
    isomorphic_to_z4: bool,
}

/// Points in the order of the traditional two-line form: 1..19, then 0.
fn two_line_points() -> Vec<usize> {
    (1..20).chain([0]).collect()
}

fn sigma_report() -> SigmaReport {
    let sigma = trecena_permutation();
    let d = sigma.cycle_decomposition();
    let top = two_line_points();
    let bottom = top.iter().map(|&p| sigma.apply(p)).collect();
    let group = generate_cyclic(&sigma);
    SigmaReport {
        two_line: [top, bottom],
        cycles: d.to_string(),
        cycle_list: d.cycles().to_vec(),
        fixed_points: d.fixed_points().iter().copied().collect(),
        order: sigma.order(),
        parity: sigma.parity(),
        transpositions: d.transpositions(),
        powers: group
            .elements()
            .iter()
            .enumerate()
            .map(|(k, p): (usize, &Permutation)| SigmaPower {
                exponent: k as u8,
                cycles: p.to_string(),
            })
            .collect(),
        cube_is_inverse: sigma.power(3) == sigma.inverse(),
        isomorphic_to_z4: is_isomorphic_to_zn(&group, 4).is_some(),
    }
}

fn sigma_table(fmt: OutputFormat) -> String {
    let r = sigma_report();
    match fmt {
        OutputFormat::Json => json(&r),
        OutputFormat::Csv => {
            let mut s = String::from("point,image\n");
            for (p, i) in r.two_line[0].iter().zip(&r.two_line[1]) {
                let _ = writeln!(s, "{p},{i}");
            }
            s
        }
        OutputFormat::Text => {
            let row = |xs: &[usize]| xs.iter().map(|x| format!("{x:>3}")).collect::<String>();
            let mut s = String::from("two-line:\n");
            let _ = writeln!(s, "  {}", row(&r.two_line[0]));
            let _ = writeln!(s, "  {}", row(&r.two_line[1]));
            let _ = writeln!(s, "cycles: {}", r.cycles);
            let _ = writeln!(s, "fixed points: {}", join(&r.fixed_points));
            let _ = writeln!(s, "order: {}", r.order);
            let _ = writeln!(
                s,
                "parity: {} ({} transpositions)",
                r.parity, r.transpositions
            );
            let _ = writeln!(s, "powers:");
            for p in &r.powers {
                let _ = writeln!(s, "  sigma^{} = {}", p.exponent, p.cycles);
            }
            let _ = writeln!(s, "sigma^3 = sigma^-1: {}", r.cube_is_inverse);
            let _ = writeln!(s, "<sigma> isomorphic to Z4: {}", r.isomorphic_to_z4);
            s
        }
    }
}

#[derive(Serialize)]
struct CellOut {
    day: u16,
    numeral: u8,
    sign_index: u8,
    sign_name: &'static str,
}

impl From<&LayoutCell> for CellOut {
    fn from(c: &LayoutCell) -> Self {
        CellOut {
            day: c.day.display_value(),
            numeral: c.name.numeral_display(),
            sign_index: c.name.sign(),
            sign_name: sign_name(c.name.sign()),
        }
    }
}

fn layout_table(fmt: OutputFormat, mirror: bool) -> String {
    let layout = build_layout();
    let grids: Vec<Vec<Vec<LayoutCell>>> = layout
        .iter()
        .map(|p| {
            if mirror {
                p.facsimile_rows()
            } else {
                p.rows().to_vec()
            }
        })
        .collect();
    match fmt {
        OutputFormat::Json => {
            let out: Vec<Vec<Vec<CellOut>>> = grids
                .iter()
                .map(|g| {
                    g.iter()
                        .map(|r| r.iter().map(CellOut::from).collect())
                        .collect()
                })
                .collect();
            json(&out)
        }
        OutputFormat::Csv => {
            let mut s = String::from("pair,row,col,day,numeral,sign\n");
            for c in layout.iter().flat_map(|p| p.cells()) {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    c.pair,
                    c.row,
                    c.column,
                    c.day.display_value(),
                    c.name.numeral_display(),
                    c.name.sign()
                );
            }
            s
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for (p, g) in layout.iter().zip(&grids) {
                let _ = writeln!(s, "pair {} ({})", p.pair_index(), p.orientation());
                for r in g {
                    let line: Vec<String> = r
                        .iter()
                        .map(|c| format!("{:<15}", c.name.to_string()))
                        .collect();
                    let _ = writeln!(s, "  {}", line.join("").trim_end());
                }
            }
            s
        }
    }
}

#[derive(Serialize)]
struct OrbitOut {
    translation: [u8; 2],
    shift: u16,
    seed: String,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    restricted: Option<Vec<u8>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<OrbitElement>>,
}

#[derive(Serialize)]
struct OrbitElement {
    n: usize,
    numeral: u8,
    sign_index: u8,
    name: String,
    day: u16,
}

pub fn render_orbit(
    t: Translation,
    seed: DayName,
    restrict: Restrict,
    fmt: OutputFormat,
) -> String {
    let o = orbit(t, seed);
    let restricted = match restrict {
        Restrict::None => None,
        Restrict::Numeral => Some(orbit_restrict(&o, Coordinate::Numeral)),
        Restrict::Sign => Some(orbit_restrict(&o, Coordinate::Sign)),
    };
    let elements = restricted.is_none().then(|| {
        o.elements()
            .iter()
            .enumerate()
            .map(|(n, e)| OrbitElement {
                n,
                numeral: e.numeral(),
                sign_index: e.sign(),
                name: e.to_string(),
                day: e.day().display_value(),
            })
            .collect::<Vec<_>>()
    });
    let out = OrbitOut {
        translation: [t.a(), t.b()],
        shift: shift_amount(t).residue(),
        seed: seed.to_string(),
        length: o.len(),
        restricted,
        elements,
    };
    match fmt {
        OutputFormat::Json => json(&out),
        OutputFormat::Csv => match (&out.restricted, &out.elements) {
            (Some(r), _) => {
                let mut s = String::from("n,value\n");
                for (n, v) in r.iter().enumerate() {
                    let _ = writeln!(s, "{n},{v}");
                }
                s
            }
            (None, Some(es)) => {
                let mut s = String::from("n,numeral,sign_index,name,day\n");
                for e in es {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}",
                        e.n, e.numeral, e.sign_index, e.name, e.day
                    );
                }
                s
            }
            (None, None) => unreachable!("an orbit always has elements"),
        },
        OutputFormat::Text => {
            let mut s = format!(
                "translation {t}\nshift {}\nseed {}\nlength {}\n",
                out.shift, out.seed, out.length
            );
            match (&out.restricted, &out.elements) {
                (Some(r), _) => {
                    let _ = writeln!(s, "{}", join(r));
                }
                (None, Some(es)) => {
                    for e in es {
                        let _ = writeln!(
                            s,
                            "{:>3}  ({},{})  {:<14}  day {}",
                            e.n, e.numeral, e.sign_index, e.name, e.day
                        );
                    }
                }
                (None, None) => {}
            }
            s
        }
    }
}
