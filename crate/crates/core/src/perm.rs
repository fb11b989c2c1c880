//! Finite permutations of `{0, …, n−1}`.
//!
//! Enough symmetric-group machinery to take apart the trecena permutation σ
//! in `S20` and the Cayley embedding of `Z13 ⊕ Z20` into `S260`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::action::{act_on_daynumber, orbit, orbit_restrict, Coordinate, Translation};
use crate::calendar::{DayName, DayNumber, DAYS, SIGNS};
use crate::error::{Error, PermutationDefect, Result};
use crate::modular::lcm;

/// A bijection on `{0, …, n−1}` stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// `images[i]` is the image of `i`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(Error::InvalidPermutation(PermutationDefect::OutOfDomain {
                    label: y,
                    degree: n,
                }));
            }
            if std::mem::replace(&mut hit[y], true) {
                return Err(Error::InvalidPermutation(
                    PermutationDefect::DuplicateImage(y),
                ));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from `(point, image)` pairs covering every point once.
    pub fn from_orbit_map(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images = vec![None; n];
        for &(x, y) in pairs {
            for label in [x, y] {
                if label >= n {
                    return Err(Error::InvalidPermutation(PermutationDefect::OutOfDomain {
                        label,
                        degree: n,
                    }));
                }
            }
            if images[x].replace(y).is_some() {
                return Err(Error::InvalidPermutation(
                    PermutationDefect::DuplicatePoint(x),
                ));
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(x, y)| {
                y.ok_or(Error::InvalidPermutation(PermutationDefect::MissingPoint(
                    x,
                )))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }

    /// Builds a permutation from disjoint cycles; unmentioned points are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut pairs = Vec::with_capacity(n);
        let mut seen = BTreeSet::new();
        for c in cycles {
            for (i, &x) in c.iter().enumerate() {
                pairs.push((x, c[(i + 1) % c.len()]));
                seen.insert(x);
            }
        }
        pairs.extend((0..n).filter(|x| !seen.contains(x)).map(|x| (x, x)));
        Self::from_orbit_map(n, &pairs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `i`. Panics if `i` is outside the domain.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i == y)
    }

    /// `(self ∘ q)(i) = self(q(i))`.
    pub fn compose(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: q.degree(),
            });
        }
        Ok(Permutation {
            images: q.images.iter().map(|&y| self.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `self^k`; negative exponents use the inverse.
    pub fn power(&self, k: i64) -> Permutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        // square-and-multiply; powers of one permutation commute
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base).expect("same degree");
            }
            base = base.compose(&base).expect("same degree");
            e >>= 1;
        }
        acc
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.degree();
        let mut visited = vec![false; n];
        let mut cycles = Vec::new();
        let mut fixed_points = BTreeSet::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut cycle = vec![start];
            visited[start] = true;
            let mut x = self.images[start];
            while x != start {
                visited[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            // scanning in increasing order makes `start` the minimum of its cycle
            if cycle.len() == 1 {
                fixed_points.insert(start);
            } else {
                cycles.push(cycle);
            }
        }
        CycleDecomposition {
            degree: n,
            cycles,
            fixed_points,
        }
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycle_decomposition()
            .cycles
            .iter()
            .fold(1i64, |acc, c| lcm(acc, c.len() as i64)) as usize
    }

    /// Parity of `Σ (len − 1)` over the cycles.
    pub fn parity(&self) -> Parity {
        if self
            .cycle_decomposition()
            .transpositions()
            .is_multiple_of(2)
        {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        self.cycle_decomposition().fixed_points
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.cycle_decomposition().fmt(f)
    }
}

/// Disjoint cycles in canonical form: each rotated to start at its minimum,
/// sorted by first element. Cycles have length at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleDecomposition {
    degree: usize,
    cycles: Vec<Vec<usize>>,
    fixed_points: BTreeSet<usize>,
}

impl CycleDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn fixed_points(&self) -> &BTreeSet<usize> {
        &self.fixed_points
    }

    /// Lengths of the nontrivial cycles, in canonical order.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    pub fn transpositions(&self) -> usize {
        self.cycles.iter().map(|c| c.len() - 1).sum()
    }

    /// Rebuilds the permutation.
    pub fn to_permutation(&self) -> Permutation {
        Permutation::from_cycles(self.degree, &self.cycles).expect("canonical cycles are disjoint")
    }
}

impl fmt::Display for CycleDecomposition {
    /// `(a,b,c)(d,e)` with fixed points omitted; `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("id");
        }
        for c in &self.cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl std::ops::Mul for Parity {
    type Output = Parity;

    fn mul(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// `⟨g⟩ = {g⁰, g¹, …}` listed by exponent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclicSubgroup {
    generator: Permutation,
    elements: Vec<Permutation>,
}

impl CyclicSubgroup {
    pub fn generator(&self) -> &Permutation {
        &self.generator
    }

    /// `elements()[k] = g^k`.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Exponent `k` with `g^k = p`, if `p` is in the subgroup.
    pub fn log(&self, p: &Permutation) -> Option<usize> {
        self.elements.iter().position(|e| e == p)
    }
}

pub fn generate_cyclic(g: &Permutation) -> CyclicSubgroup {
    let id = Permutation::identity(g.degree());
    let mut elements = vec![id.clone()];
    let mut cur = g.clone();
    while cur != id {
        elements.push(cur.clone());
        cur = cur.compose(g).expect("same degree");
    }
    CyclicSubgroup {
        generator: g.clone(),
        elements,
    }
}

/// The map `k̄ ↦ g^k` from `Z/nZ` onto a cyclic subgroup, checked to be an
/// isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZnWitness {
    n: usize,
    images: Vec<Permutation>,
}

impl ZnWitness {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Image of the class of `k`.
    pub fn image(&self, k: i64) -> &Permutation {
        &self.images[k.rem_euclid(self.n as i64) as usize]
    }

    /// Rotation angle in degrees paired with `k̄` when `Z/nZ` is read as the
    /// rotation group of a regular n-gon (for n = 4, the square).
    pub fn rotation_degrees(&self, k: i64) -> u32 {
        (k.rem_euclid(self.n as i64) as u32) * 360 / self.n as u32
    }
}

/// Returns the witness `k̄ ↦ g^k` when `s` has order `n` and the witness is a
/// bijective homomorphism on all `n²` pairs; otherwise `None`.
pub fn is_isomorphic_to_zn(s: &CyclicSubgroup, n: usize) -> Option<ZnWitness> {
    if s.order() != n || n == 0 {
        return None;
    }
    let images: Vec<Permutation> = (0..n).map(|k| s.generator.power(k as i64)).collect();
    let distinct: BTreeSet<_> = images.iter().collect();
    if distinct.len() != n {
        return None;
    }
    for a in 0..n {
        for b in 0..n {
            if images[(a + b) % n] != images[a].compose(&images[b]).ok()? {
                return None;
            }
        }
    }
    Some(ZnWitness { n, images })
}

/// The permutation `x ↦ T_t(x)` of `{0, …, 259}`.
pub fn cayley_image(t: Translation) -> Permutation {
    Permutation {
        images: (0..DAYS as i64)
            .map(|x| act_on_daynumber(t, DayNumber::new(x)).residue() as usize)
            .collect(),
    }
}

/// σ ∈ S20: trecena `i` (label taken mod 20, so trecena 20 is point 0) goes to
/// the sign of its first day.
pub fn trecena_permutation() -> Permutation {
    let signs = orbit_restrict(
        &orbit(Translation::TRECENA, DayName::GENERATOR),
        Coordinate::Sign,
    );
    let pairs: Vec<(usize, usize)> = signs
        .iter()
        .enumerate()
        .map(|(n, &s)| ((n + 1) % SIGNS as usize, s as usize))
        .collect();
    Permutation::from_orbit_map(SIGNS as usize, &pairs).expect("trecena starts form a bijection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sigma() -> Permutation {
        trecena_permutation()
    }

    fn cycles(n: usize, cs: &[&[usize]]) -> Permutation {
        let v: Vec<Vec<usize>> = cs.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &v).unwrap()
    }

    fn brute_order(p: &Permutation) -> usize {
        let mut cur = p.clone();
        let mut k = 1;
        while !cur.is_identity() {
            cur = cur.compose(p).unwrap();
            k += 1;
        }
        k
    }

    fn arb_perm(max: usize) -> impl Strategy<Value = Permutation> {
        (1..=max)
            .prop_flat_map(|n| Just((0..n).collect::<Vec<_>>()).prop_shuffle())
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    fn perm_triple(max: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
        (1..=max).prop_flat_map(|n| {
            let one = Just((0..n).collect::<Vec<_>>())
                .prop_shuffle()
                .prop_map(|v| Permutation::from_images(v).unwrap());
            (one.clone(), one.clone(), one)
        })
    }

    #[test]
    fn sigma_two_line_form() {
        let s = sigma();
        let top = [
            1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 0,
        ];
        let bottom = [
            1, 14, 7, 0, 13, 6, 19, 12, 5, 18, 11, 4, 17, 10, 3, 16, 9, 2, 15, 8,
        ];
        for (x, y) in top.iter().zip(bottom) {
            assert_eq!(s.apply(*x), y);
        }
    }

    #[test]
    fn sigma_cycles() {
        let d = sigma().cycle_decomposition();
        assert_eq!(
            d.cycles(),
            &[
                vec![0, 8, 12, 4],
                vec![2, 14, 10, 18],
                vec![3, 7, 19, 15],
                vec![5, 13, 17, 9]
            ]
        );
        assert_eq!(d.fixed_points(), &BTreeSet::from([1, 6, 11, 16]));
        assert_eq!(d.transpositions(), 12);
        assert_eq!(
            d.to_string(),
            "(0,8,12,4)(2,14,10,18)(3,7,19,15)(5,13,17,9)"
        );
        // Same permutation as written with (4,0,8,12) rotated.
        let printed = cycles(
            20,
            &[
                &[2, 14, 10, 18],
                &[3, 7, 19, 15],
                &[4, 0, 8, 12],
                &[5, 13, 17, 9],
            ],
        );
        assert_eq!(printed, sigma());
    }

    #[test]
    fn sigma_powers() {
        let s = sigma();
        let sq = cycles(
            20,
            &[
                &[2, 10],
                &[14, 18],
                &[3, 19],
                &[7, 15],
                &[4, 8],
                &[0, 12],
                &[5, 17],
                &[13, 9],
            ],
        );
        let cube = cycles(
            20,
            &[
                &[2, 18, 10, 14],
                &[3, 15, 19, 7],
                &[4, 12, 8, 0],
                &[5, 9, 17, 13],
            ],
        );
        assert_eq!(s.compose(&s).unwrap(), sq);
        assert_eq!(s.power(2), sq);
        assert_eq!(s.power(3), cube);
        assert_eq!(s.inverse(), cube);
        assert_eq!(s.power(-1), cube);
        assert!(s.compose(&cube).unwrap().is_identity());
        assert!(s.power(0).is_identity());
        assert!(s.power(4).is_identity());
        assert_eq!(sq.inverse(), sq);
        assert_eq!(sq.cycle_decomposition().cycle_type(), vec![2; 8]);
    }

    #[test]
    fn order_and_parity() {
        let s = sigma();
        assert_eq!(s.order(), 4);
        assert_eq!(brute_order(&s), 4);
        assert_eq!(s.parity(), Parity::Even);
        assert_eq!(s.power(2).parity(), Parity::Even);
        assert_eq!(Permutation::identity(20).order(), 1);
        assert_eq!(cycles(5, &[&[1, 3]]).parity(), Parity::Odd);
    }

    #[test]
    fn identity_decomposition() {
        let d = Permutation::identity(20).cycle_decomposition();
        assert!(d.cycles().is_empty());
        assert_eq!(d.fixed_points().len(), 20);
        assert_eq!(d.to_string(), "id");
    }

    #[test]
    fn from_orbit_map_validation() {
        assert!(Permutation::from_orbit_map(3, &[(0, 0), (1, 1), (2, 2)])
            .unwrap()
            .is_identity());
        let mut pairs: Vec<_> = (0..20).map(|i| (i, i)).collect();
        pairs[3].1 = 7;
        assert_eq!(
            Permutation::from_orbit_map(20, &pairs),
            Err(Error::InvalidPermutation(
                PermutationDefect::DuplicateImage(7)
            ))
        );
        assert_eq!(
            Permutation::from_orbit_map(3, &[(0, 1), (0, 2), (2, 0)]),
            Err(Error::InvalidPermutation(
                PermutationDefect::DuplicatePoint(0)
            ))
        );
        assert_eq!(
            Permutation::from_orbit_map(3, &[(0, 1), (1, 0)]),
            Err(Error::InvalidPermutation(PermutationDefect::MissingPoint(
                2
            )))
        );
        assert!(matches!(
            Permutation::from_orbit_map(3, &[(0, 5)]),
            Err(Error::InvalidPermutation(PermutationDefect::OutOfDomain {
                label: 5,
                ..
            }))
        ));
    }

    #[test]
    fn compose_degree_mismatch() {
        assert_eq!(
            Permutation::identity(3).compose(&Permutation::identity(4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn cyclic_subgroups() {
        let g = generate_cyclic(&sigma());
        assert_eq!(g.order(), 4);
        assert_eq!(g.elements()[3], sigma().inverse());
        assert_eq!(generate_cyclic(&Permutation::identity(20)).order(), 1);
        assert_eq!(generate_cyclic(&sigma().power(2)).order(), 2);
    }

    #[test]
    fn z4_witness() {
        let g = generate_cyclic(&sigma());
        let w = is_isomorphic_to_zn(&g, 4).expect("isomorphic to Z4");
        assert!(is_isomorphic_to_zn(&g, 5).is_none());
        assert!(is_isomorphic_to_zn(&generate_cyclic(&Permutation::identity(20)), 1).is_some());
        // multiplication table of <σ> is the addition table of Z4, and of the
        // rotations of the square
        for a in 0..4 {
            for b in 0..4 {
                let prod = w.image(a).compose(w.image(b)).unwrap();
                assert_eq!(g.log(&prod), Some(((a + b) % 4) as usize));
                assert_eq!(
                    (w.rotation_degrees(a) + w.rotation_degrees(b)) % 360,
                    w.rotation_degrees(a + b)
                );
            }
        }
        assert_eq!(w.rotation_degrees(1), 90);
    }

    #[test]
    fn cayley_examples() {
        assert!(cayley_image(Translation::IDENTITY).is_identity());
        let gen = cayley_image(Translation::new(1, 1));
        assert_eq!(gen.order(), 260);
        assert_eq!(brute_order(&gen), 260);
        assert_eq!(gen.cycle_decomposition().cycle_type(), vec![260]);
        let tre = cayley_image(Translation::TRECENA);
        assert_eq!(tre.order(), 20);
        assert_eq!(brute_order(&tre), 20);
    }

    #[test]
    fn cayley_is_an_injective_homomorphism() {
        let images: Vec<_> = Translation::all().map(|t| (t, cayley_image(t))).collect();
        let distinct: BTreeSet<_> = images.iter().map(|(_, p)| p).collect();
        assert_eq!(distinct.len(), 260);
        for (t1, p1) in images.iter().step_by(7) {
            for (t2, p2) in &images {
                assert_eq!(cayley_image(*t1 + *t2), p1.compose(p2).unwrap());
            }
        }
    }

    proptest! {
        #[test]
        fn decomposition_round_trips(p in arb_perm(20)) {
            prop_assert_eq!(p.cycle_decomposition().to_permutation(), p);
        }

        #[test]
        fn order_is_minimal_power(p in arb_perm(20)) {
            prop_assert_eq!(p.order(), brute_order(&p));
            prop_assert!(p.power(p.order() as i64).is_identity());
        }

        #[test]
        fn compose_laws((p, q, r) in perm_triple(12)) {
            let id = Permutation::identity(p.degree());
            prop_assert_eq!(
                p.compose(&q).unwrap().compose(&r).unwrap(),
                p.compose(&q.compose(&r).unwrap()).unwrap()
            );
            prop_assert_eq!(p.compose(&id).unwrap(), p.clone());
            prop_assert_eq!(id.compose(&p).unwrap(), p.clone());
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert_eq!(p.compose(&q).unwrap().parity(), p.parity() * q.parity());
        }
    }
}
