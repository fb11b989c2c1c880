//! Exact residue arithmetic: canonical reduction, modular inverses and the
//! two-modulus Chinese Remainder solver.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A residue class modulo `modulus`, stored in canonical form `0 <= value < modulus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Residue {
    value: i64,
    modulus: i64,
}

impl Residue {
    /// Reduces `n` modulo `m`. Equivalent to [`reduce`].
    pub fn new(n: i64, m: i64) -> Result<Self> {
        reduce(n, m)
    }

    pub fn value(self) -> i64 {
        self.value
    }

    pub fn modulus(self) -> i64 {
        self.modulus
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

/// Returns the unique `r` in `[0, m)` congruent to `n` modulo `m`.
pub fn reduce(n: i64, m: i64) -> Result<Residue> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    Ok(Residue {
        value: n.rem_euclid(m),
        modulus: m,
    })
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`, `g >= 0`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    let (mut old_t, mut t) = (0i64, 1i64);
    while r != 0 {
        let q = old_r.div_euclid(r);
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
        (old_t, t) = (t, old_t - q * t);
    }
    if old_r < 0 {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

pub fn gcd(a: i64, b: i64) -> i64 {
    extended_gcd(a, b).0
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / gcd(a, b) * b).abs()
    }
}

/// Returns `y` in `[0, m)` with `a*y ≡ 1 (mod m)`, computed by extended Euclid.
pub fn mod_inverse(a: i64, m: i64) -> Result<i64> {
    if m < 1 {
        return Err(Error::InvalidModulus(m));
    }
    let (g, x, _) = extended_gcd(a.rem_euclid(m), m);
    if g != 1 {
        return Err(Error::NoInverse { a, m, gcd: g });
    }
    Ok(x.rem_euclid(m))
}

/// A pair of coprime moduli together with their cross inverses.
///
/// `inv_m2_mod_m1` is the inverse of `m2` modulo `m1` and `inv_m1_mod_m2` the
/// inverse of `m1` modulo `m2`. For the calendar system (13, 20) these are 2 and 17.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CrtSystem {
    m1: i64,
    m2: i64,
    inv_m1_mod_m2: i64,
    inv_m2_mod_m1: i64,
}

impl CrtSystem {
    pub fn new(m1: i64, m2: i64) -> Result<Self> {
        if m1 < 1 {
            return Err(Error::InvalidModulus(m1));
        }
        if m2 < 1 {
            return Err(Error::InvalidModulus(m2));
        }
        if gcd(m1, m2) != 1 {
            return Err(Error::NotCoprime { m1, m2 });
        }
        Ok(Self {
            m1,
            m2,
            inv_m1_mod_m2: mod_inverse(m1, m2)?,
            inv_m2_mod_m1: mod_inverse(m2, m1)?,
        })
    }

    pub fn m1(&self) -> i64 {
        self.m1
    }

    pub fn m2(&self) -> i64 {
        self.m2
    }

    /// Product modulus `m1 * m2`.
    pub fn modulus(&self) -> i64 {
        self.m1 * self.m2
    }

    pub fn inv_m1_mod_m2(&self) -> i64 {
        self.inv_m1_mod_m2
    }

    pub fn inv_m2_mod_m1(&self) -> i64 {
        self.inv_m2_mod_m1
    }

    /// `x ≡ m2·y1·r1 + m1·y2·r2 (mod m1·m2)`.
    ///
    /// Inputs must already be reduced.
    pub fn solve_closed_form(&self, r1: i64, r2: i64) -> i64 {
        let n = self.modulus();
        let a = self.m2 * self.inv_m2_mod_m1 % n * r1 % n;
        let b = self.m1 * self.inv_m1_mod_m2 % n * r2 % n;
        (a + b).rem_euclid(n)
    }

    /// `x = m1·k + r1` with `k ≡ y2·(r2 − r1) (mod m2)`.
    ///
    /// Inputs must already be reduced.
    pub fn solve_substitution(&self, r1: i64, r2: i64) -> i64 {
        let k = (self.inv_m1_mod_m2 * (r2 - r1)).rem_euclid(self.m2);
        self.m1 * k + r1
    }
}

/// Solves `x ≡ r1 (mod m1)`, `x ≡ r2 (mod m2)` for the unique `x` modulo `m1·m2`.
pub fn crt_solve(sys: &CrtSystem, r1: Residue, r2: Residue) -> Result<Residue> {
    if r1.modulus != sys.m1 {
        return Err(Error::ModulusMismatch {
            expected: sys.m1,
            found: r1.modulus,
        });
    }
    if r2.modulus != sys.m2 {
        return Err(Error::ModulusMismatch {
            expected: sys.m2,
            found: r2.modulus,
        });
    }
    let x = sys.solve_closed_form(r1.value, r2.value);
    debug_assert_eq!(x, sys.solve_substitution(r1.value, r2.value));
    Ok(Residue {
        value: x,
        modulus: sys.modulus(),
    })
}
