//! Exact arithmetic in the union of the cyclotomic fields: numbers are
//! stored as polynomials in a root of unity of minimal level, so equality
//! of representations is equality of numbers.

use crate::error::ArithError;
use crate::lattice;
use crate::nt::{factorize, gcd_u64, lcm_u64, phi, units_mod};
use crate::numeric::{cball::root_of_unity_ball, CBall};
use crate::poly::{cyclotomic_poly, RatPoly};
use crate::rat::{rat_from_str, rat_int, rat_to_string, Rat};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

/// An element of some cyclotomic field, written in the power basis
/// `1, z, ..., z^(phi(n)-1)` of a primitive `n`-th root of unity `z`.
///
/// The level `n` is always the smallest possible (and never 2 mod 4), and
/// the coefficient vector always has length `phi(n)`, so two values are
/// equal as numbers exactly when their representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycNum {
    level: u64,
    coeffs: Vec<Rat>,
}

fn pad(mut v: Vec<Rat>, len: usize) -> Vec<Rat> {
    v.resize(len, Rat::zero());
    v
}

fn reduce_mod_cyc(n: u64, f: &RatPoly) -> Vec<Rat> {
    let r = f.rem(&cyclotomic_poly(n)).expect("cyclotomic polynomial is nonzero");
    pad(r.coeffs().to_vec(), phi(n) as usize)
}

/// Coefficients of `z^(e mod n)` in the power basis at level `n`.
fn zeta_pow_vec(n: u64, e: u64) -> Vec<Rat> {
    reduce_mod_cyc(n, &RatPoly::monomial(Rat::one(), (e % n) as usize))
}

/// Applies `z -> z^k` coefficientwise at level `n` without canonicalizing.
fn galois_raw(n: u64, v: &[Rat], k: u64) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); n as usize];
    for (i, a) in v.iter().enumerate() {
        if !a.is_zero() {
            let pos = ((i as u128 * k as u128) % n as u128) as usize;
            acc[pos] += a;
        }
    }
    reduce_mod_cyc(n, &RatPoly::new(acc))
}

/// Rewrites level `2u` (odd `u`) coefficients at level `u`, using
/// `z_(2u) = -z_u^((u+1)/2)`.
fn halve_level(u: u64, v: &[Rat]) -> Vec<Rat> {
    let mut acc = vec![Rat::zero(); u as usize];
    for (i, a) in v.iter().enumerate() {
        if !a.is_zero() {
            let pos = ((i as u128 * ((u as u128 + 1) / 2)) % u as u128) as usize;
            if i % 2 == 0 {
                acc[pos] += a;
            } else {
                acc[pos] -= a;
            }
        }
    }
    reduce_mod_cyc(u, &RatPoly::new(acc))
}

/// Whether the Galois subgroup fixing the level-`d` subfield fixes `v`.
fn subgroup_fixes(n: u64, v: &[Rat], d: u64) -> bool {
    let mut k = 1 + d;
    while k < n {
        if gcd_u64(k, n) == 1 && galois_raw(n, v, k) != v {
            return false;
        }
        k += d;
    }
    true
}

/// Rewrites `v` (level `n`) in the power basis at level `d`, where `d | n`
/// and `v` is known to lie in the level-`d` subfield.
fn descend(n: u64, v: &[Rat], d: u64) -> Vec<Rat> {
    let cols = phi(d) as usize;
    let rows = phi(n) as usize;
    let step = n / d;
    let basis: Vec<Vec<Rat>> = (0..cols as u64).map(|j| zeta_pow_vec(n, j * step)).collect();
    let a: Vec<Vec<Rat>> = (0..rows)
        .map(|r| (0..cols).map(|j| basis[j][r].clone()).collect())
        .collect();
    lattice::solve(&a, v).expect("fixed element must lie in the subfield")
}

fn canonicalize(mut n: u64, f: &RatPoly) -> CycNum {
    let mut v = reduce_mod_cyc(n, f);
    loop {
        if n % 4 == 2 {
            let u = n / 2;
            v = halve_level(u, &v);
            n = u;
            continue;
        }
        if n == 1 {
            break;
        }
        let mut descended = false;
        for (p, _) in factorize(n) {
            let d = n / p;
            if subgroup_fixes(n, &v, d) {
                v = descend(n, &v, d);
                n = d;
                descended = true;
                break;
            }
        }
        if !descended {
            break;
        }
    }
    CycNum { level: n, coeffs: v }
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { level: 1, coeffs: vec![Rat::zero()] }
    }

    pub fn one() -> Self {
        CycNum { level: 1, coeffs: vec![Rat::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNum { level: 1, coeffs: vec![r] }
    }

    pub fn from_i64(n: i64) -> Self {
        CycNum::from_rat(rat_int(n))
    }

    /// The primitive root of unity `exp(2 pi i k / n)`.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self, ArithError> {
        if n == 0 {
            return Err(ArithError::InvalidLevel(0));
        }
        let j = k.rem_euclid(n as i64) as u64;
        let g = gcd_u64(j, n);
        let (m, e) = if g == 0 { (1, 0) } else { (n / g, j / g) };
        Ok(canonicalize(m, &RatPoly::monomial(Rat::one(), e as usize)))
    }

    /// Builds a value from an explicit level and power-basis coefficients,
    /// reducing to canonical form.
    pub fn from_level_coeffs(level: u64, coeffs: Vec<Rat>) -> Result<Self, ArithError> {
        if level == 0 {
            return Err(ArithError::InvalidLevel(0));
        }
        Ok(canonicalize(level, &RatPoly::new(coeffs)))
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.level == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.level == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.level == 1
    }

    pub fn to_rat(&self) -> Option<Rat> {
        if self.level == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Power-basis coefficients at the given multiple of the level.
    pub fn coords_at_level(&self, m: u64) -> Result<Vec<Rat>, ArithError> {
        if m == 0 || m % self.level != 0 || m % 4 == 2 {
            return Err(ArithError::IncompatibleLevel { level: self.level, target: m });
        }
        if m == self.level {
            return Ok(self.coeffs.clone());
        }
        Ok(self.up_vec(m))
    }

    fn up_vec(&self, target: u64) -> Vec<Rat> {
        debug_assert_eq!(target % self.level, 0);
        let step = (target / self.level) as usize;
        let mut acc = vec![Rat::zero(); target as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                acc[i * step] += a;
            }
        }
        reduce_mod_cyc(target, &RatPoly::new(acc))
    }

    pub fn neg(&self) -> Self {
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let n = lcm_u64(self.level, other.level);
        let a = if n == self.level { self.coeffs.clone() } else { self.up_vec(n) };
        let b = if n == other.level { other.coeffs.clone() } else { other.up_vec(n) };
        let sum: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        canonicalize(n, &RatPoly::new(sum))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return CycNum::zero();
        }
        if self.is_rational() {
            return other.scale(&self.coeffs[0]);
        }
        if other.is_rational() {
            return self.scale(&other.coeffs[0]);
        }
        let n = lcm_u64(self.level, other.level);
        let a = if n == self.level { self.coeffs.clone() } else { self.up_vec(n) };
        let b = if n == other.level { other.coeffs.clone() } else { other.up_vec(n) };
        let prod = RatPoly::new(a).mul(&RatPoly::new(b));
        canonicalize(n, &prod)
    }

    /// Multiplication by a rational scalar (level cannot change unless the
    /// scalar is zero).
    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return CycNum::zero();
        }
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroInverse);
        }
        let f = RatPoly::new(self.coeffs.clone());
        let (g, u, _) = f.xgcd(&cyclotomic_poly(self.level));
        debug_assert_eq!(g, RatPoly::one());
        // The inverse lives in the same minimal field, so no descent is needed.
        Ok(CycNum {
            level: self.level,
            coeffs: reduce_mod_cyc(self.level, &u),
        })
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        if e == 0 {
            return Ok(CycNum::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = CycNum::one();
        let mut b = base;
        let mut m = e.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&b);
            }
            m >>= 1;
            if m > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    /// The automorphism `z -> z^k` of the ambient cyclotomic field;
    /// `k` must be coprime to the level.
    pub fn galois(&self, k: i64) -> Result<Self, ArithError> {
        let n = self.level;
        let j = k.rem_euclid(n as i64) as u64;
        if n > 1 && gcd_u64(j, n) != 1 {
            return Err(ArithError::NotCoprime { k, n });
        }
        // Conjugates share the minimal level, so the result is canonical.
        Ok(CycNum {
            level: n,
            coeffs: galois_raw(n, &self.coeffs, if n == 1 { 0 } else { j }),
        })
    }

    /// Complex conjugation.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit at every level")
    }

    /// Whether the number is fixed by complex conjugation, i.e. real.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// The monic minimal polynomial over the rationals.
    pub fn minpoly(&self) -> RatPoly {
        let orbit: BTreeSet<CycNum> = units_mod(self.level)
            .into_iter()
            .map(|k| self.galois(k as i64).expect("unit exponent"))
            .collect();
        let mut coeffs: Vec<CycNum> = vec![CycNum::one()];
        for y in &orbit {
            let mut next = vec![CycNum::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c);
                next[i] = next[i].sub(&c.mul(y));
            }
            coeffs = next;
        }
        let rational: Vec<Rat> = coeffs
            .iter()
            .map(|c| c.to_rat().expect("orbit product has rational coefficients"))
            .collect();
        RatPoly::new(rational)
    }

    /// If the number is a root of unity, returns `(j, m)` with the value
    /// equal to `exp(2 pi i j / m)`, `0 <= j < m`, and `gcd(j, m) = 1`.
    pub fn as_root_of_unity(&self) -> Option<(u64, u64)> {
        if self.is_zero() {
            return None;
        }
        let n = self.level;
        let m = if n % 2 == 1 { 2 * n } else { n };
        let z = CycNum::root_of_unity(m, 1).expect("positive level");
        let mut y = CycNum::one();
        for j in 0..m {
            if y == *self {
                let g = gcd_u64(j, m);
                return Some(if j == 0 { (0, 1) } else { (j / g, m / g) });
            }
            y = y.mul(&z);
        }
        None
    }

    /// Verified complex enclosure of the number.
    pub fn numeric_eval(&self, prec: u32) -> CBall {
        let mut acc = CBall::zero();
        for (i, a) in self.coeffs.iter().enumerate() {
            if !a.is_zero() {
                let term = root_of_unity_ball(i as i64, self.level, prec).mul_rat(a, prec);
                acc = acc.add(&term, prec);
            }
        }
        acc
    }
}

/// Evaluates a rational polynomial at a cyclotomic point.
pub fn poly_eval(f: &RatPoly, x: &CycNum) -> CycNum {
    let mut acc = CycNum::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x).add(&CycNum::from_rat(c.clone()));
    }
    acc
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", rat_to_string(&self.coeffs[0]));
        }
        let mut first = true;
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if a.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", rat_to_string(&mag))?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{}*", rat_to_string(&mag))?;
            }
            write!(f, "z({})", self.level)?;
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CycNumRepr {
    level: u64,
    coeffs: Vec<String>,
}

impl Serialize for CycNum {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        CycNumRepr {
            level: self.level,
            coeffs: self.coeffs.iter().map(rat_to_string).collect(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for CycNum {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = CycNumRepr::deserialize(de)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| rat_from_str(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        CycNum::from_level_coeffs(repr.level, coeffs).map_err(serde::de::Error::custom)
    }
}
