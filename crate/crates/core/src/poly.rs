//! Dense univariate polynomials over the rationals: exact division with
//! remainder, monic gcd, Sturm-sequence root counting, resultants, and the
//! cyclotomic polynomials.

use crate::error::ArithError;
use crate::nt::divisors;
use crate::rat::{rat_int, Rat};
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;

/// Polynomial with rational coefficients, stored lowest degree first with no
/// trailing zero coefficient. The zero polynomial has an empty coefficient
/// vector. Serializes as the bare coefficient array in `"p/q"` form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RatPoly {
    #[serde(with = "crate::rat::serde_rat_vec")]
    coeffs: Vec<Rat>,
}

impl RatPoly {
    /// Builds a polynomial, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        RatPoly::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        RatPoly { coeffs }
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        RatPoly::monomial(Rat::one(), 1)
    }

    /// Convenience constructor from machine integers, lowest degree first.
    pub fn from_ints(cs: &[i64]) -> Self {
        RatPoly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(self.coeff(k) + other.coeff(k));
        }
        RatPoly::new(out)
    }

    pub fn neg(&self) -> Self {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Quotient and remainder with `deg r < deg divisor`. Errors when the
    /// divisor is zero.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), ArithError> {
        if divisor.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let dd = divisor.degree().unwrap();
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = rem[k].clone();
            if c.is_zero() {
                continue;
            }
            let q = c / lc.clone();
            for (i, b) in divisor.coeffs.iter().enumerate() {
                let idx = k - dd + i;
                let sub = b * &q;
                rem[idx] -= sub;
            }
            quot[k - dd] = q;
        }
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, ArithError> {
        Ok(self.divrem(divisor)?.1)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended Euclidean algorithm: `(g, u, v)` with `u*self + v*other = g`
    /// and `g` the monic gcd.
    pub fn xgcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut u0, mut u1) = (RatPoly::one(), RatPoly::zero());
        let (mut v0, mut v1) = (RatPoly::zero(), RatPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).expect("nonzero divisor");
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            (r0, r1) = (r1, r);
            (u0, u1) = (u1, u);
            (v0, v1) = (v1, v);
        }
        if r0.is_zero() {
            return (r0, u0, v0);
        }
        let inv = Rat::one() / r0.leading();
        (r0.scale(&inv), u0.scale(&inv), v0.scale(&inv))
    }

    /// Scales to leading coefficient 1; the zero polynomial is unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lc = self.leading();
        self.scale(&(Rat::one() / lc))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat_int(i as i64 + 1))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// True when the polynomial has no repeated roots.
    pub fn is_squarefree(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.degree() == Some(0) {
            return true;
        }
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// The squarefree part `f / gcd(f, f')`, monic.
    pub fn radical(&self) -> Self {
        if self.is_zero() || self.degree() == Some(0) {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.divrem(&g).expect("gcd nonzero").0.monic()
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = crate::rat::rat_abs(c);
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_mag = mag.is_one();
            match (k, unit_mag) {
                (0, _) => write!(f, "{}", crate::rat::rat_to_string(&mag))?,
                (_, true) => {}
                (_, false) => write!(f, "{}*", crate::rat::rat_to_string(&mag))?,
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

static CYCLOTOMIC_CACHE: Lazy<Mutex<HashMap<u64, RatPoly>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial, computed by dividing `x^n - 1` by the
/// cyclotomic polynomials of the proper divisors of `n`. Results are cached.
///
/// # Panics
///
/// Panics when `n = 0`.
pub fn cyclotomic_poly(n: u64) -> RatPoly {
    assert!(n > 0, "cyclotomic polynomials are indexed from 1");
    if let Some(p) = CYCLOTOMIC_CACHE.lock().unwrap().get(&n) {
        return p.clone();
    }
    let result = if n == 1 {
        RatPoly::from_ints(&[-1, 1])
    } else {
        let mut num = vec![Rat::zero(); n as usize + 1];
        num[0] = -Rat::one();
        num[n as usize] = Rat::one();
        let mut quot = RatPoly::new(num);
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let (q, r) = quot.divrem(&cyclotomic_poly(d)).expect("nonzero divisor");
            debug_assert!(r.is_zero());
            quot = q;
        }
        quot
    };
    CYCLOTOMIC_CACHE.lock().unwrap().insert(n, result.clone());
    result
}

/// Interval endpoint for root counting.
#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rat),
    PosInf,
}

fn sign_at(p: &RatPoly, b: &Bound) -> i32 {
    if p.is_zero() {
        return 0;
    }
    match b {
        Bound::Finite(x) => {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::PosInf => {
            if p.leading().is_positive() {
                1
            } else {
                -1
            }
        }
        Bound::NegInf => {
            let lc_sign = if p.leading().is_positive() { 1 } else { -1 };
            if p.degree().unwrap() % 2 == 0 {
                lc_sign
            } else {
                -lc_sign
            }
        }
    }
}

fn sign_variations(chain: &[RatPoly], b: &Bound) -> usize {
    let mut count = 0;
    let mut prev = 0i32;
    for p in chain {
        let s = sign_at(p, b);
        if s == 0 {
            continue;
        }
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

/// Exact number of distinct real roots of `f` in the half-open interval
/// `(lo, hi]`, by Sturm's theorem. Multiple roots are counted once. Errors on
/// the zero polynomial or an empty interval given in the wrong order.
pub fn sturm_count(f: &RatPoly, lo: &Bound, hi: &Bound) -> Result<usize, ArithError> {
    if f.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    if let (Bound::Finite(a), Bound::Finite(b)) = (lo, hi) {
        if a > b {
            return Ok(0);
        }
    }
    let f = f.radical();
    if f.degree() == Some(0) {
        return Ok(0);
    }
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let r = chain[n - 2].rem(&chain[n - 1])?;
        chain.push(r.neg());
    }
    let va = sign_variations(&chain, lo);
    let vb = sign_variations(&chain, hi);
    Ok(va.saturating_sub(vb))
}

/// Resultant of `f` and `g`, by the Euclidean remainder sequence.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> Rat {
    fn go(f: &RatPoly, g: &RatPoly) -> Rat {
        let df = f.degree();
        let dg = g.degree();
        match (df, dg) {
            (None, _) | (_, None) => Rat::zero(),
            (Some(0), Some(m)) => num_traits::pow::pow(f.leading(), m),
            (Some(n), Some(0)) => num_traits::pow::pow(g.leading(), n),
            (Some(n), Some(m)) => {
                if n < m {
                    let sign = if n * m % 2 == 1 { -Rat::one() } else { Rat::one() };
                    return sign * go(g, f);
                }
                let r = f.rem(g).expect("nonzero divisor");
                if r.is_zero() {
                    return Rat::zero();
                }
                let dr = r.degree().unwrap();
                let sign = if n * m % 2 == 1 { -Rat::one() } else { Rat::one() };
                sign * num_traits::pow::pow(g.leading(), n - dr) * go(g, &r)
            }
        }
    }
    go(f, g)
}

/// Discriminant of a nonconstant polynomial.
pub fn discriminant(f: &RatPoly) -> Result<Rat, ArithError> {
    let d = f.degree().filter(|&d| d >= 1).ok_or(ArithError::ConstantPolynomial)?;
    if d == 1 {
        return Ok(Rat::one());
    }
    let res = resultant(f, &f.derivative());
    let sign = if (d * (d - 1) / 2) % 2 == 1 { -Rat::one() } else { Rat::one() };
    Ok(sign * res / f.leading())
}
