//! Real ball arithmetic (midpoint plus error radius) with rigorous rounding,
//! verified constants, and elementary functions. Every operation returns a
//! ball containing the exact image of every point of its input balls.

use super::dyad::Dyad;
use crate::rat::{rat, Rat};
use num_bigint::BigInt;
use num_traits::Signed;
use once_cell::sync::Lazy;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::Mutex;

/// Real interval `[mid - rad, mid + rad]`.
#[derive(Clone, Debug)]
pub struct Ball {
    pub mid: Dyad,
    pub rad: Dyad,
}

impl Ball {
    pub fn exact(mid: Dyad) -> Self {
        Ball { mid, rad: Dyad::zero() }
    }

    pub fn zero() -> Self {
        Ball::exact(Dyad::zero())
    }

    pub fn one() -> Self {
        Ball::exact(Dyad::one())
    }

    pub fn from_i64(n: i64) -> Self {
        Ball::exact(Dyad::from_i64(n))
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        let (mid, err) = Dyad::from_rat(r, prec + 16);
        Ball { mid, rad: err }
    }

    fn rounded(mid: Dyad, rad: Dyad, prec: u32) -> Self {
        let (mid, err) = mid.round_to(prec);
        let rad = rad.add(&err).round_up_short();
        Ball { mid, rad }
    }

    pub fn neg(&self) -> Self {
        Ball { mid: self.mid.neg(), rad: self.rad.clone() }
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        Ball::rounded(self.mid.add(&other.mid), self.rad.add(&other.rad), prec)
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        self.add(&other.neg(), prec)
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        let mid = self.mid.mul(&other.mid);
        let cross = self
            .mid
            .abs()
            .mul(&other.rad)
            .add(&other.mid.abs().mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        Ball::rounded(mid, cross, prec)
    }

    pub fn mul_rat(&self, r: &Rat, prec: u32) -> Self {
        self.mul(&Ball::from_rat(r, prec), prec)
    }

    /// Exact scaling by an integer.
    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        Ball {
            mid: self.mid.mul_bigint(k),
            rad: self.rad.mul_bigint(&k.abs()).round_up_short(),
        }
    }

    /// Exact scaling by `2^e`.
    pub fn shl(&self, e: i64) -> Self {
        Ball { mid: self.mid.shl(e), rad: self.rad.shl(e) }
    }

    /// Upper bound for `|x|` over the ball.
    pub fn upper_abs(&self) -> Dyad {
        self.mid.abs().add(&self.rad)
    }

    /// Lower bound for `|x|` over the ball (clamped at zero).
    pub fn lower_abs(&self) -> Dyad {
        let d = self.mid.abs().sub(&self.rad);
        if d.is_negative() {
            Dyad::zero()
        } else {
            d
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.lower_abs().is_zero()
    }

    /// Exact rational endpoints.
    pub fn to_interval(&self) -> (Rat, Rat) {
        let m = self.mid.to_rational();
        let r = self.rad.to_rational();
        (m.clone() - r.clone(), m + r)
    }

    /// Reciprocal; `None` when the ball meets zero.
    pub fn recip(&self, prec: u32) -> Option<Self> {
        if self.contains_zero() {
            return None;
        }
        let (lo, hi) = self.to_interval();
        let (a, b) = (Rat::from_integer(1.into()) / hi, Rat::from_integer(1.into()) / lo);
        let mid = (a.clone() + b.clone()) / rat(2, 1);
        let rad = (b - a) / rat(2, 1);
        let m = Ball::from_rat(&mid, prec + 16);
        let r = Ball::from_rat(&rad, prec + 16);
        Some(Ball::rounded(m.mid, m.rad.add(&r.upper_abs()), prec))
    }
}

static PI_CACHE: Lazy<Mutex<HashMap<u32, Ball>>> = Lazy::new(|| Mutex::new(HashMap::new()));
static LN2_CACHE: Lazy<Mutex<HashMap<u32, Ball>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// Arctangent of `1/x` for integer `x >= 2`, by the alternating series.
fn atan_recip(x: i64, prec: u32) -> Ball {
    let work = prec + 32;
    let mut acc = Ball::zero();
    let mut k = 0u32;
    loop {
        let denom = Rat::from_integer(BigInt::from(2 * k as i64 + 1) * BigInt::from(x).pow(2 * k + 1));
        let term = Rat::from_integer(1.into()) / denom;
        let t = Ball::from_rat(&term, work);
        acc = if k % 2 == 0 { acc.add(&t, work) } else { acc.sub(&t, work) };
        // Alternating series with decreasing terms: the tail is bounded by
        // the magnitude of the next term.
        let next = t.upper_abs();
        if next.abs_le_pow2(-(work as i64)) {
            acc.rad = acc.rad.add(&next).round_up_short();
            return acc;
        }
        k += 1;
    }
}

/// Verified enclosure of pi (Machin's formula), cached per precision.
pub fn pi_ball(prec: u32) -> Ball {
    if let Some(b) = PI_CACHE.lock().unwrap().get(&prec) {
        return b.clone();
    }
    let work = prec + 32;
    let a = atan_recip(5, work).mul_rat(&rat(16, 1), work);
    let b = atan_recip(239, work).mul_rat(&rat(4, 1), work);
    let pi = a.sub(&b, work);
    PI_CACHE.lock().unwrap().insert(prec, pi.clone());
    pi
}

/// Verified enclosure of ln 2, cached per precision.
pub fn ln2_ball(prec: u32) -> Ball {
    if let Some(b) = LN2_CACHE.lock().unwrap().get(&prec) {
        return b.clone();
    }
    let work = prec + 32;
    let terms = work as i64 + 8;
    let mut acc = Ball::zero();
    for i in 1..=terms {
        let term = Rat::new(BigInt::from(1), BigInt::from(i) << i as u64);
        acc = acc.add(&Ball::from_rat(&term, work), work);
    }
    // Tail sum_{i>K} 1/(i 2^i) < 2^-K.
    acc.rad = acc.rad.add(&Dyad::pow2(-terms)).round_up_short();
    LN2_CACHE.lock().unwrap().insert(prec, acc.clone());
    acc
}

/// Cosine and sine of `x` for a ball `x` with `|x|` up to a few dozen;
/// reduces modulo 2 pi and sums the Taylor series with a verified tail.
pub fn cos_sin_ball(x: &Ball, prec: u32) -> (Ball, Ball) {
    let work = prec + 32;
    let two_pi = pi_ball(work).shl(1);
    // Choice of k needs no rigor; the reduction itself is exact ball work.
    let approx = x.mid.to_f64() / (2.0 * std::f64::consts::PI);
    let k = approx.round();
    let r = if k.abs() < 1e15 && k != 0.0 {
        let kb = BigInt::from(k as i64);
        x.sub(&two_pi.mul_bigint(&kb), work)
    } else {
        x.clone()
    };
    taylor_cos_sin(&r, work)
}

fn taylor_cos_sin(x: &Ball, work: u32) -> (Ball, Ball) {
    let x2 = x.mul(x, work);
    let bound = x.upper_abs();
    // cos: sum (-1)^k x^(2k) / (2k)!; sin: x * sum (-1)^k x^(2k) / (2k+1)!.
    let mut cos_acc = Ball::one();
    let mut sin_acc = Ball::one();
    let mut cos_t = Ball::one();
    let mut sin_t = Ball::one();
    let mut k: i64 = 1;
    loop {
        cos_t = cos_t.mul(&x2, work).mul_rat(&rat(-1, (2 * k - 1) * (2 * k)), work);
        sin_t = sin_t.mul(&x2, work).mul_rat(&rat(-1, (2 * k) * (2 * k + 1)), work);
        cos_acc = cos_acc.add(&cos_t, work);
        sin_acc = sin_acc.add(&sin_t, work);
        // Once the term ratio falls below one the series alternate with
        // decreasing terms, so the tails are bounded by the next term.
        let ratio_small = bound
            .mul(&bound)
            .cmp_value(&Dyad::from_i64((2 * k + 1) * (2 * k + 2))) == Ordering::Less;
        let t_bound = cos_t.upper_abs().add(&sin_t.upper_abs());
        if ratio_small && t_bound.abs_le_pow2(-(work as i64)) {
            let tail = t_bound.round_up_short();
            cos_acc.rad = cos_acc.rad.add(&tail).round_up_short();
            sin_acc.rad = sin_acc.rad.add(&tail).round_up_short();
            let sin = sin_acc.mul(x, work);
            return (cos_acc, sin);
        }
        k += 1;
        assert!(k < 10_000, "cosine series failed to converge");
    }
}

/// Cosine of `2 pi s` for exact rational `s`, via octant folding and the
/// Taylor series on `[0, pi/4]`.
pub fn cos2pi(s: &Rat, prec: u32) -> Ball {
    let (c, _) = cos_sin_2pi(s, prec);
    c
}

/// Sine of `2 pi s` for exact rational `s`.
pub fn sin2pi(s: &Rat, prec: u32) -> Ball {
    let (_, s) = cos_sin_2pi(s, prec);
    s
}

/// Cosine and sine of `2 pi s`, exact folding into the first octant.
pub fn cos_sin_2pi(s: &Rat, prec: u32) -> (Ball, Ball) {
    let work = prec + 16;
    let frac = s - s.floor();
    let (c, s) = cos_sin_2pi_folded(&frac, work);
    (c, s)
}

fn cos_sin_2pi_folded(s: &Rat, work: u32) -> (Ball, Ball) {
    debug_assert!(!s.is_negative() && s < &rat(1, 1));
    let half = rat(1, 2);
    let quarter = rat(1, 4);
    let eighth = rat(1, 8);
    if s > &half {
        // Reflect across the real axis.
        let (c, sn) = cos_sin_2pi_folded(&(rat(1, 1) - s), work);
        return (c, sn.neg());
    }
    if s > &quarter {
        // Rotate by a half turn.
        let (c, sn) = cos_sin_2pi_folded(&(half - s), work);
        return (c.neg(), sn);
    }
    if s > &eighth {
        // Swap through the diagonal.
        let (c, sn) = cos_sin_2pi_folded(&(quarter - s), work);
        return (sn, c);
    }
    let x = pi_ball(work).mul_rat(&(s * rat(2, 1)), work);
    taylor_cos_sin(&x, work)
}

/// Exponential of a real ball, via `x = n ln2 + r` and the Taylor series.
pub fn exp_ball(x: &Ball, prec: u32) -> Ball {
    let work = prec + 32;
    let ln2 = ln2_ball(work);
    let approx = x.mid.to_f64() / std::f64::consts::LN_2;
    let n = approx.round();
    let (r, shift) = if n != 0.0 && n.abs() < 1e9 {
        (x.sub(&ln2.mul_bigint(&BigInt::from(n as i64)), work), n as i64)
    } else {
        (x.clone(), 0)
    };
    let bound = r.upper_abs();
    let mut acc = Ball::one();
    let mut term = Ball::one();
    let mut k: i64 = 1;
    loop {
        term = term.mul(&r, work).mul_rat(&rat(1, k), work);
        acc = acc.add(&term, work);
        let ratio_small = bound.cmp_value(&Dyad::from_i64((k + 1) / 2)) == Ordering::Less;
        let t_bound = term.upper_abs();
        if ratio_small && t_bound.abs_le_pow2(-(work as i64)) {
            // Geometric tail with ratio at most 1/2.
            acc.rad = acc.rad.add(&t_bound.shl(1)).round_up_short();
            return acc.shl(shift);
        }
        k += 1;
        assert!(k < 10_000, "exponential series failed to converge");
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close_to(b: &Ball, v: f64, tol: f64) {
        assert!(
            (b.mid.to_f64() - v).abs() < tol,
            "ball {:?} not near {v}",
            b.mid.to_f64()
        );
    }

    #[test]
    fn pi_enclosure() {
        let p = pi_ball(256);
        close_to(&p, std::f64::consts::PI, 1e-12);
        assert!(p.rad.abs_le_pow2(-250));
        let (lo, hi) = p.to_interval();
        assert!(lo < rat(355, 113) && rat(333, 106) < hi);
    }

    #[test]
    fn ln2_enclosure() {
        let l = ln2_ball(256);
        close_to(&l, std::f64::consts::LN_2, 1e-12);
        assert!(l.rad.abs_le_pow2(-250));
    }

    #[test]
    fn trig_at_rational_angles() {
        let c = cos2pi(&rat(1, 8), 256);
        close_to(&c, std::f64::consts::FRAC_1_SQRT_2, 1e-12);
        let s = sin2pi(&rat(1, 4), 256);
        close_to(&s, 1.0, 1e-12);
        assert!(s.sub(&Ball::one(), 256).upper_abs().abs_le_pow2(-250));
        let z = sin2pi(&rat(1, 2), 256);
        assert!(z.upper_abs().abs_le_pow2(-250));
        let c3 = cos2pi(&rat(1, 3), 256);
        close_to(&c3, -0.5, 1e-12);
        assert!(c3.add(&Ball::from_rat(&rat(1, 2), 256), 256).upper_abs().abs_le_pow2(-250));
    }

    #[test]
    fn trig_of_ball_argument() {
        let p = pi_ball(256);
        let (c, s) = cos_sin_ball(&p, 256);
        assert!(c.add(&Ball::one(), 256).upper_abs().abs_le_pow2(-240));
        assert!(s.upper_abs().abs_le_pow2(-240));
        let big = p.mul_rat(&rat(17, 2), 256); // 8.5 pi
        let (c2, s2) = cos_sin_ball(&big, 256);
        assert!(c2.upper_abs().abs_le_pow2(-240));
        assert!(s2.sub(&Ball::one(), 256).upper_abs().abs_le_pow2(-240));
    }

    #[test]
    fn exp_values() {
        let e1 = exp_ball(&Ball::one(), 256);
        close_to(&e1, std::f64::consts::E, 1e-12);
        let l = ln2_ball(256);
        let two = exp_ball(&l, 256);
        close_to(&two, 2.0, 1e-12);
        assert!(two.sub(&Ball::from_i64(2), 256).upper_abs().abs_le_pow2(-240));
        let half = exp_ball(&l.neg(), 256);
        close_to(&half, 0.5, 1e-12);
    }

    #[test]
    fn mul_contains_exact_product() {
        let a = Ball::from_rat(&rat(22, 7), 128);
        let b = Ball::from_rat(&rat(-355, 113), 128);
        let prod = a.mul(&b, 128);
        let exact = rat(22, 7) * rat(-355, 113);
        let (lo, hi) = prod.to_interval();
        assert!(lo <= exact && exact <= hi);
    }

    #[test]
    fn recip() {
        let a = Ball::from_rat(&rat(3, 1), 128);
        let r = a.recip(128).unwrap();
        let (lo, hi) = r.to_interval();
        assert!(lo <= rat(1, 3) && rat(1, 3) <= hi);
        assert!(Ball::zero().recip(128).is_none());
    }
}
