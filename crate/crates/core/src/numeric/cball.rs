//! Complex ball arithmetic built on real balls: rectangular enclosures
//! with verified operations, the complex exponential, and roots of unity.

use super::ball::{cos_sin_2pi, cos_sin_ball, exp_ball, Ball};
use super::dyad::Dyad;
use crate::rat::{rat, Rat};

/// Complex enclosure with independent real and imaginary balls.
#[derive(Clone, Debug)]
pub struct CBall {
    pub re: Ball,
    pub im: Ball,
}

impl CBall {
    pub fn new(re: Ball, im: Ball) -> Self {
        CBall { re, im }
    }

    pub fn zero() -> Self {
        CBall::new(Ball::zero(), Ball::zero())
    }

    pub fn one() -> Self {
        CBall::new(Ball::one(), Ball::zero())
    }

    pub fn from_rat(r: &Rat, prec: u32) -> Self {
        CBall::new(Ball::from_rat(r, prec), Ball::zero())
    }

    pub fn from_real(b: Ball) -> Self {
        CBall::new(b, Ball::zero())
    }

    pub fn i() -> Self {
        CBall::new(Ball::zero(), Ball::one())
    }

    pub fn neg(&self) -> Self {
        CBall::new(self.re.neg(), self.im.neg())
    }

    pub fn conj(&self) -> Self {
        CBall::new(self.re.clone(), self.im.neg())
    }

    pub fn add(&self, other: &Self, prec: u32) -> Self {
        CBall::new(self.re.add(&other.re, prec), self.im.add(&other.im, prec))
    }

    pub fn sub(&self, other: &Self, prec: u32) -> Self {
        CBall::new(self.re.sub(&other.re, prec), self.im.sub(&other.im, prec))
    }

    pub fn mul(&self, other: &Self, prec: u32) -> Self {
        let re = self
            .re
            .mul(&other.re, prec)
            .sub(&self.im.mul(&other.im, prec), prec);
        let im = self
            .re
            .mul(&other.im, prec)
            .add(&self.im.mul(&other.re, prec), prec);
        CBall::new(re, im)
    }

    pub fn mul_rat(&self, r: &Rat, prec: u32) -> Self {
        CBall::new(self.re.mul_rat(r, prec), self.im.mul_rat(r, prec))
    }

    /// Squared modulus as a real ball.
    pub fn norm_sq(&self, prec: u32) -> Ball {
        self.re.mul(&self.re, prec).add(&self.im.mul(&self.im, prec), prec)
    }

    /// Division; `None` when the divisor's enclosure meets zero.
    pub fn div(&self, other: &Self, prec: u32) -> Option<Self> {
        let n = other.norm_sq(prec);
        let inv = n.recip(prec)?;
        let num = self.mul(&other.conj(), prec);
        Some(CBall::new(num.re.mul(&inv, prec), num.im.mul(&inv, prec)))
    }

    pub fn pow(&self, mut e: u64, prec: u32) -> Self {
        let mut base = self.clone();
        let mut acc = CBall::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, prec);
            }
            base = base.mul(&base, prec);
            e >>= 1;
        }
        acc
    }

    /// Upper bound for `|re| + |im|`, which dominates the modulus.
    pub fn norm1_upper(&self) -> Dyad {
        self.re.upper_abs().add(&self.im.upper_abs())
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    /// Complex exponential.
    pub fn cexp(&self, prec: u32) -> Self {
        let m = exp_ball(&self.re, prec);
        let (c, s) = cos_sin_ball(&self.im, prec);
        CBall::new(m.mul(&c, prec), m.mul(&s, prec))
    }
}

/// Verified enclosure of `exp(2 pi i j / n)`.
pub fn root_of_unity_ball(j: i64, n: u64, prec: u32) -> CBall {
    let s = rat(j, n as i64);
    let (c, sn) = cos_sin_2pi(&s, prec);
    CBall::new(c, sn)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_unity() {
        let z = root_of_unity_ball(1, 4, 256);
        assert!(z.re.upper_abs().abs_le_pow2(-250));
        assert!(z.im.sub(&Ball::one(), 256).upper_abs().abs_le_pow2(-250));
        let w = root_of_unity_ball(1, 3, 256);
        let w3 = w.pow(3, 256);
        assert!(w3.sub(&CBall::one(), 256).norm1_upper().abs_le_pow2(-240));
        let z8 = root_of_unity_ball(1, 8, 256);
        let s = z8.add(&z8.conj(), 256);
        // z8 + conj(z8) = sqrt(2)
        let sq = s.mul(&s, 256);
        assert!(sq
            .sub(&CBall::from_rat(&rat(2, 1), 256), 256)
            .norm1_upper()
            .abs_le_pow2(-240));
    }

    #[test]
    fn cexp_matches_roots() {
        // exp(2 pi i / 5) against the direct construction.
        let p = super::super::ball::pi_ball(256);
        let theta = p.mul_rat(&rat(2, 5), 256);
        let z = CBall::new(Ball::zero(), theta).cexp(256);
        let w = root_of_unity_ball(1, 5, 256);
        assert!(z.sub(&w, 256).norm1_upper().abs_le_pow2(-240));
    }

    #[test]
    fn division() {
        let a = CBall::new(Ball::from_i64(3), Ball::from_i64(4));
        let q = a.div(&a, 256).unwrap();
        assert!(q.sub(&CBall::one(), 256).norm1_upper().abs_le_pow2(-240));
        assert!(a.div(&CBall::zero(), 256).is_none());
    }

    #[test]
    fn inner_rotation_sums_to_zero() {
        // 1 + z + z^2 + z^3 + z^4 = 0 for z = exp(2 pi i / 5).
        let prec = 256;
        let mut acc = CBall::zero();
        for j in 0..5 {
            acc = acc.add(&root_of_unity_ball(j, 5, prec), prec);
        }
        assert!(acc.norm1_upper().abs_le_pow2(-240));
    }
}
