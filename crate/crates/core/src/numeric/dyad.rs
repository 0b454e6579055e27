//! Dyadic floating-point numbers `man · 2^exp` with exact addition and
//! multiplication and explicit rounding.

use crate::rat::Rat;
use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Exact dyadic rational `man · 2^exp`. Zero is stored as `(0, 0)`.
#[derive(Clone, Debug)]
pub struct Dyad {
    man: BigInt,
    exp: i64,
}

impl Dyad {
    pub fn new(man: BigInt, exp: i64) -> Self {
        if man.is_zero() {
            Dyad { man, exp: 0 }
        } else {
            Dyad { man, exp }
        }
    }

    pub fn zero() -> Self {
        Dyad::new(BigInt::zero(), 0)
    }

    pub fn one() -> Self {
        Dyad::new(BigInt::one(), 0)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyad::new(BigInt::from(n), 0)
    }

    /// `2^e`.
    pub fn pow2(e: i64) -> Self {
        Dyad::new(BigInt::one(), e)
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    /// Mantissa bit length.
    pub fn bits(&self) -> u64 {
        self.man.magnitude().bits()
    }

    /// Exclusive upper bound `e` with `|self| < 2^e`; `i64::MIN` for zero.
    pub fn log2_upper(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.bits() as i64
        }
    }

    pub fn neg(&self) -> Self {
        Dyad::new(-self.man.clone(), self.exp)
    }

    pub fn abs(&self) -> Self {
        Dyad::new(self.man.abs(), self.exp)
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(other.exp);
        let a = &self.man << (self.exp - e) as u64;
        let b = &other.man << (other.exp - e) as u64;
        Dyad::new(a + b, e)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        Dyad::new(&self.man * &other.man, self.exp + other.exp)
    }

    /// Exact multiplication by `2^e`.
    pub fn shl(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyad::new(self.man.clone(), self.exp + e)
    }

    pub fn mul_bigint(&self, k: &BigInt) -> Self {
        Dyad::new(&self.man * k, self.exp)
    }

    /// Rounds the mantissa to at most `prec` bits. Returns the rounded value
    /// and a bound on the absolute rounding error.
    pub fn round_to(&self, prec: u32) -> (Self, Self) {
        let bits = self.bits();
        if bits <= prec as u64 {
            return (self.clone(), Dyad::zero());
        }
        let s = (bits - prec as u64) as i64;
        // BigInt shr is a floor shift; the dropped part is < 2^s in magnitude.
        let man = &self.man >> s as u64;
        (Dyad::new(man, self.exp + s), Dyad::pow2(self.exp + s))
    }

    /// Rounds a nonnegative bound upward to a short mantissa.
    pub fn round_up_short(&self) -> Self {
        debug_assert!(!self.is_negative());
        let bits = self.bits();
        if bits <= 32 {
            return self.clone();
        }
        let s = (bits - 32) as i64;
        let man = (&self.man >> s as u64) + 1;
        Dyad::new(man, self.exp + s)
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        let d = self.sub(other);
        if d.man.is_zero() {
            Ordering::Equal
        } else if d.man.is_negative() {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }

    /// True when `|self| <= 2^e`.
    pub fn abs_le_pow2(&self, e: i64) -> bool {
        self.abs().cmp_value(&Dyad::pow2(e)) != Ordering::Greater
    }

    pub fn to_rational(&self) -> Rat {
        if self.exp >= 0 {
            Rat::from_integer(&self.man << self.exp as u64)
        } else {
            Rat::new(self.man.clone(), BigInt::one() << (-self.exp) as u64)
        }
    }

    /// Truncated conversion of a rational, with an error bound of at most
    /// `2^-(prec+1)` and at least `prec` significant bits.
    pub fn from_rat(r: &Rat, prec: u32) -> (Self, Self) {
        if r.is_zero() {
            return (Dyad::zero(), Dyad::zero());
        }
        let num = r.numer();
        let den = r.denom();
        let scale = den.magnitude().bits() as i64 - num.magnitude().bits() as i64;
        let k = prec as i64 + scale.max(0) + 2;
        let man = if k >= 0 {
            (num << k as u64) / den
        } else {
            (num >> (-k) as u64) / den
        };
        // At most two truncations, each below a unit in the last place.
        (Dyad::new(man, -k), Dyad::pow2(-k + 1))
    }

    /// Approximate conversion for reporting only.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let mag = self.man.magnitude();
        let bits = mag.bits();
        let (m, exp) = if bits > 64 {
            let s = bits - 64;
            let top = (mag >> s).to_u64_digits();
            (top.first().copied().unwrap_or(0) as f64, self.exp + s as i64)
        } else {
            let digits = mag.to_u64_digits();
            (digits.first().copied().unwrap_or(0) as f64, self.exp)
        };
        let v = m * 2f64.powi(exp.clamp(-2000, 2000) as i32);
        if self.man.sign() == Sign::Minus {
            -v
        } else {
            v
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn exact_ops() {
        let a = Dyad::new(BigInt::from(3), -1); // 1.5
        let b = Dyad::new(BigInt::from(5), -2); // 1.25
        assert_eq!(a.add(&b).to_rational(), rat(11, 4));
        assert_eq!(a.mul(&b).to_rational(), rat(15, 8));
        assert_eq!(a.sub(&b).to_rational(), rat(1, 4));
    }

    #[test]
    fn rounding_bounds_error() {
        let x = Dyad::new(BigInt::from(0b101101110101i64), -7);
        let (r, e) = x.round_to(5);
        let diff = x.sub(&r).abs();
        assert!(diff.cmp_value(&e) != Ordering::Greater);
        assert!(r.bits() <= 5);
    }

    #[test]
    fn from_rat_error_bound() {
        let r = rat(22, 7);
        let (d, e) = Dyad::from_rat(&r, 100);
        let diff = d.to_rational() - r;
        let bound = e.to_rational();
        assert!(diff.clone().abs() <= bound);
        assert!(e.abs_le_pow2(-100));
    }
}
