//! A symbolic model of the partial exponential field whose kernel is
//! generated by a single transcendental `tau`: elements are rational
//! functions in `tau` with cyclotomic coefficients, the exponential is
//! defined exactly on rational multiples of `tau`, and the conjugation
//! automorphism extends by `tau -> -tau`. Also houses the predimension
//! delta, dependency lattices, freeness certificates, and the involution
//! dichotomy for adjoined algebraic constants.

use crate::cyclotomic::CycNum;
use crate::error::ArithError;
use crate::lattice;
use crate::rat::Rat;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

type CPoly = Vec<CycNum>;

fn cp_trim(mut p: CPoly) -> CPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn cp_degree(p: &[CycNum]) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

fn cp_add(a: &[CycNum], b: &[CycNum]) -> CPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(CycNum::zero);
        let y = b.get(i).cloned().unwrap_or_else(CycNum::zero);
        out.push(x.add(&y));
    }
    cp_trim(out)
}

fn cp_neg(a: &[CycNum]) -> CPoly {
    a.iter().map(|c| c.neg()).collect()
}

fn cp_mul(a: &[CycNum], b: &[CycNum]) -> CPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![CycNum::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    cp_trim(out)
}

fn cp_scale(a: &[CycNum], c: &CycNum) -> CPoly {
    cp_trim(a.iter().map(|x| x.mul(c)).collect())
}

fn cp_divrem(a: &[CycNum], b: &[CycNum]) -> (CPoly, CPoly) {
    let db = cp_degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].inv().expect("leading coefficient is nonzero");
    let mut rem: CPoly = a.to_vec();
    let mut quo = vec![CycNum::zero(); a.len().saturating_sub(db)];
    while let Some(dr) = cp_degree(&rem) {
        if dr < db {
            break;
        }
        let f = rem[dr].mul(&lead_inv);
        quo[dr - db] = f.clone();
        for j in 0..=db {
            let delta = b[j].mul(&f);
            rem[dr - db + j] = rem[dr - db + j].sub(&delta);
        }
        rem = cp_trim(rem);
    }
    (cp_trim(quo), rem)
}

fn cp_gcd(a: &[CycNum], b: &[CycNum]) -> CPoly {
    let mut x = cp_trim(a.to_vec());
    let mut y = cp_trim(b.to_vec());
    while !y.is_empty() {
        let (_, r) = cp_divrem(&x, &y);
        x = y;
        y = r;
    }
    cp_monic(&x)
}

fn cp_monic(a: &[CycNum]) -> CPoly {
    match cp_degree(a) {
        None => Vec::new(),
        Some(d) => {
            let inv = a[d].inv().expect("leading coefficient is nonzero");
            cp_scale(a, &inv)
        }
    }
}

fn cp_to_string(p: &[CycNum], var: &str) -> String {
    if p.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let s = c.to_string();
        let (sign, mag) = if let Some(rest) = s.strip_prefix('-') {
            if rest.contains(" + ") || rest.contains(" - ") {
                ('+', format!("({s})"))
            } else {
                ('-', rest.to_string())
            }
        } else if s.contains(" + ") || s.contains(" - ") {
            ('+', format!("({s})"))
        } else {
            ('+', s)
        };
        if out.is_empty() {
            if sign == '-' {
                out.push('-');
            }
        } else {
            out.push_str(if sign == '-' { " - " } else { " + " });
        }
        if i == 0 {
            out.push_str(&mag);
        } else {
            if mag != "1" {
                out.push_str(&mag);
                out.push('*');
            }
            out.push_str(var);
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// A rational function in the formal kernel generator `tau`, with
/// cyclotomic coefficients. Stored in lowest terms with monic denominator,
/// so structural equality is equality in the field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SKElement {
    num: CPoly,
    den: CPoly,
}

impl SKElement {
    pub fn zero() -> Self {
        SKElement { num: Vec::new(), den: vec![CycNum::one()] }
    }

    pub fn one() -> Self {
        SKElement::from_cyc(CycNum::one())
    }

    pub fn from_cyc(c: CycNum) -> Self {
        if c.is_zero() {
            return SKElement::zero();
        }
        SKElement { num: vec![c], den: vec![CycNum::one()] }
    }

    pub fn from_rat(r: Rat) -> Self {
        SKElement::from_cyc(CycNum::from_rat(r))
    }

    /// The distinguished kernel generator.
    pub fn tau() -> Self {
        SKElement {
            num: vec![CycNum::zero(), CycNum::one()],
            den: vec![CycNum::one()],
        }
    }

    /// Builds `num / den` from raw coefficient lists, reducing to canonical
    /// form.
    pub fn from_fraction(num: Vec<CycNum>, den: Vec<CycNum>) -> Result<Self, ArithError> {
        let num = cp_trim(num);
        let den = cp_trim(den);
        if den.is_empty() {
            return Err(ArithError::DivisionByZero);
        }
        if num.is_empty() {
            return Ok(SKElement::zero());
        }
        let g = cp_gcd(&num, &den);
        let (num, _) = cp_divrem(&num, &g);
        let (den, _) = cp_divrem(&den, &g);
        let lead_inv = den[den.len() - 1].inv().expect("nonzero leading coefficient");
        Ok(SKElement {
            num: cp_scale(&num, &lead_inv),
            den: cp_scale(&den, &lead_inv),
        })
    }

    pub fn num(&self) -> &[CycNum] {
        &self.num
    }

    pub fn den(&self) -> &[CycNum] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// The constant value, when the element lies in the coefficient field.
    pub fn as_cyc(&self) -> Option<CycNum> {
        if self.den == vec![CycNum::one()] {
            match self.num.len() {
                0 => Some(CycNum::zero()),
                1 => Some(self.num[0].clone()),
                _ => None,
            }
        } else {
            None
        }
    }

    /// When the element is `q * tau` for rational `q`, returns `q`
    /// (zero counts, with `q = 0`).
    pub fn as_kernel_multiple(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.den != vec![CycNum::one()] || self.num.len() != 2 || !self.num[0].is_zero() {
            return None;
        }
        self.num[1].to_rat()
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = cp_add(&cp_mul(&self.num, &other.den), &cp_mul(&other.num, &self.den));
        let den = cp_mul(&self.den, &other.den);
        SKElement::from_fraction(num, den).expect("denominator product is nonzero")
    }

    pub fn neg(&self) -> Self {
        SKElement { num: cp_neg(&self.num), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = cp_mul(&self.num, &other.num);
        let den = cp_mul(&self.den, &other.den);
        SKElement::from_fraction(num, den).expect("denominator product is nonzero")
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::ZeroInverse);
        }
        SKElement::from_fraction(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, ArithError> {
        if other.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        if e == 0 {
            return Ok(SKElement::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = SKElement::one();
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

    /// The automorphism sending `tau` to `-tau` and acting on coefficients
    /// by complex conjugation. An involution.
    pub fn sigma1(&self) -> Self {
        let flip = |p: &[CycNum]| -> CPoly {
            p.iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { c.conj().neg() } else { c.conj() })
                .collect()
        };
        SKElement::from_fraction(flip(&self.num), flip(&self.den))
            .expect("automorphism preserves nonzero denominators")
    }
}

impl fmt::Display for SKElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == vec![CycNum::one()] {
            write!(f, "{}", cp_to_string(&self.num, "t"))
        } else {
            write!(
                f,
                "({})/({})",
                cp_to_string(&self.num, "t"),
                cp_to_string(&self.den, "t")
            )
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SKElementRepr {
    num: Vec<CycNum>,
    den: Vec<CycNum>,
}

impl Serialize for SKElement {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        SKElementRepr { num: self.num.clone(), den: self.den.clone() }.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for SKElement {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = SKElementRepr::deserialize(de)?;
        SKElement::from_fraction(repr.num, repr.den).map_err(serde::de::Error::custom)
    }
}

/// The exponential on the kernel line: `E(q * tau) = exp(2 pi i q)`,
/// an exact root of unity.
pub fn sk_e(q: &Rat) -> CycNum {
    let b = u64::try_from(q.denom().clone()).expect("denominator fits u64");
    let a = i64::try_from(q.numer().mod_floor(&BigInt::from(b))).expect("residue fits i64");
    CycNum::root_of_unity(b, a).expect("positive level")
}

/// The predimension of a finite tuple from the kernel line: transcendence
/// degree of the tuple together with its exponentials, minus the linear
/// dimension of the tuple over the rationals.
///
/// The transcendence degree is 1 when any entry is nonzero (the values
/// `q * tau` are transcendental, their exponentials are roots of unity and
/// hence algebraic) and 0 otherwise; the linear dimension is the rank of
/// the row of rationals, computed exactly.
pub fn delta_sk(x: &[Rat]) -> i64 {
    let trans_deg: i64 = if x.iter().any(|q| !q.is_zero()) { 1 } else { 0 };
    let lin_dim: i64 = if x.is_empty() {
        0
    } else {
        let row = vec![x.to_vec()];
        (x.len() - lattice::kernel_rational(&row).len()) as i64
    };
    trans_deg - lin_dim
}

/// Canonical basis of the lattice of exponent vectors `m` with
/// `prod roots_i ^ m_i = 1`. Every input must be a root of unity.
pub fn multiplicative_dependencies(roots: &[CycNum]) -> Result<Vec<Vec<BigInt>>, ArithError> {
    let mut orders = Vec::with_capacity(roots.len());
    for r in roots {
        let (j, m) = r.as_root_of_unity().ok_or(ArithError::NotRootOfUnity)?;
        orders.push((j, m));
    }
    if roots.is_empty() {
        return Ok(Vec::new());
    }
    let n: u64 = orders.iter().fold(1, |acc, &(_, m)| crate::nt::lcm_u64(acc, m));
    let coeffs: Vec<BigInt> = orders
        .iter()
        .map(|&(j, m)| BigInt::from(j * (n / m)))
        .collect();
    Ok(lattice::kernel_mod(&coeffs, &BigInt::from(n)))
}

/// Canonical basis of all integer linear relations `sum m_i q_i = 0`.
pub fn additive_dependencies(x: &[Rat]) -> Vec<Vec<BigInt>> {
    if x.is_empty() {
        return Vec::new();
    }
    let d = x
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let row: Vec<BigInt> = x.iter().map(|q| (q * Rat::from_integer(d.clone())).to_integer()).collect();
    lattice::kernel_integer(&[row])
}

/// Which kind of dependency a freeness certificate names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DependencyKind {
    /// The combination `sum m_i q_i tau` is zero.
    Additive,
    /// The combination is a nonzero kernel element, so the product of
    /// exponentials `prod E(q_i tau)^(m_i)` collapses to 1.
    Multiplicative,
}

/// Outcome of a freeness test, with a violating exponent vector when the
/// tuple is not free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessReport {
    pub free: bool,
    pub certificate: Option<(DependencyKind, Vec<BigInt>)>,
}

#[derive(Serialize, Deserialize)]
struct FreenessRepr {
    free: bool,
    certificate: Option<(DependencyKind, Vec<String>)>,
}

impl Serialize for FreenessReport {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        FreenessRepr {
            free: self.free,
            certificate: self
                .certificate
                .as_ref()
                .map(|(k, v)| (*k, v.iter().map(|x| x.to_string()).collect())),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FreenessReport {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = FreenessRepr::deserialize(de)?;
        let certificate = match repr.certificate {
            None => None,
            Some((k, v)) => {
                let parsed = v
                    .iter()
                    .map(|s| s.parse::<BigInt>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(serde::de::Error::custom)?;
                Some((k, parsed))
            }
        };
        Ok(FreenessReport { free: repr.free, certificate })
    }
}

/// Tests whether a tuple from the kernel line is free of additive and
/// multiplicative dependencies: no nonzero integer vector `m` may satisfy
/// `sum m_i q_i in Z`. Any nonempty tuple fails, and the report carries a
/// concrete witness.
pub fn is_free_tuple(x: &[Rat]) -> FreenessReport {
    if x.is_empty() {
        return FreenessReport { free: true, certificate: None };
    }
    let additive = additive_dependencies(x);
    if let Some(m) = additive.first() {
        return FreenessReport {
            free: false,
            certificate: Some((DependencyKind::Additive, m.clone())),
        };
    }
    let d = x
        .iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let coeffs: Vec<BigInt> = x
        .iter()
        .map(|q| (q * Rat::from_integer(d.clone())).to_integer())
        .collect();
    let basis = lattice::kernel_mod(&coeffs, &d);
    let m = basis.first().expect("integer-sum lattice has full rank").clone();
    FreenessReport {
        free: false,
        certificate: Some((DependencyKind::Multiplicative, m)),
    }
}

/// Verdict of the involution dichotomy for the field obtained by adjoining
/// an algebraic constant `t` alongside `tau`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CkTauVerdict {
    /// Conjugation extends to an involution; the pointwise definable
    /// algebraic numbers are exactly the fixed field of that involution.
    InvolutionExtends { fixed_field: String },
    /// Only the identity automorphism exists; the pointwise definable
    /// elements are exactly the rational functions in `tau` over the
    /// abelian closure.
    OnlyTrivialAutomorphism { definable: String },
}

/// Decides whether conjugation extends to an involution after adjoining the
/// nonzero algebraic constant `t`: it does exactly when `conj(t) = -t`.
pub fn ck_tau_involution_test(t: &CycNum) -> Result<CkTauVerdict, ArithError> {
    if t.is_zero() {
        return Err(ArithError::ZeroArgument);
    }
    if t.conj() == t.neg() {
        Ok(CkTauVerdict::InvolutionExtends {
            fixed_field: "the fixed field of the extended involution".to_string(),
        })
    } else {
        Ok(CkTauVerdict::OnlyTrivialAutomorphism {
            definable: "every element of the tau-field over the abelian closure".to_string(),
        })
    }
}

/// Whether the orbit of `a` under the group generated by conjugation is a
/// singleton. Agrees with [`crate::rab::is_real_abelian`].
pub fn orbit_singleton(a: &CycNum) -> bool {
    let mut orbit: BTreeSet<CycNum> = BTreeSet::new();
    orbit.insert(a.clone());
    loop {
        let fresh: Vec<CycNum> = orbit
            .iter()
            .map(|x| x.conj())
            .filter(|x| !orbit.contains(x))
            .collect();
        if fresh.is_empty() {
            break;
        }
        orbit.extend(fresh);
    }
    orbit.len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rab::is_real_abelian;
    use crate::rat::rat;

    fn zeta(n: u64) -> CycNum {
        CycNum::root_of_unity(n, 1).unwrap()
    }

    fn ktau(num: i64, den: i64) -> SKElement {
        SKElement::tau().mul(&SKElement::from_rat(rat(num, den)))
    }

    #[test]
    fn field_arithmetic() {
        let tau = SKElement::tau();
        assert_eq!(tau.mul(&tau.inv().unwrap()), SKElement::one());
        let a = SKElement::from_cyc(zeta(4)).mul(&tau).add(&SKElement::one());
        let b = SKElement::from_cyc(zeta(4)).mul(&tau).neg();
        assert_eq!(a.add(&b), SKElement::one());
        let t2m1 = tau.mul(&tau).sub(&SKElement::one());
        let tm1 = tau.sub(&SKElement::one());
        let got = t2m1.inv().unwrap().mul(&tm1);
        let want = tau.add(&SKElement::one()).inv().unwrap();
        assert_eq!(got, want);
        assert!(SKElement::zero().inv().is_err());
    }

    #[test]
    fn kernel_multiples() {
        assert_eq!(SKElement::zero().as_kernel_multiple(), Some(rat(0, 1)));
        assert_eq!(SKElement::tau().as_kernel_multiple(), Some(rat(1, 1)));
        assert_eq!(ktau(-2, 3).as_kernel_multiple(), Some(rat(-2, 3)));
        assert_eq!(SKElement::one().as_kernel_multiple(), None);
        let zt = SKElement::from_cyc(zeta(4)).mul(&SKElement::tau());
        assert_eq!(zt.as_kernel_multiple(), None);
        let frac = SKElement::tau().div(&SKElement::tau().add(&SKElement::one())).unwrap();
        assert_eq!(frac.as_kernel_multiple(), None);
    }

    #[test]
    fn exponential_on_the_kernel_line() {
        assert_eq!(sk_e(&rat(0, 1)), CycNum::one());
        assert_eq!(sk_e(&rat(1, 1)), CycNum::one());
        assert_eq!(sk_e(&rat(1, 3)), zeta(3));
        assert_eq!(sk_e(&rat(-1, 4)), zeta(4).pow(3).unwrap());
        assert_eq!(sk_e(&rat(7, 2)), CycNum::from_i64(-1));
        for (a, b) in [(rat(1, 3), rat(1, 4)), (rat(-5, 6), rat(2, 3)), (rat(7, 2), rat(-1, 2))] {
            assert_eq!(sk_e(&(a.clone() + b.clone())), sk_e(&a).mul(&sk_e(&b)));
        }
    }

    #[test]
    fn sigma1_laws() {
        let tau = SKElement::tau();
        assert_eq!(tau.sigma1(), tau.neg());
        assert_eq!(SKElement::from_cyc(zeta(4)).sigma1(), SKElement::from_cyc(zeta(4).pow(3).unwrap()));
        let x = SKElement::from_cyc(zeta(8))
            .mul(&tau)
            .mul(&tau)
            .add(&SKElement::from_rat(rat(1, 2)));
        let want = SKElement::from_cyc(zeta(8).pow(7).unwrap())
            .mul(&tau)
            .mul(&tau)
            .add(&SKElement::from_rat(rat(1, 2)));
        assert_eq!(x.sigma1(), want);
        let y = tau.add(&SKElement::from_cyc(zeta(3))).inv().unwrap();
        assert_eq!(y.sigma1().sigma1(), y);
        let z = tau.mul(&tau).sub(&SKElement::from_cyc(zeta(5)));
        assert_eq!(y.add(&z).sigma1(), y.sigma1().add(&z.sigma1()));
        assert_eq!(y.mul(&z).sigma1(), y.sigma1().mul(&z.sigma1()));
        for q in [rat(1, 3), rat(-2, 5), rat(7, 4)] {
            assert_eq!(sk_e(&q).conj(), sk_e(&-q.clone()));
        }
    }

    #[test]
    fn predimension_vanishes() {
        assert_eq!(delta_sk(&[]), 0);
        assert_eq!(delta_sk(&[rat(1, 1)]), 0);
        assert_eq!(delta_sk(&[rat(1, 2), rat(1, 3)]), 0);
        assert_eq!(delta_sk(&[rat(0, 1)]), 0);
        assert_eq!(delta_sk(&[rat(0, 1), rat(5, 7), rat(-1, 2)]), 0);
    }

    #[test]
    fn multiplicative_lattices() {
        let k = multiplicative_dependencies(&[zeta(4), zeta(4)]).unwrap();
        let expected = [
            vec![BigInt::from(1), BigInt::from(-1)],
            vec![BigInt::from(4), BigInt::from(0)],
        ];
        assert!(lattice::same_lattice(&k, &expected));
        let k2 = multiplicative_dependencies(&[CycNum::from_i64(-1), zeta(3)]).unwrap();
        assert_eq!(
            k2,
            vec![
                vec![BigInt::from(2), BigInt::from(0)],
                vec![BigInt::from(0), BigInt::from(3)],
            ]
        );
        let k3 = multiplicative_dependencies(&[CycNum::one()]).unwrap();
        assert_eq!(k3, vec![vec![BigInt::from(1)]]);
        let sqrt2 = zeta(8).add(&zeta(8).conj());
        assert_eq!(
            multiplicative_dependencies(&[sqrt2]),
            Err(ArithError::NotRootOfUnity)
        );
    }

    #[test]
    fn additive_lattices() {
        let k = additive_dependencies(&[rat(1, 2), rat(1, 3)]);
        assert_eq!(k, vec![vec![BigInt::from(2), BigInt::from(-3)]]);
        assert!(additive_dependencies(&[rat(1, 1)]).is_empty());
        assert_eq!(additive_dependencies(&[rat(0, 1)]), vec![vec![BigInt::from(1)]]);
        assert!(additive_dependencies(&[]).is_empty());
    }

    #[test]
    fn freeness_certificates() {
        assert_eq!(
            is_free_tuple(&[]),
            FreenessReport { free: true, certificate: None }
        );
        let r = is_free_tuple(&[rat(1, 2)]);
        assert!(!r.free);
        assert_eq!(
            r.certificate,
            Some((DependencyKind::Multiplicative, vec![BigInt::from(2)]))
        );
        let r2 = is_free_tuple(&[rat(1, 2), rat(1, 3)]);
        assert!(!r2.free);
        let r3 = is_free_tuple(&[rat(1, 1), rat(-1, 1)]);
        assert_eq!(
            r3.certificate,
            Some((DependencyKind::Additive, vec![BigInt::from(1), BigInt::from(1)]))
        );
    }

    #[test]
    fn involution_dichotomy() {
        assert!(matches!(
            ck_tau_involution_test(&zeta(4)).unwrap(),
            CkTauVerdict::InvolutionExtends { .. }
        ));
        assert!(matches!(
            ck_tau_involution_test(&CycNum::one()).unwrap(),
            CkTauVerdict::OnlyTrivialAutomorphism { .. }
        ));
        assert!(matches!(
            ck_tau_involution_test(&zeta(3)).unwrap(),
            CkTauVerdict::OnlyTrivialAutomorphism { .. }
        ));
        assert_eq!(ck_tau_involution_test(&CycNum::zero()), Err(ArithError::ZeroArgument));
    }

    #[test]
    fn orbit_agreement() {
        assert!(!orbit_singleton(&zeta(4)));
        assert!(orbit_singleton(&zeta(8).add(&zeta(8).conj())));
        assert!(orbit_singleton(&CycNum::from_i64(5)));
        for a in [zeta(5), zeta(7).add(&zeta(7).conj()), zeta(3).scale(&rat(2, 7))] {
            assert_eq!(orbit_singleton(&a), is_real_abelian(&a));
        }
    }

    #[test]
    fn display_and_serde() {
        let tau = SKElement::tau();
        assert_eq!(tau.to_string(), "t");
        let x = SKElement::from_cyc(zeta(4)).mul(&tau).add(&SKElement::one());
        assert_eq!(x.to_string(), "z(4)*t + 1");
        let frac = tau.sub(&SKElement::one()).div(&tau.add(&SKElement::one())).unwrap();
        assert_eq!(frac.to_string(), "(t - 1)/(t + 1)");
        let json = serde_json::to_string(&tau).unwrap();
        assert_eq!(
            json,
            r#"{"num":[{"level":1,"coeffs":["0"]},{"level":1,"coeffs":["1"]}],"den":[{"level":1,"coeffs":["1"]}]}"#
        );
        let back: SKElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, tau);
        let reduced: SKElement = serde_json::from_str(
            r#"{"num":[{"level":1,"coeffs":["0"]},{"level":1,"coeffs":["2"]}],"den":[{"level":1,"coeffs":["2"]}]}"#,
        )
        .unwrap();
        assert_eq!(reduced, tau);
        assert!(serde_json::from_str::<SKElement>(r#"{"num":[],"den":[]}"#).is_err());
    }
}
