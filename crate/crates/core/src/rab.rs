//! Certification of real abelian numbers: membership tests, projection onto
//! the real subfield, exact decomposition into rational cosine combinations,
//! and total-reality checks by Sturm counting.

use crate::cyclotomic::CycNum;
use crate::error::ArithError;
use crate::lattice;
use crate::nt::phi;
use crate::poly::{sturm_count, Bound};
use crate::rat::{rat, Rat};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Whether the number is real. Every value of [`CycNum`] lies in an abelian
/// extension of the rationals, so this decides membership in the real
/// abelian numbers.
pub fn is_real_abelian(x: &CycNum) -> bool {
    x.is_real()
}

/// The projection `(x + conj(x)) / 2` onto the real subfield.
pub fn rab_projection(x: &CycNum) -> CycNum {
    x.add(&x.conj()).scale(&rat(1, 2))
}

/// One term `coeff * cos(2 pi angle)` of a cosine decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosTerm {
    #[serde(with = "crate::rat::serde_rat")]
    pub coeff: Rat,
    #[serde(with = "crate::rat::serde_rat")]
    pub angle: Rat,
}

/// An exact presentation `constant + sum coeff_i * cos(2 pi angle_i)` of a
/// real abelian number, with rational coefficients and angles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosDecomposition {
    #[serde(with = "crate::rat::serde_rat")]
    pub constant: Rat,
    pub terms: Vec<CosTerm>,
}

impl fmt::Display for CosDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use crate::rat::rat_to_string;
        write!(f, "{}", rat_to_string(&self.constant))?;
        for t in &self.terms {
            write!(f, " + {}*cos(2*pi*{})", rat_to_string(&t.coeff), rat_to_string(&t.angle))?;
        }
        Ok(())
    }
}

/// Writes a real abelian number as a rational combination of cosines of
/// rational angles, by greedy expansion over the cosine basis of the real
/// subfield at the number's level.
pub fn cos_decomposition(x: &CycNum) -> Result<CosDecomposition, ArithError> {
    if !is_real_abelian(x) {
        return Err(ArithError::NotRealAbelian);
    }
    let n = x.level();
    if n == 1 {
        return Ok(CosDecomposition {
            constant: x.to_rat().expect("level 1 is rational"),
            terms: Vec::new(),
        });
    }
    let dim = (phi(n) / 2) as usize;
    let rows = phi(n) as usize;
    let mut one = vec![Rat::zero(); rows];
    one[0] = Rat::one();
    let mut basis: Vec<Vec<Rat>> = vec![one];
    let mut angles: Vec<Rat> = Vec::new();
    let mut j = 1;
    while basis.len() < dim {
        assert!(j <= n / 2, "cosine basis must span the real subfield");
        let zj = CycNum::root_of_unity(n, j as i64).expect("positive level");
        let v: Vec<Rat> = zj.add(&zj.conj()).coords_at_level(n)?;
        let a: Vec<Vec<Rat>> = (0..rows)
            .map(|r| basis.iter().map(|b| b[r].clone()).collect())
            .collect();
        if lattice::solve(&a, &v).is_none() {
            basis.push(v);
            angles.push(rat(j as i64, n as i64));
        }
        j += 1;
    }
    let a: Vec<Vec<Rat>> = (0..rows)
        .map(|r| basis.iter().map(|b| b[r].clone()).collect())
        .collect();
    let c = lattice::solve(&a, x.coeffs()).expect("real element lies in the cosine span");
    let terms = angles
        .iter()
        .zip(&c[1..])
        .filter(|(_, ci)| !ci.is_zero())
        .map(|(angle, ci)| CosTerm { coeff: ci * rat(2, 1), angle: angle.clone() })
        .collect();
    Ok(CosDecomposition { constant: c[0].clone(), terms })
}

/// Evaluates a cosine decomposition back to an exact number.
pub fn reconstruct(d: &CosDecomposition) -> CycNum {
    let mut acc = CycNum::from_rat(d.constant.clone());
    for t in &d.terms {
        let q = t.angle.denom().clone();
        let p = t.angle.numer().clone();
        let q_u64 = u64::try_from(q).expect("angle denominator fits u64");
        let p_i64 = i64::try_from(p).expect("angle numerator fits i64");
        let z = CycNum::root_of_unity(q_u64, p_i64).expect("positive level");
        let cos = z.add(&z.conj()).scale(&rat(1, 2));
        acc = acc.add(&cos.scale(&t.coeff));
    }
    acc
}

/// Whether all conjugates of the number are real, decided exactly by Sturm
/// counting on the minimal polynomial.
pub fn is_totally_real(x: &CycNum) -> bool {
    let f = x.minpoly();
    let d = f.degree().expect("minimal polynomial is nonconstant");
    sturm_count(&f, &Bound::NegInf, &Bound::PosInf).expect("minimal polynomial is nonzero") == d
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zeta(n: u64) -> CycNum {
        CycNum::root_of_unity(n, 1).unwrap()
    }

    fn ct(coeff: Rat, angle: Rat) -> CosTerm {
        CosTerm { coeff, angle }
    }

    #[test]
    fn reality_and_projection() {
        assert!(is_real_abelian(&CycNum::from_rat(rat(7, 3))));
        assert!(is_real_abelian(&zeta(8).add(&zeta(8).conj())));
        assert!(!is_real_abelian(&zeta(4)));
        assert!(!is_real_abelian(&zeta(5)));
        let p = rab_projection(&zeta(5));
        assert!(is_real_abelian(&p));
        assert_eq!(p, zeta(5).add(&zeta(5).pow(4).unwrap()).scale(&rat(1, 2)));
        assert_eq!(rab_projection(&p), p);
    }

    #[test]
    fn decomposition_examples() {
        let golden = zeta(5).add(&zeta(5).pow(4).unwrap());
        let d = cos_decomposition(&golden).unwrap();
        assert_eq!(d.constant, rat(0, 1));
        assert_eq!(d.terms, vec![ct(rat(2, 1), rat(1, 5))]);

        let sqrt2 = zeta(8).add(&zeta(8).pow(-1).unwrap());
        let d = cos_decomposition(&sqrt2).unwrap();
        assert_eq!(d.constant, rat(0, 1));
        assert_eq!(d.terms, vec![ct(rat(2, 1), rat(1, 8))]);

        let r = CycNum::from_rat(rat(7, 3));
        let d = cos_decomposition(&r).unwrap();
        assert_eq!(d.constant, rat(7, 3));
        assert!(d.terms.is_empty());

        let x = CycNum::one().add(&zeta(12)).add(&zeta(12).pow(-1).unwrap());
        let d = cos_decomposition(&x).unwrap();
        assert_eq!(d.constant, rat(1, 1));
        assert_eq!(d.terms, vec![ct(rat(2, 1), rat(1, 12))]);

        assert_eq!(cos_decomposition(&zeta(4)), Err(ArithError::NotRealAbelian));
    }

    #[test]
    fn decomposition_round_trips() {
        let samples = [
            zeta(7).add(&zeta(7).conj()).add(&CycNum::from_i64(3)),
            zeta(15).add(&zeta(15).conj()).scale(&rat(-5, 4)),
            rab_projection(&zeta(9)).add(&rab_projection(&zeta(5).pow(2).unwrap())),
            zeta(16).add(&zeta(16).conj()),
            CycNum::zero(),
        ];
        for x in &samples {
            let d = cos_decomposition(x).unwrap();
            assert_eq!(&reconstruct(&d), x, "round trip failed for {x}");
        }
    }

    #[test]
    fn totally_real_checks() {
        assert!(is_totally_real(&CycNum::from_i64(5)));
        assert!(is_totally_real(&zeta(8).add(&zeta(8).conj())));
        assert!(is_totally_real(&zeta(5).add(&zeta(5).pow(4).unwrap())));
        assert!(is_totally_real(&zeta(7).add(&zeta(7).conj())));
        assert!(!is_totally_real(&zeta(4)));
        assert!(!is_totally_real(&zeta(3)));
        assert!(!is_totally_real(&zeta(5)));
    }

    #[test]
    fn decomposition_serde() {
        let sqrt2 = zeta(8).add(&zeta(8).pow(-1).unwrap());
        let d = cos_decomposition(&sqrt2).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(json, r#"{"constant":"0","terms":[{"coeff":"2","angle":"1/8"}]}"#);
        let back: CosDecomposition = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn display_reads_as_cosines() {
        let x = CycNum::one().add(&zeta(12)).add(&zeta(12).pow(-1).unwrap());
        let d = cos_decomposition(&x).unwrap();
        assert_eq!(d.to_string(), "1 + 2*cos(2*pi*1/12)");
    }
}
