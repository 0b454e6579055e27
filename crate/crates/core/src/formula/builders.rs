//! Builders for the library of definitions: the integers, the rationals,
//! the kernel generators, cosine and sine graphs, pi, sqrt(2), and the
//! pointwise definition of an arbitrary real abelian number from its cosine
//! decomposition. Each builder returns the formula together with a witness
//! plan that makes it mechanically checkable.

use super::ast::{Formula, Term};
use super::macros::{cos_matrix, instantiate, sin_matrix, square_root_of_minus_one};
use super::witness::{WitnessPlan, WitnessValue};
use super::FormulaError;
use crate::cyclotomic::CycNum;
use crate::rab::CosDecomposition;
use crate::rat::{rat, rat_int, Rat};
use crate::sk::{sk_e, SKElement};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn sk(e: SKElement) -> WitnessValue {
    WitnessValue::Element(e)
}

/// The kernel element `(k/d) * tau`.
fn tau_multiple(k: i64, d: i64) -> SKElement {
    SKElement::tau().mul(&SKElement::from_rat(rat(k, d)))
}

/// Integer multiples of `tau`, the candidate pool for kernel-valued
/// existential variables.
fn kernel_pool(lo: i64, hi: i64) -> Vec<WitnessValue> {
    (lo..=hi).map(|k| sk(tau_multiple(k, 1))).collect()
}

/// Small rationals as model scalars, the candidate pool for integer-valued
/// existential variables.
fn integer_pool(bound: i64) -> Vec<WitnessValue> {
    (-bound..=bound).map(|k| sk(SKElement::from_rat(rat_int(k)))).collect()
}

fn zeta4() -> CycNum {
    CycNum::root_of_unity(4, 1).expect("4th root of unity")
}

/// The two square roots of -1 as symbolic elements, the pool and probe set
/// for the variable `j` of the trigonometric definitions.
fn j_pool() -> Vec<WitnessValue> {
    let i = zeta4();
    vec![sk(SKElement::from_cyc(i.clone())), sk(SKElement::from_cyc(i.pow(3).expect("cube")))]
}

/// The symbolic element playing the role of pi: `tau/(2*zeta4)`, the
/// element of the two-generator set whose half has sine 1.
pub fn pi_element() -> SKElement {
    SKElement::tau().mul(&SKElement::from_cyc(zeta4().scale(&rat(-1, 2))))
}

/// Candidate pool for the half-of-pi variable `h`.
fn half_pi_pool() -> Vec<WitnessValue> {
    let half = SKElement::from_rat(rat(1, 2));
    let p = pi_element();
    vec![sk(p.mul(&half)), sk(p.neg().mul(&half))]
}

/// The universal definition of the integers:
/// `forall x (E(x) = 1 -> E(y*x) = 1)`, in the free variable `y`.
pub fn def_int_forall() -> (Formula, WitnessPlan) {
    let f = Formula::forall(
        "x",
        Formula::implies(
            Formula::eq(Term::exp(Term::var("x")), Term::One),
            Formula::eq(Term::exp(Term::mul(Term::var("y"), Term::var("x"))), Term::One),
        ),
    );
    (f, WitnessPlan::new())
}

/// The existential definition of the rationals:
/// `exists z, w in Ker (z = w*y)`, in the free variable `y`. The candidate
/// pools range over integer multiples of the kernel generator; the nonzero
/// pool for `w` reflects that a zero multiplier witnesses nothing.
pub fn def_rat_exists() -> (Formula, WitnessPlan) {
    let f = instantiate("Rat", &[Term::var("y")]);
    let plan = WitnessPlan::new()
        .with_witnesses("z", kernel_pool(-12, 12))
        .with_witnesses("w", nonzero_kernel_pool(12));
    (f, plan)
}

fn nonzero_kernel_pool(hi: i64) -> Vec<WitnessValue> {
    (1..=hi).map(|k| sk(tau_multiple(k, 1))).collect()
}

/// The existential definition of the integers, valid in models where 2 has
/// a logarithm: `exists t (E(t) = 2 and E(x*t) in Q and x in Q)`, in the
/// free variable `x`. The witness for `t` exists only numerically.
pub fn def_int_laczkovich() -> (Formula, WitnessPlan) {
    let f = instantiate("IntL", &[Term::var("x")]);
    let plan = WitnessPlan::new()
        .with_witnesses("t", vec![WitnessValue::LogTwo])
        .with_witnesses("z", kernel_pool(-12, 12))
        .with_witnesses("w", nonzero_kernel_pool(12));
    (f, plan)
}

/// Which definition of the integers the kernel-generator definition leans
/// on: the universal one, or the existential one that needs a logarithm of
/// a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelGeneratorVariant {
    General,
    PrimeLog,
}

/// The definition of the two kernel generators:
/// `Ker(x) and forall y (Ker(y) -> exists n (n integral and n*x = y))`, in
/// the free variable `x`. The `General` variant uses the universal integer
/// definition and has alternation forall-exists-forall; the `PrimeLog`
/// variant substitutes the existential integer definition and drops to
/// forall-exists.
pub fn def_kernel_generators(variant: KernelGeneratorVariant) -> (Formula, WitnessPlan) {
    let int_name = match variant {
        KernelGeneratorVariant::General => "Int",
        KernelGeneratorVariant::PrimeLog => "IntL",
    };
    let f = Formula::and(
        Formula::pred("Ker", vec![Term::var("x")]),
        Formula::forall(
            "y",
            Formula::implies(
                Formula::pred("Ker", vec![Term::var("y")]),
                Formula::exists(
                    "n",
                    Formula::and(
                        Formula::pred(int_name, vec![Term::var("n")]),
                        Formula::eq(Term::mul(Term::var("n"), Term::var("x")), Term::var("y")),
                    ),
                ),
            ),
        ),
    );
    let mut plan = WitnessPlan::new().with_witnesses("n", integer_pool(3));
    if variant == KernelGeneratorVariant::PrimeLog {
        plan = plan
            .with_witnesses("t", vec![WitnessValue::LogTwo])
            .with_witnesses("z", kernel_pool(-12, 12))
            .with_witnesses("w", nonzero_kernel_pool(12));
    }
    (f, plan)
}

/// Whether a trigonometric graph definition quantifies its square root of
/// -1 existentially or universally. Both define the same graph; the
/// existential form is the default for composition because its witness plan
/// stays total.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigVariant {
    ExistsJ,
    ForallJ,
}

/// The graph of cosine in the free variables `x, y`:
/// `y = (E(jx) + E(-jx))/2` over a square root `j` of -1, with the scalar
/// cleared to `2*y = E(j*x) + E(-(j*x))`.
pub fn def_cos(variant: TrigVariant) -> (Formula, WitnessPlan) {
    match variant {
        TrigVariant::ExistsJ => {
            let f = instantiate("Cos", &[Term::var("x"), Term::var("y")]);
            (f, WitnessPlan::new().with_witnesses("j", j_pool()))
        }
        TrigVariant::ForallJ => {
            let f = Formula::forall(
                "j",
                Formula::implies(square_root_of_minus_one("j"), cos_matrix()),
            );
            (f, WitnessPlan::new().with_probes("j", j_pool()))
        }
    }
}

/// The graph of sine in the free variables `x, y`:
/// `y = (E(jx) - E(-jx))/(2j)`, cleared to `2*(j*y) = E(j*x) - E(-(j*x))`.
pub fn def_sin(variant: TrigVariant) -> (Formula, WitnessPlan) {
    match variant {
        TrigVariant::ExistsJ => {
            let f = instantiate("Sin", &[Term::var("x"), Term::var("y")]);
            (f, WitnessPlan::new().with_witnesses("j", j_pool()))
        }
        TrigVariant::ForallJ => {
            let f = Formula::forall(
                "j",
                Formula::implies(square_root_of_minus_one("j"), sin_matrix()),
            );
            (f, WitnessPlan::new().with_probes("j", j_pool()))
        }
    }
}

/// The definition of pi in the free variable `p`: `p` is a kernel generator
/// divided by `2j`, signed so that `sin(p/2) = 1`. The symbolic witness is
/// [`pi_element`].
pub fn def_pi() -> (Formula, WitnessPlan) {
    let f = instantiate("Pi", &[Term::var("p")]);
    let plan = WitnessPlan::new()
        .with_witnesses("u", vec![sk(SKElement::tau()), sk(SKElement::tau().neg())])
        .with_witnesses("j", j_pool())
        .with_witnesses("h", half_pi_pool())
        .with_witnesses("n", integer_pool(3));
    (f, plan)
}

/// The definition separating `+sqrt(2)` from its conjugate:
/// `x = 2*cos(pi/4)`, built as the pointwise definition of the cosine
/// decomposition `2*cos(2*pi/8)`.
pub fn def_sqrt2() -> (Formula, WitnessPlan) {
    let d = CosDecomposition {
        constant: rat_int(0),
        terms: vec![crate::rab::CosTerm { coeff: rat_int(2), angle: rat(1, 8) }],
    };
    def_real_abelian(&d).expect("the decomposition of sqrt(2) is valid")
}

/// The pointwise definition of the real abelian number
/// `constant + sum_n coeff_n * cos(2 pi angle_n)` in the free variable `x`.
///
/// For each term an angle variable `a_n` is pinned by `q_n * a_n = 2 p_n *
/// p` against the pi variable `p` (where `angle_n = p_n/q_n` in lowest
/// terms), its cosine is named `c_n`, and the defining linear equation is
/// emitted with all denominators cleared. The witness plan carries the
/// exact symbolic value of every auxiliary variable. A decomposition with
/// no cosine terms yields the quantifier-free equation alone.
pub fn def_real_abelian(d: &CosDecomposition) -> Result<(Formula, WitnessPlan), FormulaError> {
    for t in &d.terms {
        if t.coeff.is_zero() {
            return Err(FormulaError::InvalidDecomposition(
                "zero coefficient on a cosine term".to_string(),
            ));
        }
        if !t.angle.is_positive() || t.angle > rat(1, 2) {
            return Err(FormulaError::InvalidDecomposition(format!(
                "angle {} outside (0, 1/2]",
                t.angle
            )));
        }
    }

    // Least common denominator of the linear equation's coefficients.
    let mut l = d.constant.denom().clone();
    for t in &d.terms {
        l = l.lcm(t.coeff.denom());
    }
    let l_rat = Rat::from_integer(l.clone());

    let lhs = scalar_times(&l_rat, Term::var("x"));
    let mut rhs_parts: Vec<Term> = Vec::new();
    let c0 = &d.constant * &l_rat;
    if !c0.is_zero() || d.terms.is_empty() {
        rhs_parts.push(Term::rat(c0));
    }
    for (i, t) in d.terms.iter().enumerate() {
        let coeff = &t.coeff * &l_rat;
        rhs_parts.push(scalar_times(&coeff, Term::var(format!("c{}", i + 1))));
    }
    let rhs = rhs_parts
        .into_iter()
        .reduce(Term::add)
        .unwrap_or(Term::Zero);
    let linear = Formula::eq(lhs, rhs);

    if d.terms.is_empty() {
        return Ok((linear, WitnessPlan::new()));
    }

    // Wrap the linear equation in the cosine constraints, innermost first.
    let mut core = linear;
    let mut plan = WitnessPlan::new()
        .with_witnesses("p", vec![sk(pi_element())])
        .with_witnesses("u", vec![sk(SKElement::tau()), sk(SKElement::tau().neg())])
        .with_witnesses("j", j_pool())
        .with_witnesses("h", half_pi_pool())
        .with_witnesses("n", integer_pool(3));
    for (i, t) in d.terms.iter().enumerate().rev() {
        let a = format!("a{}", i + 1);
        let c = format!("c{}", i + 1);
        let p_n = t.angle.numer().clone();
        let q_n = t.angle.denom().clone();
        let angle_eq = Formula::eq(
            scalar_times(&Rat::from_integer(q_n), Term::var(a.clone())),
            scalar_times(&Rat::from_integer(p_n * BigInt::from(2)), Term::var("p")),
        );
        let cos = Formula::pred("Cos", vec![Term::var(a.clone()), Term::var(c.clone())]);
        core = Formula::exists(
            a.clone(),
            Formula::exists(c.clone(), Formula::and(Formula::and(angle_eq, cos), core)),
        );
        // Exact symbolic witnesses: the angle is 2*pi*angle_n and its
        // cosine is the corresponding half-sum of roots of unity.
        let two_s = &t.angle * Rat::from_integer(BigInt::from(2));
        let angle_value = pi_element().mul(&SKElement::from_rat(two_s));
        let cos_cyc = sk_e(&t.angle).add(&sk_e(&t.angle).conj()).scale(&rat(1, 2));
        plan = plan
            .with_witnesses(a, vec![sk(angle_value)])
            .with_witnesses(c, vec![sk(SKElement::from_cyc(cos_cyc))]);
    }
    let f = Formula::exists(
        "p",
        Formula::and(Formula::pred("Pi", vec![Term::var("p")]), core),
    );
    Ok((f, plan))
}

/// `r * t` with a unit coefficient elided; `r` must be integral by the time
/// the formula is desugared, which the callers arrange by denominator
/// clearing.
fn scalar_times(r: &Rat, t: Term) -> Term {
    if r.is_one() {
        t
    } else {
        Term::mul(Term::rat(r.clone()), t)
    }
}
