//! Formula transformations: desugaring of rational scalars by denominator
//! clearing, prenex normal form, and the quantifier-complexity measure.

use super::ast::{Formula, NameSupply, Term};
use super::macros::{expand_macros, freshen_bound};
use super::FormulaError;
use crate::rat::{is_integer, Rat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// Eliminates every rational-constant node. Integer constants become
/// balanced trees of `1`s; a fractional constant is removed by multiplying
/// both sides of its enclosing equation by the least common denominator.
/// Fails when a fractional constant sits under `E` (scaling the equation
/// cannot reach it) or inside a product whose other factor also carries
/// fractional constants.
pub fn desugar(f: &Formula) -> Result<Formula, FormulaError> {
    Ok(match f {
        Formula::Eq(s, t) => clear_equation(s, t)?,
        Formula::Pred(name, args) => {
            let args = args.iter().map(int_trees).collect::<Result<Vec<_>, _>>()?;
            Formula::Pred(name.clone(), args)
        }
        Formula::Not(a) => Formula::not(desugar(a)?),
        Formula::And(a, b) => Formula::and(desugar(a)?, desugar(b)?),
        Formula::Or(a, b) => Formula::or(desugar(a)?, desugar(b)?),
        Formula::Implies(a, b) => Formula::implies(desugar(a)?, desugar(b)?),
        Formula::Exists(v, body) => Formula::exists(v.clone(), desugar(body)?),
        Formula::Forall(v, body) => Formula::forall(v.clone(), desugar(body)?),
    })
}

fn clear_equation(s: &Term, t: &Term) -> Result<Formula, FormulaError> {
    let mut dens = Vec::new();
    let mut blocked = false;
    s.scan_denominators(false, &mut dens, &mut blocked);
    t.scan_denominators(false, &mut dens, &mut blocked);
    if blocked {
        return Err(FormulaError::ScalarUnderExp);
    }
    let mut l = BigInt::one();
    for d in &dens {
        l = l.lcm(d);
    }
    let (s, t) = if l.is_one() {
        (s.clone(), t.clone())
    } else {
        (scale_term(s, &l)?, scale_term(t, &l)?)
    };
    Ok(Formula::Eq(int_trees(&s)?, int_trees(&t)?))
}

fn contains_fractional(t: &Term) -> bool {
    let mut dens = Vec::new();
    let mut blocked = false;
    t.scan_denominators(false, &mut dens, &mut blocked);
    !dens.is_empty()
}

/// Multiplies the term by the integer `l`, pushing the factor into scalar
/// positions so that every fractional constant becomes integral.
fn scale_term(t: &Term, l: &BigInt) -> Result<Term, FormulaError> {
    Ok(match t {
        Term::Zero => Term::Zero,
        Term::One => Term::RatConst(Rat::from_integer(l.clone())),
        Term::RatConst(r) => Term::RatConst(r * Rat::from_integer(l.clone())),
        Term::Neg(a) => Term::neg(scale_term(a, l)?),
        Term::Add(a, b) => Term::add(scale_term(a, l)?, scale_term(b, l)?),
        Term::Mul(a, b) => {
            let a_frac = contains_fractional(a);
            let b_frac = contains_fractional(b);
            if a_frac && b_frac {
                return Err(FormulaError::UnclearableScalar);
            }
            if a_frac {
                Term::mul(scale_term(a, l)?, (**b).clone())
            } else {
                Term::mul((**a).clone(), scale_term(b, l)?)
            }
        }
        Term::Var(_) | Term::Exp(_) => {
            Term::mul(Term::RatConst(Rat::from_integer(l.clone())), t.clone())
        }
    })
}

/// Replaces every integral rational constant by its tree of `1`s; fails on
/// a fractional constant, which `scale_term` should have removed.
fn int_trees(t: &Term) -> Result<Term, FormulaError> {
    Ok(match t {
        Term::Zero | Term::One | Term::Var(_) => t.clone(),
        Term::RatConst(r) => {
            if !is_integer(r) {
                return Err(FormulaError::UnclearableScalar);
            }
            Term::int_tree(r.numer())
        }
        Term::Neg(a) => Term::neg(int_trees(a)?),
        Term::Exp(a) => Term::exp(int_trees(a)?),
        Term::Add(a, b) => Term::add(int_trees(a)?, int_trees(b)?),
        Term::Mul(a, b) => Term::mul(int_trees(a)?, int_trees(b)?),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Quant {
    Forall,
    Exists,
}

impl Quant {
    fn flip(self) -> Self {
        match self {
            Quant::Forall => Quant::Exists,
            Quant::Exists => Quant::Forall,
        }
    }

    fn glyph(self) -> char {
        match self {
            Quant::Forall => '\u{2200}',
            Quant::Exists => '\u{2203}',
        }
    }
}

/// Prenex normal form of the macro-expanded, desugared formula: all bound
/// variables are first renamed apart, then quantifiers are pulled to an
/// outer prefix, flipping under negation and on the left of implications.
/// Deterministic; preserves the free-variable set.
pub fn prenex(f: &Formula) -> Result<Formula, FormulaError> {
    let desugared = desugar(&expand_macros(f))?;
    let mut supply = NameSupply::avoiding(&desugared);
    let apart = freshen_bound(&desugared, &mut supply);
    let (prefix, matrix) = pull_quantifiers(&apart);
    let mut out = matrix;
    for (q, v) in prefix.into_iter().rev() {
        out = match q {
            Quant::Forall => Formula::forall(v, out),
            Quant::Exists => Formula::exists(v, out),
        };
    }
    Ok(out)
}

fn pull_quantifiers(f: &Formula) -> (Vec<(Quant, String)>, Formula) {
    match f {
        Formula::Eq(_, _) | Formula::Pred(_, _) => (Vec::new(), f.clone()),
        Formula::Not(a) => {
            let (p, m) = pull_quantifiers(a);
            (p.into_iter().map(|(q, v)| (q.flip(), v)).collect(), Formula::not(m))
        }
        Formula::And(a, b) => {
            let (mut pa, ma) = pull_quantifiers(a);
            let (pb, mb) = pull_quantifiers(b);
            pa.extend(pb);
            (pa, Formula::and(ma, mb))
        }
        Formula::Or(a, b) => {
            let (mut pa, ma) = pull_quantifiers(a);
            let (pb, mb) = pull_quantifiers(b);
            pa.extend(pb);
            (pa, Formula::or(ma, mb))
        }
        Formula::Implies(a, b) => {
            let (pa, ma) = pull_quantifiers(a);
            let (pb, mb) = pull_quantifiers(b);
            let mut p: Vec<(Quant, String)> =
                pa.into_iter().map(|(q, v)| (q.flip(), v)).collect();
            p.extend(pb);
            (p, Formula::implies(ma, mb))
        }
        Formula::Exists(v, body) => {
            let (mut p, m) = pull_quantifiers(body);
            p.insert(0, (Quant::Exists, v.clone()));
            (p, m)
        }
        Formula::Forall(v, body) => {
            let (mut p, m) = pull_quantifiers(body);
            p.insert(0, (Quant::Forall, v.clone()));
            (p, m)
        }
    }
}

/// The alternation word of the formula's prenex prefix, with runs of equal
/// quantifiers collapsed to a single symbol: `"\u{2200}\u{2203}\u{2200}"`
/// and the like, or the empty string for a quantifier-free formula.
pub fn quantifier_complexity(f: &Formula) -> Result<String, FormulaError> {
    let p = prenex(f)?;
    let mut word = String::new();
    let mut last: Option<Quant> = None;
    let mut cur = &p;
    loop {
        let q = match cur {
            Formula::Forall(_, body) => {
                cur = body;
                Quant::Forall
            }
            Formula::Exists(_, body) => {
                cur = body;
                Quant::Exists
            }
            _ => break,
        };
        if last != Some(q) {
            word.push(q.glyph());
            last = Some(q);
        }
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn desugar_eliminates_rational_constants() {
        // (1/2)*x = 3 becomes x = 3+3 after clearing the denominator.
        let f = Formula::eq(Term::mul(Term::rat(rat(1, 2)), Term::var("x")), Term::int(3));
        let g = desugar(&f).unwrap();
        assert!(g.is_desugared());
        match &g {
            Formula::Eq(lhs, rhs) => {
                assert_eq!(lhs, &Term::mul(Term::One, Term::var("x")));
                let mut vars = std::collections::BTreeSet::new();
                rhs.free_vars(&mut vars);
                assert!(vars.is_empty());
            }
            other => panic!("unexpected shape {other:?}"),
        }
    }

    #[test]
    fn desugar_rejects_fractions_under_exp() {
        let f = Formula::eq(Term::exp(Term::mul(Term::rat(rat(1, 2)), Term::var("x"))), Term::One);
        assert!(matches!(desugar(&f), Err(FormulaError::ScalarUnderExp)));
    }

    #[test]
    fn desugar_rejects_fractions_in_both_factors() {
        let f = Formula::eq(
            Term::mul(
                Term::mul(Term::rat(rat(1, 2)), Term::var("x")),
                Term::mul(Term::rat(rat(1, 3)), Term::var("y")),
            ),
            Term::Zero,
        );
        assert!(matches!(desugar(&f), Err(FormulaError::UnclearableScalar)));
    }

    #[test]
    fn prenex_pulls_and_flips_quantifiers() {
        // forall x forall y exists z (x = z) -> complexity collapses to two
        // symbols.
        let f = Formula::forall(
            "x",
            Formula::forall(
                "y",
                Formula::exists("z", Formula::eq(Term::var("x"), Term::var("z"))),
            ),
        );
        assert_eq!(quantifier_complexity(&f).unwrap(), "\u{2200}\u{2203}");

        // A universal on the left of an implication flips to existential.
        let g = Formula::implies(
            Formula::forall("x", Formula::eq(Term::var("x"), Term::Zero)),
            Formula::eq(Term::var("y"), Term::Zero),
        );
        let p = prenex(&g).unwrap();
        assert!(matches!(p, Formula::Exists(_, _)));
    }

    #[test]
    fn prenex_preserves_free_variables() {
        let f = Formula::and(
            Formula::pred("TauSet", vec![Term::var("x")]),
            Formula::pred("Rat", vec![Term::var("r")]),
        );
        let p = prenex(&f).unwrap();
        assert_eq!(f.free_vars(), p.free_vars());
        assert!(p.is_macro_free());
        assert!(p.is_desugared());
    }

    #[test]
    fn quantifier_free_formulas_have_empty_complexity() {
        let f = Formula::eq(Term::var("x"), Term::One);
        assert_eq!(quantifier_complexity(&f).unwrap(), "");
    }
}
