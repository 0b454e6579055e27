//! Named defined predicates (`Ker`, `Int`, `IntL`, `Rat`, `TauSet`, `Cos`,
//! `Sin`, `Pi`) and hygienic macro expansion into the core language.

use super::ast::{Formula, NameSupply, Term};
use once_cell::sync::Lazy;
use std::collections::BTreeSet;

/// A named predicate abbreviation: a formula body whose free variables are
/// exactly the listed parameters. Expansion substitutes argument terms for
/// the parameters after renaming every bound variable of the body apart.
#[derive(Clone, Debug)]
pub struct DefinedPredicate {
    pub name: String,
    pub params: Vec<String>,
    pub body: Formula,
}

impl DefinedPredicate {
    pub fn arity(&self) -> usize {
        self.params.len()
    }

    fn new(name: &str, params: &[&str], body: Formula) -> Self {
        let def = DefinedPredicate {
            name: name.to_string(),
            params: params.iter().map(|p| p.to_string()).collect(),
            body,
        };
        let free = def.body.free_vars();
        let declared: BTreeSet<String> = def.params.iter().cloned().collect();
        assert_eq!(free, declared, "body free variables must match parameters for {name}");
        def
    }
}

fn v(name: &str) -> Term {
    Term::var(name)
}

/// `Ker(x)`: membership in the kernel of `E`, i.e. `E(x) = 1`.
fn ker() -> DefinedPredicate {
    DefinedPredicate::new("Ker", &["x"], Formula::eq(Term::exp(v("x")), Term::One))
}

/// `Int(y)`: the integers by the universal kernel-stabiliser property,
/// `forall x (Ker(x) -> Ker(y*x))`.
fn int() -> DefinedPredicate {
    DefinedPredicate::new(
        "Int",
        &["y"],
        Formula::forall(
            "x",
            Formula::implies(
                Formula::pred("Ker", vec![v("x")]),
                Formula::pred("Ker", vec![Term::mul(v("y"), v("x"))]),
            ),
        ),
    )
}

/// `Rat(y)`: the rationals as kernel ratios,
/// `exists z, w in Ker with z = w*y`.
fn rat_pred() -> DefinedPredicate {
    DefinedPredicate::new(
        "Rat",
        &["y"],
        Formula::exists(
            "z",
            Formula::exists(
                "w",
                Formula::and(
                    Formula::and(
                        Formula::pred("Ker", vec![v("z")]),
                        Formula::pred("Ker", vec![v("w")]),
                    ),
                    Formula::eq(v("z"), Term::mul(v("w"), v("y"))),
                ),
            ),
        ),
    )
}

/// `IntL(x)`: the integers by an existential definition, valid whenever 2
/// has a logarithm: `exists t (E(t) = 2 and E(x*t) in Q and x in Q)`.
fn int_laczkovich() -> DefinedPredicate {
    DefinedPredicate::new(
        "IntL",
        &["x"],
        Formula::exists(
            "t",
            Formula::and(
                Formula::and(
                    Formula::eq(Term::exp(v("t")), Term::int(2)),
                    Formula::pred("Rat", vec![Term::exp(Term::mul(v("x"), v("t")))]),
                ),
                Formula::pred("Rat", vec![v("x")]),
            ),
        ),
    )
}

/// `TauSet(x)`: the two kernel generators,
/// `Ker(x) and forall y (Ker(y) -> exists n (Int(n) and n*x = y))`.
fn tau_set() -> DefinedPredicate {
    DefinedPredicate::new(
        "TauSet",
        &["x"],
        Formula::and(
            Formula::pred("Ker", vec![v("x")]),
            Formula::forall(
                "y",
                Formula::implies(
                    Formula::pred("Ker", vec![v("y")]),
                    Formula::exists(
                        "n",
                        Formula::and(
                            Formula::pred("Int", vec![v("n")]),
                            Formula::eq(Term::mul(v("n"), v("x")), v("y")),
                        ),
                    ),
                ),
            ),
        ),
    )
}

/// The shared matrix of the cosine definitions: `2*y = E(j*x) + E(-(j*x))`,
/// the denominator-cleared form of `y = (E(jx) + E(-jx))/2`.
pub(crate) fn cos_matrix() -> Formula {
    Formula::eq(
        Term::mul(Term::int(2), v("y")),
        Term::add(
            Term::exp(Term::mul(v("j"), v("x"))),
            Term::exp(Term::neg(Term::mul(v("j"), v("x")))),
        ),
    )
}

/// The shared matrix of the sine definitions: `2*(j*y) = E(j*x) - E(-(j*x))`,
/// the denominator-cleared form of `y = (E(jx) - E(-jx))/(2j)`.
pub(crate) fn sin_matrix() -> Formula {
    Formula::eq(
        Term::mul(Term::int(2), Term::mul(v("j"), v("y"))),
        Term::sub(
            Term::exp(Term::mul(v("j"), v("x"))),
            Term::exp(Term::neg(Term::mul(v("j"), v("x")))),
        ),
    )
}

pub(crate) fn square_root_of_minus_one(j: &str) -> Formula {
    Formula::eq(Term::mul(v(j), v(j)), Term::neg(Term::One))
}

/// `Cos(x, y)`: the graph of cosine, `exists j (j*j = -1 and 2*y = E(j*x) +
/// E(-(j*x)))`.
fn cos_pred() -> DefinedPredicate {
    DefinedPredicate::new(
        "Cos",
        &["x", "y"],
        Formula::exists("j", Formula::and(square_root_of_minus_one("j"), cos_matrix())),
    )
}

/// `Sin(x, y)`: the graph of sine, `exists j (j*j = -1 and 2*(j*y) = E(j*x)
/// - E(-(j*x)))`.
fn sin_pred() -> DefinedPredicate {
    DefinedPredicate::new(
        "Sin",
        &["x", "y"],
        Formula::exists("j", Formula::and(square_root_of_minus_one("j"), sin_matrix())),
    )
}

/// `Pi(x)`: `x` is the kernel generator divided by `2j`, signed so that
/// `sin(x/2) = 1`: `exists u (TauSet(u) and exists j (j*j = -1 and 2*(j*x) =
/// u) and exists h (2*h = x and Sin(h, 1)))`.
fn pi_pred() -> DefinedPredicate {
    DefinedPredicate::new(
        "Pi",
        &["x"],
        Formula::exists(
            "u",
            Formula::and(
                Formula::and(
                    Formula::pred("TauSet", vec![v("u")]),
                    Formula::exists(
                        "j",
                        Formula::and(
                            square_root_of_minus_one("j"),
                            Formula::eq(Term::mul(Term::int(2), Term::mul(v("j"), v("x"))), v("u")),
                        ),
                    ),
                ),
                Formula::exists(
                    "h",
                    Formula::and(
                        Formula::eq(Term::mul(Term::int(2), v("h")), v("x")),
                        Formula::pred("Sin", vec![v("h"), Term::One]),
                    ),
                ),
            ),
        ),
    )
}

static REGISTRY: Lazy<Vec<DefinedPredicate>> = Lazy::new(|| {
    vec![ker(), int(), rat_pred(), int_laczkovich(), tau_set(), cos_pred(), sin_pred(), pi_pred()]
});

/// The built-in defined predicates, in a fixed order.
pub fn standard_predicates() -> &'static [DefinedPredicate] {
    &REGISTRY
}

/// Looks up a defined predicate by name.
pub fn lookup_predicate(name: &str) -> Option<&'static DefinedPredicate> {
    REGISTRY.iter().find(|d| d.name == name)
}

/// The body of a registered predicate with the given argument terms
/// substituted for its parameters. Inner predicate applications are kept,
/// so the result reads like the written definition. Panics on an unknown
/// name or wrong arity; callers pass compile-time-known names.
pub fn instantiate(name: &str, args: &[Term]) -> Formula {
    let def = lookup_predicate(name).unwrap_or_else(|| panic!("unknown predicate {name}"));
    assert_eq!(args.len(), def.arity(), "predicate {name} applied to {} arguments", args.len());
    let mut body = def.body.clone();
    for (param, arg) in def.params.iter().zip(args) {
        body = body.subst_term(param, arg);
    }
    body
}

/// Replaces every application of a registered predicate by its definition.
/// Bound variables of each instantiated body are renamed to names unused
/// anywhere in the input, so no argument variable is ever captured; the
/// result has no `Pred` nodes for registered names, and expansion is the
/// identity on macro-free formulas.
pub fn expand_macros(f: &Formula) -> Formula {
    let mut supply = NameSupply::avoiding(f);
    expand_in(f, &mut supply)
}

fn expand_in(f: &Formula, supply: &mut NameSupply) -> Formula {
    match f {
        Formula::Eq(_, _) => f.clone(),
        Formula::Not(a) => Formula::not(expand_in(a, supply)),
        Formula::And(a, b) => Formula::and(expand_in(a, supply), expand_in(b, supply)),
        Formula::Or(a, b) => Formula::or(expand_in(a, supply), expand_in(b, supply)),
        Formula::Implies(a, b) => Formula::implies(expand_in(a, supply), expand_in(b, supply)),
        Formula::Exists(x, body) => {
            supply.reserve(x);
            Formula::exists(x.clone(), expand_in(body, supply))
        }
        Formula::Forall(x, body) => {
            supply.reserve(x);
            Formula::forall(x.clone(), expand_in(body, supply))
        }
        Formula::Pred(name, args) => match lookup_predicate(name) {
            None => f.clone(),
            Some(def) => {
                assert_eq!(
                    args.len(),
                    def.arity(),
                    "predicate {name} applied to {} arguments",
                    args.len()
                );
                let mut body = freshen_bound(&def.body, supply);
                for (param, arg) in def.params.iter().zip(args) {
                    body = body.subst_term(param, arg);
                }
                expand_in(&body, supply)
            }
        },
    }
}

/// Renames every bound variable of the formula to a fresh name from the
/// supply, keeping the letter of the original as the base.
pub(crate) fn freshen_bound(f: &Formula, supply: &mut NameSupply) -> Formula {
    match f {
        Formula::Eq(_, _) | Formula::Pred(_, _) => f.clone(),
        Formula::Not(a) => Formula::not(freshen_bound(a, supply)),
        Formula::And(a, b) => Formula::and(freshen_bound(a, supply), freshen_bound(b, supply)),
        Formula::Or(a, b) => Formula::or(freshen_bound(a, supply), freshen_bound(b, supply)),
        Formula::Implies(a, b) => {
            Formula::implies(freshen_bound(a, supply), freshen_bound(b, supply))
        }
        Formula::Exists(x, body) => {
            let fresh = supply.fresh(super::ast::name_base(x));
            let renamed = body.subst_term(x, &Term::var(fresh.clone()));
            Formula::exists(fresh, freshen_bound(&renamed, supply))
        }
        Formula::Forall(x, body) => {
            let fresh = supply.fresh(super::ast::name_base(x));
            let renamed = body.subst_term(x, &Term::var(fresh.clone()));
            Formula::forall(fresh, freshen_bound(&renamed, supply))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_membership_expands_to_its_equation() {
        let f = Formula::pred("Ker", vec![Term::var("x")]);
        let g = expand_macros(&f);
        assert_eq!(g, Formula::eq(Term::exp(Term::var("x")), Term::One));
    }

    #[test]
    fn expansion_leaves_no_registered_predicates() {
        for def in standard_predicates() {
            let args: Vec<Term> = def.params.iter().map(|p| Term::var(format!("a_{p}"))).collect();
            let f = Formula::pred(def.name.clone(), args);
            let g = expand_macros(&f);
            assert!(g.is_macro_free(), "{} left a predicate node", def.name);
        }
    }

    #[test]
    fn expansion_preserves_free_variables() {
        for def in standard_predicates() {
            let args: Vec<Term> = def.params.iter().map(|p| Term::var(format!("a_{p}"))).collect();
            let f = Formula::pred(def.name.clone(), args);
            let g = expand_macros(&f);
            assert_eq!(f.free_vars(), g.free_vars(), "free variables changed for {}", def.name);
        }
    }

    #[test]
    fn expansion_is_idempotent() {
        let f = Formula::and(
            Formula::pred("TauSet", vec![Term::var("u")]),
            Formula::pred("IntL", vec![Term::var("m")]),
        );
        let once = expand_macros(&f);
        let twice = expand_macros(&once);
        assert_eq!(once, twice);
    }

    #[test]
    fn expansion_does_not_capture_argument_variables() {
        // Int's body binds a variable named x; applying Int to x itself must
        // rename the binder, not capture the argument.
        let f = Formula::pred("Int", vec![Term::var("x")]);
        let g = expand_macros(&f);
        assert_eq!(g.free_vars().into_iter().collect::<Vec<_>>(), vec!["x".to_string()]);
        match &g {
            Formula::Forall(bound, _) => assert_ne!(bound, "x"),
            other => panic!("unexpected shape {other:?}"),
        }
    }

    #[test]
    fn nested_instances_get_distinct_bound_names() {
        let f = Formula::and(
            Formula::pred("Rat", vec![Term::var("a")]),
            Formula::pred("Rat", vec![Term::var("b")]),
        );
        let g = expand_macros(&f);
        let names = g.all_names();
        // Two Rat instances contribute two z's and two w's, all distinct.
        let zs: Vec<_> = names.iter().filter(|n| n.starts_with('z')).collect();
        let ws: Vec<_> = names.iter().filter(|n| n.starts_with('w')).collect();
        assert_eq!(zs.len(), 2);
        assert_eq!(ws.len(), 2);
    }

    #[test]
    fn unknown_predicates_are_left_alone() {
        let f = Formula::pred("Mystery", vec![Term::var("x")]);
        assert_eq!(expand_macros(&f), f);
    }
}
