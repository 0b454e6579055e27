//! Abstract syntax for first-order formulas over the exponential-field
//! language `{0, 1, +, -, *, E, =}`, with substitution, free-variable
//! bookkeeping, and a deterministic fresh-name supply.

use crate::rat::{is_integer, Rat};
use num_bigint::BigInt;
use num_traits::Signed;
use std::collections::BTreeSet;

/// A term of the exponential-field language. `RatConst` is syntactic sugar
/// for a rational scalar; desugaring eliminates it in favour of sums of `1`
/// and cleared denominators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Zero,
    One,
    Var(String),
    Neg(Box<Term>),
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Exp(Box<Term>),
    RatConst(Rat),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn neg(t: Term) -> Self {
        Term::Neg(Box::new(t))
    }

    pub fn add(a: Term, b: Term) -> Self {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn sub(a: Term, b: Term) -> Self {
        Term::add(a, Term::neg(b))
    }

    pub fn mul(a: Term, b: Term) -> Self {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn exp(t: Term) -> Self {
        Term::Exp(Box::new(t))
    }

    pub fn rat(r: Rat) -> Self {
        Term::RatConst(r)
    }

    pub fn int(n: i64) -> Self {
        Term::RatConst(Rat::from_integer(BigInt::from(n)))
    }

    /// An integer rendered in the official language as a balanced tree of
    /// additions of `1`, negated when `n < 0`. Depth grows logarithmically
    /// in `n`.
    pub fn int_tree(n: &BigInt) -> Term {
        fn ones(n: u64) -> Term {
            match n {
                0 => Term::Zero,
                1 => Term::One,
                _ => {
                    let hi = n / 2;
                    Term::add(ones(n - hi), ones(hi))
                }
            }
        }
        let mag = ones(n.magnitude().try_into().expect("integer literal too large for a term"));
        if n.is_negative() {
            Term::neg(mag)
        } else {
            mag
        }
    }

    /// Collects the variables occurring in the term.
    pub fn free_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Term::Zero | Term::One | Term::RatConst(_) => {}
            Term::Var(v) => {
                out.insert(v.clone());
            }
            Term::Neg(t) | Term::Exp(t) => t.free_vars(out),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.free_vars(out);
                b.free_vars(out);
            }
        }
    }

    /// Replaces every occurrence of the variable by the given term.
    pub fn subst(&self, var: &str, val: &Term) -> Term {
        match self {
            Term::Zero | Term::One | Term::RatConst(_) => self.clone(),
            Term::Var(v) => {
                if v == var {
                    val.clone()
                } else {
                    self.clone()
                }
            }
            Term::Neg(t) => Term::neg(t.subst(var, val)),
            Term::Exp(t) => Term::exp(t.subst(var, val)),
            Term::Add(a, b) => Term::add(a.subst(var, val), b.subst(var, val)),
            Term::Mul(a, b) => Term::mul(a.subst(var, val), b.subst(var, val)),
        }
    }

    /// True when no `RatConst` node remains anywhere in the term.
    pub fn is_desugared(&self) -> bool {
        match self {
            Term::Zero | Term::One | Term::Var(_) => true,
            Term::RatConst(_) => false,
            Term::Neg(t) | Term::Exp(t) => t.is_desugared(),
            Term::Add(a, b) | Term::Mul(a, b) => a.is_desugared() && b.is_desugared(),
        }
    }

    /// The denominators of all rational constants in the term, keeping
    /// track of whether any non-integer constant sits under `E`, where an
    /// equation-level scaling cannot reach it.
    pub(crate) fn scan_denominators(&self, under_exp: bool, dens: &mut Vec<BigInt>, blocked: &mut bool) {
        match self {
            Term::Zero | Term::One | Term::Var(_) => {}
            Term::RatConst(r) => {
                if !is_integer(r) {
                    if under_exp {
                        *blocked = true;
                    }
                    dens.push(r.denom().clone());
                }
            }
            Term::Neg(t) => t.scan_denominators(under_exp, dens, blocked),
            Term::Exp(t) => t.scan_denominators(true, dens, blocked),
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.scan_denominators(under_exp, dens, blocked);
                b.scan_denominators(under_exp, dens, blocked);
            }
        }
    }
}

/// A first-order formula. `Pred` applies a named defined predicate; macro
/// expansion replaces those applications by their definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Formula {
    Eq(Term, Term),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
    Pred(String, Vec<Term>),
}

impl Formula {
    pub fn eq(a: Term, b: Term) -> Self {
        Formula::Eq(a, b)
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn not(a: Formula) -> Self {
        Formula::Not(Box::new(a))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn exists(var: impl Into<String>, body: Formula) -> Self {
        Formula::Exists(var.into(), Box::new(body))
    }

    pub fn forall(var: impl Into<String>, body: Formula) -> Self {
        Formula::Forall(var.into(), Box::new(body))
    }

    pub fn pred(name: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Pred(name.into(), args)
    }

    /// Left fold of a nonempty list of conjuncts.
    pub fn and_all(parts: Vec<Formula>) -> Formula {
        let mut it = parts.into_iter();
        let first = it.next().expect("and_all requires at least one conjunct");
        it.fold(first, Formula::and)
    }

    /// The free variables of the formula.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(a, b) => {
                let mut vars = BTreeSet::new();
                a.free_vars(&mut vars);
                b.free_vars(&mut vars);
                out.extend(vars.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Pred(_, args) => {
                let mut vars = BTreeSet::new();
                for a in args {
                    a.free_vars(&mut vars);
                }
                out.extend(vars.into_iter().filter(|v| !bound.contains(v)));
            }
            Formula::Not(a) => a.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, body) | Formula::Forall(v, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    /// Every variable name occurring anywhere in the formula, bound or free.
    pub fn all_names(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Eq(a, b) => {
                a.free_vars(out);
                b.free_vars(out);
            }
            Formula::Pred(_, args) => {
                for a in args {
                    a.free_vars(out);
                }
            }
            Formula::Not(a) => a.collect_names(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_names(out);
                b.collect_names(out);
            }
            Formula::Exists(v, body) | Formula::Forall(v, body) => {
                out.insert(v.clone());
                body.collect_names(out);
            }
        }
    }

    /// Capture-avoiding substitution of a term for a free variable. Bound
    /// variables that would capture a variable of `val` are renamed first,
    /// deterministically.
    pub fn subst_term(&self, var: &str, val: &Term) -> Formula {
        match self {
            Formula::Eq(a, b) => Formula::Eq(a.subst(var, val), b.subst(var, val)),
            Formula::Pred(name, args) => {
                Formula::Pred(name.clone(), args.iter().map(|a| a.subst(var, val)).collect())
            }
            Formula::Not(a) => Formula::not(a.subst_term(var, val)),
            Formula::And(a, b) => Formula::and(a.subst_term(var, val), b.subst_term(var, val)),
            Formula::Or(a, b) => Formula::or(a.subst_term(var, val), b.subst_term(var, val)),
            Formula::Implies(a, b) => {
                Formula::implies(a.subst_term(var, val), b.subst_term(var, val))
            }
            Formula::Exists(v, body) => {
                if v == var {
                    return self.clone();
                }
                let (v, body) = rename_if_captured(v, body, val);
                Formula::exists(v, body.subst_term(var, val))
            }
            Formula::Forall(v, body) => {
                if v == var {
                    return self.clone();
                }
                let (v, body) = rename_if_captured(v, body, val);
                Formula::forall(v, body.subst_term(var, val))
            }
        }
    }

    /// True when no `Pred` node remains.
    pub fn is_macro_free(&self) -> bool {
        match self {
            Formula::Eq(_, _) => true,
            Formula::Pred(_, _) => false,
            Formula::Not(a) => a.is_macro_free(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_macro_free() && b.is_macro_free()
            }
            Formula::Exists(_, body) | Formula::Forall(_, body) => body.is_macro_free(),
        }
    }

    /// True when every term in the formula is free of `RatConst` nodes.
    pub fn is_desugared(&self) -> bool {
        match self {
            Formula::Eq(a, b) => a.is_desugared() && b.is_desugared(),
            Formula::Pred(_, args) => args.iter().all(Term::is_desugared),
            Formula::Not(a) => a.is_desugared(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.is_desugared() && b.is_desugared()
            }
            Formula::Exists(_, body) | Formula::Forall(_, body) => body.is_desugared(),
        }
    }
}

/// Renames the binder when substituting `val` under it would capture one of
/// its free variables. Returns the binder to use and the body adjusted for
/// it.
fn rename_if_captured(v: &str, body: &Formula, val: &Term) -> (String, Formula) {
    let mut val_vars = BTreeSet::new();
    val.free_vars(&mut val_vars);
    if !val_vars.contains(v) {
        return (v.to_string(), body.clone());
    }
    // The binder collides with a free variable of the substituted term;
    // pick the first decorated name that is globally unused.
    let taken: BTreeSet<String> = body.all_names().union(&val_vars).cloned().collect();
    let mut k = 1u64;
    let fresh = loop {
        let candidate = format!("{v}_{k}");
        if !taken.contains(&candidate) {
            break candidate;
        }
        k += 1;
    };
    let renamed = body.subst_term(v, &Term::var(fresh.clone()));
    (fresh, renamed)
}

/// Deterministic supply of fresh variable names. Names are `base` followed
/// by a strictly increasing counter, skipping anything already reserved, so
/// two runs over the same input produce the same names.
#[derive(Clone, Debug)]
pub struct NameSupply {
    counter: u64,
    avoid: BTreeSet<String>,
}

impl NameSupply {
    pub fn new() -> Self {
        NameSupply { counter: 0, avoid: BTreeSet::new() }
    }

    /// A supply that will never emit a name already occurring in the
    /// formula.
    pub fn avoiding(f: &Formula) -> Self {
        NameSupply { counter: 0, avoid: f.all_names() }
    }

    /// Marks a name as taken.
    pub fn reserve(&mut self, name: &str) {
        self.avoid.insert(name.to_string());
    }

    /// The next unused name with the given base.
    pub fn fresh(&mut self, base: &str) -> String {
        loop {
            self.counter += 1;
            let name = format!("{base}{}", self.counter);
            if self.avoid.insert(name.clone()) {
                return name;
            }
        }
    }
}

impl Default for NameSupply {
    fn default() -> Self {
        NameSupply::new()
    }
}

/// The base of a generated name: the name with any trailing digits removed.
/// Witness plans key candidate pools by base so that renamed copies of a
/// macro-bound variable still find their entries.
pub fn name_base(name: &str) -> &str {
    name.trim_end_matches(|c: char| c.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn e_eq_one(t: Term) -> Formula {
        Formula::eq(Term::exp(t), Term::One)
    }

    #[test]
    fn free_vars_respect_binders() {
        let f = Formula::forall(
            "x",
            Formula::implies(e_eq_one(Term::var("x")), e_eq_one(Term::mul(Term::var("y"), Term::var("x")))),
        );
        let free = f.free_vars();
        assert_eq!(free.into_iter().collect::<Vec<_>>(), vec!["y".to_string()]);
        assert!(f.all_names().contains("x"));
    }

    #[test]
    fn subst_avoids_capture() {
        // Substituting x := w into exists w (w = x) must not capture.
        let f = Formula::exists("w", Formula::eq(Term::var("w"), Term::var("x")));
        let g = f.subst_term("x", &Term::var("w"));
        match &g {
            Formula::Exists(v, body) => {
                assert_ne!(v, "w");
                assert_eq!(**body, Formula::eq(Term::var(v.clone()), Term::var("w")));
            }
            other => panic!("unexpected shape {other:?}"),
        }
        assert_eq!(g.free_vars().into_iter().collect::<Vec<_>>(), vec!["w".to_string()]);
    }

    #[test]
    fn subst_stops_at_shadowing_binder() {
        let f = Formula::exists("x", Formula::eq(Term::var("x"), Term::Zero));
        let g = f.subst_term("x", &Term::One);
        assert_eq!(f, g);
    }

    #[test]
    fn int_tree_values_and_depth() {
        fn value(t: &Term) -> i64 {
            match t {
                Term::Zero => 0,
                Term::One => 1,
                Term::Neg(a) => -value(a),
                Term::Add(a, b) => value(a) + value(b),
                _ => panic!("unexpected node in integer tree"),
            }
        }
        fn depth(t: &Term) -> u32 {
            match t {
                Term::Zero | Term::One => 0,
                Term::Neg(a) => depth(a),
                Term::Add(a, b) => 1 + depth(a).max(depth(b)),
                _ => panic!("unexpected node in integer tree"),
            }
        }
        for n in [-17i64, -1, 0, 1, 2, 3, 7, 64, 1000] {
            let t = Term::int_tree(&BigInt::from(n));
            assert_eq!(value(&t), n);
            assert!(t.is_desugared());
            if n.unsigned_abs() >= 1 {
                let bits = 64 - n.unsigned_abs().leading_zeros();
                assert!(depth(&t) <= bits, "depth {} too large for {}", depth(&t), n);
            }
        }
    }

    #[test]
    fn denominator_scan_flags_constants_under_exp() {
        let plain = Term::mul(Term::rat(rat(1, 2)), Term::var("x"));
        let mut dens = Vec::new();
        let mut blocked = false;
        plain.scan_denominators(false, &mut dens, &mut blocked);
        assert!(!blocked);
        assert_eq!(dens, vec![BigInt::from(2)]);

        let inside = Term::exp(Term::mul(Term::rat(rat(1, 2)), Term::var("x")));
        let mut dens = Vec::new();
        let mut blocked = false;
        inside.scan_denominators(false, &mut dens, &mut blocked);
        assert!(blocked);
    }

    #[test]
    fn name_supply_is_deterministic_and_fresh() {
        let f = Formula::exists("x1", Formula::eq(Term::var("x1"), Term::var("y")));
        let mut s = NameSupply::avoiding(&f);
        let a = s.fresh("x");
        let b = s.fresh("x");
        assert_ne!(a, "x1");
        assert_ne!(b, "x1");
        assert_ne!(a, b);
        let mut s2 = NameSupply::avoiding(&f);
        assert_eq!(s2.fresh("x"), a);
        assert_eq!(name_base("x12"), "x");
        assert_eq!(name_base("tau"), "tau");
    }
}
