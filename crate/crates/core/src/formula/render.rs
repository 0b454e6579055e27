//! Deterministic rendering of formulas as readable text, LaTeX, or
//! s-expressions. The s-expression form round-trips through the parser in
//! the command-line crate.

use super::ast::{Formula, Term};
use crate::rat::{is_integer, rat_to_string};
use num_traits::Signed;

/// Output syntax for [`render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Text,
    Latex,
    Sexpr,
}

/// Renders the formula in the requested format. The output is a pure
/// function of the tree.
pub fn render(f: &Formula, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => formula_text(f, 0, false),
        RenderFormat::Latex => formula_text(f, 0, true),
        RenderFormat::Sexpr => formula_sexpr(f),
    }
}

/// Renders a single term in the requested format.
pub fn render_term(t: &Term, format: RenderFormat) -> String {
    match format {
        RenderFormat::Text => term_text(t, 0, false),
        RenderFormat::Latex => term_text(t, 0, true),
        RenderFormat::Sexpr => term_sexpr(t),
    }
}

// Term precedence levels: addition 0, multiplication 1, negation 2,
// atoms 3. A child whose level is below its context is parenthesized.

fn term_prec(t: &Term) -> u8 {
    match t {
        Term::Add(_, _) => 0,
        Term::Mul(_, _) => 1,
        Term::Neg(_) => 2,
        Term::RatConst(r) => {
            if is_integer(r) && !r.is_negative() {
                3
            } else {
                0
            }
        }
        Term::Zero | Term::One | Term::Var(_) | Term::Exp(_) => 3,
    }
}

fn term_text(t: &Term, min_prec: u8, latex: bool) -> String {
    let wrap = |s: String| format!("({s})");
    let body = match t {
        Term::Zero => "0".to_string(),
        Term::One => "1".to_string(),
        Term::Var(v) => v.clone(),
        Term::RatConst(r) => {
            if latex && !is_integer(r) {
                format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
            } else {
                rat_to_string(r)
            }
        }
        Term::Neg(a) => format!("-{}", term_text(a, 3, latex)),
        Term::Add(a, b) => match &**b {
            Term::Neg(inner) => format!(
                "{} - {}",
                term_text(a, 0, latex),
                term_text(inner, 1, latex)
            ),
            _ => format!("{} + {}", term_text(a, 0, latex), term_text(b, 1, latex)),
        },
        Term::Mul(a, b) => {
            let dot = if latex { " \\cdot " } else { "\u{b7}" };
            format!("{}{}{}", term_text(a, 1, latex), dot, term_text(b, 2, latex))
        }
        Term::Exp(a) => {
            if latex {
                format!("\\operatorname{{E}}({})", term_text(a, 0, latex))
            } else {
                format!("E({})", term_text(a, 0, latex))
            }
        }
    };
    if term_prec(t) < min_prec {
        wrap(body)
    } else {
        body
    }
}

// Formula precedence levels: implication 1, disjunction 2, conjunction 3,
// negation and self-delimiting forms 4.

fn formula_prec(f: &Formula) -> u8 {
    match f {
        Formula::Implies(_, _) => 1,
        Formula::Or(_, _) => 2,
        Formula::And(_, _) => 3,
        Formula::Not(_) | Formula::Eq(_, _) | Formula::Pred(_, _) => 4,
        // A quantifier's body is always parenthesized, so the whole
        // quantified formula delimits itself.
        Formula::Exists(_, _) | Formula::Forall(_, _) => 4,
    }
}

fn formula_text(f: &Formula, min_prec: u8, latex: bool) -> String {
    let body = match f {
        Formula::Eq(a, b) => {
            format!("{} = {}", term_text(a, 0, latex), term_text(b, 0, latex))
        }
        Formula::Pred(name, args) => {
            let parts: Vec<String> = args.iter().map(|a| term_text(a, 0, latex)).collect();
            if latex {
                format!("\\mathrm{{{name}}}({})", parts.join(", "))
            } else {
                format!("{name}({})", parts.join(", "))
            }
        }
        Formula::Not(a) => {
            let op = if latex { "\\neg " } else { "\u{ac}" };
            match &**a {
                Formula::Pred(_, _) => format!("{op}{}", formula_text(a, 4, latex)),
                _ => format!("{op}({})", formula_text(a, 0, latex)),
            }
        }
        Formula::And(a, b) => {
            let op = if latex { " \\land " } else { " \u{2227} " };
            format!("{}{op}{}", formula_text(a, 3, latex), formula_text(b, 4, latex))
        }
        Formula::Or(a, b) => {
            let op = if latex { " \\lor " } else { " \u{2228} " };
            format!("{}{op}{}", formula_text(a, 2, latex), formula_text(b, 3, latex))
        }
        Formula::Implies(a, b) => {
            let op = if latex { " \\to " } else { " \u{2192} " };
            format!("{}{op}{}", formula_text(a, 2, latex), formula_text(b, 2, latex))
        }
        Formula::Exists(v, body) => {
            if latex {
                format!("\\exists {v}\\, ({})", formula_text(body, 0, latex))
            } else {
                format!("\u{2203}{v} ({})", formula_text(body, 0, latex))
            }
        }
        Formula::Forall(v, body) => {
            if latex {
                format!("\\forall {v}\\, ({})", formula_text(body, 0, latex))
            } else {
                format!("\u{2200}{v} ({})", formula_text(body, 0, latex))
            }
        }
    };
    if formula_prec(f) < min_prec {
        format!("({body})")
    } else {
        body
    }
}

fn term_sexpr(t: &Term) -> String {
    match t {
        Term::Zero => "0".to_string(),
        Term::One => "1".to_string(),
        Term::Var(v) => v.clone(),
        Term::RatConst(r) => format!("(rat {})", rat_to_string(r)),
        Term::Neg(a) => format!("(neg {})", term_sexpr(a)),
        Term::Add(a, b) => format!("(+ {} {})", term_sexpr(a), term_sexpr(b)),
        Term::Mul(a, b) => format!("(* {} {})", term_sexpr(a), term_sexpr(b)),
        Term::Exp(a) => format!("(E {})", term_sexpr(a)),
    }
}

fn formula_sexpr(f: &Formula) -> String {
    match f {
        Formula::Eq(a, b) => format!("(= {} {})", term_sexpr(a), term_sexpr(b)),
        Formula::And(a, b) => format!("(and {} {})", formula_sexpr(a), formula_sexpr(b)),
        Formula::Or(a, b) => format!("(or {} {})", formula_sexpr(a), formula_sexpr(b)),
        Formula::Not(a) => format!("(not {})", formula_sexpr(a)),
        Formula::Implies(a, b) => {
            format!("(implies {} {})", formula_sexpr(a), formula_sexpr(b))
        }
        Formula::Exists(v, body) => format!("(exists {v} {})", formula_sexpr(body)),
        Formula::Forall(v, body) => format!("(forall {v} {})", formula_sexpr(body)),
        Formula::Pred(name, args) => {
            let mut out = format!("(pred {name}");
            for a in args {
                out.push(' ');
                out.push_str(&term_sexpr(a));
            }
            out.push(')');
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn sample() -> Formula {
        Formula::forall(
            "x",
            Formula::implies(
                Formula::eq(Term::exp(Term::var("x")), Term::One),
                Formula::eq(
                    Term::exp(Term::mul(Term::var("y"), Term::var("x"))),
                    Term::One,
                ),
            ),
        )
    }

    #[test]
    fn text_render_matches_the_documented_form() {
        assert_eq!(
            render(&sample(), RenderFormat::Text),
            "\u{2200}x (E(x) = 1 \u{2192} E(y\u{b7}x) = 1)"
        );
    }

    #[test]
    fn sexpr_render_is_fully_parenthesized() {
        assert_eq!(
            render(&sample(), RenderFormat::Sexpr),
            "(forall x (implies (= (E x) 1) (= (E (* y x)) 1)))"
        );
    }

    #[test]
    fn latex_render_is_ascii_and_balanced() {
        let f = Formula::exists(
            "j",
            Formula::and(
                Formula::eq(Term::mul(Term::var("j"), Term::var("j")), Term::neg(Term::One)),
                Formula::eq(Term::mul(Term::rat(rat(1, 2)), Term::var("y")), Term::exp(Term::var("x"))),
            ),
        );
        let s = render(&f, RenderFormat::Latex);
        assert!(s.is_ascii(), "latex output must be plain ascii: {s}");
        for (open, close) in [('(', ')'), ('{', '}')] {
            let opens = s.chars().filter(|&c| c == open).count();
            let closes = s.chars().filter(|&c| c == close).count();
            assert_eq!(opens, closes, "unbalanced {open}{close} in {s}");
        }
        assert!(s.contains("\\exists"));
        assert!(s.contains("\\tfrac{1}{2}"));
    }

    #[test]
    fn subtraction_and_negation_are_readable() {
        let t = Term::sub(
            Term::exp(Term::mul(Term::var("j"), Term::var("x"))),
            Term::exp(Term::neg(Term::mul(Term::var("j"), Term::var("x")))),
        );
        assert_eq!(render_term(&t, RenderFormat::Text), "E(j\u{b7}x) - E(-(j\u{b7}x))");
        let u = Term::mul(Term::int(2), Term::mul(Term::var("j"), Term::var("y")));
        assert_eq!(render_term(&u, RenderFormat::Text), "2\u{b7}(j\u{b7}y)");
    }

    #[test]
    fn nested_quantifiers_and_connectives_stay_unambiguous() {
        let f = Formula::and(
            Formula::pred("Ker", vec![Term::var("x")]),
            Formula::or(
                Formula::not(Formula::eq(Term::var("x"), Term::Zero)),
                Formula::exists("n", Formula::eq(Term::var("n"), Term::var("x"))),
            ),
        );
        assert_eq!(
            render(&f, RenderFormat::Text),
            "Ker(x) \u{2227} (\u{ac}(x = 0) \u{2228} \u{2203}n (n = x))"
        );
    }
}
