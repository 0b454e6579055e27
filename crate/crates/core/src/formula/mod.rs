//! First-order formulas over the exponential-field language and the
//! compiler from real abelian numbers to their pointwise definitions:
//! abstract syntax, named predicate macros with hygienic expansion,
//! denominator-clearing desugar, prenex normal form, quantifier-complexity
//! measurement, deterministic rendering, and witness plans.

mod ast;
mod builders;
mod macros;
mod render;
mod transform;
mod witness;

pub use ast::{name_base, Formula, NameSupply, Term};
pub use builders::{
    def_cos, def_int_forall, def_int_laczkovich, def_kernel_generators, def_pi, def_rat_exists,
    def_real_abelian, def_sin, def_sqrt2, pi_element, KernelGeneratorVariant, TrigVariant,
};
pub use macros::{
    expand_macros, instantiate, lookup_predicate, standard_predicates, DefinedPredicate,
};
pub use render::{render, render_term, RenderFormat};
pub use transform::{desugar, prenex, quantifier_complexity};
pub use witness::{ProbeEntry, WitnessEntry, WitnessPlan, WitnessValue};

use serde::{Deserialize, Serialize};

/// Errors from formula construction and transformation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("a non-integer scalar occurs under E and cannot be cleared")]
    ScalarUnderExp,
    #[error("non-integer scalars cannot be cleared from this position")]
    UnclearableScalar,
    #[error("invalid cosine decomposition: {0}")]
    InvalidDecomposition(String),
}

/// The machine-readable package for one definition: the formula as an
/// s-expression, its quantifier complexity, and the witness plan that makes
/// it checkable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DefinitionEnvelope {
    pub formula: String,
    pub complexity: String,
    pub witness_plan: WitnessPlan,
}

/// Packages a formula and its plan for output.
pub fn envelope(f: &Formula, plan: &WitnessPlan) -> Result<DefinitionEnvelope, FormulaError> {
    Ok(DefinitionEnvelope {
        formula: render(f, RenderFormat::Sexpr),
        complexity: quantifier_complexity(f)?,
        witness_plan: plan.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn envelope_packages_formula_complexity_and_plan() {
        let (f, plan) = def_rat_exists();
        let env = envelope(&f, &plan).unwrap();
        assert!(env.formula.starts_with("(exists z"));
        assert_eq!(env.complexity, "\u{2203}");
        let json = serde_json::to_string(&env).unwrap();
        assert!(json.starts_with("{\"formula\":"));
        let back: DefinitionEnvelope = serde_json::from_str(&json).unwrap();
        assert_eq!(env, back);
    }
}
