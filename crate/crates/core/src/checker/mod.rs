//! Semantics for the formula language: pluggable models (exact symbolic,
//! high-precision numeric), three-valued matrix evaluation, witness-driven
//! checking of quantified formulas, the exact arithmetic behind the
//! rational-power-of-two test, and the standard trigonometric identities.

mod check;
mod model;

pub use check::{
    check_matrix, check_with_witnesses, default_probe_elements, eval_term, exact_theta_check,
    verify_trig_identities, CheckReport, EvalError, Verdict,
};
pub use model::{Model, NumericModel, SkModel};

use serde::Serialize;

/// Three-valued truth: the numeric model answers `Unknown` when interval
/// resolution cannot separate two sides of an equation; the symbolic model
/// never does.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn and(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::False, _) | (_, Truth::False) => Truth::False,
            (Truth::True, Truth::True) => Truth::True,
            _ => Truth::Unknown,
        }
    }

    pub fn or(self, other: Truth) -> Truth {
        match (self, other) {
            (Truth::True, _) | (_, Truth::True) => Truth::True,
            (Truth::False, Truth::False) => Truth::False,
            _ => Truth::Unknown,
        }
    }

    pub fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Unknown => Truth::Unknown,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::Truth;

    #[test]
    fn three_valued_connectives() {
        use Truth::*;
        assert_eq!(True.and(Unknown), Unknown);
        assert_eq!(False.and(Unknown), False);
        assert_eq!(True.or(Unknown), True);
        assert_eq!(False.or(Unknown), Unknown);
        assert_eq!(Unknown.not(), Unknown);
    }
}
