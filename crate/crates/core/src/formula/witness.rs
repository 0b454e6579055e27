//! Witness plans: candidate values for existential variables and probe sets
//! for universal variables, keyed by variable name with a base-name
//! fallback so renamed copies of macro-bound variables still resolve.

use super::ast::{name_base, Formula};
use crate::sk::SKElement;
use serde::{Deserialize, Serialize};

/// A concrete value a plan can supply for a variable: either an exact
/// symbolic element (which the numeric model embeds), or a logarithm of 2,
/// which exists only numerically.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum WitnessValue {
    Element(SKElement),
    LogTwo,
}

impl WitnessValue {
    pub fn describe(&self) -> String {
        match self {
            WitnessValue::Element(e) => e.to_string(),
            WitnessValue::LogTwo => "a logarithm of 2".to_string(),
        }
    }
}

/// Candidate values for one existential variable. The checker tries the
/// candidates in order and succeeds on the first that makes the body hold.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessEntry {
    pub var: String,
    pub candidates: Vec<WitnessValue>,
}

/// Probe values for one universal variable, replacing the checker's default
/// probe set for that variable.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeEntry {
    pub var: String,
    pub values: Vec<WitnessValue>,
}

/// Everything needed to check a formula mechanically: values for its free
/// variables, candidate pools for its existential variables, and probe sets
/// for universal variables that should not use the default probes.
///
/// Lookup tries the exact variable name first and then its base (the name
/// with trailing digits stripped), so entries keyed `"j"` cover the renamed
/// variables `j3`, `j17`, ... that macro expansion introduces.
#[derive(Clone, Debug, PartialEq, Default, Serialize, Deserialize)]
pub struct WitnessPlan {
    pub bindings: Vec<(String, WitnessValue)>,
    pub witnesses: Vec<WitnessEntry>,
    pub probes: Vec<ProbeEntry>,
}

impl WitnessPlan {
    pub fn new() -> Self {
        WitnessPlan::default()
    }

    /// Binds a free variable of the target formula to a value.
    pub fn bind(mut self, var: impl Into<String>, value: WitnessValue) -> Self {
        self.bindings.push((var.into(), value));
        self
    }

    /// Binds a free variable to an exact symbolic element.
    pub fn bind_element(self, var: impl Into<String>, value: SKElement) -> Self {
        self.bind(var, WitnessValue::Element(value))
    }

    /// Adds a candidate pool for an existential variable (or base name).
    pub fn with_witnesses(mut self, var: impl Into<String>, candidates: Vec<WitnessValue>) -> Self {
        self.witnesses.push(WitnessEntry { var: var.into(), candidates });
        self
    }

    /// Adds a probe set for a universal variable (or base name).
    pub fn with_probes(mut self, var: impl Into<String>, values: Vec<WitnessValue>) -> Self {
        self.probes.push(ProbeEntry { var: var.into(), values });
        self
    }

    /// Replaces the candidate pool for a variable, or adds one if absent.
    pub fn set_witnesses(&mut self, var: &str, candidates: Vec<WitnessValue>) {
        match self.witnesses.iter_mut().find(|e| e.var == var) {
            Some(entry) => entry.candidates = candidates,
            None => self.witnesses.push(WitnessEntry { var: var.to_string(), candidates }),
        }
    }

    /// The candidate pool for an existential variable, by exact name first
    /// and base name second.
    pub fn candidates_for(&self, var: &str) -> Option<&[WitnessValue]> {
        if let Some(entry) = self.witnesses.iter().find(|e| e.var == var) {
            return Some(&entry.candidates);
        }
        let base = name_base(var);
        self.witnesses.iter().find(|e| e.var == base).map(|e| e.candidates.as_slice())
    }

    /// The probe set for a universal variable, if the plan overrides the
    /// default for it.
    pub fn probes_for(&self, var: &str) -> Option<&[WitnessValue]> {
        if let Some(entry) = self.probes.iter().find(|e| e.var == var) {
            return Some(&entry.values);
        }
        let base = name_base(var);
        self.probes.iter().find(|e| e.var == base).map(|e| e.values.as_slice())
    }

    /// The bound value of a free variable.
    pub fn binding_for(&self, var: &str) -> Option<&WitnessValue> {
        self.bindings.iter().find(|(v, _)| v == var).map(|(_, w)| w)
    }

    /// True when every existential variable of the formula (after macro
    /// expansion) has a candidate pool in this plan.
    pub fn covers(&self, f: &Formula) -> bool {
        let expanded = super::macros::expand_macros(f);
        let mut missing = Vec::new();
        collect_uncovered(&expanded, self, &mut missing);
        missing.is_empty()
    }
}

fn collect_uncovered(f: &Formula, plan: &WitnessPlan, missing: &mut Vec<String>) {
    match f {
        Formula::Eq(_, _) | Formula::Pred(_, _) => {}
        Formula::Not(a) => collect_uncovered(a, plan, missing),
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
            collect_uncovered(a, plan, missing);
            collect_uncovered(b, plan, missing);
        }
        Formula::Exists(v, body) => {
            if plan.candidates_for(v).is_none() {
                missing.push(v.clone());
            }
            collect_uncovered(body, plan, missing);
        }
        Formula::Forall(_, body) => collect_uncovered(body, plan, missing),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::ast::Term;
    use crate::rat::rat_int;

    #[test]
    fn lookup_falls_back_to_base_names() {
        let plan = WitnessPlan::new()
            .with_witnesses("j", vec![WitnessValue::LogTwo])
            .with_witnesses("a1", vec![WitnessValue::Element(SKElement::tau())]);
        assert!(plan.candidates_for("j").is_some());
        assert!(plan.candidates_for("j42").is_some());
        assert!(plan.candidates_for("a1").is_some());
        assert!(plan.candidates_for("a2").is_none());
        assert!(plan.candidates_for("k").is_none());
    }

    #[test]
    fn coverage_sees_through_macros() {
        let f = Formula::pred("Rat", vec![Term::var("y")]);
        let empty = WitnessPlan::new();
        assert!(!empty.covers(&f));
        let full = WitnessPlan::new()
            .with_witnesses("z", vec![WitnessValue::Element(SKElement::tau())])
            .with_witnesses("w", vec![WitnessValue::Element(SKElement::tau())]);
        assert!(full.covers(&f));
    }

    #[test]
    fn plan_serialization_round_trips() {
        let plan = WitnessPlan::new()
            .bind_element("x", SKElement::from_rat(rat_int(3)))
            .with_witnesses("t", vec![WitnessValue::LogTwo])
            .with_probes("j", vec![WitnessValue::Element(SKElement::tau())]);
        let json = serde_json::to_string(&plan).unwrap();
        let back: WitnessPlan = serde_json::from_str(&json).unwrap();
        assert_eq!(plan, back);
        assert!(json.contains("\"log_two\""));
    }
}
