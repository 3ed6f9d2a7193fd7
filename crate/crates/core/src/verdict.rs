use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Yes,
    No,
    Conditional,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
            Outcome::Conditional => "conditional",
        })
    }
}

/// One step of a reason chain: a stable rule id and the statement it applies.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Reason {
    pub rule: String,
    pub citation: String,
}

impl Reason {
    pub fn new(rule: &str, citation: impl Into<String>) -> Self {
        Self {
            rule: rule.to_string(),
            citation: citation.into(),
        }
    }
}

/// Three-valued classification result.
///
/// A `Conditional` verdict always names the external fact it depends on.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Verdict {
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub condition: Option<String>,
    pub reasons: Vec<Reason>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub annotations: Vec<(String, String)>,
}

impl Verdict {
    pub fn yes(reasons: Vec<Reason>) -> Self {
        Self {
            outcome: Outcome::Yes,
            condition: None,
            reasons,
            annotations: Vec::new(),
        }
    }

    pub fn no(reasons: Vec<Reason>) -> Self {
        Self {
            outcome: Outcome::No,
            condition: None,
            reasons,
            annotations: Vec::new(),
        }
    }

    /// Panics if `condition` is blank.
    pub fn conditional(condition: impl Into<String>, reasons: Vec<Reason>) -> Self {
        let condition = condition.into();
        assert!(!condition.trim().is_empty(), "conditional verdict needs a condition");
        Self {
            outcome: Outcome::Conditional,
            condition: Some(condition),
            reasons,
            annotations: Vec::new(),
        }
    }

    pub fn annotate(mut self, key: &str, value: impl Into<String>) -> Self {
        self.annotations.push((key.to_string(), value.into()));
        self
    }

    pub fn annotation(&self, key: &str) -> Option<&str> {
        self.annotations
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn is_yes(&self) -> bool {
        self.outcome == Outcome::Yes
    }

    pub fn is_no(&self) -> bool {
        self.outcome == Outcome::No
    }

    pub fn is_conditional(&self) -> bool {
        self.outcome == Outcome::Conditional
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.condition {
            Some(c) => write!(f, "{} ({c})", self.outcome),
            None => write!(f, "{}", self.outcome),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[should_panic(expected = "needs a condition")]
    fn conditional_requires_label() {
        Verdict::conditional("  ", vec![]);
    }

    #[test]
    fn display_includes_condition() {
        let v = Verdict::conditional("rationality of C(2,10)", vec![]);
        assert_eq!(v.to_string(), "conditional (rationality of C(2,10))");
        assert_eq!(Verdict::yes(vec![]).to_string(), "yes");
    }
}
