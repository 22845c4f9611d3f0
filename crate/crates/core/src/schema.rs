//! The input document:
//!
//! ```json
//! {
//!   "central_torus_rank": 1,
//!   "factors": [{ "family": "A", "rank": 2 }],
//!   "circle": { "torus_exponents": [1], "factor_exponents": [[1, 1, -2]] }
//! }
//! ```

use serde::{Deserialize, Serialize};

use crate::classify::{CircleEmbedding, GroupSpec};
use crate::error::{Error, Result};
use crate::rootsys::SimpleType;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleDoc {
    pub torus_exponents: Vec<i64>,
    pub factor_exponents: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    pub central_torus_rank: usize,
    pub factors: Vec<SimpleType>,
    pub circle: CircleDoc,
}

/// Failure to read a document, kept apart from invariant violations so the
/// CLI can tell them apart.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ParseError(pub String);

impl InputDoc {
    pub fn parse(text: &str) -> std::result::Result<Self, ParseError> {
        serde_json::from_str(text).map_err(|e| ParseError(e.to_string()))
    }

    pub fn new(spec: &GroupSpec, c: &CircleEmbedding) -> Self {
        Self {
            central_torus_rank: spec.central_torus_rank(),
            factors: spec.factors().to_vec(),
            circle: CircleDoc {
                torus_exponents: c.torus_exponents.clone(),
                factor_exponents: c.factor_exponents.clone(),
            },
        }
    }

    /// Builds and validates the pair.
    pub fn into_pair(self) -> Result<(GroupSpec, CircleEmbedding)> {
        let spec = GroupSpec::new(self.central_torus_rank, self.factors)?;
        let c = CircleEmbedding::new(self.circle.torus_exponents, self.circle.factor_exponents);
        spec.validate_embedding(&c)?;
        Ok((spec, c))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

impl From<ParseError> for Error {
    fn from(e: ParseError) -> Self {
        Error::Input(e.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_example() {
        let doc = InputDoc::parse(
            r#"{"central_torus_rank": 1, "factors": [{"family": "A", "rank": 2}],
                "circle": {"torus_exponents": [1], "factor_exponents": [[1, 1, -2]]}}"#,
        )
        .unwrap();
        let (spec, c) = doc.clone().into_pair().unwrap();
        assert_eq!(spec.to_string(), "T^1 × A2");
        assert_eq!(InputDoc::new(&spec, &c), doc);
        assert_eq!(InputDoc::parse(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn parse_errors_name_field_and_line() {
        let e =
            InputDoc::parse("{\n  \"central_torus_rank\": 0,\n  \"factors\": []\n}").unwrap_err();
        assert!(e.0.contains("circle"), "{e}");
        assert!(e.0.contains("line"), "{e}");
        let e = InputDoc::parse(
            r#"{"central_torus_rank": 0, "factors": [{"family": "A", "rank": 0}],
            "circle": {"torus_exponents": [], "factor_exponents": [[0]]}}"#,
        )
        .unwrap_err();
        assert!(e.0.contains("A0") && e.0.contains("line"), "{e}");
    }

    #[test]
    fn invariant_violations_surface_after_parsing() {
        let doc = InputDoc::parse(
            r#"{"central_torus_rank": 0, "factors": [{"family": "A", "rank": 1}],
                "circle": {"torus_exponents": [], "factor_exponents": [[2, -2]]}}"#,
        )
        .unwrap();
        assert!(matches!(doc.into_pair(), Err(Error::Input(_))));
    }
}
