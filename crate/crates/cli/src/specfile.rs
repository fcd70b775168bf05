//! Algebra spec files and the bracketed matrix literal form used in reports.

use std::fmt;
use std::path::Path;

use matfield::algebra::{AlgebraSpec, Bracket};
use matfield::{FieldMode, GaussianRational, Matrix};
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}:{line}:{column}: {message}")]
    Syntax { path: String, line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    Invalid { path: String, message: String },
}

/// One scalar literal, parsed during deserialization so errors carry a position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scalar(pub GaussianRational);

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct ScalarVisitor;

        impl Visitor<'_> for ScalarVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a scalar literal such as \"-1/2\" or \"3+1/2i\"")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Scalar, E> {
                v.parse::<GaussianRational>().map(Scalar).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Scalar, E> {
                Ok(Scalar(GaussianRational::from_int(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Scalar, E> {
                i64::try_from(v).map(|v| Scalar(GaussianRational::from_int(v))).map_err(|_| E::custom("integer out of range; write it as a string literal"))
            }
        }

        deserializer.deserialize_any(ScalarVisitor)
    }
}

fn de_mode<'de, D: Deserializer<'de>>(d: D) -> Result<FieldMode, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(|_| de::Error::custom(format!("unknown field {s:?} (expected Q, QI, Q_AS_R or QI_AS_C)")))
}

fn de_bracket<'de, D: Deserializer<'de>>(d: D) -> Result<Bracket, D::Error> {
    let s = String::deserialize(d)?;
    s.parse().map_err(de::Error::custom)
}

fn default_bracket() -> Bracket {
    Bracket::Mul
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub name: String,
    pub rank: usize,
    #[serde(deserialize_with = "de_mode")]
    pub field: FieldMode,
    #[serde(default = "default_bracket", deserialize_with = "de_bracket")]
    pub bracket: Bracket,
    pub generators: Vec<Vec<Vec<Scalar>>>,
}

impl SpecFile {
    pub fn parse(text: &str, path: &str) -> Result<Self, SpecError> {
        let spec: SpecFile = serde_json::from_str(text).map_err(|e| SpecError::Syntax {
            path: path.to_string(),
            line: e.line(),
            column: e.column(),
            message: strip_position(&e.to_string()),
        })?;
        spec.validate(path)?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self, SpecError> {
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| SpecError::Io { path: shown.clone(), source })?;
        Self::parse(&text, &shown)
    }

    fn validate(&self, path: &str) -> Result<(), SpecError> {
        let invalid = |message: String| Err(SpecError::Invalid { path: path.to_string(), message });
        if self.rank == 0 {
            return invalid("rank must be positive".into());
        }
        if self.generators.is_empty() {
            return invalid("at least one generator is required".into());
        }
        for (g, m) in self.generators.iter().enumerate() {
            if m.len() != self.rank {
                return invalid(format!("generator {} has {} rows, expected {}", g + 1, m.len(), self.rank));
            }
            if let Some((r, row)) = m.iter().enumerate().find(|(_, row)| row.len() != self.rank) {
                return invalid(format!("generator {} row {} has {} entries, expected {}", g + 1, r + 1, row.len(), self.rank));
            }
        }
        Ok(())
    }

    pub fn matrices(&self) -> Vec<Matrix> {
        self.generators
            .iter()
            .map(|m| Matrix::from_rows(m.iter().map(|r| r.iter().map(|s| s.0.clone()).collect()).collect()).expect("validated shape"))
            .collect()
    }

    pub fn to_algebra(&self, field: Option<FieldMode>, bracket: Option<Bracket>) -> AlgebraSpec {
        AlgebraSpec::new(self.name.clone(), self.matrices(), field.unwrap_or(self.field), bracket.unwrap_or(self.bracket))
            .expect("validated generators share a rank")
    }
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

/// Parses `[[a,b],[c,d]]`; entries are scalar literals, optionally double-quoted.
pub fn parse_matrix_literal(text: &str) -> Result<Matrix, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| format!("matrix literal must look like [[a,b],[c,d]], got {text:?}"))?;
    let rows = inner
        .split("],[")
        .map(|row| {
            row.split(',')
                .map(|e| e.trim_matches('"').parse::<GaussianRational>().map_err(|err| format!("entry {e:?}: {err}")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(rows).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use matfield::families::quaternion_basis;

    const QUAT: &str = r#"{
  "name": "quaternion",
  "rank": 2,
  "field": "Q",
  "generators": [
    [["1","0"],["0","1"]],
    [["0","-1"],["1","0"]],
    [["0","1"],["1","0"]],
    [["-1","0"],["0","1"]]
  ]
}"#;

    #[test]
    fn parses_quaternion_spec() {
        let s = SpecFile::parse(QUAT, "q.json").unwrap();
        assert_eq!(s.bracket, Bracket::Mul);
        let q = quaternion_basis();
        assert_eq!(s.matrices(), vec![q.i, q.c, q.b, q.a]);
    }

    #[test]
    fn bad_scalar_reports_position() {
        let text = QUAT.replace("\"-1\",\"0\"", "\"1//2\",\"0\"");
        match SpecFile::parse(&text, "q.json") {
            Err(SpecError::Syntax { line, column, message, .. }) => {
                assert_eq!(line, 9);
                assert!(column > 0);
                assert!(message.contains("1//2"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_keys_rejected() {
        let text = QUAT.replace("\"rank\": 2,", "\"rank\": 2, \"colour\": 1,");
        assert!(matches!(SpecFile::parse(&text, "q.json"), Err(SpecError::Syntax { .. })));
    }

    #[test]
    fn ragged_generator_rejected() {
        let text = QUAT.replace("[[\"0\",\"1\"],[\"1\",\"0\"]]", "[[\"0\",\"1\"],[\"1\"]]");
        assert!(matches!(SpecFile::parse(&text, "q.json"), Err(SpecError::Invalid { .. })));
    }

    #[test]
    fn matrix_literal_round_trip() {
        let m = Matrix::from_rows(vec![
            vec![GaussianRational::frac(-1, 2), "3+1/2i".parse().unwrap()],
            vec!["-1i".parse().unwrap(), GaussianRational::zero()],
        ])
        .unwrap();
        assert_eq!(parse_matrix_literal(&m.to_string()).unwrap(), m);
        assert_eq!(parse_matrix_literal("[[\"0\", \"-1\"], [\"1\", \"0\"]]").unwrap(), quaternion_basis().c);
        assert!(parse_matrix_literal("[[1,2],[3]]").is_err());
    }
}
