//! Pinned fixture files for the catalog algebras. Each file stores the
//! table in the algebra file format plus expected facts that are re-derived
//! by [`FixtureDescriptor::check`].

use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::biderivations::{
    biderivation_space, commuting_map_space, left_biderivation_space, loday_biderivation_space,
    right_biderivation_space, skew_commuting_map_space,
};
use crate::catalog;
use crate::derivations::{derivation_space, inner_derivation_space, is_complete_def1, is_complete_def2};
use crate::error::Result;
use crate::format::{self, ExpectedFact, FormatError, Source};

const FILES: [(&str, &str); 8] = [
    ("abelian2", include_str!("../fixtures/abelian2.toml")),
    ("sl2", include_str!("../fixtures/sl2.toml")),
    ("heisenberg", include_str!("../fixtures/heisenberg.toml")),
    ("r2", include_str!("../fixtures/r2.toml")),
    ("example_sec4_one", include_str!("../fixtures/example_sec4_one.toml")),
    ("example_sec4_two", include_str!("../fixtures/example_sec4_two.toml")),
    ("example_solvable4", include_str!("../fixtures/example_solvable4.toml")),
    ("example_solvable5", include_str!("../fixtures/example_solvable5.toml")),
];

/// Facts a fixture may pin. All values are rendered as strings.
pub const FACT_KEYS: [&str; 16] = [
    "dim",
    "is_lie",
    "leib_dim",
    "left_center_dim",
    "center_dim",
    "der_dim",
    "inner_dim",
    "left_bider_dim",
    "right_bider_dim",
    "bider_dim",
    "loday_dim",
    "commuting_dim",
    "skew_commuting_dim",
    "def1",
    "def2",
    "left_center_is_leib",
];

pub fn fact(l: &LeibnizAlgebra, key: &str) -> Option<String> {
    let v = match key {
        "dim" => l.dim().to_string(),
        "is_lie" => l.is_lie().to_string(),
        "leib_dim" => l.leibniz_kernel().dim().to_string(),
        "left_center_dim" => l.left_center().dim().to_string(),
        "center_dim" => l.center().dim().to_string(),
        "der_dim" => derivation_space(l).dim().to_string(),
        "inner_dim" => inner_derivation_space(l).dim().to_string(),
        "left_bider_dim" => left_biderivation_space(l).dim().to_string(),
        "right_bider_dim" => right_biderivation_space(l).dim().to_string(),
        "bider_dim" => biderivation_space(l).dim().to_string(),
        "loday_dim" => loday_biderivation_space(l).dim().to_string(),
        "commuting_dim" => commuting_map_space(l).dim().to_string(),
        "skew_commuting_dim" => skew_commuting_map_space(l).dim().to_string(),
        "def1" => is_complete_def1(l).verdict.to_string(),
        "def2" => is_complete_def2(l).verdict.to_string(),
        "left_center_is_leib" => (l.left_center() == l.leibniz_kernel()).to_string(),
        _ => return None,
    };
    Some(v)
}

#[derive(Clone, Debug)]
pub struct FixtureDescriptor {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub expected: Vec<ExpectedFact>,
    pub text: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct FactCheck {
    pub key: String,
    pub expected: String,
    pub actual: Option<String>,
    pub source: Source,
    pub ok: bool,
}

impl FixtureDescriptor {
    /// The algebra as stored in the fixture file.
    pub fn parsed(&self) -> std::result::Result<LeibnizAlgebra, FormatError> {
        format::parse_algebra(self.text)
    }

    /// The algebra from the catalog constructor.
    pub fn build(&self) -> Result<LeibnizAlgebra> {
        catalog::by_name(&self.name)
    }

    /// Re-derives every expected fact from the catalog algebra.
    pub fn check(&self) -> Result<Vec<FactCheck>> {
        let l = self.build()?;
        Ok(self
            .expected
            .iter()
            .map(|f| {
                let actual = fact(&l, &f.key);
                FactCheck {
                    key: f.key.clone(),
                    expected: f.value.clone(),
                    ok: actual.as_deref() == Some(f.value.as_str()),
                    actual,
                    source: f.source,
                }
            })
            .collect())
    }
}

pub fn fixtures() -> Vec<FixtureDescriptor> {
    FILES
        .iter()
        .map(|(name, text)| {
            let file = format::parse_algebra_file(text).expect("fixture files parse");
            debug_assert_eq!(file.name.as_deref(), Some(*name));
            FixtureDescriptor {
                name: name.to_string(),
                params: file
                    .params
                    .unwrap_or_default()
                    .into_iter()
                    .map(|(k, v)| (k, v.to_string()))
                    .collect(),
                expected: file.expected,
                text,
            }
        })
        .collect()
}

pub fn fixture(name: &str) -> Option<FixtureDescriptor> {
    fixtures().into_iter().find(|f| f.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_files_match_constructors() {
        for f in fixtures() {
            assert_eq!(f.parsed().unwrap(), f.build().unwrap(), "{}", f.name);
        }
    }

    #[test]
    fn every_fact_key_is_known() {
        for f in fixtures() {
            assert!(!f.expected.is_empty());
            for e in &f.expected {
                assert!(FACT_KEYS.contains(&e.key.as_str()), "{}: {}", f.name, e.key);
            }
        }
    }

    #[test]
    fn solvable_params_are_recorded() {
        let f = fixture("example_solvable5").unwrap();
        assert_eq!(f.params, vec![("n".to_string(), "5".to_string())]);
    }

    #[test]
    fn facts_are_rederived() {
        // the solvable family's published completeness verdicts are the only
        // facts the engine does not reproduce
        let mut mismatches = Vec::new();
        for f in fixtures() {
            for c in f.check().unwrap() {
                if !c.ok {
                    mismatches.push((f.name.clone(), c.key, c.actual.unwrap()));
                }
            }
        }
        let expected: Vec<(String, String, String)> = ["example_solvable4", "example_solvable5"]
            .iter()
            .flat_map(|n| {
                [
                    (n.to_string(), "def1".to_string(), "false".to_string()),
                    (n.to_string(), "def2".to_string(), "true".to_string()),
                ]
            })
            .collect();
        assert_eq!(mismatches, expected);
    }
}
