use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

pub const DEFAULT_MATRIX: &str = include_str!("../../config/default_matrix.toml");

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct MatrixConfig {
    pub cap: usize,
    pub matrix: TypeMatrix,
    pub slow: Option<TypeMatrix>,
    pub kl_transfer: PairList,
    pub upper_ideal: UpperIdealConfig,
    pub smoothness: SmoothnessConfig,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct TypeMatrix {
    pub sources: Vec<String>,
    pub targets: Vec<String>,
}

impl TypeMatrix {
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.sources
            .iter()
            .flat_map(|s| self.targets.iter().map(move |t| (s.clone(), t.clone())))
            .collect()
    }

    /// Sources and targets, each type once, in first-seen order.
    pub fn types(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for t in self.sources.iter().chain(&self.targets) {
            if !out.contains(t) {
                out.push(t.clone());
            }
        }
        out
    }
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct PairList {
    pub pairs: Vec<(String, String)>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct UpperIdealConfig {
    pub properties: Vec<String>,
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
pub struct SmoothnessConfig {
    pub n: Vec<usize>,
}

impl MatrixConfig {
    pub fn default_matrix() -> Self {
        MatrixConfig::parse(DEFAULT_MATRIX).expect("shipped matrix parses")
    }

    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::parse("verification matrix", e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::parse("verification matrix", format!("{}: {e}", path.display())))?;
        MatrixConfig::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_matrix() {
        let cfg = MatrixConfig::default_matrix();
        assert_eq!(cfg.cap, 10_000);
        assert_eq!(cfg.matrix.pairs().len(), 30);
        assert_eq!(cfg.matrix.types().len(), 8);
        assert_eq!(cfg.kl_transfer.pairs.len(), 8);
        assert_eq!(cfg.smoothness.n, vec![4, 5, 6]);
    }

    #[test]
    fn bad_config() {
        assert!(MatrixConfig::parse("cap = \"x\"").is_err());
    }
}
