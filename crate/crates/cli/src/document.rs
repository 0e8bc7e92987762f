//! The module interchange format: a compact JSON object with keys in the
//! fixed order `name, p, dim, generators, labels`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use evprop_core::algebra::{is_prime, FpMatrix, PrimeField};
use evprop_core::gmodules::GModule;
use evprop_core::groups::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub p: u64,
    pub dim: usize,
    /// Row-major `dim x dim` matrices acting on row vectors from the right.
    pub generators: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DocError {
    #[error("malformed document: {0}")]
    Malformed(String),

    #[error("p = {0} is not a prime")]
    NotPrime(u64),

    #[error("p = {0} exceeds the supported range")]
    ModulusTooLarge(u64),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("entry {value} of generator {generator} out of range for modulus {p}")]
    EntryOutOfRange { generator: usize, value: i64, p: u64 },

    #[error("generator {index} not invertible mod {p}")]
    NotInvertible { index: usize, p: u64 },

    #[error("{0}")]
    Group(#[from] evprop_core::Error),
}

impl DocError {
    /// Stable identifier of the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            DocError::Malformed(_) => "malformed",
            DocError::NotPrime(_) => "not_prime",
            DocError::ModulusTooLarge(_) => "modulus_too_large",
            DocError::Shape(_) => "shape",
            DocError::EntryOutOfRange { .. } => "entry_out_of_range",
            DocError::NotInvertible { .. } => "not_invertible",
            DocError::Group(_) => "group",
        }
    }
}

impl ModuleDocument {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        let doc: ModuleDocument = serde_json::from_str(text).map_err(|e| DocError::Malformed(e.to_string()))?;
        doc.validate()?;
        Ok(doc)
    }

    /// Canonical text: compact JSON and a trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string(self).expect("documents serialize");
        s.push('\n');
        s
    }

    pub fn validate(&self) -> Result<(), DocError> {
        if !is_prime(self.p) {
            return Err(DocError::NotPrime(self.p));
        }
        if self.p >= PrimeField::MAX_P as u64 {
            return Err(DocError::ModulusTooLarge(self.p));
        }
        for (g, m) in self.generators.iter().enumerate() {
            if m.len() != self.dim || m.iter().any(|row| row.len() != self.dim) {
                return Err(DocError::Shape(format!(
                    "generator {} is not {d}x{d}",
                    g + 1,
                    d = self.dim
                )));
            }
            if let Some(&value) = m.iter().flatten().find(|&&x| x < 0 || x as u64 >= self.p) {
                return Err(DocError::EntryOutOfRange {
                    generator: g + 1,
                    value,
                    p: self.p,
                });
            }
        }
        if let Some(labels) = &self.labels {
            if labels.len() != self.generators.len() {
                return Err(DocError::Shape(format!(
                    "{} labels for {} generators",
                    labels.len(),
                    self.generators.len()
                )));
            }
        }
        Ok(())
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p as u32).expect("validated modulus")
    }

    pub fn matrices(&self) -> Result<Vec<FpMatrix>, DocError> {
        self.validate()?;
        let f = self.field();
        let mut out = Vec::with_capacity(self.generators.len());
        for (i, m) in self.generators.iter().enumerate() {
            let mat = FpMatrix::from_rows(f, m);
            if !mat.is_invertible() {
                return Err(DocError::NotInvertible {
                    index: i + 1,
                    p: self.p,
                });
            }
            out.push(mat);
        }
        Ok(out)
    }

    /// The natural module of the group generated by the matrices.
    pub fn to_module(&self, cap: usize) -> Result<GModule, DocError> {
        let gens = self.matrices()?;
        let f = self.field();
        let group = if gens.is_empty() {
            FiniteGroup::trivial(f, self.dim)
        } else {
            FiniteGroup::generate(f, self.dim, gens, cap)?
        };
        Ok(GModule::natural(Arc::new(group)))
    }

    pub fn from_module(name: Option<&str>, v: &GModule) -> Self {
        let generators = v
            .action()
            .iter()
            .map(|m| {
                m.to_rows()
                    .into_iter()
                    .map(|r| r.into_iter().map(|x| x as i64).collect())
                    .collect()
            })
            .collect();
        Self {
            name: name.map(str::to_string),
            p: v.p() as u64,
            dim: v.dim(),
            generators,
            labels: None,
        }
    }

    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        self.labels = Some(labels.iter().map(|s| s.to_string()).collect());
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q8: &str = "{\"name\":\"q8-sl25\",\"p\":5,\"dim\":2,\"generators\":[[[2,0],[0,3]],[[0,1],[4,0]]],\"labels\":[\"i\",\"j\"]}\n";

    #[test]
    fn canonical_round_trip() {
        let doc = ModuleDocument::parse(Q8).unwrap();
        assert_eq!(doc.to_text(), Q8);
        let v = doc.to_module(1000).unwrap();
        assert_eq!((v.group().order(), v.dim()), (8, 2));
    }

    #[test]
    fn whitespace_is_not_significant() {
        let spaced = "{ \"p\": 5, \"dim\": 1, \"generators\": [ [[2]] ] }";
        let doc = ModuleDocument::parse(spaced).unwrap();
        assert_eq!(doc.to_text(), "{\"p\":5,\"dim\":1,\"generators\":[[[2]]]}\n");
    }

    #[test]
    fn distinct_errors() {
        let cases = [
            ("{\"p\":5,", "malformed"),
            ("{\"p\":6,\"dim\":1,\"generators\":[]}", "not_prime"),
            ("{\"p\":5,\"dim\":1,\"generators\":[[[7]]]}", "entry_out_of_range"),
            ("{\"p\":5,\"dim\":2,\"generators\":[[[1]]]}", "shape"),
            ("{\"p\":5,\"dim\":1,\"generators\":[],\"extra\":1}", "malformed"),
        ];
        for (text, code) in cases {
            assert_eq!(ModuleDocument::parse(text).unwrap_err().code(), code, "{text}");
        }
        let singular = ModuleDocument::parse("{\"p\":5,\"dim\":2,\"generators\":[[[1,2],[2,4]]]}").unwrap();
        let err = singular.to_module(10).unwrap_err();
        assert_eq!(err.to_string(), "generator 1 not invertible mod 5");
    }
}
