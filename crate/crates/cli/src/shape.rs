//! JSON shape documents.
//!
//! ```json
//! {"dim": 2, "vertices": [[0, 3], [4, 0], [0, 0]], "labels": {"A": 0, "B": 1, "C": 2}}
//! ```
//!
//! `labels` (triangles only) maps the vertex names `A`, `B`, `C` to vertex
//! indices; `hyp_index` names the hypotenuse facet of a right simplex (the
//! facet opposite the right-angle vertex).

use serde::{Deserialize, Serialize};
use shapecalc::{RightSimplexSpec, Simplex, Triangle, Vector};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Labels {
    #[serde(rename = "A")]
    pub a: usize,
    #[serde(rename = "B")]
    pub b: usize,
    #[serde(rename = "C")]
    pub c: usize,
}

impl Default for Labels {
    fn default() -> Self {
        Self { a: 0, b: 1, c: 2 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeDocument {
    pub dim: usize,
    pub vertices: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Labels>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyp_index: Option<usize>,
}

/// Parses and validates a shape document, including the degeneracy check
/// on the simplex it describes.
pub fn parse_shape(text: &str) -> Result<ShapeDocument, CliError> {
    let doc: ShapeDocument = serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            CliError::Validation(e.to_string())
        } else {
            CliError::Parse(e.to_string())
        }
    })?;
    doc.validate()?;
    Ok(doc)
}

impl ShapeDocument {
    pub fn from_simplex(s: &Simplex) -> Self {
        Self {
            dim: s.dim(),
            vertices: s.vertices().iter().map(|v| v.coords().to_vec()).collect(),
            labels: None,
            hyp_index: None,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.vertices.len() != self.dim + 1 {
            return Err(CliError::Validation(format!(
                "dim {} needs {} vertices, found {}",
                self.dim,
                self.dim + 1,
                self.vertices.len()
            )));
        }
        if let Some((i, v)) = self
            .vertices
            .iter()
            .enumerate()
            .find(|(_, v)| v.len() != self.dim)
        {
            return Err(CliError::Validation(format!(
                "vertex {i} has {} coordinates, expected {}",
                v.len(),
                self.dim
            )));
        }
        if let Some(l) = self.labels {
            if self.dim != 2 {
                return Err(CliError::Validation(
                    "labels are only meaningful for triangles (dim 2)".into(),
                ));
            }
            let mut seen = [l.a, l.b, l.c];
            seen.sort_unstable();
            if seen != [0, 1, 2] {
                return Err(CliError::Validation(format!(
                    "labels must be a permutation of 0, 1, 2, got A={} B={} C={}",
                    l.a, l.b, l.c
                )));
            }
        }
        if let Some(h) = self.hyp_index {
            if h > self.dim {
                return Err(CliError::Validation(format!(
                    "hyp_index {h} out of range 0..={}",
                    self.dim
                )));
            }
        }
        self.simplex()?;
        Ok(())
    }

    pub fn simplex(&self) -> Result<Simplex, CliError> {
        let vertices = self
            .vertices
            .iter()
            .map(|c| Vector::new(c.clone()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Simplex::new(vertices)?)
    }

    pub fn triangle(&self) -> Result<Triangle, CliError> {
        if self.dim != 2 {
            return Err(CliError::Validation(format!(
                "a triangle is needed, got dim {}",
                self.dim
            )));
        }
        let l = self.labels.unwrap_or_default();
        Ok(Triangle::from_simplex(&self.simplex()?, [l.a, l.b, l.c])?)
    }

    pub fn hyp_index(&self) -> usize {
        self.hyp_index.unwrap_or(0)
    }

    /// The right simplex whose right angle sits opposite `hyp_index`.
    pub fn right_simplex(&self) -> Result<RightSimplexSpec, CliError> {
        RightSimplexSpec::from_simplex(&self.simplex()?, self.hyp_index()).map_err(CliError::from)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("shape documents always serialize")
    }
}
