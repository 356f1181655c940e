use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::Coloring;

/// On-disk form: `{"n": <int>, "colors": [<int>, ...]}` with one 1-based
/// color id per integer of `[1, n]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: u64,
    pub colors: Vec<u64>,
}

impl From<&Coloring> for ColoringDocument {
    fn from(c: &Coloring) -> Self {
        ColoringDocument {
            n: u64::from(c.n()),
            colors: c.colors().iter().map(|&x| u64::from(x)).collect(),
        }
    }
}

impl TryFrom<ColoringDocument> for Coloring {
    type Error = Error;

    fn try_from(doc: ColoringDocument) -> Result<Self> {
        if doc.colors.len() as u64 != doc.n {
            return Err(Error::Parse(format!(
                "\"n\" is {} but \"colors\" has {} entries",
                doc.n,
                doc.colors.len()
            )));
        }
        check_labels(&doc.colors)?;
        Coloring::canonicalize(&doc.colors)
    }
}

fn check_labels(labels: &[u64]) -> Result<()> {
    if let Some(i) = labels.iter().position(|&l| l == 0) {
        return Err(Error::Parse(format!("color at position {} is 0; labels must be positive", i + 1)));
    }
    Ok(())
}

impl Coloring {
    /// Canonical JSON document, single line.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringDocument::from(self)).expect("plain struct serializes")
    }
}

/// Read a coloring from either the JSON document or a single row of
/// whitespace-separated positive labels. Labels are canonicalized.
pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    if trimmed.starts_with('{') {
        let doc: ColoringDocument =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.n == 0 {
            return Err(Error::EmptyInput);
        }
        return doc.try_into();
    }
    if trimmed.lines().count() > 1 {
        return Err(Error::Parse("plain-text coloring must be a single row".into()));
    }
    let labels = trimmed
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("bad color label {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    check_labels(&labels)?;
    Coloring::canonicalize(&labels)
}
