//! JSON interchange format for point sets, plus a headerless CSV export.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "p": 1.5,
//!   "dim": 3,
//!   "claimed_scale": 1.5874010519681994,
//!   "points": [[...], ...],
//!   "provenance": {"construction": "theorem2", "d": 3}
//! }
//! ```
//!
//! Floats are written as shortest round-trip decimals, so parsing a written
//! document reproduces every coordinate bit for bit.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::{Error, LpSpace, Point, PointSet, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSetDocument {
    pub format_version: u32,
    pub p: f64,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claimed_scale: Option<f64>,
    pub points: Vec<Vec<f64>>,
    #[serde(default)]
    pub provenance: Value,
}

impl PointSetDocument {
    pub fn from_set(set: &PointSet, provenance: Value) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            p: set.p(),
            dim: set.dim(),
            claimed_scale: set.claimed_scale(),
            points: set.points().iter().map(|x| x.to_vec()).collect(),
            provenance,
        }
    }

    /// Checks the layout and builds the point set under the stored exponent.
    pub fn to_set(&self) -> Result<PointSet> {
        self.to_set_with_exponent(self.p)
    }

    /// Builds the point set under exponent `p`, which may differ from the stored one.
    pub fn to_set_with_exponent(&self, p: f64) -> Result<PointSet> {
        if self.format_version != FORMAT_VERSION {
            return Err(Error::Parse(format!(
                "unsupported format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            )));
        }
        for (i, row) in self.points.iter().enumerate() {
            if row.len() != self.dim {
                return Err(Error::Parse(format!(
                    "point {i} has {} coordinates, expected dim = {}",
                    row.len(),
                    self.dim
                )));
            }
        }
        let space = LpSpace::new(p, self.dim)?;
        let points = self.points.iter().cloned().map(Point::new).collect();
        PointSet::new(space, points, self.claimed_scale)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: Self = serde_json::from_str(text)?;
        doc.to_set()?;
        Ok(doc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization is infallible")
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&fs::read_to_string(path)?)
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = self.to_json();
        text.push('\n');
        fs::write(path, text)?;
        Ok(())
    }

    /// One point per line, comma separated, no header.
    pub fn to_csv(&self) -> String {
        self.points
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| serde_json::to_string(v).expect("finite float"))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .map(|line| line + "\n")
            .collect()
    }
}
