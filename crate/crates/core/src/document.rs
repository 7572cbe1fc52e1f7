//! JSON documents for grids and cubes.
//!
//! ```json
//! {"base": 10, "rows": [["12", "0", "20"], ["1", "22", "10"], ["21", "20", "2"]]}
//! ```
//!
//! A cube document has `base`, `line_set` and `layers` (3 row sets).
//! Cells are always digit strings so any base round-trips unambiguously.

use serde::{Deserialize, Serialize};

use crate::error::{LunarError, Result};
use crate::magic::{Cube3, Grid3, LineSet};
use crate::nat::LunarNat;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridDocument {
    pub base: u32,
    pub rows: [[String; 3]; 3],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CubeDocument {
    pub base: u32,
    #[serde(default)]
    pub line_set: LineSet,
    pub layers: [[[String; 3]; 3]; 3],
}

/// Either document kind, told apart by the presence of `layers`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum Document {
    Cube(CubeDocument),
    Grid(GridDocument),
}

fn invalid(e: impl std::fmt::Display) -> LunarError {
    LunarError::InvalidDocument(e.to_string())
}

impl Document {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(invalid)
    }
}

impl GridDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(invalid)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("grid documents serialize")
    }

    pub fn to_grid(&self) -> Result<Grid3> {
        let rows = self
            .rows
            .each_ref()
            .map(|r| r.each_ref().map(String::as_str));
        Grid3::parse(self.base, rows)
    }
}

impl From<&Grid3> for GridDocument {
    fn from(g: &Grid3) -> Self {
        Self {
            base: g.base(),
            rows: std::array::from_fn(|r| std::array::from_fn(|c| g.cell(r, c).to_string())),
        }
    }
}

impl Serialize for Grid3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GridDocument::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Grid3 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        GridDocument::deserialize(d)?
            .to_grid()
            .map_err(serde::de::Error::custom)
    }
}

impl CubeDocument {
    pub fn to_cube(&self) -> Result<Cube3> {
        let mut cells = Vec::with_capacity(27);
        for layer in &self.layers {
            for row in layer {
                for text in row {
                    cells.push(LunarNat::parse(text, self.base)?);
                }
            }
        }
        Cube3::from_flat(self.base, self.line_set, cells)
    }
}

impl From<&Cube3> for CubeDocument {
    fn from(c: &Cube3) -> Self {
        Self {
            base: c.base(),
            line_set: c.line_set(),
            layers: std::array::from_fn(|l| {
                std::array::from_fn(|r| std::array::from_fn(|k| c.cell(l, r, k).to_string()))
            }),
        }
    }
}

impl Serialize for Cube3 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CubeDocument::from(self).serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_round_trip() {
        let text = r#"{"base":10,"rows":[["12","0","20"],["1","22","10"],["21","20","2"]]}"#;
        let doc = GridDocument::from_json(text).unwrap();
        let grid = doc.to_grid().unwrap();
        assert_eq!(grid.magic_total().unwrap().to_string(), "22");
        assert_eq!(GridDocument::from(&grid).to_json(), text);
    }

    #[test]
    fn leading_zeros_normalize() {
        let text = r#"{"base":2,"rows":[["0001","0","0"],["0","0","0"],["0","0","0"]]}"#;
        let grid = GridDocument::from_json(text).unwrap().to_grid().unwrap();
        assert_eq!(GridDocument::from(&grid).rows[0][0], "1");
    }

    #[test]
    fn malformed_documents() {
        assert!(GridDocument::from_json(r#"{"base":10,"rows":[["1","2"]]}"#).is_err());
        let bad_digit = r#"{"base":2,"rows":[["2","0","0"],["0","0","0"],["0","0","0"]]}"#;
        assert!(GridDocument::from_json(bad_digit)
            .unwrap()
            .to_grid()
            .is_err());
        assert!(Document::from_json("not json").is_err());
    }

    #[test]
    fn document_kinds() {
        let grid = r#"{"base":10,"rows":[["1","1","1"],["1","1","1"],["1","1","1"]]}"#;
        assert!(matches!(
            Document::from_json(grid).unwrap(),
            Document::Grid(_)
        ));
        let layer = r#"[["1","1","1"],["1","1","1"],["1","1","1"]]"#;
        let cube = format!(
            r#"{{"base":10,"line_set":"axes_space_and_face_diagonals","layers":[{layer},{layer},{layer}]}}"#
        );
        let Document::Cube(doc) = Document::from_json(&cube).unwrap() else {
            panic!("expected a cube document");
        };
        let cube = doc.to_cube().unwrap();
        assert_eq!(cube.line_set(), LineSet::AxesSpaceAndFaceDiagonals);
        assert_eq!(cube.magic_total().unwrap().to_string(), "1");
        assert_eq!(CubeDocument::from(&cube), doc);
    }
}
