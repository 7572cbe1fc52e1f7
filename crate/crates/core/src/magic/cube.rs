use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LunarError, Result};
use crate::nat::LunarNat;

/// Which lines of a 3×3×3 cube must share the total.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize,
)]
#[serde(rename_all = "snake_case")]
pub enum LineSet {
    /// 27 axis-parallel lines and the 4 space diagonals.
    #[default]
    AxesAndSpaceDiagonals,
    /// Additionally the 12 diagonals of the 6 outer faces.
    AxesSpaceAndFaceDiagonals,
}

impl LineSet {
    pub fn name(self) -> &'static str {
        match self {
            LineSet::AxesAndSpaceDiagonals => "axes_and_space_diagonals",
            LineSet::AxesSpaceAndFaceDiagonals => "axes_space_and_face_diagonals",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "axes_and_space_diagonals" | "axes" => Some(LineSet::AxesAndSpaceDiagonals),
            "axes_space_and_face_diagonals" | "faces" => Some(LineSet::AxesSpaceAndFaceDiagonals),
            _ => None,
        }
    }

    /// Lines as flat indices `9 * layer + 3 * row + col`.
    pub fn lines(self) -> Vec<[usize; 3]> {
        let idx = |l: usize, r: usize, c: usize| 9 * l + 3 * r + c;
        let mut lines = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                lines.push([idx(i, j, 0), idx(i, j, 1), idx(i, j, 2)]);
                lines.push([idx(i, 0, j), idx(i, 1, j), idx(i, 2, j)]);
                lines.push([idx(0, i, j), idx(1, i, j), idx(2, i, j)]);
            }
        }
        lines.push([idx(0, 0, 0), idx(1, 1, 1), idx(2, 2, 2)]);
        lines.push([idx(0, 0, 2), idx(1, 1, 1), idx(2, 2, 0)]);
        lines.push([idx(0, 2, 0), idx(1, 1, 1), idx(2, 0, 2)]);
        lines.push([idx(0, 2, 2), idx(1, 1, 1), idx(2, 0, 0)]);
        if self == LineSet::AxesSpaceAndFaceDiagonals {
            for f in [0, 2] {
                // layer faces
                lines.push([idx(f, 0, 0), idx(f, 1, 1), idx(f, 2, 2)]);
                lines.push([idx(f, 0, 2), idx(f, 1, 1), idx(f, 2, 0)]);
                // row faces
                lines.push([idx(0, f, 0), idx(1, f, 1), idx(2, f, 2)]);
                lines.push([idx(0, f, 2), idx(1, f, 1), idx(2, f, 0)]);
                // column faces
                lines.push([idx(0, 0, f), idx(1, 1, f), idx(2, 2, f)]);
                lines.push([idx(0, 2, f), idx(1, 1, f), idx(2, 0, f)]);
            }
        }
        lines
    }
}

/// A 3×3×3 array of lunar numbers sharing one base, indexed
/// `[layer][row][col]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cube3 {
    base: u32,
    line_set: LineSet,
    cells: Vec<LunarNat>,
}

impl Cube3 {
    /// Cells in `9 * layer + 3 * row + col` order.
    pub fn from_flat(base: u32, line_set: LineSet, cells: Vec<LunarNat>) -> Result<Self> {
        LunarNat::zero(base)?;
        if cells.len() != 27 {
            return Err(LunarError::InvalidDocument(format!(
                "a cube has 27 cells, got {}",
                cells.len()
            )));
        }
        if let Some(c) = cells.iter().find(|c| c.base() != base) {
            return Err(LunarError::BaseMismatch(base, c.base()));
        }
        Ok(Self {
            base,
            line_set,
            cells,
        })
    }

    pub(crate) fn from_flat_unchecked(base: u32, line_set: LineSet, cells: Vec<LunarNat>) -> Self {
        Self {
            base,
            line_set,
            cells,
        }
    }

    pub fn filled(value: &LunarNat, line_set: LineSet) -> Self {
        Self::from_flat_unchecked(value.base(), line_set, vec![value.clone(); 27])
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn line_set(&self) -> LineSet {
        self.line_set
    }

    pub fn with_line_set(mut self, line_set: LineSet) -> Self {
        self.line_set = line_set;
        self
    }

    pub fn cell(&self, layer: usize, row: usize, col: usize) -> &LunarNat {
        &self.cells[9 * layer + 3 * row + col]
    }

    pub fn cells(&self) -> &[LunarNat] {
        &self.cells
    }

    pub fn set(&mut self, layer: usize, row: usize, col: usize, value: LunarNat) -> Result<()> {
        if value.base() != self.base {
            return Err(LunarError::BaseMismatch(self.base, value.base()));
        }
        self.cells[9 * layer + 3 * row + col] = value;
        Ok(())
    }

    /// The common total of every line in the cube's line set, if any.
    pub fn magic_total(&self) -> Option<LunarNat> {
        let mut total: Option<LunarNat> = None;
        for [x, y, z] in self.line_set.lines() {
            let sum = &(&self.cells[x] + &self.cells[y]) + &self.cells[z];
            match &total {
                None => total = Some(sum),
                Some(t) if *t != sum => return None,
                Some(_) => {}
            }
        }
        total
    }

    pub fn has_distinct_entries(&self) -> bool {
        let mut sorted = self.cells.clone();
        sorted.sort();
        sorted.windows(2).all(|w| w[0] != w[1])
    }
}

impl fmt::Debug for Cube3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(LunarNat::to_string).collect();
        write!(
            f,
            "Cube3(base {}, {}, {:?})",
            self.base,
            self.line_set.name(),
            cells
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magic::Grid3;

    #[test]
    fn line_counts() {
        assert_eq!(LineSet::AxesAndSpaceDiagonals.lines().len(), 31);
        assert_eq!(LineSet::AxesSpaceAndFaceDiagonals.lines().len(), 43);
        for set in [
            LineSet::AxesAndSpaceDiagonals,
            LineSet::AxesSpaceAndFaceDiagonals,
        ] {
            let mut lines: Vec<_> = set
                .lines()
                .into_iter()
                .map(|mut l| {
                    l.sort();
                    l
                })
                .collect();
            let before = lines.len();
            lines.sort();
            lines.dedup();
            assert_eq!(lines.len(), before, "duplicate line in {set:?}");
        }
    }

    #[test]
    fn constant_cube_is_magic() {
        let v = LunarNat::parse("1011", 2).unwrap();
        let cube = Cube3::filled(&v, LineSet::AxesSpaceAndFaceDiagonals);
        assert_eq!(cube.magic_total(), Some(v));
        assert!(!cube.has_distinct_entries());
    }

    #[test]
    fn perturbed_cube_is_not_magic() {
        let v = LunarNat::parse("7", 10).unwrap();
        let mut cube = Cube3::filled(&v, LineSet::AxesAndSpaceDiagonals);
        cube.set(1, 0, 2, LunarNat::parse("8", 10).unwrap())
            .unwrap();
        assert_eq!(cube.magic_total(), None);
    }

    #[test]
    fn stacked_binary_square_of_squares() {
        // Three stacked copies of the binary square of squares. Layer lines
        // all reach 1011111.
        let sq = Grid3::parse(
            2,
            [
                ["111", "10101", "1001001"],
                ["11100", "1011111", "1"],
                ["1010100", "0", "11111"],
            ],
        )
        .unwrap();
        let cells: Vec<LunarNat> = (0..3).flat_map(|_| sq.cells().iter().cloned()).collect();
        let cube = Cube3::from_flat(2, LineSet::AxesAndSpaceDiagonals, cells).unwrap();
        // Pillars repeat one cell, so they sum to that cell instead.
        assert_eq!(cube.magic_total(), None);
    }
}
