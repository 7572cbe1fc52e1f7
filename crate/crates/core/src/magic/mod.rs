//! Lunar magic squares.
//!
//! A 3×3 grid is magic when its 3 rows, 3 columns and 2 diagonals all
//! lunar-sum to the same total. Lunar addition has no carries, so a grid is
//! magic exactly when every digit plane is magic, and every cell of a magic
//! grid is dominated by the total.

mod construct;
mod covers;
mod cube;

pub use construct::{construct, ConstructParams};
pub use covers::{minimal_covers, CellMask, MinimalCovers};
pub use cube::{Cube3, LineSet};

use std::fmt;

use crate::error::{LunarError, Result};
use crate::nat::LunarNat;

/// The 8 lines of a 3×3 grid as row-major cell indices.
pub const LINES: [[usize; 3]; 8] = [
    [0, 1, 2],
    [3, 4, 5],
    [6, 7, 8],
    [0, 3, 6],
    [1, 4, 7],
    [2, 5, 8],
    [0, 4, 8],
    [2, 4, 6],
];

pub const LINE_NAMES: [&str; 8] = [
    "row 1",
    "row 2",
    "row 3",
    "column 1",
    "column 2",
    "column 3",
    "diagonal",
    "anti-diagonal",
];

/// The 8 symmetries of the square (rotations and reflections) as maps
/// `image[k] = source cell of cell k`, identity first.
pub fn symmetries() -> [[usize; 9]; 8] {
    let rotate = |m: [usize; 9]| {
        // new[r][c] = old[2 - c][r]
        std::array::from_fn(|k| {
            let (r, c) = (k / 3, k % 3);
            m[(2 - c) * 3 + r]
        })
    };
    let reflect = |m: [usize; 9]| std::array::from_fn(|k| m[(k / 3) * 3 + 2 - k % 3]);
    let mut out = [[0; 9]; 8];
    let mut m: [usize; 9] = std::array::from_fn(|k| k);
    for i in 0..4 {
        out[i] = m;
        out[i + 4] = reflect(m);
        m = rotate(m);
    }
    out
}

/// A 3×3 grid of lunar numbers sharing one base.
///
/// Ordered by base, then cells in row-major order under length-lex.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Grid3 {
    base: u32,
    cells: [LunarNat; 9],
}

impl Grid3 {
    pub fn new(base: u32, cells: [[LunarNat; 3]; 3]) -> Result<Self> {
        let [r0, r1, r2] = cells;
        let [a, b, c] = r0;
        let [d, e, f] = r1;
        let [g, h, i] = r2;
        Self::from_flat(base, [a, b, c, d, e, f, g, h, i])
    }

    /// Cells in row-major order.
    pub fn from_flat(base: u32, cells: [LunarNat; 9]) -> Result<Self> {
        LunarNat::zero(base)?;
        if let Some(c) = cells.iter().find(|c| c.base() != base) {
            return Err(LunarError::BaseMismatch(base, c.base()));
        }
        Ok(Self { base, cells })
    }

    /// Parses nine digit strings given as rows.
    pub fn parse(base: u32, rows: [[&str; 3]; 3]) -> Result<Self> {
        let mut cells = Vec::with_capacity(9);
        for row in rows {
            for text in row {
                cells.push(LunarNat::parse(text, base)?);
            }
        }
        Ok(Self {
            base,
            cells: cells.try_into().expect("nine cells"),
        })
    }

    pub fn zero(base: u32) -> Result<Self> {
        let z = LunarNat::zero(base)?;
        Ok(Self {
            base,
            cells: std::array::from_fn(|_| z.clone()),
        })
    }

    pub(crate) fn from_flat_unchecked(base: u32, cells: [LunarNat; 9]) -> Self {
        Self { base, cells }
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn cell(&self, row: usize, col: usize) -> &LunarNat {
        &self.cells[row * 3 + col]
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[LunarNat; 9] {
        &self.cells
    }

    pub fn rows(&self) -> [[&LunarNat; 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.cell(r, c)))
    }

    fn map(&self, f: impl Fn(&LunarNat) -> LunarNat) -> Self {
        Self {
            base: self.base,
            cells: std::array::from_fn(|k| f(&self.cells[k])),
        }
    }

    /// Lunar sums of the 8 lines, in [`LINES`] order.
    pub fn line_sums(&self) -> [LunarNat; 8] {
        std::array::from_fn(|l| {
            let [x, y, z] = LINES[l];
            &(&self.cells[x] + &self.cells[y]) + &self.cells[z]
        })
    }

    /// The common line sum, if all 8 lines agree.
    pub fn magic_total(&self) -> Option<LunarNat> {
        let [first, rest @ ..] = self.line_sums();
        rest.iter().all(|s| *s == first).then_some(first)
    }

    /// First line whose sum differs from row 1's: `(line index, its sum,
    /// row 1's sum)`.
    pub fn first_mismatch(&self) -> Option<(usize, LunarNat, LunarNat)> {
        let sums = self.line_sums();
        (1..8)
            .find(|&l| sums[l] != sums[0])
            .map(|l| (l, sums[l].clone(), sums[0].clone()))
    }

    pub fn has_distinct_entries(&self) -> bool {
        (0..9).all(|i| (i + 1..9).all(|j| self.cells[i] != self.cells[j]))
    }

    /// Indices of cells that dominate every other cell. In a magic grid such
    /// a cell must equal the total.
    pub fn dominating_cells(&self) -> Vec<usize> {
        (0..9)
            .filter(|&i| {
                self.cells
                    .iter()
                    .all(|c| self.cells[i].dominates_unchecked(c))
            })
            .collect()
    }

    /// Longest cell length in digits.
    pub fn width(&self) -> usize {
        self.cells.iter().map(LunarNat::len).max().unwrap_or(0)
    }

    /// The single-digit grid of digit `i` of every cell, counting from 0 at
    /// the right (so `i = 1` is the "2nd digit"). Missing digits read as 0.
    pub fn digit_plane(&self, i: usize) -> Self {
        self.map(|c| LunarNat::from_raw(self.base, vec![c.digit(i)]))
    }

    /// Positional decomposition: plane `i` shifted left by `i` digits, one
    /// grid per digit position up to [`Grid3::width`]. Folding the planes
    /// with [`Grid3::elementwise_add`] gives back `self`. The zero grid
    /// decomposes to itself.
    pub fn decompose(&self) -> Vec<Self> {
        self.planes(true)
    }

    /// Like [`Grid3::decompose`] but with bare single-digit planes.
    pub fn decompose_unshifted(&self) -> Vec<Self> {
        self.planes(false)
    }

    fn planes(&self, shifted: bool) -> Vec<Self> {
        let width = self.width().max(1);
        (0..width)
            .map(|i| {
                let plane = self.digit_plane(i);
                if shifted {
                    plane.map(|c| c.shift(i))
                } else {
                    plane
                }
            })
            .collect()
    }

    pub fn elementwise_add(&self, other: &Self) -> Result<Self> {
        if self.base != other.base {
            return Err(LunarError::BaseMismatch(self.base, other.base));
        }
        Ok(Self {
            base: self.base,
            cells: std::array::from_fn(|k| &self.cells[k] + &other.cells[k]),
        })
    }

    /// Raises every cell to the `n`-th power.
    pub fn power_family(&self, n: u32) -> Self {
        self.map(|c| c.pow(n))
    }

    /// The 8 images under rotations and reflections, identity first.
    pub fn symmetric_images(&self) -> [Self; 8] {
        symmetries().map(|m| Self {
            base: self.base,
            cells: std::array::from_fn(|k| self.cells[m[k]].clone()),
        })
    }

    /// Least image under the symmetry group.
    pub fn canonical(&self) -> Self {
        self.symmetric_images()
            .into_iter()
            .min()
            .expect("eight images")
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonical()
    }
}

impl fmt::Display for Grid3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.cells.iter().map(LunarNat::to_string).collect();
        let w = strs.iter().map(String::len).max().unwrap_or(1);
        for r in 0..3 {
            writeln!(
                f,
                "{:>w$} | {:>w$} | {:>w$}",
                strs[r * 3],
                strs[r * 3 + 1],
                strs[r * 3 + 2]
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for Grid3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..3)
            .map(|r| (0..3).map(|c| self.cell(r, c).to_string()).collect())
            .collect();
        write!(f, "Grid3(base {}, {:?})", self.base, rows)
    }
}
