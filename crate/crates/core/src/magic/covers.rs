//! Minimal sets of cells meeting all 8 lines of the grid.
//!
//! In a single-digit magic square with total `t`, the cells equal to `t`
//! must meet every line. The minimal such cell sets are the minimal hitting
//! sets of the 8-line hypergraph on 9 cells.

use std::fmt;

use serde::Serialize;

use super::{symmetries, LINES};

/// A set of grid cells as a 9-bit row-major mask (bit `k` = cell `k`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellMask(u16);

impl CellMask {
    pub fn new(bits: u16) -> Self {
        Self(bits & 0x1ff)
    }

    pub fn from_rows(rows: [[u8; 3]; 3]) -> Self {
        let mut bits = 0;
        for (k, v) in rows.iter().flatten().enumerate() {
            if *v != 0 {
                bits |= 1 << k;
            }
        }
        Self(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, cell: usize) -> bool {
        self.0 & (1 << cell) != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn rows(self) -> [[u8; 3]; 3] {
        std::array::from_fn(|r| std::array::from_fn(|c| self.contains(r * 3 + c) as u8))
    }

    /// Meets every line.
    pub fn is_cover(self) -> bool {
        LINES
            .iter()
            .all(|line| line.iter().any(|&k| self.contains(k)))
    }

    /// A cover from which no cell can be removed.
    pub fn is_minimal_cover(self) -> bool {
        self.is_cover()
            && (0..9)
                .filter(|&k| self.contains(k))
                .all(|k| !Self(self.0 & !(1 << k)).is_cover())
    }

    fn image(self, map: &[usize; 9]) -> Self {
        let mut bits = 0;
        for (k, &src) in map.iter().enumerate() {
            if self.contains(src) {
                bits |= 1 << k;
            }
        }
        Self(bits)
    }

    /// Distinct images under the 8 symmetries, sorted.
    pub fn orbit(self) -> Vec<Self> {
        let mut out: Vec<Self> = symmetries().iter().map(|m| self.image(m)).collect();
        out.sort_by_key(|m| m.sort_key());
        out.dedup();
        out
    }

    fn sort_key(self) -> (u32, u16) {
        (self.len(), self.0)
    }
}

impl fmt::Debug for CellMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CellMask({:?})", self.rows())
    }
}

impl fmt::Display for CellMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            writeln!(f, "{} {} {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalCovers {
    /// Every minimal cover, sorted by size then bits.
    pub masks: Vec<CellMask>,
    /// The covers grouped into symmetry orbits, sorted by first member.
    pub orbits: Vec<Vec<CellMask>>,
}

/// Scans all 512 cell masks for minimal covers and groups them into orbits
/// under rotations and reflections. The result does not depend on the base.
pub fn minimal_covers() -> MinimalCovers {
    let mut masks: Vec<CellMask> = (0u16..512)
        .map(CellMask)
        .filter(|m| m.is_minimal_cover())
        .collect();
    masks.sort_by_key(|m| m.sort_key());

    let mut orbits: Vec<Vec<CellMask>> = Vec::new();
    for &m in &masks {
        if orbits.iter().any(|o| o.contains(&m)) {
            continue;
        }
        orbits.push(m.orbit());
    }
    orbits.sort_by_key(|o| o[0].sort_key());
    MinimalCovers { masks, orbits }
}
