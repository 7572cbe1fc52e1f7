//! Lunar (dismal) arithmetic: digits add by max and multiply by min, with no
//! carries. On top of it, 3×3 magic squares and cubes, lunar number theory
//! and budgeted exhaustive search.
//!
//! ```
//! use lunar_core::LunarNat;
//!
//! let a = LunarNat::parse("15", 10).unwrap();
//! let b = LunarNat::parse("83", 10).unwrap();
//! assert_eq!((&a + &b).to_string(), "85");
//! assert_eq!((&a * &b).to_string(), "153");
//! ```

pub mod document;
pub mod error;
pub mod magic;
pub mod nat;
pub mod numtheory;
pub mod search;

pub use document::{CubeDocument, Document, GridDocument};
pub use error::{LunarError, Result};
pub use magic::{Cube3, Grid3, LineSet};
pub use nat::LunarNat;
pub use search::{EntryConstraint, Pruning, SearchReport, SearchSpec, StopReason};
