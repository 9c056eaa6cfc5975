//! (n,m)-lattice paths and their Chung-Feller structure.
//!
//! An (n,m)-lattice path is a sequence of `n + 1` integer steps
//! `(x_i, y_i)` with `x_i >= 1`, `sum x_i = m`, `1 - n <= y_i <= 1` and
//! `sum y_i = 1`; it runs from the origin to `(m, 1)`. Two statistics
//! organize these paths into classes of equal size: the non-positive
//! length `NPL` (total horizontal length spent at non-positive prefix
//! height) and the rightmost minimum length `RML` (horizontal coordinate
//! of the rightmost lowest point).
//!
//! The crate provides:
//!
//! - the path and pointed-path types with validation, text shorthand, and
//!   JSON serialization ([`LatticePath`], [`PointedLatticePath`]);
//! - the four statistics and the linear orders behind them;
//! - the level-shifting bijections and their inverses ([`bijections`]);
//! - the class bijections `theta` and `gamma` that realize each pointed
//!   statistic value exactly once per cyclic class ([`pointed`]);
//! - exhaustive lexicographic generators, exact closed-form counts,
//!   histograms, step-set restricted enumeration, and seeded uniform
//!   sampling ([`enumeration`]).
//!
//! Everything is exact: coordinates are machine integers validated against
//! overflow, counts are arbitrary-width integers.
//!
//! ```
//! use chung_feller::{pointed, LatticePath};
//!
//! let path: LatticePath = "(1,1)(1,-2)(1,1)(2,1)".parse()?;
//! assert_eq!(path.npl(), 2);
//! // The class of a path realizes every pointed value exactly once.
//! let values: Vec<i64> = (1..=path.m())
//!     .map(|r| pointed::theta(&path, r).unwrap().pnpl())
//!     .collect();
//! assert_eq!(values, vec![0, 1, 2, 3, 4]);
//! # Ok::<(), chung_feller::PathParseError>(())
//! ```

#![forbid(unsafe_code)]

pub mod bijections;
pub mod enumeration;
mod path;
pub mod pointed;
mod stats;

pub use num_bigint::BigUint;
pub use path::{LatticePath, PathError, PathParseError, PathPoint, Step};
pub use pointed::{ClassMember, PointedLatticePath};
