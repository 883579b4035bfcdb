//! Exact-arithmetic Heronian friezes and Plücker relations.
//!
//! A labeled plane polygon induces a *polygonal Heronian frieze*: the array of
//! all squared distances x_ij and quadruple signed areas S_ijk of its vertices,
//! in which every diamond satisfies the seven Heronian diamond equations. The
//! S-entries are (twice) the maximal minors of a 3×n coordinate matrix, so
//! Plücker relations of Gr(3,n) become quadratic identities among them. This
//! crate builds friezes from polygons, verifies the diamond equations exactly,
//! enumerates the Plücker relations composed solely of Heronian minors
//! (cross-checked against a brute-force oracle), and checks the
//! vanishing-determinant property of frieze diamonds and S-subfriezes.
//!
//! Everything is computed over arbitrary-precision rationals; identities are
//! decided by exact equality to zero, never by tolerance.

pub mod geometry;
pub mod grassmannian;
pub mod grids;
pub mod heronian;
pub mod io;
pub mod relations;

pub use geometry::{Point, Polygon, Rational};

use thiserror::Error;

/// Errors shared across the crate's construction and query surfaces.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("a polygon needs at least 3 vertices, got {0}")]
    PolygonTooSmall(usize),
    #[error("invalid rational literal {literal:?}: {reason}")]
    InvalidRational { literal: String, reason: String },
    #[error("diamond label ({0}, {1}, {2}, {3}) is not of the form (b, b+1, c, c+1) mod n")]
    BadDiamondLabel(usize, usize, usize, usize),
    #[error("frieze entry key {0:?} is not of the form (a, a+1, b) or (a, b, b+1) mod n")]
    BadEntryForm((usize, usize, usize)),
    #[error("frieze data incomplete: missing entry {0}")]
    MissingEntry(String),
    #[error("column tuple has length {got}, expected {expected}")]
    BadTupleLength { got: usize, expected: usize },
    #[error("need 2 <= k <= n, got k={k}, n={n}")]
    BadGrassmannian { k: usize, n: usize },
    #[error("matrix has {rows} rows but the relation expects {expected}")]
    DimensionMismatch { rows: usize, expected: usize },
    #[error("diamond of size {size} at anchor ({r}, {m}) does not fit the frieze grid")]
    WindowViolation { r: usize, m: usize, size: usize },
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("{0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Reduce `x` modulo `n` onto the representatives {1, ..., n}.
///
/// All index arithmetic in the frieze patterns is cyclic with 1-based
/// representatives; 0 is never a valid index.
pub fn rep(x: i64, n: usize) -> usize {
    let n = n as i64;
    let r = x.rem_euclid(n);
    (if r == 0 { n } else { r }) as usize
}
