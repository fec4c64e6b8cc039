//! Exact classification of six and seven points in the real projective
//! plane through pencils of nodal cubics.

// index loops read more clearly over matrices of points
#![allow(clippy::needless_range_loop)]

pub mod adjacency;
pub mod admissible;
pub mod arith;
pub mod catalog;
pub mod census;
pub mod classify;
pub mod crossing;
pub mod cubic;
pub mod cyclic;
pub mod error;
pub mod golden;
pub mod linalg;
pub mod pencil;
pub mod pointfile;
pub mod projective;
pub mod tables;
pub mod walls;

pub use error::{Error, Result};
