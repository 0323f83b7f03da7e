//! Ribbon graphs, partial duals, and partial-dual genus polynomials.
//!
//! * [`map`]: signed rotation systems, the flag model, partial duality and edits.
//! * [`poly`]: exact integer polynomials and rationals.
//! * [`enumerate`]: brute-force genus polynomials over all edge subsets and
//!   spanning-tree statistics.
//! * [`theorems`]: recurrences for planar ribbon graphs and audits against brute force.
//! * [`families`]: named graph families with closed forms.
//! * [`stats`]: genus distributions, moments and distance to normality.

mod dsu;
pub mod enumerate;
pub mod families;
pub mod map;
pub mod poly;
pub mod random;
pub mod stats;
pub mod theorems;

pub use map::{Corner, EdgeEnd, EdgeSubset, GemMap, MapError, RibbonGraph, SurfaceStats};
pub use poly::{IntPolynomial, Rational};
