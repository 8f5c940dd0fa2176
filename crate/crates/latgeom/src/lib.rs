//! Exact planar geometry of numbers.
//!
//! Everything here is computed over exact scalars: arbitrary-precision
//! rationals and quadratic irrationals a + b√d. No decision in the library
//! is ever made with floating point; floats appear only in output paths.
//!
//! The main entry points:
//! - [`geom`]: convex polygon kernel (hull, area, polar, difference body,
//!   lattice point enumeration, unimodular maps),
//! - [`latwidth`]: certified lattice width with a brute-force oracle,
//! - [`classify`]: lattice-freeness, maximality, and the triangle /
//!   quadrilateral / split taxonomy of maximal lattice-free sets,
//! - [`triangles`]: barycentric machinery for circumscribed triangles and
//!   closed-form width/area of type-3 triangles,
//! - [`covering`]: covering minima mu_1 (exact) and mu_2 (certified
//!   interval), tiling tests and the tiling-parallelogram normal form,
//! - [`bounds`]: the area-vs-width inequality evaluators, extremal body
//!   constructors, equality certification and the fuzz harness.

pub mod bounds;
pub mod classify;
pub mod covering;
mod error;
pub mod exactnum;
pub mod geom;
pub mod json;
pub mod latwidth;
#[cfg(test)]
pub(crate) mod testutil;
pub mod triangles;

pub use error::{Error, Result};
pub use exactnum::{QuadNumber, Rational, Scalar};
pub use geom::{Direction, Point, Polygon, Split};
