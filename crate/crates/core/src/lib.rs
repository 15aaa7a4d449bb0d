//! Graded invariants of colored positive rational tangles.
//!
//! The twist engine computes Poincaré polynomials of colored HOMFLY complexes
//! of rational tangles from their continued fractions. Closure evaluation
//! turns them into colored and color-stable HOMFLY polynomials of 2-bridge
//! links, the geometric model recomputes the same gradings from intersection
//! data of an arc in a pillowcase, and the Alexander module checks the
//! specialization of the color-stable polynomial to the multivariable
//! Alexander polynomial.

pub mod alexander;
pub mod closure;
pub mod error;
pub mod geom;
pub mod qsymbols;
pub mod tangle;
pub mod twist;

pub use error::{Error, Result};
